"""Exception types shared across the package."""


class WeaklabError(Exception):
    """Base class for all weaklab-specific failures."""


class OrthogonalSelection(WeaklabError):
    """Pre- and postselected states are (numerically) orthogonal; the weak
    value diverges and postselected quantities are undefined."""


class InvalidObservable(WeaklabError):
    """Observable does not square to the identity (or is not Hermitian)."""


class TruncationInsufficient(WeaklabError):
    """The number-basis truncation cannot represent the requested state or
    operator to the certified accuracy."""


class DerivativeMismatch(WeaklabError):
    """Analytic and finite-difference state derivatives disagree beyond
    tolerance in the Fisher-information computation."""


class DegenerateNoise(WeaklabError):
    """Final-state position variance is too small to form a meaningful SNR."""


class ZeroSignal(WeaklabError):
    """Mean pointer shift vanishes identically (sin(theta)*cos(phi) = 0), so
    the non-postselected SNR carries no signal.

    Raised only where a zero denominator would propagate; plain SNR queries
    return 0 instead.
    """


class ChiUndefined(WeaklabError):
    """SNR ratio has a vanishing denominator."""


class BoundUndefined(WeaklabError):
    """Cramer-Rao bound requested for non-positive Fisher information."""


class ConfigInvalid(WeaklabError):
    """A run configuration (CLI flags, config file, or sweep job) is
    ill-formed; the message names the offending field."""
