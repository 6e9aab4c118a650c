"""Two-level measured system: pre/postselection, weak value, postselection
probability.

The measured observable is the spin-x component sigma_x (any observable with
A^2 = I behaves identically).  The preselected state is

    |psi_i> = cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>,

the postselected state is |psi_f> = |up>, which gives the weak value

    <A>_w = e^{i phi} tan(theta/2)

and postselection probability P_s = cos^2(theta/2).  A general-state weak
value is provided for cross-checking and for selections beyond this
one-parameter family.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidObservable, OrthogonalSelection

#: Overlaps below this are treated as orthogonal; the weak value scales as
#: 1/overlap and is numerically meaningless under double precision past it.
OVERLAP_TOLERANCE = 1e-12

#: Entrywise tolerance for the A^2 = I check in weak_value_general.
OBSERVABLE_TOLERANCE = 1e-12

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class SelectionPair:
    """Preselection angles of the two-level system.

    theta is clamped to [0, pi] and phi wrapped to [0, 2*pi) at construction
    so downstream code never revalidates.

    Attributes:
        theta: polar angle of the preselected state, radians in [0, pi].
        phi: relative phase of the preselected state, radians in [0, 2*pi).
    """

    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ValueError("selection angles must be finite")
        theta = min(max(theta, 0.0), math.pi)
        phi = phi % (2.0 * math.pi)
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def pre_state(self) -> np.ndarray:
        """Preselected state as a 2-component complex unit vector."""
        return np.array(
            [math.cos(self.theta / 2),
             cmath.exp(1j * self.phi) * math.sin(self.theta / 2)],
            dtype=complex,
        )

    def post_state(self) -> np.ndarray:
        """Postselected state |up> as a 2-component complex unit vector."""
        return np.array([1.0, 0.0], dtype=complex)


def weak_value(sel: SelectionPair) -> complex:
    """Weak value e^{i phi} tan(theta/2) of sigma_x for this selection.

    Raises:
        OrthogonalSelection: theta = pi (selection states orthogonal).
    """
    if sel.theta >= math.pi:
        raise OrthogonalSelection(
            "theta = pi: postselected state orthogonal to preselected state"
        )
    return cmath.exp(1j * sel.phi) * math.tan(sel.theta / 2)


def weak_value_general(
    pre_state: np.ndarray,
    post_state: np.ndarray,
    observable: np.ndarray,
    overlap_tolerance: float = OVERLAP_TOLERANCE,
) -> complex:
    """Weak value <psi_f|A|psi_i> / <psi_f|psi_i> for arbitrary qubit states.

    Args:
        pre_state: preselected state, 2-component complex unit vector.
        post_state: postselected state, 2-component complex unit vector.
        observable: 2x2 Hermitian matrix with observable @ observable = I.
        overlap_tolerance: minimum |<psi_f|psi_i>| accepted.

    Raises:
        OrthogonalSelection: overlap magnitude below tolerance.
        InvalidObservable: observable not Hermitian or A^2 != I entrywise
            within OBSERVABLE_TOLERANCE.
    """
    pre = np.asarray(pre_state, dtype=complex).reshape(2)
    post = np.asarray(post_state, dtype=complex).reshape(2)
    obs = np.asarray(observable, dtype=complex).reshape(2, 2)
    if np.max(np.abs(obs - obs.conj().T)) > OBSERVABLE_TOLERANCE:
        raise InvalidObservable("observable is not Hermitian")
    if np.max(np.abs(obs @ obs - np.eye(2))) > OBSERVABLE_TOLERANCE:
        raise InvalidObservable("observable squared is not the identity")
    overlap = np.vdot(post, pre)
    if abs(overlap) <= overlap_tolerance:
        raise OrthogonalSelection(
            f"|<psi_f|psi_i>| = {abs(overlap):.3e} below {overlap_tolerance:.0e}"
        )
    return complex(np.vdot(post, obs @ pre) / overlap)


def postselection_probability(sel: SelectionPair) -> float:
    """Probability cos^2(theta/2) of finding |psi_f> given |psi_i>."""
    return math.cos(sel.theta / 2) ** 2


def branch_weights(sel: SelectionPair) -> tuple[float, float]:
    """Probabilities (p_plus, p_minus) of the sigma_x = +1/-1 branches of the
    preselected state; the weights of the non-postselected mixture."""
    u = math.sin(sel.theta) * math.cos(sel.phi)
    return 0.5 * (1.0 + u), 0.5 * (1.0 - u)
