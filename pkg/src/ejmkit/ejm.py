"""Three-parameter elegant joint measurement basis and its proof obligations.

A single (z, phi, theta) triple, with |z| in [1/sqrt(3), 1], determines four
orthonormal two-qubit states.  Each basis state is the five-parameter state
of :mod:`ejmkit.states` with weight a = sqrt(3), theta0 = arcsin(1/sqrt(3 z^2))
and per-index parameters

    phi_i = phi + (0, pi/2, -pi, -pi/2)[i],    z_i = (z, -z, z, -z)[i].

Three independent construction paths are provided and agree elementwise:
the tensor-product path (basis_from_kets), the simplified coefficient path
(build_basis, the canonical one) and the phi_z-rotated path
(basis_phi_z_form).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import I4, inner, outer
from .states import (
    SQRT2,
    SQRT3,
    ParameterRangeError,
    _check_half_angle,
    wrap_angle,
)

Z_MIN = 1.0 / SQRT3

PHI_SHIFTS = (0.0, math.pi / 2, -math.pi, -math.pi / 2)
Z_SIGNS = (1.0, -1.0, 1.0, -1.0)


def sng(x: float) -> float:
    """Sign function with sng(0) = +1 (unreachable on the valid domain)."""
    return -1.0 if x < 0 else 1.0


def _root_3z2m1(z: float) -> float:
    """sqrt(3 z^2 - 1), snapped to 0 at the representation boundary.

    1/sqrt(3) is not a binary float; without the snap the nearest double
    gives sqrt(2.2e-16) ~ 1.5e-8, which would pollute phi_z and every
    derived quantity at the lower z bound.
    """
    t = 3.0 * z * z - 1.0
    return 0.0 if t < 1e-14 else math.sqrt(t)


def _check_ejm_z(z: float) -> float:
    z = float(z)
    if not math.isfinite(z) or abs(z) < Z_MIN - 1e-12 or abs(z) > 1.0 + 1e-12:
        raise ParameterRangeError(
            f"|z| must lie in [1/sqrt(3), 1] ~ [{Z_MIN:.6f}, 1], got z = {z!r}"
        )
    return min(max(z, -1.0), 1.0)


def phi_z(z: float) -> float:
    """Rotation angle with cos = sqrt(1-z^2)/(sqrt(2)|z|), sin = sqrt(3z^2-1)/(sqrt(2)|z|).

    Runs from 0 at |z| = 1/sqrt(3) to pi/2 at |z| = 1.
    """
    z = _check_ejm_z(z)
    c = math.sqrt(max(1.0 - z * z, 0.0))
    return math.atan2(_root_3z2m1(z), c)


@dataclass(frozen=True)
class EjmParams:
    """The measurement-basis triple (z, phi, theta).

    theta0 and phi_z are derived; phi is wrapped into [-pi, pi].
    """

    z: float
    phi: float
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "z", _check_ejm_z(self.z))
        object.__setattr__(self, "phi", wrap_angle(self.phi))
        object.__setattr__(self, "theta", _check_half_angle(self.theta, "theta"))

    @property
    def theta0(self) -> float:
        # arcsin(1/sqrt(3 z^2)) on the principal branch, formed via atan2
        # from sin theta0 = 1/sqrt(3 z^2) and cos theta0 = sqrt(3 z^2 - 1)/sqrt(3 z^2)
        return math.atan2(1.0, _root_3z2m1(self.z))

    @property
    def phi_z(self) -> float:
        return phi_z(self.z)

    @property
    def phi_prime(self) -> float:
        """phi - phi_z, the angle entering the circuits."""
        return self.phi - self.phi_z


@dataclass(frozen=True)
class ParamAssignment:
    """Per-index (phi_i, z_i) assignment behind the four basis states."""

    phis: tuple
    zs: tuple

    @classmethod
    def from_params(cls, p: EjmParams) -> "ParamAssignment":
        return cls(
            phis=tuple(p.phi + d for d in PHI_SHIFTS),
            zs=tuple(s * p.z for s in Z_SIGNS),
        )


@dataclass(frozen=True)
class CoefficientSet:
    """Closed-form amplitude coefficients of the basis states.

    r_plus/r_minus are the theta0 phase combinations; a_plus/a_minus carry
    the |00>/|11> amplitudes; b_theta[i] = (b_{i,+}, b_{i,-}) carry the
    |01>/|10> amplitudes of state i.
    """

    r_plus: complex
    r_minus: complex
    a_plus: complex
    a_minus: complex
    b_theta: tuple

    @classmethod
    def from_params(cls, p: EjmParams) -> "CoefficientSet":
        t0 = p.theta0
        s = _root_3z2m1(p.z)
        c = math.sqrt(max(1.0 - p.z * p.z, 0.0))
        az = abs(p.z)
        e_th = np.exp(1j * p.theta)
        assign = ParamAssignment.from_params(p)
        return cls(
            r_plus=complex((1.0 + np.exp(2j * t0)) / SQRT2),
            r_minus=complex((1.0 - np.exp(2j * t0)) / SQRT2),
            a_plus=complex((1j * s + c) / SQRT2),
            a_minus=complex((1j * s - c) / SQRT2),
            b_theta=tuple(
                (complex((zi + az * e_th) / SQRT2), complex((zi - az * e_th) / SQRT2))
                for zi in assign.zs
            ),
        )


@dataclass(frozen=True)
class EjmBasis:
    """The four basis states together with their defining parameters."""

    params: EjmParams
    states: tuple
    phi_z: float

    def __iter__(self):
        return iter(self.states)


def build_basis(p: EjmParams) -> EjmBasis:
    """Canonical basis constructor via the simplified coefficient form."""
    s = _root_3z2m1(p.z)
    pre = (1.0 - 1j * s) / (2.0 * SQRT3 * p.z * p.z)
    coeff = CoefficientSet.from_params(p)
    assign = ParamAssignment.from_params(p)
    states = []
    for i in range(4):
        b_plus, b_minus = coeff.b_theta[i]
        e = np.exp(1j * assign.phis[i])
        states.append(
            pre
            * np.array(
                [
                    coeff.a_plus / e,
                    -b_plus,
                    -b_minus,
                    coeff.a_minus * e,
                ]
            )
        )
    return EjmBasis(params=p, states=tuple(states), phi_z=p.phi_z)


def basis_from_kets(p: EjmParams) -> EjmBasis:
    """Basis via the tensor-product definition with weight a = sqrt(3).

    e^{i theta0} is formed algebraically as (sqrt(3 z^2 - 1) + i)/sqrt(3 z^2)
    rather than through arcsin, which loses ~8 digits near |z| = 1/sqrt(3).
    """
    from .states import ket_m, ket_minus_m
    from .linalg import kron

    assign = ParamAssignment.from_params(p)
    s = _root_3z2m1(p.z)
    e_t0 = (s + 1j) / math.sqrt(3.0 * p.z * p.z)
    w = 1j * e_t0
    e_th = np.exp(1j * p.theta)
    states = []
    for zi, phii in zip(assign.zs, assign.phis):
        m = ket_m(zi, phii)
        mm = ket_minus_m(zi, phii)
        m0 = ((1.0 - w) * m + (1.0 + w) * mm) / 2.0
        m1 = ((1.0 + w) * m + (1.0 - w) * mm) / 2.0
        states.append(
            ((SQRT3 + e_th) * kron(m0, m1) + (SQRT3 - e_th) * kron(m1, m0))
            / (2.0 * SQRT2)
        )
    return EjmBasis(params=p, states=tuple(states), phi_z=p.phi_z)


def basis_phi_z_form(p: EjmParams) -> EjmBasis:
    """Basis via the phi_z-rotated closed form.

    For z > 0 the bracket of state i alternates between (e^{-i phi'},
    -r_+, -r_-, -e^{i phi'}) patterns with phi' = phi_i - phi_z; the
    general form below covers z < 0 as well through sng(z_i) and agrees
    elementwise with build_basis.
    """
    s = _root_3z2m1(p.z)
    pre = (1.0 - 1j * s) / (2.0 * math.sqrt(3.0 * p.z * p.z))
    assign = ParamAssignment.from_params(p)
    e_th = np.exp(1j * p.theta)
    states = []
    for i in range(4):
        g = sng(assign.zs[i])
        e = np.exp(1j * (assign.phis[i] - p.phi_z))
        states.append(
            pre
            * np.array(
                [
                    1.0 / e,
                    -(g + e_th) / SQRT2,
                    -(g - e_th) / SQRT2,
                    -e,
                ]
            )
        )
    return EjmBasis(params=p, states=tuple(states), phi_z=p.phi_z)


def gram_matrix(b: EjmBasis) -> np.ndarray:
    """4x4 matrix of pairwise inner products <Phi_i|Phi_j>."""
    return np.array([[inner(u, v) for v in b.states] for u in b.states])


def gram_closed(b: EjmBasis) -> np.ndarray:
    """Closed form (1/4)[2 cos(phi_i - phi_j) + sng(z_i z_j) + 1]."""
    assign = ParamAssignment.from_params(b.params)
    out = np.empty((4, 4))
    for i in range(4):
        for j in range(4):
            out[i, j] = 0.25 * (
                2.0 * math.cos(assign.phis[i] - assign.phis[j])
                + sng(assign.zs[i] * assign.zs[j])
                + 1.0
            )
    return out


def projectors(b: EjmBasis) -> list:
    """Rank-1 projectors |Phi_i><Phi_i|."""
    return [outer(s) for s in b.states]


def completeness_residual(b: EjmBasis) -> float:
    """Max-abs entry of sum_i |Phi_i><Phi_i| - I."""
    acc = sum(projectors(b)) - I4
    return float(np.abs(acc).max())


def reduced_tetrahedron(b: EjmBasis) -> np.ndarray:
    """Per-state, per-side reduced Bloch vectors, shape (4, 2, 3).

    [:, 0] is the side-first vector, [:, 1] the side-second (its exact
    negation).  All norms equal (sqrt(3)/2) cos theta.
    """
    from .states import reduced_bloch

    out = np.empty((4, 2, 3))
    for i, s in enumerate(b.states):
        out[i, 0] = reduced_bloch(s, "first")
        out[i, 1] = reduced_bloch(s, "second")
    return out


def reduced_tetrahedron_closed(b: EjmBasis) -> np.ndarray:
    """Closed form of the side-first vectors, shape (4, 3).

    (1/sqrt(2)) cos theta (cos(phi_i - phi_z), sin(phi_i - phi_z),
    sng(z_i)/sqrt(2)); for z > 0 the last component is (-1)^i/sqrt(2).
    """
    p = b.params
    assign = ParamAssignment.from_params(p)
    scale = math.cos(p.theta) / SQRT2
    out = np.empty((4, 3))
    for i in range(4):
        d = assign.phis[i] - p.phi_z
        out[i] = scale * np.array([math.cos(d), math.sin(d), sng(assign.zs[i]) / SQRT2])
    return out


class DegenerateGeometryError(ValueError):
    """Raised when the reduced vectors vanish (theta = pi/2)."""


@dataclass(frozen=True)
class GeometryReport:
    modulus_dev: float
    pairwise_dev: float


def tetrahedron_geometry_check(vectors, theta: float) -> GeometryReport:
    """Check four Bloch vectors against the regular-tetrahedron geometry.

    modulus_dev is the worst deviation of |v_i| from (sqrt(3)/2) cos theta;
    pairwise_dev the worst deviation of unit-vector dot products from -1/3.
    """
    vectors = np.asarray(vectors, dtype=float)
    if vectors.shape != (4, 3):
        raise ValueError("expected four 3-vectors")
    norms = np.linalg.norm(vectors, axis=1)
    if np.any(norms < 1e-12):
        raise DegenerateGeometryError("zero-length reduced vectors (theta = pi/2)")
    target = (SQRT3 / 2.0) * math.cos(theta)
    modulus_dev = float(np.abs(norms - target).max())
    units = vectors / norms[:, None]
    pairwise_dev = 0.0
    for i in range(4):
        for j in range(i + 1, 4):
            pairwise_dev = max(pairwise_dev, abs(float(units[i] @ units[j]) + 1.0 / 3.0))
    return GeometryReport(modulus_dev=modulus_dev, pairwise_dev=pairwise_dev)


def single_param_reduction(z: float, theta: float) -> EjmBasis:
    """Basis at phi = phi_z(z) + pi/4, which is independent of z.

    This recovers the earlier one-parameter measurement family: for any
    admissible z the resulting states coincide (up to a global phase per
    state) with the z = 1/sqrt(3), phi = pi/4 basis.
    """
    return build_basis(EjmParams(z=z, phi=phi_z(z) + math.pi / 4, theta=theta))
