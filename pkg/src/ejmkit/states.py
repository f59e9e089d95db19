"""Parameterized single-qubit kets and the five-parameter two-qubit entangled state.

The single-qubit pair (|m>, |-m>) points along +/- the cylindrical unit
vector (sqrt(1-z^2) cos phi, sqrt(1-z^2) sin phi, z).  A second orthonormal
pair (|m_0>, |m_1>) interpolates between them through an angle theta0, and
the five-parameter two-qubit state is an (a, theta)-weighted superposition
of |m_0, m_1> and |m_1, m_0>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    PAULIS,
    I2,
    kron,
    outer,
    partial_trace,
    require_normalized,
)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


class ParameterRangeError(ValueError):
    """A construction parameter lies outside its admissible range."""


def wrap_angle(phi: float) -> float:
    """Wrap an angle into [-pi, pi]."""
    w = math.remainder(float(phi), 2.0 * math.pi)
    return w


def _check_z(z: float) -> float:
    z = float(z)
    if not math.isfinite(z) or abs(z) > 1.0 + 1e-15:
        raise ParameterRangeError(f"|z| <= 1 required, got z = {z!r}")
    return min(max(z, -1.0), 1.0)


def _check_half_angle(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value < -1e-15 or value > math.pi / 2 + 1e-15:
        raise ParameterRangeError(f"{name} must lie in [0, pi/2], got {value!r}")
    return min(max(value, 0.0), math.pi / 2)


@dataclass(frozen=True)
class FiveParams:
    """The quintuple (a, z, phi, theta0, theta) defining the entangled state.

    a is an arbitrary real weight; z and phi fix the cylindrical unit
    vector; theta0 and theta are half-angle phases in [0, pi/2].  phi is
    wrapped into [-pi, pi] on construction.
    """

    a: float
    z: float
    phi: float
    theta0: float
    theta: float

    def __post_init__(self):
        a = float(self.a)
        if not math.isfinite(a):
            raise ParameterRangeError(f"a must be finite, got {a!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "z", _check_z(self.z))
        object.__setattr__(self, "phi", wrap_angle(self.phi))
        object.__setattr__(self, "theta0", _check_half_angle(self.theta0, "theta0"))
        object.__setattr__(self, "theta", _check_half_angle(self.theta, "theta"))


def unit_vector_m(z: float, phi: float) -> np.ndarray:
    """Cylindrical unit vector (sqrt(1-z^2) cos phi, sqrt(1-z^2) sin phi, z)."""
    z = _check_z(z)
    r = math.sqrt(1.0 - z * z)
    return np.array([r * math.cos(phi), r * math.sin(phi), z])


def ket_m(z: float, phi: float) -> np.ndarray:
    """Qubit state whose Bloch vector is unit_vector_m(z, phi)."""
    z = _check_z(z)
    return np.array(
        [
            math.sqrt(1.0 + z) * np.exp(-0.5j * phi),
            math.sqrt(1.0 - z) * np.exp(0.5j * phi),
        ]
    ) / SQRT2


def ket_minus_m(z: float, phi: float) -> np.ndarray:
    """The orthogonal partner of ket_m, pointing along -unit_vector_m."""
    z = _check_z(z)
    return np.array(
        [
            math.sqrt(1.0 - z) * np.exp(-0.5j * phi),
            -math.sqrt(1.0 + z) * np.exp(0.5j * phi),
        ]
    ) / SQRT2


def ket_m0(z: float, phi: float, theta0: float) -> np.ndarray:
    """First state of the theta0-rotated orthonormal pair.

    Reduces to ket_m at theta0 = pi/2.
    """
    theta0 = _check_half_angle(theta0, "theta0")
    w = 1j * np.exp(1j * theta0)
    return ((1.0 - w) * ket_m(z, phi) + (1.0 + w) * ket_minus_m(z, phi)) / 2.0


def ket_m1(z: float, phi: float, theta0: float) -> np.ndarray:
    """Second state of the pair; reduces to ket_minus_m at theta0 = pi/2."""
    theta0 = _check_half_angle(theta0, "theta0")
    w = 1j * np.exp(1j * theta0)
    return ((1.0 + w) * ket_m(z, phi) + (1.0 - w) * ket_minus_m(z, phi)) / 2.0


def phi_state(p: FiveParams) -> np.ndarray:
    """Five-parameter two-qubit state, built in the computational basis.

    This is the canonical constructor; phi_state_tensor builds the same
    state from the m-basis tensor products and agrees elementwise.
    """
    a, z, phi, t0, th = p.a, p.z, p.phi, p.theta0, p.theta
    r_plus = (1.0 + np.exp(2j * t0)) / SQRT2
    r_minus = (1.0 - np.exp(2j * t0)) / SQRT2
    c = math.sqrt(1.0 - z * z)
    e = SQRT2 * 1j * np.exp(1j * (t0 + th))
    v = np.array(
        [
            a * (r_plus + c * r_minus) * np.exp(-1j * phi),
            -(a * z * r_minus - e),
            -(a * z * r_minus + e),
            a * (r_plus - c * r_minus) * np.exp(1j * phi),
        ]
    )
    return v / (2.0 * math.sqrt(a * a + 1.0))


def phi_state_tensor(p: FiveParams) -> np.ndarray:
    """Same state as phi_state, built from |m0,m1> and |m1,m0| tensor products."""
    a, z, phi, t0, th = p.a, p.z, p.phi, p.theta0, p.theta
    m0 = ket_m0(z, phi, t0)
    m1 = ket_m1(z, phi, t0)
    v = (a + np.exp(1j * th)) * kron(m0, m1) + (a - np.exp(1j * th)) * kron(m1, m0)
    return v / math.sqrt(2.0 * a * a + 2.0)


def concurrence_numeric(s) -> float:
    """Pure-state concurrence C = sqrt(2 (1 - tr rho^2)) from the reduced state."""
    s = require_normalized(s)
    if s.shape[0] != 4:
        raise ValueError("concurrence is defined for two-qubit states")
    rho = partial_trace(outer(s), "first")
    purity = float(np.trace(rho @ rho).real)
    c2 = 2.0 * (1.0 - purity)
    return math.sqrt(min(max(c2, 0.0), 1.0))


def concurrence_closed(a: float, theta: float) -> float:
    """Closed-form concurrence of the five-parameter state.

    Depends only on a and theta:  sqrt(1 - 2 a^2 (1 + cos 2 theta) / (a^2+1)^2).
    """
    theta = _check_half_angle(theta, "theta")
    a = float(a)
    val = 1.0 - 2.0 * a * a * (1.0 + math.cos(2.0 * theta)) / (a * a + 1.0) ** 2
    return math.sqrt(min(max(val, 0.0), 1.0))


def reduced_bloch(s, side: str) -> np.ndarray:
    """Pauli expectation 3-vector of one qubit of a two-qubit pure state."""
    s = require_normalized(s)
    if s.shape[0] != 4:
        raise ValueError("reduced_bloch expects a two-qubit state")
    if side == "first":
        ops = [kron(p, I2) for p in PAULIS]
    elif side == "second":
        ops = [kron(I2, p) for p in PAULIS]
    else:
        raise ValueError(f"side must be 'first' or 'second', got {side!r}")
    return np.array([np.vdot(s, op @ s).real for op in ops])


def m_prime(z: float, phi: float, theta0: float) -> np.ndarray:
    """Unit direction of the side-first reduced Bloch vector of phi_state.

    Reduces to unit_vector_m(z, phi) at theta0 = pi/2.
    """
    z = _check_z(z)
    theta0 = _check_half_angle(theta0, "theta0")
    c = math.sqrt(1.0 - z * z)
    s0, c0 = math.sin(theta0), math.cos(theta0)
    return np.array(
        [
            c * math.cos(phi) * s0 + math.sin(phi) * c0,
            c * math.sin(phi) * s0 - math.cos(phi) * c0,
            z * s0,
        ]
    )


def reduced_bloch_closed(p: FiveParams) -> np.ndarray:
    """Closed form of reduced_bloch(phi_state(p), 'first')."""
    scale = 2.0 * p.a * math.cos(p.theta) / (p.a * p.a + 1.0)
    return scale * m_prime(p.z, p.phi, p.theta0)
