"""Bivirus SIS model: system data, state space, vector field, Jacobians.

Two competing SIS viruses spread over the same n nodes on possibly
different strongly connected graphs.  With infection-rate matrices B1, B2,
recovery-rate matrices D1, D2 (positive diagonal) and per-node infected
fractions x1, x2, the dynamics are

    dx1/dt = [-D1 + (I - X1 - X2) B1] x1
    dx2/dt = [-D2 + (I - X1 - X2) B2] x2

where Xi = diag(xi).  States live in the closed feasible set
{0 <= x1, 0 <= x2, x1 + x2 <= 1} (entrywise), which the exact flow leaves
invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import speclin
from .exceptions import DomainError, ValidationError

#: How far a state may stray outside the feasible set (integrator drift)
#: before operations refuse it.
CONTAINMENT_TOL = 1e-9


def _frozen_array(a, dtype=float):
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class BivirusSystem:
    """The quadruple (B1, D1, B2, D2) defining a bivirus network.

    D1/D2 may be given as length-n vectors of recovery rates; they are
    stored as full diagonal matrices.  Construction only coerces shapes;
    call `validate` to check the model assumptions (irreducibility,
    positive recovery rates).
    """

    B1: np.ndarray
    D1: np.ndarray
    B2: np.ndarray
    D2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "B1", _frozen_array(self.B1))
        object.__setattr__(self, "B2", _frozen_array(self.B2))
        for name in ("D1", "D2"):
            d = np.asarray(getattr(self, name), dtype=float)
            if d.ndim == 1:
                d = np.diag(d)
            object.__setattr__(self, name, _frozen_array(d))

    @property
    def n(self) -> int:
        return self.B1.shape[0] if self.B1.ndim == 2 else 0


@dataclass(frozen=True)
class State:
    """Paired infection-fraction vectors (x1, x2)."""

    x1: np.ndarray
    x2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x1", _frozen_array(np.atleast_1d(self.x1)))
        object.__setattr__(self, "x2", _frozen_array(np.atleast_1d(self.x2)))

    @property
    def n(self) -> int:
        return self.x1.shape[0]

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.x1, self.x2])

    @classmethod
    def from_vector(cls, v) -> "State":
        v = np.asarray(v, dtype=float)
        if v.ndim != 1 or v.size % 2 != 0:
            raise DomainError(f"state vector must be flat of even length, "
                              f"got shape {v.shape}")
        n = v.size // 2
        return cls(v[:n], v[n:])

    @classmethod
    def zero(cls, n: int) -> "State":
        return cls(np.zeros(n), np.zeros(n))


class OrderCone:
    """The orthant order used by the bivirus flow: first block up, second
    block down (sign pattern m = (0..0, 1..1)).  P is diag(I, -I), its own
    inverse; conjugating the Jacobian by P yields a Metzler matrix, which
    is the differential test for monotonicity of the flow."""

    def __init__(self, n: int):
        self.n = n
        self.m = np.concatenate([np.zeros(n, dtype=int), np.ones(n, dtype=int)])

    @property
    def P(self) -> np.ndarray:
        return np.diag(np.where(self.m == 0, 1.0, -1.0))

    def leq(self, a: State, b: State, tol: float = 0.0) -> bool:
        if a.n != b.n or a.n != self.n:
            raise DomainError("state dimensions do not match the cone")
        return bool((b.x1 >= a.x1 - tol).all() and (b.x2 <= a.x2 + tol).all())


# ---------------------------------------------------------------------------
# validation

def validation_errors(sys: BivirusSystem) -> list[str]:
    """Every violated model assumption, as human-readable messages."""
    problems = []
    mats = {"B1": sys.B1, "D1": sys.D1, "B2": sys.B2, "D2": sys.D2}
    for name, M in mats.items():
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            problems.append(f"{name}: not a square matrix (shape {M.shape})")
        elif not np.isfinite(M).all():
            problems.append(f"{name}: contains NaN or Inf")
    if problems:
        return problems

    n = sys.B1.shape[0]
    for name, M in mats.items():
        if M.shape[0] != n:
            problems.append(f"{name}: dimension {M.shape[0]} != {n}")
    if problems:
        return problems

    for name in ("B1", "B2"):
        B = mats[name]
        if (B < 0).any():
            problems.append(f"{name}: negative infection rate")
        elif not speclin.is_irreducible(B):
            problems.append(f"{name}: irreducibility violated "
                            "(spreading graph not strongly connected)")
    for name in ("D1", "D2"):
        D = mats[name]
        if np.any(D - np.diag(np.diag(D)) != 0.0):
            problems.append(f"{name}: not diagonal")
        if (np.diag(D) <= 0).any():
            problems.append(f"{name}: nonpositive recovery rate")
    return problems


def validate(sys: BivirusSystem) -> BivirusSystem:
    """Return the system unchanged, or raise ValidationError listing every
    violated assumption."""
    problems = validation_errors(sys)
    if problems:
        raise ValidationError(problems)
    return sys


# ---------------------------------------------------------------------------
# recovery-rate normalization

def normalize_recovery(sys: BivirusSystem) -> BivirusSystem:
    """Equivalent system with unit recovery rates: Bi <- Di^{-1} Bi, Di <- I.

    The rescaled system has the same equilibria with the same local
    stability properties, so analyses may assume D = I without loss of
    generality.  Idempotent.
    """
    d1 = np.diag(sys.D1)
    d2 = np.diag(sys.D2)
    if (d1 <= 0).any() or (d2 <= 0).any():
        raise DomainError("recovery rates must be positive to normalize")
    eye = np.eye(sys.n)
    return BivirusSystem(sys.B1 / d1[:, None], eye, sys.B2 / d2[:, None], eye)


def is_recovery_normalized(sys: BivirusSystem) -> bool:
    return bool(np.array_equal(sys.D1, np.eye(sys.n))
                and np.array_equal(sys.D2, np.eye(sys.n)))


def reproduction_numbers(sys: BivirusSystem, tol: float = 1e-12):
    """(R1, R2) with Ri the Perron root of Di^{-1} Bi.  Virus i alone dies
    out iff Ri <= 1."""
    d1 = np.diag(sys.D1)
    d2 = np.diag(sys.D2)
    r1 = speclin.spectral_radius(sys.B1 / d1[:, None], tol)
    r2 = speclin.spectral_radius(sys.B2 / d2[:, None], tol)
    return r1, r2


# ---------------------------------------------------------------------------
# state containment

def in_feasible_set(s: State, tol: float = CONTAINMENT_TOL) -> bool:
    """Containment in the closed feasible set, with slack `tol` for
    integrator drift."""
    lo = -tol
    return bool((s.x1 >= lo).all() and (s.x2 >= lo).all()
                and (s.x1 + s.x2 <= 1.0 + tol).all())


def require_in_feasible_set(s: State, tol: float = CONTAINMENT_TOL) -> State:
    if not in_feasible_set(s, tol):
        raise DomainError("state outside the feasible set "
                          "{0 <= x1, 0 <= x2, x1 + x2 <= 1} beyond tolerance")
    return s


def is_strictly_interior(s: State, margin: float = 0.0) -> bool:
    return bool((s.x1 > margin).all() and (s.x2 > margin).all()
                and (s.x1 + s.x2 < 1.0 - margin).all())


# ---------------------------------------------------------------------------
# dynamics

def _field_parts(sys, x1, x2):
    shrink = 1.0 - x1 - x2
    dx1 = -np.diag(sys.D1) * x1 + shrink * (sys.B1 @ x1)
    dx2 = -np.diag(sys.D2) * x2 + shrink * (sys.B2 @ x2)
    return dx1, dx2


def vector_field(sys: BivirusSystem, s: State, tol: float = CONTAINMENT_TOL):
    """(dx1/dt, dx2/dt) at state s.  Exact formula, no clamping; states
    outside the feasible set beyond `tol` are rejected."""
    require_in_feasible_set(s, tol)
    return _field_parts(sys, s.x1, s.x2)


def field(sys: BivirusSystem):
    """Unchecked flat vector field f: R^{2n} -> R^{2n} for solvers and
    integrators (Newton iterates and RK stages may leave the feasible set
    slightly; containment is enforced on accepted results instead)."""
    n = sys.n
    d1 = np.diag(sys.D1)
    d2 = np.diag(sys.D2)
    B1, B2 = sys.B1, sys.B2

    def f(v):
        x1 = v[:n]
        x2 = v[n:]
        shrink = 1.0 - x1 - x2
        return np.concatenate([-d1 * x1 + shrink * (B1 @ x1),
                               -d2 * x2 + shrink * (B2 @ x2)])

    return f


def residual(sys: BivirusSystem, s: State) -> float:
    """Infinity norm of the vector field; the uniform equilibrium-residual
    convention used throughout the package."""
    dx1, dx2 = _field_parts(sys, s.x1, s.x2)
    return float(max(np.max(np.abs(dx1)), np.max(np.abs(dx2))))


def jacobian(sys: BivirusSystem, s: State,
             tol: float = CONTAINMENT_TOL) -> np.ndarray:
    """Dense 2n x 2n Jacobian of the dynamics at state s.

    Blocks: [[-D1 + S B1 - T1, -T1], [-T2, -D2 + S B2 - T2]] with
    S = diag(1 - x1 - x2) and Ti = diag(Bi xi).
    """
    require_in_feasible_set(s, tol)
    x1, x2 = s.x1, s.x2
    shrink = 1.0 - x1 - x2
    t1 = np.diag(sys.B1 @ x1)
    t2 = np.diag(sys.B2 @ x2)
    j11 = -sys.D1 + shrink[:, None] * sys.B1 - t1
    j22 = -sys.D2 + shrink[:, None] * sys.B2 - t2
    return np.block([[j11, -t1], [-t2, j22]])


def transformed_jacobian(sys: BivirusSystem, s: State,
                         tol: float = CONTAINMENT_TOL) -> np.ndarray:
    """P J P with P = diag(I, -I): the Metzler conjugate of the Jacobian.

    Metzler structure is asserted (up to the containment slack scaled by
    the infection rates); a failure here is an implementation bug, not a
    user error.  Irreducible whenever the state is strictly interior.
    """
    J = jacobian(sys, s, tol)
    n = sys.n
    PJP = J.copy()
    PJP[:n, n:] *= -1.0
    PJP[n:, :n] *= -1.0
    off = PJP - np.diag(np.diag(PJP))
    slack = tol * (1.0 + max(float(sys.B1.max()), float(sys.B2.max())))
    assert off.min() >= -slack, "transformed Jacobian lost Metzler structure"
    return PJP
