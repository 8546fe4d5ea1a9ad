"""Equilibrium location, classification, and construction.

Equilibria of the bivirus dynamics solve

    [-D1 + (I - X1 - X2) B1] x1 = 0,
    [-D2 + (I - X1 - X2) B2] x2 = 0,

and come in four kinds: healthy (both zero), boundary (exactly one virus
present, at the endemic profile of its single-virus system), and
coexistence (both strictly positive at every node).  For generic rate
matrices there are finitely many; a special construction below produces
the nongeneric alternative, a whole line segment of coexistence
equilibria.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import model, speclin
from .exceptions import ConvergenceError, DomainError
from .model import BivirusSystem, State

log = logging.getLogger(__name__)

#: Roots closer than this in infinity norm are treated as the same point.
DEDUP_RADIUS = 1e-6
#: Minimum entry / minimum distance from the x1 + x2 = 1 face for a root
#: to count as a coexistence (strictly interior) equilibrium.
INTERIOR_FLOOR = 1e-7

KIND_HEALTHY = "healthy"
KIND_BOUNDARY_1 = "boundary_virus1"
KIND_BOUNDARY_2 = "boundary_virus2"
KIND_COEXISTENCE = "coexistence"

_SPECTRUM_FROM_METZLER = {
    "hurwitz": "stable",
    "unstable": "unstable",
    "singular_boundary": "singular_boundary",
}


@dataclass(frozen=True)
class Equilibrium:
    """A rest point plus its spectral classification."""

    state: State
    kind: str
    residual: float
    spectrum_class: str   # stable | unstable | singular_boundary
    abscissa: float       # rightmost real part of the Jacobian spectrum
    degenerate: bool = False

    def coordinates(self) -> np.ndarray:
        return self.state.as_vector()


@dataclass(frozen=True)
class BoundaryVerdict:
    """Outcome of the cross-infection spectral test at a boundary
    equilibrium: rho_cross = rho((I - X_bar) B_other) decides local
    stability (< 1 stable, > 1 unstable, tol band -> critical)."""

    rho_cross: float
    verdict: str          # locally_stable | unstable | critical


@dataclass(frozen=True)
class SufficientConditions:
    """Tri-state report for the three coexistence-excluding dominance
    tests, each one of {holds_for_virus1, holds_for_virus2, inconclusive}."""

    entrywise_dominance: str
    row_sum_gap: str
    profile_dominance: str


@dataclass(frozen=True)
class LineFamily:
    """The constructed family carrying a segment of coexistence equilibria.

    z is the shared endemic profile, C fixes z with unit Perron root, and
    B2 = mu (I - Z)^{-1} C.  At mu = 1 every (alpha z, (1 - alpha) z) for
    alpha in [0, 1] is an equilibrium of the system (B1, I, B2, I).
    """

    z: np.ndarray
    C: np.ndarray
    B2: np.ndarray
    mu: float

    def line_state(self, alpha: float) -> State:
        return State(alpha * self.z, (1.0 - alpha) * self.z)


@dataclass(frozen=True)
class EnumerationResult:
    equilibria: list[Equilibrium]
    line_degeneracy_suspected: bool = False

    def __iter__(self):
        return iter(self.equilibria)

    def __len__(self):
        return len(self.equilibria)

    def of_kind(self, kind: str) -> list[Equilibrium]:
        return [e for e in self.equilibria if e.kind == kind]


# ---------------------------------------------------------------------------
# classification helper

def classify_state(sys: BivirusSystem, s: State, band: float = speclin.CLASSIFY_BAND):
    """(spectrum_class, abscissa) of the transformed Jacobian at s."""
    PJP = model.transformed_jacobian(sys, s)
    s_val = speclin.spectral_abscissa(PJP)
    return _SPECTRUM_FROM_METZLER[speclin.classify_abscissa(s_val, band)], s_val


def _make_equilibrium(sys, s, kind, band=speclin.CLASSIFY_BAND, degenerate=False):
    spectrum, absc = classify_state(sys, s, band)
    return Equilibrium(state=s, kind=kind, residual=model.residual(sys, s),
                       spectrum_class=spectrum, abscissa=absc,
                       degenerate=degenerate or spectrum == "singular_boundary")


# ---------------------------------------------------------------------------
# single-virus endemic profile

def single_virus_endemic(B, D, tol: float = 1e-12, max_iter: int = 20000):
    """Endemic equilibrium of the single-virus SIS system (B, D).

    Returns None when rho(D^{-1} B) <= 1 (the virus dies out); otherwise
    the unique strictly positive profile x with -D x + (I - X) B x = 0 to
    residual `tol`.  A monotone fixed-point sweep x_i <- (Bx)_i /
    (d_i + (Bx)_i) from 0.5 * ones does the global work and Newton steps
    polish the answer.
    """
    B = speclin.require_nonnegative(B, "infection matrix")
    D = speclin.require_positive_diagonal(D, "recovery matrix")
    if not speclin.is_irreducible(B):
        raise DomainError("infection matrix must be irreducible")
    d = np.diag(D)
    if speclin.spectral_radius(B / d[:, None]) <= 1.0:
        return None

    n = B.shape[0]
    x = np.full(n, 0.5)
    for _ in range(max_iter):
        y = B @ x
        x_new = y / (d + y)
        if np.max(np.abs(x_new - x)) <= 1e-8:
            x = x_new
            break
        x = x_new
    else:
        raise ConvergenceError("endemic fixed-point sweep hit iteration cap",
                               iterate=x)

    def res(v):
        return -d * v + (1.0 - v) * (B @ v)

    for _ in range(50):
        r = res(x)
        if np.max(np.abs(r)) <= tol:
            break
        J = -D + (1.0 - x)[:, None] * B - np.diag(B @ x)
        x = x - np.linalg.solve(J, r)
    else:
        raise ConvergenceError("endemic Newton polish hit iteration cap",
                               iterate=x)
    if (x <= 0).any() or (x >= 1).any():
        raise ConvergenceError("endemic profile left (0, 1)", iterate=x)
    return x


# ---------------------------------------------------------------------------
# boundary equilibria

def boundary_stability(sys: BivirusSystem, band: float = speclin.CLASSIFY_BAND):
    """(verdict for (x1_bar, 0), verdict for (0, x2_bar)).

    Each entry is a BoundaryVerdict, or None when the corresponding virus
    is subcritical so that its boundary equilibrium does not exist.  The
    system is recovery-normalized internally (equilibria and their
    stability are unchanged by that).
    """
    ns = model.normalize_recovery(sys)
    r1, r2 = model.reproduction_numbers(ns)
    verdicts = []
    for r, B_own, B_other in ((r1, ns.B1, ns.B2), (r2, ns.B2, ns.B1)):
        if r <= 1.0:
            verdicts.append(None)
            continue
        xbar = single_virus_endemic(B_own, np.eye(ns.n))
        rho_cross = speclin.spectral_radius((1.0 - xbar)[:, None] * B_other)
        if rho_cross < 1.0 - band:
            verdict = "locally_stable"
        elif rho_cross > 1.0 + band:
            verdict = "unstable"
        else:
            verdict = "critical"
        verdicts.append(BoundaryVerdict(rho_cross=rho_cross, verdict=verdict))
    return tuple(verdicts)


def _dominance(a, b) -> bool:
    """Entrywise a >= b with at least one strict inequality."""
    return bool((a >= b).all() and (a > b).any())


def sufficient_conditions(sys: BivirusSystem) -> SufficientConditions:
    """Evaluate the three coexistence-excluding dominance tests in both
    virus orderings on the recovery-normalized rates.

    Requires both viruses supercritical (each boundary equilibrium must
    exist for the comparisons to mean anything).
    """
    ns = model.normalize_recovery(sys)
    r1, r2 = model.reproduction_numbers(ns)
    if r1 <= 1.0 or r2 <= 1.0:
        raise DomainError("sufficient_conditions needs R1 > 1 and R2 > 1")

    def tri(wins2, wins1):
        if wins2:
            return "holds_for_virus2"
        if wins1:
            return "holds_for_virus1"
        return "inconclusive"

    entrywise = tri(_dominance(ns.B2, ns.B1), _dominance(ns.B1, ns.B2))

    rs1 = ns.B1.sum(axis=1)
    rs2 = ns.B2.sum(axis=1)
    row_gap = tri(rs2.min() > rs1.max(), rs1.min() > rs2.max())

    x1bar = single_virus_endemic(ns.B1, np.eye(ns.n))
    x2bar = single_virus_endemic(ns.B2, np.eye(ns.n))
    profile = tri(_dominance(x2bar, x1bar), _dominance(x1bar, x2bar))

    return SufficientConditions(entrywise_dominance=entrywise,
                                row_sum_gap=row_gap,
                                profile_dominance=profile)


# ---------------------------------------------------------------------------
# coexistence equilibria, n = 2 analytic route

def solve_coexistence_n2(sys: BivirusSystem, band: float = speclin.CLASSIFY_BAND):
    """All coexistence equilibria of a two-node system, analytically.

    Writing alpha = x1_2/x1_1 and gamma = x2_2/x2_1, the equilibrium
    equations force

        b1_11 + b1_12 alpha = b2_11 + b2_12 gamma
        b1_21 / alpha + b1_22 = b2_21 / gamma + b2_22

    (rates recovery-normalized).  Eliminating gamma leaves a quadratic in
    alpha, so there are at most two interior equilibria; each real root is
    completed through two susceptible fractions s1, s2 and a 2x2 linear
    solve, and kept only if strictly interior.
    """
    if sys.n != 2:
        raise DomainError("analytic coexistence solver requires n = 2")
    ns = model.normalize_recovery(sys)
    b1 = ns.B1
    b2 = ns.B2
    scale = max(b1.max(), b2.max())

    qa = b1[0, 1] * (b1[1, 1] - b2[1, 1])
    qb = (b1[1, 0] * b1[0, 1]
          + (b1[1, 1] - b2[1, 1]) * (b1[0, 0] - b2[0, 0])
          - b2[0, 1] * b2[1, 0])
    qc = b1[1, 0] * (b1[0, 0] - b2[0, 0])

    degenerate_root = False
    if abs(qa) <= 1e-12 * scale**2:
        if abs(qb) <= 1e-12 * scale**2:
            log.debug("coexistence quadratic vanished identically")
            return []
        roots = [-qc / qb]
    else:
        disc = qb * qb - 4.0 * qa * qc
        if disc < -1e-12 * scale**4:
            return []
        if abs(disc) <= 1e-12 * scale**4:
            roots = [-qb / (2.0 * qa)]
            degenerate_root = True
        else:
            sq = np.sqrt(disc)
            roots = [(-qb + sq) / (2.0 * qa), (-qb - sq) / (2.0 * qa)]

    found = []
    for alpha in roots:
        if not np.isfinite(alpha) or alpha <= 1e-12:
            log.debug("root rejected: alpha = %r out of range", alpha)
            continue
        if abs(b2[0, 1]) > 1e-12 * scale:
            gamma = (b1[0, 0] + b1[0, 1] * alpha - b2[0, 0]) / b2[0, 1]
        else:
            denom = b1[1, 0] / alpha + b1[1, 1] - b2[1, 1]
            if abs(denom) <= 1e-12 * scale:
                log.debug("root rejected: gamma unrecoverable at alpha=%g", alpha)
                continue
            gamma = b2[1, 0] / denom
        if not np.isfinite(gamma) or gamma <= 1e-12:
            log.debug("root rejected: gamma = %r out of range", gamma)
            continue

        s1 = 1.0 / (b1[0, 0] + b1[0, 1] * alpha)
        s2 = 1.0 / (b1[1, 0] / alpha + b1[1, 1])
        det = gamma - alpha
        if abs(det) <= 1e-10 * (1.0 + abs(alpha) + abs(gamma)):
            log.debug("root rejected: ratio directions coincide "
                      "(alpha = gamma = %g); line of equilibria suspected", alpha)
            continue
        x1_1 = (gamma * (1.0 - s1) - (1.0 - s2)) / det
        x2_1 = ((1.0 - s2) - alpha * (1.0 - s1)) / det
        x1 = np.array([x1_1, alpha * x1_1])
        x2 = np.array([x2_1, gamma * x2_1])
        s = State(x1, x2)
        if not model.is_strictly_interior(s, INTERIOR_FLOOR):
            continue
        if model.residual(ns, s) > 1e-8 * max(1.0, scale):
            log.debug("root rejected: residual check failed")
            continue
        found.append(_make_equilibrium(sys, s, KIND_COEXISTENCE,
                                       band, degenerate=degenerate_root))

    return _dedup(found)


# ---------------------------------------------------------------------------
# coexistence equilibria, general-n Newton search

def default_seed_grid(sys: BivirusSystem, levels=None):
    """Seed states (a * x1_bar, b * x2_bar) over a scalar intensity grid,
    respecting the geometry equilibria are expected to have.  Empty when
    either virus is subcritical (no coexistence is possible then)."""
    ns = model.normalize_recovery(sys)
    r1, r2 = model.reproduction_numbers(ns)
    if r1 <= 1.0 or r2 <= 1.0:
        return []
    x1bar = single_virus_endemic(ns.B1, np.eye(ns.n))
    x2bar = single_virus_endemic(ns.B2, np.eye(ns.n))
    if levels is None:
        levels = np.linspace(0.1, 0.9, 9)
    seeds = []
    for a in levels:
        for b in levels:
            s = State(a * x1bar, b * x2bar)
            if model.in_feasible_set(s, 0.0):
                seeds.append(s)
    return seeds


def _newton_root(f, jac, v0, tol, max_iter=80):
    """Damped Newton iteration; returns the final iterate and residual."""
    v = v0.copy()
    r = f(v)
    rnorm = np.max(np.abs(r))
    for _ in range(max_iter):
        if rnorm <= tol:
            return v, rnorm
        J = jac(v)
        try:
            step = np.linalg.solve(J, -r)
            if not np.isfinite(step).all() or np.max(np.abs(step)) > 1e6:
                raise np.linalg.LinAlgError
        except np.linalg.LinAlgError:
            step, *_ = np.linalg.lstsq(J, -r, rcond=None)
        lam = 1.0
        while lam >= 1e-4:
            v_try = v + lam * step
            r_try = f(v_try)
            r_try_norm = np.max(np.abs(r_try))
            if r_try_norm < rnorm:
                v, r, rnorm = v_try, r_try, r_try_norm
                break
            lam *= 0.5
        else:
            return v, rnorm  # stagnated
    return v, rnorm


def find_coexistence_newton(sys: BivirusSystem, seeds=None, tol: float = 1e-10,
                            band: float = speclin.CLASSIFY_BAND):
    """Coexistence equilibria by damped Newton from a family of seeds.

    Converged roots are kept only when strictly interior (every entry
    positive and every nodewise sum below one, so the all-or-nothing
    zero-pattern of genuine equilibria is respected), deduplicated at
    1e-6 in the infinity norm after a lexicographic sort.  Per-seed
    failures are logged, not raised.  On a system carrying a line of
    equilibria the returned points are many and carry
    spectrum_class == 'singular_boundary'.
    """
    ns = model.normalize_recovery(sys)
    if seeds is None:
        seeds = default_seed_grid(sys)
    f = model.field(ns)

    def jac(v):
        return model.jacobian(ns, State.from_vector(v), tol=np.inf)

    roots = []
    failures = 0
    for seed in seeds:
        v0 = seed.as_vector() if isinstance(seed, State) else np.asarray(seed, float)
        v, rnorm = _newton_root(f, jac, v0, tol)
        if rnorm > tol:
            failures += 1
            continue
        s = State.from_vector(v)
        if not model.is_strictly_interior(s, INTERIOR_FLOOR):
            continue
        roots.append(s)
    if failures:
        log.debug("newton search: %d of %d seeds did not converge",
                  failures, len(seeds))

    roots.sort(key=lambda s: tuple(s.as_vector()))
    out = []
    for s in roots:
        if any(np.max(np.abs(s.as_vector() - kept.as_vector())) <= DEDUP_RADIUS
               for kept in out):
            continue
        out.append(s)
    return [_make_equilibrium(sys, s, KIND_COEXISTENCE, band) for s in out]


def _dedup(equilibria):
    equilibria = sorted(equilibria, key=lambda e: tuple(e.coordinates()))
    out = []
    for e in equilibria:
        if any(np.max(np.abs(e.coordinates() - kept.coordinates())) <= DEDUP_RADIUS
               for kept in out):
            continue
        out.append(e)
    return out


# ---------------------------------------------------------------------------
# full enumeration

def enumerate_equilibria(sys: BivirusSystem, band: float = speclin.CLASSIFY_BAND,
                         newton_seeds=None) -> EnumerationResult:
    """Assemble and classify every equilibrium: the healthy state, each
    boundary equilibrium that exists, and the coexistence set (analytic
    quadratic for n = 2, seeded Newton otherwise).

    `line_degeneracy_suspected` is set when any equilibrium sits on the
    singular boundary of the classification band; that is the numerical
    signature of the nongeneric line-of-equilibria construction.
    """
    model.validate(sys)
    ns = model.normalize_recovery(sys)
    r1, r2 = model.reproduction_numbers(ns)
    n = sys.n

    items = [_make_equilibrium(sys, State.zero(n), KIND_HEALTHY, band)]
    if r1 > 1.0:
        x1bar = single_virus_endemic(ns.B1, np.eye(n))
        items.append(_make_equilibrium(sys, State(x1bar, np.zeros(n)),
                                       KIND_BOUNDARY_1, band))
    if r2 > 1.0:
        x2bar = single_virus_endemic(ns.B2, np.eye(n))
        items.append(_make_equilibrium(sys, State(np.zeros(n), x2bar),
                                       KIND_BOUNDARY_2, band))
    if r1 > 1.0 and r2 > 1.0:
        if n == 2:
            items.extend(solve_coexistence_n2(sys, band))
        else:
            items.extend(find_coexistence_newton(sys, seeds=newton_seeds,
                                                 band=band))

    degenerate = any(e.spectrum_class == "singular_boundary" or e.degenerate
                     for e in items)
    return EnumerationResult(equilibria=items,
                             line_degeneracy_suspected=degenerate)


# ---------------------------------------------------------------------------
# line-of-equilibria construction

def construct_equilibrium_line(B1, mu: float = 1.0, c_matrix=None,
                               blend_weight: float = 1.0,
                               tol: float = 1e-12):
    """Build a system whose coexistence set is a line segment (at mu = 1).

    Given a supercritical B1 (unit recovery rates), let z be its endemic
    profile and pick a nonnegative irreducible C fixing z (C z = z, so
    rho(C) = 1 with Perron vector z).  Then B2 = mu (I - Z)^{-1} C.  At
    mu = 1 every (alpha z, (1 - alpha) z), alpha in [0, 1], is an
    equilibrium of (B1, I, B2, I); for mu < 1 the endpoint (z, 0) is
    locally stable and for mu > 1 it is a saddle.

    c_matrix=None uses the rank-one choice C = z q^T with q = z / (z.z).
    Otherwise C is the convex blend `blend_weight * c_matrix +
    (1 - blend_weight) * rank_one`, row-rescaled so that C z = z holds
    exactly; the result must come out nonnegative and irreducible.
    """
    B1 = speclin.require_nonnegative(B1, "B1")
    if not speclin.is_irreducible(B1):
        raise DomainError("B1 must be irreducible")
    if mu <= 0:
        raise DomainError("mu must be positive")
    n = B1.shape[0]
    eye = np.eye(n)
    if speclin.spectral_radius(B1) <= 1.0:
        raise DomainError("B1 is subcritical: no endemic profile to build on")

    z = single_virus_endemic(B1, eye, tol=min(tol, 1e-13))
    rank_one = np.outer(z, z / float(z @ z))
    if c_matrix is None:
        C = rank_one
    else:
        M = speclin.require_nonnegative(c_matrix, "c_matrix")
        if M.shape != (n, n):
            raise DomainError("c_matrix dimension mismatch")
        if not 0.0 <= blend_weight <= 1.0:
            raise DomainError("blend_weight must lie in [0, 1]")
        blend = blend_weight * M + (1.0 - blend_weight) * rank_one
        w = blend @ z
        if (w <= 0).any():
            raise DomainError("blended C cannot be rescaled to fix z "
                              "(zero row against z)")
        C = (z / w)[:, None] * blend
        if not speclin.is_irreducible(C):
            raise DomainError("constructed C is reducible")

    fix_err = float(np.max(np.abs(C @ z - z)))
    if fix_err > 1e-10 * max(1.0, float(np.max(z))):
        raise DomainError(f"constructed C does not fix z (error {fix_err:g})")

    B2 = mu * np.linalg.solve(eye - np.diag(z), C)
    system = BivirusSystem(B1, eye, B2, eye)
    family = LineFamily(z=z, C=C, B2=B2, mu=mu)
    return system, family
