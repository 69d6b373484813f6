"""Problem parameters, exponent regimes, radial grids, and norm evaluation.

Everything downstream works with radial representatives u(r) of W^{1,p}(R^3)
functions sampled on a uniform grid on [0, R].  Integrals carry the 4*pi*r^2
volume factor and use composite Simpson weights; radial derivatives use
centered differences with u'(0) = 0 and a one-sided stencil at r = R.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonFinite, OutOfRange

# Default truncation used by the CLI; solver routines may size their own grids.
DEFAULT_R = 40.0
DEFAULT_N = 4000

# Relative tail bound a decayed profile must satisfy at r = R.
TAIL_BOUND = 1e-8

# Relative tolerance for deciding regime-boundary equality of q.
REGIME_BOUNDARY_RTOL = 1e-12

FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class Params:
    """The problem quintuple (a, b, p, q, c) plus derived exponents.

    Derived fields:
      pstar -- Sobolev-critical exponent 3p/(3-p)
      e1    -- gradient-norm power 3(q-p)/p in the interpolation inequality
      e2    -- power of t = |grad u|_p^p in the fibering function, 3(q-p)/p^2
      qbar  -- mass power q - 3(q-p)/p multiplying c in the fibering coefficient
    """

    a: float
    b: float
    p: float
    q: float
    c: float
    pstar: float = field(init=False)
    e1: float = field(init=False)
    e2: float = field(init=False)
    qbar: float = field(init=False)

    def __post_init__(self):
        p, q = self.p, self.q
        object.__setattr__(self, "pstar", 3.0 * p / (3.0 - p))
        object.__setattr__(self, "e1", 3.0 * (q - p) / p)
        object.__setattr__(self, "e2", 3.0 * (q - p) / (p * p))
        object.__setattr__(self, "qbar", q - 3.0 * (q - p) / p)

    def with_mass(self, c: float) -> "Params":
        return make_params(self.a, self.b, self.p, self.q, c)

    def with_b(self, b: float) -> "Params":
        return make_params(self.a, b, self.p, self.q, self.c)


def make_params(a: float, b: float, p: float, q: float, c: float) -> Params:
    """Validate the quintuple and populate derived exponents.

    Raises OutOfRange naming the violated bound.  b = 0 is admitted (the
    vanishing-nonlocality limit problem); b < 0 is not.
    """
    for name, val in (("a", a), ("b", b), ("p", p), ("q", q), ("c", c)):
        if not math.isfinite(val):
            raise OutOfRange(f"{name} must be finite, got {val!r}")
    if not (1.5 < p < 3.0):
        raise OutOfRange(f"p must satisfy 3/2 < p < 3, got p = {p}")
    pstar = 3.0 * p / (3.0 - p)
    if not (p < q < pstar):
        raise OutOfRange(f"q must satisfy p < q < 3p/(3-p) = {pstar}, got q = {q}")
    if a <= 0:
        raise OutOfRange(f"a must be positive, got a = {a}")
    if b < 0:
        raise OutOfRange(f"b must be nonnegative, got b = {b}")
    if c <= 0:
        raise OutOfRange(f"c must be positive, got c = {c}")
    return Params(float(a), float(b), float(p), float(q), float(c))


class Regime(enum.Enum):
    """Position of q relative to the mass-critical and double-critical exponents."""

    SUBCRITICAL = "subcritical"
    MASS_CRITICAL = "mass-critical"
    INTERMEDIATE = "intermediate"
    DOUBLE_CRITICAL = "double-critical"
    SUPERCRITICAL = "supercritical"


def mass_critical_exponent(p: float) -> float:
    return p + p * p / 3.0


def double_critical_exponent(p: float) -> float:
    return p + 2.0 * p * p / 3.0


def classify_regime(p: float, q: float) -> Regime:
    """Classify q into the five exponent intervals.

    Boundary equality is resolved with relative tolerance REGIME_BOUNDARY_RTOL,
    so perturbing q by ~1e-13 never jumps between non-adjacent tags.
    """
    make_params(1.0, 1.0, p, q, 1.0)
    q1 = mass_critical_exponent(p)
    q2 = double_critical_exponent(p)
    tol1 = REGIME_BOUNDARY_RTOL * max(1.0, abs(q1))
    tol2 = REGIME_BOUNDARY_RTOL * max(1.0, abs(q2))
    if abs(q - q1) <= tol1:
        return Regime.MASS_CRITICAL
    if abs(q - q2) <= tol2:
        return Regime.DOUBLE_CRITICAL
    if q < q1:
        return Regime.SUBCRITICAL
    if q < q2:
        return Regime.INTERMEDIATE
    return Regime.SUPERCRITICAL


@dataclass(frozen=True)
class RadialGrid:
    """Uniform radial grid r_0 = 0 < r_1 < ... < r_n = R with h = R/n.

    n must be even (composite Simpson) and at least 16.
    """

    R: float
    n: int
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    h: float = field(init=False, compare=False)

    def __post_init__(self):
        if self.R <= 0:
            raise OutOfRange(f"truncation radius must be positive, got R = {self.R}")
        if self.n < 16:
            raise OutOfRange(f"grid needs at least 16 intervals, got n = {self.n}")
        if self.n % 2 != 0:
            raise OutOfRange(f"grid interval count must be even for Simpson, got n = {self.n}")
        h = self.R / self.n
        nodes = np.linspace(0.0, self.R, self.n + 1)
        nodes.flags.writeable = False
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "h", h)

    def simpson_weights(self) -> np.ndarray:
        w = np.full(self.n + 1, 2.0)
        w[1::2] = 4.0
        w[0] = w[-1] = 1.0
        return w * (self.h / 3.0)

    def volume_weights(self) -> np.ndarray:
        """Quadrature row W_i with sum_i W_i f(r_i) ~ 4 pi int_0^R r^2 f dr."""
        return FOUR_PI * self.simpson_weights() * self.nodes**2


def radial_derivative(grid: RadialGrid, values: np.ndarray) -> np.ndarray:
    """Centered differences; u'(0) = 0 by radial smoothness, one-sided at r = R."""
    h = grid.h
    d = np.empty_like(values)
    d[0] = 0.0
    d[1:-1] = (values[2:] - values[:-2]) / (2.0 * h)
    d[-1] = (values[-1] - values[-2]) / h
    return d


class RadialProfile:
    """A radial function sampled on a grid, with cached L^s and gradient norms.

    Values are frozen at construction; the norm cache is filled lazily and a
    given cache entry always equals direct recomputation (same code path).
    """

    def __init__(self, grid: RadialGrid, values):
        values = np.asarray(values, dtype=float)
        if values.shape != grid.nodes.shape:
            raise OutOfRange(
                f"profile needs {grid.nodes.size} values for this grid, got {values.size}"
            )
        values = values.copy()
        values.flags.writeable = False
        self.grid = grid
        self.values = values
        self._norm_cache: dict = {}

    def _require_finite(self):
        if not np.all(np.isfinite(self.values)):
            raise NonFinite("profile contains NaN/Inf values")

    def lp_norm(self, s: float) -> float:
        """(4 pi int r^2 |u|^s dr)^(1/s) by composite Simpson."""
        if s < 1.0:
            raise OutOfRange(f"norm exponent must satisfy s >= 1, got s = {s}")
        key = ("lp", float(s))
        if key not in self._norm_cache:
            self._require_finite()
            integral = float(self.grid.volume_weights() @ np.abs(self.values) ** s)
            self._norm_cache[key] = integral ** (1.0 / s)
        return self._norm_cache[key]

    def grad_lp_norm(self, p: float) -> float:
        """(4 pi int r^2 |u'|^p dr)^(1/p) with u' by centered differences."""
        if p < 1.0:
            raise OutOfRange(f"norm exponent must satisfy p >= 1, got p = {p}")
        key = ("grad", float(p))
        if key not in self._norm_cache:
            self._require_finite()
            d = radial_derivative(self.grid, self.values)
            integral = float(self.grid.volume_weights() @ np.abs(d) ** p)
            self._norm_cache[key] = integral ** (1.0 / p)
        return self._norm_cache[key]

    def derivative(self) -> np.ndarray:
        return radial_derivative(self.grid, self.values)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def tail_fraction(self) -> float:
        """|u(R)| relative to max|u|; 0 for the zero profile."""
        m = self.max_abs()
        if m == 0.0:
            return 0.0
        return abs(float(self.values[-1])) / m

    def scaled(self, factor: float) -> "RadialProfile":
        return RadialProfile(self.grid, factor * self.values)


def lp_norm(u: RadialProfile, s: float) -> float:
    return u.lp_norm(s)


def grad_lp_norm(u: RadialProfile, p: float) -> float:
    return u.grad_lp_norm(p)
