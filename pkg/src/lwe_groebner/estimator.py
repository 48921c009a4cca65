"""Closed-form complexity, sample-count and probability estimates.

Bit counts are log2 of the exact formula value: binomials are exact
integers, logarithms are taken with mpmath at 60 significant digits and no
big-O constants are applied.
"""
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Optional, Sequence, Union

import mpmath
import numpy as np

from .errors import DegenerateRatio, HypothesisViolated

mpmath.mp.dps = 60

OMEGA_THEORETICAL = 2.37286
VARIANTS = (
    "general", "small_error", "small_secret", "small_secret_small_error", "binary_secret", "binary_error",
)
BINARY_VARIANTS = ("binary_secret", "binary_error")
MAX_D_SEARCH = 1_000_000


def log2(x) -> mpmath.mpf:
    if isinstance(x, int):
        if x <= 0:
            raise ValueError("log2 of a non-positive number")
        # exact shift keeps full precision for huge integers
        b = x.bit_length()
        if b > 200:
            return mpmath.mpf(b - 200) + mpmath.log(mpmath.mpf(x >> (b - 200)), 2)
        return mpmath.log(mpmath.mpf(x), 2)
    return mpmath.log(mpmath.mpf(x), 2)


def _check_omega(omega):
    if not 2 <= omega <= 3:
        raise ValueError(f"omega={omega} outside [2, 3]")


# -- degree bounds ------------------------------------------------------------

def macaulay_bound(degrees: Sequence[int], n: int) -> int:
    """d_1 + ... + d_l - l + 1 over the l = min(n + 1, m) largest degrees."""
    ds = sorted((int(d) for d in degrees), reverse=True)
    if not ds:
        raise ValueError("empty degree list")
    ds = ds[: min(n + 1, len(ds))]
    return sum(ds) - len(ds) + 1


def small_secret_small_error_bound(n: int, D_error: int, D_secret: int):
    """Macaulay-bound expression chosen by comparing error and secret model sizes.

    Returns ``(case, bound)``: case 1 when the secret-reduced remainders
    (degree <= n (D_S - 1)) are smaller than D_E, case 2 when
    D_E >= D_S otherwise, case 3 when D_S > D_E (the secret polynomials and
    n straightened samples swap roles).
    """
    if D_error < 1 or D_secret < 1:
        raise ValueError("model sizes must be positive")
    rem = n * (D_secret - 1)
    if D_error >= D_secret:
        if rem < D_error:
            return 1, (n + 1) * rem + 1
        return 2, (n + 1) * (D_error - 1) + 1
    return 3, n * (D_secret - 1) + D_error


# -- cost formulas ------------------------------------------------------------

def gaussian_elim_cost_bits(n: int, d: int, m, omega: float) -> float:
    """log2(m * d * C(n + d - 1, d)^omega)."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    _check_omega(omega)
    return float(log2(m) + log2(d) + omega * log2(comb(n + d - 1, d)))


def refined_cost_bits(n: int, d_reg: int, m, omega: float) -> float:
    """log2(m * d^3 * C(n + d - 1, d)^(omega + 2)) at d = 2 d_reg - 1."""
    if d_reg < 1:
        raise ValueError("d_reg must be at least 1")
    _check_omega(omega)
    d = 2 * d_reg - 1
    return float(log2(m) + 3 * log2(d) + (omega + 2) * log2(comb(n + d - 1, d)))


# -- sample thresholds --------------------------------------------------------

def _ratio(n, D, d, variant) -> Fraction:
    """Samples needed (as an exact rational) for d_reg <= D + d."""
    if variant == "binary_secret":
        den = comb(n, d)
        if den == 0:
            raise ValueError(f"d={d} exceeds n={n}")
        return Fraction(comb(n, D + d), den)
    if variant == "binary_error":
        return Fraction((n - d - 1) * (n - d), (d + 1) * (d + 2)) + n
    return Fraction(comb(n + D + d - 1, D + d), comb(n + d - 1, d))


def _variant_D(D, variant):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    return 2 if variant == "binary_error" else D


def sample_threshold(n: int, D: int, d: int, variant: str = "general") -> int:
    """Least integer m with d_reg <= D + d admissible for the variant.

    binary_error fixes D = 2 and counts all m samples (n of them become
    the field equations).
    """
    D = _variant_D(D, variant)
    if d < 0 or D < 1:
        raise ValueError("need d >= 0 and D >= 1")
    r = _ratio(n, D, d, variant)
    return max(math.ceil(r), 0)


def satisfies(n: int, m, D: int, d: int, variant: str = "general") -> bool:
    D = _variant_D(D, variant)
    if isinstance(m, int):
        return m >= _ratio(n, D, d, variant)
    return mpmath.mpf(m) >= mpmath.mpf(_ratio(n, D, d, variant).numerator) / _ratio(n, D, d, variant).denominator


def least_d(n: int, m, D: int, variant: str = "general") -> int:
    if m < 1:
        raise ValueError("need at least one sample")
    limit = min(MAX_D_SEARCH, n) if variant in BINARY_VARIANTS else MAX_D_SEARCH
    for d in range(limit + 1):
        if variant == "binary_secret" and d > n:
            break
        if satisfies(n, m, D, d, variant):
            return d
    raise ValueError(f"no d <= {limit} satisfies the {variant} sample condition")


def lowest_dreg(n: int, m, D: int, variant: str = "general") -> int:
    """D + d* with d* the least d meeting the variant's sample inequality."""
    return _variant_D(D, variant) + least_d(n, m, D, variant)


def lowest_solving_degree(d_reg: int, D: int, variant: str) -> int:
    """Conjectural solving degree: d_reg + 1 for binary variants, d_reg + D - 1 otherwise."""
    if variant in BINARY_VARIANTS:
        return d_reg + 1
    return d_reg + D - 1


# -- binary error worked examples ---------------------------------------------

def binary_error_example(n: int, m: int, omega: float = 3.0) -> dict:
    """Least d for the binary-error sample condition and the two printed bit counts.

    ``direct_bits`` = log2(m d^3 C(n + 2d + 2, 2d + 3)^omega);
    ``conjecture_bits`` = log2(m (d + 3) C(n + d + 2, d + 3)^omega).
    """
    d = least_d(n, m, 2, "binary_error")
    k = 2 * d + 3
    out = {
        "n": n, "m": m, "omega": omega, "d": d,
        "direct_degree": k,
        "direct_bits": float(log2(m) + 3 * log2(max(d, 1)) + omega * log2(comb(n + k - 1, k))),
        "direct_bits_refined_exponent": float(log2(m) + 3 * log2(max(d, 1)) + (omega + 2) * log2(comb(n + k - 1, k))),
        "conjecture_degree": d + 3,
        "conjecture_bits": float(log2(m) + log2(d + 3) + omega * log2(comb(n + d + 2, d + 3))),
    }
    return out


# -- probabilities ------------------------------------------------------------

def gaussian_tail_bound(t) -> mpmath.mpf:
    if t <= 0:
        raise ValueError("t must be positive")
    t = mpmath.mpf(t)
    return 2 / (t * mpmath.sqrt(2 * mpmath.pi)) * mpmath.exp(-t * t / 2)


def success_probability(m) -> mpmath.mpf:
    """1 - sqrt(1 / (pi log m)) for t = sqrt(2 log m)."""
    if m <= 1:
        raise ValueError("need m > 1")
    return 1 - mpmath.sqrt(1 / (mpmath.pi * mpmath.log(mpmath.mpf(m))))


def error_degree(t, sigma) -> mpmath.mpf:
    """D_GB = 2 t sigma + 1 (not rounded)."""
    return 2 * mpmath.mpf(t) * mpmath.mpf(sigma) + 1


def probability_suite(m, t, sigma=None) -> dict:
    p_tail = gaussian_tail_bound(t)
    out = {
        "p_tail": p_tail,
        "p_fail": mpmath.mpf(m) * p_tail,
        "p_g": success_probability(m),
    }
    if sigma is not None:
        out["D_GB"] = error_degree(t, sigma)
    return out


# -- binomial / entropy bounds ------------------------------------------------

def binary_entropy(p) -> mpmath.mpf:
    p = mpmath.mpf(p)
    if p <= 0 or p >= 1:
        return mpmath.mpf(0)
    return -p * mpmath.log(p, 2) - (1 - p) * mpmath.log(1 - p, 2)


def binomial_bounds_check(n: int, k: int):
    """(lower, exact, upper) for C(n, k) 2^(-n H2(k/n))."""
    if not 0 < k < n:
        raise DegenerateRatio(f"k={k} must lie strictly between 0 and n={n}")
    exact = mpmath.mpf(comb(n, k)) * mpmath.power(2, -n * binary_entropy(mpmath.mpf(k) / n))
    lower = mpmath.sqrt(mpmath.mpf(n) / (8 * k * (n - k)))
    upper = mpmath.sqrt(mpmath.mpf(n) / (mpmath.pi * k * (n - k)))
    return lower, exact, upper


def _lower_bound_holds_exactly(n: int, k: int) -> bool:
    # squared: n / (8 k (n-k)) <= C(n,k)^2 k^(2k) (n-k)^(2(n-k)) / n^(2n), all integers
    return n ** (2 * n + 1) <= 8 * k * (n - k) * comb(n, k) ** 2 * k ** (2 * k) * (n - k) ** (2 * (n - k))


def binomial_sandwich_sweep(n_max: int, tol: float = 1e-8):
    """All (n, k, side) with 0 < k < n <= n_max where a binomial bound fails.

    Works in float64 log space and re-checks any pair within ``tol`` of a
    bound exactly (integers for the lower side, 60-digit mpmath for the
    upper side, which involves pi).
    """
    violations = []
    log8, logpi = math.log(8), math.log(math.pi)
    for n in range(2, n_max + 1):
        k = np.arange(1, n, dtype=np.float64)
        log_c = np.cumsum(np.log(n - k + 1) - np.log(k))
        log_exact = log_c + k * np.log(k / n) + (n - k) * np.log((n - k) / n)
        half = 0.5 * (math.log(n) - np.log(k) - np.log(n - k))
        lo_gap = log_exact - (half - 0.5 * log8)
        hi_gap = (half - 0.5 * logpi) - log_exact
        for idx in np.flatnonzero(lo_gap < tol):
            kk = int(idx) + 1
            if lo_gap[idx] < -tol or not _lower_bound_holds_exactly(n, kk):
                violations.append((n, kk, "lower"))
        for idx in np.flatnonzero(hi_gap < tol):
            kk = int(idx) + 1
            _, exact, upper = binomial_bounds_check(n, kk)
            if hi_gap[idx] < -tol or exact > upper:
                violations.append((n, kk, "upper"))
    return violations


def entropy_power_bound(p) -> mpmath.mpf:
    """(4 p (1 - p))^(1 / ln 4), an upper bound for H2(p)."""
    p = mpmath.mpf(p)
    return (4 * p * (1 - p)) ** (1 / mpmath.log(4))


def entropy_exponent(growth: float) -> float:
    """Exponent of n in (n + p - 1) H2(p / (n + p - 1)) when p(n) grows like n^growth."""
    ln4 = math.log(4)
    return (1 + growth) / ln4 + max(1.0, growth) * (1 - 2 / ln4)


@dataclass
class AsymptoticReport:
    n: int
    p: float
    alpha: float
    part1_lhs: Optional[float]
    part1_rhs: Optional[float]
    entropy: float
    entropy_bound: float
    entropy_bound_loose: float
    growth: Optional[float]
    exponent: Optional[float]

    @property
    def part1_holds(self):
        return self.part1_lhs is None or self.part1_lhs <= self.part1_rhs * (1 + 1e-12)

    @property
    def part2_holds(self):
        return self.entropy <= self.entropy_bound * (1 + 1e-12) and \
            self.entropy_bound <= self.entropy_bound_loose * (1 + 1e-12)


def _poly_value(p, n):
    if callable(p):
        return p(n)
    if isinstance(p, (list, tuple)):
        return sum(c * n ** i for i, c in enumerate(p))
    return p


def asymptotic_exponent(n: int, p: Union[Callable, Sequence[int], int], alpha: float = 2.0,
                        growth: Optional[float] = None, require_part1: bool = True) -> AsymptoticReport:
    """Evaluate both parts of the binomial growth bound at ``n`` for solving degree p(n).

    ``p`` is a callable, a coefficient list (constant term first) or a
    number. ``growth`` is the exponent of n in p(n); for coefficient lists
    it defaults to the polynomial degree. The reported ``exponent`` is the
    exponent of n in the entropy bound.
    """
    if n < 2 or alpha < 1:
        raise HypothesisViolated("need n >= 2 and alpha >= 1")
    pn = _poly_value(p, n)
    if pn < 0:
        raise HypothesisViolated(f"p({n}) = {pn} is negative")
    if growth is None and isinstance(p, (list, tuple)):
        growth = max((i for i, c in enumerate(p) if c), default=0)
    lhs = rhs = None
    if pn >= n - 1:
        lhs = float((mpmath.mpf(n + pn - 1) / (pn * (n - 1))) ** alpha)
        rhs = float(mpmath.mpf(2) ** alpha / (n - 1))
    elif require_part1:
        raise HypothesisViolated(f"p({n}) = {pn} < n - 1")
    N = n + pn - 1
    frac = mpmath.mpf(pn) / N
    ent = binary_entropy(frac)
    ln4 = mpmath.log(4)
    tight = (4 * mpmath.mpf(n - 1) * pn / mpmath.mpf(N) ** 2) ** (1 / ln4)
    loose = (4 * mpmath.mpf(pn) / (n - 1)) ** (1 / ln4)
    return AsymptoticReport(
        n, float(pn), alpha, lhs, rhs, float(ent), float(tight), float(loose), growth,
        entropy_exponent(growth) if growth is not None else None,
    )


# -- symbolic sample counts ---------------------------------------------------

def evaluate_samples(expr, n: int):
    """Evaluate a sample count such as ``768^4``, ``2*n``, ``n^1.5`` or ``e^(pi*n/4)``.

    Exact integers come back as int, everything else as an mpmath real.
    """
    if isinstance(expr, int):
        return expr
    if isinstance(expr, float):
        return int(expr) if expr.is_integer() else mpmath.mpf(expr)
    text = str(expr).strip()
    if text.lstrip("-").isdigit():
        return int(text)
    import sympy

    sym_n = sympy.Symbol("n")
    parsed = sympy.sympify(text.replace("^", "**"), locals={"n": sym_n, "e": sympy.E, "pi": sympy.pi})
    value = sympy.nsimplify(parsed.subs(sym_n, n), rational=True) if parsed.has(sympy.Float) else parsed.subs(sym_n, n)
    value = sympy.simplify(value)
    if value.is_Integer:
        return int(value)
    return mpmath.mpf(str(sympy.N(value, 60)))


def sample_count(m) -> int:
    """Integer number of samples for a possibly real count (ceiling)."""
    return m if isinstance(m, int) else int(mpmath.ceil(m))


# -- full estimation ----------------------------------------------------------

PROVENANCE = {
    "macaulay_bound": "Macaulay bound over the l = min(n+1, #polys) largest degrees, or the small-secret case selector",
    "d_reg_lowest": "D + least d meeting the variant's sample inequality",
    "sample_threshold": "least m meeting the variant's sample inequality at d*",
    "proven_bits": "single-matrix elimination cost log2(m d C(n+d-1,d)^w) at the Macaulay-bound degree",
    "optimistic_bits": "refined fixed-point cost log2(m d^3 C(n+d-1,d)^(w+2)) at d = 2 d_reg - 1",
    "lowest_achievable_bits": "conjectural: single-matrix cost at solving degree d_reg + D - 1 (d_reg + 1 for binary variants)",
    "p_fail": "union bound m * 2/(t sqrt(2 pi)) exp(-t^2/2)",
    "p_g": "1 - sqrt(1/(pi log m))",
}


@dataclass
class EstimationQuery:
    n: int
    m: object
    D: int
    variant: str = "general"
    omega: float = 2.0
    sigma: Optional[float] = None
    t: Optional[float] = None
    perfect_hints: int = 0
    D_secret: Optional[int] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        _check_omega(self.omega)
        if not 0 <= self.perfect_hints < self.n:
            raise ValueError("perfect_hints must satisfy 0 <= h < n")
        if self.D < 1:
            raise ValueError("D must be positive")

    @property
    def omega_regime(self) -> str:
        return "theoretical" if self.omega <= OMEGA_THEORETICAL else "practical"

    @property
    def n_effective(self) -> int:
        return self.n - self.perfect_hints


@dataclass
class ComplexityReport:
    n_effective: int
    m: object
    variant: str
    omega: float
    omega_regime: str
    D: int
    macaulay_bound: int
    macaulay_case: Optional[int]
    d_star: int
    d_reg_lowest: int
    sample_threshold: int
    proven_bits: float
    optimistic_degree: int
    optimistic_bits: float
    lowest_degree: int
    lowest_achievable_bits: float
    probabilities: Dict[str, float] = field(default_factory=dict)
    extras: Dict[str, object] = field(default_factory=dict)
    formula_provenance: Dict[str, str] = field(default_factory=lambda: dict(PROVENANCE))

    def to_dict(self):
        out = asdict(self)
        out["m"] = str(self.m) if not isinstance(self.m, int) else self.m
        return out

    def numeric_fields(self):
        skip = {"formula_provenance", "extras", "probabilities"}
        return {k: v for k, v in self.to_dict().items() if k not in skip}


def proven_degree(n: int, m: int, D: int, variant: str, D_secret: Optional[int] = None):
    """(macaulay bound, case or None) for the whole system of the variant."""
    # only the n + 1 largest degrees enter the bound
    count = min(m, n + 1)
    if variant == "binary_error":
        return macaulay_bound([2] * count, n), None
    if variant in ("general", "small_error"):
        return macaulay_bound([D] * count, n), None
    D_S = D_secret if D_secret is not None else (2 if variant == "binary_secret" else D)
    case, bound = small_secret_small_error_bound(n, D, D_S)
    return bound, case


def estimate(query: EstimationQuery) -> ComplexityReport:
    n = query.n_effective
    m = evaluate_samples(query.m, query.n)
    D = _variant_D(query.D, query.variant)
    w = query.omega
    d_star = least_d(n, m, D, query.variant)
    d_reg = D + d_star
    mac, case = proven_degree(n, sample_count(m), D, query.variant, query.D_secret)
    low_deg = lowest_solving_degree(d_reg, D, query.variant)
    probs = {}
    if query.t is not None and m > 1:
        probs = {k: float(v) for k, v in probability_suite(m, query.t, query.sigma).items()}
    extras = {}
    if query.variant == "binary_error":
        extras["binary_error_example"] = binary_error_example(n, sample_count(m), w)
    return ComplexityReport(
        n_effective=n, m=m, variant=query.variant, omega=w, omega_regime=query.omega_regime, D=D,
        macaulay_bound=mac, macaulay_case=case, d_star=d_star, d_reg_lowest=d_reg,
        sample_threshold=sample_threshold(n, D, d_star, query.variant),
        proven_bits=gaussian_elim_cost_bits(n, mac, m, w),
        optimistic_degree=2 * d_reg - 1, optimistic_bits=refined_cost_bits(n, d_reg, m, w),
        lowest_degree=low_deg, lowest_achievable_bits=gaussian_elim_cost_bits(n, low_deg, m, w),
        probabilities=probs, extras=extras,
    )


# -- presets ------------------------------------------------------------------

KYBER768 = {"q": 3329, "n": 768, "m": 768, "D": 5, "variant": "small_secret_small_error", "omega": 2.0}


def kyber768_report(m="768", omega: float = 2.0) -> ComplexityReport:
    return estimate(EstimationQuery(n=768, m=m, D=5, variant="small_secret_small_error", omega=omega))
