"""Counting functions, the random-quadratic regularity bound, and the coefficient map of d-th powers."""
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Tuple

import mpmath
import numpy as np

from .algebra import DRL_ORDER, Polynomial, PrimeField
from .algebra.orders import monomials_of_degree, sorted_monomials
from .errors import MultinomialVanishes, TooLarge

MAX_POINTS = 10_000_000


def l_count(e: int, n: int, d: int) -> int:
    """Number of (a_1..a_n) with 0 <= a_i < e and sum d."""
    if e < 1 or n < 1 or d < 0:
        raise ValueError("need e >= 1, n >= 1, d >= 0")
    ways = [1] + [0] * d
    for _ in range(n):
        nxt = [0] * (d + 1)
        for s, w in enumerate(ways):
            if w:
                for a in range(min(e - 1, d - s) + 1):
                    nxt[s + a] += w
        ways = nxt
    return ways[d]


def tenti_bound(n: int, m: int, q: int = 2) -> mpmath.mpf:
    """1 - sum_{v=0}^{n-1} q^(C(n-v,3) + (n-v+1) v - (n-v) m), a lower bound on P[d_reg <= 3]."""
    if q != 2:
        warnings.warn("the bound is only established for q = 2; evaluating the formula shape", stacklevel=2)
    total = mpmath.mpf(0)
    for v in range(n):
        total += mpmath.power(q, comb(n - v, 3) + (n - v + 1) * v - (n - v) * m)
    return 1 - total


def random_square_free_quadratics(n: int, m: int, field: PrimeField, rng) -> list:
    monos = [e for k in range(3) for e in monomials_of_degree(n, k, (2,) * n)]
    out = []
    for _ in range(m):
        coeffs = rng.integers(0, field.q, size=len(monos))
        out.append(Polynomial(field, n, {e: int(c) for e, c in zip(monos, coeffs)}))
    return out


def monte_carlo_dreg(n: int, m: int, trials: int, seed: int = 0, q: int = 2, threshold: int = 3):
    """Fraction of random square-free quadratic systems with d_reg <= threshold in F_q[x]/(x_i^2)."""
    from .groebner import degree_of_regularity

    rng = np.random.default_rng(seed)
    field = PrimeField(q)
    hits = 0
    for _ in range(trials):
        F = random_square_free_quadratics(n, m, field, rng)
        prof = degree_of_regularity(F, threshold, quotient_exponent_caps=2)
        hits += prof.finite
    return hits / trials


# -- coefficient map of d-th powers -------------------------------------------

@dataclass
class CoeffMapImage:
    n: int
    d: int
    q: int
    counts: Dict[Tuple[int, ...], int]
    monomials: list

    @property
    def N(self) -> int:
        return comb(self.n + self.d - 1, self.d)

    @property
    def image_size(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts.values())


def multinomial(d: int, exps) -> int:
    out = math.factorial(d)
    for k in exps:
        out //= math.factorial(k)
    return out


def coeff_map_image(n: int, d: int, field: PrimeField) -> CoeffMapImage:
    """Image of a -> coefficient vector of (a_1 x_1 + ... + a_n x_n)^d, with preimage counts."""
    q = field.q
    if d >= q:
        raise MultinomialVanishes(f"d={d} >= q={q}: some multinomial coefficients vanish")
    if d < 1:
        raise ValueError("d must be positive")
    if q ** n > MAX_POINTS:
        raise TooLarge(f"q^n = {q ** n} exceeds the enumeration limit")
    monos = sorted_monomials(monomials_of_degree(n, d), DRL_ORDER)
    grid = np.stack(np.meshgrid(*[np.arange(q, dtype=np.int64)] * n, indexing="ij"), axis=-1).reshape(-1, n)
    cols = []
    for e in monos:
        c = np.full(grid.shape[0], multinomial(d, e) % q, dtype=np.int64)
        for j, k in enumerate(e):
            if k:
                c = c * (np.power(grid[:, j], k) % q) % q
        cols.append(c)
    coeffs = np.stack(cols, axis=1)
    uniq, counts = np.unique(coeffs, axis=0, return_counts=True)
    image = {tuple(int(x) for x in row): int(c) for row, c in zip(uniq, counts)}
    return CoeffMapImage(n, d, q, image, monos)


def tv_distance_to_uniform(img: CoeffMapImage):
    """(exact, lower_bound): 1 - |im| / q^N and 1 - q^(n - N)."""
    qN = img.q ** img.N
    exact = 1 - Fraction(img.image_size, qN)
    lower = 1 - Fraction(img.q ** img.n, qN)
    return exact, lower


def tv_distance_by_definition(img: CoeffMapImage) -> Fraction:
    """Half the L1 distance between the pushforward and the uniform law on F_q^N."""
    qN = img.q ** img.N
    qn = img.q ** img.n
    nu = Fraction(1, qN)
    s = sum(abs(Fraction(c, qn) - nu) for c in img.counts.values())
    s += (qN - img.image_size) * nu
    return s / 2


def sandwich_holds(img: CoeffMapImage) -> bool:
    """nu(x) - eps <= mu(x) <= nu(x) + eps at every point, eps the TV distance."""
    eps = tv_distance_to_uniform(img)[0]
    qN = img.q ** img.N
    qn = img.q ** img.n
    nu = Fraction(1, qN)
    for c in img.counts.values():
        mu = Fraction(c, qn)
        if not nu - eps <= mu <= nu + eps:
            return False
    if img.image_size < qN and not nu - eps <= 0:
        return False
    return True
