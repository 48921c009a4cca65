"""LWE instances and their Arora-Ge (affinely derived) polynomial systems."""
import math
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .algebra import DRL_ORDER, Polynomial, PrimeField, multivariate_divide
from .errors import DegreeExceedsField, EmptyDomain, NeedsCutoff
from .linalg import inverse_mod_p, rref

Domain = Union[str, Tuple[int, ...]]


@dataclass(frozen=True)
class LweParams:
    q: int
    n: int
    m: int
    sigma: float = 0.0
    t: Optional[float] = 3.0
    secret_domain: Domain = "uniform"
    error_domain: Domain = "gaussian"

    def __post_init__(self):
        PrimeField(self.q)
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be positive")
        if self.sigma < 0:
            raise ValueError("sigma must be non-negative")
        for name in ("secret_domain", "error_domain"):
            dom = getattr(self, name)
            if not isinstance(dom, str):
                dom = tuple(int(x) for x in dom)
                if not dom:
                    raise EmptyDomain(f"{name} is empty")
                object.__setattr__(self, name, dom)
        if self.secret_domain != "uniform" and isinstance(self.secret_domain, str):
            raise ValueError("secret_domain must be 'uniform' or a set of integers")
        if self.error_domain != "gaussian" and isinstance(self.error_domain, str):
            raise ValueError("error_domain must be 'gaussian' or a set of integers")
        if self.error_domain == "gaussian" and self.t is not None:
            if self.t <= 0:
                raise ValueError("tail cutoff t must be positive")
            if 2 * self.cutoff + 1 >= self.q:
                raise DegreeExceedsField(
                    f"error polynomial degree {2 * self.cutoff + 1} must stay below q={self.q}"
                )

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.q)

    @property
    def cutoff(self) -> int:
        """Integer tail bound ceil(t * sigma) for the Gaussian model."""
        if self.t is None:
            raise NeedsCutoff("Gaussian error model without a tail cutoff")
        return math.ceil(self.t * self.sigma - 1e-12)

    @property
    def error_degree(self) -> int:
        if self.error_domain == "gaussian":
            return 2 * self.cutoff + 1
        return len(set(x % self.q for x in self.error_domain))

    def to_dict(self):
        def dom(d):
            return d if isinstance(d, str) else list(d)

        return {
            "q": self.q, "n": self.n, "m": self.m, "sigma": self.sigma, "t": self.t,
            "secret_domain": dom(self.secret_domain), "error_domain": dom(self.error_domain),
        }


@dataclass
class LweInstance:
    params: LweParams
    A: List[List[int]]
    b: List[int]
    secret: Optional[List[int]] = None
    errors: Optional[List[int]] = None
    seed: Optional[int] = None

    @property
    def field(self):
        return self.params.field

    def errors_in_model(self) -> bool:
        """True when every planted error is a root of the univariate error model."""
        if self.errors is None:
            return False
        q = self.params.q
        if self.params.error_domain == "gaussian":
            t = self.params.cutoff
            return all(abs(self.field.lift(e)) <= t for e in self.errors)
        allowed = {x % q for x in self.params.error_domain}
        return all(e % q in allowed for e in self.errors)

    def check(self) -> bool:
        if self.secret is None or self.errors is None:
            return True
        q = self.params.q
        for row, bi, ei in zip(self.A, self.b, self.errors):
            if (sum(a * s for a, s in zip(row, self.secret)) + ei - bi) % q:
                return False
        return True

    def to_dict(self):
        p = self.params
        error_model = {"kind": "gaussian", "sigma": p.sigma, "t": p.t} if p.error_domain == "gaussian" \
            else {"kind": "set", "values": list(p.error_domain)}
        secret_model = {"kind": "uniform"} if p.secret_domain == "uniform" \
            else {"kind": "set", "values": list(p.secret_domain)}
        out = {
            "q": p.q, "n": p.n, "m": p.m, "A": self.A, "b": self.b,
            "seed": self.seed, "error_model": error_model, "secret_model": secret_model,
        }
        if self.secret is not None:
            out["secret"] = self.secret
        if self.errors is not None:
            out["errors"] = self.errors
        return out

    @classmethod
    def from_dict(cls, data):
        em = data.get("error_model", {"kind": "gaussian", "sigma": 0.0, "t": 3.0})
        sm = data.get("secret_model", {"kind": "uniform"})
        if em["kind"] == "gaussian":
            sigma, t, edom = float(em.get("sigma", 0.0)), em.get("t", 3.0), "gaussian"
        else:
            sigma, t, edom = 0.0, None, tuple(em["values"])
        sdom = "uniform" if sm["kind"] == "uniform" else tuple(sm["values"])
        params = LweParams(int(data["q"]), int(data["n"]), int(data["m"]), sigma, t, sdom, edom)
        return cls(
            params,
            [[int(x) for x in row] for row in data["A"]],
            [int(x) for x in data["b"]],
            data.get("secret"),
            data.get("errors"),
            data.get("seed"),
        )


def sample_instance(params: LweParams, seed: int) -> LweInstance:
    """Draw A uniformly, s from the secret model and e from the error model.

    Gaussian errors are continuous N(0, sigma) draws rounded to the nearest
    integer; draws beyond the cutoff are kept.
    """
    rng = np.random.default_rng(seed)
    q, n, m = params.q, params.n, params.m
    A = rng.integers(0, q, size=(m, n), dtype=np.int64)
    if params.secret_domain == "uniform":
        s = rng.integers(0, q, size=n, dtype=np.int64)
    else:
        s = np.asarray(rng.choice(np.asarray(params.secret_domain, dtype=np.int64), size=n)) % q
    if params.error_domain == "gaussian":
        if params.sigma == 0:
            e = np.zeros(m, dtype=np.int64)
        else:
            e = np.rint(rng.normal(0.0, params.sigma, size=m)).astype(np.int64)
    else:
        e = np.asarray(rng.choice(np.asarray(params.error_domain, dtype=np.int64), size=m))
    e %= q
    A, s, e = A.tolist(), [int(x) for x in s], [int(x) for x in e]
    b = [(sum(a * x for a, x in zip(row, s)) + ei) % q for row, ei in zip(A, e)]
    return LweInstance(params, A, b, s, e, seed)


def sample_full_rank(params: LweParams, seed: int, max_tries: int = 1000):
    """Resample with seed, seed+1, ... until the sample matrix has rank n."""
    for k in range(max_tries):
        inst = sample_instance(params, seed + k)
        if sample_rank(inst) == params.n:
            return inst
    raise RuntimeError(f"no full-rank instance within {max_tries} seeds")


def sample_rank(inst: LweInstance) -> int:
    return rref(np.asarray(inst.A, dtype=np.int64), inst.params.q)[1]


# -- univariate models --------------------------------------------------------

def error_polynomial(t_cutoff: int, field: PrimeField, nvars: int = 1, var: int = 0) -> Polynomial:
    """x * prod_{i=1..t} (x + i)(x - i): vanishes exactly on {-t, ..., t}."""
    if t_cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    if 2 * t_cutoff + 1 >= field.q:
        raise DegreeExceedsField(f"degree {2 * t_cutoff + 1} >= q = {field.q}")
    roots = [0] + [r for i in range(1, t_cutoff + 1) for r in (i, -i)]
    return Polynomial.from_roots(field, nvars, var, roots)


def domain_polynomial(domain: Sequence[int], field: PrimeField, nvars: int = 1, var: int = 0) -> Polynomial:
    """Monic prod_{s in domain} (x_var - s); duplicates mod q are merged."""
    values = sorted({int(s) % field.q for s in domain})
    if not values:
        raise EmptyDomain("domain polynomial of an empty set")
    return Polynomial.from_roots(field, nvars, var, values)


# -- affinely derived systems -------------------------------------------------

@dataclass
class AffineSystem:
    """Generators g_i(a_i^T x + b_i) with univariate g_i (stored in one variable)."""

    field: PrimeField
    nvars: int
    generators: List[Tuple[Polynomial, Tuple[int, ...], int]]
    expanded: List[Polynomial] = dc_field(default_factory=list)

    def __post_init__(self):
        if not self.expanded:
            self.expanded = [expand_generator(g, a, b, self.field, self.nvars) for g, a, b in self.generators]

    @property
    def matrix(self):
        return [list(a) for _, a, _ in self.generators]


def affine_form(a: Sequence[int], b: int, field: PrimeField, nvars: int) -> Polynomial:
    terms = {(0,) * nvars: b}
    for i, ai in enumerate(a):
        e = [0] * nvars
        e[i] = 1
        terms[tuple(e)] = ai
    return Polynomial(field, nvars, terms)


def expand_generator(g: Polynomial, a, b, field, nvars) -> Polynomial:
    """g(a^T x + b) expanded by Horner's rule."""
    lin = affine_form(a, b, field, nvars)
    coeffs = [0] * (max(e[0] for e in g.terms) + 1) if g.terms else [0]
    for e, c in g.terms.items():
        coeffs[e[0]] = c
    result = Polynomial.zero(field, nvars)
    for c in reversed(coeffs):
        result = result * lin + c
    return result


def build_arora_ge(inst: LweInstance) -> AffineSystem:
    """One polynomial f(b_i - a_i^T x) per sample, f the univariate error model."""
    p = inst.params
    F = p.field
    if p.error_domain == "gaussian":
        if p.t is None:
            raise NeedsCutoff("Gaussian errors need a tail cutoff t")
        g = error_polynomial(p.cutoff, F)
    else:
        g = domain_polynomial(p.error_domain, F)
    gens = [(g, tuple((-a) % p.q for a in row), bi % p.q) for row, bi in zip(inst.A, inst.b)]
    return AffineSystem(F, p.n, gens)


def secret_domain_polynomials(inst: LweInstance) -> List[Polynomial]:
    p = inst.params
    if p.secret_domain == "uniform":
        return []
    return [domain_polynomial(p.secret_domain, p.field, p.n, i) for i in range(p.n)]


@dataclass
class AffineTransform:
    """Variable change y = M x + c with inverse x = M_inv (y - c)."""

    field: PrimeField
    M: np.ndarray
    c: Tuple[int, ...]
    M_inv: np.ndarray
    rows: Tuple[int, ...]

    def _images(self, mat, shift):
        q = self.field.q
        n = mat.shape[0]
        return [affine_form([int(v) for v in mat[i]], int(shift[i]) % q, self.field, n) for i in range(n)]

    def forward_images(self):
        """x_i expressed in y."""
        shift = [-v for v in _matvec(self.M_inv, self.c, self.field.q)]
        return self._images(self.M_inv, shift)

    def backward_images(self):
        """y_i expressed in x."""
        return self._images(self.M, self.c)

    def to_y(self, f: Polynomial) -> Polynomial:
        return f.compose(self.forward_images())

    def to_x(self, f: Polynomial) -> Polynomial:
        return f.compose(self.backward_images())


def rank_and_transform(system: AffineSystem):
    """Rank of the stacked a_i and, when it is n, the straightening change of variables.

    Returns ``(rank, transform, transformed)``; the last two are None when
    the rank is deficient. In the transformed system the generators indexed
    by ``transform.rows`` are univariate g(y_j).
    """
    q, n = system.field.q, system.nvars
    A = np.asarray(system.matrix, dtype=np.int64).reshape(len(system.generators), n) % q
    _, rank, _ = rref(A, q)
    if rank < n:
        return rank, None, None
    chosen = []
    for i in range(A.shape[0]):
        trial = chosen + [i]
        if rref(A[trial], q)[1] == len(trial):
            chosen = trial
            if len(chosen) == n:
                break
    M = A[chosen]
    c = tuple(system.generators[i][2] for i in chosen)
    M_inv = inverse_mod_p(M, q)
    transform = AffineTransform(system.field, M, c, M_inv, tuple(chosen))
    gens = []
    for g, a, b in system.generators:
        # a^T x + b = (a^T M_inv) y + (b - a^T M_inv c)
        a_new = _matvec(M_inv.T, a, q)
        b_new = (b - sum(x * y for x, y in zip(a_new, c))) % q
        gens.append((g, tuple(a_new), b_new))
    return rank, transform, AffineSystem(system.field, n, gens)


def _matvec(M, v, q):
    return [sum(int(x) * int(y) for x, y in zip(row, v)) % q for row in M]


def reduce_by_domain(system, domain_polys: Sequence[Polynomial]) -> List[Polynomial]:
    """DRL remainders of the system's polynomials modulo univariate domain polynomials."""
    polys = system.expanded if isinstance(system, AffineSystem) else system
    return [multivariate_divide(f, domain_polys, DRL_ORDER)[1] for f in polys]
