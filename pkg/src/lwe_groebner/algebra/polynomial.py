"""Sparse multivariate polynomials over a prime field."""
import math
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import ArityMismatch, ZeroInput
from .field import PrimeField
from .orders import DRL_ORDER, Monomial, TermOrder, divides, mono_div, mono_mul

NEG_INF = -math.inf


class Polynomial:
    """Immutable polynomial in ``nvars`` variables x1..xn over ``field``.

    ``terms`` maps exponent tuples to nonzero coefficients in [0, q).
    """

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: PrimeField, nvars: int, terms: Optional[Dict[Monomial, int]] = None):
        q = field.q
        clean = {}
        if terms:
            for e, c in terms.items():
                c %= q
                if c:
                    if len(e) != nvars:
                        raise ArityMismatch(f"exponent {e} in a ring with {nvars} variables")
                    clean[tuple(e)] = c
        self.field = field
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, nvars, terms):
        # caller guarantees canonical nonzero coefficients
        p = cls.__new__(cls)
        p.field, p.nvars, p.terms, p._hash = field, nvars, terms, None
        return p

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, field, nvars):
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, c):
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(field, nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, field, e, c=1):
        return cls(field, len(e), {tuple(e): c})

    @classmethod
    def univariate(cls, field, nvars, var, coeffs):
        """``coeffs[k]`` is the coefficient of x_var^k."""
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
        return cls(field, nvars, terms)

    @classmethod
    def from_roots(cls, field, nvars, var, roots):
        """Monic product of (x_var - r) over ``roots``."""
        coeffs = [1]
        q = field.q
        for r in roots:
            # multiply by (x - r)
            nxt = [0] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k + 1] = (nxt[k + 1] + c) % q
                nxt[k] = (nxt[k] - r * c) % q
            coeffs = nxt
        return cls.univariate(field, nvars, var, coeffs)

    # basic queries --------------------------------------------------------
    @property
    def q(self):
        return self.field.q

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return NEG_INF
        return max(e[var] for e in self.terms)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self, order: TermOrder = DRL_ORDER) -> Tuple[Monomial, int]:
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order: TermOrder = DRL_ORDER) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: TermOrder = DRL_ORDER) -> int:
        return self.leading_term(order)[1]

    def sorted_terms(self, order: TermOrder = DRL_ORDER):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: TermOrder = DRL_ORDER):
        if not self.terms:
            return self
        inv = self.field.inv(self.leading_coefficient(order))
        return self.scale(inv)

    # arithmetic -----------------------------------------------------------
    def _check(self, other):
        if self.nvars != other.nvars or self.field.q != other.field.q:
            raise ArityMismatch("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = (out.get(e, 0) + c) % q
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        q = self.q
        return Polynomial._raw(self.field, self.nvars, {e: q - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c %= self.q
        if c == 0:
            return Polynomial.zero(self.field, self.nvars)
        q = self.q
        return Polynomial._raw(self.field, self.nvars, {e: v * c % q for e, v in self.terms.items()})

    def shift(self, mono: Monomial, c: int = 1):
        """Return c * x^mono * self."""
        c %= self.q
        if c == 0:
            return Polynomial.zero(self.field, self.nvars)
        q = self.q
        return Polynomial._raw(
            self.field, self.nvars, {mono_mul(e, mono): v * c % q for e, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        out: Dict[Monomial, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                out[e] = (out.get(e, 0) + c1 * c2) % q
        return Polynomial(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.field, self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.field.q == other.field.q and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.q, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial(q={self.q}, n={self.nvars}, {to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # evaluation and substitution -----------------------------------------
    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.nvars:
            raise ArityMismatch(f"point of length {len(point)} for {self.nvars} variables")
        q = self.q
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * pow(x, k, q) % q
            total += v
        return total % q

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute x_i -> images[i]; the result lives in the images' ring."""
        if len(images) != self.nvars:
            raise ArityMismatch("need one image per variable")
        if not images:
            raise ArityMismatch("cannot compose a polynomial in zero variables")
        ring = images[0]
        result = Polynomial.zero(ring.field, ring.nvars)
        powers: List[Dict[int, Polynomial]] = [dict() for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        one = Polynomial.constant(ring.field, ring.nvars, 1)
        for e, c in self.terms.items():
            term = one
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term.scale(c)
        return result

    # structure ------------------------------------------------------------
    def homogeneous_component(self, d):
        return Polynomial._raw(self.field, self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def top_component(self):
        if not self.terms:
            raise ZeroInput("zero polynomial has no top component")
        return self.homogeneous_component(self.degree())

    def homogenize(self):
        """Homogenize with a new variable x0 appended as the last variable."""
        if not self.terms:
            raise ZeroInput("cannot homogenize the zero polynomial")
        d = self.degree()
        return Polynomial._raw(
            self.field, self.nvars + 1, {e + (d - sum(e),): c for e, c in self.terms.items()}
        )

    def dehomogenize(self, var: Optional[int] = None):
        """Set variable ``var`` (default: the last one) to 1 and drop it."""
        if var is None:
            var = self.nvars - 1
        out: Dict[Monomial, int] = {}
        for e, c in self.terms.items():
            f = e[:var] + e[var + 1:]
            out[f] = out.get(f, 0) + c
        return Polynomial(self.field, self.nvars - 1, out)

    def set_variable_zero(self, var: int):
        """Substitute x_var = 0 and drop the variable."""
        return Polynomial._raw(
            self.field,
            self.nvars - 1,
            {e[:var] + e[var + 1:]: c for e, c in self.terms.items() if e[var] == 0},
        )

    def extend(self, extra: int = 1):
        return Polynomial._raw(self.field, self.nvars + extra, {e + (0,) * extra: c for e, c in self.terms.items()})

    def truncate(self, caps: Sequence[int]):
        """Image in F_q[x]/(x_1^e_1, ..., x_n^e_n): drop terms with e_i >= caps[i]."""
        return Polynomial._raw(
            self.field,
            self.nvars,
            {e: c for e, c in self.terms.items() if all(x < k for x, k in zip(e, caps))},
        )


# -- division -----------------------------------------------------------------

def multivariate_divide(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder = DRL_ORDER):
    """Multivariate division with remainder.

    Returns ``(quotients, remainder)`` with f = sum(q_i g_i) + r and no term
    of r divisible by any leading monomial of the divisors.
    """
    if any(g.is_zero() for g in divisors):
        raise ZeroInput("division by the zero polynomial")
    for g in divisors:
        f._check(g)
    q = f.q
    field, n = f.field, f.nvars
    leads = [g.leading_term(order) for g in divisors]
    inv_lc = [pow(c, -1, q) for _, c in leads]
    quotients: List[Dict[Monomial, int]] = [dict() for _ in divisors]
    p = dict(f.terms)
    rem: Dict[Monomial, int] = {}
    key = order.key
    while p:
        e = max(p, key=key)
        c = p[e]
        for i, (lm, _) in enumerate(leads):
            if divides(lm, e):
                t = mono_div(e, lm)
                factor = c * inv_lc[i] % q
                quotients[i][t] = (quotients[i].get(t, 0) + factor) % q
                for ge, gc in divisors[i].terms.items():
                    m = mono_mul(ge, t)
                    v = (p.get(m, 0) - factor * gc) % q
                    if v:
                        p[m] = v
                    else:
                        p.pop(m, None)
                break
        else:
            rem[e] = c
            del p[e]
    return [Polynomial(field, n, qt) for qt in quotients], Polynomial._raw(field, n, rem)


def reduce(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder = DRL_ORDER) -> Polynomial:
    return multivariate_divide(f, divisors, order)[1]


def homogenize(f: Polynomial) -> Polynomial:
    return f.homogenize()


def top_component(f: Polynomial) -> Polynomial:
    return f.top_component()


# -- text / json I/O ---------------------------------------------------------

def _term_text(e, c):
    factors = []
    for i, k in enumerate(e):
        if k == 1:
            factors.append(f"x{i + 1}")
        elif k > 1:
            factors.append(f"x{i + 1}^{k}")
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    return "*".join([str(c)] + factors)


def to_text(f: Polynomial, order: TermOrder = DRL_ORDER) -> str:
    if f.is_zero():
        return "0"
    return " + ".join(_term_text(e, c) for e, c in f.sorted_terms(order))


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, field: PrimeField, nvars: int) -> Polynomial:
    """Parse ``c*x1^e1*...`` terms joined by ``+`` (a leading ``-`` per term is accepted)."""
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    text = text.replace("-", "+-")
    terms: Dict[Monomial, int] = {}
    for chunk in text.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coeff = 1
        e = [0] * nvars
        for factor in chunk.split("*"):
            m = _FACTOR.match(factor)
            if m:
                idx = int(m.group(1)) - 1
                if not 0 <= idx < nvars:
                    raise ArityMismatch(f"variable x{idx + 1} outside x1..x{nvars}")
                e[idx] += int(m.group(2) or 1)
            elif factor.isdigit():
                coeff *= int(factor)
            else:
                raise ValueError(f"cannot parse factor {factor!r}")
        key = tuple(e)
        terms[key] = terms.get(key, 0) + sign * coeff
    return Polynomial(field, nvars, terms)


def to_json_terms(f: Polynomial, order: TermOrder = DRL_ORDER) -> list:
    return [[c, list(e)] for e, c in f.sorted_terms(order)]


def from_json_terms(data: Iterable, field: PrimeField, nvars: int) -> Polynomial:
    terms: Dict[Monomial, int] = {}
    for c, e in data:
        key = tuple(int(x) for x in e)
        terms[key] = terms.get(key, 0) + int(c)
    return Polynomial(field, nvars, terms)


def system_to_json(polys: Sequence[Polynomial], **meta) -> dict:
    if not polys:
        raise ValueError("empty system")
    out = {"q": polys[0].q, "n": polys[0].nvars, "polys": [to_json_terms(f) for f in polys]}
    out.update(meta)
    return out


def system_from_json(data: dict):
    field = PrimeField(int(data["q"]))
    n = int(data["n"])
    return [from_json_terms(p, field, n) for p in data["polys"]]
