"""Side-information hints as transformations of LWE polynomial systems."""
import json
import math
from dataclasses import asdict, dataclass
from itertools import product
from typing import List, Optional, Sequence, Tuple, Union

from .algebra import Polynomial
from .errors import DegreeExceedsField, EmptyDomain, HintTooWide, NullHint
from .lwe_model import affine_form, domain_polynomial, error_polynomial, expand_generator

MAX_ENUMERATION = 1_000_000
REPRESENTATIONS = ("signed16", "signed_interval")


@dataclass(frozen=True)
class Perfect:
    """<s, v> = l."""

    v: Tuple[int, ...]
    l: int
    kind = "perfect"


@dataclass(frozen=True)
class Modular:
    """<s, v> = l mod k, with s and v read as integers."""

    v: Tuple[int, ...]
    l: int
    k: int
    kind = "modular"

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("modulus must be at least 2")


@dataclass(frozen=True)
class Approximate:
    """<s, v> = l + e with e of width sigma_e."""

    v: Tuple[int, ...]
    l: int
    sigma_e: float
    kind = "approximate"

    def __post_init__(self):
        if self.sigma_e < 0:
            raise ValueError("sigma_e must be non-negative")


@dataclass(frozen=True)
class HammingWeight:
    var: int
    weight: int
    representation: str = "signed16"
    kind = "hamming"

    def __post_init__(self):
        if self.representation not in REPRESENTATIONS:
            raise ValueError(f"unknown representation {self.representation!r}")
        if not 0 <= self.weight <= 16:
            raise ValueError("weight must lie in [0, 16]")


Hint = Union[Perfect, Modular, Approximate, HammingWeight]


# -- Hamming weights ----------------------------------------------------------

def hamming_weight(value: int, representation: str = "signed16") -> int:
    """Bit count of ``value`` stored as a 16-bit signed integer.

    ``signed16`` uses the two's-complement pattern; ``signed_interval``
    uses sign and magnitude (one sign bit plus the bits of |value|).
    """
    if representation == "signed16":
        if not -(1 << 15) <= value < (1 << 15):
            raise ValueError(f"{value} does not fit in 16 bits")
        return bin(value & 0xFFFF).count("1")
    if representation == "signed_interval":
        return bin(abs(value)).count("1") + (1 if value < 0 else 0)
    raise ValueError(f"unknown representation {representation!r}")


def hamming_candidates(domain: Sequence[int], weight: int, representation: str = "signed16") -> List[int]:
    if not domain:
        raise EmptyDomain("empty domain")
    return sorted(v for v in set(domain) if hamming_weight(v, representation) == weight)


# -- system transforms --------------------------------------------------------

def _ring(system):
    if not system:
        raise ValueError("empty system")
    return system[0].field, system[0].nvars


def apply_perfect(system: Sequence[Polynomial], hint: Perfect):
    """Substitute out the first variable with a nonzero coefficient in v.

    Returns ``(system', j)``; the result lives in the remaining n - 1
    variables (in their original order).
    """
    field, n = _ring(system)
    v = [int(x) % field.q for x in hint.v]
    if len(v) != n:
        raise ValueError("hint vector length differs from the number of variables")
    j = next((i for i, x in enumerate(v) if x), None)
    if j is None:
        raise NullHint("perfect hint with v = 0")
    inv = field.inv(v[j])
    # x_j = inv * (l - sum_{i != j} v_i x_i), written in the n - 1 remaining variables
    rest = [i for i in range(n) if i != j]
    coeffs = [(-inv * v[i]) % field.q for i in rest]
    xj = affine_form(coeffs, inv * hint.l % field.q, field, n - 1)
    images = []
    for i in range(n):
        if i == j:
            images.append(xj)
        else:
            images.append(Polynomial.variable(field, n - 1, rest.index(i)))
    return [f.compose(images) for f in system], j


def project_point(point: Sequence[int], j: int) -> List[int]:
    return [x for i, x in enumerate(point) if i != j]


def _univariate_in(f: Polynomial, var: int) -> bool:
    return f.variables() == [var]


def apply_value_set(system: Sequence[Polynomial], var: int, values: Sequence[int]) -> List[Polynomial]:
    """Restrict x_var to ``values`` by a univariate polynomial.

    An existing univariate polynomial in x_var is replaced by the one
    vanishing on its roots among ``values``, so the degree never grows.
    """
    field, n = _ring(system)
    vals = sorted({int(v) % field.q for v in values})
    if not vals:
        raise EmptyDomain("empty value set")
    out = []
    existing = None
    for f in system:
        if existing is None and _univariate_in(f, var):
            existing = f
        else:
            out.append(f)
    if existing is not None:
        point = [0] * n
        keep = []
        for v in vals:
            point[var] = v
            if existing.evaluate(point) == 0:
                keep.append(v)
        if not keep:
            raise EmptyDomain("hint values are disjoint from the current domain")
        if len(keep) > existing.degree():
            return list(system)
        vals = keep
    out.append(domain_polynomial(vals, field, n, var))
    return out


def _enumerate_inner_products(v, domains):
    active = [i for i, x in enumerate(v) if x]
    size = math.prod(len(domains[i]) for i in active)
    if size > MAX_ENUMERATION:
        raise HintTooWide(f"{size} secret candidates exceed the enumeration limit")
    sums = set()
    for combo in product(*(domains[i] for i in active)):
        sums.add(sum(v[i] * s for i, s in zip(active, combo)))
    return sums


def apply_modular(system: Sequence[Polynomial], hint: Modular, domains: Sequence[Sequence[int]]) -> List[Polynomial]:
    """Append prod_{w in Omega} (<v, x> - w) where Omega holds the admissible values of <s, v>."""
    field, n = _ring(system)
    if len(hint.v) != n or len(domains) != n:
        raise ValueError("hint and domains must cover every variable")
    if not any(hint.v):
        raise NullHint("modular hint with v = 0")
    sums = _enumerate_inner_products([int(x) for x in hint.v], domains)
    omega = sorted({s % field.q for s in sums if (s - hint.l) % hint.k == 0})
    if not omega:
        raise EmptyDomain("no secret candidate satisfies the modular hint")
    g = Polynomial.from_roots(field, 1, 0, omega)
    return list(system) + [expand_generator(g, [int(x) % field.q for x in hint.v], 0, field, n)]


def apply_approximate(system: Sequence[Polynomial], hint: Approximate, t: float = 3.0) -> List[Polynomial]:
    """Append f(l - <v, x>) with f the error polynomial of cutoff ceil(t sigma_e)."""
    field, n = _ring(system)
    if len(hint.v) != n:
        raise ValueError("hint vector length differs from the number of variables")
    cutoff = math.ceil(t * hint.sigma_e - 1e-12)
    if 2 * cutoff + 1 >= field.q:
        raise DegreeExceedsField(f"hint polynomial degree {2 * cutoff + 1} >= q = {field.q}")
    g = error_polynomial(cutoff, field)
    a = [(-int(x)) % field.q for x in hint.v]
    return list(system) + [expand_generator(g, a, hint.l % field.q, field, n)]


def apply_hamming(system: Sequence[Polynomial], hint: HammingWeight, domain: Sequence[int]) -> List[Polynomial]:
    vals = hamming_candidates(domain, hint.weight, hint.representation)
    if not vals:
        raise EmptyDomain("no domain value has the hinted Hamming weight")
    return apply_value_set(system, hint.var, vals)


def apply_hints(system: Sequence[Polynomial], hints: Sequence[Hint], domain: Optional[Sequence[int]] = None,
                t: float = 3.0):
    """Apply hints in order. Returns ``(system', eliminated)``.

    ``domain`` is the per-coordinate secret domain, used by Hamming and
    modular hints. Indices in later hints refer to the variables left
    after earlier perfect hints.
    """
    system = list(system)
    eliminated = []
    for h in hints:
        n = system[0].nvars
        if isinstance(h, Perfect):
            system, j = apply_perfect(system, h)
            eliminated.append(j)
        elif isinstance(h, Modular):
            if domain is None:
                raise ValueError("modular hints need the secret domain")
            system = apply_modular(system, h, [list(domain)] * n)
        elif isinstance(h, Approximate):
            system = apply_approximate(system, h, t)
        elif isinstance(h, HammingWeight):
            if domain is None:
                raise ValueError("Hamming-weight hints need the secret domain")
            system = apply_hamming(system, h, domain)
        else:
            raise TypeError(f"unsupported hint {h!r}")
    return system, eliminated


# -- JSON ---------------------------------------------------------------------

def hint_to_json(h: Hint) -> dict:
    if isinstance(h, HammingWeight):
        return {"kind": "hamming", "var": h.var, "weight": h.weight, "repr": h.representation}
    out = {"kind": h.kind}
    out.update({k: (list(v) if isinstance(v, tuple) else v) for k, v in asdict(h).items()})
    return out


def hint_from_json(d: dict) -> Hint:
    kind = d["kind"]
    if kind == "perfect":
        return Perfect(tuple(int(x) for x in d["v"]), int(d["l"]))
    if kind == "modular":
        return Modular(tuple(int(x) for x in d["v"]), int(d["l"]), int(d["k"]))
    if kind == "approximate":
        return Approximate(tuple(int(x) for x in d["v"]), int(d["l"]), float(d["sigma_e"]))
    if kind == "hamming":
        return HammingWeight(int(d["var"]), int(d["weight"]), d.get("repr", "signed16"))
    raise ValueError(f"unknown hint kind {kind!r}")


def load_hints(text: str) -> List[Hint]:
    return [hint_from_json(d) for d in json.loads(text)]


def dump_hints(hints: Sequence[Hint]) -> str:
    return json.dumps([hint_to_json(h) for h in hints])
