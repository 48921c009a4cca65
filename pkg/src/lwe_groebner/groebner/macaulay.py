"""Macaulay matrices of polynomial systems."""
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..algebra import DRL_ORDER, Monomial, Polynomial, PrimeField, TermOrder, mono_mul
from ..algebra.orders import monomials_of_degree, sorted_monomials
from ..errors import ArityMismatch, DegreeTooLow, TooLarge, ZeroInput
from ..linalg import rref

MAX_COLUMNS = 200_000
MAX_CELLS = 60_000_000


@dataclass
class MacaulayMatrix:
    field: PrimeField
    nvars: int
    degree_bound: int
    homogeneous: bool
    order: TermOrder
    columns: List[Monomial]
    rows: np.ndarray
    row_labels: List[Tuple[int, Monomial]]

    @property
    def shape(self):
        return self.rows.shape

    def row_polynomial(self, i: int) -> Polynomial:
        return vector_to_polynomial(self.rows[i], self.columns, self.field, self.nvars)

    def echelon(self):
        """Nonzero RREF rows as polynomials, in decreasing leading-monomial order."""
        R, rank, _ = rref(self.rows, self.field.q)
        return [vector_to_polynomial(R[i], self.columns, self.field, self.nvars) for i in range(rank)]

    def rank(self) -> int:
        return rref(self.rows, self.field.q)[1]


def vector_to_polynomial(vec, columns, field, nvars) -> Polynomial:
    nz = np.flatnonzero(vec)
    return Polynomial._raw(field, nvars, {columns[j]: int(vec[j]) for j in nz})


def count_columns(nvars: int, d: int, homogeneous: bool) -> int:
    if homogeneous:
        return comb(nvars + d - 1, d) if d >= 0 else 0
    return comb(nvars + d, d)


def _ring_of(F: Sequence[Polynomial]):
    if not F:
        raise ZeroInput("empty polynomial system")
    field, n = F[0].field, F[0].nvars
    for f in F:
        if f.nvars != n or f.field.q != field.q:
            raise ArityMismatch("polynomials live in different rings")
    return field, n


def build_macaulay(
    F: Sequence[Polynomial],
    d: int,
    order: TermOrder = DRL_ORDER,
    homogeneous: bool = False,
    caps: Optional[Sequence[int]] = None,
    max_columns: int = MAX_COLUMNS,
) -> MacaulayMatrix:
    """Rows s * f_i with deg(s * f_i) <= d (or == d when ``homogeneous``).

    Rows are ordered by generator index, then shift monomial descending;
    columns are all monomials of the relevant degrees in descending order.
    With ``caps`` everything lives in the quotient by x_i^caps[i]: shifts,
    products and columns only keep exponents below the caps. Zero
    generators are skipped.
    """
    field, n = _ring_of(F)
    F = [f for f in F if not f.is_zero()]
    if homogeneous:
        for f in F:
            if not f.is_homogeneous():
                raise ValueError("homogeneous Macaulay matrix needs homogeneous generators")
    elif F and d < max(f.degree() for f in F):
        raise DegreeTooLow(f"degree bound {d} is below the largest generator degree")
    if d < 0:
        raise DegreeTooLow("negative degree bound")

    ncols = count_columns(n, d, homogeneous)
    if ncols > max_columns:
        raise TooLarge(f"{ncols} columns exceed the limit of {max_columns}")
    degrees = [d] if homogeneous else range(d, -1, -1)
    columns = []
    for k in degrees:
        columns.extend(sorted_monomials(monomials_of_degree(n, k, caps), order))
    index = {m: j for j, m in enumerate(columns)}

    labels = []
    for i, f in enumerate(F):
        df = f.degree()
        if df > d:
            continue
        shifts = []
        for k in ([d - df] if homogeneous else range(d - df, -1, -1)):
            shifts.extend(monomials_of_degree(n, k, caps))
        for s in sorted_monomials(shifts, order):
            labels.append((i, s))
    if len(labels) * max(len(columns), 1) > MAX_CELLS:
        raise TooLarge(f"{len(labels)} x {len(columns)} matrix exceeds the cell limit")

    rows = np.zeros((len(labels), len(columns)), dtype=np.int64)
    for r, (i, s) in enumerate(labels):
        for e, c in F[i].terms.items():
            prod = mono_mul(e, s)
            j = index.get(prod)
            if j is not None:
                rows[r, j] = c
            elif caps is None:
                raise AssertionError("product monomial missing from the column index")
    return MacaulayMatrix(field, n, d, homogeneous, order, columns, rows, labels)
