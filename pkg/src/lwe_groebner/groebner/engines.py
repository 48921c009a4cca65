"""Linear-algebra Groebner engines: plain Macaulay elimination and the refined fixed point."""
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..algebra import DRL_ORDER, Polynomial, TermOrder
from ..errors import CapExceeded, DegreeTooLow
from .buchberger import GroebnerResult, interreduce, is_groebner_basis, minimalize
from .macaulay import MAX_COLUMNS, _ring_of, build_macaulay


@dataclass(frozen=True)
class NotYet:
    """Refined iteration stabilised without containing a Groebner basis."""

    degree: int
    rank: int

    def __bool__(self):
        return False


def macaulay_bound(degrees: Sequence[int], nvars: int) -> int:
    """sum_{i <= min(m, n+1)} (d_i - 1) + 1 over the largest degrees."""
    ds = sorted((int(d) for d in degrees), reverse=True)[: nvars + 1]
    return sum(d - 1 for d in ds) + 1


def system_macaulay_bound(F: Sequence[Polynomial]) -> int:
    _, n = _ring_of(F)
    return macaulay_bound([f.degree() for f in F if not f.is_zero()], n)


def _max_degree(F):
    return max(int(f.degree()) for f in F if not f.is_zero())


def _gb_from_rows(rows: List[Polynomial], F, order, d) -> Optional[GroebnerResult]:
    if any(r.is_constant() for r in rows):
        one = Polynomial.constant(rows[0].field, rows[0].nvars, 1)
        return GroebnerResult([one], order, d, True)
    cand = minimalize(rows, order)
    if not is_groebner_basis(cand, order, generators=F):
        return None
    return GroebnerResult(interreduce(cand, order), order, d, True)


def lazard_solve(
    F: Sequence[Polynomial],
    order: TermOrder = DRL_ORDER,
    d_start: Optional[int] = None,
    d_cap: Optional[int] = None,
    max_columns: int = MAX_COLUMNS,
):
    """Eliminate M_{<=d} for d = d_start, d_start + 1, ... until its rows contain a Groebner basis.

    Returns ``(result, solving_degree)``. The cap defaults to the Macaulay
    bound (never below the largest generator degree).
    """
    F = [f for f in F if not f.is_zero()]
    _ring_of(F)
    top = _max_degree(F)
    if d_start is None:
        d_start = top
    if d_start < top:
        raise DegreeTooLow(f"d_start={d_start} is below the largest generator degree {top}")
    if d_cap is None:
        d_cap = max(system_macaulay_bound(F), top)
    profile = []
    for d in range(d_start, d_cap + 1):
        M = build_macaulay(F, d, order, max_columns=max_columns)
        rows = M.echelon()
        profile.append({"d": d, "rows": M.shape[0], "columns": M.shape[1], "rank": len(rows)})
        res = _gb_from_rows(rows, F, order, d)
        if res is not None:
            res.stats["profile"] = profile
            return res, d
    raise CapExceeded(f"no Groebner basis in M_<=d up to d={d_cap}", {"profile": profile, "cap": d_cap})


def refined_solve(F: Sequence[Polynomial], order: TermOrder = DRL_ORDER, d: int = None,
                  max_columns: int = MAX_COLUMNS):
    """Rebuild M_{<=d} from the current row basis until the row space stops growing.

    Returns ``(result, iterations)``; ``result`` is a :class:`NotYet` when the
    stable row space holds no Groebner basis.
    """
    F = [f for f in F if not f.is_zero()]
    _ring_of(F)
    if d is None:
        d = _max_degree(F)
    if d < _max_degree(F):
        raise DegreeTooLow(f"d={d} is below the largest generator degree")
    B = F
    prev = None
    iterations = 0
    while True:
        rows = build_macaulay(B, d, order, max_columns=max_columns).echelon()
        iterations += 1
        if any(r.is_constant() for r in rows) or len(rows) == prev:
            break
        prev = len(rows)
        B = rows
    res = _gb_from_rows(rows, F, order, d)
    if res is None:
        return NotYet(d, len(rows)), iterations
    res.stats["iterations"] = iterations
    return res, iterations


def refined_solving_degree(F: Sequence[Polynomial], order: TermOrder = DRL_ORDER,
                           d_start: Optional[int] = None, d_cap: Optional[int] = None,
                           max_columns: int = MAX_COLUMNS):
    """Least d at which :func:`refined_solve` succeeds. Returns ``(result, d, iterations)``."""
    F = [f for f in F if not f.is_zero()]
    top = _max_degree(F)
    d_start = top if d_start is None else d_start
    if d_cap is None:
        d_cap = max(system_macaulay_bound(F), top)
    tried = []
    for d in range(d_start, d_cap + 1):
        res, it = refined_solve(F, order, d, max_columns)
        tried.append({"d": d, "iterations": it, "success": bool(res)})
        if res:
            return res, d, it
    raise CapExceeded(f"refined iteration found no Groebner basis up to d={d_cap}", {"profile": tried, "cap": d_cap})
