"""Command-line interface: ``lwe-groebner <subcommand> ...``."""
import argparse
import json
import math
import sys
from typing import List, Optional

from . import __version__
from . import estimator as est
from . import reference_values as ref
from .algebra import DRL_ORDER, PrimeField, system_from_json, system_to_json
from .dist_analysis import coeff_map_image, tv_distance_to_uniform
from .errors import CapExceeded, LweGroebnerError
from .groebner import (
    MAX_COLUMNS, buchberger, degree_of_regularity, extract_solutions, generic_coordinates_test,
    lazard_solve, refined_solving_degree, regularity_basis, system_macaulay_bound,
)
from .hints import apply_hints, load_hints
from .lwe_model import (
    LweInstance, LweParams, build_arora_ge, sample_full_rank, sample_instance, sample_rank,
    secret_domain_polynomials,
)

EXIT_OK, EXIT_USAGE, EXIT_TOLERANCE, EXIT_CAP = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _meta(args) -> dict:
    config = {k: v for k, v in sorted(vars(args).items()) if k not in ("func",)}
    return {"version": __version__, "seed": getattr(args, "seed", None), "config": config}


def _emit(args, payload: dict, table_rows: Optional[List[List[str]]] = None):
    payload = dict(payload)
    payload["meta"] = _meta(args)
    if args.format == "table" and table_rows is not None:
        text = _table(table_rows)
    elif args.format == "table":
        text = "\n".join(f"{k}: {json.dumps(v, default=str)}" for k, v in payload.items())
    else:
        text = json.dumps(payload, indent=2, sort_keys=True, default=str)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _table(rows: List[List[str]]) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(len(r) for r in rows))]
    lines = []
    for k, r in enumerate(rows):
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(r)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# -- gen / build ----------------------------------------------------------------

def _params_from_args(args) -> LweParams:
    if args.error_set is not None:
        edom, sigma, t = tuple(args.error_set), 0.0, None
    else:
        edom, sigma, t = "gaussian", args.sigma, args.t
    sdom = tuple(args.secret_set) if args.secret_set is not None else "uniform"
    return LweParams(args.q, args.n, args.m, sigma, t, sdom, edom)


def cmd_gen(args):
    params = _params_from_args(args)
    if args.resample_until_full_rank:
        inst = sample_full_rank(params, args.seed)
    else:
        inst = sample_instance(params, args.seed)
    data = inst.to_dict()
    data["rank"] = sample_rank(inst)
    _emit(args, data)
    return EXIT_OK


def _load_system(path):
    """Instance JSON -> (system, instance); system JSON -> (system, None)."""
    data = _load_json(path)
    if "A" in data:
        inst = LweInstance.from_dict(data)
        return build_arora_ge(inst).expanded + secret_domain_polynomials(inst), inst
    return system_from_json(data), None


def cmd_build(args):
    inst = LweInstance.from_dict(_load_json(args.input))
    system = build_arora_ge(inst)
    polys = system.expanded + secret_domain_polynomials(inst)
    _emit(args, system_to_json(polys, samples=len(system.expanded), seed=inst.seed))
    return EXIT_OK


# -- solve / dreg ---------------------------------------------------------------

def cmd_solve(args):
    F, inst = _load_system(args.input)
    report = {"status": "ok"}
    if inst is not None:
        rank = sample_rank(inst)
        report["rank"] = rank
        if rank < inst.params.n:
            report["status"] = "RankDeficient"
            _emit(args, report)
            return EXIT_OK
    cap = args.cap_degree
    report["macaulay_bound"] = system_macaulay_bound(F)
    try:
        res, sd = lazard_solve(F, DRL_ORDER, d_cap=cap, max_columns=args.cap_columns)
    except CapExceeded as exc:
        report.update(status="CapExceeded", detail=str(exc), profile=exc.profile)
        _emit(args, report)
        return EXIT_CAP
    report["solving_degree"] = sd
    report["basis_size"] = len(res.basis)
    try:
        _, rsd, it = refined_solving_degree(F, DRL_ORDER, d_cap=sd, max_columns=args.cap_columns)
        report["refined_solving_degree"] = rsd
        report["refined_iterations"] = it
    except CapExceeded:
        report["refined_solving_degree"] = None
    dcap = cap if cap is not None else report["macaulay_bound"]
    prof = degree_of_regularity(F, dcap, max_columns=args.cap_columns)
    report["d_reg"] = prof.to_dict()["d_reg"]
    if res.is_unit:
        report["generic_coordinates"] = "UnitIdeal"
        report["solutions"] = []
    else:
        report["generic_coordinates"] = generic_coordinates_test(F, dcap, basis=res.basis)
        report["solutions"] = [list(p) for p in extract_solutions(res)]
    # degree bound on S-polynomials holds for Buchberger started from the regularity basis
    raw = buchberger(F).s_poly_max_degree
    if prof.finite and prof.d_reg >= max((f.degree() for f in F if not f.is_zero()), default=0):
        report["s_poly_max_degree"] = buchberger(regularity_basis(F, prof.d_reg)).s_poly_max_degree
    else:
        report["s_poly_max_degree"] = raw
    report["s_poly_max_degree_raw_input"] = raw
    report["basis"] = [[[c, list(e)] for e, c in g.sorted_terms()] for g in res.basis]
    if inst is not None and inst.secret is not None:
        report["planted_secret"] = inst.secret
        report["secret_recovered"] = [s % inst.params.q for s in inst.secret] in report["solutions"]
        report["errors_in_model"] = inst.errors_in_model()
    _emit(args, report)
    return EXIT_OK


def cmd_dreg(args):
    F, _ = _load_system(args.input)
    cap = args.cap_degree if args.cap_degree is not None else system_macaulay_bound(F)
    prof = degree_of_regularity(F, cap, args.quotient_cap, max_columns=args.cap_columns)
    _emit(args, prof.to_dict())
    return EXIT_OK


# -- estimate -------------------------------------------------------------------

def _report_rows(r: est.ComplexityReport):
    rows = [["field", "value"]]
    for k, v in r.numeric_fields().items():
        rows.append([k, f"{v:.2f}" if isinstance(v, float) else v])
    for k, v in r.probabilities.items():
        rows.append([k, f"{v:.6g}"])
    return rows


def cmd_estimate(args):
    q = est.EstimationQuery(
        n=args.n, m=args.m, D=args.D, variant=args.variant, omega=args.omega,
        sigma=args.sigma, t=args.t, perfect_hints=args.hints, D_secret=args.D_secret,
    )
    r = est.estimate(q)
    _emit(args, r.to_dict(), _report_rows(r))
    return EXIT_OK


# -- hints / dist ---------------------------------------------------------------

def cmd_hints_apply(args):
    F, inst = _load_system(args.input)
    with open(args.hints, encoding="utf-8") as fh:
        hints = load_hints(fh.read())
    domain = args.domain
    if domain is None and inst is not None and inst.params.secret_domain != "uniform":
        domain = list(inst.params.secret_domain)
    out, eliminated = apply_hints(F, hints, domain, args.t)
    _emit(args, system_to_json(out, eliminated=eliminated))
    return EXIT_OK


def cmd_dist(args):
    img = coeff_map_image(args.n, args.d, PrimeField(args.q))
    exact, lower = tv_distance_to_uniform(img)
    _emit(args, {
        "q": args.q, "n": args.n, "d": args.d, "N": img.N,
        "image_size": img.image_size, "q^N": args.q ** img.N,
        "exact_tv": str(exact), "exact_tv_float": float(exact),
        "lower_bound": str(lower), "lower_bound_float": float(lower),
    })
    return EXIT_OK


# -- reproduce ------------------------------------------------------------------

def _cell(key, reference, computed, tol, note=None):
    delta = None if computed is None else computed - reference
    ok = delta is not None and abs(delta) <= tol
    return {"cell": key, "reference": reference, "computed": computed, "delta": delta, "tolerance": tol,
            "within_tolerance": ok, "known_discrepancy": note}


def _rounded(x):
    return math.ceil(x - 1e-9) if isinstance(x, float) else x


def reproduce_kyber768(omega=2.0):
    r768 = est.kyber768_report("768", omega)
    r4 = est.kyber768_report("768^4", omega)
    r1536 = est.kyber768_report("1536", omega)
    computed = {
        "macaulay_bound": r768.macaulay_bound,
        "proven_bits@768": r768.proven_bits,
        "proven_bits@768^4": r4.proven_bits,
        "d_reg@768^4": r4.d_reg_lowest,
        "optimistic_bits@768^4": r4.optimistic_bits,
        "lowest_bits@768^4": r4.lowest_achievable_bits,
        "d_reg@768": r768.d_reg_lowest,
        "optimistic_bits@768": r768.optimistic_bits,
        "lowest_bits@768": r768.lowest_achievable_bits,
    }
    cells = [_cell(c.key, c.value, computed[c.key], c.tolerance, c.known_discrepancy) for c in ref.KYBER768]
    alt = {
        "samples": 1536, "d_reg": r1536.d_reg_lowest, "proven_bits": r1536.proven_bits,
        "optimistic_bits": r1536.optimistic_bits, "lowest_bits": r1536.lowest_achievable_bits,
    }
    lattice = {k: {"bits": v, "samples": s, "source": "external lattice estimator (static)"}
               for k, (v, s) in ref.KYBER768_LATTICE.items()}
    return cells, {"alternative_m_1536": alt, "lattice_reference": lattice}


def reproduce_hints_table():
    cells = []
    for (h, w), row in ref.HINTS_TABLE.items():
        for variant, (d, opt, low) in row.items():
            r = est.estimate(est.EstimationQuery(
                n=ref.HINTS_N, m=ref.HINTS_M, D=ref.HINTS_D[variant], variant=variant,
                omega=float(w), perfect_hints=h))
            tag = f"h={h},w={w},{variant}"
            cells.append(_cell(tag + ",d", d, r.d_star, 0))
            cells.append(_cell(tag + ",optimistic", opt, r.optimistic_bits, ref.HINTS_BIT_TOLERANCE,
                               ref.HINTS_KNOWN_DISCREPANCIES.get((h, w, variant, "optimistic"))))
            cells.append(_cell(tag + ",lowest", low, r.lowest_achievable_bits, ref.HINTS_BIT_TOLERANCE,
                               ref.HINTS_KNOWN_DISCREPANCIES.get((h, w, variant, "lowest"))))
    return cells, {}


def reproduce_binary_error():
    cells = []
    for ex in ref.BINARY_ERROR_EXAMPLES:
        m = est.sample_count(est.evaluate_samples(ex["m"], ref.BINARY_ERROR_N))
        r = est.binary_error_example(ref.BINARY_ERROR_N, m, ref.BINARY_ERROR_OMEGA)
        tag = f"m={ex['m']}"
        cells.append(_cell(tag + ",d", ex["d"], r["d"], 0))
        cells.append(_cell(tag + ",bits", ex["bits"], r["direct_bits"], ref.BINARY_ERROR_TOLERANCE))
        cells.append(_cell(tag + ",conjecture_bits", ex["conjecture_bits"], r["conjecture_bits"],
                           ref.BINARY_ERROR_TOLERANCE, ref.BINARY_ERROR_KNOWN.get((ex["m"], "conjecture_bits"))))
    return cells, {}


REPRODUCERS = {
    "kyber768": lambda args: reproduce_kyber768(args.omega),
    "hints-table": lambda args: reproduce_hints_table(),
    "binary-error-examples": lambda args: reproduce_binary_error(),
}


def cmd_reproduce(args):
    cells, extra = REPRODUCERS[args.target](args)
    gating = [c for c in cells if c["known_discrepancy"] is None]
    failed = [c["cell"] for c in gating if not c["within_tolerance"]]
    rows = [["cell", "reference", "computed", "delta", "tol", "status"]]
    for c in cells:
        comp = c["computed"]
        status = "ok" if c["within_tolerance"] else ("known" if c["known_discrepancy"] else "FAIL")
        rows.append([c["cell"], c["reference"], f"{comp:.2f}" if isinstance(comp, float) else comp,
                     f"{c['delta']:+.2f}" if isinstance(c["delta"], float) else c["delta"], c["tolerance"], status])
    _emit(args, {"target": args.target, "cells": cells, "failed": failed, **extra}, rows)
    return EXIT_TOLERANCE if failed else EXIT_OK


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--omega", type=float, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    common.add_argument("--cap-degree", type=int, default=argparse.SUPPRESS)
    common.add_argument("--cap-columns", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output here instead of stdout")

    p = argparse.ArgumentParser(prog="lwe-groebner", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--omega", type=float, default=2.0)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--cap-degree", type=int, default=None)
    p.add_argument("--cap-columns", type=int, default=MAX_COLUMNS)
    p.add_argument("--out", default=None)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="sample an LWE instance")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--sigma", type=float, default=1.0)
    g.add_argument("--t", type=float, default=3.0)
    g.add_argument("--error-set", type=_int_list, default=None)
    g.add_argument("--secret-set", type=_int_list, default=None)
    g.add_argument("--resample-until-full-rank", action="store_true")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("build", parents=[common], help="Arora-Ge system of an instance")
    b.add_argument("--in", dest="input", required=True)
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("solve", parents=[common], help="solve an instance or system and report degrees")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_solve)

    d = sub.add_parser("dreg", parents=[common], help="degree-of-regularity profile")
    d.add_argument("--in", dest="input", required=True)
    d.add_argument("--quotient-cap", type=int, default=None, help="work modulo x_i^e")
    d.set_defaults(func=cmd_dreg)

    e = sub.add_parser("estimate", parents=[common], help="closed-form complexity estimate")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", required=True, help="sample count, e.g. 768, 768^4, 2*n, n^1.5")
    e.add_argument("--D", type=int, required=True)
    e.add_argument("--variant", choices=est.VARIANTS, default="general")
    e.add_argument("--sigma", type=float, default=None)
    e.add_argument("--t", type=float, default=None)
    e.add_argument("--hints", type=int, default=0, help="number of perfect hints")
    e.add_argument("--D-secret", dest="D_secret", type=int, default=None)
    e.set_defaults(func=cmd_estimate)

    h = sub.add_parser("hints", help="apply side-information hints")
    hsub = h.add_subparsers(dest="hints_command", required=True)
    ha = hsub.add_parser("apply", parents=[common])
    ha.add_argument("--in", dest="input", required=True)
    ha.add_argument("--hints", required=True)
    ha.add_argument("--domain", type=_int_list, default=None)
    ha.add_argument("--t", type=float, default=3.0)
    ha.set_defaults(func=cmd_hints_apply)

    ds = sub.add_parser("dist", parents=[common], help="coefficient-map distance to uniform")
    ds.add_argument("--q", type=int, required=True)
    ds.add_argument("--n", type=int, required=True)
    ds.add_argument("--d", type=int, required=True)
    ds.set_defaults(func=cmd_dist)

    r = sub.add_parser("reproduce", parents=[common], help="compare with published tables")
    r.add_argument("target", choices=sorted(REPRODUCERS))
    r.set_defaults(func=cmd_reproduce)
    return p


LIST_FLAGS = ("--error-set", "--secret-set", "--domain")


def _join_list_flags(argv):
    # "--error-set -1,0,1" would otherwise read "-1,0,1" as an option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in LIST_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_list_flags(argv))
    try:
        return args.func(args)
    except (LweGroebnerError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
