"""Command-line interface.

Subcommands: bound, table, search, oracle, check, construct, feasible.
Exit status 0 means success, 2 means the query itself is infeasible or
not well defined (no code exists / verification failed); usage and tool
errors exit with 1 so "no" answers stay distinguishable from failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import constructions, feasibility, search, tables
from .core import (
    Code,
    CodeFormatError,
    TwoDistParams,
    distance_distribution,
    is_antipodal,
    read_code,
    strength,
    verify_two_distance,
    write_code,
)

OK, NO, FAIL = 0, 2, 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not the semantic 2
        self.print_usage(sys.stderr)
        raise SystemExit(FAIL)


def _params_args(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)


def _shared_args(p: argparse.ArgumentParser, *names: str):
    # accept the global flags after the subcommand too; SUPPRESS keeps the
    # root parser's value when the flag is absent at this level
    if "seed" in names:
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    if "format" in names:
        p.add_argument("--format", default=argparse.SUPPRESS)
    if "external" in names:
        p.add_argument("--external-bounds", metavar="CSV", default=argparse.SUPPRESS)


def build_parser() -> _Parser:
    parser = _Parser(prog="twodist", description=__doc__)
    parser.add_argument("--external-bounds", metavar="CSV", help="best-known A_q(n,d) table")
    parser.add_argument("--format", default=None, help="output format where applicable")
    parser.add_argument("--seed", type=int, default=1, help="PRNG seed for search")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="upper bounds for one parameter set")
    _params_args(p)
    _shared_args(p, "format", "external")

    p = sub.add_parser("table", help="grid of cells for fixed q and delta")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int, default=None)
    p.add_argument("--search-restarts", type=int, default=0, help="enable random search per cell")
    p.add_argument("--oracle-max", type=int, default=0, help="exact oracle when candidates fit")
    _shared_args(p, "seed", "format", "external")

    p = sub.add_parser("search", help="randomized greedy lower bound")
    _params_args(p)
    p.add_argument("--restarts", type=int, default=1000)
    p.add_argument("--time-budget-ms", type=int, default=None)
    p.add_argument("--stop-at", type=int, default=None)
    p.add_argument("-o", "--output", default=None, help="write the best code found")
    _shared_args(p, "seed")

    p = sub.add_parser("oracle", help="exact value by exhaustive clique search")
    _params_args(p)
    p.add_argument("--max-vertices", type=int, default=2000)

    p = sub.add_parser("check", help="verify a code file")
    p.add_argument("file")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--delta", type=int, default=None)

    p = sub.add_parser("construct", help="emit a catalog construction")
    p.add_argument("family", choices=[
        "dm", "simplex", "mds2", "su1", "su2", "arc", "pencil",
        "weight2", "bin-2-2d", "disjoint", "ternary13",
    ])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--union", action="store_true", help="su1: add instead of remove")
    p.add_argument("--complement", action="store_true", help="emit the complementary code")
    p.add_argument("--generator", action="store_true", help="write 'k n q' matrix form")
    p.add_argument("--q", type=int, default=2, help="alphabet for weight2")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("feasible", help="linear two-weight parameter screens")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w1", type=int, required=True)
    p.add_argument("--w2", type=int, required=True)
    p.add_argument("--s", type=int, default=None)
    _shared_args(p, "format")
    return parser


def _load_external(args) -> bounds_mod.ExternalBounds | None:
    if not args.external_bounds:
        return None
    return bounds_mod.ExternalBounds.from_path(args.external_bounds)


def _cmd_bound(args) -> int:
    params = TwoDistParams(args.q, args.n, args.d, args.delta)
    report = bounds_mod.best_upper_bound(params, _load_external(args))
    if args.format == "json":
        payload = {
            "params": {"q": params.q, "n": params.n, "d": params.d, "delta": params.delta},
            "status": report.status.kind,
            "best": report.best,
            "methods": {e.method: e.value for e in report.entries},
            "note": report.status.note,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"q={params.q} n={params.n} distances {{{params.d}, {params.d2}}}")
        for e in report.entries:
            value = "-" if e.value is None else str(e.value)
            note = f"  ({e.note})" if e.note else ""
            print(f"  {e.method:<8} {value}{note}")
        if report.status.kind == "not_well_defined":
            print(f"  not well defined: {report.status.note}")
        elif report.status.kind == "exact":
            print(f"  exact    {report.status.lo}")
        else:
            print(f"  best     {report.best}  [{','.join(report.status.methods)}]")
    return NO if report.status.kind == "not_well_defined" else OK


def _cmd_table(args) -> int:
    fmt = args.format or "markdown"
    spec = tables.TableSpec(
        q=args.q, delta=args.delta, n_min=args.n_min, n_max=args.n_max,
        d_min=args.d_min, d_max=args.d_max, fmt=fmt,
    )
    cfg = None
    if args.search_restarts:
        cfg = search.SearchConfig(seed=args.seed, restarts=args.search_restarts)
    options = tables.CellOptions(
        external=_load_external(args), search_cfg=cfg,
        oracle_max_vertices=args.oracle_max,
    )
    sys.stdout.write(tables.render_table(spec, options))
    return OK


def _cmd_search(args) -> int:
    params = TwoDistParams(args.q, args.n, args.d, args.delta)
    cfg = search.SearchConfig(
        seed=args.seed, restarts=args.restarts,
        time_budget_ms=args.time_budget_ms, stop_at=args.stop_at,
    )
    result = search.random_greedy(params, cfg)
    kind = "two-distance" if result.report.ok else (
        "equidistant" if result.report.equidistant else "incomplete"
    )
    print(
        f"best {result.size} words ({kind}) after {result.restarts_run} restarts"
        f" (found at restart {result.restart_index})"
    )
    print(f"observed distances: {list(result.report.observed)}")
    if args.output:
        Path(args.output).write_text(write_code(result.code))
        print(f"wrote {args.output}")
    return OK if result.report.ok else NO


def _cmd_oracle(args) -> int:
    params = TwoDistParams(args.q, args.n, args.d, args.delta)
    total = search.candidate_count(params)
    value = search.exhaustive_maximum(params, args.max_vertices)
    print(f"A_{params.q}({params.n}, {{{params.d},{params.d2}}}) = {value}"
          f"  ({total} candidate words)")
    return OK


def _cmd_check(args) -> int:
    try:
        code = read_code(Path(args.file).read_text())
    except (OSError, CodeFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    dist = distance_distribution(code)
    observed = dist.support()
    print(f"q={code.q} n={code.n} words={code.size}")
    print(f"observed distances: {list(observed)}")
    print(f"strength: {strength(code)}")
    print(f"antipodal: {is_antipodal(code)}")
    nonzero = {j: str(dist.a(j)) for j in range(code.n + 1) if dist.a(j) > 0}
    print(f"distribution: {nonzero}")
    if args.d is not None and args.delta is not None:
        params = TwoDistParams(code.q, code.n, args.d, args.delta)
        report = verify_two_distance(code, params)
        if report.ok:
            print(f"ok: exactly the distances {{{params.d}, {params.d2}}}")
            return OK
        if report.equidistant:
            print("equidistant: only one of the two distances occurs")
        else:
            print("not a code with the requested two distances")
        return NO
    return OK if len(observed) == 2 else NO


def _cmd_construct(args) -> int:
    fam, ps = args.family, args.params

    def need(count):
        if len(ps) != count:
            raise ValueError(f"{fam} expects {count} integer parameters, got {len(ps)}")

    obj: Code | constructions.GeneratorMatrix
    if fam == "dm":
        need(3)
        obj = constructions.dm_code(*ps)
    elif fam in ("simplex", "mds2"):
        need(2)
        obj = constructions.seed_code(fam, *ps)
    elif fam == "su1":
        need(5)
        obj = constructions.su1_code(*ps, mode="union" if args.union else "remove")
    elif fam == "su2":
        need(3)
        obj = constructions.su2_code(*ps)
    elif fam == "arc":
        need(1)
        obj = constructions.arc_code(ps[0])
    elif fam == "pencil":
        need(2)
        obj = constructions.pencil_code(*ps)
    elif fam == "weight2":
        need(1)
        obj = constructions.small_family_code("weight2", ps[0], q=args.q)
    elif fam == "bin-2-2d":
        need(2)
        obj = constructions.small_family_code("bin-2-2d", ps[0], delta=ps[1])
    elif fam == "disjoint":
        need(2)
        obj = constructions.small_family_code("disjoint", ps[0], d=ps[1])
    else:  # ternary13
        need(1)
        obj = constructions.small_family_code("ternary13", ps[0])

    if args.complement:
        if not isinstance(obj, constructions.GeneratorMatrix):
            raise ValueError("--complement needs a linear family")
        obj = constructions.complementary_code(obj)

    if isinstance(obj, constructions.GeneratorMatrix):
        if args.generator:
            lines = [f"{obj.k} {obj.n} {obj.q}"]
            lines += ["".join(str(s) for s in row) for row in obj.rows]
            text = "\n".join(lines) + "\n"
        else:
            if obj.q ** obj.k > 4096:
                raise ValueError("code too large to expand; use --generator")
            text = write_code(obj.span())
    else:
        text = write_code(obj)
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return OK


def _cmd_feasible(args) -> int:
    lp = feasibility.LinearParams(q=args.q, k=args.k, n=args.n, w1=args.w1, w2=args.w2, s=args.s)
    lines: list[dict] = []

    def add(name, verdict, detail):
        lines.append({"screen": name, "verdict": verdict, "detail": detail})

    form = feasibility.delsarte_form(lp.q, lp.w1, lp.w2)
    if form is None:
        add("delsarte-form", "fail", "weights are not h*p^u, (h+1)*p^u")
    else:
        add("delsarte-form", "pass", f"p={form.p} u={form.u} h={form.h}")

    mw = feasibility.macwilliams_mu(lp)
    add(
        "macwilliams-mu",
        "pass" if mw.status == "ok" else ("fail" if mw.status == "infeasible" else "degenerate"),
        f"mu1={mw.mu1} mu2={mw.mu2} second-moment-residual={mw.second_moment_residual}",
    )

    if lp.s in (None, 1) and lp.k >= 2:
        try:
            srg = feasibility.srg_analysis(lp)
            add(
                "srg-integrality",
                "pass" if srg.feasible else "fail",
                f"(N,K,lam,mu)={srg.params} e1={srg.e1} e2={srg.e2}"
                + ("" if srg.weight_form_agrees else
                   f" [weight-form values {srg.e1_weight_form}, {srg.e2_weight_form} disagree]"),
            )
        except ValueError as exc:
            add("srg-integrality", "fail", str(exc))
    else:
        add("srg-integrality", "skip", "projective screen needs s=1 and k>=2")

    if lp.k >= 2:
        screen = feasibility.gcd_screen(lp)
        for v in screen.per_s:
            clause_bits = "; ".join(
                f"({c.clause}) {'pass' if c.passed else 'fail' if c.passed is False else 'n/a'}"
                + (f": {c.detail}" if c.detail else "")
                for c in v.clauses
            )
            add("gcd-valuation", v.verdict, f"s={v.s} d_c={v.d_c} n_c={v.n_c} {clause_bits}")
    else:
        add("gcd-valuation", "skip", "needs k >= 2")

    size = lp.size
    if size > lp.q**2 and size % lp.q**2 == 0:
        qc = feasibility.check_oa2_quadratic(lp.q, size, lp.n, lp.w1, lp.w2)
        add(
            "oa2-quadratic",
            "pass" if qc.ok else "fail",
            f"residual={qc.residual} roots={qc.roots} "
            f"integer-roots={qc.roots_positive_integers} square-disc={qc.discriminant_is_square}",
        )
    else:
        add("oa2-quadratic", "skip", "needs q^k divisible by q^2 and larger than q^2")

    try:
        comps = feasibility.complementary_params(lp)
        detail = "; ".join(
            f"s={c.s}: n_c={c.n_c} d_c={c.d_c}" + (" (degenerate)" if c.degenerate else "")
            for c in comps
        )
        add("complementary-params", "pass", detail)
    except ValueError as exc:
        add("complementary-params", "fail", str(exc))

    failed = any(l["verdict"] == "fail" for l in lines)
    if args.format == "json":
        params = {"q": lp.q, "k": lp.k, "n": lp.n, "w1": lp.w1, "w2": lp.w2, "s": lp.s}
        print(json.dumps({"params": params, "screens": lines}, default=str, indent=2))
    else:
        for l in lines:
            print(f"{l['verdict'].upper():<10} {l['screen']}: {l['detail']}")
    return NO if failed else OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse help/usage paths
        return int(exc.code or 0)
    handlers = {
        "bound": _cmd_bound,
        "table": _cmd_table,
        "search": _cmd_search,
        "oracle": _cmd_oracle,
        "check": _cmd_check,
        "construct": _cmd_construct,
        "feasible": _cmd_feasible,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, bounds_mod.LpUnboundedError, CodeFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
