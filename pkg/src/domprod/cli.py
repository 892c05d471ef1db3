"""Command-line front end.

Commands emit single-line JSON records (or an aligned table with
--table) so scans compose with standard tools.  Solve results are cached
in a JSON-lines file keyed by (canonical descriptor, quantity); an entry
is only ever replaced by an optimal recomputation.

Exit codes: 0 success (including budget-exhausted results with
optimal=false), 1 reproduction mismatch, 2 bad input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import fcntl
import json
import os
import sys

from . import __version__
from .graphs import (
    CapExceededError,
    Descriptor,
    DescriptorError,
    ProductSpec,
    unitary_cayley,
)
from .numbertheory import factorize, jacobsthal_run
from .solvers import (
    DEFAULT_MAX_NODES,
    DEFAULT_TIME_LIMIT,
    Budget,
    SolveResult,
    gamma_exact,
    gamma_total_exact,
    gamma_upper_exact,
    is_dominating,
    is_minimal_dominating,
    is_total_dominating,
)
from .theorems import (
    InternalConsistencyError,
    complete_product_gamma,
    conjecture_check,
    consecutive_residue_set,
    cube_corner_set,
    diagonal_set,
    gamma_bounds,
    m_family_witness,
    mt_witness,
    partite_column_set,
    squarefree_gamma_value,
    t_plus_two_set,
    ucg_gamma_bounds,
    upper_bounds,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3

_QUANTITY_BY_VERB = {"gamma": "gamma", "gammat": "gamma_total", "upper": "upper"}
_CHECKER = {
    "gamma": is_dominating,
    "gamma_total": is_total_dominating,
    "upper": is_minimal_dominating,
}


# ==== output helpers ====


def _emit(record: dict, table: bool) -> None:
    if not table:
        print(json.dumps(record, sort_keys=True))
        return
    width = max(len(k) for k in record)
    for key in sorted(record):
        value = record[key]
        if isinstance(value, (list, tuple)):
            value = json.dumps(list(value))
        print(f"{key:<{width}}  {value}")


def _solve_record(descriptor: str, result: SolveResult) -> dict:
    return {
        "descriptor": descriptor,
        "quantity": result.quantity,
        "value": result.value,
        "lo": result.lo,
        "hi": result.hi,
        "witness": list(result.witness),
        "optimal": result.optimal,
        "method": result.method,
        "nodes": result.nodes,
        "elapsed_ms": int(result.elapsed * 1000),
        "tool_version": __version__,
    }


def _budget(args) -> Budget:
    return Budget(
        max_nodes=args.nodes if args.nodes is not None else DEFAULT_MAX_NODES,
        time_limit=args.time_limit if args.time_limit is not None else DEFAULT_TIME_LIMIT,
    )


# ==== result cache ====


def default_cache_path() -> str:
    env = os.environ.get("DOMPROD_CACHE")
    if env:
        return env
    return os.path.join(
        os.environ.get("XDG_CACHE_HOME", os.path.expanduser("~/.cache")),
        "domprod",
        "results.jsonl",
    )


class ResultCache:
    """Append-only JSON-lines cache keyed by (descriptor, quantity).

    Later entries win unless they would replace an optimal entry with a
    non-optimal one.  Writers take an advisory lock; partially written
    or stale-version lines are ignored on read.
    """

    def __init__(self, path: str):
        self.path = path

    def _fold(self) -> dict[tuple[str, str], dict]:
        table: dict[tuple[str, str], dict] = {}
        try:
            fh = open(self.path, encoding="utf-8")
        except FileNotFoundError:
            return table
        with fh:
            for line in fh:
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if rec.get("tool_version") != __version__:
                    continue
                key = (rec.get("descriptor"), rec.get("quantity"))
                old = table.get(key)
                if old is not None and old.get("optimal") and not rec.get("optimal"):
                    continue
                table[key] = rec
        return table

    def get(self, descriptor: str, quantity: str) -> dict | None:
        return self._fold().get((descriptor, quantity))

    def put(self, record: dict) -> bool:
        os.makedirs(os.path.dirname(self.path) or ".", exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                old = self._fold().get((record["descriptor"], record["quantity"]))
                if old is not None and old.get("optimal") and not record.get("optimal"):
                    return False
                fh.write(json.dumps(record, sort_keys=True) + "\n")
                fh.flush()
                return True
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)


def _cached_verified(record: dict, desc: Descriptor) -> bool:
    """Re-verify a cached witness before trusting the entry."""
    checker = _CHECKER.get(record.get("quantity"))
    if checker is None:
        return False
    try:
        graph = desc.build()
    except CapExceededError:
        return False
    return checker(graph, record.get("witness", ()))


# ==== solve / bounds / conjecture ====


def cmd_solve(args) -> int:
    desc = Descriptor.parse(args.descriptor)
    canonical = desc.canonical()
    quantity = _QUANTITY_BY_VERB[args.quantity]
    cache = None if args.no_cache else ResultCache(default_cache_path())
    if cache is not None:
        hit = cache.get(canonical, quantity)
        if hit is not None and hit.get("optimal") and _cached_verified(hit, desc):
            _emit(hit, args.table)
            return EXIT_OK
    graph = desc.build()
    budget = _budget(args)
    if quantity == "gamma":
        result = gamma_exact(graph, budget, deterministic=args.deterministic)
    elif quantity == "gamma_total":
        result = gamma_total_exact(graph, budget, deterministic=args.deterministic)
    else:
        result = gamma_upper_exact(
            graph, budget,
            clique_size=desc.clique_size(),
            deterministic=args.deterministic,
        )
    record = _solve_record(canonical, result)
    if cache is not None:
        cache.put(record)
    _emit(record, args.table)
    return EXIT_OK


def _bounds_record(descriptor: str, report) -> dict:
    return {
        "descriptor": descriptor,
        "quantity": report.quantity,
        "lo": report.lo,
        "hi": report.hi,
        "exact": report.exact,
        "conjectured": report.conjectured,
        "provenance": [list(entry) for entry in report.provenance],
        "tool_version": __version__,
    }


def cmd_bounds(args) -> int:
    desc = Descriptor.parse(args.descriptor)
    canonical = desc.canonical()
    if desc.kind == "ucg":
        gamma_report = ucg_gamma_bounds(desc.ucg_n)
        spec = None
    else:
        spec = desc.spec.canonical()
        gamma_report = gamma_bounds(spec)
    _emit(_bounds_record(canonical, gamma_report), args.table)
    if spec is not None:
        _emit(_bounds_record(canonical, upper_bounds(spec)), args.table)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    desc = Descriptor.parse(args.descriptor)
    if desc.kind == "ucg":
        from .graphs import ucg_product_spec

        spec = ucg_product_spec(desc.ucg_n)
    else:
        spec = desc.spec.canonical()
    check = conjecture_check(spec, _budget(args))
    result = check.exact
    record = _solve_record(desc.canonical(), result)
    record["conjectured"] = check.conjectured
    record["agrees"] = check.agrees
    _emit(record, args.table)
    return EXIT_OK


# ==== constructions and witnesses ====


def _construction_record(name: str, res) -> dict:
    return {
        "descriptor": res.descriptor,
        "construction": name,
        "kind": res.kind,
        "size": len(res.vertex_set),
        "vertex_set": list(res.vertex_set),
        "verified": res.verified,
        "tool_version": __version__,
    }


def _spec_target(args) -> ProductSpec:
    desc = Descriptor.parse(args.target)
    if desc.kind != "spec":
        raise DescriptorError(f"construction {args.name!r} needs a product spec")
    return desc.spec.canonical()


def cmd_construct(args) -> int:
    if args.name == "consecutive":
        try:
            n = int(args.target)
        except ValueError:
            raise DescriptorError(f"consecutive needs an integer, got {args.target!r}")
        res = consecutive_residue_set(n)
    elif args.name == "diagonal":
        res = diagonal_set(_spec_target(args), args.m)
    elif args.name == "t-plus-two":
        res = t_plus_two_set(_spec_target(args))
    elif args.name == "cube-corner":
        res = cube_corner_set(_spec_target(args))
    else:
        res = partite_column_set(_spec_target(args))
    _emit(_construction_record(args.name, res), args.table)
    return EXIT_OK


def cmd_witness(args) -> int:
    if args.which == "thm6":
        if args.j is None:
            raise DescriptorError("witness thm6 needs --j")
        w = mt_witness(args.j)
        record = {
            "witness": "thm6",
            "j": args.j,
            "n": w.n,
            "q": w.q,
            "k": w.k,
            "primes": list(w.primes),
            "D": list(w.D),
            "size": len(w.D),
            "y": w.y,
            "z": w.z,
            "run_length": w.run_length,
            "g_lower": w.g_lower,
            "verified": w.verified,
            "tool_version": __version__,
        }
    else:
        if args.family is None or args.p1 is None or args.p2 is None:
            raise DescriptorError("witness prop1 needs --family, --p1, --p2")
        w = m_family_witness(args.family, args.p1, args.p2)
        record = {
            "witness": "prop1",
            "family": w.family,
            "n": w.n,
            "p1": w.p1,
            "p2": w.p2,
            "x": w.x,
            "run_length": w.run_length,
            "dominating_set": list(w.dominating_set),
            "size": len(w.dominating_set),
            "g_lower": w.g_lower,
            "verified": w.verified,
            "tool_version": __version__,
        }
    _emit(record, args.table)
    return EXIT_OK


# ==== jacobsthal ====


def cmd_jacobsthal(args) -> int:
    token = args.range
    try:
        if ".." in token:
            lo_s, hi_s = token.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(token)
    except ValueError:
        raise DescriptorError(f"bad range {token!r}; use N or A..B")
    if lo < 1 or hi < lo:
        raise DescriptorError(f"bad range {token!r}")
    for n in range(lo, hi + 1):
        run = jacobsthal_run(n)
        _emit(
            {
                "n": n,
                "value": run.value,
                "run_start": run.start,
                "run_length": run.length,
                "tool_version": __version__,
            },
            args.table,
        )
    return EXIT_OK


# ==== reproduction suites ====


def _squarefree_small_omega(limit: int):
    for n in range(2, limit + 1):
        fac = factorize(n)
        if len(fac) <= 3 and all(e == 1 for _, e in fac):
            yield n


def _nonsquarefree_small_omega(limit: int):
    for n in range(2, limit + 1):
        fac = factorize(n)
        if len(fac) <= 3 and any(e > 1 for _, e in fac):
            yield n


def _suite_eq7(limit: int, budget: Budget):
    for n in _squarefree_small_omega(limit):
        formula = squarefree_gamma_value(n)
        solved = gamma_exact(unitary_cayley(n), budget)
        yield f"ucg:{n}", formula, solved


def _suite_thm1(limit: int, budget: Budget):
    from .graphs import product_spec_graph

    shapes = []
    for n1 in range(2, limit + 1):
        for n2 in range(n1, limit + 1):
            shapes.append((n1, n2))
            for n3 in range(n2, limit + 1):
                shapes.append((n1, n2, n3))
    for shape in shapes:
        spec = ProductSpec.from_pairs([(1, b) for b in shape])
        formula = complete_product_gamma(spec)
        if not formula.exact:
            continue
        solved = gamma_exact(product_spec_graph(spec), budget)
        desc = "x".join(f"K[1,{b}]" for b in shape)
        yield desc, formula.lo, solved


def _suite_thm4(limit: int, budget: Budget):
    from .numbertheory import jacobsthal

    for n in _nonsquarefree_small_omega(limit):
        formula = jacobsthal(n)
        solved = gamma_exact(unitary_cayley(n), budget)
        yield f"ucg:{n}", formula, solved


def _enum_small_specs(max_vertices: int, max_t: int):
    """All canonical specs with at most max_t factors and at most
    max_vertices vertices, smallest factor first."""
    factors = [
        (a, b)
        for b in range(2, max_vertices + 1)
        for a in range(1, max_vertices // b + 1)
        if a * b <= max_vertices
    ]
    factors.sort(key=lambda f: (f[1], f[0]))

    def extend(prefix, start, room):
        if prefix:
            yield tuple(prefix)
        if len(prefix) == max_t:
            return
        for i in range(start, len(factors)):
            a, b = factors[i]
            if a * b > room:
                continue
            prefix.append((a, b))
            yield from extend(prefix, i, room // (a * b))
            prefix.pop()

    yield from extend([], 0, max_vertices)


def _suite_upperdom(limit: int, budget: Budget):
    from .graphs import product_spec_graph

    for pairs in _enum_small_specs(limit, 3):
        spec = ProductSpec.from_pairs(pairs)
        conjectured = spec.n_vertices // spec.factors[0].b
        solved = gamma_upper_exact(
            product_spec_graph(spec), budget, clique_size=spec.factors[0].b
        )
        desc = "x".join(f"K[{a},{b}]" for a, b in pairs)
        yield desc, conjectured, solved


_SUITES = {
    "eq7": (_suite_eq7, 500),
    "thm1": (_suite_thm1, 5),
    "thm4": (_suite_thm4, 200),
    "upperdom-small": (_suite_upperdom, 27),
}


def cmd_reproduce(args) -> int:
    runner, default_max = _SUITES[args.suite]
    limit = args.max if args.max is not None else default_max
    budget = _budget(args)
    writer = csv.writer(sys.stdout)
    writer.writerow(["descriptor", "formula", "solver", "match"])
    mismatches = []
    for desc, formula, solved in runner(limit, budget):
        ok = solved.optimal and solved.value == formula
        writer.writerow([desc, formula, solved.value, "yes" if ok else "NO"])
        if not ok:
            mismatches.append((desc, formula, solved.value, solved.optimal))
    if mismatches:
        for desc, formula, value, optimal in mismatches:
            note = "" if optimal else " (budget exhausted)"
            print(
                f"mismatch: {desc} formula {formula} solver {value}{note}",
                file=sys.stderr,
            )
        return EXIT_MISMATCH
    return EXIT_OK


# ==== membership scans ====


def cmd_scan(args) -> int:
    lo = args.min if args.min is not None else 2
    hi = args.max
    if hi is None:
        raise DescriptorError("scan needs --max")
    if lo < 2 or hi < lo:
        raise DescriptorError(f"bad range [{lo}, {hi}]")
    budget = _budget(args)
    total = gamma_total_exact if args.target == "Mt" else gamma_exact
    for n in range(lo, hi + 1):
        run = jacobsthal_run(n)
        g = run.value
        record: dict = {
            "n": n,
            "target": args.target,
            "g": g,
            "tool_version": __version__,
        }
        try:
            graph = unitary_cayley(n)
        except CapExceededError as exc:
            record["status"] = "skipped"
            record["reason"] = str(exc)
            _emit(record, args.table)
            continue
        result = total(graph, budget)
        record["lo"] = result.lo
        record["hi"] = result.hi
        record["nodes"] = result.nodes
        if result.hi < g:
            record["status"] = "member"
            record["value"] = result.value
            record["witness"] = list(result.witness)
        elif result.lo >= g:
            record["status"] = "non-member"
            if result.optimal:
                record["value"] = result.value
        else:
            record["status"] = "undecided"
            record["reason"] = "budget exhausted"
        _emit(record, args.table)
    return EXIT_OK


# ==== argument parsing ====


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nodes", type=int, default=None,
                        help="search node budget (default 10^7)")
    common.add_argument("--time-limit", type=float, default=None,
                        help="per-instance wall clock budget in seconds (default 60)")
    common.add_argument("--deterministic", action="store_true",
                        help="canonicalize witnesses (lexicographically smallest)")
    common.add_argument("--no-cache", action="store_true",
                        help="bypass the result cache")
    common.add_argument("--table", action="store_true",
                        help="aligned table output instead of JSON lines")

    parser = argparse.ArgumentParser(
        prog="domprod",
        description="Domination numbers of direct products of complete "
        "multipartite graphs and unitary Cayley graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common],
                       help="exact gamma / gamma_t / upper domination")
    p.add_argument("quantity", choices=sorted(_QUANTITY_BY_VERB))
    p.add_argument("descriptor")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", parents=[common],
                       help="theorem-derived bound intervals")
    p.add_argument("descriptor")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", parents=[common],
                       help="explicit dominating-set constructions")
    p.add_argument("name", choices=["consecutive", "diagonal", "t-plus-two",
                                    "cube-corner", "partite-column"])
    p.add_argument("target", help="product spec descriptor, or n for consecutive")
    p.add_argument("--m", type=int, default=0, help="diagonal overshoot")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("witness", parents=[common],
                       help="certified members of M and M_t")
    p.add_argument("which", choices=["thm6", "prop1"])
    p.add_argument("--j", type=int, default=None,
                   help="thm6: minimum number of prime factors")
    p.add_argument("--family", type=int, choices=[1, 2], default=None)
    p.add_argument("--p1", type=int, default=None)
    p.add_argument("--p2", type=int, default=None)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("conjecture", parents=[common],
                       help="compare exact upper domination against n/b_1")
    p.add_argument("descriptor")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("jacobsthal", parents=[common],
                       help="Jacobsthal function with extremal runs")
    p.add_argument("range", help="N or A..B")
    p.set_defaults(func=cmd_jacobsthal)

    p = sub.add_parser("reproduce", parents=[common],
                       help="formula-vs-solver cross-check suites (CSV)")
    p.add_argument("suite", choices=sorted(_SUITES))
    p.add_argument("--max", type=int, default=None,
                   help="override the suite's instance limit")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("scan", parents=[common],
                       help="stream membership certificates for M or M_t")
    p.add_argument("target", choices=["M", "Mt"])
    p.add_argument("--min", type=int, default=None)
    p.add_argument("--max", type=int, default=None)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DescriptorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        raise


if __name__ == "__main__":
    sys.exit(main())
