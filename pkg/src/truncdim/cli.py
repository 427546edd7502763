"""Command-line frontend: compute, verify, generate, tree algorithms, and
theorem-checking sweeps, with stable JSON output for scripting.

Exit codes: 0 success, 1 usage error, 2 input error, 3 computation budget
exceeded, 4 theorem-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import checks, families, formulas, resolve, trees
from .graph import (DisconnectedGraphError, GraphInputError, LabeledGraph,
                    all_pairs_distances, diameter, format_edge_list, is_cycle,
                    is_path, is_tree, path_order, read_edge_list)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_CHECK_FAILED = 4

DEFAULT_EXACT_CAP = 24


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2: we reserve that
        raise _UsageError(message)


@dataclass
class RunReport:
    """One command's machine-readable outcome; keys in to_json are stable."""

    command: str
    n: int
    m: int
    diameter: int
    k: int
    method: str
    size: Optional[int] = None
    landmarks: Optional[list[str]] = None
    resolving: Optional[bool] = None
    collision: Optional[dict] = None
    elapsed_s: float = 0.0
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "input": {"n": self.n, "m": self.m, "diameter": self.diameter},
            "k": self.k,
            "result": {
                "size": self.size,
                "set": self.landmarks,
                "resolving": self.resolving,
                "collision": self.collision,
            },
            "method": self.method,
            "elapsed_s": round(self.elapsed_s, 6),
            "warnings": self.warnings,
        }

    def print_human(self) -> None:
        print(f"input: n={self.n} m={self.m} diameter={self.diameter}")
        print(f"k: {self.k}")
        if self.resolving is not None:
            print(f"resolving: {'yes' if self.resolving else 'no'}")
            if self.collision is not None:
                print(f"collision: {self.collision['pair'][0]} and "
                      f"{self.collision['pair'][1]} share vector "
                      f"{tuple(self.collision['vector'])}")
        if self.size is not None:
            print(f"size: {self.size}")
        if self.landmarks is not None:
            print(f"set: {' '.join(self.landmarks)}")
        print(f"method: {self.method}")
        print(f"elapsed: {self.elapsed_s:.3f}s")
        for w in self.warnings:
            print(f"warning: {w}", file=sys.stderr)


def _emit(report: RunReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json()))
    else:
        report.print_human()


def _load(path: str) -> tuple[LabeledGraph, int]:
    lg = read_edge_list(path)
    d = diameter(lg.graph)  # raises on disconnected input
    return lg, d


def _compute(lg: LabeledGraph, k: int, method: str, cap: int, force: bool
             ) -> tuple[str, int, Optional[tuple[int, ...]], list[str]]:
    """Dispatch; returns (method tag, size, witness ids or None, warnings)."""
    g = lg.graph
    warns: list[str] = []
    D = all_pairs_distances(g)

    if method == "ich":
        got = resolve.ich_heuristic(D, k)
        return "heuristic", len(got), got, warns

    if method == "exact":
        if g.n > cap and not force:
            raise trees.BudgetExceededError(
                f"n={g.n} exceeds the exact-search cap {cap}; "
                f"re-run with --force-exact to override")
        size, witness = resolve.beta_k_exact(D, k)
        return "exact", size, witness, warns

    # auto
    if k == 0:
        if g.n < 2:
            return "formula", 1, (0,), warns
        witness = tuple(range(g.n - 1))
        return "formula", resolve.beta_0(D), witness, warns
    if is_path(g):
        order = path_order(g)
        positions = formulas.path_resolving_set(g.n, k)
        witness = tuple(sorted(order[i] for i in positions))
        return "formula", formulas.beta_k_path(g.n, k), witness, warns
    if is_cycle(g):
        return "formula", formulas.beta_k_cycle(g.n, k), None, warns
    if is_tree(g) and k == 1:
        size, witness = trees.beta_1_tree(g)
        return "tree-dp", size, witness, warns
    if g.n > cap and not force:
        warns.append(f"n={g.n} exceeds the exact-search cap {cap}; "
                     f"falling back to the heuristic (use --force-exact to override)")
        got = resolve.ich_heuristic(D, k)
        return "heuristic", len(got), got, warns
    size, witness = resolve.beta_k_exact(D, k)
    return "exact", size, witness, warns


def cmd_compute(args) -> int:
    t0 = time.perf_counter()
    lg, d = _load(args.file)
    g = lg.graph
    tag, size, witness, warns = _compute(
        lg, args.k, args.method, args.exact_cap, args.force_exact)
    if witness is not None:
        cert = resolve.is_truncated_resolving(all_pairs_distances(g), witness, args.k)
        if not cert.resolving:
            raise RuntimeError(f"internal: witness {witness} failed verification")
    if args.verify and tag != "exact":
        if g.n > args.exact_cap and not args.force_exact:
            raise trees.BudgetExceededError(
                f"--verify needs an exact search but n={g.n} exceeds the cap")
        exact = resolve.beta_k_exact(all_pairs_distances(g), args.k)[0]
        if tag == "heuristic":
            if size < exact:
                raise RuntimeError("internal: heuristic beat the exact oracle")
            warns.append(f"verified: heuristic size {size} vs exact {exact}")
        elif size != exact:
            raise RuntimeError(
                f"internal: method {tag} returned {size} but exact search "
                f"says {exact}")
        else:
            warns.append("verified against exact search")
    report = RunReport(
        command="compute", n=g.n, m=g.num_edges, diameter=d, k=args.k,
        method=tag, size=size,
        landmarks=None if witness is None else [lg.label_of(v) for v in witness],
        elapsed_s=time.perf_counter() - t0, warnings=warns)
    _emit(report, args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    lg, d = _load(args.file)
    g = lg.graph
    labels = [s for part in args.set for s in part.replace(",", " ").split()]
    if not labels:
        raise GraphInputError("no landmark labels given")
    ids = tuple(lg.id_of(s) for s in labels)
    D = all_pairs_distances(g)
    cert = resolve.is_truncated_resolving(D, ids, args.k)
    collision = None
    if not cert.resolving:
        u, v = cert.witness_pair  # type: ignore[misc]
        vec = resolve.truncated_vector(D, u, cert.landmarks, args.k)
        collision = {"pair": [lg.label_of(u), lg.label_of(v)],
                     "vector": list(vec)}
    report = RunReport(
        command="verify", n=g.n, m=g.num_edges, diameter=d, k=args.k,
        method="verify", size=len(cert.landmarks),
        landmarks=[lg.label_of(v) for v in cert.landmarks],
        resolving=cert.resolving, collision=collision,
        elapsed_s=time.perf_counter() - t0)
    _emit(report, args.json)
    return EXIT_OK


_GENERATE_PARAMS = {
    "path": 1, "cycle": 1, "complete": 1, "star": 1,
    "kst": 2, "ks-kbar": 2, "ks-k1-kt": 2, "u": 2, "stilde": 2,
}


def _generate(family: str, params: list[int], k: int
              ) -> tuple[families.LabeledConstruction, list[str]]:
    comments = [f"family: {family} {' '.join(str(p) for p in params)}"]
    if family == "path":
        (n,) = params
        g = families.path(n)
        hint = formulas.path_resolving_set(n, k) if k >= 1 else None
        pred = formulas.beta_k_path(n, k) if k >= 1 else None
        return families.LabeledConstruction(g, hint, pred, k), comments
    if family == "cycle":
        (n,) = params
        pred = formulas.beta_k_cycle(n, k) if k >= 1 else None
        return families.LabeledConstruction(families.cycle(n), None, pred, k), comments
    if family == "complete":
        (n,) = params
        pred = n - 1 if k >= 1 and n >= 2 else None
        hint = tuple(range(n - 1)) if n >= 2 else None
        return families.LabeledConstruction(families.complete(n), hint, pred, k), comments
    if family == "star":
        (n,) = params
        g = families.star(n)
        pred = n - 2 if k >= 1 and n >= 3 else None
        return families.LabeledConstruction(g, None, pred, k), comments
    if family == "kst":
        s, t = params
        g = families.complete_bipartite(s, t)
        pred = (g.n - 1 if g.n == 2 else g.n - 2) if k >= 1 else None
        return families.LabeledConstruction(g, None, pred, k), comments
    if family == "ks-kbar":
        s, t = params
        if t < 2:
            raise GraphInputError("ks-kbar needs t >= 2 (t=1 is just a complete graph)")
        g = families.join(families.complete(s), families.edgeless(t))
        return families.LabeledConstruction(g, None, g.n - 2 if k >= 1 else None, k), comments
    if family == "ks-k1-kt":
        s, t = params
        g = families.join(families.complete(s),
                          families.disjoint_union(families.complete(1),
                                                  families.complete(t)))
        return families.LabeledConstruction(g, None, g.n - 2 if k >= 1 else None, k), comments
    if family == "u":
        n, delta = params
        built = families.u_graph(n, delta)
        pred = families.beta_k_u_graph(n, delta, k) if k >= 1 else None
        comments.append(f"clique-path junction: {built.junction}")
        return families.LabeledConstruction(
            built.graph, None, pred, k, junction=built.junction), comments
    if family == "stilde":
        beta, kk = params
        return families.s_tilde(beta, kk), comments
    raise GraphInputError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    family = args.family
    want = _GENERATE_PARAMS.get(family)
    if want is None:
        raise _UsageError(f"unknown family {family!r}; choose from "
                          f"{', '.join(sorted(_GENERATE_PARAMS))}")
    if len(args.params) != want:
        raise _UsageError(f"family {family} takes {want} parameter(s), "
                          f"got {len(args.params)}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        built, comments = _generate(family, args.params, args.k)
    if built.predicted_beta_k is not None:
        comments.append(f"predicted-beta-k: {built.predicted_beta_k} (k={built.k})")
    if built.landmark_hint is not None:
        comments.append("landmark-hint: "
                        + " ".join(str(v) for v in built.landmark_hint))
    for w in caught:
        comments.append(f"note: {w.message}")
        print(f"warning: {w.message}", file=sys.stderr)
    sys.stdout.write(format_edge_list(built.graph, comments=comments))
    return EXIT_OK


def cmd_tree(args) -> int:
    t0 = time.perf_counter()
    lg, d = _load(args.file)
    g = lg.graph
    if not is_tree(g):
        raise GraphInputError("input graph is not a tree")

    if args.tree_cmd == "beta1":
        size, witness = trees.beta_1_tree(g)
        report = RunReport("tree beta1", g.n, g.num_edges, d, 1, "tree-dp",
                           size=size,
                           landmarks=[lg.label_of(v) for v in witness],
                           elapsed_s=time.perf_counter() - t0)
        _emit(report, args.json)
        return EXIT_OK
    if args.tree_cmd == "ld":
        size = trees.locating_dominating_number(g)
        witness = trees.locating_dominating_set(g)
        report = RunReport("tree ld", g.n, g.num_edges, d, 1, "tree-dp",
                           size=size,
                           landmarks=[lg.label_of(v) for v in witness],
                           elapsed_s=time.perf_counter() - t0)
        _emit(report, args.json)
        return EXIT_OK
    if args.tree_cmd == "classic":
        size = trees.tree_metric_dimension(g)
        witness = trees.tree_resolving_set(g)
        report = RunReport("tree classic", g.n, g.num_edges, d, d, "formula",
                           size=size,
                           landmarks=[lg.label_of(v) for v in witness],
                           elapsed_s=time.perf_counter() - t0)
        _emit(report, args.json)
        return EXIT_OK

    # tk: membership plus peeling when it applies
    res = trees.tk_membership(g, args.k, args.budget)
    if res.member is None:
        print(f"undecided: {res.detail}", file=sys.stderr)
        return EXIT_BUDGET
    if not res.member:
        out = {"member": False, "failed_condition": res.failed_condition,
               "detail": res.detail}
        print(json.dumps(out) if args.json
              else f"member: no (condition {res.failed_condition}: {res.detail})")
        return EXIT_OK
    size, witness, steps = trees.tk_beta_k(g, args.k, args.budget)
    if args.json:
        out = {"member": True, "k": args.k, "method": "tk-peel", "size": size,
               "set": [lg.label_of(v) for v in witness],
               "rounds": [{"vertices": [lg.label_of(v) for v in s.vertices],
                           "landmarks": [lg.label_of(v) for v in s.landmarks]}
                          for s in steps]}
        print(json.dumps(out))
    else:
        print("member: yes")
        print("method: tk-peel")
        print(f"size: {size}")
        print(f"set: {' '.join(lg.label_of(v) for v in witness)}")
        for i, s in enumerate(steps):
            print(f"round {i}: tree={len(s.vertices)} vertices, "
                  f"landmarks={' '.join(lg.label_of(v) for v in s.landmarks)}")
    return EXIT_OK


def cmd_check_theorems(args) -> int:
    results = checks.run_standard_checks(
        max_n=args.max_n, max_k=args.max_k, trees_max_n=args.trees,
        family_max_n=args.family_trees, random_trees=args.random_trees,
        random_graphs=args.random_graphs, seed=args.seed, workers=args.workers)
    if args.json:
        print(json.dumps([{
            "name": r.name, "passed": r.passed, "cases": r.cases,
            "elapsed_s": round(r.elapsed, 3), "incomplete": r.incomplete,
            "failures": r.failures, "note": r.note} for r in results]))
    else:
        for r in results:
            print(r.line())
            for f in r.failures[:5]:
                print(f"    {f}")
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} checks passed")
    if any(not r.passed and not r.incomplete for r in results):
        return EXIT_CHECK_FAILED
    if any(r.incomplete for r in results):
        return EXIT_BUDGET
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="truncdim",
                     description="Truncated metric dimension of graphs")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("compute", help="compute beta_k of an edge-list graph")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("auto", "exact", "ich"), default="auto")
    p.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--force-exact", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the result against the exact search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check whether a set resolves at truncation k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--set", nargs="+", required=True,
                   help="landmark labels (space or comma separated)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit a named family as an edge list")
    p.add_argument("family", help=", ".join(sorted(_GENERATE_PARAMS)))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--k", type=int, default=1,
                   help="truncation used for hint and prediction headers")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("tree", help="tree-specific algorithms")
    tsub = p.add_subparsers(dest="tree_cmd", required=True)
    for name, help_text in (("beta1", "dimension at k=1 by dynamic program"),
                            ("ld", "minimum locating-dominating set"),
                            ("classic", "classic metric dimension"),
                            ("tk", "peelable-family membership and value")):
        tp = tsub.add_parser(name, help=help_text)
        tp.add_argument("file")
        if name == "tk":
            tp.add_argument("--k", type=int, required=True)
            tp.add_argument("--budget", type=int, default=10 ** 6)
        tp.add_argument("--json", action="store_true")
        tp.set_defaults(func=cmd_tree)

    p = sub.add_parser("check-theorems", help="run the theorem sweeps")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--trees", type=int, default=7,
                   help="exhaustive tree order for the k=1 dynamic program")
    p.add_argument("--family-trees", type=int, default=8,
                   help="exhaustive tree order for the peeling/star sweep")
    p.add_argument("--random-trees", type=int, default=100)
    p.add_argument("--random-graphs", type=int, default=100)
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_theorems)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except trees.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphInputError, DisconnectedGraphError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
