"""Command-line interface: edge calculus, fans and mutation, the object/edge
bijection, Ext queries, quiver windows, the finite oracle, the verification
suite, and the HTTP service.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import arcs, category, oracle, quivers, triangulation, verify
from .arcs import parse_edge
from .disk import INF, DiskModel, DomainError, MarkedPoint


def _parse_point(text: str) -> MarkedPoint:
    text = text.strip().lstrip("(").rstrip(")")
    ray, pos = text.split(",")
    return MarkedPoint(int(ray), INF if pos.strip() == "inf" else int(pos.strip()))


def _parse_object(text: str) -> category.Indecomposable:
    return category.Indecomposable.from_json(json.loads(text))


def _parse_triangulation(text: str) -> triangulation.Triangulation:
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return triangulation.Triangulation.from_json(json.load(fh))
    return triangulation.Triangulation.from_json(json.loads(text))


def _model(args) -> DiskModel:
    return DiskModel(args.n, args.completed)


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _add_model_flags(p) -> None:
    p.add_argument("--n", type=int, default=1, help="number of accumulation points")
    p.add_argument(
        "--completed", action="store_true", help="mark the accumulation points"
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="infgon")
    sub = ap.add_subparsers(dest="cmd", required=True)

    edge = sub.add_parser("edge", help="tagged-edge calculus")
    esub = edge.add_subparsers(dest="op", required=True)
    for name, nargs in [("validate", 1), ("cross", 2), ("translate", 1), ("moves", 1)]:
        p = esub.add_parser(name)
        _add_model_flags(p)
        p.add_argument("edges", nargs=nargs, metavar="EDGE")
        if name == "translate":
            p.add_argument("--inverse", action="store_true")

    p = sub.add_parser("fan", help="the fan triangulation at an apex")
    _add_model_flags(p)
    p.add_argument("--apex", required=True, help="marked point, e.g. '(1,0)'")

    p = sub.add_parser("mutate", help="flip one member of a triangulation")
    _add_model_flags(p)
    p.add_argument("--apex", help="mutate the fan at this apex")
    p.add_argument("--triangulation", help="triangulation JSON (or @file)")
    p.add_argument("--edge", required=True)

    p = sub.add_parser("phi", help="object to tagged edge")
    _add_model_flags(p)
    p.add_argument("object", help="indecomposable JSON")

    p = sub.add_parser("phi-inv", help="tagged edge to object")
    _add_model_flags(p)
    p.add_argument("edge")

    p = sub.add_parser("ext", help="Ext dimension sum between two objects")
    _add_model_flags(p)
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("compatible", help="cluster-theoretic compatibility")
    _add_model_flags(p)
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("window-quiver", help="translation-quiver window")
    _add_model_flags(p)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--dot", action="store_true")

    orc = sub.add_parser("oracle", help="finite type-D oracle")
    osub = orc.add_subparsers(dest="op", required=True)
    p = osub.add_parser("ar")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--dot", action="store_true")
    p = osub.add_parser("tilting")
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--sets", action="store_true", help="list the sets")
    p = osub.add_parser("verify")
    p.add_argument("--k", type=int, default=4)

    ver = sub.add_parser("verify", help="window-scale verification suite")
    vsub = ver.add_subparsers(dest="op", required=True)
    p = vsub.add_parser("all")
    _add_model_flags(p)
    p.add_argument("--bound", type=int, default=4)

    p = sub.add_parser("serve", help="run the HTTP service")
    _add_model_flags(p)
    p.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("INFGON_PORT", "8642")),
        help="port to bind (default from INFGON_PORT)",
    )
    p.add_argument("--load", help="restore sessions from a JSON snapshot")
    p.add_argument("--dump", help="write sessions to a JSON snapshot on exit")

    return ap


def _run_edge(args) -> int:
    model = _model(args)
    edges = [parse_edge(t) for t in args.edges]
    if args.op == "validate":
        arcs.validate_edge(model, edges[0])
        print("ok")
    elif args.op == "cross":
        for e in edges:
            arcs.validate_edge(model, e)
        print(arcs.crossing_number(model, edges[0], edges[1]))
    elif args.op == "translate":
        fn = arcs.translate_inverse if args.inverse else arcs.translate
        print(repr(fn(model, edges[0])))
    elif args.op == "moves":
        arcs.validate_edge(model, edges[0])
        out = sorted(map(repr, arcs.elementary_moves_from(model, edges[0])))
        _emit(out)
    return 0


def _run_oracle(args) -> int:
    q = oracle.FiniteQuiver(args.k)
    if args.op == "ar":
        if args.dot:
            sys.stdout.write(quivers.to_dot(quivers.build_cluster_ar_window(q)))
        else:
            _emit(oracle.ar_quiver_json(q))
        return 0
    if args.op == "tilting":
        sets = oracle.enumerate_cluster_tilting(q)
        objs = oracle.cluster_objects(q)
        payload = {"k": args.k, "count": len(sets), "size": args.k}
        if args.sets:
            payload["sets"] = [[objs[i].label() for i in t] for t in sets]
        _emit(payload)
        return 0
    # self checks
    reps = oracle.enumerate_indecomposables(q)
    lines = []
    lines.append(("indecomposable count", len(reps) == args.k * (args.k - 1)))
    lines.append(
        ("roots have self-pairing one",
         all(oracle.euler_form(q, r.dims, r.dims) == 1 for r in reps))
    )
    objs = oracle.cluster_objects(q)
    sym = all(
        oracle.cluster_ext_dim(a, b) == oracle.cluster_ext_dim(b, a)
        for i, a in enumerate(objs)
        for b in objs[i + 1 :]
    )
    lines.append(("cluster Ext symmetric", sym))
    if args.k <= 5:
        sets = oracle.enumerate_cluster_tilting(q)
        lines.append(("tilting sets have size k", all(len(t) == args.k for t in sets)))
    ok = True
    for name, passed in lines:
        print(f"[{'pass' if passed else 'FAIL'}] {name}")
        ok = ok and passed
    return 0 if ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "edge":
            return _run_edge(args)
        if args.cmd == "fan":
            model = _model(args)
            t = triangulation.fan(model, _parse_point(args.apex))
            _emit(t.to_json())
            return 0
        if args.cmd == "mutate":
            model = _model(args)
            if args.triangulation:
                t = _parse_triangulation(args.triangulation)
            elif args.apex:
                t = triangulation.fan(model, _parse_point(args.apex))
            else:
                print("need --apex or --triangulation", file=sys.stderr)
                return 2
            t2, star = triangulation.mutate(t, parse_edge(args.edge))
            _emit({"replacement": repr(star), "triangulation": t2.to_json()})
            return 0
        if args.cmd == "phi":
            model = _model(args)
            x = _parse_object(args.object)
            category.validate_indec(model, x)
            print(repr(category.phi(model, x)))
            return 0
        if args.cmd == "phi-inv":
            model = _model(args)
            x = category.phi_inverse(model, parse_edge(args.edge))
            _emit(None if x is None else x.to_json())
            return 0
        if args.cmd == "ext":
            model = _model(args)
            x, y = _parse_object(args.x), _parse_object(args.y)
            dim = category.ext_sum_dim(model, x, y)
            _emit({"sum_dim": dim, "positive": dim > 0, "exceeds_one": dim > 1})
            return 0
        if args.cmd == "compatible":
            model = _model(args)
            _emit(category.compatible(model, _parse_object(args.x), _parse_object(args.y)))
            return 0
        if args.cmd == "window-quiver":
            model = _model(args)
            win = quivers.build_edge_quiver_window(model, args.bound)
            if args.dot:
                sys.stdout.write(quivers.to_dot(win))
            else:
                _emit(win.to_json())
            return 0
        if args.cmd == "oracle":
            return _run_oracle(args)
        if args.cmd == "verify":
            model = _model(args)
            results = verify.run_verification_suite(model, args.bound)
            for r in results:
                print(r.line())
                for f in r.failures[:5]:
                    print(f"    {f}")
            bad = [r for r in results if not r.ok()]
            print(
                f"{len(results) - len(bad)}/{len(results)} properties pass",
                f"({sum(r.checked for r in results)} checks)",
            )
            return 1 if bad else 0
        if args.cmd == "serve":
            from . import server

            model = _model(args)
            print(f"serving {model} on port {args.port}", file=sys.stderr)
            server.serve(model, args.port, args.load, args.dump)
            return 0
    except DomainError as err:
        print(
            json.dumps({"error": {"code": getattr(err, "code", "DomainError"), "message": str(err)}}),
            file=sys.stderr,
        )
        return 1
    except (ValueError, json.JSONDecodeError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
