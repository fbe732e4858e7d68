"""Batch command-line front end.

Four subcommands::

    inchopf verify CONFIG [--suite S] [--max-size N] [--seed N] [--out PATH]
    inchopf coproduct CONFIG --morphism LITERAL
    inchopf antipode CONFIG --morphism LITERAL
    inchopf demo NAME

``verify`` runs the selected law suites on the configured instance and
prints one line per checked law; ``--suite`` is one of coalgebra,
bialgebra, weakhopf, combinatorial, or all (every suite applicable to the
instance's kind).  ``coproduct`` and ``antipode`` print the canonical
rendering of Δ(f) respectively S(f) for a morphism literal in the
instance's grammar.  ``demo`` replays a named worked example end to end.

Exit codes: 0 when every selected check passes, 1 when a check fails,
2 on usage, config, or parse errors.  Output is byte-identical for
identical inputs; the seed, when given, is echoed in the report header
(every sweep here is exhaustive within its bounds, so the seed only
documents the run).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bigraph import (
    Bigraph,
    PlaceGraph,
    LinkGraph,
    SiblingRule,
    apply_rule,
    bigraph_instance,
    blocked_reactions,
    canonical,
    render_bigraph,
)
from .category import is_identity
from .config import KINDS, LoadedInstance, load_file
from .errors import InchopfError, MorphismParseError, UnsupportedOperationError
from .forest import W, black, ck_antipode, ck_coproduct, core, graft, make_forest
from .incidence import (
    antipode_combinatorial,
    bialgebra_config,
    check_bialgebra,
    check_coalgebra,
    check_weak_hopf,
    coproduct,
)
from .linalg import FreeVec, render
from .monoidal import MonoidalInstance, check_combinatorial
from .monoids import cyclic_group, symmetric_group
from .quiver import make_quiver_spec, quiver_ulf_failure
from .relmonoid import monex_instance
from .reports import Report
from .skew import SkewShape, connected_factorization, skew_instance
from .twogroup import normal_subgroup_xmod, weak_hopf_structure

SUITES = ("coalgebra", "bialgebra", "weakhopf", "combinatorial", "all")
DEMOS = ("monex", "skew", "forest-ck", "bigraph-react", "quiver-fail", "xmod-s3")


def _render_mor_vec(inst, vec: FreeVec) -> str:
    return render(vec, render_key=inst.render)


def _render_pair_vec(inst, vec: FreeVec) -> str:
    return render(
        vec, render_key=lambda pair: f"{inst.render(pair[0])}⊗{inst.render(pair[1])}"
    )


# ---------------------------------------------------------------------------
# verify


def _applicable_suites(loaded: LoadedInstance) -> list[str]:
    suites = ["coalgebra"]
    if loaded.hopf is not None:
        suites.append("weakhopf")
    elif isinstance(loaded.instance, MonoidalInstance) and loaded.config.scale == 1:
        suites.extend(["bialgebra", "combinatorial"])
    return suites


def _run_suite(loaded: LoadedInstance, suite: str, bound: Optional[int]) -> Report:
    if suite == "coalgebra":
        return check_coalgebra(loaded.config, bound=bound)
    if suite == "bialgebra":
        if not isinstance(loaded.instance, MonoidalInstance):
            raise UnsupportedOperationError(
                f"kind {loaded.kind}: no monoidal product, so no bialgebra suite"
            )
        if loaded.config.scale != 1:
            raise UnsupportedOperationError(
                f"kind {loaded.kind}: bialgebra suite needs λ = 1 "
                f"(λ = {loaded.config.scale} here); use --suite weakhopf"
            )
        return check_bialgebra(loaded.config, bound=bound)
    if suite == "weakhopf":
        if loaded.hopf is None:
            raise UnsupportedOperationError(
                f"kind {loaded.kind}: no basis antipode, so no weak Hopf suite"
            )
        return check_weak_hopf(loaded.hopf, bound=bound)
    if suite == "combinatorial":
        if not isinstance(loaded.instance, MonoidalInstance):
            raise UnsupportedOperationError(
                f"kind {loaded.kind}: no monoidal product, so no combinatorial suite"
            )
        return check_combinatorial(loaded.instance, bound=bound)
    raise UnsupportedOperationError(f"unknown suite {suite!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    loaded = load_file(args.config)
    suites = _applicable_suites(loaded) if args.suite == "all" else [args.suite]
    header = [f"instance: {loaded.instance.name} (kind {loaded.kind})"]
    if args.max_size is not None:
        header.append(f"max size: {args.max_size}")
    if args.seed is not None:
        header.append(f"seed: {args.seed}")
    print("\n".join(header))
    reports = []
    for suite in suites:
        report = _run_suite(loaded, suite, args.max_size)
        reports.append(report)
        print()
        print(report.render())
    ok = all(report.ok for report in reports)
    print()
    print(f"verdict: {'PASS' if ok else 'FAIL'}")
    if args.out:
        payload = {
            "instance": loaded.instance.name,
            "kind": loaded.kind,
            "seed": args.seed,
            "ok": ok,
            "reports": [report.to_dict() for report in reports],
        }
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True)
            handle.write("\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# coproduct / antipode


def _parse_morphism(loaded: LoadedInstance, literal: str):
    if loaded.instance.parse is None:
        raise UnsupportedOperationError(
            f"kind {loaded.kind}: no morphism literal grammar"
        )
    return loaded.instance.parse(literal)


def cmd_coproduct(args: argparse.Namespace) -> int:
    loaded = load_file(args.config)
    f = _parse_morphism(loaded, args.morphism)
    print(_render_pair_vec(loaded.instance, coproduct(loaded.config, f)))
    return 0


def cmd_antipode(args: argparse.Namespace) -> int:
    loaded = load_file(args.config)
    f = _parse_morphism(loaded, args.morphism)
    if loaded.hopf is not None:
        vec = FreeVec.basis(loaded.hopf.antipode(f))
        print(_render_mor_vec(loaded.instance, vec))
        return 0
    if loaded.kind == "forest":
        print(render(ck_antipode(core(f))))
        return 0
    vec = antipode_combinatorial(loaded.config, f)
    print(_render_mor_vec(loaded.instance, vec))
    return 0


# ---------------------------------------------------------------------------
# demos


def _demo_monex() -> None:
    print("== equal-length word pairs: coproducts and laws ==")
    inst = monex_instance()
    cfg = bialgebra_config(inst)
    for literal in ("(x,x)", "(x,y)", "(y,x)", "(y,y)"):
        f = inst.parse(literal)
        print(f"Δ({inst.render(f)}) = {_render_pair_vec(inst, coproduct(cfg, f))}")
    report = check_bialgebra(cfg, bound=2)
    print(f"bialgebra laws on words of length ≤ 2: {'PASS' if report.ok else 'FAIL'}")


def _demo_skew() -> None:
    print("== skew shapes: stacking, product, components ==")
    inst = skew_instance()
    qp = inst.parse("skew(01010,10100)")
    rq = inst.parse("skew(00101,01010)")
    composed = inst.compose(qp, rq)
    product = inst.product(qp, rq)
    print(f"compose {qp} ∘ {rq} = {composed}")
    print(f"product {qp} · {rq} = {product}")
    for shape in (composed, qp, rq, product):
        parts = connected_factorization(shape)
        print(f"components of {shape}: {len(parts)}")


def _demo_forest_ck() -> None:
    print("== planar forests: vertex-core coproduct and antipode ==")
    one_black = make_forest([black(W)])
    dot = core(one_black)
    chain2 = core(graft(one_black, one_black))
    fork = core(make_forest([black(black(W), black(W))]))
    for t in (dot, chain2, fork):
        print(f"Δ({t}) = {render(ck_coproduct(t), render_key=lambda p: f'{p[0]}⊗{p[1]}')}")
    for t in (dot, chain2, fork):
        print(f"S({t}) = {render(ck_antipode(t))}")


def _demo_bigraph_react() -> None:
    print("== bigraph reaction rule: contexts that block a rewrite ==")
    rule = SiblingRule("A", "B", "C")
    print("rule: siblings A, B -> single C inheriting their children")
    wrapper = canonical(
        Bigraph(
            PlaceGraph(1, 0, (("r", 0), ("v", 0), ("v", 0)), ()),
            LinkGraph(0, 0, 0, ()),
            (),
            ("", "A", "B"),
        )
    )
    print(f"nested occurrence g = {render_bigraph(wrapper)}")
    rewritten = apply_rule(rule, wrapper)
    print(f"top-level rewrite changes g: {rewritten != wrapper}")
    inst = bigraph_instance()
    vec = blocked_reactions(rule, wrapper)
    print("blocked-reaction summands (context ⊗ rewritten lower leg):")
    for (context, lower), coeff in vec.items():
        tag = "identity" if is_identity(inst, context) else "non-identity"
        print(
            f"  {coeff} * {render_bigraph(context)} ⊗ {render_bigraph(lower)}"
            f"  [{tag} context]"
        )


def _demo_quiver_fail() -> None:
    print("== group quiver with a central loop: lifting fails ==")
    spec = make_quiver_spec(cyclic_group(2), z="1")
    print("objects: Z/2; one arrow a -> z·a at each object, z = 1")
    report = quiver_ulf_failure(spec)
    print(report.render())
    print(f"bijective lifting: {report.bijective}")


def _demo_xmod_s3() -> None:
    print("== crossed module S3 over A3: scaled coproduct and antipode ==")
    s3 = symmetric_group(3)
    a3 = [i for i in s3.elements() if s3.name(i) in ("e", "(123)", "(132)")]
    data = weak_hopf_structure(normal_subgroup_xmod(s3, a3), name="xmod-s3")
    inst = data.config.instance
    print(f"λ = {data.config.scale}")
    unit = inst.identity(inst.unit_obj)
    print(
        f"Δ({inst.render(unit)}) = "
        f"{_render_pair_vec(inst, coproduct(data.config, unit))}"
    )
    sample = inst.parse("((123),(12))")
    print(f"S({inst.render(sample)}) = {inst.render(data.antipode(sample))}")
    report = check_weak_hopf(data)
    print(f"weak Hopf axioms (A1)-(A6): {'PASS' if report.ok else 'FAIL'}")


_DEMO_RUNNERS = {
    "monex": _demo_monex,
    "skew": _demo_skew,
    "forest-ck": _demo_forest_ck,
    "bigraph-react": _demo_bigraph_react,
    "quiver-fail": _demo_quiver_fail,
    "xmod-s3": _demo_xmod_s3,
}


def cmd_demo(args: argparse.Namespace) -> int:
    runner = _DEMO_RUNNERS.get(args.name)
    if runner is None:
        raise UnsupportedOperationError(
            f"unknown demo {args.name!r}; expected one of {', '.join(DEMOS)}"
        )
    runner()
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inchopf",
        description=(
            "Incidence coalgebras of locally finite categories: exact "
            "verification suites, coproduct and antipode queries, and demos."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", help=f"run law suites on a configured instance (kinds: {', '.join(KINDS)})"
    )
    verify.add_argument("config", help="path to an instance config file")
    verify.add_argument(
        "--suite",
        choices=SUITES,
        default="all",
        help="which law suite to run (default: every suite applicable to the kind)",
    )
    verify.add_argument(
        "--max-size",
        type=int,
        default=None,
        help="fragment size bound (default: the instance's own bound)",
    )
    verify.add_argument(
        "--seed", type=int, default=None, help="echoed in the report for reproducibility"
    )
    verify.add_argument(
        "--out", default=None, help="also write the report as JSON to this path"
    )
    verify.set_defaults(fn=cmd_verify)

    copr = sub.add_parser("coproduct", help="print Δ(f) for a morphism literal")
    copr.add_argument("config", help="path to an instance config file")
    copr.add_argument("--morphism", required=True, help="morphism literal")
    copr.set_defaults(fn=cmd_coproduct)

    anti = sub.add_parser("antipode", help="print S(f) for a morphism literal")
    anti.add_argument("config", help="path to an instance config file")
    anti.add_argument("--morphism", required=True, help="morphism literal")
    anti.set_defaults(fn=cmd_antipode)

    demo = sub.add_parser("demo", help="replay a named worked example")
    demo.add_argument("name", help=f"one of: {', '.join(DEMOS)}")
    demo.set_defaults(fn=cmd_demo)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InchopfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
