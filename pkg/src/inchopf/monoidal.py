"""Monoidal structure on category instances and its lifting conditions.

A :class:`MonoidalInstance` adds a strict monoidal product to a category:
an associative product on objects with unit, and a compatible product on
morphisms.  The incidence coproduct becomes multiplicative exactly when the
product lifts factorizations bijectively; :func:`check_nlf` measures that
condition on a single pair, and the check functions sweep fragments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

from .category import (
    CategoryInstance,
    check_mobius,
    composable,
    factor_pairs,
    fragment,
    is_identity,
)
from .errors import InvariantError, UnsupportedOperationError
from .reports import LiftReport, Report

Obj = Any
Mor = Any


@dataclass(frozen=True)
class MonoidalInstance(CategoryInstance):
    """A category instance with a strict monoidal product.

    ``obj_product`` and ``product`` are total; ``unit_obj`` is the monoidal
    unit.  ``object_inverse`` is set when the object monoid is a group (it
    returns the inverse object), which the combinatorial antipode needs.
    """

    unit_obj: Obj = None
    obj_product: Optional[Callable[[Obj, Obj], Obj]] = None
    product: Optional[Callable[[Mor, Mor], Mor]] = None
    object_inverse: Optional[Callable[[Obj], Obj]] = None

    def __post_init__(self) -> None:
        if self.obj_product is None or self.product is None:
            raise InvariantError(
                f"{self.name}: monoidal instance needs obj_product and product"
            )


def product(inst: MonoidalInstance, f: Mor, g: Mor) -> Mor:
    return inst.product(f, g)


def require_object_group(inst: MonoidalInstance) -> Callable[[Obj], Obj]:
    if inst.object_inverse is None:
        raise UnsupportedOperationError(
            f"{inst.name}: object monoid is not a group (no object_inverse)"
        )
    return inst.object_inverse


def check_interchange(inst: MonoidalInstance, a: Mor, b: Mor, c: Mor, d: Mor) -> bool:
    """Whether ``(a∘b) · (c∘d) == (a·c) ∘ (b·d)`` for composable a∘b, c∘d."""
    left = inst.product(inst.compose(a, b), inst.compose(c, d))
    right = inst.compose(inst.product(a, c), inst.product(b, d))
    return left == right


def check_nlf(inst: MonoidalInstance, f: Mor, g: Mor) -> LiftReport:
    """Fibers of the factorization-lifting map on one pair.

    The map sends a pair of factorizations ``((a, b), (c, d))`` of ``f``
    and ``g`` to the factorization ``(a·c, b·d)`` of ``f·g``.  The coproduct
    is multiplicative on this pair exactly when the map is bijective;
    constant fibers of size n give the weaker rescaled compatibility.
    """
    left = factor_pairs(inst, f)
    right = factor_pairs(inst, g)
    domain = [(p, q) for p in left for q in right]
    fg = inst.product(f, g)
    codomain = factor_pairs(inst, fg)
    index = {pair: i for i, pair in enumerate(codomain)}
    fibers = [0] * len(codomain)
    for (a, b), (c, d) in domain:
        image = (inst.product(a, c), inst.product(b, d))
        if image not in index:
            raise InvariantError(
                f"{inst.name}: lifted factorization {image!r} of "
                f"{inst.render(fg)} missing from its factor enumeration"
            )
        fibers[index[image]] += 1
    return LiftReport(
        name=f"{inst.render(f)} · {inst.render(g)}",
        left_size=len(left),
        right_size=len(right),
        domain_size=len(domain),
        codomain_size=len(codomain),
        fibers=tuple(fibers),
    )


# Established name elsewhere in the codebase; keep both callable.
lift_report = check_nlf


def mproduct(inst: MonoidalInstance, f: Mor, g: Mor) -> Mor:
    """Alias for :func:`product` (the monoidal product on morphisms)."""
    return inst.product(f, g)


def check_monoidal_laws(inst: MonoidalInstance, bound: Optional[int] = None) -> Report:
    """Strict monoidal laws on the fragment: associativity, unit, endpoints,
    identity preservation, and the interchange law."""
    if bound is None:
        bound = inst.default_bound
    report = Report(title=f"{inst.name}: monoidal laws (bound {bound})")
    mors = fragment(inst, bound)
    objs = list(inst.objects(bound))

    fail = ""
    cases = 0
    for x in objs:
        for y in objs:
            cases += 1
            if inst.product(inst.identity(x), inst.identity(y)) != inst.identity(
                inst.obj_product(x, y)
            ):
                fail = f"identity(x)·identity(y) != identity(x·y) at x={x!r}, y={y!r}"
                break
        if fail:
            break
    report.record("product preserves identities", not fail, fail, cases)

    fail = ""
    cases = 0
    for f in mors:
        for g in mors:
            cases += 1
            fg = inst.product(f, g)
            if inst.src(fg) != inst.obj_product(inst.src(f), inst.src(g)) or inst.dst(
                fg
            ) != inst.obj_product(inst.dst(f), inst.dst(g)):
                fail = f"endpoint mismatch for {inst.render(f)} · {inst.render(g)}"
                break
        if fail:
            break
    report.record("product endpoints", not fail, fail, cases)

    unit_id = inst.identity(inst.unit_obj)
    fail = ""
    cases = 0
    for f in mors:
        cases += 1
        if inst.product(f, unit_id) != f or inst.product(unit_id, f) != f:
            fail = f"unit law fails for {inst.render(f)}"
            break
    report.record("monoidal unit", not fail, fail, cases)

    fail = ""
    cases = 0
    small = [f for f in mors if 3 * inst.size(f) <= max(bound, 1) or inst.size(f) == 0]
    pool = small if len(small) >= 2 else mors
    for f in pool:
        for g in pool:
            for h in pool:
                cases += 1
                if inst.product(inst.product(f, g), h) != inst.product(
                    f, inst.product(g, h)
                ):
                    fail = (
                        f"associativity fails for {inst.render(f)}, "
                        f"{inst.render(g)}, {inst.render(h)}"
                    )
                    break
            if fail:
                break
        if fail:
            break
    report.record("product associativity", not fail, fail, cases)

    fail = ""
    cases = 0
    comp_pairs = [
        (a, b) for a in mors for b in mors if composable(inst, a, b)
    ]
    for a, b in comp_pairs:
        for c, d in comp_pairs:
            cases += 1
            if not check_interchange(inst, a, b, c, d):
                fail = (
                    f"interchange fails for ({inst.render(a)}∘{inst.render(b)}) · "
                    f"({inst.render(c)}∘{inst.render(d)})"
                )
                break
        if fail:
            break
    report.record("interchange", not fail, fail, cases)
    return report


def closed_pairs(inst: MonoidalInstance, mors: list, bound: int):
    """Fragment-closed product pairs: (f, g) whose product stays inside the
    enumerated fragment.  Sizes are grouped first so only pairs whose sizes
    can fit are ever multiplied."""
    member = set(mors)
    by_size: dict[int, list] = {}
    for f in mors:
        by_size.setdefault(inst.size(f), []).append(f)
    for size_f, group_f in sorted(by_size.items()):
        for size_g, group_g in sorted(by_size.items()):
            if size_f + size_g > bound:
                continue
            for f in group_f:
                for g in group_g:
                    if inst.product(f, g) in member:
                        yield f, g


def check_ulf(
    inst: MonoidalInstance,
    sample: Optional[list] = None,
    bound: Optional[int] = None,
) -> Report:
    """Unique lifting of factorizations through the product.

    With a sample, every sample pair is probed; otherwise all fragment pairs
    whose product stays inside the fragment.
    """
    if bound is None:
        bound = inst.default_bound
    if sample is not None:
        mors = list(sample)
        pairs = ((f, g) for f in mors for g in mors)
        scope = f"sample of {len(mors)}"
    else:
        mors = fragment(inst, bound)
        pairs = closed_pairs(inst, mors, bound)
        scope = f"bound {bound}"
    report = Report(title=f"{inst.name}: factorization lifting ({scope})")
    fail = ""
    cases = 0
    for f, g in pairs:
        cases += 1
        lifted = check_nlf(inst, f, g)
        if not lifted.bijective:
            fail = lifted.render()
            break
    report.record("bijective factorization lifting", not fail, fail, cases)
    return report


def check_unit_reflection(
    inst: MonoidalInstance,
    sample: Optional[list] = None,
    bound: Optional[int] = None,
) -> Report:
    """The product reflects identities: f·g an identity forces f, g identities."""
    if bound is None:
        bound = inst.default_bound
    if sample is not None:
        mors = list(sample)
        pairs = ((f, g) for f in mors for g in mors)
        scope = f"sample of {len(mors)}"
    else:
        mors = fragment(inst, bound)
        pairs = closed_pairs(inst, mors, bound)
        scope = f"bound {bound}"
    report = Report(title=f"{inst.name}: identity reflection ({scope})")
    fail = ""
    cases = 0
    for f, g in pairs:
        cases += 1
        if is_identity(inst, inst.product(f, g)) and not (
            is_identity(inst, f) and is_identity(inst, g)
        ):
            fail = (
                f"{inst.render(f)} · {inst.render(g)} is an identity "
                f"but the factors are not"
            )
            break
    report.record("product reflects identities", not fail, fail, cases)
    return report


def check_combinatorial(
    inst: MonoidalInstance,
    sample: Optional[list] = None,
    bound: Optional[int] = None,
) -> Report:
    """Conditions for the combinatorial (Möbius + lifting) route: Möbius
    category, bijective factorization lifting, identity reflection."""
    report = Report(title=f"{inst.name}: combinatorial route")
    for sub in (
        check_mobius(inst, sample=sample, bound=bound),
        check_ulf(inst, sample=sample, bound=bound),
        check_unit_reflection(inst, sample=sample, bound=bound),
    ):
        for result in sub.results:
            report.add(result)
    return report
