"""Monoidal path categories over a group of vertices.

When the vertices of a quiver form a group under the monoidal product, the
product forces a rigid shape on the arrows: either there are none (the path
category is the group itself, and its incidence bialgebra is the group
algebra), or some central element z gives every vertex a exactly one
outgoing arrow a → z·a.  Every path is then a pair (base, steps), composition
adds steps along the z-orbit, and the product multiplies bases and adds
steps — a length grading on both operations.

The product is *not* ULF: lifting the factorizations of two single arrows to
their product is a 4-to-3 map.  The instance built here exists to exhibit
that failure exactly; with z absent every suite passes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional

from .category import composable
from .errors import InvariantError, MorphismParseError, UnsupportedOperationError
from .monoidal import MonoidalInstance, check_nlf
from .monoids import FiniteMonoid
from .reports import LiftReport, Report


@dataclass(frozen=True)
class QuiverSpec:
    """A vertex group together with an optional central arrow direction z.

    With ``z`` present (an element index), every vertex ``a`` carries exactly
    one outgoing arrow ``a → z·a``; with ``z`` absent there are no arrows.
    """

    group: FiniteMonoid
    z: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.group.is_group:
            raise InvariantError("quiver vertices must form a group")
        if self.z is not None:
            if not (0 <= self.z < self.group.size):
                raise InvariantError(f"z index {self.z} out of range")
            for a in self.group.elements():
                if self.group.mul(self.z, a) != self.group.mul(a, self.z):
                    raise InvariantError(
                        f"z = {self.group.name(self.z)} is not central: "
                        f"conjugation by {self.group.name(a)} moves it"
                    )

    @property
    def has_arrows(self) -> bool:
        return self.z is not None


def make_quiver_spec(group: FiniteMonoid, z: Optional[str] = None) -> QuiverSpec:
    """Build a spec from a group and the *name* of the central element."""
    return QuiverSpec(group=group, z=None if z is None else group.index_of(z))


@dataclass(frozen=True)
class QuiverPath:
    """The path starting at ``base`` that walks ``steps`` arrows up the
    z-orbit: base → z·base → … → z^steps·base.  ``steps = 0`` is i_base."""

    base: int
    steps: int


def path_target(spec: QuiverSpec, f: QuiverPath) -> int:
    """The endpoint z^steps · base of a path."""
    vertex = f.base
    for _ in range(f.steps):
        vertex = spec.group.mul(spec.z, vertex)
    return vertex


def build_quiver_instance(spec: QuiverSpec, name: str = "quiver") -> MonoidalInstance:
    group = spec.group

    def src(f: QuiverPath) -> int:
        return f.base

    def dst(f: QuiverPath) -> int:
        return path_target(spec, f)

    def compose(a: QuiverPath, b: QuiverPath) -> QuiverPath:
        # guard handled by the shared wrapper: src(a) == dst(b)
        return QuiverPath(base=b.base, steps=b.steps + a.steps)

    def path_factor_pairs(f: QuiverPath) -> tuple:
        pairs = []
        for k in range(f.steps + 1):
            head = QuiverPath(base=f.base, steps=k)
            tail = QuiverPath(base=path_target(spec, head), steps=f.steps - k)
            pairs.append((tail, head))
        return tuple(pairs)

    def morphisms(bound: int) -> list:
        top = bound if spec.has_arrows else 0
        return [
            QuiverPath(base=a, steps=n)
            for n in range(top + 1)
            for a in group.elements()
        ]

    def render(f: QuiverPath) -> str:
        return f"({group.name(f.base)},{f.steps})"

    def parse(text: str) -> QuiverPath:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise MorphismParseError(f"{text!r}: expected (vertex,steps)")
        parts = body[1:-1].rsplit(",", 1)
        if len(parts) != 2:
            raise MorphismParseError(f"{text!r}: expected (vertex,steps)")
        vertex_name, steps_text = parts[0].strip(), parts[1].strip()
        if not steps_text.isdigit():
            raise MorphismParseError(f"{text!r}: step count must be a natural number")
        steps = int(steps_text)
        if steps > 0 and not spec.has_arrows:
            raise MorphismParseError(f"{text!r}: this quiver has no arrows")
        return QuiverPath(base=group.index_of(vertex_name), steps=steps)

    return MonoidalInstance(
        name=name,
        src=src,
        dst=dst,
        compose=compose,
        identity=lambda a: QuiverPath(base=a, steps=0),
        factor_pairs=path_factor_pairs,
        objects=lambda bound: list(group.elements()),
        morphisms=morphisms,
        size=lambda f: f.steps,
        render=render,
        length_hint=lambda f: f.steps,
        parse=parse,
        default_bound=3,
        unit_obj=group.unit,
        obj_product=group.mul,
        product=lambda f, g: QuiverPath(
            base=group.mul(f.base, g.base), steps=f.steps + g.steps
        ),
        object_inverse=group.inverse,
    )


def quiver_ulf_failure(spec: QuiverSpec) -> LiftReport:
    """The lifting fibers on a pair of single arrows: a 4-to-3 witness.

    Each arrow has two factorizations; their product is a two-step path with
    three, and the two mixed splittings collide in the middle one.
    """
    if not spec.has_arrows:
        raise UnsupportedOperationError(
            "no arrows: every lifting is identities-only and bijective"
        )
    inst = build_quiver_instance(spec)
    arrow = QuiverPath(base=spec.group.unit, steps=1)
    return check_nlf(inst, arrow, arrow)


def check_length_grading(
    spec: QuiverSpec,
    sample: Optional[Iterable[QuiverPath]] = None,
    bound: Optional[int] = None,
) -> Report:
    """Step count grades both composition and the product on the fragment."""
    inst = build_quiver_instance(spec)
    if sample is not None:
        mors = list(sample)
    else:
        mors = inst.morphisms(bound if bound is not None else inst.default_bound)
    report = Report(title=f"{inst.name}: length grading")

    fail = ""
    cases = 0
    for f in mors:
        for g in mors:
            if not composable(inst, f, g):
                continue
            cases += 1
            if inst.compose(f, g).steps != f.steps + g.steps:
                fail = f"ℓ({inst.render(f)} ∘ {inst.render(g)}) does not add"
                break
        if fail:
            break
    report.record("composition adds lengths", not fail, fail, cases)

    fail = ""
    cases = 0
    for f in mors:
        for g in mors:
            cases += 1
            if inst.product(f, g).steps != f.steps + g.steps:
                fail = f"ℓ({inst.render(f)} · {inst.render(g)}) does not add"
                break
        if fail:
            break
    report.record("product adds lengths", not fail, fail, cases)

    identities_zero = all(
        inst.identity(a).steps == 0 for a in spec.group.elements()
    )
    report.record(
        "identities have length 0",
        identities_zero,
        "" if identities_zero else "an identity has nonzero length",
        spec.group.size,
    )
    return report
