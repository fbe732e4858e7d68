"""Strict 2-groups presented by crossed modules, and their weak Hopf data.

A crossed module (G, H, τ: H → G, α: G × H → H) presents a one-object strict
2-group: objects are G, a morphism (h, g) runs g → τ(h)·g, composition
multiplies the H parts, and the monoidal product twists by the action,
(h, g)·(h', g') = (h·α(g, h'), g·g').  Every morphism has |N₂(f)| = |H|
factorizations, so the incidence construction needs the scale λ = |H| and
produces a weak Hopf algebra whose antipode is S(f) = f̄⁻¹, the composition
inverse of the product inverse.

Both translation directions are provided: a crossed module to its 2-group
instance, and a finite 2-group instance back to a crossed module built from
its objects and source subgroup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Optional, Sequence

from .errors import (
    InvariantError,
    MorphismParseError,
    UndefinedKeyError,
    UnsupportedOperationError,
)
from .incidence import IncidenceConfig, WeakHopfData
from .monoidal import MonoidalInstance
from .monoids import (
    FiniteMonoid,
    automorphism_group,
    check_homomorphism,
    conjugation_map,
    is_normal_subset,
    subgroup_from_elements,
)

Mor = Any


@dataclass(frozen=True)
class CrossedModule:
    """(base, fiber, tau, alpha) with every axiom checked at construction.

    ``tau[h]`` is the boundary homomorphism fiber → base; ``alpha[g][h]`` is
    the base action on the fiber by automorphisms.  Required exhaustively:
    action laws, equivariance τ(α(g,h)) = g·τ(h)·g⁻¹, and the Peiffer
    identity α(τ(h), h') = h·h'·h⁻¹.
    """

    base: FiniteMonoid
    fiber: FiniteMonoid
    tau: tuple[int, ...]
    alpha: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        base, fiber = self.base, self.fiber
        if not base.is_group:
            raise InvariantError("crossed module base must be a group")
        if not fiber.is_group:
            raise InvariantError("crossed module fiber must be a group")
        check_homomorphism(fiber, base, self.tau)
        if len(self.alpha) != base.size or any(
            len(row) != fiber.size for row in self.alpha
        ):
            raise InvariantError("action table must be base-by-fiber")
        for g in base.elements():
            row = self.alpha[g]
            if sorted(row) != list(fiber.elements()):
                raise InvariantError(
                    f"α({base.name(g)}, ·) is not a bijection of the fiber"
                )
            for h1 in fiber.elements():
                for h2 in fiber.elements():
                    if row[fiber.mul(h1, h2)] != fiber.mul(row[h1], row[h2]):
                        raise InvariantError(
                            f"α({base.name(g)}, ·) is not multiplicative at "
                            f"({fiber.name(h1)}, {fiber.name(h2)})"
                        )
        for h in fiber.elements():
            if self.alpha[base.unit][h] != h:
                raise InvariantError(
                    f"α(1, {fiber.name(h)}) must be {fiber.name(h)}"
                )
        for g1 in base.elements():
            for g2 in base.elements():
                for h in fiber.elements():
                    if (
                        self.alpha[base.mul(g1, g2)][h]
                        != self.alpha[g1][self.alpha[g2][h]]
                    ):
                        raise InvariantError(
                            f"action law fails at ({base.name(g1)}, "
                            f"{base.name(g2)}, {fiber.name(h)})"
                        )
        for g in base.elements():
            for h in fiber.elements():
                left = self.tau[self.alpha[g][h]]
                right = base.mul(base.mul(g, self.tau[h]), base.inverse(g))
                if left != right:
                    raise InvariantError(
                        f"equivariance fails at ({base.name(g)}, {fiber.name(h)}): "
                        f"τ(α(g,h)) = {base.name(left)} but gτ(h)g⁻¹ = {base.name(right)}"
                    )
        for h1 in fiber.elements():
            for h2 in fiber.elements():
                left = self.alpha[self.tau[h1]][h2]
                right = fiber.mul(fiber.mul(h1, h2), fiber.inverse(h1))
                if left != right:
                    raise InvariantError(
                        f"Peiffer identity fails at ({fiber.name(h1)}, "
                        f"{fiber.name(h2)}): α(τ(h),h') = {fiber.name(left)} "
                        f"but hh'h⁻¹ = {fiber.name(right)}"
                    )


def validate_crossed_module(
    base: FiniteMonoid,
    fiber: FiniteMonoid,
    tau: Sequence[int] | Callable[[int], int],
    alpha: Sequence[Sequence[int]] | Callable[[int, int], int],
) -> CrossedModule:
    """Normalize tau/alpha (tables or callables) and validate exhaustively."""
    if callable(tau):
        tau_table = tuple(tau(h) for h in fiber.elements())
    else:
        tau_table = tuple(tau)
    if callable(alpha):
        alpha_table = tuple(
            tuple(alpha(g, h) for h in fiber.elements()) for g in base.elements()
        )
    else:
        alpha_table = tuple(tuple(row) for row in alpha)
    return CrossedModule(base=base, fiber=fiber, tau=tau_table, alpha=alpha_table)


@dataclass(frozen=True)
class TwoGroupMor:
    """The morphism (h, g): g → τ(h)·g of the 2-group of a crossed module."""

    h: int
    g: int


def two_group_from_xmod(xm: CrossedModule, name: str = "two-group") -> MonoidalInstance:
    base, fiber = xm.base, xm.fiber
    all_mors = [
        TwoGroupMor(h=h, g=g) for h in fiber.elements() for g in base.elements()
    ]
    discrete = fiber.size == 1

    def dst(f: TwoGroupMor) -> int:
        return base.mul(xm.tau[f.h], f.g)

    def factor_pairs(f: TwoGroupMor) -> tuple:
        pairs = []
        for h2 in fiber.elements():
            h1 = fiber.mul(f.h, fiber.inverse(h2))
            pairs.append(
                (
                    TwoGroupMor(h=h1, g=base.mul(xm.tau[h2], f.g)),
                    TwoGroupMor(h=h2, g=f.g),
                )
            )
        return tuple(pairs)

    def render(f: TwoGroupMor) -> str:
        return f"({fiber.name(f.h)},{base.name(f.g)})"

    def parse(text: str) -> TwoGroupMor:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise MorphismParseError(f"{text!r}: expected (fiber,base)")
        inner = body[1:-1]
        for cut in range(len(inner), 0, -1):
            if inner[cut - 1] != ",":
                continue
            left, right = inner[: cut - 1].strip(), inner[cut:].strip()
            try:
                return TwoGroupMor(
                    h=fiber.index_of(left), g=base.index_of(right)
                )
            except UndefinedKeyError:
                continue
        raise MorphismParseError(
            f"{text!r}: no (fiber element, base element) split parses"
        )

    return MonoidalInstance(
        name=name,
        src=lambda f: f.g,
        dst=dst,
        compose=lambda a, b: TwoGroupMor(h=fiber.mul(a.h, b.h), g=b.g),
        identity=lambda x: TwoGroupMor(h=fiber.unit, g=x),
        factor_pairs=factor_pairs,
        objects=lambda bound: list(base.elements()),
        morphisms=lambda bound: list(all_mors),
        size=lambda f: 0,
        render=render,
        length_hint=lambda f: 0 if discrete else math.inf,
        parse=parse,
        comp_inverse=lambda f: TwoGroupMor(
            h=fiber.inverse(f.h), g=base.mul(xm.tau[f.h], f.g)
        ),
        default_bound=1,
        unit_obj=base.unit,
        obj_product=base.mul,
        product=lambda f, g: TwoGroupMor(
            h=fiber.mul(f.h, xm.alpha[f.g][g.h]), g=base.mul(f.g, g.g)
        ),
        object_inverse=base.inverse,
    )


def monoidal_inverse(inst: MonoidalInstance, f: Mor) -> Mor:
    """f̄ = i_{t(f)⁻¹} · f⁻¹ · i_{s(f)⁻¹}, the product inverse: f̄·f = i₁ = f·f̄."""
    if inst.comp_inverse is None or inst.object_inverse is None:
        raise UnsupportedOperationError(
            f"{inst.name}: product inverses need composition inverses "
            "and inverse objects"
        )
    left = inst.identity(inst.object_inverse(inst.dst(f)))
    right = inst.identity(inst.object_inverse(inst.src(f)))
    return inst.product(inst.product(left, inst.comp_inverse(f)), right)


def source_subgroup(inst: MonoidalInstance) -> list:
    """All morphisms with source 1, verified closed, inverse-closed, and
    normal in the morphism monoid under the product."""
    mors = list(inst.morphisms(inst.default_bound))
    subgroup = [f for f in mors if inst.src(f) == inst.unit_obj]
    member = set(subgroup)
    for a in subgroup:
        for b in subgroup:
            if inst.product(a, b) not in member:
                raise InvariantError(
                    f"{inst.name}: source morphisms are not closed under ·"
                )
    for a in subgroup:
        if monoidal_inverse(inst, a) not in member:
            raise InvariantError(
                f"{inst.name}: source morphisms are not inverse-closed"
            )
    for f in mors:
        f_bar = monoidal_inverse(inst, f)
        for s in subgroup:
            if inst.product(inst.product(f, s), f_bar) not in member:
                raise InvariantError(
                    f"{inst.name}: source subgroup is not normal at "
                    f"{inst.render(f)}, {inst.render(s)}"
                )
    return subgroup


def xmod_from_two_group(inst: MonoidalInstance) -> CrossedModule:
    """Recover (objects, source subgroup, target, conjugation by identities)."""
    objects = list(inst.objects(inst.default_bound))
    obj_index = {x: i for i, x in enumerate(objects)}
    base = FiniteMonoid(
        table=tuple(
            tuple(obj_index[inst.obj_product(x, y)] for y in objects)
            for x in objects
        ),
        unit=obj_index[inst.unit_obj],
        names=tuple(str(x) for x in objects),
    )
    subgroup = source_subgroup(inst)
    mor_index = {m: i for i, m in enumerate(subgroup)}
    fiber = FiniteMonoid(
        table=tuple(
            tuple(mor_index[inst.product(a, b)] for b in subgroup)
            for a in subgroup
        ),
        unit=mor_index[inst.identity(inst.unit_obj)],
        names=tuple(inst.render(m) for m in subgroup),
    )

    def tau(h: int) -> int:
        return obj_index[inst.dst(subgroup[h])]

    def alpha(g: int, h: int) -> int:
        conjugated = inst.product(
            inst.product(inst.identity(objects[g]), subgroup[h]),
            inst.identity(inst.object_inverse(objects[g])),
        )
        return mor_index[conjugated]

    return validate_crossed_module(base, fiber, tau, alpha)


def weak_hopf_structure(xm: CrossedModule, name: str = "two-group") -> WeakHopfData:
    """The incidence structure at λ = |fiber| with antipode S(f) = f̄⁻¹."""
    inst = two_group_from_xmod(xm, name=name)
    config = IncidenceConfig(instance=inst, scale=Fraction(xm.fiber.size))

    def antipode(f: TwoGroupMor) -> TwoGroupMor:
        return inst.comp_inverse(monoidal_inverse(inst, f))

    return WeakHopfData(config=config, antipode=antipode)


def antipode_closed_form(xm: CrossedModule, f: TwoGroupMor) -> TwoGroupMor:
    """The one-line antipode formula (α(g⁻¹,h⁻¹)⁻¹, g⁻¹) on (h, g)."""
    base, fiber = xm.base, xm.fiber
    g_inv = base.inverse(f.g)
    return TwoGroupMor(
        h=fiber.inverse(xm.alpha[g_inv][fiber.inverse(f.h)]),
        g=g_inv,
    )


def normal_subgroup_xmod(
    group: FiniteMonoid, normal_indices: Iterable[int]
) -> CrossedModule:
    """(G, N, inclusion, conjugation) for a normal subgroup N of G."""
    indices = tuple(sorted(set(normal_indices)))
    if not is_normal_subset(group, indices):
        raise InvariantError("the chosen subset is not a normal subgroup")
    fiber, inclusion = subgroup_from_elements(group, indices)

    def alpha(g: int, h: int) -> int:
        conjugated = group.mul(group.mul(g, inclusion[h]), group.inverse(g))
        return inclusion.index(conjugated)

    return validate_crossed_module(group, fiber, list(inclusion), alpha)


def aut_two_group(group: FiniteMonoid) -> CrossedModule:
    """(Aut(G), G, conjugation embedding, evaluation action)."""
    autos, maps = automorphism_group(group)
    map_index = {m: i for i, m in enumerate(maps)}

    def tau(g: int) -> int:
        inner = conjugation_map(group, g)
        if inner not in map_index:
            raise InvariantError(
                f"conjugation by {group.name(g)} is not an automorphism"
            )
        return map_index[inner]

    def alpha(phi: int, g: int) -> int:
        return maps[phi][g]

    return validate_crossed_module(autos, group, tau, alpha)


def coset_pair_image(xm: CrossedModule, f: TwoGroupMor) -> tuple[int, int]:
    """(target, source) in the base group: the related pair the morphism
    projects to when the fiber includes as a normal subgroup."""
    return (xm.base.mul(xm.tau[f.h], f.g), f.g)
