"""The scaled incidence coalgebra and its bialgebra / weak Hopf upgrades.

For a locally finite category, the coproduct of a morphism sums over its
two-step factorizations, scaled by a nonzero rational λ:

    Δ(f) = (1/λ) Σ_{(a,b), a∘b=f}  a ⊗ b        ε(f) = λ·[f is an identity]

With λ = 1 and a monoidal product that lifts factorizations bijectively this
is a bialgebra; a finite 2-group needs λ = |S| (the source subgroup size) and
gives a weak Hopf algebra.  Every law is checked as an exact equality of
rational vectors on an enumerated fragment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Optional

from .category import (
    CategoryInstance,
    factor_pairs,
    fragment,
    is_identity,
    morphism_length,
)
from .errors import InvariantError, UnsupportedOperationError
from .linalg import FreeVec, coerce_scalar
from .monoidal import MonoidalInstance, closed_pairs, require_object_group
from .reports import CheckResult, Report

Mor = Any


@dataclass(frozen=True)
class IncidenceConfig:
    """A category instance together with the coproduct scale λ ≠ 0."""

    instance: CategoryInstance
    scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        scale = coerce_scalar(self.scale)
        if scale == 0:
            raise InvariantError("incidence scale λ must be nonzero")
        object.__setattr__(self, "scale", scale)


@dataclass(frozen=True)
class WeakHopfData:
    """An incidence config with a basis-level antipode map."""

    config: IncidenceConfig
    antipode: Callable[[Mor], Mor]


def bialgebra_config(inst: MonoidalInstance) -> IncidenceConfig:
    """The λ = 1 config used by every combinatorial (bialgebra) instance."""
    return IncidenceConfig(instance=inst, scale=Fraction(1))


def coproduct(cfg: IncidenceConfig, f: Mor) -> FreeVec:
    """Δ(f) as a vector over pair keys ``(a, b)``."""
    coeff = 1 / cfg.scale
    return FreeVec((pair, coeff) for pair in factor_pairs(cfg.instance, f))


def counit(cfg: IncidenceConfig, f: Mor) -> Fraction:
    """ε(f): λ on identities, 0 elsewhere."""
    return cfg.scale if is_identity(cfg.instance, f) else Fraction(0)


def counit_left(cfg: IncidenceConfig, pair_vec: FreeVec) -> FreeVec:
    """(ε⊗id) applied to a pair-key vector."""
    return FreeVec(
        (b, coeff * counit(cfg, a)) for (a, b), coeff in pair_vec.items()
    )


def counit_right(cfg: IncidenceConfig, pair_vec: FreeVec) -> FreeVec:
    """(id⊗ε) applied to a pair-key vector."""
    return FreeVec(
        (a, coeff * counit(cfg, b)) for (a, b), coeff in pair_vec.items()
    )


def delta_left(cfg: IncidenceConfig, f: Mor) -> FreeVec:
    """(Δ⊗id)Δ(f) as a vector over triple keys."""
    pairs: list[tuple[tuple, Fraction]] = []
    for (a, b), coeff in coproduct(cfg, f).items():
        for (a1, a2), inner in coproduct(cfg, a).items():
            pairs.append(((a1, a2, b), coeff * inner))
    return FreeVec(pairs)


def delta_right(cfg: IncidenceConfig, f: Mor) -> FreeVec:
    """(id⊗Δ)Δ(f) as a vector over triple keys."""
    pairs: list[tuple[tuple, Fraction]] = []
    for (a, b), coeff in coproduct(cfg, f).items():
        for (b1, b2), inner in coproduct(cfg, b).items():
            pairs.append(((a, b1, b2), coeff * inner))
    return FreeVec(pairs)


def _monoidal(cfg: IncidenceConfig) -> MonoidalInstance:
    if not isinstance(cfg.instance, MonoidalInstance):
        raise UnsupportedOperationError(
            f"{cfg.instance.name}: operation needs a monoidal product"
        )
    return cfg.instance


def product_lin(cfg: IncidenceConfig, u: FreeVec, v: FreeVec) -> FreeVec:
    """Bilinear extension of the monoidal product to morphism-key vectors."""
    inst = _monoidal(cfg)
    pairs: list[tuple[Mor, Fraction]] = []
    for fk, fc in u.items():
        for gk, gc in v.items():
            pairs.append((inst.product(fk, gk), fc * gc))
    return FreeVec(pairs)


def pair_product_lin(cfg: IncidenceConfig, u: FreeVec, v: FreeVec) -> FreeVec:
    """Componentwise product on pair-key vectors: (a⊗b)(c⊗d) = (a·c)⊗(b·d)."""
    inst = _monoidal(cfg)
    pairs: list[tuple[tuple, Fraction]] = []
    for (a, b), fc in u.items():
        for (c, d), gc in v.items():
            pairs.append(((inst.product(a, c), inst.product(b, d)), fc * gc))
    return FreeVec(pairs)


def triple_product_lin(cfg: IncidenceConfig, u: FreeVec, v: FreeVec) -> FreeVec:
    """Componentwise product on triple-key vectors."""
    inst = _monoidal(cfg)
    pairs: list[tuple[tuple, Fraction]] = []
    for (a, b, c), fc in u.items():
        for (d, e, g), gc in v.items():
            pairs.append(
                (
                    (inst.product(a, d), inst.product(b, e), inst.product(c, g)),
                    fc * gc,
                )
            )
    return FreeVec(pairs)


def unit_vector(cfg: IncidenceConfig) -> FreeVec:
    """The algebra unit: the identity at the monoidal unit object."""
    inst = _monoidal(cfg)
    return FreeVec.basis(inst.identity(inst.unit_obj))


def u_eps(cfg: IncidenceConfig) -> Callable[[Mor], FreeVec]:
    """The convolution unit f ↦ ε(f)·i₁ as a basis-indexed map."""
    one = unit_vector(cfg)

    def at(f: Mor) -> FreeVec:
        return one.scaled(counit(cfg, f))

    return at


def convolve(
    cfg: IncidenceConfig,
    F: Callable[[Mor], FreeVec],
    G: Callable[[Mor], FreeVec],
) -> Callable[[Mor], FreeVec]:
    """Convolution product of basis-indexed maps: (F*G)(f) = Σ F(a)·G(b) over Δ(f)."""

    def at(f: Mor) -> FreeVec:
        total = FreeVec.zero()
        for (a, b), coeff in coproduct(cfg, f).items():
            total = total + product_lin(cfg, F(a), G(b)).scaled(coeff)
        return total

    return at


@lru_cache(maxsize=None)
def antipode_combinatorial(cfg: IncidenceConfig, f: Mor) -> FreeVec:
    """Antipode of a λ = 1 combinatorial instance with a group object monoid.

    The convolution-inverse recursion: S(i_x) = i_{x⁻¹}, and for a
    non-identity f : x → y

        S(f) = −( i_{y⁻¹}·f  +  Σ S(a)·b ) · i_{x⁻¹}

    where the sum runs over factor pairs (a, b) of f with a neither an
    identity nor f itself.  Each such a has strictly smaller length, so the
    recursion terminates on Möbius instances.
    """
    inst = _monoidal(cfg)
    if cfg.scale != 1:
        raise UnsupportedOperationError(
            f"{inst.name}: the combinatorial antipode needs λ = 1, got {cfg.scale}"
        )
    inverse = require_object_group(inst)
    x = inst.src(f)
    y = inst.dst(f)
    if is_identity(cfg.instance, f):
        return FreeVec.basis(inst.identity(inverse(x)))
    acc = product_lin(
        cfg, FreeVec.basis(inst.identity(inverse(y))), FreeVec.basis(f)
    )
    for a, b in factor_pairs(inst, f):
        if a == f or is_identity(inst, a):
            continue
        acc = acc + product_lin(cfg, antipode_combinatorial(cfg, a), FreeVec.basis(b))
    return -product_lin(cfg, acc, FreeVec.basis(inst.identity(inverse(x))))


def antipode_map(cfg: IncidenceConfig) -> Callable[[Mor], FreeVec]:
    return lambda f: antipode_combinatorial(cfg, f)


def identity_map(cfg: IncidenceConfig) -> Callable[[Mor], FreeVec]:
    return lambda f: FreeVec.basis(f)


def collapse_identities(cfg: IncidenceConfig, u: FreeVec) -> FreeVec:
    """Send every identity basis morphism to i₁ and re-collect.

    This is the quotient by the span of {i_x − i₁} on representatives; it is
    a coalgebra map only in special situations, which the tests pin down per
    instance.
    """
    inst = _monoidal(cfg)
    one = inst.identity(inst.unit_obj)
    return u.map_basis(lambda f: one if is_identity(inst, f) else f)


def collapsed_coproduct(cfg: IncidenceConfig, f: Mor) -> FreeVec:
    """Δ followed by the identity collapse on both tensor legs."""
    inst = _monoidal(cfg)
    one = inst.identity(inst.unit_obj)

    def collapse(m: Mor) -> Mor:
        return one if is_identity(inst, m) else m

    return coproduct(cfg, f).map_basis(lambda pair: (collapse(pair[0]), collapse(pair[1])))


def _sample(cfg: IncidenceConfig, sample: Optional[Iterable[Mor]], bound: Optional[int]) -> list:
    if sample is not None:
        return list(sample)
    return fragment(cfg.instance, bound)


def check_coalgebra(
    cfg: IncidenceConfig,
    sample: Optional[Iterable[Mor]] = None,
    bound: Optional[int] = None,
) -> Report:
    """Coassociativity and both counit laws, morphism by morphism."""
    inst = cfg.instance
    mors = _sample(cfg, sample, bound)
    report = Report(title=f"{inst.name}: coalgebra laws (λ={cfg.scale})")

    fail = ""
    for f in mors:
        if delta_left(cfg, f) != delta_right(cfg, f):
            fail = f"coassociativity fails at {inst.render(f)}"
            break
    report.record("coassociativity", not fail, fail, len(mors))

    fail = ""
    for f in mors:
        target = FreeVec.basis(f)
        pair_vec = coproduct(cfg, f)
        if counit_left(cfg, pair_vec) != target:
            fail = f"(ε⊗id)Δ != id at {inst.render(f)}"
            break
        if counit_right(cfg, pair_vec) != target:
            fail = f"(id⊗ε)Δ != id at {inst.render(f)}"
            break
    report.record("counit laws", not fail, fail, len(mors))
    return report


def check_bialgebra(
    cfg: IncidenceConfig,
    sample: Optional[Iterable[Mor]] = None,
    bound: Optional[int] = None,
) -> Report:
    """The λ = 1 bialgebra laws on the fragment.

    Coassociativity, counit laws, Δ(f·g) = Δ(f)Δ(g), ε(f·g) = ε(f)ε(g), and
    the grouplike unit Δ(i₁) = i₁⊗i₁, all as exact equalities.
    """
    inst = _monoidal(cfg)
    if cfg.scale != 1:
        raise InvariantError(
            f"{inst.name}: bialgebra checks require λ = 1, got {cfg.scale}"
        )
    mors = _sample(cfg, sample, bound)
    report = Report(title=f"{inst.name}: bialgebra laws")

    for result in check_coalgebra(cfg, mors).results:
        report.add(result)

    def pairs() -> Iterable[tuple]:
        if sample is not None:
            return ((f, g) for f in mors for g in mors)
        size_bound = bound if bound is not None else inst.default_bound
        return closed_pairs(inst, mors, size_bound)

    fail = ""
    cases = 0
    for f, g in pairs():
        cases += 1
        left = coproduct(cfg, inst.product(f, g))
        right = pair_product_lin(cfg, coproduct(cfg, f), coproduct(cfg, g))
        if left != right:
            fail = (
                f"Δ({inst.render(f)} · {inst.render(g)}) != "
                f"Δ({inst.render(f)})Δ({inst.render(g)})"
            )
            break
    report.record("coproduct multiplicative", not fail, fail, cases)

    fail = ""
    cases = 0
    for f, g in pairs():
        cases += 1
        if counit(cfg, inst.product(f, g)) != counit(cfg, f) * counit(cfg, g):
            fail = f"ε({inst.render(f)} · {inst.render(g)}) != ε·ε"
            break
    report.record("counit multiplicative", not fail, fail, cases)

    one = inst.identity(inst.unit_obj)
    grouplike = coproduct(cfg, one) == FreeVec.basis((one, one))
    report.record(
        "unit is grouplike",
        grouplike,
        "" if grouplike else f"Δ(i₁) has {len(coproduct(cfg, one))} terms",
        1,
    )
    return report


def check_pointedness_filtration(
    cfg: IncidenceConfig,
    sample: Optional[Iterable[Mor]] = None,
    bound: Optional[int] = None,
) -> Report:
    """Length filtration is a coalgebra filtration: ℓ(a)+ℓ(b) ≤ ℓ(f).

    Lengths are extended naturals (∞ absorbs addition and dominates every
    comparison), so the check is meaningful on non-Möbius instances too.
    """
    inst = cfg.instance
    mors = _sample(cfg, sample, bound)
    report = Report(title=f"{inst.name}: length filtration")
    fail = ""
    cases = 0
    for f in mors:
        lf = morphism_length(inst, f)
        for a, b in factor_pairs(inst, f):
            cases += 1
            la = morphism_length(inst, a)
            lb = morphism_length(inst, b)
            total = math.inf if (la is math.inf or lb is math.inf) else la + lb
            if total > lf:
                fail = (
                    f"ℓ({inst.render(a)}) + ℓ({inst.render(b)}) = {total} > "
                    f"ℓ({inst.render(f)}) = {lf}"
                )
                break
        if fail:
            break
    report.record("ℓ(a)+ℓ(b) ≤ ℓ(f) on all factor pairs", not fail, fail, cases)
    return report


def check_weak_hopf(
    data: WeakHopfData,
    sample: Optional[Iterable[Mor]] = None,
    bound: Optional[int] = None,
) -> Report:
    """The weak Hopf axioms (A1)–(A6) on the fragment.

    (A1) coassociativity and counit laws; (A2) associativity and unit laws;
    (A3) Δ(ab) = Δ(a)Δ(b); (A4) weak counit multiplicativity in both
    orderings; (A5) weak unit comultiplicativity in both orderings;
    (A6) the three antipode identities

        S(a₍₁₎)·a₍₂₎        = 1₍₁₎·ε(a·1₍₂₎)
        a₍₁₎·S(a₍₂₎)        = ε(1₍₁₎·a)·1₍₂₎
        S(a₍₁₎)·a₍₂₎·S(a₍₃₎) = S(a)
    """
    cfg = data.config
    inst = _monoidal(cfg)
    S = data.antipode
    mors = _sample(cfg, sample, bound)
    report = Report(title=f"{inst.name}: weak Hopf axioms (λ={cfg.scale})")

    for result in check_coalgebra(cfg, mors).results:
        report.add(
            CheckResult(
                name=f"(A1) {result.name}",
                ok=result.ok,
                detail=result.detail,
                cases=result.cases,
            )
        )

    one = inst.identity(inst.unit_obj)
    fail = ""
    cases = 0
    for f in mors:
        cases += 1
        if inst.product(f, one) != f or inst.product(one, f) != f:
            fail = f"unit law fails at {inst.render(f)}"
            break
    if not fail:
        for f in mors:
            for g in mors:
                for h in mors:
                    cases += 1
                    if inst.product(inst.product(f, g), h) != inst.product(
                        f, inst.product(g, h)
                    ):
                        fail = "associativity fails"
                        break
                if fail:
                    break
            if fail:
                break
    report.record("(A2) associative unital product", not fail, fail, cases)

    fail = ""
    cases = 0
    for f in mors:
        for g in mors:
            cases += 1
            left = coproduct(cfg, inst.product(f, g))
            right = pair_product_lin(cfg, coproduct(cfg, f), coproduct(cfg, g))
            if left != right:
                fail = f"Δ multiplicativity fails at ({inst.render(f)}, {inst.render(g)})"
                break
        if fail:
            break
    report.record("(A3) coproduct multiplicative", not fail, fail, cases)

    delta_one = coproduct(cfg, one)
    fail = ""
    cases = 0
    for a in mors:
        for b in mors:
            cases += 1
            target = counit(cfg, inst.product(a, b))
            first = sum(
                (
                    coeff * counit(cfg, inst.product(a, u)) * counit(cfg, inst.product(v, b))
                    for (u, v), coeff in delta_one.items()
                ),
                Fraction(0),
            )
            second = sum(
                (
                    coeff * counit(cfg, inst.product(a, v)) * counit(cfg, inst.product(u, b))
                    for (u, v), coeff in delta_one.items()
                ),
                Fraction(0),
            )
            if first != target or second != target:
                fail = (
                    f"(A4) fails at ({inst.render(a)}, {inst.render(b)}): "
                    f"ε(ab)={target}, forms {first}/{second}"
                )
                break
        if fail:
            break
    report.record("(A4) counit weakly multiplicative", not fail, fail, cases)

    one_vec = unit_vector(cfg)
    left_ext = FreeVec(
        (((u, v, one)), coeff) for (u, v), coeff in delta_one.items()
    )
    right_ext = FreeVec(
        (((one, u, v)), coeff) for (u, v), coeff in delta_one.items()
    )
    delta2_one = delta_left(cfg, one)
    first = triple_product_lin(cfg, left_ext, right_ext)
    second = triple_product_lin(cfg, right_ext, left_ext)
    ok5 = first == delta2_one == second
    detail5 = "" if ok5 else "Δ²(1) disagrees with the weak comultiplicativity products"
    report.record("(A5) unit weakly comultiplicative", ok5, detail5, 2)

    fail = ""
    cases = 0
    for a in mors:
        cases += 1
        delta_a = coproduct(cfg, a)
        left1 = FreeVec.zero()
        left2 = FreeVec.zero()
        for (a1, a2), coeff in delta_a.items():
            left1 = left1 + FreeVec.basis(inst.product(S(a1), a2), coeff)
            left2 = left2 + FreeVec.basis(inst.product(a1, S(a2)), coeff)
        right1 = FreeVec(
            (u, coeff * counit(cfg, inst.product(a, v)))
            for (u, v), coeff in delta_one.items()
        )
        right2 = FreeVec(
            (v, coeff * counit(cfg, inst.product(u, a)))
            for (u, v), coeff in delta_one.items()
        )
        left3 = FreeVec.zero()
        for (a1, a2, a3), coeff in delta_left(cfg, a).items():
            left3 = left3 + FreeVec.basis(
                inst.product(inst.product(S(a1), a2), S(a3)), coeff
            )
        right3 = FreeVec.basis(S(a))
        if left1 != right1:
            fail = f"(A6) S(a₍₁₎)a₍₂₎ fails at {inst.render(a)}"
            break
        if left2 != right2:
            fail = f"(A6) a₍₁₎S(a₍₂₎) fails at {inst.render(a)}"
            break
        if left3 != right3:
            fail = f"(A6) S(a₍₁₎)a₍₂₎S(a₍₃₎) fails at {inst.render(a)}"
            break
    report.record("(A6) antipode identities", not fail, fail, cases)
    return report
