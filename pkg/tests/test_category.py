"""Category surface: factorizations, nondegenerate chains, lengths, checks."""

import math

import pytest

from inchopf.category import (
    CategoryInstance,
    brute_force_factor_pairs,
    check_locally_finite,
    check_mobius,
    compose,
    factor_pairs,
    fragment,
    is_identity,
    length,
    morphism_length,
    n2,
    nhat,
    nondeg_factorizations,
    scan_length,
)
from inchopf.errors import ComposeError, LengthDivergenceError
from inchopf.relmonoid import monex_instance


def z2_groupoid() -> CategoryInstance:
    """One object, morphisms {'e', 'g'} with g∘g = e: not a Möbius category."""
    table = {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("g", "g"): "e"}
    return CategoryInstance(
        name="z2-groupoid",
        src=lambda f: "*",
        dst=lambda f: "*",
        compose=lambda a, b: table[(a, b)],
        identity=lambda x: "e",
        factor_pairs=lambda f: tuple(
            (a, b) for a in ("e", "g") for b in ("e", "g") if table[(a, b)] == f
        ),
        objects=lambda bound: ["*"],
        morphisms=lambda bound: ["e", "g"],
        size=lambda f: 0,
        default_bound=0,
    )


def test_compose_guard():
    inst = monex_instance()
    f = inst.parse("(x,y)")
    g = inst.parse("(y,x)")
    assert compose(inst, f, g) == inst.parse("(x,x)")
    with pytest.raises(ComposeError):
        compose(inst, f, f)  # src (x,y) is 'y', dst is 'x'


def test_identity_detection():
    inst = monex_instance()
    assert is_identity(inst, inst.identity("xy"))
    assert not is_identity(inst, inst.parse("(x,y)"))


def test_n2_is_factor_pairs():
    inst = monex_instance()
    f = inst.parse("(xy,yx)")
    assert n2(inst, f) == list(factor_pairs(inst, f))
    assert len(n2(inst, f)) == 4  # one middle word per length-2 word


def test_factor_pairs_complete_against_brute_force():
    inst = monex_instance()
    pool = fragment(inst, bound=2)
    for f in pool:
        listed = set(factor_pairs(inst, f))
        assert set(brute_force_factor_pairs(inst, f, pool)) <= listed


def test_nondeg_chains_base_cases():
    inst = monex_instance()
    ident = inst.identity("x")
    f = inst.parse("(x,y)")
    assert nondeg_factorizations(inst, ident, 0) == [()]
    assert nondeg_factorizations(inst, f, 0) == []
    assert nondeg_factorizations(inst, f, 1) == [(f,)]
    assert nondeg_factorizations(inst, ident, 1) == []
    assert nhat(inst, f, 1) == [(f,)]


def test_nondeg_chains_can_skip_levels():
    # In the one-object Z/2 groupoid, g has no nondegenerate pair (both
    # factorizations g = e∘g = g∘e contain an identity), yet (g, g, g) is a
    # nondegenerate triple.  Level-by-level scans must not stop at a gap.
    inst = z2_groupoid()
    assert nondeg_factorizations(inst, "g", 2) == []
    assert nondeg_factorizations(inst, "g", 3) == [("g", "g", "g")]
    assert scan_length(inst, "g", 2) == 1
    assert scan_length(inst, "g", 3) == 3


def test_monex_alternating_chains():
    inst = monex_instance()
    f = inst.parse("(x,y)")
    # (x,y) = (x,y)∘(y,x)∘(x,y): an alternating nondegenerate triple
    assert (f, inst.parse("(y,x)"), f) in nondeg_factorizations(inst, f, 3)
    assert nondeg_factorizations(inst, f, 2) == []


def test_length_certificates():
    inst = monex_instance()
    assert length(inst, inst.identity("")) == 0
    assert length(inst, inst.parse("(x,y)")) == math.inf
    assert length(inst, inst.identity("x")) == math.inf
    assert morphism_length(inst, inst.parse("(xy,yy)")) == math.inf


def test_length_without_certificate_raises():
    inst = z2_groupoid()
    with pytest.raises(LengthDivergenceError):
        morphism_length(inst, "g", bound=4)


def test_check_locally_finite_passes_monex():
    inst = monex_instance()
    report = check_locally_finite(inst, bound=2)
    assert report.ok, report.render()


def test_check_locally_finite_accepts_sample():
    inst = monex_instance()
    sample = [inst.parse("(x,y)"), inst.parse("(y,y)")]
    report = check_locally_finite(inst, sample=sample)
    assert report.ok, report.render()


def test_check_mobius_fails_on_monex_with_witness():
    inst = monex_instance()
    report = check_mobius(inst, bound=1)
    assert not report.ok
    failed = {result.name for result in report.failures()}
    assert "identities factor only trivially" in failed
    detail = next(
        r.detail for r in report.results if r.name == "identities factor only trivially"
    )
    assert "(x,y)" in detail and "(y,x)" in detail


def test_check_mobius_fails_on_z2_groupoid():
    report = check_mobius(z2_groupoid())
    assert not report.ok
