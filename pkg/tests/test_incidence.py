"""Coproduct, counit, convolution, and the check suites on small instances."""

from fractions import Fraction

import pytest

from inchopf.errors import InvariantError, UnsupportedOperationError
from inchopf.incidence import (
    IncidenceConfig,
    antipode_combinatorial,
    bialgebra_config,
    check_bialgebra,
    check_coalgebra,
    check_pointedness_filtration,
    collapse_identities,
    collapsed_coproduct,
    convolve,
    coproduct,
    counit,
    delta_left,
    delta_right,
    identity_map,
    u_eps,
    unit_vector,
)
from inchopf.linalg import FreeVec
from inchopf.monoids import cyclic_group
from inchopf.relmonoid import (
    build_relmonoid_instance,
    equality_relation,
    monex_instance,
)


@pytest.fixture(scope="module")
def monex():
    return monex_instance()


@pytest.fixture(scope="module")
def monex_cfg(monex):
    return IncidenceConfig(instance=monex)


def test_config_rejects_zero_and_float_scale(monex):
    with pytest.raises(InvariantError):
        IncidenceConfig(instance=monex, scale=0)
    with pytest.raises(InvariantError):
        IncidenceConfig(instance=monex, scale=0.5)


def test_scaled_coproduct_and_counit(monex):
    cfg = IncidenceConfig(instance=monex, scale=2)
    beta = monex.parse("(x,y)")
    vec = coproduct(cfg, beta)
    assert vec.coeff((monex.parse("(x,x)"), beta)) == Fraction(1, 2)
    assert counit(cfg, monex.identity("x")) == 2
    assert counit(cfg, beta) == 0


def test_coassociativity_by_hand(monex, monex_cfg):
    f = monex.parse("(xy,yx)")
    assert delta_left(monex_cfg, f) == delta_right(monex_cfg, f)


def test_counit_laws_by_hand(monex, monex_cfg):
    from inchopf.incidence import counit_left, counit_right

    f = monex.parse("(xy,yx)")
    pair_vec = coproduct(monex_cfg, f)
    assert counit_left(monex_cfg, pair_vec) == FreeVec.basis(f)
    assert counit_right(monex_cfg, pair_vec) == FreeVec.basis(f)


def test_check_coalgebra_green(monex_cfg):
    report = check_coalgebra(monex_cfg, bound=2)
    assert report.ok, report.render()


def test_check_coalgebra_accepts_sample(monex, monex_cfg):
    report = check_coalgebra(monex_cfg, sample=[monex.parse("(xx,yy)")])
    assert report.ok, report.render()


def test_check_bialgebra_green(monex_cfg):
    report = check_bialgebra(monex_cfg, bound=2)
    assert report.ok, report.render()


def test_bialgebra_config_requires_unit_scale(monex):
    assert bialgebra_config(monex).scale == 1
    cfg = IncidenceConfig(instance=monex, scale=3)
    with pytest.raises(InvariantError):
        check_bialgebra(cfg, bound=1)


def test_unit_vector_and_u_eps(monex, monex_cfg):
    one = unit_vector(monex_cfg)
    assert one == FreeVec.basis(monex.identity(""))
    ue = u_eps(monex_cfg)
    assert ue(monex.identity("xy")) == one
    assert ue(monex.parse("(x,y)")).is_zero()


def test_convolution_identity(monex, monex_cfg):
    # id * id applied to f sums the products a·... of its factorizations;
    # u_eps is the convolution unit: (u_eps * id) = id = (id * u_eps).
    ident = identity_map(monex_cfg)
    left = convolve(monex_cfg, u_eps(monex_cfg), ident)
    right = convolve(monex_cfg, ident, u_eps(monex_cfg))
    for text in ["(e,e)", "(x,y)", "(xy,yx)"]:
        f = monex.parse(text)
        assert left(f) == FreeVec.basis(f)
        assert right(f) == FreeVec.basis(f)


def test_antipode_unsupported_without_object_group(monex_cfg, monex):
    with pytest.raises(UnsupportedOperationError):
        antipode_combinatorial(monex_cfg, monex.parse("(x,y)"))


def test_antipode_on_group_algebra():
    g = cyclic_group(3)
    inst = build_relmonoid_instance(g, equality_relation(g), name="z3eq")
    cfg = IncidenceConfig(instance=inst)
    for x in g.elements():
        f = inst.identity(x)
        s = antipode_combinatorial(cfg, f)
        assert s == FreeVec.basis(inst.identity(g.inverse(x)))
    # antipode is a convolution inverse of the identity
    from inchopf.incidence import antipode_map

    conv = convolve(cfg, antipode_map(cfg), identity_map(cfg))
    ue = u_eps(cfg)
    for x in g.elements():
        f = inst.identity(x)
        assert conv(f) == ue(f)


def test_collapse_identities(monex, monex_cfg):
    alpha = monex.parse("(x,x)")
    beta = monex.parse("(x,y)")
    one = monex.identity("")
    vec = FreeVec([(alpha, 2), (beta, 1)])
    out = collapse_identities(monex_cfg, vec)
    assert out.coeff(one) == 2
    assert out.coeff(beta) == 1


def test_collapsed_coproduct_golden(monex, monex_cfg):
    alpha = monex.parse("(x,x)")
    beta = monex.parse("(x,y)")
    gamma = monex.parse("(y,x)")
    one = monex.identity("")
    out = collapsed_coproduct(monex_cfg, alpha)
    assert out == FreeVec([((one, one), 1), ((beta, gamma), 1)])


def test_pointedness_filtration_monex(monex_cfg):
    report = check_pointedness_filtration(monex_cfg, bound=2)
    assert report.ok, report.render()
