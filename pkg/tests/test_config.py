"""Config loading: field grammar, literals, kind dispatch, and overrides."""

from fractions import Fraction

import pytest

from inchopf.config import (
    KINDS,
    LoadedInstance,
    load_file,
    load_text,
    parse_fields,
    parse_monoid,
    parse_relation,
)
from inchopf.errors import ConfigError
from inchopf.monoids import FiniteMonoid, cyclic_group, monoid_from_table
from inchopf.monoidal import MonoidalInstance


# ---------------------------------------------------------------------------
# field grammar


def test_parse_fields_ignores_comments_and_blanks():
    text = "\n# a comment\nkind = monex   # trailing\n\n  scale = 2 \n"
    assert parse_fields(text) == {"kind": "monex", "scale": "2"}


def test_parse_fields_rejects_bad_lines():
    with pytest.raises(ConfigError, match="expected 'key = value'"):
        parse_fields("kind monex\n")
    with pytest.raises(ConfigError, match="empty key or value"):
        parse_fields("kind =\n")
    with pytest.raises(ConfigError, match="duplicate field"):
        parse_fields("kind = monex\nkind = skew\n")


def test_load_requires_known_kind():
    with pytest.raises(ConfigError, match="missing required field 'kind'"):
        load_text("scale = 2\n")
    with pytest.raises(ConfigError, match="unknown kind 'ring'"):
        load_text("kind = ring\n")
    with pytest.raises(ConfigError, match="kind monex: unknown field 'group'"):
        load_text("kind = monex\ngroup = cyclic(2)\n")


# ---------------------------------------------------------------------------
# monoid and group literals


def test_named_group_literals():
    assert parse_monoid("trivial").size == 1
    z4 = parse_monoid("cyclic(4)")
    assert isinstance(z4, FiniteMonoid)
    assert z4.size == 4 and z4.is_group
    assert z4.names == ("0", "1", "2", "3")
    assert parse_monoid("symmetric(3)").size == 6
    assert parse_monoid("alternating(3)").size == 3
    with pytest.raises(ConfigError, match="order must be positive"):
        parse_monoid("cyclic(0)")


def test_table_literal_with_and_without_names():
    flip = parse_monoid("table[[0,1],[1,0]]")
    assert flip.size == 2 and flip.is_group
    named = parse_monoid("table[[0,1],[1,0]] names{e,a}")
    assert named.names == ("e", "a")


def test_perms_literal_closes_generators():
    rot = parse_monoid("perms{[1,2,0]}")
    assert rot.size == 3
    assert rot.names == ("p012", "p120", "p201")
    # two transpositions on three points generate all of S3
    assert parse_monoid("perms{[1,0,2],[0,2,1]}").size == 6
    with pytest.raises(ConfigError, match="is not a permutation"):
        parse_monoid("perms{[0,0]}")


def test_free_and_unknown_literals():
    assert parse_monoid("free{x,y}") == ("free", ("x", "y"))
    with pytest.raises(ConfigError, match="unrecognized monoid literal"):
        parse_monoid("weird(3)")


# ---------------------------------------------------------------------------
# relation literals


def test_equality_relation_is_the_diagonal():
    z2 = cyclic_group(2)
    rel = parse_relation("equality", z2)
    assert sorted(rel.pairs) == [(0, 0), (1, 1)]


def test_covers_closure_on_an_idempotent_monoid():
    idem = monoid_from_table([[0, 1], [1, 1]], names=("e", "a"))
    rel = parse_relation("covers{(e,a)}", idem)
    assert sorted(rel.pairs) == [(0, 0), (0, 1), (1, 1)]
    same = parse_relation("pairs{(e,e),(a,a),(e,a)}", idem)
    assert same.pairs == rel.pairs


def test_incompatible_pairs_are_rejected():
    # 0 ≼ 1 on Z/2 forces 0·1 ≼ 1·1, i.e. 1 ≼ 0, which is missing
    with pytest.raises(ConfigError, match="not product-compatible"):
        parse_relation("pairs{(0,0),(1,1),(0,1)}", cyclic_group(2))
    with pytest.raises(ConfigError, match="no element named"):
        parse_relation("pairs{(q,q)}", cyclic_group(2))
    with pytest.raises(ConfigError, match="unrecognized relation literal"):
        parse_relation("junk", cyclic_group(2))


# ---------------------------------------------------------------------------
# kind dispatch


def _load(text: str) -> LoadedInstance:
    loaded = load_text(text)
    assert isinstance(loaded, LoadedInstance)
    return loaded


def test_bare_combinatorial_kinds():
    for kind in ("monex", "skew", "forest", "bigraph"):
        loaded = _load(f"kind = {kind}\n")
        assert loaded.kind == kind
        assert loaded.instance.name == kind
        assert loaded.hopf is None
        assert loaded.config.scale == 1


def test_relmonoid_free_words_with_bound():
    loaded = _load("kind = relmonoid\nmonoid = free{a,b}\nrelation = equal-length\nmax-word = 2\n")
    assert loaded.instance.name == "monex"
    assert loaded.instance.default_bound == 2
    f = loaded.instance.parse("(ab,ba)")
    assert loaded.instance.render(f) == "(ab,ba)"


def test_relmonoid_table_with_covers():
    loaded = _load(
        "kind = relmonoid\n"
        "monoid = table[[0,1],[1,1]] names{e,a}\n"
        "relation = covers{(e,a)}\n"
    )
    assert loaded.kind == "relmonoid"
    assert isinstance(loaded.instance, MonoidalInstance)
    assert loaded.hopf is None


def test_relmonoid_field_restrictions():
    with pytest.raises(ConfigError, match="only relation = equal-length"):
        load_text("kind = relmonoid\nmonoid = free{a,b}\nrelation = equality\n")
    with pytest.raises(ConfigError, match="needs a free"):
        load_text("kind = relmonoid\nmonoid = table[[0,1],[1,0]]\nrelation = equal-length\n")
    with pytest.raises(ConfigError, match="max-word applies only"):
        load_text(
            "kind = relmonoid\nmonoid = table[[0,1],[1,0]]\n"
            "relation = equality\nmax-word = 2\n"
        )
    with pytest.raises(ConfigError, match="missing required field 'relation'"):
        load_text("kind = relmonoid\nmonoid = free{a,b}\n")


def test_quiver_kind():
    plain = _load("kind = quiver\ngroup = cyclic(2)\n")
    assert plain.kind == "quiver" and plain.hopf is None
    with_z = _load("kind = quiver\ngroup = cyclic(2)\nz = 1\n")
    assert with_z.instance.name != ""
    with pytest.raises(ConfigError, match="no element named 'q'"):
        load_text("kind = quiver\ngroup = cyclic(2)\nz = q\n")
    with pytest.raises(ConfigError, match="must form a group"):
        load_text("kind = quiver\ngroup = table[[0,1],[1,1]]\n")


def test_xmod_kind_trivial_map_and_action():
    index_form = _load(
        "kind = xmod\nG = cyclic(2)\nH = cyclic(2)\ntau = [0,0]\nalpha = [[0,1],[0,1]]\n"
    )
    assert index_form.hopf is not None
    assert index_form.config.scale == 2  # λ = |H|
    map_form = _load(
        "kind = xmod\nG = cyclic(2)\nH = cyclic(2)\ntau = map{0:0,1:0}\nalpha = [[0,1],[0,1]]\n"
    )
    assert map_form.config.scale == index_form.config.scale


def test_xmod_rejects_bad_data():
    with pytest.raises(ConfigError, match="not multiplicative"):
        load_text(
            "kind = xmod\nG = cyclic(2)\nH = cyclic(2)\ntau = [0,0]\nalpha = [[1,0],[0,1]]\n"
        )
    with pytest.raises(ConfigError, match="duplicate image"):
        load_text(
            "kind = xmod\nG = cyclic(2)\nH = cyclic(2)\n"
            "tau = map{0:0,0:1}\nalpha = [[0,1],[0,1]]\n"
        )
    with pytest.raises(ConfigError, match="no image for fiber element"):
        load_text(
            "kind = xmod\nG = cyclic(2)\nH = cyclic(2)\n"
            "tau = map{0:0}\nalpha = [[0,1],[0,1]]\n"
        )


def test_normal_kind():
    loaded = _load("kind = normal\nG = symmetric(3)\nN = {e,(123),(132)}\n")
    assert loaded.hopf is not None
    assert loaded.config.scale == 3
    with pytest.raises(ConfigError, match="not a normal subgroup"):
        load_text("kind = normal\nG = symmetric(3)\nN = {e,(12)}\n")


def test_aut_kind():
    loaded = _load("kind = aut\nG = cyclic(3)\n")
    assert loaded.hopf is not None
    assert loaded.config.scale == 3  # λ = |G|, the fiber of conjugation
    assert _load("kind = aut\nG = symmetric(3)\n").config.scale == 6


# ---------------------------------------------------------------------------
# common overrides


def test_max_size_override():
    loaded = _load("kind = monex\nmax-size = 5\n")
    assert loaded.instance.default_bound == 5
    hopfy = _load("kind = normal\nG = symmetric(3)\nN = {e,(123),(132)}\nmax-size = 1\n")
    assert hopfy.instance.default_bound == 1
    assert hopfy.hopf.config.instance.default_bound == 1
    with pytest.raises(ConfigError, match="expected an integer"):
        load_text("kind = monex\nmax-size = x\n")


def test_scale_override():
    loaded = _load("kind = monex\nscale = 1/2\n")
    assert loaded.config.scale == Fraction(1, 2)
    hopfy = _load("kind = aut\nG = cyclic(3)\nscale = 2\n")
    assert hopfy.config.scale == 2
    assert hopfy.hopf.config.scale == 2
    with pytest.raises(ConfigError, match="nonzero"):
        load_text("kind = monex\nscale = 0\n")
    with pytest.raises(ConfigError, match="not a rational"):
        load_text("kind = monex\nscale = abc\n")


# ---------------------------------------------------------------------------
# files


def test_load_file_round_trip(tmp_path):
    path = tmp_path / "inst.cfg"
    path.write_text("kind = skew\n", encoding="utf-8")
    assert load_file(str(path)).kind == "skew"


def test_load_file_missing_path(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config"):
        load_file(str(tmp_path / "absent.cfg"))


def test_kinds_tuple_is_the_documented_set():
    assert set(KINDS) == {
        "relmonoid",
        "monex",
        "skew",
        "forest",
        "bigraph",
        "quiver",
        "xmod",
        "normal",
        "aut",
    }
