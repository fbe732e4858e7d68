"""Instance configuration files for the command-line front end.

One structured text file describes one instance.  The format is
line-oriented: ``key = value`` fields, ``#`` comments, blank lines ignored,
whitespace insignificant around keys and values.  The required field is
``kind``; the rest of the payload depends on it.

Kinds and payloads::

    kind = monex          # two-letter words with the equal-length relation
    kind = skew           # skew shapes under stacking
    kind = forest         # operadic planar forests
    kind = bigraph        # abstract bigraphs
    kind = relmonoid      # monoid = <monoid>, relation = <relation>
    kind = quiver         # group = <group>, optional z = <element name>
    kind = xmod           # G = <group>, H = <group>,
                          # tau = <map>, alpha = <action table>
    kind = normal         # G = <group>, N = {element names}
    kind = aut            # G = <group>

Optional for every kind: ``max-size`` (positive fragment bound overriding
the instance default) and ``scale`` (nonzero rational overriding the
coproduct scale; expert use only).

Group and monoid values::

    trivial | cyclic(n) | symmetric(n) | alternating(n)
    table[[0,1],[1,0]]                row-major multiplication table
    table[[0,1],[1,0]] names{e,a}     the same with element names
    perms{[1,2,0],[1,0,2]}            image-list generators, closed at load
    free{x,y}                         free words (relmonoid only; pairs with
                                      relation = equal-length)

Relation values (relmonoid)::

    equality | equal-length
    pairs{(e,a),(a,e)}                explicit related pairs by element name
    covers{(e,a)}                     poset covers, transitively closed

Crossed-module maps (xmod)::

    tau   = [0,1,2]                   base index per fiber element, or
    tau   = map{h0:g0, h1:g2}         by element names
    alpha = [[0,1],[1,0]]             fiber index per (base row, fiber col)
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .category import CategoryInstance
from .errors import ConfigError, InchopfError
from .bigraph import bigraph_instance
from .forest import forest_instance
from .incidence import IncidenceConfig, WeakHopfData, bialgebra_config
from .monoids import (
    FiniteMonoid,
    alternating_group,
    cyclic_group,
    monoid_from_table,
    symmetric_group,
    trivial_group,
)
from .quiver import build_quiver_instance, make_quiver_spec
from .relmonoid import (
    Relation,
    build_relmonoid_instance,
    equality_relation,
    make_relation,
    monex_instance,
    relation_from_covers,
)
from .skew import skew_instance
from .twogroup import (
    aut_two_group,
    normal_subgroup_xmod,
    validate_crossed_module,
    weak_hopf_structure,
)

KINDS = (
    "relmonoid",
    "monex",
    "skew",
    "forest",
    "bigraph",
    "quiver",
    "xmod",
    "normal",
    "aut",
)

_FIELDS_BY_KIND = {
    "relmonoid": {"monoid", "relation", "max-word"},
    "monex": set(),
    "skew": set(),
    "forest": set(),
    "bigraph": set(),
    "quiver": {"group", "z"},
    "xmod": {"G", "H", "tau", "alpha"},
    "normal": {"G", "N"},
    "aut": {"G"},
}

_COMMON_FIELDS = {"kind", "max-size", "scale"}


@dataclass(frozen=True)
class LoadedInstance:
    """A configured instance ready for the verification suites.

    ``config`` carries the coproduct scale appropriate to the kind (1 for
    the combinatorial families, the source-subgroup size for 2-groups,
    unless overridden); ``hopf`` is set exactly when an antipode map
    exists at the basis level (the 2-group kinds).
    """

    kind: str
    instance: CategoryInstance
    config: IncidenceConfig
    hopf: Optional[WeakHopfData] = None


def parse_fields(text: str) -> dict:
    """Split config text into a key -> raw-value dict, validating shape only."""
    fields: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value in {raw!r}")
        if key in fields:
            raise ConfigError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = value
    return fields


def _compact(value: str) -> str:
    return "".join(value.split())


def _parse_int(value: str, field: str, minimum: int = 1) -> int:
    if not value.lstrip("-").isdigit():
        raise ConfigError(f"field {field}: expected an integer, got {value!r}")
    number = int(value)
    if number < minimum:
        raise ConfigError(f"field {field}: {number} is below the minimum {minimum}")
    return number


def _split_top_level(body: str, seps: str = ",") -> list[str]:
    """Split on separators not nested inside (), [], or {}."""
    parts: list[str] = []
    depth = 0
    current = ""
    for ch in body:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
            if depth < 0:
                raise ConfigError(f"unbalanced brackets in {body!r}")
        if ch in seps and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += ch
    if depth != 0:
        raise ConfigError(f"unbalanced brackets in {body!r}")
    parts.append(current)
    return [part for part in parts if part]


def _parse_int_list(body: str, field: str) -> list[int]:
    if not (body.startswith("[") and body.endswith("]")):
        raise ConfigError(f"field {field}: expected [..] list, got {body!r}")
    out = []
    for item in _split_top_level(body[1:-1]):
        if not item.lstrip("-").isdigit():
            raise ConfigError(f"field {field}: non-integer entry {item!r}")
        out.append(int(item))
    return out


def parse_monoid(value: str, field: str = "monoid"):
    """A monoid/group literal: a FiniteMonoid, or ('free', letters)."""
    text = _compact(value)
    if text == "trivial":
        return trivial_group()
    named = re.fullmatch(r"(cyclic|symmetric|alternating)\((\d+)\)", text)
    if named:
        maker = {
            "cyclic": cyclic_group,
            "symmetric": symmetric_group,
            "alternating": alternating_group,
        }[named.group(1)]
        try:
            return maker(int(named.group(2)))
        except InchopfError as exc:
            raise ConfigError(f"field {field}: {exc}") from exc
    if text.startswith("free{") and text.endswith("}"):
        letters = tuple(_split_top_level(text[len("free{") : -1]))
        if not letters:
            raise ConfigError(f"field {field}: free{{}} needs at least one letter")
        return ("free", letters)
    if text.startswith("table["):
        match = re.fullmatch(r"table(\[.*\])(?:names\{(.*)\})?", text)
        if not match:
            raise ConfigError(f"field {field}: bad table literal {value!r}")
        rows = [
            _parse_int_list(row, field)
            for row in _split_top_level(match.group(1)[1:-1])
        ]
        names = None
        if match.group(2) is not None:
            names = tuple(_split_top_level(match.group(2)))
        try:
            return monoid_from_table(rows, names=names)
        except InchopfError as exc:
            raise ConfigError(f"field {field}: {exc}") from exc
    if text.startswith("perms{") and text.endswith("}"):
        images = [
            tuple(_parse_int_list(item, field))
            for item in _split_top_level(text[len("perms{") : -1])
        ]
        if not images:
            raise ConfigError(f"field {field}: perms{{}} needs at least one generator")
        return _closure_of_permutations(images, field)
    raise ConfigError(f"field {field}: unrecognized monoid literal {value!r}")


def _closure_of_permutations(images: list[tuple], field: str) -> FiniteMonoid:
    degree = len(images[0])
    for img in images:
        if len(img) != degree or sorted(img) != list(range(degree)):
            raise ConfigError(
                f"field {field}: {list(img)} is not a permutation of 0..{degree - 1}"
            )
    elements = {tuple(range(degree))}
    frontier = list(elements | set(images))
    elements |= set(images)
    while frontier:
        perm = frontier.pop()
        for gen in images:
            composite = tuple(perm[gen[i]] for i in range(degree))
            if composite not in elements:
                elements.add(composite)
                frontier.append(composite)
    perms = sorted(elements)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[i]] for i in range(degree))] for q in perms)
        for p in perms
    )
    names = tuple("p" + "".join(map(str, p)) for p in perms)
    return FiniteMonoid(table=table, unit=index[tuple(range(degree))], names=names)


def _parse_name_pairs(body: str, field: str) -> list[tuple[str, str]]:
    pairs = []
    for item in _split_top_level(body):
        match = re.fullmatch(r"\((.*?),(.*?)\)", item)
        if not match:
            raise ConfigError(f"field {field}: expected (a,b) pairs, got {item!r}")
        pairs.append((match.group(1), match.group(2)))
    return pairs


def _element_index(monoid: FiniteMonoid, name: str, field: str) -> int:
    try:
        return monoid.index_of(name)
    except InchopfError as exc:
        raise ConfigError(f"field {field}: {exc}") from exc


def parse_relation(value: str, monoid: FiniteMonoid, field: str = "relation") -> Relation:
    text = _compact(value)
    if text == "equality":
        return equality_relation(monoid)
    if text.startswith("pairs{") and text.endswith("}"):
        pairs = [
            (
                _element_index(monoid, a, field),
                _element_index(monoid, b, field),
            )
            for a, b in _parse_name_pairs(text[len("pairs{") : -1], field)
        ]
        try:
            return make_relation(monoid, pairs)
        except InchopfError as exc:
            raise ConfigError(f"field {field}: {exc}") from exc
    if text.startswith("covers{") and text.endswith("}"):
        covers = [
            (
                _element_index(monoid, a, field),
                _element_index(monoid, b, field),
            )
            for a, b in _parse_name_pairs(text[len("covers{") : -1], field)
        ]
        try:
            return relation_from_covers(monoid, covers)
        except InchopfError as exc:
            raise ConfigError(f"field {field}: {exc}") from exc
    raise ConfigError(f"field {field}: unrecognized relation literal {value!r}")


def _parse_tau(value: str, base: FiniteMonoid, fiber: FiniteMonoid) -> list[int]:
    text = _compact(value)
    if text.startswith("map{") and text.endswith("}"):
        table = [-1] * fiber.size
        for item in _split_top_level(text[len("map{") : -1]):
            h_name, sep, g_name = item.partition(":")
            if not sep:
                raise ConfigError(f"field tau: expected h:g entries, got {item!r}")
            h = _element_index(fiber, h_name, "tau")
            if table[h] != -1:
                raise ConfigError(f"field tau: duplicate image for {h_name!r}")
            table[h] = _element_index(base, g_name, "tau")
        if -1 in table:
            missing = fiber.name(table.index(-1))
            raise ConfigError(f"field tau: no image for fiber element {missing!r}")
        return table
    return _parse_int_list(text, "tau")


def _require(fields: dict, key: str, kind: str) -> str:
    if key not in fields:
        raise ConfigError(f"kind {kind}: missing required field {key!r}")
    return fields[key]


def _finite_monoid(value: str, field: str) -> FiniteMonoid:
    parsed = parse_monoid(value, field)
    if not isinstance(parsed, FiniteMonoid):
        raise ConfigError(f"field {field}: free{{}} is not allowed here")
    return parsed


def load_text(text: str) -> LoadedInstance:
    """Build the configured instance from config text."""
    fields = parse_fields(text)
    if "kind" not in fields:
        raise ConfigError("missing required field 'kind'")
    kind = fields["kind"]
    if kind not in KINDS:
        raise ConfigError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    allowed = _COMMON_FIELDS | _FIELDS_BY_KIND[kind]
    for key in fields:
        if key not in allowed:
            raise ConfigError(f"kind {kind}: unknown field {key!r}")

    hopf: Optional[WeakHopfData] = None
    if kind == "monex":
        instance = monex_instance()
    elif kind == "skew":
        instance = skew_instance()
    elif kind == "forest":
        instance = forest_instance()
    elif kind == "bigraph":
        instance = bigraph_instance()
    elif kind == "relmonoid":
        monoid = parse_monoid(_require(fields, "monoid", kind))
        relation_text = _compact(_require(fields, "relation", kind))
        if isinstance(monoid, tuple):
            _, letters = monoid
            if relation_text != "equal-length":
                raise ConfigError(
                    "free monoids support only relation = equal-length"
                )
            try:
                instance = monex_instance(letters)
            except InchopfError as exc:
                raise ConfigError(f"field monoid: {exc}") from exc
            if "max-word" in fields:
                bound = _parse_int(fields["max-word"], "max-word")
                instance = dataclasses.replace(instance, default_bound=bound)
        else:
            if relation_text == "equal-length":
                raise ConfigError(
                    "relation = equal-length needs a free{..} monoid"
                )
            if "max-word" in fields:
                raise ConfigError("max-word applies only to free{..} monoids")
            relation = parse_relation(fields["relation"], monoid)
            instance = build_relmonoid_instance(monoid, relation)
    elif kind == "quiver":
        group = _finite_monoid(_require(fields, "group", kind), "group")
        if not group.is_group:
            raise ConfigError("field group: quiver objects must form a group")
        z = fields.get("z")
        if z is not None:
            _element_index(group, z, "z")
        try:
            spec = make_quiver_spec(group, z)
        except InchopfError as exc:
            raise ConfigError(f"field z: {exc}") from exc
        instance = build_quiver_instance(spec)
    elif kind == "xmod":
        base = _finite_monoid(_require(fields, "G", kind), "G")
        fiber = _finite_monoid(_require(fields, "H", kind), "H")
        tau = _parse_tau(_require(fields, "tau", kind), base, fiber)
        alpha_rows = [
            _parse_int_list(row, "alpha")
            for row in _split_top_level(
                _strip_brackets(_compact(_require(fields, "alpha", kind)), "alpha")
            )
        ]
        try:
            xm = validate_crossed_module(base, fiber, tau, alpha_rows)
        except InchopfError as exc:
            raise ConfigError(f"kind xmod: {exc}") from exc
        hopf = weak_hopf_structure(xm, name="xmod")
        instance = hopf.config.instance
    elif kind == "normal":
        group = _finite_monoid(_require(fields, "G", kind), "G")
        subset = _compact(_require(fields, "N", kind))
        if not (subset.startswith("{") and subset.endswith("}")):
            raise ConfigError("field N: expected {element names}")
        indices = [
            _element_index(group, name, "N")
            for name in _split_top_level(subset[1:-1])
        ]
        try:
            xm = normal_subgroup_xmod(group, indices)
        except InchopfError as exc:
            raise ConfigError(f"kind normal: {exc}") from exc
        hopf = weak_hopf_structure(xm, name="normal")
        instance = hopf.config.instance
    else:  # aut
        group = _finite_monoid(_require(fields, "G", kind), "G")
        if not group.is_group:
            raise ConfigError("field G: expected a group")
        try:
            xm = aut_two_group(group)
        except InchopfError as exc:
            raise ConfigError(f"kind aut: {exc}") from exc
        hopf = weak_hopf_structure(xm, name="aut")
        instance = hopf.config.instance

    if "max-size" in fields:
        bound = _parse_int(fields["max-size"], "max-size", minimum=0)
        instance = dataclasses.replace(instance, default_bound=bound)
        if hopf is not None:
            hopf = WeakHopfData(
                config=dataclasses.replace(hopf.config, instance=instance),
                antipode=hopf.antipode,
            )

    if hopf is not None:
        config = hopf.config
    else:
        config = bialgebra_config(instance)
    if "scale" in fields:
        scale = _parse_scale(fields["scale"])
        config = IncidenceConfig(instance=instance, scale=scale)
        if hopf is not None:
            hopf = WeakHopfData(config=config, antipode=hopf.antipode)

    return LoadedInstance(kind=kind, instance=instance, config=config, hopf=hopf)


def _strip_brackets(text: str, field: str) -> str:
    if not (text.startswith("[") and text.endswith("]")):
        raise ConfigError(f"field {field}: expected [..] table, got {text!r}")
    return text[1:-1]


def _parse_scale(value: str) -> Fraction:
    try:
        scale = Fraction(_compact(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"field scale: not a rational number: {value!r}") from exc
    if scale == 0:
        raise ConfigError("field scale: λ must be nonzero")
    return scale


def load_file(path: str) -> LoadedInstance:
    """Read and build an instance from a config file path."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    return load_text(text)
