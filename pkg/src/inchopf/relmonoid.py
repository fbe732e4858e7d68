"""Categories from a compatible relation on a monoid.

A reflexive, transitive relation ≼ on a monoid M that respects the product
(x ≼ y and z ≼ t imply x·z ≼ y·t) yields a monoidal category: morphisms are
related pairs (x, y) with x ≼ y, regarded as arrows y → x, composed by
(x,y)∘(y,z) = (x,z) and multiplied componentwise.  Factorizations of (x, z)
run over the interval [x, z].

Two flavours live here: finite monoids with explicit relation pair sets, and
the free monoid on two letters with the equal-length relation (whose length-1
corner is the four-generator coalgebra used throughout the golden tests).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterable

from .errors import InvariantError, MorphismParseError, UndefinedKeyError
from .monoidal import MonoidalInstance
from .monoids import FiniteMonoid

WORD_ALPHABET = ("x", "y")


@dataclass(frozen=True)
class RelPair:
    """The morphism (lower, upper): an arrow upper → lower with lower ≼ upper."""

    lower: object
    upper: object

    def __str__(self) -> str:
        return f"({self.lower},{self.upper})"


@dataclass(frozen=True)
class Relation:
    """A set of index pairs (x, y) meaning x ≼ y on a finite monoid."""

    pairs: frozenset


def make_relation(monoid: FiniteMonoid, pairs: Iterable[tuple[int, int]]) -> Relation:
    """Validate reflexivity, transitivity, and product compatibility."""
    pair_set = frozenset((int(a), int(b)) for a, b in pairs)
    n = monoid.size
    for a, b in pair_set:
        if not (0 <= a < n and 0 <= b < n):
            raise InvariantError(f"relation pair ({a},{b}) out of range")
    for x in range(n):
        if (x, x) not in pair_set:
            raise InvariantError(f"relation not reflexive at {monoid.name(x)}")
    for x, y in pair_set:
        for y2, z in pair_set:
            if y2 == y and (x, z) not in pair_set:
                raise InvariantError(
                    f"relation not transitive: {monoid.name(x)}≼{monoid.name(y)}"
                    f"≼{monoid.name(z)}"
                )
    for x, y in pair_set:
        for z, t in pair_set:
            if (monoid.mul(x, z), monoid.mul(y, t)) not in pair_set:
                raise InvariantError(
                    f"relation not product-compatible at ({monoid.name(x)},"
                    f"{monoid.name(y)})·({monoid.name(z)},{monoid.name(t)})"
                )
    return Relation(pairs=pair_set)


def equality_relation(monoid: FiniteMonoid) -> Relation:
    return make_relation(monoid, [(i, i) for i in monoid.elements()])


def full_relation(monoid: FiniteMonoid) -> Relation:
    return make_relation(
        monoid, [(i, j) for i in monoid.elements() for j in monoid.elements()]
    )


def relation_from_covers(
    monoid: FiniteMonoid, covers: Iterable[tuple[int, int]]
) -> Relation:
    """Reflexive-transitive closure of a cover list, then full validation."""
    n = monoid.size
    closure = {(i, i) for i in range(n)}
    closure.update((int(a), int(b)) for a, b in covers)
    changed = True
    while changed:
        changed = False
        for x, y in list(closure):
            for y2, z in list(closure):
                if y2 == y and (x, z) not in closure:
                    closure.add((x, z))
                    changed = True
    return make_relation(monoid, closure)


def interval(monoid: FiniteMonoid, relation: Relation, x: int, y: int) -> list[int]:
    """[x, y] = every z with x ≼ z ≼ y."""
    if (x, y) not in relation.pairs:
        raise UndefinedKeyError(
            f"{monoid.name(x)} is not related to {monoid.name(y)}"
        )
    return [
        z
        for z in monoid.elements()
        if (x, z) in relation.pairs and (z, y) in relation.pairs
    ]


def _interval_length(monoid: FiniteMonoid, relation: Relation, f: RelPair):
    """Certified length of (x, y): ∞ when the interval has a 2-way cycle,
    else the longest strict chain (edge count) from y down to x."""
    x, y = f.lower, f.upper
    members = interval(monoid, relation, x, y)
    strict = {
        (a, b)
        for a in members
        for b in members
        if a != b and (a, b) in relation.pairs
    }
    for a, b in strict:
        if (b, a) in strict:
            return math.inf
    # Longest chain of non-identity factors from upper y down to lower x.
    chain: dict[tuple[int, int], int] = {}

    def longest_between(lo: int, hi: int) -> int:
        key = (lo, hi)
        if key in chain:
            return chain[key]
        chain[key] = 0
        value = 0 if lo == hi else (1 if (lo, hi) in strict else 0)
        for mid in members:
            if (lo, mid) in strict and (mid, hi) in strict:
                value = max(value, longest_between(lo, mid) + 1)
        chain[key] = value
        return value

    return longest_between(x, y)


def build_relmonoid_instance(
    monoid: FiniteMonoid, relation: Relation, name: str = "relmonoid"
) -> MonoidalInstance:
    """The finite monoidal category of related pairs over an explicit table."""
    related = sorted(relation.pairs)
    all_mors = [RelPair(lower=a, upper=b) for a, b in related]

    def factor_pairs(f: RelPair) -> tuple:
        return tuple(
            (RelPair(f.lower, mid), RelPair(mid, f.upper))
            for mid in interval(monoid, relation, f.lower, f.upper)
        )

    def render(f: RelPair) -> str:
        return f"({monoid.name(f.lower)},{monoid.name(f.upper)})"

    def parse(text: str) -> RelPair:
        lower, upper = _split_pair_literal(text)
        lo = _element_index(monoid, lower)
        up = _element_index(monoid, upper)
        if (lo, up) not in relation.pairs:
            raise MorphismParseError(f"{text!r}: elements are not related")
        return RelPair(lo, up)

    return MonoidalInstance(
        name=name,
        src=lambda f: f.upper,
        dst=lambda f: f.lower,
        compose=lambda a, b: RelPair(a.lower, b.upper),
        identity=lambda x: RelPair(x, x),
        factor_pairs=factor_pairs,
        objects=lambda bound: list(monoid.elements()),
        morphisms=lambda bound: list(all_mors),
        size=lambda f: 0,
        render=render,
        length_hint=lambda f: _interval_length(monoid, relation, f),
        parse=parse,
        default_bound=1,
        unit_obj=monoid.unit,
        obj_product=monoid.mul,
        product=lambda f, g: RelPair(
            monoid.mul(f.lower, g.lower), monoid.mul(f.upper, g.upper)
        ),
        object_inverse=(monoid.inverse if monoid.is_group else None),
    )


def _words(alphabet: tuple[str, ...], length: int) -> list[str]:
    return ["".join(parts) for parts in iter_product(sorted(alphabet), repeat=length)]


def _render_word(word: str) -> str:
    return word if word else "e"


def _split_pair_literal(text: str) -> tuple[str, str]:
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise MorphismParseError(f"{text!r}: expected a (lower,upper) literal")
    body = stripped[1:-1]
    depth = 0
    for pos, char in enumerate(body):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char == "," and depth == 0:
            return body[:pos].strip(), body[pos + 1 :].strip()
    raise MorphismParseError(f"{text!r}: expected a top-level comma")


def _element_index(monoid: FiniteMonoid, token: str) -> int:
    if token in monoid.names:
        return monoid.index_of(token)
    try:
        value = int(token)
    except ValueError:
        raise MorphismParseError(f"unknown element {token!r}") from None
    if not (0 <= value < monoid.size):
        raise MorphismParseError(f"element index {value} out of range")
    return value


def monex_instance(alphabet: tuple[str, ...] = WORD_ALPHABET) -> MonoidalInstance:
    """The free monoid on the alphabet with the equal-length relation.

    Morphisms are pairs of equal-length words; every pair of words of one
    length is related, so the factorizations of (u, w) run over all middle
    words of that length.  The object monoid (words under concatenation) is
    not a group, so no antipode is available.
    """
    letters = tuple(sorted(alphabet))
    if len(set(letters)) != len(letters) or not letters:
        raise InvariantError("alphabet must be nonempty with distinct letters")
    for letter in letters:
        if len(letter) != 1 or letter == "e":
            raise InvariantError(
                "letters must be single characters, with 'e' reserved for the empty word"
            )

    def factor_pairs(f: RelPair) -> tuple:
        return tuple(
            (RelPair(f.lower, mid), RelPair(mid, f.upper))
            for mid in _words(letters, len(f.lower))
        )

    def morphisms(bound: int) -> list[RelPair]:
        out = []
        for n in range(bound + 1):
            level = _words(letters, n)
            for u in level:
                for w in level:
                    out.append(RelPair(u, w))
        return out

    def objects(bound: int) -> list[str]:
        out: list[str] = []
        for n in range(bound + 1):
            out.extend(_words(letters, n))
        return out

    def render(f: RelPair) -> str:
        return f"({_render_word(f.lower)},{_render_word(f.upper)})"

    def parse(text: str) -> RelPair:
        lower, upper = _split_pair_literal(text)
        lower = "" if lower == "e" else lower
        upper = "" if upper == "e" else upper
        for word in (lower, upper):
            for letter in word:
                if letter not in letters:
                    raise MorphismParseError(
                        f"{text!r}: letter {letter!r} outside alphabet {letters}"
                    )
        if len(lower) != len(upper):
            raise MorphismParseError(f"{text!r}: words must have equal length")
        return RelPair(lower, upper)

    return MonoidalInstance(
        name="monex",
        src=lambda f: f.upper,
        dst=lambda f: f.lower,
        compose=lambda a, b: RelPair(a.lower, b.upper),
        identity=lambda x: RelPair(x, x),
        factor_pairs=factor_pairs,
        objects=objects,
        morphisms=morphisms,
        size=lambda f: len(f.lower),
        render=render,
        length_hint=lambda f: 0 if f == RelPair("", "") else math.inf,
        parse=parse,
        default_bound=3,
        unit_obj="",
        obj_product=lambda a, b: a + b,
        product=lambda f, g: RelPair(f.lower + g.lower, f.upper + g.upper),
        object_inverse=None,
    )
