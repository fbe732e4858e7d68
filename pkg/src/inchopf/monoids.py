"""Finite monoids and groups as explicit multiplication tables.

Tables are validated exhaustively at construction (associativity, unit laws);
group structure (two-sided inverses) is detected, not asserted.  Standard
constructions: trivial, cyclic, symmetric, and alternating groups, subgroup
restriction, automorphism groups by brute-force search, and homomorphism
validation.  Element names are carried for rendering; permutation groups use
cycle notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .errors import InvariantError, UndefinedKeyError


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid: elements 0..n−1, a full multiplication table, a unit.

    ``table[i][j]`` is the product i·j.  ``names`` render elements; they must
    be distinct.
    """

    table: tuple[tuple[int, ...], ...]
    unit: int
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.table)
        if any(len(row) != n for row in self.table):
            raise InvariantError("multiplication table must be square")
        if not (0 <= self.unit < n):
            raise InvariantError(f"unit index {self.unit} out of range")
        if len(self.names) != n or len(set(self.names)) != n:
            raise InvariantError("element names must be distinct, one per element")
        for i in range(n):
            for j in range(n):
                value = self.table[i][j]
                if not (0 <= value < n):
                    raise InvariantError(f"table entry {i}·{j} = {value} out of range")
        for i in range(n):
            if self.table[self.unit][i] != i or self.table[i][self.unit] != i:
                raise InvariantError(f"unit laws fail at element {self.names[i]}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise InvariantError(
                            f"associativity fails at ({self.names[i]}, "
                            f"{self.names[j]}, {self.names[k]})"
                        )

    @property
    def size(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def elements(self) -> range:
        return range(self.size)

    def name(self, i: int) -> str:
        return self.names[i]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UndefinedKeyError(f"no element named {name!r}") from None

    @property
    def is_group(self) -> bool:
        return all(self.try_inverse(i) is not None for i in self.elements())

    def try_inverse(self, i: int) -> Optional[int]:
        for j in self.elements():
            if self.mul(i, j) == self.unit and self.mul(j, i) == self.unit:
                return j
        return None

    def inverse(self, i: int) -> int:
        j = self.try_inverse(i)
        if j is None:
            raise UndefinedKeyError(f"element {self.names[i]} has no inverse")
        return j


def monoid_from_table(
    table: Sequence[Sequence[int]],
    names: Optional[Sequence[str]] = None,
    unit: Optional[int] = None,
) -> FiniteMonoid:
    """Build and validate a monoid; the unit is located if not given."""
    rows = tuple(tuple(row) for row in table)
    n = len(rows)
    if unit is None:
        unit = next(
            (
                e
                for e in range(n)
                if all(rows[e][i] == i and rows[i][e] == i for i in range(n))
            ),
            -1,
        )
        if unit < 0:
            raise InvariantError("table has no two-sided unit")
    if names is None:
        names = tuple(str(i) for i in range(n))
    return FiniteMonoid(table=rows, unit=unit, names=tuple(names))


def trivial_group() -> FiniteMonoid:
    return FiniteMonoid(table=((0,),), unit=0, names=("e",))


def cyclic_group(n: int) -> FiniteMonoid:
    if n < 1:
        raise InvariantError("cyclic group order must be positive")
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteMonoid(table=table, unit=0, names=tuple(str(i) for i in range(n)))


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(v + 1) for v in cycle) + ")")
    return "".join(cycles) if cycles else "e"


def _perm_group(perms: list[tuple[int, ...]]) -> FiniteMonoid:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            composite = tuple(p[q[i]] for i in range(len(q)))
            if composite not in index:
                raise InvariantError("permutation set is not closed under composition")
            row.append(index[composite])
        table.append(tuple(row))
    unit = index[tuple(range(len(perms[0])))]
    names = tuple(_cycle_notation(p) for p in perms)
    return FiniteMonoid(table=tuple(table), unit=unit, names=names)


def symmetric_group(n: int) -> FiniteMonoid:
    if n < 1:
        raise InvariantError("symmetric group degree must be positive")
    return _perm_group([tuple(p) for p in permutations(range(n))])


def _is_even(perm: tuple[int, ...]) -> bool:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions % 2 == 0


def alternating_group(n: int) -> FiniteMonoid:
    if n < 1:
        raise InvariantError("alternating group degree must be positive")
    return _perm_group([tuple(p) for p in permutations(range(n)) if _is_even(tuple(p))])


def subgroup_from_elements(group: FiniteMonoid, indices: Iterable[int]) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """Restrict to a subset closed under multiplication containing the unit.

    Returns the subgroup with its own 0-based table plus the inclusion map
    (new index -> old index).
    """
    inclusion = tuple(sorted(set(indices)))
    if group.unit not in inclusion:
        raise InvariantError("subgroup must contain the unit")
    position = {old: new for new, old in enumerate(inclusion)}
    table = []
    for a in inclusion:
        row = []
        for b in inclusion:
            product = group.mul(a, b)
            if product not in position:
                raise InvariantError(
                    f"subset not closed: {group.name(a)}·{group.name(b)} escapes"
                )
            row.append(position[product])
        table.append(tuple(row))
    sub = FiniteMonoid(
        table=tuple(table),
        unit=position[group.unit],
        names=tuple(group.name(i) for i in inclusion),
    )
    return sub, inclusion


def is_normal_subset(group: FiniteMonoid, indices: Iterable[int]) -> bool:
    subset = set(indices)
    return all(
        group.mul(group.mul(g, h), group.inverse(g)) in subset
        for g in group.elements()
        for h in subset
    )


def check_homomorphism(dom: FiniteMonoid, cod: FiniteMonoid, mapping: Sequence[int]) -> None:
    """Raise unless ``mapping`` (dom index -> cod index) is a monoid hom."""
    if len(mapping) != dom.size:
        raise InvariantError("homomorphism must be defined on every element")
    if mapping[dom.unit] != cod.unit:
        raise InvariantError("homomorphism must preserve the unit")
    for i in dom.elements():
        for j in dom.elements():
            if mapping[dom.mul(i, j)] != cod.mul(mapping[i], mapping[j]):
                raise InvariantError(
                    f"homomorphism fails at ({dom.name(i)}, {dom.name(j)})"
                )


def automorphism_group(group: FiniteMonoid) -> tuple[FiniteMonoid, tuple[tuple[int, ...], ...]]:
    """All table automorphisms by brute force.

    Returns (the automorphism group with composition table, the tuple of
    automorphisms as index maps, sorted deterministically).  The group's
    element i is the map ``autos[i]``.
    """
    n = group.size
    autos = []
    for candidate in permutations(range(n)):
        if candidate[group.unit] != group.unit:
            continue
        if all(
            candidate[group.mul(i, j)] == group.mul(candidate[i], candidate[j])
            for i in range(n)
            for j in range(n)
        ):
            autos.append(tuple(candidate))
    autos = sorted(autos)
    index = {a: i for i, a in enumerate(autos)}
    table = []
    for a in autos:
        row = []
        for b in autos:
            composite = tuple(a[b[i]] for i in range(n))
            row.append(index[composite])
        table.append(tuple(row))
    unit = index[tuple(range(n))]
    names = tuple(f"a{i}" for i in range(len(autos)))
    aut = FiniteMonoid(table=tuple(table), unit=unit, names=names)
    return aut, tuple(autos)


def conjugation_map(group: FiniteMonoid, g: int) -> tuple[int, ...]:
    """The inner automorphism h ↦ g·h·g⁻¹ as an index map."""
    g_inv = group.inverse(g)
    return tuple(group.mul(group.mul(g, h), g_inv) for h in group.elements())
