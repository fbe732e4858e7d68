"""Operadic planar rooted forests and the quotient by core equivalence.

A morphism is an ordered forest of planar trees written in term form,
``tree ::= W | B(tree, …)``: ``W`` is a white leaf, ``B`` an internal
(black) vertex, and each tree carries an implicit white root.  A forest
with m white leaves and n trees is an arrow m → n; composition grafts the
k-th root of the inner forest onto the k-th leaf of the outer one, and the
monoidal product is the ordered (side-by-side) sum.  Term syntax fixes
planarity and the left-to-right orders, so no explicit orderings are stored.

Two-step factorizations are enumerated per tree: cut each tree either at
its root edge (the whole tree goes below) or at its internal root vertex,
recursively splitting the children; tops recombine into the upper forest,
bottoms concatenate into the lower one.

The *core* of a forest deletes every white vertex.  Core equivalence
classes form a quotient coalgebra — the planar flavour of the rooted-tree
Hopf algebra of renormalization — carried here by :func:`ck_coproduct` and
:func:`ck_antipode` on :class:`CoreForest` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .errors import InvariantError, MorphismParseError
from .linalg import FreeVec, sort_key
from .monoidal import MonoidalInstance

W = ("W",)


def black(*children) -> tuple:
    return ("B",) + tuple(children)


def is_tree(term) -> bool:
    if term == W:
        return True
    return (
        isinstance(term, tuple)
        and len(term) >= 1
        and term[0] == "B"
        and all(is_tree(child) for child in term[1:])
    )


def render_tree(term) -> str:
    if term == W:
        return "W"
    if len(term) == 1:
        return "B()"
    return "B(" + ",".join(render_tree(child) for child in term[1:]) + ")"


@lru_cache(maxsize=None)
def tree_leaves(term) -> int:
    if term == W:
        return 1
    return sum(tree_leaves(child) for child in term[1:])


@lru_cache(maxsize=None)
def tree_internal(term) -> int:
    if term == W:
        return 0
    return 1 + sum(tree_internal(child) for child in term[1:])


@dataclass(frozen=True)
class OpForest:
    """An ordered forest of planar trees: an arrow (leaves → roots)."""

    trees: tuple

    def __str__(self) -> str:
        return "[" + ",".join(render_tree(tree) for tree in self.trees) + "]"


@dataclass(frozen=True)
class CoreForest:
    """An ordered forest over internal vertices only (white parts deleted)."""

    trees: tuple

    def __str__(self) -> str:
        if not self.trees:
            return "1"
        return "·".join(_render_core_tree(tree) for tree in self.trees)


def _render_core_tree(term) -> str:
    if len(term) == 1:
        return "•"
    return "•(" + ",".join(_render_core_tree(child) for child in term[1:]) + ")"


def make_forest(trees) -> OpForest:
    trees = tuple(trees)
    for tree in trees:
        if not is_tree(tree):
            raise InvariantError(f"not a tree term: {tree!r}")
    return OpForest(trees=trees)


def identity_forest(n: int) -> OpForest:
    return OpForest(trees=(W,) * n)


@lru_cache(maxsize=None)
def interfaces(f: OpForest) -> tuple[int, int]:
    """(leaves, roots): the forest is an arrow leaves → roots."""
    return sum(tree_leaves(tree) for tree in f.trees), len(f.trees)


@lru_cache(maxsize=None)
def forest_internal(f: OpForest) -> int:
    return sum(tree_internal(tree) for tree in f.trees)


def graft(outer: OpForest, inner: OpForest) -> OpForest:
    """Compose by grafting: the k-th root of ``inner`` replaces the k-th
    leaf of ``outer`` (matched white vertices merge away)."""
    leaves, _ = interfaces(outer)
    _, roots = interfaces(inner)
    if leaves != roots:
        raise InvariantError(
            f"graft interface mismatch: outer has {leaves} leaves, "
            f"inner has {roots} roots"
        )
    supply = list(inner.trees)
    position = 0

    def substitute(term):
        nonlocal position
        if term == W:
            tree = supply[position]
            position += 1
            return tree
        return ("B",) + tuple(substitute(child) for child in term[1:])

    grafted = tuple(substitute(tree) for tree in outer.trees)
    return OpForest(trees=grafted)


def osum(left: OpForest, right: OpForest) -> OpForest:
    """Ordered sum: place the forests side by side."""
    return OpForest(trees=left.trees + right.trees)


@lru_cache(maxsize=None)
def _tree_cuts(term) -> tuple:
    """All ways to cut one tree: (top_tree, tuple_of_bottom_trees).

    Cutting at the root edge sends the whole tree below (top ``W``);
    keeping the root vertex on top recursively cuts every child.
    """
    if term == W:
        return ((W, (W,)),)
    cuts = [(W, (term,))]
    child_cuts = [_tree_cuts(child) for child in term[1:]]
    for combo in iter_product(*child_cuts):
        top = ("B",) + tuple(part[0] for part in combo)
        bottoms = tuple(tree for part in combo for tree in part[1])
        cuts.append((top, bottoms))
    return tuple(cuts)


@lru_cache(maxsize=None)
def _forest_cuts(f: OpForest) -> tuple:
    per_tree = [_tree_cuts(tree) for tree in f.trees]
    pairs = []
    for combo in iter_product(*per_tree):
        tops = tuple(part[0] for part in combo)
        bottoms = tuple(tree for part in combo for tree in part[1])
        pairs.append((OpForest(trees=tops), OpForest(trees=bottoms)))
    return tuple(sorted(pairs, key=sort_key))


def n2_forest(f: OpForest) -> list[tuple[OpForest, OpForest]]:
    """All pairs (g, h) with graft(g, h) = f, in a deterministic order."""
    return list(_forest_cuts(f))


def _strip_white(term):
    children = tuple(
        _strip_white(child) for child in term[1:] if child != W
    )
    return ("B",) + children


def core(f: OpForest) -> CoreForest:
    """Delete all white vertices; black vertices under a root become roots."""
    return CoreForest(
        trees=tuple(_strip_white(tree) for tree in f.trees if tree != W)
    )


def core_lift(t: CoreForest) -> OpForest:
    """The canonical forest with this core: white roots only, no white leaves."""
    return OpForest(trees=t.trees)


def core_osum(left: CoreForest, right: CoreForest) -> CoreForest:
    return CoreForest(trees=left.trees + right.trees)


def core_vertices(t: CoreForest) -> int:
    return sum(tree_internal(tree) for tree in t.trees)


def ck_coproduct(t: CoreForest) -> FreeVec:
    """Coproduct of the quotient: cut the canonical lift, take cores."""
    pairs: list[tuple] = []
    for g, h in n2_forest(core_lift(t)):
        pairs.append(((core(g), core(h)), 1))
    return FreeVec(pairs)


@lru_cache(maxsize=None)
def ck_antipode(t: CoreForest) -> FreeVec:
    """Antipode of the quotient, by the standard connected-graded recursion.

    The empty forest is the unit with S(1) = 1.  Otherwise the coproduct
    splits as 1⊗t + t⊗1 + (middle terms with strictly fewer vertices), and
    S(t) = −t − Σ c·S(a)·b over the middle terms.
    """
    one = CoreForest(trees=())
    if t == one:
        return FreeVec.basis(one)
    total = FreeVec.basis(t, -1)
    for (a, b), coeff in ck_coproduct(t).items():
        if a == one or a == t:
            continue
        term = ck_antipode(a).map_basis(lambda k: core_osum(k, b))
        total = total - term.scaled(coeff)
    return total


def ck_convolution_check(t: CoreForest) -> tuple[FreeVec, FreeVec, FreeVec]:
    """((S*id)(t), (id*S)(t), uε(t)) — all three must agree."""
    one = CoreForest(trees=())
    left = FreeVec.zero()
    right = FreeVec.zero()
    for (a, b), coeff in ck_coproduct(t).items():
        left = left + ck_antipode(a).map_basis(lambda k: core_osum(k, b)).scaled(coeff)
        right = right + ck_antipode(b).map_basis(
            lambda k: core_osum(a, k)
        ).scaled(coeff)
    unit_part = FreeVec.basis(one) if t == one else FreeVec.zero()
    return left, right, unit_part


# -- fragment enumeration ----------------------------------------------------


def _trees_within(internal: int, leaves: int) -> list:
    """All tree terms with at most the given internal vertices and leaves."""
    found = []
    if leaves >= 1:
        found.append(W)
    if internal >= 1:
        # a black root plus an ordered list of child subtrees
        def extend(children, internal_left, leaves_left):
            found.append(("B",) + tuple(children))
            for child in _trees_within(internal_left, leaves_left):
                child_internal = tree_internal(child)
                child_leaves = tree_leaves(child)
                if child_internal <= internal_left and child_leaves <= leaves_left:
                    extend(
                        children + [child],
                        internal_left - child_internal,
                        leaves_left - child_leaves,
                    )

        extend([], internal - 1, leaves)
    return found


def _forests_within(internal: int, leaves: int, roots: int) -> list[OpForest]:
    forests = []

    def extend(trees, internal_left, leaves_left, roots_left):
        forests.append(OpForest(trees=tuple(trees)))
        if roots_left == 0:
            return
        for tree in _trees_within(internal_left, leaves_left):
            extend(
                trees + [tree],
                internal_left - tree_internal(tree),
                leaves_left - tree_leaves(tree),
                roots_left - 1,
            )

    extend([], internal, leaves, roots)
    return sorted(set(forests), key=sort_key)


def forest_fragment(bound: int) -> list[OpForest]:
    """All forests with internal vertices, leaves, and roots each ≤ bound."""
    return _forests_within(bound, bound, bound)


def core_fragment(vertices: int, roots: int) -> list[CoreForest]:
    """All core forests with at most the given vertices and roots."""
    cores = {
        core(f)
        for f in _forests_within(vertices, 0, roots)
        if all(tree != W for tree in f.trees)
    }
    return sorted(
        (t for t in cores if core_vertices(t) <= vertices),
        key=sort_key,
    )


# -- parsing -----------------------------------------------------------------


def parse_forest(text: str) -> OpForest:
    stripped = text.strip()
    if stripped.startswith("id(") and stripped.endswith(")"):
        inner = stripped[3:-1].strip()
        try:
            n = int(inner)
        except ValueError:
            raise MorphismParseError(f"{text!r}: id(n) needs an integer") from None
        if n < 0:
            raise MorphismParseError(f"{text!r}: id(n) needs n >= 0")
        return identity_forest(n)
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise MorphismParseError(f"{text!r}: expected [tree,…] or id(n)")
    body = stripped[1:-1].strip()
    if not body:
        return OpForest(trees=())
    trees = [_parse_tree(part) for part in _split_commas(body, text)]
    return OpForest(trees=tuple(trees))


def _split_commas(body: str, original: str) -> list[str]:
    parts = []
    depth = 0
    start = 0
    for position, char in enumerate(body):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise MorphismParseError(f"{original!r}: unbalanced parentheses")
        elif char == "," and depth == 0:
            parts.append(body[start:position])
            start = position + 1
    if depth != 0:
        raise MorphismParseError(f"{original!r}: unbalanced parentheses")
    parts.append(body[start:])
    return parts


def _parse_tree(text: str):
    stripped = text.strip()
    if stripped == "W":
        return W
    if stripped == "B" or stripped == "B()":
        return ("B",)
    if stripped.startswith("B(") and stripped.endswith(")"):
        inner = stripped[2:-1].strip()
        if not inner:
            return ("B",)
        children = [_parse_tree(part) for part in _split_commas(inner, text)]
        return ("B",) + tuple(children)
    raise MorphismParseError(f"tree term {stripped!r} is not W or B(…)")


def forest_instance() -> MonoidalInstance:
    """The category of operadic planar forests under grafting and ordered sum."""

    return MonoidalInstance(
        name="forest",
        src=lambda f: interfaces(f)[0],
        dst=lambda f: interfaces(f)[1],
        compose=lambda a, b: graft(a, b),
        identity=identity_forest,
        factor_pairs=_forest_cuts,
        objects=lambda bound: list(range(bound + 1)),
        morphisms=forest_fragment,
        size=forest_internal,
        render=str,
        length_hint=forest_internal,
        parse=parse_forest,
        default_bound=3,
        unit_obj=0,
        obj_product=lambda a, b: a + b,
        product=lambda f, g: osum(f, g),
        object_inverse=None,
    )
