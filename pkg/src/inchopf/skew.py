"""Skew shapes between lattice paths, with concatenation as the product.

A path is a 0/1 word (1 = up-step); a morphism is a pair ``(lower, upper)``
of equal-length, equal-height paths whose partial sums satisfy
``upper_i >= lower_i`` everywhere — the skew region between the two paths.
It is an arrow lower → upper; composition stacks regions
(``(q,p) ∘ (r,q) = (r,p)``) and the monoidal product concatenates them
side by side.  Factorizations of ``(r,p)`` run over the lattice paths
between ``r`` and ``p``, enumerated by a partial-sum walk rather than by
filtering all words.

The region splits into connected components at interior positions where the
two partial sums meet; a single column is always connected.  The length of a
morphism is the area between its paths (each covering step in the dominance
order raises the area by exactly one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, MorphismParseError
from .monoidal import MonoidalInstance

PATH_LETTERS = ("0", "1")


@dataclass(frozen=True)
class SkewShape:
    """The region between ``lower`` and ``upper``: an arrow lower → upper."""

    lower: str
    upper: str

    def __str__(self) -> str:
        return f"({self.lower or 'e'},{self.upper or 'e'})"


def path_partials(path: str) -> tuple[int, ...]:
    """Partial sums of up-steps: entry i is the height after i+1 letters."""
    total = 0
    out = []
    for letter in path:
        if letter not in PATH_LETTERS:
            raise InvariantError(f"path letter {letter!r} is not 0 or 1")
        total += letter == "1"
        out.append(total)
    return tuple(out)


def path_stats(path: str) -> tuple[int, int, tuple[int, ...]]:
    """(length, final height, partial sums) of a path."""
    partials = path_partials(path)
    height = partials[-1] if partials else 0
    return len(path), height, partials


def dominates(lower: str, upper: str):
    """Compare two equal-length, equal-height paths in the dominance order.

    Returns ``'lt'`` when upper stays strictly above lower at every interior
    position (the shape is connected; vacuous for single letters), ``'leq'``
    when it stays weakly above, and ``False`` otherwise.  Unequal lengths or
    heights also give ``False``.
    """
    if len(lower) != len(upper):
        return False
    lo = path_partials(lower)
    up = path_partials(upper)
    if lo and lo[-1] != up[-1]:
        return False
    strict = True
    for i in range(len(lower)):
        if up[i] < lo[i]:
            return False
        if i < len(lower) - 1 and up[i] == lo[i]:
            strict = False
    return "lt" if strict else "leq"


def make_shape(lower: str, upper: str) -> SkewShape:
    if not dominates(lower, upper):
        raise InvariantError(
            f"({lower or 'e'},{upper or 'e'}) is not a skew shape: "
            f"upper must dominate lower with equal length and height"
        )
    return SkewShape(lower=lower, upper=upper)


def compose_shapes(top: SkewShape, bottom: SkewShape) -> SkewShape:
    """Stack regions: ``(q,p) ∘ (r,q) = (r,p)``."""
    if bottom.upper != top.lower:
        raise InvariantError(
            f"cannot stack {top} on {bottom}: boundary paths differ"
        )
    return SkewShape(lower=bottom.lower, upper=top.upper)


def product_shapes(left: SkewShape, right: SkewShape) -> SkewShape:
    """Place regions side by side: concatenate both paths."""
    return SkewShape(lower=left.lower + right.lower, upper=left.upper + right.upper)


def middle_paths(lower: str, upper: str) -> list[str]:
    """All paths m with lower ≼ m ≼ upper, by a partial-sum walk.

    At step i the height must lie between both bounds and move by 0 or 1,
    so the walk extends each prefix by at most two choices; no filtering of
    the full word set ever happens.
    """
    lo = path_partials(lower)
    up = path_partials(upper)
    n = len(lower)
    results: list[str] = []

    def extend(i: int, height: int, prefix: list[str]) -> None:
        if i == n:
            results.append("".join(prefix))
            return
        for step in (0, 1):
            new_height = height + step
            if lo[i] <= new_height <= up[i]:
                prefix.append("01"[step])
                extend(i + 1, new_height, prefix)
                prefix.pop()

    extend(0, 0, [])
    return results


def shape_area(shape: SkewShape) -> int:
    lo = path_partials(shape.lower)
    up = path_partials(shape.upper)
    return sum(u - l for u, l in zip(up, lo))


def cut_points(shape: SkewShape) -> list[int]:
    """Interior positions where the partial sums meet (components split)."""
    lo = path_partials(shape.lower)
    up = path_partials(shape.upper)
    return [i + 1 for i in range(len(lo) - 1) if lo[i] == up[i]]


def connected_factorization(shape: SkewShape) -> list[SkewShape]:
    """The connected components, left to right; their product is the shape."""
    n = len(shape.lower)
    if n == 0:
        return []
    borders = [0] + cut_points(shape) + [n]
    return [
        SkewShape(lower=shape.lower[a:b], upper=shape.upper[a:b])
        for a, b in zip(borders, borders[1:])
    ]


def is_connected(shape: SkewShape) -> bool:
    return len(shape.lower) > 0 and not cut_points(shape)


def _all_paths(length: int) -> list[str]:
    out = [""]
    for _ in range(length):
        out = [path + letter for path in out for letter in PATH_LETTERS]
    return out


def skew_instance() -> MonoidalInstance:
    """The category of skew shapes under stacking and side-by-side product."""

    def factor_pairs(f: SkewShape) -> tuple:
        return tuple(
            (SkewShape(mid, f.upper), SkewShape(f.lower, mid))
            for mid in middle_paths(f.lower, f.upper)
        )

    def morphisms(bound: int) -> list[SkewShape]:
        out = []
        for n in range(bound + 1):
            for q in _all_paths(n):
                for p in _all_paths(n):
                    if dominates(q, p):
                        out.append(SkewShape(q, p))
        return out

    def objects(bound: int) -> list[str]:
        out: list[str] = []
        for n in range(bound + 1):
            out.extend(_all_paths(n))
        return out

    def parse(text: str) -> SkewShape:
        stripped = text.strip()
        if stripped.startswith("skew(") and stripped.endswith(")"):
            stripped = stripped[len("skew") :]
        if not (stripped.startswith("(") and stripped.endswith(")")):
            raise MorphismParseError(f"{text!r}: expected a (lower,upper) literal")
        body = stripped[1:-1]
        if "," not in body:
            raise MorphismParseError(f"{text!r}: expected a comma")
        lower, upper = (part.strip() for part in body.split(",", 1))
        lower = "" if lower == "e" else lower
        upper = "" if upper == "e" else upper
        for word in (lower, upper):
            for letter in word:
                if letter not in PATH_LETTERS:
                    raise MorphismParseError(
                        f"{text!r}: path letter {letter!r} is not 0 or 1"
                    )
        if not dominates(lower, upper):
            raise MorphismParseError(
                f"{text!r}: upper must dominate lower with equal length and height"
            )
        return SkewShape(lower=lower, upper=upper)

    return MonoidalInstance(
        name="skew",
        src=lambda f: f.lower,
        dst=lambda f: f.upper,
        compose=lambda a, b: compose_shapes(a, b),
        identity=lambda path: SkewShape(path, path),
        factor_pairs=factor_pairs,
        objects=objects,
        morphisms=morphisms,
        size=lambda f: len(f.lower),
        render=str,
        length_hint=shape_area,
        parse=parse,
        default_bound=3,
        unit_obj="",
        obj_product=lambda a, b: a + b,
        product=lambda f, g: product_shapes(f, g),
        object_inverse=None,
    )
