"""Free rational vector spaces on hashable basis keys.

Everything downstream (coproducts, antipodes, axiom checks) works with
:class:`FreeVec`: a finitely supported map from basis keys to ``Fraction``
coefficients.  Vectors are immutable, zero coefficients are dropped on
construction, and all arithmetic is exact.  Floating-point coefficients are
rejected outright.

Basis keys are arbitrary hashable values.  Tensor-power keys are represented
as plain tuples of morphisms; the calling code tracks arity, this module only
needs keys to be hashable and deterministically sortable via :func:`sort_key`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Union

from .errors import InvariantError

Key = Hashable
ScalarLike = Union[int, Fraction]


def coerce_scalar(value: ScalarLike) -> Fraction:
    """Convert ``value`` to an exact ``Fraction``, rejecting floats."""
    if isinstance(value, float):
        raise InvariantError(
            f"floating-point coefficient {value!r} rejected; use Fraction or int"
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise InvariantError(f"cannot use {value!r} as a rational coefficient")


def sort_key(key: Key):
    """A total, deterministic ordering key for arbitrary basis keys.

    Tuples sort recursively by length then components; everything else sorts
    by its string form (with ``repr`` as a tiebreak so distinct keys with the
    same display string still order deterministically).
    """
    if isinstance(key, tuple):
        return (1, len(key), tuple(sort_key(part) for part in key))
    return (0, str(key), repr(key))


class FreeVec:
    """An immutable, finitely supported rational vector.

    ``FreeVec(pairs)`` accepts a mapping or an iterable of ``(key, coeff)``
    pairs; repeated keys accumulate and zero totals are dropped, so two
    vectors are equal exactly when they have the same support and
    coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, pairs: Union[Mapping[Key, ScalarLike], Iterable[tuple[Key, ScalarLike]]] = ()):
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        acc: dict[Key, Fraction] = {}
        for key, raw in items:
            coeff = coerce_scalar(raw)
            total = acc.get(key, Fraction(0)) + coeff
            if total:
                acc[key] = total
            elif key in acc:
                del acc[key]
        self._coeffs: dict[Key, Fraction] = acc

    @classmethod
    def zero(cls) -> "FreeVec":
        return cls()

    @classmethod
    def basis(cls, key: Key, coeff: ScalarLike = 1) -> "FreeVec":
        return cls([(key, coeff)])

    def items(self) -> list[tuple[Key, Fraction]]:
        """All (key, coefficient) pairs, sorted deterministically."""
        return sorted(self._coeffs.items(), key=lambda kv: sort_key(kv[0]))

    def support(self) -> list[Key]:
        return [key for key, _ in self.items()]

    def coeff(self, key: Key) -> Fraction:
        return self._coeffs.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __add__(self, other: "FreeVec") -> "FreeVec":
        if not isinstance(other, FreeVec):
            return NotImplemented
        out = dict(self._coeffs)
        for key, coeff in other._coeffs.items():
            total = out.get(key, Fraction(0)) + coeff
            if total:
                out[key] = total
            elif key in out:
                del out[key]
        return _wrap(out)

    def __sub__(self, other: "FreeVec") -> "FreeVec":
        if not isinstance(other, FreeVec):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "FreeVec":
        return _wrap({key: -coeff for key, coeff in self._coeffs.items()})

    def scaled(self, scalar: ScalarLike) -> "FreeVec":
        factor = coerce_scalar(scalar)
        if not factor:
            return FreeVec.zero()
        return _wrap({key: factor * coeff for key, coeff in self._coeffs.items()})

    def __mul__(self, scalar: ScalarLike) -> "FreeVec":
        if isinstance(scalar, (int, Fraction)):
            return self.scaled(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def map_basis(self, fn: Callable[[Key], Key]) -> "FreeVec":
        """Linear extension of a basis-to-basis map (images may collide)."""
        return FreeVec((fn(key), coeff) for key, coeff in self._coeffs.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeVec):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"FreeVec({self.items()!r})"


def _wrap(coeffs: dict[Key, Fraction]) -> FreeVec:
    vec = FreeVec.__new__(FreeVec)
    vec._coeffs = coeffs
    return vec


def fm_add(left: FreeVec, right: FreeVec) -> FreeVec:
    """Sum of two vectors (function form of ``left + right``)."""
    return left + right


def fm_scale(scalar: ScalarLike, vec: FreeVec) -> FreeVec:
    """Scalar multiple of a vector (function form of ``scalar * vec``)."""
    return vec.scaled(scalar)


def tensor(left: FreeVec, right: FreeVec) -> FreeVec:
    """Tensor product: basis keys combine into pairs ``(left_key, right_key)``."""
    pairs: list[tuple[Key, Fraction]] = []
    for lk, lc in left.items():
        for rk, rc in right.items():
            pairs.append(((lk, rk), lc * rc))
    return FreeVec(pairs)


def apply_linear(fn: Callable[[Key], FreeVec], vec: FreeVec) -> FreeVec:
    """Apply the linear extension of ``fn`` (a basis-to-vector map)."""
    pairs: list[tuple[Key, Fraction]] = []
    for key, coeff in vec.items():
        for out_key, out_coeff in fn(key).items():
            pairs.append((out_key, coeff * out_coeff))
    return FreeVec(pairs)


def bilinear(left: FreeVec, right: FreeVec, fn: Callable[[Key, Key], FreeVec]) -> FreeVec:
    """Apply the bilinear extension of ``fn`` (a basis-pair-to-vector map)."""
    pairs: list[tuple[Key, Fraction]] = []
    for lk, lc in left.items():
        factor_items = right.items()
        for rk, rc in factor_items:
            for out_key, out_coeff in fn(lk, rk).items():
                pairs.append((out_key, lc * rc * out_coeff))
    return FreeVec(pairs)


def render(vec: FreeVec, render_key: Callable[[Key], str] = str) -> str:
    """Deterministic display string: ``c1*k1 + c2*k2``; the zero vector is ``0``.

    Coefficients are always printed, including 1, so the basis keys never
    need quoting or disambiguation.
    """
    if vec.is_zero():
        return "0"
    parts: list[str] = []
    for key, coeff in vec.items():
        if not parts:
            parts.append(f"{coeff}*{render_key(key)}")
        elif coeff < 0:
            parts.append(f" - {-coeff}*{render_key(key)}")
        else:
            parts.append(f" + {coeff}*{render_key(key)}")
    return "".join(parts)
