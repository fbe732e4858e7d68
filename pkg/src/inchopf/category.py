"""Finite fragments of locally finite categories.

A :class:`CategoryInstance` packages one concrete category as plain callables:
endpoints, composition, identities, a complete two-step factorization
enumerator, and bounded fragment enumerators graded by a size function.  The
incidence coalgebra machinery downstream only ever talks to this surface.

Conventions
-----------
* ``compose(a, b)`` is "b first, then a"; it is defined when
  ``src(a) == dst(b)`` and then ``src(a∘b) == src(b)``, ``dst(a∘b) == dst(a)``.
* ``factor_pairs(f)`` returns every pair ``(a, b)`` with ``a ∘ b == f``,
  duplicate-free and in a deterministic order.  The left entry is the left
  tensor factor of the coproduct.
* A *nondegenerate* factorization has no identity entries.  Lengths are
  extended naturals: a natural number, ``math.inf``, or ``None`` when the
  instance cannot certify a value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

from .errors import ComposeError, EnumerationBoundError, LengthDivergenceError
from .linalg import sort_key
from .reports import Report

Obj = Any
Mor = Any

ExtendedNat = Any  # int, math.inf, or None (uncertified)


@dataclass(frozen=True)
class CategoryInstance:
    """One locally finite category, presented through callables.

    ``objects(bound)`` and ``morphisms(bound)`` enumerate the fragment whose
    elements have ``size`` at most ``bound``; both must be deterministic and
    duplicate-free.  ``factor_pairs`` must be complete: every factorization
    of a fragment morphism whose factors exist in the category appears.
    ``length_hint``, when set, returns a certified length (or ``math.inf``)
    for a morphism, or ``None`` when no certificate exists.
    """

    name: str
    src: Callable[[Mor], Obj]
    dst: Callable[[Mor], Obj]
    compose: Callable[[Mor, Mor], Mor]
    identity: Callable[[Obj], Mor]
    factor_pairs: Callable[[Mor], tuple]
    objects: Callable[[int], list]
    morphisms: Callable[[int], list]
    size: Callable[[Mor], int]
    render: Callable[[Mor], str] = str
    length_hint: Optional[Callable[[Mor], ExtendedNat]] = None
    parse: Optional[Callable[[str], Mor]] = None
    comp_inverse: Optional[Callable[[Mor], Mor]] = None
    default_bound: int = 3


def compose(inst: CategoryInstance, a: Mor, b: Mor) -> Mor:
    """Guarded composition ``a ∘ b`` (``b`` first)."""
    if inst.src(a) != inst.dst(b):
        raise ComposeError(
            f"{inst.name}: cannot compose {inst.render(a)} after {inst.render(b)}: "
            f"src {inst.src(a)!r} != dst {inst.dst(b)!r}"
        )
    return inst.compose(a, b)


def is_identity(inst: CategoryInstance, f: Mor) -> bool:
    x = inst.src(f)
    return x == inst.dst(f) and f == inst.identity(x)


def factor_pairs(inst: CategoryInstance, f: Mor) -> tuple:
    """All pairs ``(a, b)`` with ``a ∘ b == f``, as given by the instance."""
    return tuple(inst.factor_pairs(f))


def n2(inst: CategoryInstance, f: Mor) -> list[tuple]:
    """The two-step factorizations of ``f`` (list form of :func:`factor_pairs`)."""
    return list(factor_pairs(inst, f))


def nondeg_factorizations(inst: CategoryInstance, f: Mor, n: int) -> list[tuple]:
    """All length-``n`` factorizations of ``f`` with no identity entry.

    A tuple ``(a_1, ..., a_n)`` qualifies when ``a_1 ∘ a_2 ∘ ... ∘ a_n == f``
    and no ``a_i`` is an identity.  For ``n == 0`` the empty tuple qualifies
    exactly when ``f`` is an identity.
    """
    if n < 0:
        raise EnumerationBoundError(f"negative factorization length {n}")
    if n == 0:
        return [()] if is_identity(inst, f) else []
    if n == 1:
        return [] if is_identity(inst, f) else [(f,)]
    out: list[tuple] = []
    for head, rest in factor_pairs(inst, f):
        if is_identity(inst, head):
            continue
        for tail in nondeg_factorizations(inst, rest, n - 1):
            out.append((head,) + tail)
    return sorted(out, key=sort_key)


def nhat(inst: CategoryInstance, f: Mor, n: int) -> list[tuple]:
    """Alias for :func:`nondeg_factorizations`."""
    return nondeg_factorizations(inst, f, n)


def scan_length(inst: CategoryInstance, f: Mor, bound: int) -> int:
    """Largest ``n <= bound`` with a nondegenerate length-``n`` factorization.

    This is a lower bound for the true length; it certifies nothing above
    ``bound`` (nondegenerate factorizations can skip levels when nontrivial
    isomorphisms exist, so the scan never stops early).
    """
    best = 0 if is_identity(inst, f) else 1
    for n in range(max(best, 1), bound + 1):
        if nondeg_factorizations(inst, f, n):
            best = n
    return best


def morphism_length(inst: CategoryInstance, f: Mor, bound: Optional[int] = None) -> ExtendedNat:
    """Certified length of ``f``: a natural number or ``math.inf``.

    Uses the instance's certificate.  Without one, a bounded scan cannot
    distinguish "length k" from "length above the bound", so this raises
    :class:`LengthDivergenceError` carrying the scan's partial answer.
    """
    if inst.length_hint is not None:
        hint = inst.length_hint(f)
        if hint is not None:
            return hint
    if bound is None:
        bound = inst.default_bound
    partial = scan_length(inst, f, bound)
    raise LengthDivergenceError(
        f"{inst.name}: no length certificate for {inst.render(f)}; "
        f"scan found nondegenerate factorizations up to length {partial} (bound {bound})"
    )


def length(inst: CategoryInstance, f: Mor, bound: Optional[int] = None) -> ExtendedNat:
    """Alias for :func:`morphism_length`."""
    return morphism_length(inst, f, bound=bound)


def fragment(inst: CategoryInstance, bound: Optional[int] = None) -> list:
    if bound is None:
        bound = inst.default_bound
    return list(inst.morphisms(bound))


def composable(inst: CategoryInstance, a: Mor, b: Mor) -> bool:
    return inst.src(a) == inst.dst(b)


def brute_force_factor_pairs(inst: CategoryInstance, f: Mor, pool: Iterable[Mor]) -> list[tuple]:
    """Independent pair search: all ``(a, b)`` from ``pool`` with ``a ∘ b == f``."""
    pool = list(pool)
    found = []
    for a in pool:
        for b in pool:
            if composable(inst, a, b) and inst.compose(a, b) == f:
                found.append((a, b))
    return sorted(found, key=sort_key)


def check_locally_finite(
    inst: CategoryInstance,
    sample: Optional[Iterable[Mor]] = None,
    bound: Optional[int] = None,
) -> Report:
    """Verify the factorization enumerator on a sample (default: the fragment).

    Soundness: everything ``factor_pairs`` returns really composes to its
    input.  Completeness: it contains every pair the brute-force search over
    the sample finds.  Determinism: repeated calls agree, with no
    duplicates.  Finite support is witnessed by the enumeration terminating
    with an explicit list.
    """
    mors = list(sample) if sample is not None else fragment(inst, bound)
    scope = (
        f"sample of {len(mors)}"
        if sample is not None
        else f"bound {bound if bound is not None else inst.default_bound}"
    )
    report = Report(title=f"{inst.name}: local finiteness ({scope})")

    sound_cases = 0
    sound_fail = ""
    for f in mors:
        for a, b in factor_pairs(inst, f):
            sound_cases += 1
            if not composable(inst, a, b) or inst.compose(a, b) != f:
                sound_fail = (
                    f"pair ({inst.render(a)}, {inst.render(b)}) listed for "
                    f"{inst.render(f)} does not compose to it"
                )
                break
        if sound_fail:
            break
    report.record("factorization soundness", not sound_fail, sound_fail, sound_cases)

    complete_cases = 0
    complete_fail = ""
    listed_cache: dict = {}
    for a in mors:
        for b in mors:
            if not composable(inst, a, b):
                continue
            complete_cases += 1
            f = inst.compose(a, b)
            if f not in listed_cache:
                listed_cache[f] = set(factor_pairs(inst, f))
            if (a, b) not in listed_cache[f]:
                complete_fail = (
                    f"pair ({inst.render(a)}, {inst.render(b)}) composes to "
                    f"{inst.render(f)} but is not listed"
                )
                break
        if complete_fail:
            break
    report.record("factorization completeness", not complete_fail, complete_fail, complete_cases)

    det_fail = ""
    for f in mors:
        first = factor_pairs(inst, f)
        second = factor_pairs(inst, f)
        if first != second:
            det_fail = f"non-deterministic enumeration for {inst.render(f)}"
            break
        if len(set(first)) != len(first):
            det_fail = f"duplicate factor pairs for {inst.render(f)}"
            break
    report.record("factorization determinism", not det_fail, det_fail, len(mors))

    total_pairs = sum(len(factor_pairs(inst, f)) for f in mors)
    report.record(
        "finite factorization support",
        True,
        f"{total_pairs} pairs across {len(mors)} morphisms",
        len(mors),
    )
    return report


def check_mobius(
    inst: CategoryInstance,
    sample: Optional[Iterable[Mor]] = None,
    bound: Optional[int] = None,
    scan_bound: Optional[int] = None,
) -> Report:
    """Check the finite-length conditions on a sample (default: the fragment).

    A category is Möbius when, beyond local finiteness, every morphism has a
    finite nondegenerate-factorization length.  Concretely this rules out
    nontrivial factorizations of identities (split idempotent or isomorphism
    pairs) and non-identity idempotents, and every certificate must be a
    finite number.  Certificates are cross-checked against bounded scans.
    """
    if bound is None:
        bound = inst.default_bound
    if scan_bound is None:
        scan_bound = bound + 1
    if sample is not None:
        mors = list(sample)
        objs = sorted(
            {inst.src(f) for f in mors} | {inst.dst(f) for f in mors}, key=sort_key
        )
        scope = f"sample of {len(mors)}"
    else:
        mors = fragment(inst, bound)
        objs = list(inst.objects(bound))
        scope = f"bound {bound}"
    report = Report(title=f"{inst.name}: Möbius conditions ({scope})")

    iso_fail = ""
    iso_cases = 0
    for x in objs:
        ident = inst.identity(x)
        pairs = factor_pairs(inst, ident)
        iso_cases += len(pairs)
        nontrivial = [p for p in pairs if p != (ident, ident)]
        if nontrivial:
            a, b = nontrivial[0]
            iso_fail = (
                f"identity at {x!r} factors as ({inst.render(a)}, {inst.render(b)})"
            )
            break
    report.record("identities factor only trivially", not iso_fail, iso_fail, iso_cases)

    idem_fail = ""
    idem_cases = 0
    for f in mors:
        if inst.src(f) != inst.dst(f) or is_identity(inst, f):
            continue
        idem_cases += 1
        if inst.compose(f, f) == f:
            idem_fail = f"non-identity idempotent {inst.render(f)}"
            break
    report.record("no non-identity idempotents", not idem_fail, idem_fail, idem_cases)

    length_fail = ""
    length_cases = 0
    for f in mors:
        length_cases += 1
        try:
            value = morphism_length(inst, f, bound=scan_bound)
        except LengthDivergenceError as exc:
            length_fail = str(exc)
            break
        if value is math.inf:
            length_fail = f"{inst.render(f)} has certified infinite length"
            break
        scanned = scan_length(inst, f, min(value + 1, scan_bound))
        if value <= scan_bound - 1 and scanned != value:
            length_fail = (
                f"certificate says length {value} for {inst.render(f)} "
                f"but scan found {scanned}"
            )
            break
    report.record("finite certified lengths", not length_fail, length_fail, length_cases)
    return report
