"""Structured results for law checks.

A :class:`CheckResult` records one verified identity (or its failure, with a
witness).  A :class:`Report` is an ordered bundle of results with a single
overall verdict, a deterministic text rendering, and a JSON-friendly dict
form for the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one checked identity.

    ``name`` says which law, ``ok`` whether it held on the whole fragment,
    ``detail`` carries counts or the first counterexample, and ``cases`` the
    number of instances checked.
    """

    name: str
    ok: bool
    detail: str = ""
    cases: int = 0

    def render(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        suffix = f" ({self.cases} cases)" if self.cases else ""
        tail = f": {self.detail}" if self.detail else ""
        return f"[{mark}] {self.name}{suffix}{tail}"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "detail": self.detail,
            "cases": self.cases,
        }


@dataclass
class Report:
    """An ordered collection of check results for one verification run."""

    title: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def record(self, name: str, ok: bool, detail: str = "", cases: int = 0) -> CheckResult:
        result = CheckResult(name=name, ok=ok, detail=detail, cases=cases)
        self.add(result)
        return result

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.results)

    def failures(self) -> list[CheckResult]:
        return [result for result in self.results if not result.ok]

    def render(self) -> str:
        lines = [f"== {self.title} =="]
        lines.extend(result.render() for result in self.results)
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(f"overall: {verdict}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "results": [result.to_dict() for result in self.results],
        }


def merge_reports(title: str, reports: list[Report]) -> Report:
    """Flatten several reports into one, prefixing each result's name."""
    merged = Report(title=title)
    for report in reports:
        for result in report.results:
            merged.add(
                CheckResult(
                    name=f"{report.title}: {result.name}",
                    ok=result.ok,
                    detail=result.detail,
                    cases=result.cases,
                )
            )
    return merged


@dataclass(frozen=True)
class LiftReport:
    """How the product's factorization-lifting map behaves on one pair.

    The map sends pairs of factorizations of the two arguments to
    factorizations of their product; ``left_size`` and ``right_size`` count
    the argument factorizations (so the domain has their product as its
    size), ``codomain_size`` the factorizations of the product, and
    ``fibers`` lists how many domain elements hit each codomain element.
    Coproduct multiplicativity on the pair needs every fiber to have exactly
    one element; ``constant_n`` reports the weaker "every fiber has size n"
    behaviour seen in weak (non-bijective but uniform) liftings.
    """

    name: str
    left_size: int
    right_size: int
    domain_size: int
    codomain_size: int
    fibers: tuple[int, ...]

    @property
    def surjective(self) -> bool:
        return all(size >= 1 for size in self.fibers)

    @property
    def injective(self) -> bool:
        return all(size <= 1 for size in self.fibers)

    @property
    def bijective(self) -> bool:
        return all(size == 1 for size in self.fibers)

    @property
    def constant_fiber(self) -> bool:
        return len(set(self.fibers)) <= 1

    @property
    def constant_n(self) -> Optional[int]:
        """The common fiber size when all fibers agree, else ``None``."""
        sizes = set(self.fibers)
        if len(sizes) == 1:
            return next(iter(sizes))
        return None

    def fiber_histogram(self) -> dict[int, int]:
        """Map fiber size -> how many codomain elements have that size."""
        histogram: dict[int, int] = {}
        for size in self.fibers:
            histogram[size] = histogram.get(size, 0) + 1
        return dict(sorted(histogram.items()))

    @property
    def verdict(self) -> str:
        if self.bijective:
            return "bijective"
        if self.constant_n is not None:
            return f"constant fibers of size {self.constant_n}"
        if self.surjective:
            return "surjective, uneven fibers"
        return "not surjective"

    def render(self) -> str:
        return (
            f"{self.name}: factorizations {self.left_size} x {self.right_size} "
            f"-> domain {self.domain_size}, codomain {self.codomain_size}, "
            f"fiber sizes {self.fiber_histogram()} -> {self.verdict}"
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "left_size": self.left_size,
            "right_size": self.right_size,
            "domain_size": self.domain_size,
            "codomain_size": self.codomain_size,
            "fibers": list(self.fibers),
            "fiber_histogram": {str(k): v for k, v in self.fiber_histogram().items()},
            "verdict": self.verdict,
            "bijective": self.bijective,
            "surjective": self.surjective,
            "injective": self.injective,
        }
