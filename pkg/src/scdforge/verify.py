"""Construction-independent certification of claimed decompositions.

A target poset only needs to provide elements(), rank(x), leq(x, y),
total_rank and expected_size(); the verifier recomputes every rank and
comparability itself and never trusts the construction's bookkeeping.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import Decomposition


@dataclass(frozen=True)
class Failure:
    kind: str        # not-covered | double-covered | not-saturated | not-symmetric | not-comparable
    witness: object
    detail: str = ""


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return str(value)


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    element_count: int
    expected_count: int
    failures: tuple[Failure, ...]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "element_count": self.element_count,
            "expected_count": self.expected_count,
            "failures": [
                {"kind": f.kind, "witness": _jsonable(f.witness), "detail": f.detail}
                for f in self.failures
            ],
        }

    def summary(self) -> str:
        if self.ok:
            return f"ok: {self.element_count} elements"
        head = f"failed: {len(self.failures)} problem(s), {self.element_count} elements vs {self.expected_count} expected"
        lines = [head] + [f"  {f.kind}: {f.witness!r} {f.detail}".rstrip() for f in self.failures[:10]]
        if len(self.failures) > 10:
            lines.append(f"  ... {len(self.failures) - 10} more")
        return "\n".join(lines)


class VerificationError(RuntimeError):
    """A construction failed its own certification; carries the report."""

    def __init__(self, report: VerifyReport):
        super().__init__(report.summary())
        self.report = report


def verify_decomposition(target, decomp: Decomposition) -> VerifyReport:
    """Check that a decomposition partitions the target into symmetric chains.

    Per chain: consecutive elements must be comparable with ranks stepping by
    one, and the end ranks must sum to the poset rank.  Globally: every target
    element is covered exactly once and the element count matches the target's
    independent counting oracle.
    """
    universe = set(target.elements())
    total = target.total_rank
    failures = []
    counts = Counter()
    for chain in decomp.chains:
        elems = chain.elements
        alien = [e for e in elems if e not in universe]
        for e in alien:
            failures.append(Failure("not-covered", e, "not an element of the target"))
        counts.update(e for e in elems if e in universe)
        if alien:
            continue
        ranks = [target.rank(e) for e in elems]
        for i in range(len(elems) - 1):
            if ranks[i + 1] != ranks[i] + 1:
                failures.append(Failure("not-saturated", (elems[i], elems[i + 1])))
                break
            if not target.leq(elems[i], elems[i + 1]):
                failures.append(Failure("not-comparable", (elems[i], elems[i + 1])))
                break
        if ranks[0] + ranks[-1] != total:
            failures.append(Failure("not-symmetric", (elems[0], elems[-1]), f"rank sum {ranks[0] + ranks[-1]} != {total}"))
    for e in sorted(universe - counts.keys()):
        failures.append(Failure("not-covered", e))
    for e, c in counts.items():
        if c > 1:
            failures.append(Failure("double-covered", e, f"covered {c} times"))
    element_count = decomp.element_count()
    expected = target.expected_size()
    ok = not failures and element_count == expected and element_count == len(universe)
    return VerifyReport(ok, element_count, expected, tuple(failures))


@dataclass(frozen=True)
class RankProfile:
    counts: tuple[int, ...]
    symmetric: bool
    unimodal: bool


def rank_profile(target) -> RankProfile:
    """Per-rank element counts plus palindrome and unimodality flags."""
    counts = [0] * (target.total_rank + 1)
    for e in target.elements():
        counts[target.rank(e)] += 1
    symmetric = counts == counts[::-1]
    unimodal = True
    falling = False
    for a, b in zip(counts, counts[1:]):
        if b < a:
            falling = True
        elif b > a and falling:
            unimodal = False
            break
    return RankProfile(tuple(counts), symmetric, unimodal)


class ProductTarget:
    """Cartesian product of two targets: elements are pairs and ranks add."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.total_rank = left.total_rank + right.total_rank

    def elements(self):
        rights = list(self.right.elements())
        return ((x, y) for x in self.left.elements() for y in rights)

    def rank(self, pair) -> int:
        return self.left.rank(pair[0]) + self.right.rank(pair[1])

    def leq(self, a, b) -> bool:
        return self.left.leq(a[0], b[0]) and self.right.leq(a[1], b[1])

    def expected_size(self) -> int:
        return self.left.expected_size() * self.right.expected_size()


__all__ = [
    "Failure",
    "ProductTarget",
    "RankProfile",
    "VerificationError",
    "VerifyReport",
    "rank_profile",
    "verify_decomposition",
]
