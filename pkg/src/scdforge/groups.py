"""Permutation groups generated by powers of disjoint cycles, and orbit posets.

A group is specified as a list of disjoint cycles, each raised to an integer
power; the generated group is the direct product of the cyclic subgroups, one
per cycle, because the supports are disjoint.  That structure keeps orbit
counting (Burnside) and factorization cheap and exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    QUOTIENT_LIMIT,
    ResourceLimitError,
    check_enum,
    check_ground,
    full_mask,
)

BURNSIDE_LIMIT = 10**6  # largest group order we will sum over


class ParseError(ValueError):
    """Bad group-spec text or semantics; carries an optional position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class CycleFactor:
    """One generator: a cycle raised to a power."""

    cycle: tuple[int, ...]
    exponent: int = 1

    @property
    def length(self) -> int:
        return len(self.cycle)

    def order(self) -> int:
        return self.length // math.gcd(self.exponent, self.length)

    def support_mask(self) -> int:
        out = 0
        for e in self.cycle:
            out |= 1 << (e - 1)
        return out

    def text(self) -> str:
        body = "(" + " ".join(str(e) for e in self.cycle) + ")"
        return body if self.exponent == 1 else f"{body}^{self.exponent}"


@dataclass(frozen=True)
class GroupSpec:
    """Disjoint cycles with powers; generates a subgroup of S_n."""

    n: int
    factors: tuple[CycleFactor, ...]

    def __post_init__(self):
        check_ground(self.n)
        seen = 0
        for f in self.factors:
            if len(set(f.cycle)) != len(f.cycle):
                raise ParseError("element repeated in cycle")
            if any(e < 1 or e > self.n for e in f.cycle):
                raise ParseError("element out of range")
            if f.exponent < 0:
                raise ParseError("exponent must be nonnegative")
            support = f.support_mask()
            if support & seen:
                raise ParseError("cycles not disjoint")
            seen |= support

    @classmethod
    def trivial(cls, n: int) -> "GroupSpec":
        return cls(n, ())

    def text(self) -> str:
        return "".join(f.text() for f in self.factors)

    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f.order()
        return out

    def is_trivial(self) -> bool:
        return all(f.order() == 1 for f in self.factors)

    def generators(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            perm_from_cycle_power(f.cycle, f.exponent, self.n)
            for f in self.factors
            if f.order() > 1
        )


def parse_group_spec(text: str, n: int) -> GroupSpec:
    """Parse cycle notation like "(1 2 3 4)^2 (5 6)" into a GroupSpec.

    Grammar: one or more terms, each '(' int+ ')' with an optional '^' uint;
    integers are 1-based.  Raises ParseError with the offending position.
    """
    check_ground(n)
    i = 0
    size = len(text)
    factors = []

    def skip_ws():
        nonlocal i
        while i < size and text[i].isspace():
            i += 1

    def read_uint() -> int:
        nonlocal i
        start = i
        while i < size and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected an integer", start)
        return int(text[start:i])

    skip_ws()
    if i == size:
        raise ParseError("expected '('", i)
    while i < size:
        if text[i] != "(":
            raise ParseError("expected '('", i)
        i += 1
        cycle = []
        while True:
            skip_ws()
            if i < size and text[i] == ")":
                i += 1
                break
            if i >= size:
                raise ParseError("unclosed cycle", i)
            cycle.append(read_uint())
        if not cycle:
            raise ParseError("empty cycle", i - 1)
        exponent = 1
        if i < size and text[i] == "^":
            i += 1
            exponent = read_uint()
        factors.append(CycleFactor(tuple(cycle), exponent))
        skip_ws()
    return GroupSpec(n, tuple(factors))


def perm_from_cycle_power(cycle, exponent: int, n: int) -> tuple[int, ...]:
    """Image tuple of the permutation cycle^exponent on [n] (identity off-support)."""
    img = list(range(1, n + 1))
    length = len(cycle)
    for idx, x in enumerate(cycle):
        img[x - 1] = cycle[(idx + exponent) % length]
    return tuple(img)


def apply_perm(perm: tuple[int, ...], mask: int) -> int:
    """Image of a subset under a permutation given as an image tuple."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << (perm[low.bit_length() - 1] - 1)
        mask ^= low
    return out


def composite_perm(group: GroupSpec) -> tuple[int, ...]:
    """The product of the group's factors as a single permutation.

    Well defined without an order because the supports are disjoint.  Note
    this is one element of the generated group, not the group itself.
    """
    img = list(range(1, group.n + 1))
    for f in group.factors:
        for idx, x in enumerate(f.cycle):
            img[x - 1] = f.cycle[(idx + f.exponent) % f.length]
    return tuple(img)


@dataclass(frozen=True)
class Orbit:
    """Equivalence class of subsets; rep is the numerically smallest mask."""

    rep: int
    size: int
    members: tuple[int, ...]


def orbit(s: int, group: GroupSpec) -> Orbit:
    """Closure of a subset under the group generators."""
    gens = group.generators()
    members = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for g in gens:
            y = apply_perm(g, x)
            if y not in members:
                members.add(y)
                stack.append(y)
    ordered = tuple(sorted(members))
    return Orbit(ordered[0], len(ordered), ordered)


def orbit_rep(s: int, group: GroupSpec) -> int:
    """Smallest mask in the orbit of a subset."""
    return orbit(s, group).rep


def burnside_count(n: int, group: GroupSpec) -> int:
    """Exact orbit count of B_n under the group, by averaging fixed points.

    A permutation fixes 2^(number of cycles, fixed points included) subsets;
    group elements enumerate as independent powers of the disjoint factors.
    """
    check_ground(n)
    if group.n != n:
        raise ValueError("group is over a different ground set")
    order = group.order()
    if order > BURNSIDE_LIMIT:
        raise ResourceLimitError(f"group order {order} exceeds the counting cap {BURNSIDE_LIMIT}")
    outside = n - sum(f.length for f in group.factors)
    total = 0
    for exps in itertools.product(*(range(f.order()) for f in group.factors)):
        cycles = outside
        for f, e in zip(group.factors, exps):
            cycles += math.gcd(f.exponent * e, f.length)
        total += 1 << cycles
    assert total % order == 0
    return total // order


class QuotientPoset:
    """Orbits of B_n under a cycle-power group, ranked by subset size.

    Comparability of two orbits is decided by walking the smaller orbit and
    testing containment against one fixed member of the other, which is valid
    because the group acts by automorphisms.
    """

    def __init__(self, n: int, group: GroupSpec, orbits: tuple[Orbit, ...]):
        self.n = n
        self.group = group
        self.orbits = orbits
        self._by_rep = {o.rep: o for o in orbits}
        by_rank: list[list[Orbit]] = [[] for _ in range(n + 1)]
        for o in orbits:
            by_rank[o.rep.bit_count()].append(o)
        self.orbits_by_rank = tuple(tuple(bucket) for bucket in by_rank)

    @property
    def total_rank(self) -> int:
        return self.n

    def size(self) -> int:
        return len(self.orbits)

    def expected_size(self) -> int:
        return burnside_count(self.n, self.group)

    def elements(self):
        return (o.rep for o in self.orbits)

    def __contains__(self, rep: int) -> bool:
        return rep in self._by_rep

    def rank(self, rep: int) -> int:
        return rep.bit_count()

    def orbit_of(self, rep: int) -> Orbit:
        return self._by_rep[rep]

    def leq(self, a: int, b: int) -> bool:
        oa = self._by_rep[a]
        ob = self._by_rep[b]
        if oa.size <= ob.size:
            return any(x | b == b for x in oa.members)
        return any(a | y == y for y in ob.members)

    def covers(self):
        """Comparable pairs at adjacent ranks (the Hasse diagram edges)."""
        for r in range(self.n):
            for lower in self.orbits_by_rank[r]:
                for upper in self.orbits_by_rank[r + 1]:
                    if self.leq(lower.rep, upper.rep):
                        yield lower.rep, upper.rep


def quotient_poset(n: int, group: GroupSpec) -> QuotientPoset:
    """Enumerate every orbit of B_n under the group, bucketed by rank."""
    check_enum(n, QUOTIENT_LIMIT, "quotient_poset")
    if group.n != n:
        raise ValueError("group is over a different ground set")
    gens = group.generators()
    seen = bytearray(1 << n)
    orbits = []
    for a in range(1 << n):
        if seen[a]:
            continue
        members = [a]
        seen[a] = 1
        stack = [a]
        while stack:
            x = stack.pop()
            for g in gens:
                y = apply_perm(g, x)
                if not seen[y]:
                    seen[y] = 1
                    members.append(y)
                    stack.append(y)
        members.sort()
        orbits.append(Orbit(members[0], len(members), tuple(members)))
    orbits.sort(key=lambda o: (o.rep.bit_count(), o.rep))
    return QuotientPoset(n, group, tuple(orbits))


@dataclass(frozen=True)
class NormalizedCycle:
    """A cycle power relabeled onto [length] with a gcd-normalized step."""

    relabel: dict[int, int]   # support element -> position in 1..length
    power: int                # divisor of length; == length means identity
    length: int


def normalize_cycle_power(factor: CycleFactor) -> NormalizedCycle:
    """Relabel a cycle onto [L] as (1 2 ... L) and normalize its power by gcd.

    The generated subgroup of a cycle power depends only on gcd(exponent, L),
    so downstream constructions may assume the step divides the length.
    """
    length = factor.length
    power = math.gcd(factor.exponent, length)
    relabel = {x: i + 1 for i, x in enumerate(factor.cycle)}
    return NormalizedCycle(relabel, power, length)


@dataclass(frozen=True)
class SplitFactor:
    """One moved block of the ground set with its local rotation step."""

    cycle: tuple[int, ...]
    length: int
    power: int
    support: int
    relabel: dict[int, int]


@dataclass(frozen=True)
class Factorization:
    """Fixed points plus the moved blocks of a cycle-power group."""

    fixed: int
    factors: tuple[SplitFactor, ...]


def factorize(n: int, group: GroupSpec) -> Factorization:
    """Split [n] into the group's fixed points and the supports it rotates.

    Cycle powers that normalize to the identity leave their support fixed and
    are merged into the fixed block; each remaining factor carries the
    normalized local step for its own quotient.
    """
    check_ground(n)
    if group.n != n:
        raise ValueError("group is over a different ground set")
    fixed = full_mask(n)
    split = []
    for f in group.factors:
        norm = normalize_cycle_power(f)
        if norm.power == norm.length:
            continue
        support = f.support_mask()
        split.append(SplitFactor(f.cycle, norm.length, norm.power, support, norm.relabel))
        fixed &= ~support
    return Factorization(fixed, tuple(split))


__all__ = [
    "BURNSIDE_LIMIT",
    "CycleFactor",
    "Factorization",
    "GroupSpec",
    "NormalizedCycle",
    "Orbit",
    "ParseError",
    "QuotientPoset",
    "SplitFactor",
    "apply_perm",
    "burnside_count",
    "composite_perm",
    "factorize",
    "normalize_cycle_power",
    "orbit",
    "orbit_rep",
    "parse_group_spec",
    "perm_from_cycle_power",
    "quotient_poset",
]
