"""Powers of a finite chain inside B_n and their coordinate-rotation quotients.

The m-th power of a k-level chain embeds in B_((k-1)m) as the blockwise
monotone words: the i-th block of k-1 bits holds the i-th coordinate's level
as ones followed by zeros.  Rotating coordinates by r steps agrees with
rotating the whole word by (k-1)r, and every Greene-Kleitman chain of the
ambient lattice either stays inside the embedded power or misses it, so the
pruned decomposition of the ambient quotient restricts to one of the chain
power's quotient.
"""

from __future__ import annotations

import itertools
import math

from .core import (
    Chain,
    Context,
    Decomposition,
    QUOTIENT_LIMIT,
    ResourceLimitError,
    check_enum,
    make_decomposition,
    map_elements,
    product_scd,
)
from .gk import gk_scd
from .prune import _pruned_family


def _check_shape(k: int, m: int) -> int:
    if k < 2:
        raise ValueError(f"chain must have at least 2 levels, got {k}")
    if m < 1:
        raise ValueError(f"multiplicity must be at least 1, got {m}")
    return (k - 1) * m


def level_mask(levels, k: int) -> int:
    """Embed a tuple of levels as a blockwise monotone word."""
    out = 0
    offset = 0
    for lv in levels:
        if not 0 <= lv <= k - 1:
            raise ValueError(f"level {lv} out of range for a {k}-level chain")
        out |= ((1 << lv) - 1) << offset
        offset += k - 1
    return out


def mask_levels(mask: int, k: int, m: int) -> tuple[int, ...]:
    """Read the per-coordinate levels off a blockwise monotone word."""
    width = k - 1
    return tuple((mask >> (i * width) & ((1 << width) - 1)).bit_count() for i in range(m))


def in_chain_power(mask: int, k: int, m: int) -> bool:
    """True iff every block of the word is ones followed by zeros."""
    n = _check_shape(k, m)
    if mask >> n:
        raise ValueError(f"word has bits beyond {n}")
    width = k - 1
    block = (1 << width) - 1
    for i in range(m):
        b = mask >> (i * width) & block
        if b & (b + 1):  # not of the form 2^j - 1
            return False
    return True


def tuple_rotate(u: tuple[int, ...], steps: int) -> tuple[int, ...]:
    """Rotate coordinates: position i takes the old value at i - steps."""
    steps %= len(u)
    if not steps:
        return u
    return u[-steps:] + u[:-steps]


def canonical_levels(u: tuple[int, ...], step: int) -> tuple[int, ...]:
    """Lexicographically least rotation of the tuple by multiples of step."""
    m = len(u)
    best = u
    x = u
    for _ in range(m // math.gcd(step, m) - 1):
        x = tuple_rotate(x, step)
        if x < best:
            best = x
    return best


def tuple_orbit_count(k: int, m: int, step: int) -> int:
    """Burnside count of level tuples modulo rotation by step."""
    step = math.gcd(step, m)
    order = m // step
    return sum(k ** math.gcd(step * e, m) for e in range(order)) // order


class ChainPowerTarget:
    """Rotation quotient of the m-fold power of a k-level chain.

    Elements are canonical level tuples; the order test rotates one side and
    compares componentwise, independent of any construction.
    """

    def __init__(self, k: int, m: int, r: int):
        _check_shape(k, m)
        self.k = k
        self.m = m
        self.step = math.gcd(r, m)
        self.total_rank = (k - 1) * m

    def elements(self):
        for u in itertools.product(range(self.k), repeat=self.m):
            if canonical_levels(u, self.step) == u:
                yield u

    def rank(self, u) -> int:
        return sum(u)

    def leq(self, a, b) -> bool:
        x = a
        for _ in range(self.m // math.gcd(self.step, self.m)):
            if all(p <= q for p, q in zip(x, b)):
                return True
            x = tuple_rotate(x, self.step)
        return False

    def expected_size(self) -> int:
        return tuple_orbit_count(self.k, self.m, self.step)


def chainpower_scd(k: int, m: int, r: int = 1) -> Decomposition:
    """SCD of the rotation quotient of a chain power.

    Prune the ambient B_n against rotation by (k-1)r, keep the pieces that
    lie inside the embedded power, and report elements as canonical level
    tuples.  Pieces that miss the power entirely are dropped.
    """
    n = _check_shape(k, m)
    check_enum(n, QUOTIENT_LIMIT, "chainpower_scd")
    if r < 1:
        raise ValueError("rotation step must be positive")
    step = math.gcd(r, m)
    family = _pruned_family(n, (k - 1) * step)
    chains = []
    for pc in family.chains:
        kept = [
            (a, rk)
            for a, rk in zip(pc.kept.elements, pc.kept.ranks)
            if in_chain_power(a, k, m)
        ]
        if not kept:
            continue
        elems = tuple(canonical_levels(mask_levels(a, k, m), step) for a, _ in kept)
        chains.append(Chain(elems, tuple(rk for _, rk in kept)))
    context = Context(kind="chainpower", total_rank=n, k=k, m=m, r=step)
    return make_decomposition(chains, context)


def check_dichotomy(k: int, m: int) -> bool:
    """True iff every ambient Greene-Kleitman chain is inside or disjoint
    from the embedded chain power."""
    n = _check_shape(k, m)
    if n > 18:
        raise ResourceLimitError(f"dichotomy scan is capped at (k-1)m <= 18, got {n}")
    for chain in gk_scd(n).chains:
        flags = [in_chain_power(a, k, m) for a in chain.elements]
        if any(flags) and not all(flags):
            return False
    return True


def _normalize_factors(factors) -> tuple[tuple[int, int, int], ...]:
    normalized = []
    for item in factors:
        try:
            k, m, r = (int(x) for x in item)
        except (TypeError, ValueError):
            raise ValueError(f"factor {item!r} is not a (levels, multiplicity, rotation) triple") from None
        _check_shape(k, m)
        if r < 1:
            raise ValueError("rotation step must be positive")
        normalized.append((k, m, math.gcd(r, m)))
    if not normalized:
        raise ValueError("at least one factor is required")
    return tuple(normalized)


def chainproduct_scd(factors) -> Decomposition:
    """SCD of a product of chain-power rotation quotients.

    Each factor (k, m, r) contributes its own quotient; factors are folded
    with the hook product and elements are the concatenated level tuples.
    """
    triples = _normalize_factors(factors)
    total_elements = 1
    for k, m, _ in triples:
        total_elements *= k ** m
        if total_elements > 1 << QUOTIENT_LIMIT:
            raise ResourceLimitError(f"product has more than 2^{QUOTIENT_LIMIT} elements")
    parts = [chainpower_scd(k, m, r) for k, m, r in triples]
    combined = parts[0]
    for part in parts[1:]:
        paired = product_scd(combined, part)
        combined = map_elements(paired, lambda e: e[0] + e[1], paired.context)
    total = sum((k - 1) * m for k, m, _ in triples)
    context = Context(kind="product", total_rank=total, factors=triples)
    return make_decomposition(combined.chains, context)


class ChainProductTarget:
    """Product of chain-power quotients over concatenated level tuples."""

    def __init__(self, factors):
        self.triples = _normalize_factors(factors)
        self.parts = [ChainPowerTarget(k, m, r) for k, m, r in self.triples]
        self.total_rank = sum(t.total_rank for t in self.parts)

    def _split(self, u):
        out = []
        i = 0
        for _, m, _ in self.triples:
            out.append(tuple(u[i : i + m]))
            i += m
        return out

    def elements(self):
        pools = [list(p.elements()) for p in self.parts]
        for combo in itertools.product(*pools):
            yield tuple(itertools.chain.from_iterable(combo))

    def rank(self, u) -> int:
        return sum(u)

    def leq(self, a, b) -> bool:
        return all(
            part.leq(x, y)
            for part, x, y in zip(self.parts, self._split(a), self._split(b))
        )

    def expected_size(self) -> int:
        out = 1
        for p in self.parts:
            out *= p.expected_size()
        return out


__all__ = [
    "ChainPowerTarget",
    "ChainProductTarget",
    "canonical_levels",
    "chainpower_scd",
    "chainproduct_scd",
    "check_dichotomy",
    "in_chain_power",
    "level_mask",
    "mask_levels",
    "tuple_orbit_count",
    "tuple_rotate",
]
