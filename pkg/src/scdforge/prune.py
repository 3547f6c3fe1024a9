"""Quotients of B_n by rotation groups, by pruning the Greene-Kleitman chains.

For the group generated by rotation-by-step (step dividing n), walk the
Greene-Kleitman chains in order: select a chain when one of its members lies
in an orbit untouched by the previously selected chains, then cut it down to
the members whose orbits miss the previously kept pieces.  The kept pieces
project to a symmetric chain decomposition of the quotient.  Arbitrary
products of disjoint cycle powers reduce to this: split off the fixed points,
quotient each rotated block locally, and recombine with the hook product.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .core import (
    Chain,
    Context,
    Decomposition,
    QUOTIENT_LIMIT,
    ResourceLimitError,
    check_enum,
    full_mask,
    make_decomposition,
    map_elements,
    product_scd,
)
from .gk import GkScd, boolean_scd_on_support, gk_scd, predecessor
from .groups import CycleFactor, GroupSpec, factorize, orbit_rep, parse_group_spec, quotient_poset
from .verify import VerificationError, verify_decomposition


class ConsistencyError(RuntimeError):
    """The pruned family violated one of its own guarantees (never expected)."""


def rotate(mask: int, steps: int, n: int) -> int:
    """Rotate a subset of [n]: element i moves to i + steps (wrapping)."""
    steps %= n
    if not steps:
        return mask
    return ((mask << steps) | (mask >> (n - steps))) & full_mask(n)


def cyclic_rep(mask: int, n: int, step: int) -> int:
    """Smallest mask among rotations of the subset by multiples of step."""
    best = mask
    x = mask
    for _ in range(n // step - 1):
        x = rotate(x, step, n)
        if x < best:
            best = x
    return best


def rotation_group(n: int, step: int) -> GroupSpec:
    """The subgroup of S_n generated by the step-th power of the full rotation."""
    return GroupSpec(n, (CycleFactor(tuple(range(1, n + 1)), step),))


def _rotation_orbit_count(n: int, step: int) -> int:
    # Burnside for the rotation-by-step group, inlined as a self-check oracle
    order = n // step
    return sum(1 << math.gcd(step * e, n) for e in range(order)) // order


@dataclass(frozen=True)
class PrunedChain:
    """A selected Greene-Kleitman chain, its kept piece, and the projection."""

    source: int      # index into the GkScd chain list
    kept: Chain      # surviving subsets, still a symmetric chain in B_n
    orbits: Chain    # the same piece written as canonical orbit representatives


@dataclass(frozen=True)
class PrunedFamily:
    n: int
    step: int
    chains: tuple[PrunedChain, ...]

    @property
    def quotient_chains(self) -> tuple[Chain, ...]:
        return tuple(pc.orbits for pc in self.chains)


def prune_chains(scd: GkScd, step: int, *, selection: str = "full") -> PrunedFamily:
    """Greedily select and prune chains into an SCD of B_n modulo rotation.

    selection="full" admits a chain when some member's orbit misses every
    previously selected chain in full; selection="pruned" tests against the
    kept pieces instead (a weaker gate, retained for comparison runs).  Either
    way the kept piece consists of the members whose orbits miss the pieces
    kept so far.  The result is self-checked: every kept piece must be a
    symmetric chain, pieces must cover pairwise disjoint orbit sets, and the
    number of orbits covered must equal the Burnside count.
    """
    if selection not in ("full", "pruned"):
        raise ValueError("selection must be 'full' or 'pruned'")
    n = scd.n
    if step < 1 or n % step:
        raise ValueError(f"rotation step must divide the ground size, got {step} for n={n}")
    touched_full: set[int] = set()
    touched_kept: set[int] = set()
    picked = []
    for ci, chain in enumerate(scd.chains):
        reps = [cyclic_rep(a, n, step) for a in chain.elements]
        gate = touched_full if selection == "full" else touched_kept
        if all(rep in gate for rep in reps):
            continue
        kept = [(a, rep) for a, rep in zip(chain.elements, reps) if rep not in touched_kept]
        if not kept:
            raise ConsistencyError(f"selected chain {ci} pruned to nothing")
        touched_full.update(reps)
        touched_kept.update(rep for _, rep in kept)
        kept_chain = Chain.from_masks(a for a, _ in kept)
        orbit_chain = Chain(tuple(rep for _, rep in kept), kept_chain.ranks)
        picked.append(PrunedChain(ci, kept_chain, orbit_chain))
    family = PrunedFamily(n, step, tuple(picked))
    _check_family(family, touched_kept)
    return family


def _check_family(family: PrunedFamily, touched_kept: set[int]) -> None:
    n = family.n
    kept_total = 0
    for pc in family.chains:
        ranks = pc.kept.ranks
        if any(b != a + 1 for a, b in zip(ranks, ranks[1:])):
            raise ConsistencyError(f"kept piece of chain {pc.source} is not saturated")
        if ranks[0] + ranks[-1] != n:
            raise ConsistencyError(f"kept piece of chain {pc.source} is not symmetric")
        kept_total += len(ranks)
    if kept_total != len(touched_kept):
        raise ConsistencyError("kept pieces cover an orbit twice")
    expected = _rotation_orbit_count(n, family.step)
    if kept_total != expected:
        raise ConsistencyError(f"covered {kept_total} orbits but the quotient has {expected}")


@functools.lru_cache(maxsize=None)
def _pruned_family(n: int, step: int) -> PrunedFamily:
    return prune_chains(gk_scd(n), step)


def quotient_scd_cyclic(n: int, step: int) -> Decomposition:
    """SCD of B_n modulo rotation by step (normalized to gcd(step, n)).

    step = n is the trivial group, for which the Greene-Kleitman chains come
    back unchanged with singleton orbits.
    """
    check_enum(n, QUOTIENT_LIMIT, "quotient_scd_cyclic")
    if step < 1:
        raise ValueError("rotation step must be positive")
    step = math.gcd(step, n)
    family = _pruned_family(n, step)
    context = Context(kind="quotient", total_rank=n, n=n, group=rotation_group(n, step).text())
    return make_decomposition(family.quotient_chains, context)


def _relabeled_cyclic_part(factor) -> Decomposition:
    local = quotient_scd_cyclic(factor.length, factor.power)
    inverse = {pos - 1: element - 1 for element, pos in factor.relabel.items()}

    def relabel(mask: int) -> int:
        out = 0
        for i in range(factor.length):
            if mask >> i & 1:
                out |= 1 << inverse[i]
        return out

    return map_elements(local, relabel)


def quotient_scd(n: int, group: GroupSpec | str) -> Decomposition:
    """SCD of B_n modulo a group generated by powers of disjoint cycles.

    Fixed points contribute a plain Boolean factor and every rotated block a
    cyclic quotient; the factors are folded with the hook product, elements
    are renamed to canonical orbit representatives, and the result is
    certified against the independently built orbit poset before returning.
    """
    check_enum(n, QUOTIENT_LIMIT, "quotient_scd")
    if isinstance(group, str):
        group = parse_group_spec(group, n)
    if group.n != n:
        raise ValueError("group is over a different ground set")
    split = factorize(n, group)
    parts = []
    if split.fixed:
        parts.append(boolean_scd_on_support(split.fixed))
    for factor in split.factors:
        parts.append(_relabeled_cyclic_part(factor))
    combined = parts[0]
    for part in parts[1:]:
        paired = product_scd(combined, part)
        combined = map_elements(paired, lambda e: e[0] | e[1], paired.context)
    canonical = map_elements(combined, lambda a: orbit_rep(a, group))
    context = Context(kind="quotient", total_rank=n, n=n, group=group.text())
    decomp = make_decomposition(canonical.chains, context)
    report = verify_decomposition(quotient_poset(n, group), decomp)
    if not report.ok:
        raise VerificationError(report)
    return decomp


def shadow_closure_failures(scd: GkScd, step: int) -> list[dict]:
    """Counterexamples to predecessor-closure of earlier-chain shadowing.

    A subset is shadowed when some rotation of it lies on an earlier chain
    than its own.  The property: for every shadowed A in the lower half
    (|A| <= ceil(n/2)) whose predecessor exists, the predecessor is shadowed
    too.  This is what makes every kept piece survive as one contiguous,
    symmetric window of its source chain.
    """
    n = scd.n
    if n > 14:
        raise ResourceLimitError(f"shadow-closure scan is capped at n <= 14, got {n}")
    if step < 1 or n % step:
        raise ValueError(f"rotation step must divide the ground size, got {step} for n={n}")
    first_chain: dict[int, int] = {}
    for a in range(1 << n):
        rep = cyclic_rep(a, n, step)
        ci = scd.chain_index(a)
        if ci < first_chain.get(rep, ci + 1):
            first_chain[rep] = ci
    half = (n + 1) // 2
    failures = []
    for a in range(1 << n):
        if a.bit_count() > half:
            continue
        w = scd.chain_index(a)
        if first_chain[cyclic_rep(a, n, step)] >= w:
            continue
        prev = predecessor(a, n)
        if prev is None:
            continue
        if first_chain[cyclic_rep(prev, n, step)] >= w:
            failures.append({"subset": a, "chain": w, "predecessor": prev, "n": n, "step": step})
    return failures


def check_shadow_closure(scd: GkScd, step: int) -> bool:
    """True iff shadowing by earlier chains is closed under the predecessor map."""
    return not shadow_closure_failures(scd, step)


__all__ = [
    "ConsistencyError",
    "PrunedChain",
    "PrunedFamily",
    "check_shadow_closure",
    "cyclic_rep",
    "prune_chains",
    "quotient_scd",
    "quotient_scd_cyclic",
    "rotate",
    "rotation_group",
    "shadow_closure_failures",
]
