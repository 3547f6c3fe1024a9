"""Quotients of B_n by an involution that is a product of disjoint transpositions.

Split off the fixed points and relabel the 2k moved elements so the involution
reverses the word.  An orbit is then an unordered pair of half-words {u v^rev,
v u^rev} and can be named by the ordered pair (u, v) where u comes before v in
a total order built from an SCD of the half cube: earlier chain first, and
containment within a chain.  Pairs drawn from two different chains fill a full
rectangle, which the hooks decompose; pairs drawn from one chain form a
staircase triangle, which peels into symmetric border chains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Chain,
    Context,
    Decomposition,
    GridChain,
    QUOTIENT_LIMIT,
    check_enum,
    hook_chains,
    make_decomposition,
    map_elements,
    product_scd,
)
from .gk import GkScd, boolean_scd_on_support, gk_decomposition, gk_scd
from .groups import (
    CycleFactor,
    GroupSpec,
    apply_perm,
    composite_perm,
    parse_group_spec,
    quotient_poset,
)
from .verify import VerificationError, verify_decomposition


@dataclass(frozen=True)
class HalfString:
    """A half-cube subset located inside a fixed SCD of B_k."""

    bits: int
    chain: int
    position: int


def half_string(scd: GkScd, mask: int) -> HalfString:
    ci, pos = scd.locate(mask)
    return HalfString(mask, ci, pos)


def precedes(x: HalfString, y: HalfString) -> bool:
    """Total order on half-words: earlier chain wins, then position in chain."""
    if x.chain != y.chain:
        return x.chain < y.chain
    return x.position <= y.position


def word_reverse(mask: int, width: int) -> int:
    out = 0
    for i in range(width):
        if mask >> i & 1:
            out |= 1 << (width - 1 - i)
    return out


def pair_mask(u: int, v: int, k: int) -> int:
    """The word u followed by the reverse of v, as a subset of [2k]."""
    return u | (word_reverse(v, k) << k)


@dataclass(frozen=True)
class PBlock:
    """All ordered pairs drawn from chains i <= j of the half-cube SCD."""

    i: int
    j: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: tuple[tuple[int, int], ...]


def _block(i: int, j: int, rows, cols) -> PBlock:
    if i < j:
        cells = tuple((u, v) for u in rows for v in cols)
    else:
        cells = tuple(
            (rows[x], rows[y]) for x in range(len(rows)) for y in range(x, len(rows))
        )
    return PBlock(i, j, tuple(rows), tuple(cols), cells)


def build_blocks(k: int, scd: GkScd | None = None) -> list[PBlock]:
    """One block per unordered pair of chains; diagonal blocks keep only
    the containment-ordered cells.  Total cell count is (4^k + 2^k) / 2."""
    if scd is None:
        scd = gk_scd(k)
    return [
        _block(i, j, scd.chains[i].elements, scd.chains[j].elements)
        for i in range(len(scd.chains))
        for j in range(i, len(scd.chains))
    ]


def scd_of_diagonal_block(block: PBlock) -> list[GridChain]:
    """Peel the staircase triangle {(x, y): x <= y} into symmetric borders.

    Each pass walks the top row then the right column of the remaining
    triangle and strips two off the side length, giving floor(l/2)+1 chains
    for a chain of l+1 half-words.
    """
    if block.i != block.j:
        raise ValueError("not a diagonal block")
    side = len(block.rows) - 1
    chains = []
    for d in range(side // 2 + 1):
        lo, hi = d, side - d
        cells = [(lo, y) for y in range(lo, hi + 1)]
        cells += [(x, hi) for x in range(lo + 1, hi + 1)]
        chains.append(GridChain(tuple(cells)))
    return chains


def standard_reflection(n: int) -> GroupSpec:
    """The involution (1 n)(2 n-1)... reversing the word of length n."""
    pairs = tuple(CycleFactor((i, n + 1 - i)) for i in range(1, n // 2 + 1))
    return GroupSpec(n, pairs)


def _transpositions(group: GroupSpec) -> list[tuple[int, int]]:
    pairs = []
    for f in group.factors:
        if f.order() == 1:
            continue  # normalizes to the identity
        if f.length != 2:
            raise ValueError("not a product of disjoint transpositions")
        pairs.append((min(f.cycle), max(f.cycle)))
    pairs.sort()
    return pairs


def involution_group(n: int, pairs) -> GroupSpec:
    """The 2-element group {1, rho} written as a power of one cycle.

    For rho = (a_1 b_1)...(a_k b_k), the 2k-cycle listing a_1..a_k b_1..b_k
    raised to the k-th power equals rho, so the generated group is exactly
    {1, rho}.  This is the form the cycle-power machinery understands; note
    that listing the transpositions as separate generators would generate a
    group of order 2^k instead.
    """
    pairs = list(pairs)
    if not pairs:
        return GroupSpec.trivial(n)
    cycle = tuple(a for a, _ in pairs) + tuple(b for _, b in pairs)
    return GroupSpec(n, (CycleFactor(cycle, len(pairs)),))


def _core_quotient_part(k: int) -> Decomposition:
    """SCD of B_2k modulo word reversal, on the local ground set [2k]."""
    scd = gk_scd(k)
    chains = []
    for i, ci in enumerate(scd.chains):
        for j in range(i, len(scd.chains)):
            cj = scd.chains[j]
            if i < j:
                grids = hook_chains(len(ci) - 1, len(cj) - 1)
            else:
                grids = scd_of_diagonal_block(_block(i, i, ci.elements, ci.elements))
            for grid in grids:
                masks = []
                for x, y in grid.cells:
                    word = pair_mask(ci.elements[x], cj.elements[y], k)
                    masks.append(min(word, word_reverse(word, 2 * k)))
                chains.append(Chain.from_masks(masks))
    context = Context(kind="quotient", total_rank=2 * k, n=2 * k)
    return make_decomposition(chains, context)


def reflection_scd(n: int, rho: GroupSpec | str) -> Decomposition:
    """SCD of B_n modulo an involution given as disjoint transpositions.

    Factors that normalize to the identity (1-cycles, even powers of a
    transposition) are dropped; anything else of length other than 2 is
    rejected.  With no transposition left the quotient is B_n itself.
    """
    check_enum(n, QUOTIENT_LIMIT, "reflection_scd")
    if isinstance(rho, str):
        rho = parse_group_spec(rho, n)
    if rho.n != n:
        raise ValueError("involution is over a different ground set")
    pairs = _transpositions(rho)
    two_element = involution_group(n, pairs)
    context = Context(kind="reflection", total_rank=n, n=n, group=rho.text())
    if not pairs:
        decomp = make_decomposition(gk_decomposition(n).chains, context)
        return _certified(decomp, n, two_element)
    k = len(pairs)
    # relabel so pair t becomes (t, 2k+1-t): the involution reverses the word
    from_local = {}
    for t, (a, b) in enumerate(pairs, start=1):
        from_local[t] = a
        from_local[2 * k + 1 - t] = b
    core = _core_quotient_part(k)

    def relabel(mask: int) -> int:
        out = 0
        for q in range(1, 2 * k + 1):
            if mask >> (q - 1) & 1:
                out |= 1 << (from_local[q] - 1)
        return out

    parts = [map_elements(core, relabel)]
    moved = 0
    for a, b in pairs:
        moved |= 1 << (a - 1) | 1 << (b - 1)
    fixed = ((1 << n) - 1) & ~moved
    if fixed:
        parts.append(boolean_scd_on_support(fixed))
    combined = parts[0]
    for part in parts[1:]:
        paired = product_scd(combined, part)
        combined = map_elements(paired, lambda e: e[0] | e[1], paired.context)
    flip = composite_perm(rho)
    canonical = map_elements(combined, lambda a: min(a, apply_perm(flip, a)))
    decomp = make_decomposition(canonical.chains, context)
    return _certified(decomp, n, two_element)


def _certified(decomp: Decomposition, n: int, group: GroupSpec) -> Decomposition:
    report = verify_decomposition(quotient_poset(n, group), decomp)
    if not report.ok:
        raise VerificationError(report)
    return decomp


__all__ = [
    "HalfString",
    "PBlock",
    "build_blocks",
    "half_string",
    "involution_group",
    "pair_mask",
    "precedes",
    "reflection_scd",
    "scd_of_diagonal_block",
    "standard_reflection",
    "word_reverse",
]
