"""Necklace posets: subsets of [n] up to rotation, decomposed by pruning.

The chains of B_n are walked longest-first; a chain is kept when it still
reaches a fresh orbit and is trimmed to the members whose orbits are new.
The trimmed pieces project to symmetric chains of the quotient.
"""

from scdforge import (
    bit_string,
    burnside_count,
    gk_scd,
    prune_chains,
    quotient_poset,
    quotient_scd_cyclic,
    rank_profile,
    rotation_group,
    set_string,
    verify_decomposition,
)

n = 6
family = prune_chains(gk_scd(n), 1)
print(f"pruning B_{n} modulo full rotation:")
for pc in family.chains:
    kept = " < ".join(bit_string(m, n) for m in pc.kept.elements)
    print(f"  chain {pc.source}: kept {kept}")

decomp = quotient_scd_cyclic(n, 1)
group = rotation_group(n, 1)
print(f"\n{len(decomp.chains)} chains cover {decomp.element_count()} necklaces"
      f" (Burnside says {burnside_count(n, group)})")
for c in decomp.chains:
    print("  " + " < ".join(set_string(rep) for rep in c.elements))

# the verifier recomputes ranks, comparability, and coverage from scratch
poset = quotient_poset(n, group)
report = verify_decomposition(poset, decomp)
print(f"\nindependent verification: {report.summary()}")

profile = rank_profile(poset)
print(f"rank profile {list(profile.counts)}, symmetric={profile.symmetric}, unimodal={profile.unimodal}")

# subgroups of the rotation group: quotient by a half turn instead
half = quotient_scd_cyclic(6, 3)
print(f"\nmodulo rotation by 3: {len(half.chains)} chains over {half.element_count()} orbits")
