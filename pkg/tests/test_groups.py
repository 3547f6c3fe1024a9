import math

import pytest

from oracles import cycle_count, group_elements, naive_orbits
from scdforge.core import ResourceLimitError, mask_of
from scdforge.groups import (
    CycleFactor,
    GroupSpec,
    ParseError,
    apply_perm,
    burnside_count,
    composite_perm,
    factorize,
    normalize_cycle_power,
    orbit,
    orbit_rep,
    parse_group_spec,
    perm_from_cycle_power,
    quotient_poset,
)


def test_parse_single_cycle():
    spec = parse_group_spec("(1 2 3 4)", 4)
    assert spec.factors == (CycleFactor((1, 2, 3, 4), 1),)


def test_parse_powers_and_multiple_terms():
    spec = parse_group_spec("(1 2 3 4)^2 (5 6)", 6)
    assert [f.cycle for f in spec.factors] == [(1, 2, 3, 4), (5, 6)]
    assert [f.exponent for f in spec.factors] == [2, 1]


def test_parse_overlap_rejected():
    with pytest.raises(ParseError, match="cycles not disjoint"):
        parse_group_spec("(1 2)(2 3)", 3)


def test_parse_range_rejected():
    with pytest.raises(ParseError, match="element out of range"):
        parse_group_spec("(1 5)", 4)
    with pytest.raises(ParseError, match="element out of range"):
        parse_group_spec("(0 1)", 4)


def test_parse_malformed():
    for text in ["", "1 2 3", "(1 2", "()", "(1 2)^", "(1 2) x", "(1 -2)"]:
        with pytest.raises(ParseError):
            parse_group_spec(text, 6)
    try:
        parse_group_spec("(1 2) x", 6)
    except ParseError as e:
        assert e.position is not None


def test_text_round_trip():
    for text in ["(1 2 3 4)", "(1 2 3 4)^2 (5 6)", "(2 4 6)^0 (1 3)"]:
        spec = parse_group_spec(text, 6)
        assert parse_group_spec(spec.text(), 6) == spec


def test_apply_perm_examples():
    shift = perm_from_cycle_power((1, 2, 3, 4), 1, 4)
    assert apply_perm(shift, mask_of([1, 2])) == mask_of([2, 3])
    assert apply_perm(shift, mask_of([4])) == mask_of([1])
    identity = tuple(range(1, 5))
    assert apply_perm(identity, mask_of([2, 4])) == mask_of([2, 4])


def test_composite_perm_is_the_product():
    spec = parse_group_spec("(1 4)(2 3)", 4)
    flip = composite_perm(spec)
    assert flip == (4, 3, 2, 1)


def test_orbit_examples():
    cyc4 = parse_group_spec("(1 2 3 4)", 4)
    o = orbit(mask_of([1]), cyc4)
    assert o.members == (1, 2, 4, 8)
    assert o.rep == 1 and o.size == 4

    o = orbit(mask_of([1, 3]), cyc4)
    assert o.members == (mask_of([1, 3]), mask_of([2, 4]))
    assert o.size == 2

    assert orbit(0, cyc4) == orbit(0, GroupSpec.trivial(4))
    assert orbit(0, cyc4).size == 1


@pytest.mark.parametrize(
    "n, text",
    [
        (4, "(1 2 3 4)"),
        (4, "(1 4)(2 3)"),
        (6, "(1 2 3 4)^2 (5 6)"),
        (7, "(1 2 3)(4 5 6 7)^2"),
        (8, "(1 3 5 7)(2 4 6 8)"),
    ],
)
def test_orbits_and_burnside_against_naive(n, text):
    spec = parse_group_spec(text, n)
    gens = spec.generators()
    naive = naive_orbits(n, gens)
    assert burnside_count(n, spec) == len(naive)
    poset = quotient_poset(n, spec)
    assert poset.size() == len(naive)
    assert {o.members for o in poset.orbits} == {tuple(sorted(s)) for s in naive}
    total = sum(o.size for o in poset.orbits)
    assert total == 1 << n
    # Burnside agrees with averaging over an order-agnostic closure too
    elements = group_elements(gens, n)
    assert len(elements) == spec.order()
    acc = sum(1 << cycle_count(g) for g in elements)
    assert acc // len(elements) == len(naive)


def test_burnside_examples():
    assert burnside_count(4, parse_group_spec("(1 2 3 4)", 4)) == 6
    assert burnside_count(3, GroupSpec.trivial(3)) == 8


def test_burnside_two_element_reflection_group():
    # "(1 4)(2 3)" as a GroupSpec lists two independent generators (order 4,
    # 9 orbits); the two-element group {1, (14)(23)} is the k-th power of a
    # single 2k-cycle and averages (2^4 + 2^2) / 2 = 10.
    from scdforge.reflect import involution_group

    multi = parse_group_spec("(1 4)(2 3)", 4)
    assert multi.order() == 4
    assert burnside_count(4, multi) == 9
    assert burnside_count(4, multi) == len(naive_orbits(4, multi.generators()))

    two = involution_group(4, [(1, 4), (2, 3)])
    assert two.order() == 2
    assert burnside_count(4, two) == 10
    assert burnside_count(4, two) == len(naive_orbits(4, two.generators()))


def test_burnside_guard():
    lengths = [4, 5, 7, 8, 9, 11, 13]
    start = 1
    factors = []
    for length in lengths:
        factors.append(CycleFactor(tuple(range(start, start + length)), 1))
        start += length
    spec = GroupSpec(64, tuple(factors))
    assert spec.order() == math.prod(lengths) > 10**6
    with pytest.raises(ResourceLimitError):
        burnside_count(64, spec)


def test_orbit_rep_idempotent():
    spec = parse_group_spec("(1 2 3)(4 5 6 7)^2", 7)
    for a in range(0, 1 << 7, 3):
        rep = orbit_rep(a, spec)
        assert orbit_rep(rep, spec) == rep
        assert rep in orbit(a, spec).members


def test_quotient_profiles():
    from scdforge.reflect import involution_group

    assert [len(b) for b in quotient_poset(4, parse_group_spec("(1 2 3 4)", 4)).orbits_by_rank] == [1, 1, 2, 1, 1]
    assert [len(b) for b in quotient_poset(2, parse_group_spec("(1 2)", 2)).orbits_by_rank] == [1, 1, 1]
    assert [len(b) for b in quotient_poset(3, GroupSpec.trivial(3)).orbits_by_rank] == [1, 3, 3, 1]
    two = involution_group(4, [(1, 4), (2, 3)])
    assert [len(b) for b in quotient_poset(4, two).orbits_by_rank] == [1, 2, 4, 2, 1]


def test_quotient_leq_against_naive():
    spec = parse_group_spec("(1 2 3 4)^2 (5 6)", 6)
    poset = quotient_poset(6, spec)
    reps = list(poset.elements())
    for a in reps:
        orb_a = poset.orbit_of(a).members
        for b in reps:
            orb_b = poset.orbit_of(b).members
            naive = any(x | y == y for x in orb_a for y in orb_b)
            assert poset.leq(a, b) == naive


@pytest.mark.parametrize(
    "n, text",
    [
        (4, "(1 2 3 4)"),
        (6, "(1 2 3 4)^2 (5 6)"),
        (7, "(1 2 3)(4 5 6 7)^2"),
        (8, "(1 3 5 7)(2 4 6 8)"),
        (9, "(1 2 3 4 5)(6 7 8)"),
    ],
)
def test_quotient_profiles_are_symmetric_and_unimodal(n, text):
    from scdforge.verify import rank_profile

    profile = rank_profile(quotient_poset(n, parse_group_spec(text, n)))
    assert profile.symmetric
    assert profile.unimodal


def test_quotient_covers_are_adjacent_comparables():
    poset = quotient_poset(4, parse_group_spec("(1 2 3 4)", 4))
    covers = set(poset.covers())
    assert (mask_of([1]), mask_of([1, 2])) in covers
    assert (mask_of([1]), mask_of([1, 3])) in covers
    for lower, upper in covers:
        assert poset.rank(upper) == poset.rank(lower) + 1
        assert poset.leq(lower, upper)


def test_quotient_guard():
    with pytest.raises(ResourceLimitError):
        quotient_poset(23, GroupSpec.trivial(23))


def test_normalize_examples():
    norm = normalize_cycle_power(CycleFactor((3, 7, 5), 1))
    assert norm.relabel == {3: 1, 7: 2, 5: 3}
    assert (norm.power, norm.length) == (1, 3)

    norm = normalize_cycle_power(CycleFactor((1, 2, 3, 4, 5, 6), 4))
    assert norm.power == 2

    norm = normalize_cycle_power(CycleFactor((1, 2), 2))
    assert norm.power == norm.length == 2


def test_normalized_power_generates_same_subgroup():
    gen = perm_from_cycle_power((1, 2, 3, 4, 5, 6), 4, 6)
    norm = perm_from_cycle_power((1, 2, 3, 4, 5, 6), 2, 6)
    assert set(group_elements([gen], 6)) == set(group_elements([norm], 6))


def test_factorize_examples():
    split = factorize(5, parse_group_spec("(1 2)(3 4 5)", 5))
    assert split.fixed == 0
    assert [f.support for f in split.factors] == [mask_of([1, 2]), mask_of([3, 4, 5])]

    split = factorize(6, parse_group_spec("(1 2 3 4)^2", 6))
    assert split.fixed == mask_of([5, 6])
    assert len(split.factors) == 1
    assert split.factors[0].power == 2

    split = factorize(4, parse_group_spec("(1 2)^2", 4))
    assert split.fixed == mask_of([1, 2, 3, 4])
    assert split.factors == ()


@pytest.mark.parametrize(
    "n, text",
    [
        (5, "(1 2)(3 4 5)"),
        (6, "(1 2 3 4)^2"),
        (9, "(1 2 3 4 5)(6 7 8)"),
        (10, "(2 4 6)(7 8)(9 10)^2"),
    ],
)
def test_block_split_is_an_order_isomorphism(n, text):
    """Splitting an orbit into its fixed part and per-block orbits is a
    bijection that preserves comparability in both directions."""
    from scdforge.prune import cyclic_rep

    spec = parse_group_spec(text, n)
    split = factorize(n, spec)
    whole = quotient_poset(n, spec)

    def project(rep):
        parts = [rep & split.fixed]
        for f in split.factors:
            local = 0
            for element, pos in f.relabel.items():
                if rep >> (element - 1) & 1:
                    local |= 1 << (pos - 1)
            parts.append(cyclic_rep(local, f.length, f.power))
        return tuple(parts)

    reps = list(whole.elements())
    images = [project(r) for r in reps]
    assert len(set(images)) == len(reps)

    locals_posets = [
        quotient_poset(f.length, parse_group_spec(
            "(" + " ".join(str(i) for i in range(1, f.length + 1)) + f")^{f.power}",
            f.length,
        ))
        for f in split.factors
    ]
    for ra, ia in zip(reps, images):
        for rb, ib in zip(reps, images):
            componentwise = (ia[0] | ib[0] == ib[0]) and all(
                lp.leq(xa, xb) for lp, xa, xb in zip(locals_posets, ia[1:], ib[1:])
            )
            assert whole.leq(ra, rb) == componentwise, (ra, rb)
