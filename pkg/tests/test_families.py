import random

import pytest

from abext.extensions import GroupSet
from abext.families import (A1, A2, A3P, B3P, PA4P, PB4P, BUILTIN_FAMILIES,
                            EVEN, FREE, Family, FamilyPattern, Slot, TRIPLE,
                            enumerate_family, family_contains, family_product,
                            fixed, get_family, instantiate_pattern, matches,
                            render_pattern)
from abext.groups import TRIVIAL, parse_group

from oracles import all_abelian_groups_upto, naive_matches, random_group


def test_slot_validation():
    with pytest.raises(ValueError):
        Slot("fixed", 1)
    with pytest.raises(ValueError):
        Slot("free", 2)
    with pytest.raises(ValueError):
        Slot("weird")


def test_matches_examples():
    even_square = FamilyPattern((EVEN, fixed(2), fixed(2)))
    assert matches(parse_group("Z/10 x Z/2^2"), even_square)
    quintic = parse_group("Z/4^5")
    assert all(not matches(quintic, pat) for pat in PA4P.patterns)
    assert matches(parse_group("Z/4^4 x Z/2^2"), PA4P.patterns[7])


def test_matches_requires_all_parts_consumed():
    row = FamilyPattern((FREE, FREE))
    assert matches(parse_group("Z/6 x Z/4"), row)
    assert not matches(parse_group("Z/2 x Z/2 x Z/2"), row)
    assert matches(TRIVIAL, row)
    assert not matches(parse_group("Z/9"), FamilyPattern((TRIPLE, fixed(3))))
    assert matches(parse_group("Z/9 x Z/3"), FamilyPattern((TRIPLE, fixed(3))))


def test_matches_cross_prime_slot_sharing():
    # a single Z/k slot carries one part of every prime at once
    row = FamilyPattern((FREE,))
    assert matches(parse_group("Z/6"), row)
    assert not matches(parse_group("Z/6 x Z/2"), row)


def test_family_contains_examples():
    assert family_contains(parse_group("Z/3^3"), A2)
    assert family_contains(parse_group("Z/3^6"), PA4P)
    assert family_contains(parse_group("Z/4^5"), PB4P)
    assert not family_contains(parse_group("Z/4^5"), PA4P)


def test_get_family():
    assert get_family("A1") is A1
    assert set(BUILTIN_FAMILIES) == {"A1", "A2", "A3p", "B3p", "PA4p", "PB4p",
                                     "A2xA2", "A1xA3p", "B2xB2", "B1xB3p"}
    with pytest.raises(KeyError):
        get_family("A9")


def test_family_product_low_rank():
    prod = family_product(A1, A1)
    assert len(prod.patterns) == 3
    slot_sets = {p.slots for p in prod.patterns}
    assert (FREE, FREE) in slot_sets
    assert (FREE, fixed(2), fixed(2)) in slot_sets
    assert (fixed(2),) * 4 in slot_sets


def test_family_product_unordered_pairs():
    assert len(family_product(A2, A2).patterns) == 15


def test_family_product_lifts_exceptionals():
    spor = Family("S", (), GroupSet([parse_group("Z/4^4")]))
    prod = family_product(A1, spor)
    assert family_contains(parse_group("Z/5 x Z/4^4"), prod)
    assert family_contains(parse_group("Z/4^4"), prod)
    assert not family_contains(parse_group("Z/4^3 x Z/2"), prod)
    assert not prod.exceptional


def test_enumerate_a1():
    members = enumerate_family(A1, 8)
    assert {str(g) for g in members} == {
        "1", "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/7", "Z/8", "Z/2^2"}


def test_enumerate_a2():
    members = enumerate_family(A2, 4)
    assert {str(g) for g in members} == {"1", "Z/2", "Z/3", "Z/4", "Z/2^2"}


def test_enumerate_round_trip():
    for family in (A1, A2, A3P, B3P):
        for g in enumerate_family(family, 24):
            assert family_contains(g, family), (str(g), family.name)


def test_enumerate_monotone():
    small = enumerate_family(A3P, 16)
    large = enumerate_family(A3P, 48)
    assert small <= large


def test_enumerate_rejects_bad_bound():
    with pytest.raises(ValueError):
        enumerate_family(A1, 0)


def test_enumerate_resource_limit():
    from abext.extensions import ResourceLimitError
    with pytest.raises(ResourceLimitError):
        enumerate_family(A3P, 512, max_results=100)


def test_a2_without_low_products_is_two_sporadics():
    low = family_product(A1, A1)
    leftovers32 = {str(g) for g in enumerate_family(A2, 32)
                   if not family_contains(g, low)}
    assert leftovers32 == {"Z/4^2 x Z/2", "Z/3^3"}
    leftovers27 = {str(g) for g in enumerate_family(A2, 27)
                   if not family_contains(g, low)}
    assert leftovers27 == {"Z/3^3"}


def test_product_family_matches_three_dim_table():
    prod = family_product(A1, A2)
    assert enumerate_family(prod, 128) == enumerate_family(A3P, 128)


def test_two_dim_table_contains_low_products():
    low = family_product(A1, A1)
    for bound in (16, 64):
        assert enumerate_family(low, bound) <= enumerate_family(A2, bound)


def test_pattern_round_trip_all_rows():
    for family in (A1, A2, A3P, B3P, PA4P, PB4P):
        for pat in family.patterns:
            free_slots = sum(1 for s in pat.slots if s.kind != "fixed")
            for base in (1, 2, 3):
                values = [base + i for i in range(free_slots)]
                g = instantiate_pattern(pat, values)
                assert matches(g, pat), (family.name, pat, values)
                assert family_contains(g, family)


def test_matches_agrees_with_naive_search():
    rng = random.Random(41)
    patterns = [pat for fam in (A1, A2, A3P, B3P) for pat in fam.patterns]
    for _ in range(40):
        g = random_group(rng, primes=(2, 3), max_size=3)
        if g.order() > 150:
            continue
        for pat in patterns:
            assert matches(g, pat) == naive_matches(g, pat), (str(g), pat)


def test_enumeration_matches_membership_on_universe():
    # bounded enumeration and the pattern matcher must agree on every
    # abelian group in the window
    for family in (A1, A2, A3P, B3P, PA4P, PB4P):
        members = enumerate_family(family, 48)
        for g in all_abelian_groups_upto(48):
            assert (g in members) == family_contains(g, family), \
                (family.name, str(g))


def test_render_pattern():
    text, cons = render_pattern(A3P.patterns[1])
    assert text == "Z/2k x Z/4^2 x Z/2"
    assert cons == ("k >= 1",)
    text, cons = render_pattern(PA4P.patterns[0], ("n", "k", "l", "m"))
    assert text == "Z/n x Z/k x Z/l x Z/m"
    assert cons == ("n >= 1", "k >= 1", "l >= 1", "m >= 1")
    text, cons = render_pattern(B3P.patterns[8])
    assert text == "Z/8^2 x Z/4 x Z/2"
    assert cons == ()
