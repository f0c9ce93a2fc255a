import math
import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _brute import brute_gaps, brute_members
from concentration2 import (
    ElementOutOfRange,
    EmptyInput,
    GcdNotOne,
    NoFrobenius,
    NotASemigroup,
    NotMinimalGenerator,
    NumericalSemigroup,
    add_frobenius,
    concentration_of,
    contains,
    elementary_from_upper_set,
    from_gaps,
    from_generators,
    is_concentration_two,
    is_elementary,
    next_element,
    ordinary,
    remove_element,
)
from concentration2.semigroup import parse_generators

gen = from_generators

coprime_gens = (
    st.lists(st.integers(2, 17), min_size=1, max_size=5)
    .map(lambda xs: sorted(set(xs)))
    .filter(lambda xs: math.gcd(*xs) == 1)
)


# -- from_generators -----------------------------------------------------------

def test_from_generators_example_concentration_two():
    assert gen([5, 7, 9]).concentration == 2


def test_from_generators_one_is_full_monoid():
    N = gen([1])
    assert N.gaps == ()
    assert N.frobenius == -1
    assert N.multiplicity == 1
    assert N.genus == 0
    assert N.concentration == 1
    assert N.n_count == 0
    assert N.minimal_generators == (1,)


def test_from_generators_rejects_gcd():
    with pytest.raises(GcdNotOne):
        gen([4, 6])


@pytest.mark.parametrize("bad", [[], [0, 3]])
def test_from_generators_rejects_empty_or_zero(bad):
    with pytest.raises((EmptyInput, ElementOutOfRange)):
        gen(bad)


def test_frobenius_of_3_5():
    assert gen([3, 5]).frobenius == 7


def test_generators_are_normalised():
    assert gen([9, 5, 7, 7, 14]) == gen([5, 7, 9])
    assert gen([5, 7, 9]).minimal_generators == (5, 7, 9)
    assert gen([3, 4, 5, 7, 8]).minimal_generators == (3, 4, 5)


@given(coprime_gens)
def test_gap_set_matches_dynamic_programming(gens):
    assert list(gen(gens).gaps) == brute_gaps(gens)


@given(coprime_gens)
def test_msg_round_trip_and_minimality(gens):
    S = gen(gens)
    msg = S.minimal_generators
    assert gen(msg) == S
    assert set(msg) <= set(gens)
    positive = [x for x in S.elements_up_to(max(msg)) if x > 0]
    for x in msg:
        assert not any(x - a in S for a in positive if 0 < a < x)


# -- ordinary ------------------------------------------------------------------

def test_ordinary_three():
    assert ordinary(3) == gen([3, 4, 5])


def test_ordinary_one_is_full_monoid():
    assert ordinary(1) == gen([1])


def test_ordinary_four_msg():
    D = ordinary(4)
    assert D.minimal_generators == (4, 5, 6, 7)
    assert D.gaps == (1, 2, 3)
    assert D.concentration == 1


def test_ordinary_rejects_nonpositive():
    with pytest.raises(ElementOutOfRange):
        ordinary(0)


# -- membership and next -------------------------------------------------------

def test_contains_examples():
    assert not contains(gen([3, 5]), 7)
    assert contains(gen([3, 5]), 0)
    assert contains(gen([1]), 0)
    # brute-force membership table of <5,7,9> up to 20
    table = brute_members([5, 7, 9], 20)
    assert 11 not in table
    assert not contains(gen([5, 7, 9]), 11)
    assert [x for x in range(21) if contains(gen([5, 7, 9]), x)] == sorted(table)
    assert not contains(gen([5, 7, 9]), -1)


def test_next_element_examples():
    table = sorted(brute_members([5, 7, 9], 30))
    assert table[table.index(5) + 1] == 7
    assert next_element(gen([5, 7, 9]), 5) == 7
    assert next_element(ordinary(4), 4) == 5
    assert sorted(brute_members([3, 5], 10)) == [0, 3, 5, 6, 8, 9, 10]
    assert next_element(gen([3, 5]), 6) == 8
    assert next_element(gen([3, 5]), 7) == 8
    assert next_element(gen([3, 5]), -4) == 0


# -- concentration ---------------------------------------------------------------

def _concentration_by_definition(gens):
    members = sorted(brute_members(gens, 4 * max(gens) * min(gens)))
    # every jump past the Frobenius number is 1; the window is far beyond it
    return max((b - a for a, b in zip(members[1:], members[2:])), default=1)


def test_concentration_examples():
    assert concentration_of(gen([5, 7, 9])) == 2
    assert concentration_of(ordinary(7)) == 1
    assert sorted(brute_members([3, 7, 8], 9)) == [0, 3, 6, 7, 8, 9]
    assert concentration_of(gen([3, 7, 8])) == 3


@given(coprime_gens)
def test_concentration_matches_definition(gens):
    assert gen(gens).concentration == _concentration_by_definition(gens)


def test_is_concentration_two_examples():
    assert is_concentration_two(gen([5, 7, 9]))
    assert not is_concentration_two(ordinary(5))
    assert not is_concentration_two(gen([3, 7, 8]))
    assert not is_concentration_two(gen([1]))


def _gap_successor_rule(S):
    m = S.multiplicity
    return all(h + 1 in S for h in S.gaps if h > m)


def test_three_characterisations_agree(universe):
    checked = 0
    for e in universe.entries:
        if e.multiplicity > 12 or e.genus > 14:
            continue
        S = e.semigroup
        by_msg = is_concentration_two(S)
        assert by_msg == (S.concentration == 2) == (e.concentration == 2)
        if not S.is_half_line():
            assert by_msg == _gap_successor_rule(S)
        checked += 1
    assert checked > 4000


# -- remove / add ------------------------------------------------------------------

def test_remove_element_examples():
    assert remove_element(gen([3, 4, 5]), 4) == gen([3, 5, 7])
    assert remove_element(gen([4, 6, 7, 9]), 7) == gen([4, 6, 9, 11])
    with pytest.raises(NotMinimalGenerator):
        remove_element(gen([3, 4, 5]), 7)


def test_remove_element_raises_genus():
    S = gen([5, 7, 9])
    for x in S.minimal_generators:
        assert remove_element(S, x).genus == S.genus + 1


def test_add_frobenius_examples():
    assert add_frobenius(gen([3, 5])) == gen([3, 5, 7])
    assert add_frobenius(gen([3, 5, 7])) == gen([3, 4, 5])
    for m in range(2, 9):
        assert add_frobenius(ordinary(m)) == ordinary(m - 1)
    with pytest.raises(NoFrobenius):
        add_frobenius(gen([1]))


def test_add_frobenius_keeps_multiplicity_and_low_concentration(universe):
    for e in universe.entries:
        if e.concentration == 2:
            S = e.semigroup
            T = add_frobenius(S)
            assert T.multiplicity == S.multiplicity
            assert T.concentration <= 2
            assert T.genus == S.genus - 1


# -- elementary ------------------------------------------------------------------

def test_is_elementary_examples():
    assert is_elementary(gen([4, 6, 9, 11]))
    assert gen([3, 5]).frobenius == 7
    assert not is_elementary(gen([3, 5]))
    for m in range(1, 8):
        assert is_elementary(ordinary(m))


def test_elementary_from_upper_set_examples():
    assert elementary_from_upper_set(4, {5, 6, 7}) == ordinary(4)
    assert elementary_from_upper_set(4, {6, 7}) == gen([4, 6, 7, 9])
    S = elementary_from_upper_set(4, set())
    assert sorted(brute_members([4, 9, 10, 11], 12)) == [0, 4, 8, 9, 10, 11, 12]
    assert S.elements_up_to(12) == [0, 4, 8, 9, 10, 11, 12]
    assert S == gen([4, 8, 9, 10, 11])
    assert S.minimal_generators == (4, 9, 10, 11)
    with pytest.raises(ElementOutOfRange):
        elementary_from_upper_set(4, {8})


def test_every_elementary_semigroup_has_upper_set_form(universe):
    for e in universe.entries:
        m, f = e.multiplicity, e.frobenius
        if m >= 2 and f < 2 * m:
            upper = {a for a in range(m + 1, 2 * m) if a not in e.gaps}
            assert elementary_from_upper_set(m, upper) == e.semigroup


# -- invariants on the oracle universe ---------------------------------------------

def test_invariants_hold_on_universe(universe):
    for e in universe.entries:
        S = e.semigroup
        assert S.gaps == tuple(sorted(e.gaps))
        assert S.frobenius == e.frobenius
        assert S.multiplicity == e.multiplicity
        assert S.genus == e.genus
        assert S.minimal_generators == e.msg
        assert S.concentration == e.concentration
        if S.frobenius >= 0:
            assert S.n_count + S.genus == S.frobenius + 1
            assert S.frobenius in S.gaps
        assert gen(S.minimal_generators) == S


def test_remove_then_add_is_identity_above_frobenius(universe):
    for e in universe.entries[:3000]:
        S = e.semigroup
        for x in S.minimal_generators:
            if x > S.frobenius:
                T = remove_element(S, x)
                assert T.frobenius == x
                assert add_frobenius(T) == S


# -- construction from gaps, value semantics ----------------------------------------

def test_from_gaps_validates_closure():
    assert from_gaps([1, 2, 4]) == gen([3, 5, 7])
    with pytest.raises(NotASemigroup):
        from_gaps([1, 2, 3, 5, 6, 7, 8])  # 4 + 4 = 8
    with pytest.raises(NotASemigroup):
        from_gaps([1, 3, 4])  # 2 + 2 = 4
    with pytest.raises(NotASemigroup):
        from_gaps([0, 1])


def test_values_are_immutable_hashable_and_picklable():
    S = gen([5, 7, 9])
    with pytest.raises(AttributeError):
        S.foo = 1
    assert {S, gen([9, 7, 5])} == {S}
    assert pickle.loads(pickle.dumps(S)) == S
    assert pickle.loads(pickle.dumps(S)).minimal_generators == (5, 7, 9)


def test_canonical_order_is_lexicographic_on_gaps():
    items = [gen([3, 5]), gen([2, 3]), gen([3, 4]), gen([1])]
    assert [S.gaps for S in sorted(items)] == sorted(S.gaps for S in items)


def test_str_and_json_form():
    S = gen([5, 7, 9])
    assert str(S) == "⟨5,7,9⟩"
    assert S.to_dict() == {
        "msg": [5, 7, 9],
        "gaps": [1, 2, 3, 4, 6, 8, 11, 13],
        "multiplicity": 5,
        "frobenius": 13,
        "genus": 8,
        "embedding_dimension": 3,
        "concentration": 2,
    }


@pytest.mark.parametrize("text", ["5,7,9", "⟨5,7,9⟩", "<5, 7, 9>", " 5 7 9 "])
def test_parse_generators(text):
    assert parse_generators(text) == [5, 7, 9]


@settings(max_examples=50)
@given(coprime_gens)
def test_direct_constructor_agrees_with_from_gaps(gens):
    S = gen(gens)
    assert NumericalSemigroup(S.gaps) == from_gaps(S.gaps) == S
