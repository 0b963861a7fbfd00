import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.field import FieldSpec
from src.core.group import (
    Character,
    GMatrix,
    close,
    commutator_subgroup,
    enumerate_characters,
    enumerate_onedim_reps_oracle,
    group_from_literals,
    has_nontrivial_onedim_rep,
    is_special_linear,
    table_sufficient_condition,
)
from src.core.harness import is_realizable, zoo_group, zoo_names
from src.utils.error_handler import (
    CharacterError,
    CharacteristicDividesOrderError,
    ElementNotInGroupError,
    GroupClosureError,
    InvalidFieldError,
    NonFiniteFieldError,
    SingularMatrixError,
    TrivialGroupError,
)

S3_GENERATORS = [
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
]
ORACLE_PRIMES = [3, 5, 7, 11, 13]


def test_closure_orders(Q):
    assert group_from_literals(Q, [[[-1, 0], [0, -1]]]).order == 2
    assert group_from_literals(Q, [[[0, -1], [1, -1]]]).order == 3
    assert group_from_literals(Q, S3_GENERATORS).order == 6


def test_canonical_order_and_cayley(Q):
    g = group_from_literals(Q, S3_GENERATORS)
    assert g.elements[0].is_identity()
    keys = [e.sort_key() for e in g.elements[1:]]
    assert keys == sorted(keys)
    for i in range(g.order):
        for j in range(g.order):
            assert g.element(g.mul(i, j)) == g.element(i) @ g.element(j)
        assert g.mul(i, g.inverse_index(i)) == 0
    # 生成元の順序によらず同じ正準形になる
    assert group_from_literals(Q, list(reversed(S3_GENERATORS))).elements == g.elements


def test_closure_errors(Q, F5):
    with pytest.raises(TrivialGroupError, match="group must be non-trivial"):
        group_from_literals(Q, [[[1, 0], [0, 1]]])
    with pytest.raises(SingularMatrixError):
        group_from_literals(Q, [[[1, 1], [1, 1]]])
    with pytest.raises(GroupClosureError):
        group_from_literals(Q, [[[1, 1], [0, 1]]], cap=50)
    with pytest.raises(GroupClosureError):
        group_from_literals(Q, S3_GENERATORS, cap=5)
    with pytest.raises(CharacteristicDividesOrderError):
        group_from_literals(FieldSpec.prime(3), [[[0, -1], [1, -1]]])


def test_index_of(cyclic3, Q):
    sigma = cyclic3.generators[0]
    assert cyclic3.contains(sigma @ sigma)
    assert cyclic3.element_order(cyclic3.index_of(sigma)) == 3
    with pytest.raises(ElementNotInGroupError):
        cyclic3.index_of(GMatrix.from_literals(Q, [[0, 1], [1, 0]]))


def test_commutator_subgroups(Q, pm_identity, cyclic3):
    assert commutator_subgroup(pm_identity).order == 1
    assert commutator_subgroup(cyclic3).is_trivial()
    s3 = group_from_literals(Q, S3_GENERATORS)
    assert commutator_subgroup(s3).order == 3
    assert not s3.is_abelian()


@pytest.mark.parametrize("name,field_json,exists,prime,r", [
    ("pm_identity", "Q", True, 2, 2),
    ("cyclic3", "Q", False, None, 3),
    ("cyclic3", {"Fp": 7}, True, 3, 3),
    ("cyclic3", {"Fp": 5}, False, None, 3),
    ("s3_perm", "Q", True, 2, 2),
    ("a3_perm", "Q", False, None, 3),
    ("cyclic5", "Q", False, None, 5),
    ("cyclic5", {"Fp": 11}, True, 5, 5),
])
def test_onedim_reps(name, field_json, exists, prime, r):
    verdict = has_nontrivial_onedim_rep(zoo_group(name, FieldSpec.from_json(field_json)))
    assert verdict.to_dict() == {"exists": exists, "witness_prime": prime, "r": r}


def test_oracle_examples():
    assert len(enumerate_onedim_reps_oracle(zoo_group("cyclic3", FieldSpec.prime(7)))) == 3
    assert len(enumerate_onedim_reps_oracle(zoo_group("cyclic3", FieldSpec.prime(5)))) == 1
    only = enumerate_onedim_reps_oracle(zoo_group("cyclic3", FieldSpec.prime(2)))
    assert len(only) == 1 and only[0].is_trivial()


def test_oracle_errors(cyclic3):
    with pytest.raises(NonFiniteFieldError):
        enumerate_onedim_reps_oracle(cyclic3)
    with pytest.raises(InvalidFieldError):
        enumerate_onedim_reps_oracle(zoo_group("cyclic3", FieldSpec.prime(103)))


def test_oracle_on_s3():
    sign = enumerate_onedim_reps_oracle(group_from_literals(FieldSpec.prime(7), S3_GENERATORS))
    assert len(sign) == 2
    assert sorted(set(sign[1].values)) == [1, 6]


@pytest.mark.parametrize("q", ORACLE_PRIMES)
@pytest.mark.parametrize("name", zoo_names())
def test_oracle_matches_generator_search(name, q):
    k = FieldSpec.prime(q)
    if not is_realizable(name, k):
        pytest.skip(f"{name} is not realizable over F_{q}")
    group = zoo_group(name, k)
    brute = {c.values for c in enumerate_onedim_reps_oracle(group)}
    assert brute == {c.values for c in enumerate_characters(group)}


def test_oracle_ignores_the_presentation():
    k = FieldSpec.prime(7)
    transpositions = [
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    ]
    a = group_from_literals(k, S3_GENERATORS)
    b = group_from_literals(k, transpositions)
    assert a.elements == b.elements
    assert {c.values for c in enumerate_onedim_reps_oracle(a)} == {c.values for c in enumerate_onedim_reps_oracle(b)}


@pytest.mark.parametrize("name", zoo_names())
def test_commutator_subgroup_is_normal(name, Q):
    group = zoo_group(name, Q)
    derived = commutator_subgroup(group)
    assert group.order % derived.order == 0
    for g in group.elements:
        for h in derived.elements:
            assert derived.contains(g @ h @ g.inv())


def test_commutator_of_s3_is_normal(Q):
    group = group_from_literals(Q, S3_GENERATORS)
    derived = commutator_subgroup(group)
    assert derived.order == 3
    conjugates = {g @ h @ g.inv() for g in group.elements for h in derived.elements}
    assert conjugates == set(derived.elements)


@pytest.mark.parametrize("q", ORACLE_PRIMES)
@pytest.mark.parametrize("name", zoo_names())
def test_checker_agrees_with_oracle(name, q):
    k = FieldSpec.prime(q)
    if not is_realizable(name, k):
        pytest.skip(f"{name} is not realizable over F_{q}")
    group = zoo_group(name, k)
    characters = enumerate_onedim_reps_oracle(group)
    assert characters[0].is_trivial()
    assert has_nontrivial_onedim_rep(group).exists == (len(characters) > 1)


@pytest.mark.parametrize("field_json", ["Q", {"Fp": 2}, {"Fp": 5}, {"Fp": 7}, {"Fp": 11}, {"Fp": 13}])
@pytest.mark.parametrize("name", zoo_names())
def test_table_condition_is_sufficient(name, field_json):
    k = FieldSpec.from_json(field_json)
    if not is_realizable(name, k):
        pytest.skip("not realizable")
    group = zoo_group(name, k)
    if table_sufficient_condition(group):
        assert not has_nontrivial_onedim_rep(group).exists


@pytest.mark.parametrize("field_json", ["Q", {"Fp": 2}, {"Fp": 5}, {"Fp": 7}, {"Fp": 11}, {"Fp": 13}])
@pytest.mark.parametrize("name", zoo_names())
def test_hypothesis_forces_special_linear(name, field_json):
    k = FieldSpec.from_json(field_json)
    if not is_realizable(name, k):
        pytest.skip("not realizable")
    group = zoo_group(name, k)
    if not has_nontrivial_onedim_rep(group).exists:
        assert is_special_linear(group)
        assert all(g.determinant() == 1 for g in group.elements)


def test_characters(pm_identity, eta):
    assert eta.value(pm_identity.generators[0]) == -1
    assert not eta.is_trivial()
    assert eta.to_json() == {"generator_values": [-1]}
    chars = enumerate_characters(pm_identity)
    assert [c.is_trivial() for c in chars] == [True, False]
    with pytest.raises(CharacterError):
        Character.from_generator_values(pm_identity, [2])
    with pytest.raises(CharacterError):
        Character.from_generator_values(pm_identity, [1, 1])
    with pytest.raises(CharacterError):
        Character(pm_identity, (1, 1, 1))


def test_character_must_respect_relations(cyclic3):
    # σ^3 = 1 なので η(σ) = -1 は準同型にならない
    with pytest.raises(CharacterError):
        Character.from_generator_values(cyclic3, [-1])


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(zoo_names()),
    st.sampled_from(["Q", 5, 7, 11, 13]),
    st.data(),
)
def test_group_axioms(name, field_id, data):
    k = FieldSpec.rationals() if field_id == "Q" else FieldSpec.prime(field_id)
    if not is_realizable(name, k):
        return
    g = zoo_group(name, k)
    i = data.draw(st.integers(min_value=0, max_value=g.order - 1))
    j = data.draw(st.integers(min_value=0, max_value=g.order - 1))
    l = data.draw(st.integers(min_value=0, max_value=g.order - 1))
    assert g.mul(g.mul(i, j), l) == g.mul(i, g.mul(j, l))
    assert g.mul(0, i) == i == g.mul(i, 0)
    assert g.order % g.element_order(i) == 0
    for chi in enumerate_characters(g):
        assert chi.values[g.mul(i, j)] == k.mul(chi.values[i], chi.values[j])


def test_close_rejects_mixed_generators(Q, F5):
    from src.utils.error_handler import DimensionMismatchError
    with pytest.raises(DimensionMismatchError):
        close([GMatrix.from_literals(Q, [[-1]]), GMatrix.from_literals(F5, [[-1]])])
