import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.action import GAction
from src.core.algebra import (
    ArtinQuotient,
    GorensteinVerdict,
    hilbert_series_string,
    invariant_quotient,
    quotient,
    socle_character,
)
from src.core.field import FieldSpec
from src.core.harness import zoo_group
from src.core.invsys import GradedIdeal, build_inverse_system, ideal_from_generators, random_functional
from src.core.linalg import MatrixK, Subspace, kernel
from src.core.polyring import PolyRing
from src.utils.error_handler import DegenerateQuotientError, NonInvariantIdealError


@pytest.fixture
def quotient34(alpha):
    return quotient(build_inverse_system(alpha))


@pytest.fixture
def quotient35(phi35):
    return quotient(build_inverse_system(phi35))


def test_hilbert_functions(quotient34, quotient35):
    assert quotient34.hilbert == (1, 2, 2, 1)
    assert quotient35.hilbert == (1, 1, 1, 1)
    assert quotient34.total_dim() == 6
    assert quotient34.hilbert_series_string() == "1+2z+2z^2+z^3"
    assert hilbert_series_string([1, 0, 3]) == "1+3z^2"
    assert hilbert_series_string([]) == "0"


def test_reduce(quotient34, ring2):
    x3 = ring2.monomial((3, 0))
    x2y = ring2.monomial((2, 1))
    assert quotient34.reduce(x3) == quotient34.reduce(x2y) == (1,)
    assert all(c == 0 for c in quotient34.reduce(ring2.monomial((0, 2))))
    assert any(c != 0 for c in quotient34.reduce(ring2.monomial((2, 0))))
    assert quotient34.reduce(ring2.monomial((4, 0))) == ()


def test_multiply(quotient35):
    assert quotient35.multiply(1, (1,), 1, (1,)) == (1,)
    assert quotient35.multiply(2, (1,), 1, (1,)) == (1,)
    assert quotient35.multiply(2, (1,), 2, (1,)) == ()


def test_gorenstein_quotients(quotient34, quotient35):
    for q in (quotient34, quotient35):
        verdict = q.gorenstein_verdict()
        assert verdict.is_gorenstein
        assert verdict.socle_degree == 3
        assert verdict.a_invariant == 3
        assert verdict.hilbert_is_symmetric()
    socle = quotient35.socle()
    assert [s.dim for s in socle] == [0, 0, 0, 1]


def test_non_gorenstein_quotient(ring2):
    x, y = ring2.variable(0), ring2.variable(1)
    q = quotient(ideal_from_generators(ring2, [x * x, x * y, y * y], 2))
    assert q.hilbert == (1, 2, 0)
    verdict = q.gorenstein_verdict()
    assert not verdict.is_gorenstein
    assert verdict.socle_dims == (0, 2, 0)
    assert verdict.socle_degree == 1
    assert verdict.a_invariant == 1


def test_top_zero_quotient(ring2, pm_action):
    ideal = GradedIdeal(ring2, 0, (Subspace.zero(ring2.field, 1),))
    q = quotient(ideal)
    assert q.gorenstein_verdict().to_dict() == {
        "hilbert": [1],
        "gorenstein": True,
        "socle_degree": 0,
        "a_invariant": 0,
    }
    bq = invariant_quotient(q, pm_action)
    assert bq.dims == (1,)
    assert bq.gorenstein_verdict().is_gorenstein


def test_degenerate_quotient(ring2):
    with pytest.raises(DegenerateQuotientError):
        ArtinQuotient(GradedIdeal(ring2, 0, (Subspace.full(ring2.field, 1),)))


def test_invariant_quotient_of_alpha(quotient34, pm_action):
    bq = invariant_quotient(quotient34, pm_action)
    assert bq.dims == (1, 0, 2, 0)
    verdict = bq.gorenstein_verdict()
    assert not verdict.is_gorenstein
    assert verdict.socle_dims == (0, 0, 2, 0)
    assert verdict.to_dict("invariant_dims")["invariant_dims"] == [1, 0, 2, 0]
    assert bq.induced_fixed_dims() == (1, 0, 2, 0)
    assert bq.induced_fixed_dims_match()


def test_invariant_quotient_of_monomial_functional(quotient35, pm_action):
    verdict = invariant_quotient(quotient35, pm_action).gorenstein_verdict()
    assert verdict.is_gorenstein
    assert verdict.hilbert == (1, 0, 1, 0)
    assert verdict.socle_degree == 2
    assert verdict.a_invariant == 2


def test_non_invariant_ideal_rejected(ring2, cyclic3_action):
    q = quotient(ideal_from_generators(ring2, [ring2.variable(0)], 2))
    with pytest.raises(NonInvariantIdealError):
        invariant_quotient(q, cyclic3_action)


def test_socle_character(quotient34, pm_action, cyclic3_action, ring2):
    chi = socle_character(quotient34, pm_action)
    assert not chi.is_trivial()
    assert chi.value(pm_action.group.generators[0]) == -1
    phi = cyclic3_action.lift_functional(2, [1])
    assert socle_character(quotient(build_inverse_system(phi)), cyclic3_action).is_trivial()
    x, y = ring2.variable(0), ring2.variable(1)
    with pytest.raises(DegenerateQuotientError):
        socle_character(quotient(ideal_from_generators(ring2, [x * x, x * y, y * y], 2)), pm_action)


def test_verdict_from_dims():
    v = GorensteinVerdict.from_dims([1, 2, 1], [0, 0, 1])
    assert v.is_gorenstein and v.socle_degree == 2 and v.hilbert_is_symmetric()
    w = GorensteinVerdict.from_dims([1, 2, 0, 0], [0, 1, 0, 0])
    assert w.a_invariant == 1 and not w.hilbert_is_symmetric()


def brute_force_socle_dims(q):
    """全ての正次数単項式との積が 0 になる元の次元"""
    ring = q.ring
    k = q.field
    dims = []
    for d in range(q.top + 1):
        h = q.hilbert[d]
        if h == 0:
            dims.append(0)
            continue
        blocks = []
        for e in range(1, q.top - d + 1):
            for mono in ring.basis(e):
                mu = ring.monomial(mono)
                columns = [q.reduce(q.lift(d, unit) * mu) for unit in MatrixK.identity(k, h).data]
                blocks.append(MatrixK.from_columns(k, columns, q.hilbert[d + e]))
        if not blocks:
            dims.append(h)
            continue
        dims.append(kernel(MatrixK.vstack(k, blocks, h)).dim)
    return dims


def _field(field_id):
    return FieldSpec.rationals() if field_id == "Q" else FieldSpec.prime(field_id)


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(["Q", 2, 3, 5]),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=0, max_value=2 ** 32 - 1),
)
def test_inverse_system_quotients_are_gorenstein(field_id, n, m, seed):
    ring = PolyRing(_field(field_id), n)
    phi = random_functional(ring, m, np.random.default_rng(seed))
    q = quotient(build_inverse_system(phi))
    verdict = q.gorenstein_verdict()
    assert verdict.is_gorenstein
    assert verdict.socle_degree == m == verdict.a_invariant
    assert verdict.hilbert_is_symmetric()
    assert brute_force_socle_dims(q) == list(verdict.socle_dims)


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from(["Q", 3]),
    st.integers(min_value=2, max_value=3),
    st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)), min_size=1, max_size=3),
    st.integers(min_value=1, max_value=3),
)
def test_socle_matches_brute_force(field_id, n, monomials, top):
    ring = PolyRing(_field(field_id), n)
    gens = []
    for mono in monomials:
        exps = tuple(mono[:n])
        if sum(exps) == 0:
            continue
        gens.append(ring.monomial(exps))
    q = quotient(ideal_from_generators(ring, gens, top))
    assert brute_force_socle_dims(q) == [s.dim for s in q.socle()]


@pytest.mark.parametrize("name,field_json,degree", [
    ("cyclic3", "Q", 2),
    ("cyclic3", "Q", 3),
    ("a3_perm", "Q", 3),
    ("cyclic3", {"Fp": 5}, 4),
])
def test_invariant_socle_matches_brute_force(name, field_json, degree):
    group = zoo_group(name, FieldSpec.from_json(field_json))
    action = GAction(group)
    rng = np.random.default_rng(7)
    fixed = action.fixed_subspace(degree)
    phi = action.lift_functional(degree, [int(x) for x in rng.integers(1, 3, size=fixed.dim)])
    q = quotient(build_inverse_system(phi))
    bq = invariant_quotient(q, action)
    k = q.field
    for d in range(q.top + 1):
        piece = bq.pieces[d]
        expected = []
        for u in piece.basis:
            annihilated = all(
                all(c == 0 for c in q.reduce(q.lift(d, u) * q.lift(e, w)))
                for e in range(1, q.top - d + 1)
                for w in bq.pieces[e].basis
            )
            if annihilated:
                expected.append(u)
        assert Subspace.span(k, piece.ambient_dim, expected).is_subspace_of(bq.socle()[d])
        for u in bq.socle()[d].basis:
            assert piece.contains(u)
            for e in range(1, q.top - d + 1):
                for w in bq.pieces[e].basis:
                    assert all(c == 0 for c in q.reduce(q.lift(d, u) * q.lift(e, w)))
    assert bq.gorenstein_verdict().is_gorenstein
    assert bq.gorenstein_verdict().a_invariant == q.gorenstein_verdict().a_invariant
