import pytest
from hypothesis import given, strategies as st

from oracles import EXAMPLE, translate_equivalent
from periodic_daha import (
    InvalidInput,
    InvalidShape,
    IsoVerdict,
    MismatchedRank,
    ShapePair,
    canonical_rep,
    classify,
    isomorphic,
    omega_shift,
)

POOL = sorted({s for n in range(2, 6) for k in range(1, 4) for s in classify(n, k)} | {EXAMPLE},
              key=lambda s: (s.n, s.m, s.ell, s.mu, s.lam))


def test_examples():
    assert isomorphic(EXAMPLE, EXAMPLE) == IsoVerdict(True, 0)
    assert isomorphic(EXAMPLE, omega_shift(EXAMPLE, 2)) == IsoVerdict(True, 2)
    single_row = ShapePair(7, 1, 4, (7,), (0,))
    assert isomorphic(EXAMPLE, single_row) == IsoVerdict(False, None)


def test_classify_examples():
    assert classify(2, 1) == [ShapePair(2, 1, 0, (2,), (0,))]
    two = classify(2, 2)
    assert {(s.m, s.ell) for s in two} == {(1, 1), (2, 0)}
    assert [s.lam for s in two] == [(2,), (3,), (1, 1)]
    assert classify(2, 3)[0].m == 1 and len(classify(2, 3)) == 6


def test_errors():
    with pytest.raises(MismatchedRank):
        isomorphic(EXAMPLE, ShapePair(2, 1, 0, (2,), (0,)))
    with pytest.raises(InvalidShape):
        isomorphic(EXAMPLE, ShapePair(7, 2, 3, (5, 3), (3, 3)))
    with pytest.raises(InvalidInput):
        classify(1, 1)
    with pytest.raises(InvalidInput):
        IsoVerdict(True, None)
    assert IsoVerdict(False).to_dict() == {"isomorphic": False, "shift": None}


@pytest.mark.parametrize("n,kappa", [(2, 3), (3, 3), (4, 2), (5, 3)])
def test_classes_are_distinct_canonical(n, kappa):
    reps = classify(n, kappa)
    assert reps == classify(n, kappa)
    for i, a in enumerate(reps):
        assert canonical_rep(a) == (a, 0)
        for b in reps[i + 1:]:
            assert not isomorphic(a, b).isomorphic


@given(st.sampled_from(POOL), st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_equivalence_relation(s, r1, r2, r3):
    a, b, c = (omega_shift(s, r) for r in (r1, r2, r3))
    ab, bc, ac = isomorphic(a, b), isomorphic(b, c), isomorphic(a, c)
    assert isomorphic(a, a) == IsoVerdict(True, 0)
    assert isomorphic(b, a).shift == -ab.shift
    assert ac.shift == ab.shift + bc.shift
    assert translate_equivalent(a, b, 20) == ab.shift


@given(st.sampled_from(POOL), st.sampled_from(POOL))
def test_verdict_matches_translation_oracle(a, b):
    if a.n != b.n:
        return
    verdict = isomorphic(a, b)
    oracle = translate_equivalent(a, b, 20)
    assert verdict.isomorphic == (oracle is not None)
    assert verdict.shift == oracle
