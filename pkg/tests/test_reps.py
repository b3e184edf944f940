from fractions import Fraction

import pytest

from liereg import linalg, reps, words
from liereg.linalg import CapError
from liereg.reps import RepError, RepSpec
from liereg.words import Alphabet, NcPoly


AB = Alphabet(("e1", "e2"))
MIXED = Alphabet(("e1", "d"), (words.NILPOTENT, words.DIAGONAL))


def chain12():
    return reps.make_chain(AB, (0, 1))


def test_chain_action_examples():
    rep = chain12()
    b0 = rep.basis_vector(0)
    # word e2.e1 acts as e2(e1(b0)) = b2
    assert reps.act_word(rep, (1, 0), b0) == rep.basis_vector(2)
    # word e1.e2 kills b0 since e2 b0 = 0
    assert linalg.is_zero_vec(reps.act_word(rep, (0, 1), b0))
    assert reps.act_word(rep, (), b0) == b0


def test_act_word_is_monoid_homomorphism():
    rep = reps.make_VNJ(AB, 3, (0, 1))
    v = tuple(Fraction(i + 1, 3) for i in range(rep.dim))
    for w1 in [(0,), (1, 0), (0, 0, 1)]:
        for w2 in [(1,), (0, 1)]:
            assert reps.act_word(rep, w1 + w2, v) == reps.act_word(
                rep, w1, reps.act_word(rep, w2, v)
            )


def test_act_poly_linear():
    rep = chain12()
    b0 = rep.basis_vector(0)
    x = NcPoly({(0, 1): 1, (1, 0): -1})
    # e1e2 kills b0, e2e1 sends it to b2
    assert reps.act_poly(rep, x, b0) == linalg.vec_scale(Fraction(-1), rep.basis_vector(2))
    assert linalg.is_zero_vec(reps.act_poly(rep, NcPoly.zero(), b0))
    assert reps.act_poly(rep, NcPoly.one(), b0) == b0


def test_dimension_mismatch_raises():
    rep = chain12()
    with pytest.raises(RepError):
        reps.act_word(rep, (0,), (1, 0))


def test_validate_integrable():
    rep = chain12()
    assert reps.validate_integrable(rep) == []
    bad = RepSpec(Alphabet(("e1",)), 1, {0: [[1]]})
    report = reps.validate_integrable(bad)
    assert len(report) == 1 and "nilpotent" in report[0]
    diag = RepSpec(MIXED, 2, {1: [[1, 0], [0, -1]]})
    assert reps.validate_integrable(diag) == []
    assert reps.eigenvalues(diag, 1) == [-1, 1]
    nondiag = RepSpec(MIXED, 2, {1: [[1, 1], [0, 1]]})
    assert any("diagonal" in v for v in reps.validate_integrable(nondiag))


def test_tensor_leibniz():
    r = chain12()
    t = reps.tensor(r, r)
    v = (Fraction(1), Fraction(2), Fraction(0))
    w = (Fraction(0), Fraction(1), Fraction(3))
    for e in (0, 1):
        lhs = reps.act_word(t, (e,), linalg.vec_kron(v, w))
        rhs = linalg.vec_add(
            linalg.vec_kron(reps.act_word(r, (e,), v), w),
            linalg.vec_kron(v, reps.act_word(r, (e,), w)),
        )
        assert lhs == rhs


def test_tensor_diagonal_adds_eigenvalues():
    r1 = RepSpec(MIXED, 1, {1: [[1]]})
    r2 = RepSpec(MIXED, 1, {1: [[2]]})
    t = reps.tensor(r1, r2)
    assert t.matrices[1] == ((3,),)


def test_dual_rep_transposes():
    rep = chain12()
    d = reps.dual_rep(rep)
    assert d.matrices[0] == linalg.transpose(rep.matrices[0])
    assert reps.dual_rep(d).matrices[0] == rep.matrices[0]


def test_submodule_generated():
    rep = chain12()
    assert len(reps.submodule_generated(rep, rep.basis_vector(0))) == 3
    assert reps.submodule_generated(rep, linalg.zero_vec(3)) == []
    assert len(reps.submodule_generated(rep, rep.basis_vector(2))) == 1


def test_submodule_closure_property():
    rep = reps.make_VNJ(AB, 2, (0, 1))
    basis = reps.submodule_generated(rep, rep.basis_vector(1))
    ech = linalg.Echelon()
    for b in basis:
        ech.add(b)
    for b in basis:
        for e in rep.alphabet.letters():
            assert ech.contains(linalg.mat_vec(rep.matrices[e], b))


def test_make_vnj_dimensions():
    assert reps.make_VNJ(AB, 1, (0,)).dim == 2
    assert reps.make_VNJ(AB, 0, (0,)).dim == 1
    assert reps.make_VNJ(AB, 2, (0, 1)).dim == 7


def test_make_vnj_cap():
    with pytest.raises(CapError):
        reps.make_VNJ(AB, 13, (0, 1))


def test_make_chain_validation():
    with pytest.raises(RepError):
        reps.make_chain(AB, (0, 0))
    with pytest.raises(RepError):
        reps.make_chain(AB, ())
    rep = reps.make_chain(AB, (0, 1, 0))
    assert rep.dim == 4
    assert reps.act_word(rep, (0, 1, 0), rep.basis_vector(0)) == rep.basis_vector(3)


def test_make_cyclic_pair_matrices():
    rep = reps.make_cyclic_pair(AB, 0, 1)
    b1, b2 = rep.basis_vector(0), rep.basis_vector(1)
    assert reps.act_word(rep, (0,), b2) == b1
    assert reps.act_word(rep, (1,), b1) == b2
    assert linalg.is_zero_vec(reps.act_word(rep, (0,), b1))
    assert reps.validate_integrable(rep) == []


def test_support():
    rep = chain12()
    assert reps.support(rep) == frozenset({0, 1})
    trivial = RepSpec(AB, 1, {})
    assert reps.support(trivial) == frozenset()
    assert reps.support(reps.make_VNJ(AB, 2, (0,))) == frozenset({0})
