from fractions import Fraction

import pytest

from liereg import duals, grp, linalg, reps, words
from liereg.duals import MatrixCoefficient
from liereg.grp import GroupWord, RegularFunction, exp_factor, torus_factor
from liereg.words import Alphabet, NcPoly


AB = Alphabet(("e1", "e2"))
MIXED = Alphabet(("e1", "d"), (words.NILPOTENT, words.DIAGONAL))


def test_factor_validation():
    with pytest.raises(ValueError):
        grp.OneParamFactor(0, "bogus", 1)
    with pytest.raises(ValueError):
        torus_factor(0, 0)
    assert exp_factor(0, 0).param == 0  # exp of zero is allowed (identity)


def test_group_word_reduction():
    g = GroupWord([exp_factor(0, 1), exp_factor(1, 2)])
    assert g.is_reduced()
    assert not GroupWord([]).is_reduced()
    assert not GroupWord([exp_factor(0, 1), exp_factor(0, 1)]).is_reduced()
    assert not GroupWord([exp_factor(0, 0)]).is_reduced()


def test_act_group_chain():
    rep = reps.make_chain(AB, (0, 1))
    b0 = rep.basis_vector(0)
    t1, t2 = Fraction(2), Fraction(3)
    g = GroupWord([exp_factor(1, t2), exp_factor(0, t1)])  # exp(t2 e2) exp(t1 e1)
    assert grp.act_group(rep, g, b0) == (Fraction(1), t1, t1 * t2)
    assert grp.act_group(rep, GroupWord([]), b0) == b0


def test_act_group_torus():
    rep = reps.RepSpec(MIXED, 1, {1: [[2]]})
    out = grp.act_group(rep, GroupWord([torus_factor(1, 3)]), (Fraction(1),))
    assert out == (Fraction(9),)


def test_one_parameter_homomorphism():
    rep = reps.make_VNJ(AB, 3, (0,))
    v = tuple(Fraction(1) for _ in range(rep.dim))
    s, t = Fraction(1, 2), Fraction(2, 3)
    lhs = grp.act_group(rep, GroupWord([exp_factor(0, s + t)]), v)
    rhs = grp.act_group(
        rep, GroupWord([exp_factor(0, s), exp_factor(0, t)]), v
    )
    assert lhs == rhs


def test_eval_regular_chain_theta():
    rep = reps.make_chain(AB, (0, 1))
    f = RegularFunction(rep, (0, 0, 1), rep.basis_vector(0))
    g = GroupWord([exp_factor(1, 1), exp_factor(0, 1)])
    assert f(g) == 1
    assert f(GroupWord([])) == 0


def test_phi_xi_round_trip():
    rep = reps.make_cyclic_pair(AB, 0, 1)
    f = RegularFunction(rep, (1, 1), (1, 0))
    h = grp.phi_map(f)
    assert isinstance(h, MatrixCoefficient)
    f2 = grp.xi_map(h)
    for g in [
        GroupWord([exp_factor(0, 2)]),
        GroupWord([exp_factor(1, 3), exp_factor(0, Fraction(1, 2))]),
    ]:
        assert f2(g) == f(g)


def test_xi_on_finite_functional():
    f = grp.xi_map(duals.phi((0,)), AB)
    assert f(GroupWord([exp_factor(0, Fraction(5, 7))])) == Fraction(5, 7)
    one = grp.xi_map(duals.phi(()), AB)
    assert one(GroupWord([exp_factor(0, 3)])) == 1


def test_taylor_expand_examples():
    poly = grp.taylor_expand(duals.phi((0, 1)), (0, 1), AB)
    assert poly.coeffs == {(1, 1): Fraction(1)}
    const = grp.taylor_expand(duals.phi(()), (0,), AB)
    assert const.coeffs == {(0,): Fraction(1)}
    assert const(Fraction(9)) == 1


def test_taylor_matches_group_evaluation():
    rep = reps.make_cyclic_pair(AB, 0, 1)
    h = MatrixCoefficient(rep, (1, 1), (1, 0))
    letters = (1, 0, 1)
    poly = grp.taylor_expand(h, letters)
    f = grp.xi_map(h)
    for t1, t2, t3 in [(1, 2, 3), (Fraction(1, 2), -1, Fraction(2, 5)), (0, 4, -2)]:
        g = GroupWord(
            [exp_factor(letters[0], t1), exp_factor(letters[1], t2), exp_factor(letters[2], t3)]
        )
        assert poly(t1, t2, t3) == f(g)


def test_taylor_rejects_diagonalizable():
    rep = reps.RepSpec(MIXED, 1, {1: [[2]]})
    h = MatrixCoefficient(rep, (1,), (1,))
    with pytest.raises(ValueError):
        grp.taylor_expand(h, (1,))


def test_f_w_examples():
    a, b = Fraction(2), Fraction(5)
    g = GroupWord([exp_factor(0, a), exp_factor(1, b)])
    assert grp.f_w((0, 1), g) == a * b
    assert grp.f_w((), g) == 1
    assert grp.f_w((0, 0), GroupWord([exp_factor(0, a)])) == a * a / 2
    assert grp.f_w((1, 0), g) == 0  # e2 cannot precede e1 in this factorization
    with pytest.raises(ValueError):
        grp.f_w((0,), GroupWord([torus_factor(0, 2)]))


def test_f_w_multiplicativity_via_shuffles():
    g = GroupWord([exp_factor(0, 3), exp_factor(1, Fraction(1, 2)), exp_factor(0, -2)])
    w1, w2 = (0, 1), (0,)
    lhs = grp.f_w(w1, g) * grp.f_w(w2, g)
    rhs = sum(
        (Fraction(mult) * grp.f_w(w, g) for w, mult in words.shuffles(w1, w2).items()),
        Fraction(0),
    )
    assert lhs == rhs


def test_derivations():
    rep = reps.make_chain(AB, (0, 1))
    f = RegularFunction(rep, (0, 0, 1), rep.basis_vector(0))
    df = grp.derive_right(0, f)  # v-slot becomes b1
    assert df(GroupWord([exp_factor(1, 1)])) == 1
    zero_letter_rep = reps.RepSpec(AB, 2, {0: [[0, 1], [0, 0]]})
    f2 = RegularFunction(zero_letter_rep, (1, 0), (0, 1))
    assert grp.derive_right(1, f2)(GroupWord([exp_factor(0, 1)])) == 0
    dlf = grp.derive_left(0, f)
    # phi-slot pairing: (phi e1)(exp(e2) b0)
    assert dlf(GroupWord([exp_factor(1, 1)])) == 0


def test_derivation_leibniz_instance():
    rep = reps.make_cyclic_pair(AB, 0, 1)
    f1 = RegularFunction(rep, (1, 0), (0, 1))
    f2 = RegularFunction(rep, (1, 1), (1, 0))
    h1, h2 = grp.phi_map(f1), grp.phi_map(f2)
    prod = duals.product(h1, h2)
    e = 1
    lhs = duals.right_translate(NcPoly.letter(e), prod)
    rhs_a = duals.product(duals.right_translate(NcPoly.letter(e), h1), h2)
    rhs_b = duals.product(h1, duals.right_translate(NcPoly.letter(e), h2))
    import itertools

    for n in range(4):
        for w in itertools.product((0, 1), repeat=n):
            assert lhs.evaluate_word(w) == rhs_a.evaluate_word(w) + rhs_b.evaluate_word(w)


def test_faithfulness_witness_examples():
    x = NcPoly({(0, 1): 1, (1, 0): -1})
    rep, v0, moved = grp.faithfulness_witness(x, AB)
    nonzero = [c for c in moved if c != 0]
    assert sorted(nonzero) == [-1, 1]
    rep2, v02, moved2 = grp.faithfulness_witness(NcPoly.one(), AB)
    assert moved2 == v02
    rep3, _v, moved3 = grp.faithfulness_witness(NcPoly({(0,): 3}), AB)
    assert moved3[rep3.labels.index((0,))] == 3
    with pytest.raises(ValueError):
        grp.faithfulness_witness(NcPoly.zero(), AB)


def test_group_faithfulness_witness():
    g = GroupWord([exp_factor(1, 2), exp_factor(0, 3)])
    rep, v0, moved = grp.group_faithfulness_witness(g, AB)
    assert moved[-1] == 6
    g2 = GroupWord([exp_factor(0, 5), exp_factor(1, 7), exp_factor(0, 11)])
    _rep, _v0, moved2 = grp.group_faithfulness_witness(g2, AB)
    assert moved2[-1] == 385
    with pytest.raises(ValueError):
        grp.group_faithfulness_witness(GroupWord([exp_factor(0, 0)]), AB)
