import itertools

from fractions import Fraction

import pytest

from liereg import duals, reps, words
from liereg.duals import FiniteFunctional, MatrixCoefficient
from liereg.words import Alphabet, NcPoly


AB = Alphabet(("e1", "e2"))


def cyclic_functional():
    """The rep-backed functional with support on every alternating word."""
    rep = reps.make_cyclic_pair(AB, 0, 1)
    return MatrixCoefficient(rep, (Fraction(1), Fraction(1)), (Fraction(1), Fraction(0)))


def test_phi_delta_behaviour():
    h = duals.phi((0,))
    assert h.evaluate_word((0,)) == 1
    assert h.evaluate_word((1,)) == 0
    assert duals.phi((0, 1)).evaluate_word((0, 1)) == 1


def test_shuffle_product_examples():
    assert duals.shuffle_product(duals.phi((0,)), duals.phi((1,))) == FiniteFunctional(
        {(0, 1): 1, (1, 0): 1}
    )
    assert duals.shuffle_product(duals.phi((0,)), duals.phi((0,))) == FiniteFunctional(
        {(0, 0): 2}
    )
    h = FiniteFunctional({(0, 1): 3, (1,): -2})
    assert duals.shuffle_product(duals.phi(()), h) == h


def test_evaluate_infinite_support_functional():
    h = cyclic_functional()
    assert duals.evaluate(h, (0, 1)) == 1  # e1(e2 b1) = e1 b2 = b1
    assert duals.evaluate(h, (0,)) == 0  # e1 b1 = 0
    assert duals.evaluate(h, NcPoly.zero()) == 0
    assert duals.evaluate(h, ()) == 1


def test_right_translate_strips_suffix():
    assert duals.right_translate(NcPoly.letter(1), duals.phi((0, 1))) == duals.phi((0,))
    assert duals.right_translate(NcPoly.letter(0), duals.phi((0, 1))).is_zero()
    h = FiniteFunctional({(0, 1): 2})
    assert duals.right_translate(NcPoly.one(), h) == h


def test_left_translate_strips_prefix():
    assert duals.left_translate(NcPoly.letter(0), duals.phi((0, 1))) == duals.phi((1,))
    assert duals.left_translate(NcPoly.letter(1), duals.phi((0, 1))).is_zero()
    h = FiniteFunctional({(0, 1): 2})
    assert duals.left_translate(NcPoly.one(), h) == h


def test_translations_on_matrix_coefficient():
    h = cyclic_functional()
    # (e2 |> h)(w) = h(w.e2)
    moved = duals.right_translate(NcPoly.letter(1), h)
    assert moved.evaluate_word(()) == h.evaluate_word((1,))
    assert moved.evaluate_word((0,)) == h.evaluate_word((0, 1))
    lmoved = duals.left_translate(NcPoly.letter(0), h)
    assert lmoved.evaluate_word((1,)) == h.evaluate_word((0, 1))


def test_translation_commutation_instance():
    h = cyclic_functional()
    x, y = NcPoly.word((0, 1)), NcPoly.word((1,))
    lhs = duals.right_translate(x, duals.left_translate(y, h))
    rhs = duals.left_translate(y, duals.right_translate(x, h))
    for n in range(5):
        for w in itertools.product((0, 1), repeat=n):
            assert lhs.evaluate_word(w) == rhs.evaluate_word(w)


def test_product_examples():
    p = duals.product(duals.phi((0,)), duals.phi((1,)))
    assert p.evaluate_word((0, 1)) == 1
    assert p.evaluate_word((1, 0)) == 1
    assert p.evaluate_word((0, 0)) == 0
    h = FiniteFunctional({(1, 0): 5})
    assert duals.product(h, duals.phi(())) == h


def test_product_mixed_finite_and_rep_backed():
    h1 = duals.phi((0,))
    h2 = cyclic_functional()
    prod = duals.product(h1, h2, AB)
    for n in range(5):
        for w in itertools.product((0, 1), repeat=n):
            expected = Fraction(0)
            for (l, r), c in words.coproduct(NcPoly.word(w)).terms.items():
                expected += c * h1.evaluate_word(l) * h2.evaluate_word(r)
            assert prod.evaluate_word(w) == expected


def test_realize_rep_backed_matches_finite():
    h = FiniteFunctional({(0, 1): 2, (1,): -1})
    mc = duals.realize_rep_backed(h, AB)
    for n in range(5):
        for w in itertools.product((0, 1), repeat=n):
            assert mc.evaluate_word(w) == h.evaluate_word(w)


def test_expand_rho_finite():
    exp = duals.expand_rho(duals.phi((0, 1)), (0, 1))
    assert exp.coeffs == {(1, 1): Fraction(1)}
    exp2 = duals.expand_rho(duals.phi(()), (0, 1, 0))
    assert exp2.coeffs == {(0, 0, 0): Fraction(1)}
    # factorial normalization: h(e1.e1) = 1 gives c_2 = 1/2
    exp3 = duals.expand_rho(duals.phi((0, 0)), (0,))
    assert exp3.coeffs == {(2,): Fraction(1, 2)}


def test_expand_rho_matrix_coefficient():
    h = cyclic_functional()
    exp = duals.expand_rho(h, (1,))
    assert exp.coeffs == {(0,): Fraction(1), (1,): Fraction(1)}


def test_expand_rho_diagonalizable():
    mixed = Alphabet(("e1", "d"), (words.NILPOTENT, words.DIAGONAL))
    rep = reps.RepSpec(mixed, 2, {1: [[1, 0], [0, -1]]})
    h = MatrixCoefficient(rep, (Fraction(2), Fraction(3)), (Fraction(1), Fraction(1)))
    exp = duals.expand_rho(h, (1,))
    assert exp.coeffs == {(-1,): Fraction(3), (1,): Fraction(2)}
    with pytest.raises(ValueError):
        duals.expand_rho(duals.phi((0,)), (1,), mixed)


def test_is_regular_certificate():
    ok, cert = duals.is_regular(duals.phi((0, 1)), AB, max_tuple_len=2)
    assert ok
    assert cert[(0, 1)] == 2
    ok2, cert2 = duals.is_regular(cyclic_functional(), AB, max_tuple_len=2)
    assert ok2
    assert all(bound <= 2 for bound in cert2.values())


def test_r_cut():
    assert duals.r_cut((0, 1)) == [(), (0,), (0, 1)]
    assert duals.r_cut(()) == [()]
    assert duals.r_cut((0, 0, 1)) == [(), (0,), (0, 0), (0, 0, 1)]


def test_membership_ffr():
    ok, dim = duals.membership_ffr(duals.phi((0, 1)), AB)
    assert ok and dim == 3
    ok2, dim2 = duals.membership_ffr(cyclic_functional())
    assert ok2 and dim2 == 2
    ok3, dim3 = duals.membership_ffr(duals.phi(()), AB)
    assert ok3 and dim3 == 1


def test_r_cut_spans_translation_closure():
    for w in [(0,), (0, 1), (1, 0, 0)]:
        ok, dim = duals.membership_ffr(duals.phi(w), AB)
        assert ok and dim == len(duals.r_cut(w))


def test_in_shuffle_span():
    assert duals.in_shuffle_span(duals.phi((0, 1)), 2)
    assert not duals.in_shuffle_span(duals.phi((0, 1)), 1)
    assert duals.in_shuffle_span(FiniteFunctional({}), 0)
    h = cyclic_functional()
    for bound in range(6):
        assert not duals.in_shuffle_span(h, bound)


def test_z_monoid():
    m = duals.ZMonoid({2, 3})
    assert m.contains(0) and m.contains(5) and m.contains(7)
    assert not m.contains(1)
    assert duals.ZMonoid({0}).sample(3) == [0]
    full = duals.ZMonoid({1, -1})
    assert all(full.contains(n) for n in range(-10, 11))
    neg = duals.ZMonoid({-2, -3})
    assert neg.contains(-7) and not neg.contains(2)


def test_z_monoid_from_reps():
    mixed = Alphabet(("d",), (words.DIAGONAL,))
    r1 = reps.RepSpec(mixed, 2, {0: [[0, 0], [0, 2]]})
    r2 = reps.RepSpec(mixed, 1, {0: [[3]]})
    m = duals.z_monoid(0, [r1, r2])
    assert m.contains(2) and m.contains(3) and not m.contains(1)
    with pytest.raises(reps.RepError):
        duals.z_monoid(0, [reps.RepSpec(Alphabet(("d",)), 1, {0: [[0]]})])
