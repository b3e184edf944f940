"""Group words in one-parameter factors and their exact module actions.

A GroupWord is a product of factors exp(t*e) (locally nilpotent letter) or
s^e (diagonalizable letter, s != 0).  The leftmost factor acts last, i.e.
factors compose like ordinary function application.  No normal form is
computed; group elements are only compared through their actions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import duals, linalg, reps, words
from .duals import FiniteFunctional, MatrixCoefficient, expand_rho, realize_rep_backed
from .linalg import dot, frac, mat_vec, vec
from .reps import RepSpec, act_poly
from .words import Alphabet, NcPoly, Word


@dataclass(frozen=True)
class OneParamFactor:
    letter: int
    kind: str
    param: Fraction

    def __post_init__(self):
        object.__setattr__(self, "param", frac(self.param))
        if self.kind not in words.KINDS:
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind == words.DIAGONAL and self.param == 0:
            raise ValueError("diagonalizable factors need a nonzero parameter")


def exp_factor(letter: int, t) -> OneParamFactor:
    return OneParamFactor(letter, words.NILPOTENT, frac(t))


def torus_factor(letter: int, s) -> OneParamFactor:
    return OneParamFactor(letter, words.DIAGONAL, frac(s))


class GroupWord(tuple):
    """Product of one-parameter factors, leftmost factor listed first."""

    def __new__(cls, factors=()):
        return super().__new__(cls, tuple(factors))

    def __mul__(self, other):
        return GroupWord(tuple(self) + tuple(other))

    def is_reduced(self) -> bool:
        if not self:
            return False
        for f in self:
            if f.param == 0:
                return False
        return all(a.letter != b.letter for a, b in zip(self, self[1:]))


def act_factor(rep: RepSpec, factor: OneParamFactor, v):
    if rep.kind(factor.letter) != factor.kind:
        raise reps.RepError(
            f"factor kind {factor.kind} does not match the module kind of "
            f"letter {rep.alphabet.names[factor.letter]}"
        )
    m = rep.matrices[factor.letter]
    if factor.kind == words.NILPOTENT:
        out = vec(v)
        term = vec(v)
        k = 0
        while True:
            k += 1
            term = linalg.vec_scale(Fraction(factor.param, k), mat_vec(m, term))
            if linalg.is_zero_vec(term):
                return out
            out = linalg.vec_add(out, term)
            if k > rep.dim:
                raise reps.RepError("exp series did not terminate: matrix not nilpotent")
    s = factor.param
    return tuple(x * s ** int(m[i][i]) for i, x in enumerate(v))


def act_group(rep: RepSpec, g: GroupWord, v):
    """Apply a group word; the rightmost factor acts first."""
    out = vec(v)
    for factor in reversed(g):
        out = act_factor(rep, factor, out)
    return out


class RegularFunction:
    """Matrix coefficient read as a function on group words: f(g) = phi(g.v)."""

    __slots__ = ("rep", "phi", "v")

    def __init__(self, rep: RepSpec, phi, v):
        self.rep = rep
        self.phi = vec(phi)
        self.v = vec(v)

    def __call__(self, g: GroupWord) -> Fraction:
        return eval_regular(self, g)


def eval_regular(f: RegularFunction, g: GroupWord) -> Fraction:
    return dot(f.phi, act_group(f.rep, g, f.v))


def phi_map(f: RegularFunction) -> MatrixCoefficient:
    """Phi: regular function -> regular linear functional on U(g)."""
    return MatrixCoefficient(f.rep, f.phi, f.v)


def xi_map(h, alphabet: Alphabet = None) -> RegularFunction:
    """Xi: regular linear functional -> regular function on the group."""
    if isinstance(h, FiniteFunctional):
        h = realize_rep_backed(h, alphabet)
    return RegularFunction(h.rep, h.phi, h.v)


class TaylorPolynomial:
    """Exact multivariate polynomial, exponent tuple -> Fraction."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs):
        self.nvars = nvars
        self.coeffs = {tuple(k): frac(c) for k, c in coeffs.items() if c != 0}

    def __eq__(self, other):
        return (
            isinstance(other, TaylorPolynomial)
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __call__(self, *ts) -> Fraction:
        if len(ts) != self.nvars:
            raise ValueError("wrong number of evaluation points")
        ts = [frac(t) for t in ts]
        total = Fraction(0)
        for ks, c in self.coeffs.items():
            term = c
            for t, k in zip(ts, ks):
                term *= t**k
            total += term
        return total

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        return f"TaylorPolynomial({dict(self.items())})"


def taylor_expand(h, letters, alphabet: Alphabet = None) -> TaylorPolynomial:
    """f(exp(t1 e1)...exp(tp ep)) = sum h(e1^k1...ep^kp) t^k / k!.

    Only defined along tuples of locally nilpotent letters; the expansion
    coefficients are exactly the rho-development coefficients.
    """
    letters = tuple(letters)
    if isinstance(h, MatrixCoefficient):
        for e in letters:
            if h.rep.kind(e) != words.NILPOTENT:
                raise ValueError("taylor_expand requires locally nilpotent letters")
    exp = expand_rho(h, letters, alphabet)
    return TaylorPolynomial(len(letters), exp.coeffs)


def f_w(w: Word, g: GroupWord) -> Fraction:
    """Coordinate function: sum of t^k/k! over exponent splittings of w.

    The factors of g, read left to right, provide the letter tuple
    (e1,...,ep); the sum runs over k with e1^k1 ... ep^kp = w.
    """
    w = tuple(w)
    for factor in g:
        if factor.kind != words.NILPOTENT:
            raise ValueError("f_w is only defined on products of exp factors")

    def rec(i: int, pos: int) -> Fraction:
        if i == len(g):
            return Fraction(1) if pos == len(w) else Fraction(0)
        e, t = g[i].letter, g[i].param
        total = rec(i + 1, pos)  # k_i = 0
        k = 0
        power = Fraction(1)
        while pos + k < len(w) and w[pos + k] == e:
            k += 1
            power = power * t / k
            total += power * rec(i + 1, pos + k)
        return total

    return rec(0, 0)


def derive_right(e: int, f: RegularFunction) -> RegularFunction:
    """The left invariant derivation e |> f = d/dt|_e f(g kappa_e(t)).

    For both factor kinds the derivative lands on the vector slot: the
    nilpotent derivative at t=0 and the torus derivative at s=1 both give
    e acting on v.
    """
    return RegularFunction(f.rep, f.phi, mat_vec(f.rep.matrices[e], f.v))


def derive_left(e: int, f: RegularFunction) -> RegularFunction:
    """The right invariant derivation e <| f = d/dt|_e f(kappa_e(t) g)."""
    return RegularFunction(f.rep, linalg.vec_mat(f.phi, f.rep.matrices[e]), f.v)


def faithfulness_witness(x: NcPoly, alphabet: Alphabet):
    """(V_N(J), b_empty, x.b_empty) with the image reproducing x's coefficients."""
    if x.is_zero():
        raise ValueError("faithfulness witness needs a nonzero polynomial")
    n = x.max_length()
    j = sorted(x.support_letters()) or [0]
    rep = reps.make_VNJ(alphabet, n, j)
    v0 = rep.basis_vector(rep.labels.index(()))
    moved = act_poly(rep, x, v0)
    return rep, v0, moved


def group_faithfulness_witness(g: GroupWord, alphabet: Alphabet):
    """Chain module moving b0: the top coefficient is the product of parameters."""
    if not g:
        raise ValueError("group word must be nonempty")
    for f in g:
        if f.kind != words.NILPOTENT:
            raise ValueError("witness construction uses exp factors only")
    if not g.is_reduced():
        raise ValueError("group word must be reduced: nonzero params, distinct neighbours")
    seq = tuple(f.letter for f in reversed(g))  # application order
    rep = reps.make_chain(alphabet, seq)
    v0 = rep.basis_vector(0)
    moved = act_group(rep, g, v0)
    return rep, v0, moved
