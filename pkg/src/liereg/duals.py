"""Linear functionals on U(g): shuffle algebra and rep-backed matrix coefficients.

Two functional variants are kept distinct on purpose.  Finite support is
undecidable for a general rep-backed functional without a horizon, so the
shuffle-span test below is an explicitly horizon-bounded semi-decision.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import linalg, reps, words
from .linalg import Echelon, dot, frac, mat_vec, vec, vec_kron, vec_mat
from .reps import RepSpec, act_poly, act_word, matrix_of_poly
from .words import Alphabet, NcPoly, Word, word_key

DEFAULT_TUPLE_LEN = 3
DEFAULT_SLACK = 5


class FiniteFunctional:
    """Finitely supported functional: canonical map word -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = frac(c)
                if c != 0:
                    clean[tuple(w)] = c
        self.terms = clean

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def support_letters(self) -> frozenset:
        out = set()
        for w in self.terms:
            out.update(w)
        return frozenset(out)

    def __eq__(self, other):
        return isinstance(other, FiniteFunctional) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return FiniteFunctional(out)

    def __rmul__(self, scalar):
        return FiniteFunctional({w: frac(scalar) * c for w, c in self.terms.items()})

    def __repr__(self):
        parts = [f"{c}*phi_{w}" for w, c in self.items()]
        return "FiniteFunctional(" + (" + ".join(parts) or "0") + ")"

    def evaluate_word(self, w: Word) -> Fraction:
        return self.coeff(w)


class MatrixCoefficient:
    """Rep-backed functional h(x) = phi(x . v)."""

    __slots__ = ("rep", "phi", "v")

    def __init__(self, rep: RepSpec, phi, v):
        if len(phi) != rep.dim or len(v) != rep.dim:
            raise ValueError("covector/vector length must match the module dimension")
        self.rep = rep
        self.phi = vec(phi)
        self.v = vec(v)

    def evaluate_word(self, w: Word) -> Fraction:
        return dot(self.phi, act_word(self.rep, w, self.v))

    def __repr__(self):
        return f"MatrixCoefficient(dim={self.rep.dim})"


Functional = (FiniteFunctional, MatrixCoefficient)


def phi(w: Word) -> FiniteFunctional:
    """The delta functional phi_w."""
    return FiniteFunctional({tuple(w): 1})


def evaluate(h, x) -> Fraction:
    """Pair a functional with a word or an NcPoly."""
    if isinstance(x, NcPoly):
        return sum((c * h.evaluate_word(w) for w, c in x.terms.items()), Fraction(0))
    return h.evaluate_word(tuple(x))


def shuffle_product(h1: FiniteFunctional, h2: FiniteFunctional) -> FiniteFunctional:
    out = {}
    for w1, c1 in h1.terms.items():
        for w2, c2 in h2.terms.items():
            for w, mult in words.shuffles(w1, w2).items():
                out[w] = out.get(w, Fraction(0)) + c1 * c2 * mult
    return FiniteFunctional(out)


def _as_poly(x) -> NcPoly:
    if isinstance(x, NcPoly):
        return x
    return NcPoly.word(tuple(x))


def right_translate(x, h):
    """x |> h : y -> h(y x)."""
    x = _as_poly(x)
    if isinstance(h, MatrixCoefficient):
        return MatrixCoefficient(h.rep, h.phi, act_poly(h.rep, x, h.v))
    out = {}
    for u, cu in x.terms.items():
        if not u:
            for w, c in h.terms.items():
                out[w] = out.get(w, Fraction(0)) + cu * c
            continue
        for w, c in h.terms.items():
            if len(w) >= len(u) and w[len(w) - len(u):] == u:
                head = w[: len(w) - len(u)]
                out[head] = out.get(head, Fraction(0)) + cu * c
    return FiniteFunctional(out)


def left_translate(x, h):
    """x <| h : y -> h(x y)."""
    x = _as_poly(x)
    if isinstance(h, MatrixCoefficient):
        new_phi = vec_mat(h.phi, matrix_of_poly(h.rep, x))
        return MatrixCoefficient(h.rep, new_phi, h.v)
    out = {}
    for u, cu in x.terms.items():
        for w, c in h.terms.items():
            if w[: len(u)] == u:
                tail = w[len(u):]
                out[tail] = out.get(tail, Fraction(0)) + cu * c
    return FiniteFunctional(out)


def realize_rep_backed(h: FiniteFunctional, alphabet: Alphabet) -> MatrixCoefficient:
    """Realize a finite functional as a matrix coefficient on V_N(J).

    The covector collects the coefficients on the labeled basis b_w, the
    vector is b_empty; evaluation agrees with h on every word.
    """
    for e in h.support_letters():
        if not alphabet.is_nilpotent(e):
            raise ValueError("finite functionals realize rep-backed only over nilpotent letters")
    n = h.max_length()
    j = sorted(h.support_letters()) or [0]
    if not alphabet.is_nilpotent(j[0]):
        j = [e for e in alphabet.letters() if alphabet.is_nilpotent(e)][:1]
        if not j:
            raise ValueError("alphabet has no locally nilpotent letter")
    rep = reps.make_VNJ(alphabet, n, j)
    phi_vec = [h.coeff(w) for w in rep.labels]
    v = rep.basis_vector(rep.labels.index(()))
    return MatrixCoefficient(rep, phi_vec, v)


def product(h1, h2, alphabet: Alphabet = None):
    """Product dual to the coproduct: (h1 h2)(x) = (h1 (x) h2)(Delta x).

    Finite times finite is the shuffle product; otherwise both factors are
    realized rep-backed and the result is the matrix coefficient on the
    tensor module.
    """
    if isinstance(h1, FiniteFunctional) and isinstance(h2, FiniteFunctional):
        return shuffle_product(h1, h2)
    if isinstance(h1, FiniteFunctional):
        h1 = realize_rep_backed(h1, alphabet or h2.rep.alphabet)
    if isinstance(h2, FiniteFunctional):
        h2 = realize_rep_backed(h2, alphabet or h1.rep.alphabet)
    rep = reps.tensor(h1.rep, h2.rep)
    return MatrixCoefficient(rep, vec_kron(h1.phi, h2.phi), vec_kron(h1.v, h2.v))


class RhoExpansion:
    """Finite development of h along a tuple of one-parameter letters.

    coeffs maps index tuples k to rationals with
    h(y1...yp) = sum_k c_k eta1^k1(y1) ... etap^kp(yp),
    where eta is tau for nilpotent letters (index in N) and exp(tau) for
    diagonalizable letters (index in Z, an eigenvalue).
    """

    __slots__ = ("letters", "coeffs")

    def __init__(self, letters, coeffs):
        self.letters = tuple(letters)
        self.coeffs = {tuple(k): frac(c) for k, c in coeffs.items() if c != 0}

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        return (
            isinstance(other, RhoExpansion)
            and self.letters == other.letters
            and self.coeffs == other.coeffs
        )

    def max_degree(self) -> int:
        return max((sum(abs(k) for k in ks) for ks in self.coeffs), default=0)

    def __repr__(self):
        return f"RhoExpansion({self.letters}, {dict(self.items())})"


def _expand_mc(rep: RepSpec, phi_vec, v, letters):
    if not letters:
        c = dot(phi_vec, v)
        return {(): c} if c != 0 else {}
    e = letters[-1]
    rest = letters[:-1]
    out = {}
    if rep.kind(e) == words.NILPOTENT:
        m = rep.matrices[e]
        u = v
        k = 0
        factorial = 1
        while not linalg.is_zero_vec(u):
            if k > rep.dim:
                raise RuntimeError("non-terminating expansion on a nilpotent letter")
            for ks, c in _expand_mc(rep, phi_vec, u, rest).items():
                key = ks + (k,)
                out[key] = out.get(key, Fraction(0)) + c / factorial
            k += 1
            factorial *= k
            u = mat_vec(m, u)
    else:
        m = rep.matrices[e]
        by_eig = {}
        for i, x in enumerate(v):
            if x != 0:
                by_eig.setdefault(int(m[i][i]), [Fraction(0)] * rep.dim)[i] = x
        for n, u in sorted(by_eig.items()):
            for ks, c in _expand_mc(rep, phi_vec, tuple(u), rest).items():
                key = ks + (n,)
                out[key] = out.get(key, Fraction(0)) + c
    return out


def expand_rho(h, letters, alphabet: Alphabet = None) -> RhoExpansion:
    """Development of h along rho_(e1..ep), one position at a time."""
    letters = tuple(letters)
    if isinstance(h, MatrixCoefficient):
        coeffs = _expand_mc(h.rep, h.phi, h.v, letters)
        return RhoExpansion(letters, coeffs)
    if alphabet is not None:
        for e in letters:
            if not alphabet.is_nilpotent(e):
                raise ValueError(
                    "a finite functional has no finite development along a "
                    "diagonalizable letter"
                )
    bound = h.max_length()
    coeffs = {}
    for ks in itertools.product(range(bound + 1), repeat=len(letters)):
        if sum(ks) > bound:
            continue
        monomial = tuple(e for e, k in zip(letters, ks) for _ in range(k))
        c = h.coeff(monomial)
        if c != 0:
            denom = 1
            for k in ks:
                denom *= math.factorial(k)
            coeffs[ks] = c / denom
    return RhoExpansion(letters, coeffs)


def is_regular(h, alphabet: Alphabet, max_tuple_len: int = DEFAULT_TUPLE_LEN):
    """Regularity with a certificate of per-tuple expansion bounds.

    Every finite functional and every matrix coefficient over a valid
    RepSpec is regular; the certificate lists the maximal index degree of
    the finite development for each tuple up to the configured length.
    """
    cert = {}
    for p in range(1, max_tuple_len + 1):
        for tup in itertools.product(alphabet.letters(), repeat=p):
            if isinstance(h, FiniteFunctional) and any(
                not alphabet.is_nilpotent(e) for e in tup
            ):
                continue
            exp = expand_rho(h, tup, alphabet)
            cert[tup] = exp.max_degree()
    return True, cert


def r_cut(w: Word):
    """All prefixes of w, from the empty word to w itself."""
    w = tuple(w)
    return [w[:i] for i in range(len(w) + 1)]


def membership_ffr(h, alphabet: Alphabet = None):
    """Finite-dimensionality of the right-translation closure U(g) |> h.

    Returns (True, dimension certificate); finiteness always holds for the
    representable functionals this artifact manipulates.
    """
    if isinstance(h, MatrixCoefficient):
        basis = reps.submodule_generated(h.rep, h.v)
        return True, len(basis)
    prefixes = sorted(
        {p for w in h.terms for p in r_cut(w)}, key=word_key
    )
    index = {p: i for i, p in enumerate(prefixes)}
    if not prefixes:
        return True, 0

    def as_vector(f: FiniteFunctional):
        out = [Fraction(0)] * len(prefixes)
        for w, c in f.terms.items():
            out[index[w]] = c
        return tuple(out)

    letters = sorted(alphabet.letters()) if alphabet else sorted(h.support_letters())
    ech = Echelon()
    queue = []
    if ech.add(as_vector(h)):
        queue.append(h)
    while queue:
        f = queue.pop(0)
        for e in letters:
            g = right_translate(NcPoly.letter(e), f)
            if ech.add(as_vector(g)):
                queue.append(g)
    return True, ech.rank


def _exists_nonzero_word(h: MatrixCoefficient, letters, length: int) -> bool:
    """Depth-first search for a word of the given length with h(word) != 0.

    Words are built suffix-first so that applying a letter extends the
    suffix action on v; zero vectors prune whole subtrees.
    """
    rep = h.rep
    mats = [(e, rep.matrices[e]) for e in letters]

    def rec(u, remaining):
        if remaining == 0:
            return dot(h.phi, u) != 0
        for _e, m in mats:
            u2 = mat_vec(m, u)
            if not linalg.is_zero_vec(u2) and rec(u2, remaining - 1):
                return True
        return False

    return rec(h.v, length)


def in_shuffle_span(h, length_bound: int, slack: int = DEFAULT_SLACK) -> bool:
    """Semi-decision: does h vanish on every word longer than the bound?

    Checks lengths in (N, N+slack]; a rep-backed functional with support
    beyond the horizon would be misclassified, hence 'semi-decision'.
    """
    if length_bound < 0:
        raise ValueError("length bound must be nonnegative")
    if isinstance(h, FiniteFunctional):
        return h.max_length() <= length_bound
    letters = sorted(reps.support(h.rep))
    for ln in range(length_bound + 1, length_bound + slack + 1):
        if _exists_nonzero_word(h, letters, ln):
            return False
    return True


class ZMonoid:
    """Additive submonoid of Z generated by a finite set of eigenvalues."""

    def __init__(self, generators):
        self.generators = frozenset(int(g) for g in generators if g != 0)

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def contains(self, n: int) -> bool:
        n = int(n)
        if n == 0:
            return True
        if not self.generators:
            return False
        pos = sorted(g for g in self.generators if g > 0)
        neg = sorted(-g for g in self.generators if g < 0)
        if pos and neg:
            return n % math.gcd(*pos, *neg) == 0
        if neg:
            if n > 0:
                return False
            n, pos = -n, neg
        elif n < 0:
            return False
        # nonnegative coin problem, bounded dynamic program
        reachable = [False] * (n + 1)
        reachable[0] = True
        for g in pos:
            for i in range(g, n + 1):
                if reachable[i - g]:
                    reachable[i] = True
        return reachable[n]

    def sample(self, bound: int):
        return [n for n in range(-bound, bound + 1) if self.contains(n)]

    def __repr__(self):
        return f"ZMonoid({sorted(self.generators)})"


def z_monoid(e: int, rep_list) -> ZMonoid:
    """Additive monoid of all eigenvalues of a diagonalizable letter."""
    gens = set()
    for rep in rep_list:
        if rep.kind(e) != words.DIAGONAL:
            raise reps.RepError("z_monoid requires a diagonalizable letter in every module")
        gens.update(reps.eigenvalues(rep, e))
    return ZMonoid(gens)
