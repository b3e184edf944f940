"""Depth-truncated integrable highest-weight modules of Kac-Moody algebras.

L(Lambda) is realized from the generalized Cartan matrix alone: Verma
monomials in the lowering generators span each weight space, the
contravariant (Shapovalov-style) Gram matrix is computed per weight, and
the module is the radical quotient.  Weight multiplicities are Gram ranks;
the Freudenthal recursion (with Peterson root multiplicities) provides a
fully independent cross-check.

Weights are tracked as depth vectors k with lambda = Lambda - sum k_i alpha_i.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction

from . import linalg, words
from .linalg import Echelon, frac, rref, solve
from .words import NcPoly

DEFAULT_DEPTH_CAP = 24
DEFAULT_DIM_CAP = 4096


class GCMError(ValueError):
    pass


class TruncationError(linalg.CapError):
    """Raised when an operation needs depth beyond the configured cap."""

    def __init__(self, required_depth, cap):
        super().__init__(
            f"operation requires truncation depth {required_depth}, cap is {cap}"
        )
        self.required_depth = required_depth
        self.cap = cap


class GCM:
    """Symmetrizable generalized Cartan matrix with a fixed least symmetrizer."""

    def __init__(self, a, d):
        self.a = tuple(tuple(int(x) for x in row) for row in a)
        self.d = tuple(frac(x) for x in d)
        self.n = len(self.a)

    def sym(self, i: int, j: int) -> Fraction:
        """Invariant form on simple roots: (alpha_i | alpha_j) = d_i a_ij."""
        return self.d[i] * self.a[i][j]

    def bilinear(self, beta, gamma) -> Fraction:
        total = Fraction(0)
        for i, bi in enumerate(beta):
            if bi:
                for j, gj in enumerate(gamma):
                    if gj:
                        total += bi * gj * self.sym(i, j)
        return total

    def __repr__(self):
        return f"GCM({[list(r) for r in self.a]})"


def validate_gcm(a) -> GCM:
    """Check the GCM axioms and compute the least positive integer symmetrizer."""
    a = [list(row) for row in a]
    n = len(a)
    errors = []
    for row in a:
        if len(row) != n:
            raise GCMError("matrix must be square")
    for i in range(n):
        for j in range(n):
            if a[i][j] != int(a[i][j]):
                errors.append(f"entry ({i},{j}) is not an integer")
    for i in range(n):
        if a[i][i] != 2:
            errors.append(f"diagonal entry ({i},{i}) must be 2")
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    errors.append(f"off-diagonal entry ({i},{j}) must be nonpositive")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    errors.append(f"zero pattern not symmetric at ({i},{j})")
    if errors:
        raise GCMError("; ".join(errors))

    # d_i a_ij = d_j a_ji, propagated along the nonzero pattern
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and a[i][j] != 0:
                    required = d[i] * Fraction(a[i][j], a[j][i])
                    if d[j] is None:
                        d[j] = required
                        stack.append(j)
                    elif d[j] != required:
                        raise GCMError("matrix is not symmetrizable")
    # rescale to least positive integers (per connected component jointly)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    d = [x * lcm for x in d]
    g = 0
    for x in d:
        g = _gcd(g, x.numerator)
    d = [x / g for x in d]
    return GCM(a, d)


def _gcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Root multiplicities (Peterson recurrence) and the Freudenthal oracle.


def root_multiplicities(gcm: GCM, max_height: int) -> dict:
    """Multiplicities of positive roots up to the given height.

    Peterson's recurrence, run over the positive root lattice in height
    order; returns {depth vector: multiplicity} for the actual roots.
    """
    n = gcm.n
    rho_pair = gcm.d  # (alpha_i | rho) = d_i since rho(h_i) = 1

    mult: dict = {}
    c: dict = {}

    def lattice_points(height):
        for ks in itertools.product(range(height + 1), repeat=n):
            if sum(ks) == height:
                yield ks

    for height in range(1, max_height + 1):
        for beta in lattice_points(height):
            if height == 1:
                mult[beta] = 1
                c[beta] = Fraction(1)
                continue
            rhs = Fraction(0)
            for bp in _positive_summands(beta):
                bpp = tuple(b - p for b, p in zip(beta, bp))
                cb1 = c.get(bp)
                cb2 = c.get(bpp)
                if cb1 and cb2:
                    rhs += gcm.bilinear(bp, bpp) * cb1 * cb2
            denom = gcm.bilinear(beta, beta) - 2 * sum(
                b * r for b, r in zip(beta, rho_pair)
            )
            cb = rhs / denom if denom != 0 else Fraction(0)
            # peel off proper divisors: c_beta = sum_{k>=1} mult(beta/k)/k
            m = cb
            for k in range(2, height + 1):
                if all(b % k == 0 for b in beta):
                    sub = tuple(b // k for b in beta)
                    m -= Fraction(mult.get(sub, 0), k)
            if m != 0:
                assert m.denominator == 1 and m > 0, (beta, m)
                mult[beta] = int(m)
                c[beta] = cb
            elif cb != 0:
                c[beta] = cb
    return mult


def _positive_summands(beta):
    """All nonzero lattice vectors strictly below beta componentwise sums."""
    ranges = [range(b + 1) for b in beta]
    for bp in itertools.product(*ranges):
        if any(bp) and bp != beta:
            yield bp


def freudenthal_multiplicity(gcm: GCM, lam, beta, _cache=None) -> int:
    """Weight multiplicity of L(lam) at lam - beta by the Freudenthal recursion."""
    lam = tuple(int(x) for x in lam)
    beta = tuple(int(x) for x in beta)
    if _cache is None:
        _cache = {}
    if beta in _cache:
        return _cache[beta]
    if all(b == 0 for b in beta):
        return 1
    height = sum(beta)
    roots = root_multiplicities(gcm, height)
    lam_pair = {  # (Lambda | alpha) for each root alpha
        alpha: sum(a * gcm.d[i] * lam[i] for i, a in enumerate(alpha))
        for alpha in roots
    }
    denom = 2 * sum(
        b * gcm.d[i] * (lam[i] + 1) for i, b in enumerate(beta)
    ) - gcm.bilinear(beta, beta)
    total = Fraction(0)
    for alpha, mult_a in sorted(roots.items()):
        j = 1
        while True:
            target = tuple(b - j * a for b, a in zip(beta, alpha))
            if any(t < 0 for t in target):
                break
            m = freudenthal_multiplicity(gcm, lam, target, _cache)
            if m:
                pairing = (
                    lam_pair[alpha]
                    - gcm.bilinear(beta, alpha)
                    + j * gcm.bilinear(alpha, alpha)
                )
                total += mult_a * m * pairing
            j += 1
    if denom == 0:
        assert total == 0, (lam, beta)
        result = 0
    else:
        value = 2 * total / denom
        assert value.denominator == 1 and value >= 0, (lam, beta, value)
        result = int(value)
    _cache[beta] = result
    return result


# ---------------------------------------------------------------------------
# The truncated irreducible module.


class WeightSpace:
    """One weight of L(Lambda): monomial spanning set, Gram data, quotient basis."""

    __slots__ = ("depth", "monomials", "index", "gram", "basis_cols", "dim", "lam")

    def __init__(self, depth, monomials, gram, basis_cols, lam):
        self.depth = depth
        self.monomials = monomials
        self.index = {w: i for i, w in enumerate(monomials)}
        self.gram = gram
        self.basis_cols = basis_cols
        self.dim = len(basis_cols)
        self.lam = lam  # weight coordinates lambda(h_i)

    def coords(self, combo: dict):
        """Quotient coordinates of a linear combination of monomials.

        Solves G[:,B] c = G u, which is consistent because pairing vectors
        of module elements lie in the Gram column space.
        """
        if self.dim == 0:
            return ()
        u = [Fraction(0)] * len(self.monomials)
        for w, cf in combo.items():
            u[self.index[w]] += cf
        p = [
            sum((self.gram[r][s] * u[s] for s in range(len(u))), Fraction(0))
            for r in range(len(self.monomials))
        ]
        a_rows = [[self.gram[r][b] for b in self.basis_cols] for r in range(len(self.monomials))]
        x = solve(a_rows, p)
        assert x is not None
        return x

    def basis_monomial(self, col_idx: int):
        return self.monomials[self.basis_cols[col_idx]]


def _multiset_words(depth_vector):
    letters = []
    for i, k in enumerate(depth_vector):
        letters.extend([i] * k)
    return sorted(set(itertools.permutations(letters)))


class IrrTrunc:
    """Depth-truncated integrable irreducible highest-weight module L(Lambda).

    Weight spaces are built lazily and cached; a lock keeps concurrent
    readers consistent.  `depth` is the declared truncation; operations
    that escape it either raise or auto-extend up to `depth_cap`.
    """

    def __init__(self, gcm: GCM, lam, depth: int,
                 depth_cap: int = DEFAULT_DEPTH_CAP,
                 dim_cap: int = DEFAULT_DIM_CAP):
        self.gcm = gcm
        self.lam = tuple(int(x) for x in lam)
        if len(self.lam) != gcm.n:
            raise ValueError("highest weight has wrong length")
        if any(x < 0 for x in self.lam):
            raise ValueError("highest weight must be dominant")
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        if depth > depth_cap:
            raise TruncationError(depth, depth_cap)
        self.depth = depth
        self.depth_cap = depth_cap
        self.dim_cap = dim_cap
        self._spaces: dict = {}
        self._shap_cache: dict = {}
        self._fmat_cache: dict = {}
        self._emat_cache: dict = {}
        self._lock = threading.RLock()

    # -- construction ------------------------------------------------------

    def lam_of(self, k) -> tuple:
        """Weight coordinates lambda(h_i) at depth vector k."""
        return tuple(
            self.lam[i] - sum(kj * self.gcm.a[i][j] for j, kj in enumerate(k))
            for i in range(self.gcm.n)
        )

    def _e_action(self, i: int, w: tuple) -> dict:
        """e_i on the Verma monomial f_w v: commute past each matching letter."""
        out = {}
        for t, letter in enumerate(w):
            if letter == i:
                coeff = self.lam[i] - sum(self.gcm.a[i][s] for s in w[t + 1:])
                target = w[:t] + w[t + 1:]
                out[target] = out.get(target, Fraction(0)) + coeff
        return {w2: c for w2, c in out.items() if c != 0}

    def _e_action_combo(self, i: int, combo: dict) -> dict:
        out = {}
        for w, cf in combo.items():
            for w2, c in self._e_action(i, w).items():
                out[w2] = out.get(w2, Fraction(0)) + cf * c
        return {w2: c for w2, c in out.items() if c != 0}

    def _shap(self, w1: tuple, w2: tuple) -> Fraction:
        """Contravariant form <f_{w1} v, f_{w2} v>."""
        key = (w1, w2)
        cached = self._shap_cache.get(key)
        if cached is not None:
            return cached
        if not w1:
            value = Fraction(1) if not w2 else Fraction(0)
        else:
            value = Fraction(0)
            for w2p, c in self._e_action(w1[0], w2).items():
                value += c * self._shap(w1[1:], w2p)
        self._shap_cache[key] = value
        return value

    def space(self, k, extend: bool = False) -> WeightSpace:
        k = tuple(int(x) for x in k)
        if any(x < 0 for x in k):
            raise ValueError("depth vector must be componentwise nonnegative")
        if sum(k) > self.depth:
            if not extend:
                raise TruncationError(sum(k), self.depth)
            if sum(k) > self.depth_cap:
                raise TruncationError(sum(k), self.depth_cap)
        with self._lock:
            ws = self._spaces.get(k)
            if ws is not None:
                return ws
            monomials = _multiset_words(k)
            if len(monomials) > self.dim_cap:
                raise linalg.CapError(
                    f"weight space spanning set of size {len(monomials)} exceeds "
                    f"cap {self.dim_cap}"
                )
            gram = [
                [self._shap(w1, w2) for w2 in monomials] for w1 in monomials
            ]
            _, pivots = rref(gram)
            ws = WeightSpace(k, monomials, gram, list(pivots), self.lam_of(k))
            self._spaces[k] = ws
            return ws

    def weight_multiplicity(self, k) -> int:
        return self.space(k).dim

    def dimensions(self, max_depth: int = None) -> dict:
        """Nonzero weight multiplicities for all depth vectors within the truncation."""
        max_depth = self.depth if max_depth is None else max_depth
        out = {}
        for k in itertools.product(range(max_depth + 1), repeat=self.gcm.n):
            if sum(k) <= max_depth:
                d = self.space(k).dim
                if d:
                    out[k] = d
        return out

    # -- generator actions on quotient coordinates --------------------------

    def f_matrix(self, i: int, k, extend: bool = False):
        """Matrix of f_i from weight k to weight k + e_i in quotient coordinates."""
        key = (i, tuple(k))
        with self._lock:
            if key in self._fmat_cache:
                return self._fmat_cache[key]
            src = self.space(k, extend)
            tgt_k = tuple(x + (1 if j == i else 0) for j, x in enumerate(k))
            tgt = self.space(tgt_k, extend)
            cols = []
            for b in range(src.dim):
                w = src.basis_monomial(b)
                cols.append(tgt.coords({(i,) + w: Fraction(1)}))
            m = tuple(
                tuple(cols[b][r] for b in range(src.dim)) for r in range(tgt.dim)
            )
            self._fmat_cache[key] = m
            return m

    def e_matrix(self, i: int, k):
        """Matrix of e_i from weight k to weight k - e_i in quotient coordinates."""
        key = (i, tuple(k))
        with self._lock:
            if key in self._emat_cache:
                return self._emat_cache[key]
            src = self.space(k)
            if k[i] == 0:
                tgt_dim = 0
                m = ()
            else:
                tgt_k = tuple(x - (1 if j == i else 0) for j, x in enumerate(k))
                tgt = self.space(tgt_k)
                cols = []
                for b in range(src.dim):
                    w = src.basis_monomial(b)
                    cols.append(tgt.coords(self._e_action(i, w)))
                m = tuple(
                    tuple(cols[b][r] for b in range(src.dim)) for r in range(tgt.dim)
                )
            self._emat_cache[key] = m
            return m

    # -- vectors ------------------------------------------------------------

    def highest_weight_vector(self) -> "TruncVector":
        zero = (0,) * self.gcm.n
        return TruncVector({zero: (Fraction(1),)})

    def zero_vector(self) -> "TruncVector":
        return TruncVector({})


class TruncVector:
    """Element of a truncated module: depth vector -> quotient coordinates."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        clean = {}
        if parts:
            for k, coords in parts.items():
                coords = tuple(frac(c) for c in coords)
                if any(c != 0 for c in coords):
                    clean[tuple(k)] = coords
        self.parts = clean

    def is_zero(self) -> bool:
        return not self.parts

    def __eq__(self, other):
        return isinstance(other, TruncVector) and self.parts == other.parts

    def __add__(self, other):
        out = dict(self.parts)
        for k, coords in other.parts.items():
            if k in out:
                out[k] = tuple(a + b for a, b in zip(out[k], coords))
            else:
                out[k] = coords
        return TruncVector(out)

    def __rmul__(self, scalar):
        scalar = frac(scalar)
        return TruncVector(
            {k: tuple(scalar * c for c in coords) for k, coords in self.parts.items()}
        )

    def coefficient(self, k, idx: int = 0) -> Fraction:
        part = self.parts.get(tuple(k))
        return part[idx] if part is not None else Fraction(0)

    def max_depth(self) -> int:
        return max((sum(k) for k in self.parts), default=0)

    def __repr__(self):
        return f"TruncVector({self.parts})"


def act_f(m: IrrTrunc, i: int, v: TruncVector, extend: bool = False) -> TruncVector:
    out = {}
    for k, coords in v.parts.items():
        mat = m.f_matrix(i, k, extend)
        if not mat:
            continue
        tgt_k = tuple(x + (1 if j == i else 0) for j, x in enumerate(k))
        new = linalg.mat_vec(mat, coords)
        if tgt_k in out:
            new = tuple(a + b for a, b in zip(out[tgt_k], new))
        out[tgt_k] = new
    return TruncVector(out)


def act_e(m: IrrTrunc, i: int, v: TruncVector) -> TruncVector:
    out = {}
    for k, coords in v.parts.items():
        mat = m.e_matrix(i, k)
        if not mat:
            continue
        tgt_k = tuple(x - (1 if j == i else 0) for j, x in enumerate(k))
        new = linalg.mat_vec(mat, coords)
        if tgt_k in out:
            new = tuple(a + b for a, b in zip(out[tgt_k], new))
        out[tgt_k] = new
    return TruncVector(out)


def act_h(m: IrrTrunc, i: int, v: TruncVector) -> TruncVector:
    return TruncVector(
        {
            k: tuple(m.lam_of(k)[i] * c for c in coords)
            for k, coords in v.parts.items()
        }
    )


def act_chevalley(m: IrrTrunc, gen, v: TruncVector) -> TruncVector:
    """gen is ('e', i), ('f', i) or ('h', i)."""
    tag, i = gen
    if tag == "e":
        return act_e(m, i, v)
    if tag == "f":
        return act_f(m, i, v)
    if tag == "h":
        return act_h(m, i, v)
    raise ValueError(f"unknown generator {gen!r}")


def act_e_word(m: IrrTrunc, w, v: TruncVector) -> TruncVector:
    """A word in the raising generators, first letter outermost."""
    out = v
    for i in reversed(tuple(w)):
        out = act_e(m, i, out)
    return out


def act_e_poly(m: IrrTrunc, x: NcPoly, v: TruncVector) -> TruncVector:
    out = m.zero_vector()
    for w, c in x.terms.items():
        out = out + c * act_e_word(m, w, v)
    return out


# ---------------------------------------------------------------------------
# Group factors.


@dataclass(frozen=True)
class KMFactor:
    """One factor of a Kac-Moody group word.

    kind 'e'/'f': exp(param * e_i) / exp(param * f_i), data = i.
    kind 'root': exp(param * x) for x the multibracket of the raising
        generators along data (a tuple of indices).
    kind 'torus': s^h with param = s != 0 and data = (Lambda(h), alpha values),
        i.e. the integer value of h on the highest weight and on each
        simple root.
    """

    kind: str
    data: tuple
    param: Fraction

    def __post_init__(self):
        object.__setattr__(self, "param", frac(self.param))
        if self.kind not in ("e", "f", "root", "torus"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind == "torus" and self.param == 0:
            raise ValueError("torus factors need a nonzero parameter")


def coweight_torus_factor(gcm: GCM, lam, coeffs, s) -> KMFactor:
    """Torus factor s^h for h = sum coeffs_j h_j."""
    coeffs = tuple(int(c) for c in coeffs)
    lam_val = sum(c * l for c, l in zip(coeffs, lam))
    alpha_vals = tuple(
        sum(c * gcm.a[j][i] for j, c in enumerate(coeffs)) for i in range(gcm.n)
    )
    return KMFactor("torus", (lam_val, alpha_vals), s)


KMGroupWord = tuple  # of KMFactor, leftmost factor acts last


def _exp_series(m: IrrTrunc, apply_once, t: Fraction, v: TruncVector,
                extend: bool) -> TruncVector:
    out = v
    term = v
    k = 0
    while True:
        k += 1
        term = Fraction(t, k) * apply_once(term)
        if term.is_zero():
            return out
        if term.max_depth() > m.depth_cap:
            raise TruncationError(term.max_depth(), m.depth_cap)
        out = out + term


def exp_action(m: IrrTrunc, factor: KMFactor, v: TruncVector,
               extend: bool = True) -> TruncVector:
    if factor.kind == "e":
        i = factor.data if isinstance(factor.data, int) else factor.data[0]
        return _exp_series(m, lambda u: act_e(m, i, u), factor.param, v, extend)
    if factor.kind == "f":
        i = factor.data if isinstance(factor.data, int) else factor.data[0]
        return _exp_series(
            m, lambda u: act_f(m, i, u, extend), factor.param, v, extend
        )
    if factor.kind == "root":
        poly = words.multibracket(factor.data)
        return _exp_series(m, lambda u: act_e_poly(m, poly, u), factor.param, v, extend)
    # torus
    lam_val, alpha_vals = factor.data
    s = factor.param
    out = {}
    for k, coords in v.parts.items():
        power = lam_val - sum(ki * av for ki, av in zip(k, alpha_vals))
        out[k] = tuple(c * s ** int(power) for c in coords)
    return TruncVector(out)


def act_km_group(m: IrrTrunc, g, v: TruncVector, extend: bool = True) -> TruncVector:
    out = v
    for factor in reversed(tuple(g)):
        out = exp_action(m, factor, out, extend)
    return out


def theta_eval(m: IrrTrunc, g) -> Fraction:
    """theta_Lambda(g) = phi_Lambda(g . v_Lambda): the highest-weight coordinate."""
    v = act_km_group(m, g, m.highest_weight_vector())
    return v.coefficient((0,) * m.gcm.n)


def multibracket_rootvector(gcm: GCM, seq) -> NcPoly:
    """Nested bracket of raising generators; acts through act_e_poly."""
    seq = tuple(int(i) for i in seq)
    for i in seq:
        if not 0 <= i < gcm.n:
            raise ValueError("generator index out of range")
    return words.multibracket(seq)


def rootvector_is_zero(m: IrrTrunc, poly: NcPoly, max_depth: int = None) -> bool:
    """Does the bracket act by zero on every basis vector within the truncation?"""
    max_depth = m.depth if max_depth is None else max_depth
    for k in itertools.product(range(max_depth + 1), repeat=m.gcm.n):
        if sum(k) > max_depth:
            continue
        ws = m.space(k)
        for b in range(ws.dim):
            coords = tuple(
                Fraction(1) if j == b else Fraction(0) for j in range(ws.dim)
            )
            if not act_e_poly(m, poly, TruncVector({k: coords})).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# Tensor squares, the Kostant cone, and Peter-Weyl rank.


def _tensor_blocks(m: IrrTrunc, total_k, extend: bool):
    """Sorted (k1, k2) pairs with k1 + k2 = total_k and both spaces nonzero."""
    n = m.gcm.n
    ranges = [range(t + 1) for t in total_k]
    blocks = []
    for k1 in itertools.product(*ranges):
        k2 = tuple(t - a for t, a in zip(total_k, k1))
        d1 = m.space(k1, extend).dim
        d2 = m.space(k2, extend).dim
        if d1 and d2:
            blocks.append((k1, k2, d1, d2))
    blocks.sort(key=lambda b: (b[0], b[1]))
    return blocks


def _flatten_tensor(blocks, tensor_parts):
    out = []
    for k1, k2, d1, d2 in blocks:
        coords = tensor_parts.get((k1, k2))
        if coords is None:
            out.extend([Fraction(0)] * (d1 * d2))
        else:
            out.extend(coords)
    return tuple(out)


def _tensor_f(m: IrrTrunc, i: int, parts: dict, extend: bool) -> dict:
    """f_i (x) 1 + 1 (x) f_i on a tensor vector keyed by weight pairs."""
    out = {}

    def accumulate(key, coords):
        if key in out:
            out[key] = tuple(a + b for a, b in zip(out[key], coords))
        else:
            out[key] = tuple(coords)

    for (k1, k2), coords in parts.items():
        d1 = m.space(k1, extend).dim
        d2 = m.space(k2, extend).dim
        m1 = m.f_matrix(i, k1, extend)
        if m1:
            t1 = tuple(x + (1 if j == i else 0) for j, x in enumerate(k1))
            td = m.space(t1, extend).dim
            new = [Fraction(0)] * (td * d2)
            for a in range(d1):
                for r in range(td):
                    c = m1[r][a]
                    if c:
                        for b in range(d2):
                            new[r * d2 + b] += c * coords[a * d2 + b]
            accumulate((t1, k2), new)
        m2 = m.f_matrix(i, k2, extend)
        if m2:
            t2 = tuple(x + (1 if j == i else 0) for j, x in enumerate(k2))
            td = m.space(t2, extend).dim
            new = [Fraction(0)] * (d1 * td)
            for b in range(d2):
                for r in range(td):
                    c = m2[r][b]
                    if c:
                        for a in range(d1):
                            new[a * td + r] += c * coords[a * d2 + b]
            accumulate((k1, t2), new)
    return {k: v for k, v in out.items() if any(x != 0 for x in v)}


def kostant_cone_test(m: IrrTrunc, v: TruncVector, m2: IrrTrunc = None) -> bool:
    """Is v (x) v inside the L(2 Lambda)-isotypical part of the tensor square?

    The isotypical component is generated from v_Lambda (x) v_Lambda by the
    lowering operators; membership is tested weight by weight with exact
    rank computations.  If a truncation of L(2 Lambda) is supplied, its
    multiplicities cross-check the dimensions of the component.
    """
    if v.is_zero():
        return True
    n = m.gcm.n
    max_total = 2 * v.max_depth()

    # generate the highest component level by level
    top_key = ((0,) * n, (0,) * n)
    level_vectors = {0: [{top_key: (Fraction(1),)}]}
    span_by_weight = {(0,) * n: None}
    spans = {}
    for depth in range(1, max_total + 1):
        vecs = []
        for parts in level_vectors[depth - 1]:
            for i in range(n):
                img = _tensor_f(m, i, parts, True)
                if img:
                    vecs.append(img)
        level_vectors[depth] = vecs

    def span_at(total_k):
        if total_k in spans:
            return spans[total_k]
        blocks = _tensor_blocks(m, total_k, True)
        ech = Echelon()
        for parts in level_vectors.get(sum(total_k), []):
            relevant = {
                key: coords for key, coords in parts.items()
                if tuple(a + b for a, b in zip(key[0], key[1])) == total_k
            }
            if relevant:
                ech.add(_flatten_tensor(blocks, relevant))
        if m2 is not None:
            assert ech.rank == m2.space(total_k, True).dim, total_k
        spans[total_k] = (blocks, ech)
        return spans[total_k]

    # components of v (x) v by total weight
    vv = {}
    for k1, c1 in v.parts.items():
        for k2, c2 in v.parts.items():
            key = (k1, k2)
            coords = linalg.vec_kron(c1, c2)
            if key in vv:
                vv[key] = tuple(a + b for a, b in zip(vv[key], coords))
            else:
                vv[key] = coords
    by_total = {}
    for (k1, k2), coords in vv.items():
        total = tuple(a + b for a, b in zip(k1, k2))
        by_total.setdefault(total, {})[(k1, k2)] = coords

    for total_k, parts in by_total.items():
        blocks, ech = span_at(total_k)
        flat = _flatten_tensor(blocks, parts)
        if linalg.is_zero_vec(flat):
            continue
        if not ech.contains(flat):
            return False
    return True


def peter_weyl_rank(entries, samples) -> int:
    """Rank of the evaluation matrix [f_{phi_j v_j}(g_k)].

    entries: (module, covector, vector) triples where the covector is a
    map depth-vector -> coordinate tuple.
    """
    rows = []
    for module, phi, v in entries:
        row = []
        for g in samples:
            gv = act_km_group(module, g, v)
            total = Fraction(0)
            for k, coords in gv.parts.items():
                pk = phi.get(tuple(k))
                if pk is not None:
                    total += linalg.dot(pk, coords)
            row.append(total)
        rows.append(row)
    return linalg.rank(rows)
