"""JSON serialization for the CLI: rationals as "p/q", words as dotted names.

Every encoder/decoder pair round-trips exactly; decoders raise
:class:`SchemaError` naming the offending field.
"""
from __future__ import annotations

from fractions import Fraction

from . import grp, words
from .duals import FiniteFunctional, MatrixCoefficient
from .grp import GroupWord, OneParamFactor
from .reps import RepSpec
from .words import Alphabet, NcPoly


class SchemaError(ValueError):
    pass


def encode_fraction(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def decode_fraction(s, field: str = "coeff") -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{field}: {s!r} is not a rational 'p/q'") from exc


KIND_NAMES = {words.NILPOTENT: "locally-nilpotent", words.DIAGONAL: "diagonalizable-integer"}
KIND_VALUES = {v: k for k, v in KIND_NAMES.items()}


def encode_alphabet(alphabet: Alphabet) -> dict:
    return {
        "names": list(alphabet.names),
        "kinds": [KIND_NAMES[k] for k in alphabet.kinds],
    }


def decode_alphabet(obj) -> Alphabet:
    if not isinstance(obj, dict) or "names" not in obj:
        raise SchemaError("alphabet: expected {names, kinds?}")
    kinds = obj.get("kinds")
    if kinds is not None:
        try:
            kinds = [KIND_VALUES[k] for k in kinds]
        except KeyError as exc:
            raise SchemaError(f"alphabet.kinds: unknown kind {exc.args[0]!r}") from exc
    try:
        return Alphabet(obj["names"], kinds)
    except ValueError as exc:
        raise SchemaError(f"alphabet: {exc}") from exc


def encode_word(alphabet: Alphabet, w) -> str:
    return alphabet.word_str(w)


def decode_word(alphabet: Alphabet, text, field: str = "word"):
    try:
        return alphabet.word(str(text))
    except KeyError as exc:
        raise SchemaError(f"{field}: unknown letter {exc.args[0]!r}") from exc


def encode_ncpoly(alphabet: Alphabet, x: NcPoly) -> list:
    return [
        {"word": alphabet.word_str(w), "coeff": encode_fraction(c)}
        for w, c in x.items()
    ]


def decode_ncpoly(alphabet: Alphabet, obj) -> NcPoly:
    if not isinstance(obj, list):
        raise SchemaError("poly: expected a list of {word, coeff}")
    terms = {}
    for i, term in enumerate(obj):
        if not isinstance(term, dict) or "word" not in term:
            raise SchemaError(f"poly[{i}]: expected {{word, coeff}}")
        w = decode_word(alphabet, term["word"], f"poly[{i}].word")
        c = decode_fraction(term.get("coeff", "1"), f"poly[{i}].coeff")
        terms[w] = terms.get(w, Fraction(0)) + c
    return NcPoly(terms)


def encode_vector(v) -> list:
    return [encode_fraction(x) for x in v]


def decode_vector(obj, field: str = "vector") -> tuple:
    if not isinstance(obj, list):
        raise SchemaError(f"{field}: expected a list of rationals")
    return tuple(decode_fraction(x, f"{field}[{i}]") for i, x in enumerate(obj))


def encode_matrix(m) -> list:
    return [encode_vector(row) for row in m]


def decode_matrix(obj, field: str = "matrix") -> tuple:
    if not isinstance(obj, list):
        raise SchemaError(f"{field}: expected a list of rows")
    return tuple(decode_vector(row, f"{field}[{i}]") for i, row in enumerate(obj))


def encode_rep(rep: RepSpec) -> dict:
    out = {
        "dim": rep.dim,
        "letters": [
            {
                "name": rep.alphabet.names[e],
                "kind": KIND_NAMES[rep.kind(e)],
                "matrix": encode_matrix(rep.matrices[e]),
            }
            for e in rep.alphabet.letters()
        ],
    }
    if rep.labels is not None:
        out["labels"] = [
            l if isinstance(l, str) else rep.alphabet.word_str(l) for l in rep.labels
        ]
    return out


def decode_rep(obj) -> RepSpec:
    if not isinstance(obj, dict) or "dim" not in obj or "letters" not in obj:
        raise SchemaError("rep: expected {dim, letters, labels?}")
    try:
        dim = int(obj["dim"])
    except (TypeError, ValueError) as exc:
        raise SchemaError("rep.dim: expected an integer") from exc
    letters = obj["letters"]
    if not isinstance(letters, list) or not letters:
        raise SchemaError("rep.letters: expected a nonempty list")
    names, kinds, matrices = [], [], {}
    for i, entry in enumerate(letters):
        if not isinstance(entry, dict) or "name" not in entry:
            raise SchemaError(f"rep.letters[{i}]: expected {{name, kind, matrix}}")
        names.append(str(entry["name"]))
        kind = entry.get("kind", "locally-nilpotent")
        if kind not in KIND_VALUES:
            raise SchemaError(f"rep.letters[{i}].kind: unknown kind {kind!r}")
        kinds.append(KIND_VALUES[kind])
        matrices[i] = decode_matrix(
            entry.get("matrix", [[0] * dim for _ in range(dim)]),
            f"rep.letters[{i}].matrix",
        )
    alphabet = Alphabet(names, kinds)
    labels = obj.get("labels")
    try:
        return RepSpec(alphabet, dim, matrices, labels)
    except ValueError as exc:
        raise SchemaError(f"rep: {exc}") from exc


def encode_functional(h, alphabet: Alphabet = None) -> dict:
    if isinstance(h, FiniteFunctional):
        if alphabet is None:
            raise ValueError("finite functionals need an alphabet to serialize")
        return {
            "kind": "finite",
            "terms": [
                {"word": alphabet.word_str(w), "coeff": encode_fraction(c)}
                for w, c in h.items()
            ],
        }
    return {
        "kind": "matrix-coefficient",
        "rep": encode_rep(h.rep),
        "phi": encode_vector(h.phi),
        "v": encode_vector(h.v),
    }


def decode_functional(obj, alphabet: Alphabet = None):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError("functional: expected {kind, ...}")
    kind = obj["kind"]
    if kind == "finite":
        if alphabet is None:
            raise SchemaError("functional: finite terms need an alphabet in context")
        terms = {}
        for i, term in enumerate(obj.get("terms", [])):
            w = decode_word(alphabet, term["word"], f"functional.terms[{i}].word")
            c = decode_fraction(term.get("coeff", "1"), f"functional.terms[{i}].coeff")
            terms[w] = terms.get(w, Fraction(0)) + c
        return FiniteFunctional(terms)
    if kind == "matrix-coefficient":
        rep = decode_rep(obj.get("rep"))
        phi = decode_vector(obj.get("phi"), "functional.phi")
        v = decode_vector(obj.get("v"), "functional.v")
        try:
            return MatrixCoefficient(rep, phi, v)
        except ValueError as exc:
            raise SchemaError(f"functional: {exc}") from exc
    raise SchemaError(f"functional.kind: unknown kind {kind!r}")


FACTOR_KIND_NAMES = {words.NILPOTENT: "exp", words.DIAGONAL: "torus"}
FACTOR_KIND_VALUES = {v: k for k, v in FACTOR_KIND_NAMES.items()}


def encode_group_word(alphabet: Alphabet, g: GroupWord) -> list:
    return [
        {
            "letter": alphabet.names[f.letter],
            "kind": FACTOR_KIND_NAMES[f.kind],
            "param": encode_fraction(f.param),
        }
        for f in g
    ]


def decode_group_word(alphabet: Alphabet, obj) -> GroupWord:
    if not isinstance(obj, list):
        raise SchemaError("group: expected a list of factors")
    factors = []
    for i, entry in enumerate(obj):
        if not isinstance(entry, dict) or "letter" not in entry:
            raise SchemaError(f"group[{i}]: expected {{letter, kind, param}}")
        try:
            letter = alphabet.index(str(entry["letter"]))
        except KeyError as exc:
            raise SchemaError(f"group[{i}].letter: unknown letter {exc.args[0]!r}") from exc
        kind = entry.get("kind", "exp")
        if kind not in FACTOR_KIND_VALUES:
            raise SchemaError(f"group[{i}].kind: expected 'exp' or 'torus'")
        param = decode_fraction(entry.get("param", "1"), f"group[{i}].param")
        try:
            factors.append(OneParamFactor(letter, FACTOR_KIND_VALUES[kind], param))
        except ValueError as exc:
            raise SchemaError(f"group[{i}]: {exc}") from exc
    return GroupWord(factors)


def encode_rho_expansion(alphabet: Alphabet, exp) -> dict:
    return {
        "tuple": [alphabet.names[e] for e in exp.letters],
        "coeffs": [
            {"k": list(ks), "c": encode_fraction(c)} for ks, c in exp.items()
        ],
    }


def encode_taylor(poly: grp.TaylorPolynomial) -> dict:
    return {
        "nvars": poly.nvars,
        "terms": [{"k": list(ks), "c": encode_fraction(c)} for ks, c in poly.items()],
    }


def encode_gcm(gcm) -> dict:
    return {
        "matrix": [list(row) for row in gcm.a],
        "symmetrizer": [encode_fraction(d) for d in gcm.d],
    }


def decode_gcm_matrix(obj):
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise SchemaError("gcm: expected {matrix}")
    rows = obj["matrix"]
    if not isinstance(rows, list):
        raise SchemaError("gcm.matrix: expected a list of rows")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise SchemaError(f"gcm.matrix[{i}]: expected a list of integers")
        try:
            out.append([int(x) for x in row])
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"gcm.matrix[{i}]: entries must be integers") from exc
    return out
