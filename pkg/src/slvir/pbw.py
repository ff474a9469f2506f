"""U(sl2) in PBW normal form.

Elements are finite combinations of ordered monomials f^a h^b e^c (the
PBW order is f < h < e).  Products are straightened by recursive
single-swap rewriting: locate a misordered adjacent pair of generators,
replace it by the swapped pair plus the bracket term, and recurse.  Each
step either shortens the word or lowers its inversion count, so the
rewriting terminates; results are memoised per word.
"""

from __future__ import annotations

from .lie import SL2Elt
from .scalar import Scalar

_RANK = {"f": 0, "h": 1, "e": 2}

# single-letter brackets [x, y] as integer combinations of letters
_LETTER_BRACKET = {
    ("h", "e"): {"e": 2},
    ("e", "h"): {"e": -2},
    ("e", "f"): {"h": 1},
    ("f", "e"): {"h": -1},
    ("h", "f"): {"f": -2},
    ("f", "h"): {"f": 2},
}

_WORD_CACHE: dict[tuple[str, ...], dict[tuple[int, int, int], int]] = {}


def _word_normal_form(word: tuple[str, ...]) -> dict[tuple[int, int, int], int]:
    """Normal form of a word of generators; integer coefficients.

    Callers must not mutate the returned (cached) dict.
    """
    cached = _WORD_CACHE.get(word)
    if cached is not None:
        return cached
    swap_at = -1
    for idx in range(len(word) - 1):
        if _RANK[word[idx]] > _RANK[word[idx + 1]]:
            swap_at = idx
            break
    if swap_at < 0:
        mono = (word.count("f"), word.count("h"), word.count("e"))
        result = {mono: 1}
    else:
        x, y = word[swap_at], word[swap_at + 1]
        result = dict(_word_normal_form(word[:swap_at] + (y, x) + word[swap_at + 2:]))
        for letter, coeff in _LETTER_BRACKET[(x, y)].items():
            sub = _word_normal_form(word[:swap_at] + (letter,) + word[swap_at + 2:])
            for mono, c in sub.items():
                s = result.get(mono, 0) + coeff * c
                if s:
                    result[mono] = s
                else:
                    result.pop(mono, None)
    _WORD_CACHE[word] = result
    return result


def monomial_letters(mono: tuple[int, int, int]) -> tuple[str, ...]:
    a, b, c = mono
    return ("f",) * a + ("h",) * b + ("e",) * c


def gen_times_mono(letter: str, mono) -> dict[tuple[int, int, int], int]:
    """Normal form of generator * monomial; cached, do not mutate."""
    return _word_normal_form((letter,) + monomial_letters(mono))


class UEnvElt:
    """Finite map (a, b, c) -> nonzero Scalar for the monomial f^a h^b e^c."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Scalar.of(coeff)
                if not coeff.is_zero():
                    clean[tuple(int(x) for x in mono)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UEnvElt is immutable")

    @classmethod
    def _raw(cls, terms: dict) -> "UEnvElt":
        # internal: terms must already map tuples to nonzero Scalars
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        return obj

    @staticmethod
    def zero() -> "UEnvElt":
        return UEnvElt()

    @staticmethod
    def one() -> "UEnvElt":
        return UEnvElt({(0, 0, 0): 1})

    @staticmethod
    def monomial(mono, coeff=1) -> "UEnvElt":
        return UEnvElt({tuple(mono): coeff})

    @staticmethod
    def from_sl2(x: SL2Elt) -> "UEnvElt":
        return UEnvElt({(0, 0, 1): x.ce, (0, 1, 0): x.ch, (1, 0, 0): x.cf})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Scalar.zero()) + c
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
        return UEnvElt._raw(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UEnvElt._raw({m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "UEnvElt":
        c = Scalar.of(c)
        if c.is_zero():
            return UEnvElt._raw({})
        return UEnvElt._raw({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        return nf_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, UEnvElt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), m)):
            a, b, c = mono
            name = "".join(s * n for s, n in zip(("f", "h", "e"), (a, b, c))) or "1"
            bits.append(f"({self.terms[mono]})*{name}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self):
        return [[list(m), self.terms[m].to_json()]
                for m in sorted(self.terms, key=lambda m: (sum(m), m))]

    @staticmethod
    def from_json(data) -> "UEnvElt":
        return UEnvElt({tuple(m): Scalar.from_json(c) for m, c in data})


def nf_multiply(u: UEnvElt, v: UEnvElt) -> UEnvElt:
    """The normal form of the product u*v in U(sl2)."""
    out: dict[tuple[int, int, int], Scalar] = {}
    zero = Scalar.zero()
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            c = c1 * c2
            word = monomial_letters(m1) + monomial_letters(m2)
            for mono, k in _word_normal_form(word).items():
                s = out.get(mono, zero) + c * k
                if s.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = s
    return UEnvElt._raw(out)


def casimir_elt() -> UEnvElt:
    """The central element 4fe + (h+1)^2 in normal form."""
    fe = nf_multiply(UEnvElt.from_sl2(SL2Elt(0, 0, 1)), UEnvElt.from_sl2(SL2Elt(1, 0, 0)))
    h_plus_1 = UEnvElt({(0, 1, 0): 1, (0, 0, 0): 1})
    return fe.scale(4) + nf_multiply(h_plus_1, h_plus_1)


def aut_extend(aut, u: UEnvElt) -> UEnvElt:
    """Apply an sl2 automorphism to every tensor factor and renormalise.

    This is the unique algebra-homomorphism extension of the automorphism
    to U(sl2).
    """
    images = {
        "f": UEnvElt.from_sl2(aut.apply(SL2Elt(0, 0, 1))),
        "h": UEnvElt.from_sl2(aut.apply(SL2Elt(0, 1, 0))),
        "e": UEnvElt.from_sl2(aut.apply(SL2Elt(1, 0, 0))),
    }
    out = UEnvElt.zero()
    for mono, coeff in u.terms.items():
        prod = UEnvElt.one()
        for letter in monomial_letters(mono):
            prod = nf_multiply(prod, images[letter])
        out = out + prod.scale(coeff)
    return out
