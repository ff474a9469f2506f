"""Sparse Laurent polynomials over Q(i) and window reduction modulo t^i*f.

A Laurent polynomial is a finite map exponent -> nonzero Scalar.  The key
operation beyond ring arithmetic is :func:`divmod_window`: writing any
p(t) as q(t)*f(t) + r(t) with r supported on a fixed complement window of
the lattice spanned by {t^i f}.  For f of degree k with nonzero constant
and leading coefficients the windows are

    k = 1: {0}      k = 2: {0, 1}      k = 3: {-1, 0, 1}

Each window spans a complement because nonzero multiples of f have width
at least k while window-supported polynomials have width below k, so the
quotient and remainder are unique.
"""

from __future__ import annotations

from .errors import BadPolynomial
from .scalar import Scalar


class LaurentPoly:
    """Finite exponent -> Scalar map; the empty map is zero."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Scalar.of(coeff)
                if not coeff.is_zero():
                    clean[int(exp)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def t(exp: int = 1, coeff=1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def from_roots(roots) -> "LaurentPoly":
        """Expand prod (t - lam)^mult for [(lam, mult), ...]."""
        out = LaurentPoly.one()
        for lam, mult in roots:
            factor = LaurentPoly({1: 1, 0: -Scalar.of(lam)})
            for _ in range(int(mult)):
                out = out * factor
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp: int) -> Scalar:
        return self.terms.get(exp, Scalar.zero())

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def width(self) -> int:
        return self.max_exp() - self.min_exp()

    def __add__(self, other):
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, Scalar.zero()) + c
            if s.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = s
        return LaurentPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        out: dict[int, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, Scalar.zero()) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(out)

    def scale(self, c) -> "LaurentPoly":
        c = Scalar.of(c)
        return LaurentPoly({e: v * c for e, v in self.terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms):
            bits.append(f"({self.terms[exp]})*t^{exp}")
        return " + ".join(bits)

    __repr__ = __str__

    def to_json(self):
        return [[e, self.terms[e].to_json()] for e in sorted(self.terms)]

    @staticmethod
    def from_json(data) -> "LaurentPoly":
        return LaurentPoly({int(e): Scalar.from_json(c) for e, c in data})


def sl2_window(k: int) -> tuple[int, ...]:
    """The fixed complement window for a degree-k polynomial."""
    if k == 1:
        return (0,)
    if k == 2:
        return (0, 1)
    if k == 3:
        return (-1, 0, 1)
    raise BadPolynomial(f"degree {k} outside the supported range 1..3")


def check_window_poly(f: LaurentPoly) -> int:
    """Validate support on 0..k with nonzero ends, k in {1,2,3}; return k."""
    if f.is_zero():
        raise BadPolynomial("zero polynomial")
    if f.min_exp() != 0:
        raise BadPolynomial("constant coefficient must be nonzero")
    k = f.max_exp()
    if k not in (1, 2, 3):
        raise BadPolynomial(f"degree {k} outside the supported range 1..3")
    return k


def divmod_window(p: LaurentPoly, f: LaurentPoly, window=None):
    """Write p = q*f + r with support(r) inside the window; return (q, r).

    Eliminates exponents above the window with the leading coefficient and
    exponents below it with the constant coefficient; each step strictly
    shrinks the out-of-window support interval, and neither phase can
    reintroduce exponents eliminated by the other.
    """
    k = check_window_poly(f)
    if window is None:
        window = sl2_window(k)
    lo, hi = min(window), max(window)
    a0 = f.coeff(0)
    ak = f.coeff(k)
    q = LaurentPoly.zero()
    r = p
    while not r.is_zero() and r.max_exp() > hi:
        m = r.max_exp()
        c = r.coeff(m) / ak
        q = q + LaurentPoly.t(m - k, c)
        r = r - f.shift(m - k).scale(c)
    while not r.is_zero() and r.min_exp() < lo:
        m = r.min_exp()
        c = r.coeff(m) / a0
        q = q + LaurentPoly.t(m, c)
        r = r - f.shift(m).scale(c)
    return q, r


def reduce_power(n: int, f: LaurentPoly, window=None):
    """divmod_window specialised to p = t^n."""
    return divmod_window(LaurentPoly.t(int(n)), f, window)
