"""The two Lie algebras and the maps between them.

sl2(C) carries the basis {e, h, f} with [h,e] = 2e, [e,f] = h and
[h,f] = -2f.  The Virasoro algebra has basis {z, e_i : i in Z} with z
central and [e_i, e_j] = (j-i) e_{i+j} + delta_{j,-i} (i^3-i)/12 z.  The
embedding h -> 2 e_0, e -> e_1, f -> -e_{-1} identifies sl2 with
span{e_-1, e_0, e_1}.

Automorphisms of sl2 are stored as explicit 3x3 matrices over Q(i) in
(e, h, f) coordinates so that composition, inversion, exact equality and
recognition of the three named families (gamma, gamma2, sigma) are all
mechanical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidParameter,
    NotASubalgebra,
    WrongAlgebra,
)
from .laurent import LaurentPoly, check_window_poly
from .scalar import Scalar, sqrt_exact


class SL2Elt:
    """Coordinates (ce, ch, cf) in the basis {e, h, f}."""

    __slots__ = ("ce", "ch", "cf")

    def __init__(self, ce=0, ch=0, cf=0):
        object.__setattr__(self, "ce", Scalar.of(ce))
        object.__setattr__(self, "ch", Scalar.of(ch))
        object.__setattr__(self, "cf", Scalar.of(cf))

    def __setattr__(self, name, value):
        raise AttributeError("SL2Elt is immutable")

    def coords(self):
        return (self.ce, self.ch, self.cf)

    def is_zero(self) -> bool:
        return self.ce.is_zero() and self.ch.is_zero() and self.cf.is_zero()

    def __add__(self, other):
        return SL2Elt(self.ce + other.ce, self.ch + other.ch, self.cf + other.cf)

    def __sub__(self, other):
        return SL2Elt(self.ce - other.ce, self.ch - other.ch, self.cf - other.cf)

    def __neg__(self):
        return SL2Elt(-self.ce, -self.ch, -self.cf)

    def scale(self, c) -> "SL2Elt":
        c = Scalar.of(c)
        return SL2Elt(self.ce * c, self.ch * c, self.cf * c)

    def __eq__(self, other):
        if not isinstance(other, SL2Elt):
            return NotImplemented
        return self.coords() == other.coords()

    def __hash__(self):
        return hash(self.coords())

    def __str__(self):
        bits = []
        for c, name in zip(self.coords(), ("e", "h", "f")):
            if not c.is_zero():
                bits.append(f"({c})*{name}")
        return " + ".join(bits) if bits else "0"

    __repr__ = __str__

    def to_json(self):
        return {"e": self.ce.to_json(), "h": self.ch.to_json(), "f": self.cf.to_json()}

    @staticmethod
    def from_json(data) -> "SL2Elt":
        return SL2Elt(
            Scalar.from_json(data["e"]),
            Scalar.from_json(data["h"]),
            Scalar.from_json(data["f"]),
        )


E = SL2Elt(1, 0, 0)
H = SL2Elt(0, 1, 0)
F = SL2Elt(0, 0, 1)


def bracket_sl2(x: SL2Elt, y: SL2Elt) -> SL2Elt:
    """Bilinear antisymmetric extension of the three defining relations."""
    return SL2Elt(
        (x.ch * y.ce - x.ce * y.ch) * 2,
        x.ce * y.cf - x.cf * y.ce,
        (x.cf * y.ch - x.ch * y.cf) * 2,
    )


class VirElt:
    """Finite combination of e_i plus a central z component."""

    __slots__ = ("terms", "z")

    def __init__(self, terms=None, z=0):
        clean = {}
        if terms:
            for i, c in terms.items():
                c = Scalar.of(c)
                if not c.is_zero():
                    clean[int(i)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "z", Scalar.of(z))

    def __setattr__(self, name, value):
        raise AttributeError("VirElt is immutable")

    @staticmethod
    def e(i: int, coeff=1) -> "VirElt":
        return VirElt({i: coeff})

    @staticmethod
    def central(coeff=1) -> "VirElt":
        return VirElt({}, coeff)

    @staticmethod
    def from_laurent(p: LaurentPoly, z=0) -> "VirElt":
        return VirElt(dict(p.terms), z)

    def laurent_part(self) -> LaurentPoly:
        return LaurentPoly(dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms and self.z.is_zero()

    def __add__(self, other):
        out = dict(self.terms)
        for i, c in other.terms.items():
            s = out.get(i, Scalar.zero()) + c
            if s.is_zero():
                out.pop(i, None)
            else:
                out[i] = s
        return VirElt(out, self.z + other.z)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return VirElt({i: -c for i, c in self.terms.items()}, -self.z)

    def scale(self, c) -> "VirElt":
        c = Scalar.of(c)
        return VirElt({i: v * c for i, v in self.terms.items()}, self.z * c)

    def __eq__(self, other):
        if not isinstance(other, VirElt):
            return NotImplemented
        return self.terms == other.terms and self.z == other.z

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.z))

    def __str__(self):
        bits = [f"({c})*e_{i}" for i, c in sorted(self.terms.items())]
        if not self.z.is_zero():
            bits.append(f"({self.z})*z")
        return " + ".join(bits) if bits else "0"

    __repr__ = __str__

    def to_json(self):
        return {
            "terms": [[i, self.terms[i].to_json()] for i in sorted(self.terms)],
            "z": self.z.to_json(),
        }

    @staticmethod
    def from_json(data) -> "VirElt":
        return VirElt(
            {int(i): Scalar.from_json(c) for i, c in data["terms"]},
            Scalar.from_json(data["z"]),
        )


def bracket_vir(x: VirElt, y: VirElt) -> VirElt:
    """[e_i, e_j] = (j-i) e_{i+j} + delta_{j,-i} (i^3-i)/12 z; z central."""
    terms: dict[int, Scalar] = {}
    zpart = Scalar.zero()
    for i, ci in x.terms.items():
        for j, cj in y.terms.items():
            c = ci * cj
            coeff = c * (j - i)
            if not coeff.is_zero():
                s = terms.get(i + j, Scalar.zero()) + coeff
                if s.is_zero():
                    terms.pop(i + j, None)
                else:
                    terms[i + j] = s
            if j == -i:
                zpart = zpart + c * Scalar.of(i**3 - i) / 12
    return VirElt(terms, zpart)


def embed_sl2(x: SL2Elt) -> VirElt:
    """Linear extension of h -> 2 e_0, e -> e_1, f -> -e_{-1}."""
    return VirElt({1: x.ce, 0: x.ch * 2, -1: -x.cf})


def sl2_from_vir(v: VirElt) -> SL2Elt:
    """Inverse of the embedding; defined on span{e_-1, e_0, e_1} with no z."""
    if not v.z.is_zero() or any(i not in (-1, 0, 1) for i in v.terms):
        raise WrongAlgebra(f"{v} is not in the embedded sl2")
    return SL2Elt(v.terms.get(1, Scalar.zero()),
                  v.terms.get(0, Scalar.zero()) / 2,
                  -v.terms.get(-1, Scalar.zero()))


# -- automorphisms ----------------------------------------------------------

def _mat_vec(m, v):
    return tuple(sum((m[i][j] * v[j] for j in range(3)), Scalar.zero()) for i in range(3))


def _mat_mul(a, b):
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(3)), Scalar.zero()) for j in range(3))
        for i in range(3)
    )


def _mat_det(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _mat_inv(m):
    det = _mat_det(m)
    if det.is_zero():
        raise InvalidParameter("matrix is singular")
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != i]
            cols = [c for c in range(3) if c != j]
            minor = (
                m[rows[0]][cols[0]] * m[rows[1]][cols[1]]
                - m[rows[0]][cols[1]] * m[rows[1]][cols[0]]
            )
            sign = Scalar.of(1 if (i + j) % 2 == 0 else -1)
            cof[i][j] = minor * sign
    return tuple(tuple(cof[j][i] / det for j in range(3)) for i in range(3))


class Automorphism:
    """An sl2 automorphism as a 3x3 matrix on (e, h, f) coordinates.

    ``kind`` is one of identity / gamma / gamma2 / sigma / composite and is
    recomputed after composition or inversion by matching the matrix
    against the named families.
    """

    __slots__ = ("matrix", "kind", "params")

    def __init__(self, matrix, kind=None, params=()):
        matrix = tuple(tuple(Scalar.of(c) for c in row) for row in matrix)
        if _mat_det(matrix).is_zero():
            raise InvalidParameter("automorphism matrix must be invertible")
        object.__setattr__(self, "matrix", matrix)
        if kind is None:
            kind, params = _recognize(matrix)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(params))

    def __setattr__(self, name, value):
        raise AttributeError("Automorphism is immutable")

    @staticmethod
    def identity() -> "Automorphism":
        one, zero = Scalar.one(), Scalar.zero()
        return Automorphism(
            ((one, zero, zero), (zero, one, zero), (zero, zero, one)),
            "identity", ())

    @staticmethod
    def gamma(lam) -> "Automorphism":
        """e -> e - lam h - lam^2 f,  h -> h + 2 lam f,  f -> f."""
        lam = Scalar.of(lam)
        one, zero = Scalar.one(), Scalar.zero()
        m = (
            (one, zero, zero),
            (-lam, one, zero),
            (-(lam * lam), lam * 2, one),
        )
        if lam.is_zero():
            return Automorphism(m, "identity", ())
        return Automorphism(m, "gamma", (lam,))

    @staticmethod
    def gamma2(lam1, lam2) -> "Automorphism":
        """The two-parameter family; requires lam1 != lam2.

        e -> (e - lam1 h - lam1^2 f) / (lam2 - lam1)
        h -> (-2e + (lam1+lam2) h + 2 lam1 lam2 f) / (lam2 - lam1)
        f -> (-e + lam2 h + lam2^2 f) / (lam2 - lam1)
        """
        lam1, lam2 = Scalar.of(lam1), Scalar.of(lam2)
        if lam1 == lam2:
            raise InvalidParameter("gamma2 needs distinct parameters")
        d = lam2 - lam1
        m = (
            (Scalar.one() / d, Scalar.of(-2) / d, Scalar.of(-1) / d),
            (-lam1 / d, (lam1 + lam2) / d, lam2 / d),
            (-(lam1 * lam1) / d, lam1 * lam2 * 2 / d, lam2 * lam2 / d),
        )
        return Automorphism(m, "gamma2", (lam1, lam2))

    @staticmethod
    def sigma() -> "Automorphism":
        """The flip e <-> f, h -> -h."""
        one, zero = Scalar.one(), Scalar.zero()
        m = ((zero, zero, one), (zero, -one, zero), (one, zero, zero))
        return Automorphism(m, "sigma", ())

    def apply(self, x: SL2Elt) -> SL2Elt:
        return SL2Elt(*_mat_vec(self.matrix, x.coords()))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self after other."""
        return Automorphism(_mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "Automorphism":
        return Automorphism(_mat_inv(self.matrix))

    def preserves_brackets(self) -> bool:
        basis = (E, H, F)
        for x in basis:
            for y in basis:
                if self.apply(bracket_sl2(x, y)) != bracket_sl2(self.apply(x), self.apply(y)):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @property
    def tag(self) -> str:
        if self.kind in ("identity", "sigma", "composite"):
            return self.kind
        inner = ",".join(str(p) for p in self.params)
        return f"{self.kind}({inner})"

    def __repr__(self):
        return f"Automorphism[{self.tag}]"

    def to_json(self):
        return {
            "matrix": [c.to_json() for row in self.matrix for c in row],
            "tag": self.tag,
        }


def _recognize(matrix):
    if matrix == Automorphism.identity().matrix:
        return "identity", ()
    lam = -matrix[1][0]
    if not lam.is_zero() and matrix == Automorphism.gamma(lam).matrix:
        return "gamma", (lam,)
    if matrix == Automorphism.sigma().matrix:
        return "sigma", ()
    a, b = matrix[0][0], matrix[1][0]
    if not a.is_zero():
        d = Scalar.one() / a
        lam1 = -b / a
        lam2 = lam1 + d
        try:
            if matrix == Automorphism.gamma2(lam1, lam2).matrix:
                return "gamma2", (lam1, lam2)
        except InvalidParameter:
            pass
    return "composite", ()


# -- subalgebra classification ----------------------------------------------

@dataclass(frozen=True)
class SubalgebraClass1D:
    """A one-dimensional subalgebra: its kind, the carrying automorphism,
    and the canonical generator aut(std) where std is e or h."""

    kind: str  # n_lambda | n_minus | h_lambda | h_pair
    aut: Automorphism
    generator: SL2Elt
    params: tuple


@dataclass(frozen=True)
class SubalgebraClass2D:
    kind: str  # b_plus | b_minus | b_lambda
    aut: Automorphism
    params: tuple


def classify_subalgebra_1d(x: SL2Elt) -> SubalgebraClass1D:
    """Classify span{x} among the one-dimensional subalgebras.

    Inputs with a nonzero e-coordinate are rescaled to e - beta h - delta f.
    The case delta = beta^2 yields gamma_beta(Ce); otherwise the span is a
    Cartan conjugate gamma2(beta +/- sqrt(beta^2 - delta))(Ch), which needs
    the square root to stay inside Q(i).
    """
    if x.is_zero():
        raise InvalidParameter("cannot classify the zero span")
    if not x.ce.is_zero():
        beta = -x.ch / x.ce
        delta = -x.cf / x.ce
        if delta == beta * beta:
            aut = Automorphism.gamma(beta)
            return SubalgebraClass1D("n_lambda", aut, aut.apply(E), (beta,))
        root = sqrt_exact(beta * beta - delta)
        lam1, lam2 = beta + root, beta - root
        aut = Automorphism.gamma2(lam1, lam2)
        return SubalgebraClass1D("h_pair", aut, aut.apply(H), (lam1, lam2))
    if not x.ch.is_zero():
        delta = -x.cf / x.ch
        lam = -delta / 2
        aut = Automorphism.gamma(lam)
        return SubalgebraClass1D("h_lambda", aut, aut.apply(H), (lam,))
    aut = Automorphism.sigma()
    return SubalgebraClass1D("n_minus", aut, aut.apply(E), ())


def _solve_in_span(w: SL2Elt, x: SL2Elt, y: SL2Elt) -> bool:
    """Whether w lies in span{x, y} (x, y independent), checked exactly."""
    rows = [list(x.coords()), list(y.coords()), list(w.coords())]
    rank = 0
    for col in range(3):
        pivot = None
        for r in range(rank, 3):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for r in range(3):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col] / pv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank == 2


def classify_subalgebra_2d(x: SL2Elt, y: SL2Elt) -> SubalgebraClass2D:
    """Classify span{x, y} among the two-dimensional subalgebras.

    After closure is checked, the span either projects onto the (e, h)
    plane, giving a basis {h + alpha f, e + beta f} with alpha^2 = 4 beta
    (the conjugate gamma_{alpha/2} of span{h, e}), or contains f, which
    forces span{h, f}.
    """
    coords = [list(x.coords()), list(y.coords())]
    # row reduce on (e, h, f) columns
    rank = 0
    for col in range(3):
        pivot = None
        for r in range(rank, 2):
            if not coords[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        coords[rank], coords[pivot] = coords[pivot], coords[rank]
        pv = coords[rank][col]
        coords[rank] = [a / pv for a in coords[rank]]
        for r in range(2):
            if r != rank and not coords[r][col].is_zero():
                factor = coords[r][col]
                coords[r] = [a - factor * b for a, b in zip(coords[r], coords[rank])]
        rank += 1
        if rank == 2:
            break
    if rank < 2:
        raise InvalidParameter("inputs are linearly dependent")
    if not _solve_in_span(bracket_sl2(x, y), x, y):
        raise NotASubalgebra(f"span of {x} and {y} is not bracket-closed")
    r0, r1 = coords
    if not r0[0].is_zero() and not r1[1].is_zero():
        # basis {e + beta f, h + alpha f}; closure forces alpha^2 = 4 beta
        beta, alpha = r0[2], r1[2]
        if alpha * alpha != beta * 4:
            raise NotASubalgebra("closed span with inconsistent basis shape")
        if alpha.is_zero():
            return SubalgebraClass2D("b_plus", Automorphism.identity(), ())
        lam = alpha / 2
        return SubalgebraClass2D("b_lambda", Automorphism.gamma(lam), (lam,))
    return SubalgebraClass2D("b_minus", Automorphism.sigma(), ())


def intersect_virf_sl2(f: LaurentPoly, k: int | None = None) -> list[VirElt]:
    """Basis of the intersection of the embedded sl2 with span{z, t^i f}.

    These are the shifts t^i f whose support fits inside {-1, 0, 1}; there
    are exactly 3 - deg(f) of them, listed with i descending.
    """
    deg = check_window_poly(f)
    if k is not None and k != deg:
        raise BadPolynomial(f"stated degree {k} does not match {deg}")
    out = []
    for i in range(1 - deg, -2, -1):
        out.append(VirElt.from_laurent(f.shift(i)))
    return out
