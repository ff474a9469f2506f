"""Modules presented as left-ideal quotients of U(sl2), and the Virasoro
modules induced from polynomial subalgebras.

An :class:`InducedModule` is U(sl2) modulo the left ideal generated by
{s - mu(s) : s in a list of sl2 elements}, realised concretely: the ideal
rows nf(m * (s - mu(s))) for PBW monomials m up to the working depth are
put in reduced echelon form under degree-lex order, the non-pivot
monomials form the basis, and reduction is a single substitution pass.
This construction never assumes any isomorphism theorem about the
resulting module, which keeps downstream verification non-circular.

A :class:`VirPolyModule` is the induced module attached to the degree-k
subalgebra span{z, t^i f} (k in {1,2,3}, nonzero roots) and a character
mu with mu(z) = 0.  Its underlying space is the InducedModule on the
relations from the intersection with the embedded sl2; the action of a
Virasoro element is computed by commuting it rightward to the generator
(e_n . (x w) v = x (e_n w) v + [e_n, x] w v) and reducing e_m . v through
the window division t^m = q f + r, where q f acts through mu and the
window remainder r acts as an sl2 element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadPolynomial, DepthExceeded, InvalidParameter, NotInSubalgebra
from .laurent import LaurentPoly, divmod_window, reduce_power, sl2_window
from .lie import E, F, H, VirElt, bracket_vir, embed_sl2, sl2_from_vir
from .linalg import Echelon, degree_lex
from .modules import Module, ModVec
from .pbw import UEnvElt, gen_times_mono, monomial_letters, nf_multiply
from .scalar import Scalar, _make


def _cells_to_scalars(acc: dict) -> dict:
    return {k: _make(r, i) for k, (r, i) in acc.items() if r or i}


@dataclass(frozen=True)
class MuData:
    """Character data for a polynomial subalgebra.

    ``roots`` lists (lambda_i, n_i) with distinct nonzero lambda_i, and
    ``polys`` one coefficient tuple per root with deg p_i < n_i; the
    character sends t^j f to sum_i p_i(j) lambda_i^j and z to 0.
    """

    roots: tuple
    polys: tuple

    def __post_init__(self):
        roots = tuple((Scalar.of(lam), int(n)) for lam, n in self.roots)
        polys = tuple(tuple(Scalar.of(c) for c in p) for p in self.polys)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "polys", polys)
        for lam, n in roots:
            if lam.is_zero():
                raise BadPolynomial("roots must be nonzero")
            if n < 1:
                raise InvalidParameter("multiplicities must be positive")
        seen = set()
        for lam, _ in roots:
            if lam in seen:
                raise InvalidParameter("repeated root; merge multiplicities")
            seen.add(lam)
        if self.degree not in (1, 2, 3):
            raise BadPolynomial(f"total degree {self.degree} outside 1..3")
        if len(polys) != len(roots):
            raise InvalidParameter("need one coefficient tuple per root")
        for (lam, n), p in zip(roots, polys):
            if len(p) > n:
                raise InvalidParameter(f"deg p >= multiplicity at root {lam}")

    @property
    def degree(self) -> int:
        return sum(n for _, n in self.roots)

    def poly(self) -> LaurentPoly:
        return LaurentPoly.from_roots(self.roots)

    def value_at(self, j: int) -> Scalar:
        """mu(t^j f) = sum_i p_i(j) lambda_i^j."""
        total = Scalar.zero()
        for (lam, _), p in zip(self.roots, self.polys):
            pj = Scalar.zero()
            jp = Scalar.one()
            for c in p:
                pj = pj + c * jp
                jp = jp * j
            total = total + pj * lam**j
        return total

    def is_zero(self) -> bool:
        return all(c.is_zero() for p in self.polys for c in p)

    def to_json(self):
        return {
            "roots": [[lam.to_json(), n] for lam, n in self.roots],
            "polys": [[c.to_json() for c in p] for p in self.polys],
        }

    @staticmethod
    def from_json(data) -> "MuData":
        return MuData(
            tuple((Scalar.from_json(lam), int(n)) for lam, n in data["roots"]),
            tuple(tuple(Scalar.from_json(c) for c in p) for p in data["polys"]),
        )


def mu_eval(mu: MuData, w: VirElt) -> Scalar:
    """Evaluate the character on an element of span{z, t^i f}.

    The Laurent part must be exactly divisible by f (checked through the
    window reduction); the z component contributes nothing.
    """
    q, r = divmod_window(w.laurent_part(), mu.poly())
    if not r.is_zero():
        raise NotInSubalgebra(f"{w} is not in the polynomial subalgebra")
    total = Scalar.zero()
    for j, c in q.terms.items():
        total = total + c * mu.value_at(j)
    return total


def _monomials_up_to(depth: int):
    for total in range(depth + 1):
        for a in range(total, -1, -1):
            for b in range(total - a, -1, -1):
                yield (a, b, total - a - b)


class InducedModule(Module):
    """U(sl2) modulo the left ideal of {s - mu(s)}, depth-bounded."""

    family = "Induced"

    def __init__(self, relations, depth: int):
        if depth < 1:
            raise InvalidParameter("depth must be at least 1")
        self.relations = tuple((s, Scalar.of(v)) for s, v in relations)
        self.depth = int(depth)
        gens = [UEnvElt.from_sl2(s) - UEnvElt.one().scale(v) for s, v in self.relations]
        ech = Echelon(degree_lex)
        for mono in _monomials_up_to(self.depth - 1):
            lead = UEnvElt.monomial(mono)
            for g in gens:
                ech.insert(dict(nf_multiply(lead, g).terms))
        self._table = ech.reduction_table()
        self._basis = [m for m in _monomials_up_to(self.depth) if m not in self._table]
        self._basis_set = set(self._basis)
        if (0, 0, 0) not in self._basis_set:
            raise InvalidParameter("degenerate relations: the generator vanishes")

    def _reduce_dict(self, terms: dict) -> dict:
        out: dict = {}
        zero = Scalar.zero()
        table = self._table
        depth = self.depth
        for mono, coeff in terms.items():
            if sum(mono) > depth:
                raise DepthExceeded(
                    f"degree {sum(mono)} escapes the depth-{depth} window")
            tail = table.get(mono)
            if tail is None:
                s = out.get(mono, zero) + coeff
                if s.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = s
            else:
                for m2, c2 in tail.items():
                    s = out.get(m2, zero) + coeff * c2
                    if s.is_zero():
                        out.pop(m2, None)
                    else:
                        out[m2] = s
        return out

    def _reduce_u(self, u: UEnvElt) -> dict:
        return self._reduce_dict(u.terms)

    def reduce_class(self, u: UEnvElt) -> ModVec:
        """The canonical representative of u * generator."""
        return ModVec(self, self._reduce_u(u))

    def _lmul_letter_cells(self, letter: str, cr, ci, mono, acc: dict) -> None:
        """Accumulate (cr + ci*i) * (letter . mono), reduced, into raw cells."""
        table = self._table
        depth = self.depth
        for m2, k in gen_times_mono(letter, mono).items():
            if m2[0] + m2[1] + m2[2] > depth:
                raise DepthExceeded(
                    f"degree {sum(m2)} escapes the depth-{depth} window")
            pr = cr * k
            pi = ci * k
            tail = table.get(m2)
            if tail is None:
                cell = acc.get(m2)
                if cell is None:
                    acc[m2] = [pr, pi]
                else:
                    cell[0] += pr
                    cell[1] += pi
            else:
                for m3, c3 in tail.items():
                    er, ei = c3.re, c3.im
                    if pi or ei:
                        qr = pr * er - pi * ei
                        qi = pr * ei + pi * er
                    else:
                        qr = pr * er
                        qi = pi
                    cell = acc.get(m3)
                    if cell is None:
                        acc[m3] = [qr, qi]
                    else:
                        cell[0] += qr
                        cell[1] += qi

    def _act_key(self, x, key):
        acc: dict = {}
        for letter, coeff in (("e", x.ce), ("h", x.ch), ("f", x.cf)):
            if not coeff.is_zero():
                self._lmul_letter_cells(letter, coeff.re, coeff.im, key, acc)
        return _cells_to_scalars(acc)

    def validate_key(self, key):
        if key not in self._basis_set:
            raise InvalidParameter(f"{key!r} is not a normal-form monomial here")

    def key_depth(self, key):
        return sum(key)

    def basis_keys(self, depth):
        if depth > self.depth:
            raise DepthExceeded(f"window {depth} beyond table depth {self.depth}")
        return [m for m in self._basis if sum(m) <= depth]

    def key_sort_token(self, key):
        return degree_lex(key)

    def key_str(self, key):
        a, b, c = key
        return ("".join(s * n for s, n in zip(("f", "h", "e"), (a, b, c))) or "1") + " v"

    def key_json(self, key):
        return list(key)

    def key_from_json(self, data):
        return tuple(int(x) for x in data)

    def generator(self):
        return self.basis_vec((0, 0, 0))

    def generator_relations(self):
        return [(UEnvElt.from_sl2(s), v) for s, v in self.relations]

    def basis_words(self, depth):
        gens = {"e": E, "h": H, "f": F}
        return [(m, tuple(gens[g] for g in monomial_letters(m)))
                for m in self.basis_keys(depth)]

    def params_json(self):
        return {
            "relations": [[s.to_json(), v.to_json()] for s, v in self.relations],
            "depth": self.depth,
        }


class VirPolyModule(InducedModule):
    """The Virasoro module induced from a polynomial subalgebra character."""

    family = "VirPoly"
    accepts_vir = True
    _EMBEDDED = {"e": embed_sl2(E), "h": embed_sl2(H), "f": embed_sl2(F)}

    def __init__(self, mu: MuData, depth: int = 6):
        self.mu = mu
        self._f = mu.poly()
        self._window = sl2_window(mu.degree)
        relations = []
        for i in range(1 - mu.degree, -2, -1):
            shifted = VirElt.from_laurent(self._f.shift(i))
            relations.append((sl2_from_vir(shifted), mu.value_at(i)))
        super().__init__(relations, depth)
        self._en_cache: dict = {}

    def _act_en_key(self, n: int, mono) -> dict:
        """Reduced coordinates of e_n . (mono * v); memoised per handle.

        The cache only ever stores recomputable values, so concurrent use
        stays safe.
        """
        cached = self._en_cache.get((n, mono))
        if cached is not None:
            return cached
        if mono == (0, 0, 0):
            q, r = reduce_power(n, self._f, self._window)
            val = Scalar.zero()
            for j, c in q.terms.items():
                val = val + c * self.mu.value_at(j)
            r_sl2 = sl2_from_vir(VirElt.from_laurent(r))
            raw = {(0, 0, 0): val, (0, 0, 1): r_sl2.ce,
                   (0, 1, 0): r_sl2.ch, (1, 0, 0): r_sl2.cf}
            out = self._reduce_dict({m: c for m, c in raw.items()
                                     if not c.is_zero()})
        else:
            a, b, c = mono
            if a > 0:
                letter, rest = "f", (a - 1, b, c)
            elif b > 0:
                letter, rest = "h", (a, b - 1, c)
            else:
                letter, rest = "e", (a, b, c - 1)
            acc: dict = {}
            for m2, c2 in self._act_en_key(n, rest).items():
                self._lmul_letter_cells(letter, c2.re, c2.im, m2, acc)
            # [e_n, embedded letter]: the central part acts as zero
            br = bracket_vir(VirElt.e(n), self._EMBEDDED[letter])
            for m_idx, c2 in br.terms.items():
                cr, ci = c2.re, c2.im
                for m3, c3 in self._act_en_key(m_idx, rest).items():
                    dr, di = c3.re, c3.im
                    if ci or di:
                        pr = cr * dr - ci * di
                        pi = cr * di + ci * dr
                    else:
                        pr = cr * dr
                        pi = di
                    cell = acc.get(m3)
                    if cell is None:
                        acc[m3] = [pr, pi]
                    else:
                        cell[0] += pr
                        cell[1] += pi
            out = _cells_to_scalars(acc)
        self._en_cache[(n, mono)] = out
        return out

    def _act_vir_key(self, x: VirElt, key):
        acc: dict = {}
        for n, coeff in x.terms.items():
            cr, ci = coeff.re, coeff.im
            for m, c in self._act_en_key(n, key).items():
                dr, di = c.re, c.im
                if ci or di:
                    pr = cr * dr - ci * di
                    pi = cr * di + ci * dr
                else:
                    pr = cr * dr
                    pi = di
                cell = acc.get(m)
                if cell is None:
                    acc[m] = [pr, pi]
                else:
                    cell[0] += pr
                    cell[1] += pi
        # x.z acts as zero
        return _cells_to_scalars(acc)

    def params_json(self):
        out = self.mu.to_json()
        out["depth"] = self.depth
        return out
