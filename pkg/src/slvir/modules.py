"""The module zoo: every family with a uniform exact action interface.

Families over sl2: the e-induced family W(eta) with basis f^a h^b x, the
Cartan-induced family X(xi) with basis f^k e^l x, its Casimir quotient
Xbar(xi, tau), the dense weight modules Vdense(xi, tau), highest and
lowest weight Verma modules, automorphism twists and tensor products.
Modules over the Virasoro algebra induced from polynomial subalgebras
live in :mod:`slvir.induced` and share this interface.

Closed-form actions (Vdense, Verma, Xbar) are the default path; where an
independent generic route exists (multiply in U(sl2) and substitute, or
act upstairs in X and reduce) it is implemented alongside and the test
suite cross-checks the two.
"""

from __future__ import annotations

import json

from .errors import InvalidParameter, NotWeightModule, WrongAlgebra
from .lie import E, F, H, SL2Elt, VirElt
from .pbw import UEnvElt, casimir_elt, monomial_letters, nf_multiply, aut_extend
from .scalar import Scalar, _make


class ModVec:
    """Finite basis-key -> Scalar vector in a fixed module."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                coeff = Scalar.of(coeff)
                if not coeff.is_zero():
                    clean[key] = coeff
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ModVec is immutable")

    @classmethod
    def _raw(cls, module, terms: dict) -> "ModVec":
        # internal: terms must already map valid keys to nonzero Scalars
        obj = object.__new__(cls)
        object.__setattr__(obj, "module", module)
        object.__setattr__(obj, "terms", terms)
        return obj

    def is_zero(self) -> bool:
        return not self.terms

    def _same_module(self, other):
        if self.module is not other.module and self.module != other.module:
            raise InvalidParameter("vectors live in different modules")

    def __add__(self, other):
        self._same_module(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, Scalar.zero()) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return ModVec._raw(self.module, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "ModVec":
        c = Scalar.of(c)
        if c.is_zero():
            return ModVec._raw(self.module, {})
        return ModVec._raw(self.module, {k: v * c for k, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, ModVec):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __hash__(self):
        return hash((self.module, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.module.key_sort_token(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{self.module.key_str(k)}]" for k, c in self.sorted_terms())

    __repr__ = __str__

    def to_json(self):
        return {
            "schema": "modvec/1",
            "family": self.module.family,
            "params": self.module.params_json(),
            "terms": [[self.module.key_json(k), c.to_json()] for k, c in self.sorted_terms()],
        }


class Module:
    """Shared interface of the module families."""

    family = "abstract"
    accepts_vir = False
    is_weight_family = False

    # -- vectors -------------------------------------------------------------

    def zero(self) -> ModVec:
        return ModVec(self, {})

    def basis_vec(self, key, coeff=1) -> ModVec:
        self.validate_key(key)
        return ModVec(self, {key: coeff})

    def vector(self, mapping) -> ModVec:
        for key in mapping:
            self.validate_key(key)
        return ModVec(self, mapping)

    # -- the action ----------------------------------------------------------

    def act(self, x, vec: ModVec) -> ModVec:
        """Exact action of an algebra element; linear in x and vec."""
        if vec.module is not self and vec.module != self:
            raise InvalidParameter("vector does not belong to this module")
        if isinstance(x, SL2Elt):
            key_act = self._act_key
        elif isinstance(x, VirElt):
            if not self.accepts_vir:
                raise WrongAlgebra(f"{self.family} only accepts sl2 elements")
            key_act = self._act_vir_key
        else:
            raise TypeError(f"cannot act by {x!r}")
        # accumulate on raw rational pairs to avoid wrapper churn
        acc: dict = {}
        for key, coeff in vec.terms.items():
            cr, ci = coeff.re, coeff.im
            for k2, c2 in key_act(x, key).items():
                dr, di = c2.re, c2.im
                if ci or di:
                    pr = cr * dr - ci * di
                    pi = cr * di + ci * dr
                else:
                    pr = cr * dr
                    pi = di
                cell = acc.get(k2)
                if cell is None:
                    acc[k2] = [pr, pi]
                else:
                    cell[0] += pr
                    cell[1] += pi
        out = {k: _make(r, i) for k, (r, i) in acc.items() if r or i}
        return ModVec._raw(self, out)

    def _act_key(self, x: SL2Elt, key) -> dict:
        raise NotImplementedError

    def _act_vir_key(self, x: VirElt, key) -> dict:
        raise WrongAlgebra(f"{self.family} only accepts sl2 elements")

    # -- structure metadata ---------------------------------------------------

    def validate_key(self, key):
        raise NotImplementedError

    def key_depth(self, key) -> int:
        raise NotImplementedError

    def key_weight(self, key) -> Scalar:
        raise NotWeightModule(f"{self.family} is not a weight-module family")

    def basis_keys(self, depth: int) -> list:
        raise NotImplementedError

    def key_sort_token(self, key):
        return key

    def key_str(self, key) -> str:
        return str(key)

    def key_json(self, key):
        return key

    def key_from_json(self, data):
        return data

    # -- cyclic-module data (families used as map sources) --------------------

    def generator(self) -> ModVec:
        raise NotImplementedError(f"{self.family} has no distinguished generator")

    def generator_relations(self) -> list:
        """Pairs (u, s) with u in U(sl2) and u . generator == s * generator."""
        raise NotImplementedError(f"{self.family} has no generator relations")

    def basis_words(self, depth: int) -> list:
        """Pairs (key, word) where word is a tuple of sl2 elements whose
        right-to-left application to the generator yields the basis vector."""
        raise NotImplementedError(f"{self.family} has no free monomial basis")

    # -- identity --------------------------------------------------------------

    def params_json(self):
        return {}

    def signature(self) -> str:
        cached = getattr(self, "_signature", None)
        if cached is None:
            cached = json.dumps({"family": self.family, "params": self.params_json()},
                                sort_keys=True)
            self._signature = cached
        return cached

    def __eq__(self, other):
        if other is self:
            return True
        if not isinstance(other, Module):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return self.signature()


def _pairs_up_to(depth: int):
    for total in range(depth + 1):
        for first in range(total, -1, -1):
            yield (first, total - first)


class WModule(Module):
    """Induced from Ce with e acting by eta; basis keys (a, b) for f^a h^b x.

    The action multiplies in U(sl2) and substitutes e -> eta on the right.
    """

    family = "W"

    def __init__(self, eta):
        self.eta = Scalar.of(eta)

    def _act_key(self, x, key):
        a, b = key
        u = nf_multiply(UEnvElt.from_sl2(x), UEnvElt.monomial((a, b, 0)))
        out: dict = {}
        for (a2, b2, c2), coeff in u.terms.items():
            val = coeff * self.eta**c2
            k2 = (a2, b2)
            s = out.get(k2, Scalar.zero()) + val
            if s.is_zero():
                out.pop(k2, None)
            else:
                out[k2] = s
        return out

    def validate_key(self, key):
        if not (isinstance(key, tuple) and len(key) == 2
                and all(isinstance(v, int) and v >= 0 for v in key)):
            raise InvalidParameter(f"bad W key {key!r}")

    def key_depth(self, key):
        return key[0] + key[1]

    def basis_keys(self, depth):
        return list(_pairs_up_to(depth))

    def key_str(self, key):
        return f"f^{key[0]} h^{key[1]} x"

    def key_json(self, key):
        return list(key)

    def key_from_json(self, data):
        return (int(data[0]), int(data[1]))

    def generator(self):
        return self.basis_vec((0, 0))

    def generator_relations(self):
        return [(UEnvElt.from_sl2(E), self.eta)]

    def basis_words(self, depth):
        return [((a, b), (F,) * a + (H,) * b) for a, b in _pairs_up_to(depth)]

    def params_json(self):
        return {"eta": self.eta.to_json()}


class XModule(Module):
    """Induced from Ch with h acting by xi; basis keys (k, l) for f^k e^l x."""

    family = "X"
    is_weight_family = True

    def __init__(self, xi):
        self.xi = Scalar.of(xi)

    def _act_key(self, x, key):
        k, l = key
        u = nf_multiply(UEnvElt.from_sl2(x), UEnvElt.monomial((k, 0, l)))
        out: dict = {}
        for (a2, b2, c2), coeff in u.terms.items():
            val = coeff * (self.xi + 2 * c2) ** b2
            k2 = (a2, c2)
            s = out.get(k2, Scalar.zero()) + val
            if s.is_zero():
                out.pop(k2, None)
            else:
                out[k2] = s
        return out

    def validate_key(self, key):
        if not (isinstance(key, tuple) and len(key) == 2
                and all(isinstance(v, int) and v >= 0 for v in key)):
            raise InvalidParameter(f"bad X key {key!r}")

    def key_depth(self, key):
        return key[0] + key[1]

    def key_weight(self, key):
        return self.xi + 2 * (key[1] - key[0])

    def basis_keys(self, depth):
        return list(_pairs_up_to(depth))

    def key_str(self, key):
        return f"f^{key[0]} e^{key[1]} x"

    def key_json(self, key):
        return list(key)

    def key_from_json(self, data):
        return (int(data[0]), int(data[1]))

    def generator(self):
        return self.basis_vec((0, 0))

    def generator_relations(self):
        return [(UEnvElt.from_sl2(H), self.xi)]

    def basis_words(self, depth):
        return [((k, l), (F,) * k + (E,) * l) for k, l in _pairs_up_to(depth)]

    def params_json(self):
        return {"xi": self.xi.to_json()}


class XbarModule(Module):
    """The quotient of X(xi) on which the Casimir acts by tau.

    Basis keys ("e", l) for l >= 0 and ("f", k) for k >= 1; the key
    ("e", 0) is the generator.  The closed forms below come from rewriting
    fe = (c - (h+1)^2)/4 with c -> tau and h -> the weight; act_generic
    recomputes them by acting upstairs in X(xi) and reducing.
    """

    family = "Xbar"
    is_weight_family = True

    def __init__(self, xi, tau):
        self.xi = Scalar.of(xi)
        self.tau = Scalar.of(tau)
        self._x = XModule(self.xi)

    def _fe_scalar(self, l: int) -> Scalar:
        # action of fe on the weight-(xi + 2(l-1)) vector e^{l-1} x
        w = self.xi + 2 * l - 1
        return (self.tau - w * w) / 4

    def _act_key(self, x, key):
        out: dict = {}

        def add(k, c):
            if c.is_zero():
                return
            s = out.get(k, Scalar.zero()) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s

        side, n = key
        if side == "e":
            add(("e", n + 1), x.ce)
            add(key, x.ch * (self.xi + 2 * n))
            if not x.cf.is_zero():
                if n >= 1:
                    tgt = ("e", n - 1)
                    add(tgt, x.cf * self._fe_scalar(n))
                else:
                    add(("f", 1), x.cf)
        else:
            if not x.ce.is_zero():
                coeff = self._fe_scalar(1) + n * self.xi - Scalar.of(n * (n - 1))
                tgt = ("f", n - 1) if n > 1 else ("e", 0)
                add(tgt, x.ce * coeff)
            add(key, x.ch * (self.xi - 2 * n))
            add(("f", n + 1), x.cf)
        return out

    def lift_key(self, key):
        side, n = key
        return (0, n) if side == "e" else (n, 0)

    def reduce_x_terms(self, terms: dict) -> dict:
        """Project X(xi) coordinates onto the quotient basis."""
        out: dict = {}
        for (k, l), coeff in terms.items():
            while k >= 1 and l >= 1:
                coeff = coeff * self._fe_scalar(l)
                k -= 1
                l -= 1
            key = ("e", l) if k == 0 else ("f", k)
            s = out.get(key, Scalar.zero()) + coeff
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return out

    def act_generic(self, x, vec: ModVec) -> ModVec:
        """Oracle route: act in X(xi), then reduce to the quotient basis."""
        acc: dict = {}
        for key, coeff in vec.terms.items():
            inner = self._x._act_key(x, self.lift_key(key))
            for k2, c2 in self.reduce_x_terms(inner).items():
                s = acc.get(k2, Scalar.zero()) + coeff * c2
                if s.is_zero():
                    acc.pop(k2, None)
                else:
                    acc[k2] = s
        return ModVec(self, acc)

    def validate_key(self, key):
        ok = (isinstance(key, tuple) and len(key) == 2 and key[0] in ("e", "f")
              and isinstance(key[1], int)
              and (key[1] >= 0 if key[0] == "e" else key[1] >= 1))
        if not ok:
            raise InvalidParameter(f"bad Xbar key {key!r}")

    def key_depth(self, key):
        return key[1]

    def key_weight(self, key):
        side, n = key
        return self.xi + 2 * n if side == "e" else self.xi - 2 * n

    def basis_keys(self, depth):
        keys = [("e", l) for l in range(depth + 1)]
        keys += [("f", k) for k in range(1, depth + 1)]
        return keys

    def key_str(self, key):
        return f"{key[0]}^{key[1]} xbar"

    def key_json(self, key):
        return [key[0], key[1]]

    def key_from_json(self, data):
        return (str(data[0]), int(data[1]))

    def generator(self):
        return self.basis_vec(("e", 0))

    def generator_relations(self):
        return [(UEnvElt.from_sl2(H), self.xi), (casimir_elt(), self.tau)]

    def basis_words(self, depth):
        out = [(("e", l), (E,) * l) for l in range(depth + 1)]
        out += [(("f", k), (F,) * k) for k in range(1, depth + 1)]
        return out

    def params_json(self):
        return {"xi": self.xi.to_json(), "tau": self.tau.to_json()}


class XbarQuotientModule(XbarModule):
    """Internal: Xbar(xi, tau) modulo the span of e^{j0+i} xbar for i > 0.

    Only meaningful when tau = (xi + 2 j0 + 1)^2, where that span is
    invariant; the action is the Xbar action followed by dropping the
    truncated keys.
    """

    family = "XbarModY"

    def __init__(self, xi, tau, j0):
        super().__init__(xi, tau)
        self.j0 = int(j0)

    def _keep(self, key):
        return key[0] == "f" or key[1] <= self.j0

    def _act_key(self, x, key):
        inner = super()._act_key(x, key)
        return {k: c for k, c in inner.items() if self._keep(k)}

    def validate_key(self, key):
        super().validate_key(key)
        if not self._keep(key):
            raise InvalidParameter(f"key {key!r} lies in the quotiented span")

    def basis_keys(self, depth):
        return [k for k in super().basis_keys(depth) if self._keep(k)]

    def params_json(self):
        out = super().params_json()
        out["j0"] = self.j0
        return out


class DenseModule(Module):
    """Dense weight module: one-dimensional weight spaces over xi + 2Z.

    Keys are the weights themselves.  The action is the defining one:
    f v_w = v_{w-2}, h v_w = w v_w, e v_w = (tau - (w+1)^2)/4 v_{w+2}.
    """

    family = "Vdense"
    is_weight_family = True

    def __init__(self, xi, tau):
        self.xi = Scalar.of(xi)
        self.tau = Scalar.of(tau)

    def _act_key(self, x, key):
        out: dict = {}

        def add(k, c):
            if c.is_zero():
                return
            s = out.get(k, Scalar.zero()) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s

        w = key
        add(w - 2, x.cf)
        add(w, x.ch * w)
        add(w + 2, x.ce * (self.tau - (w + 1) ** 2) / 4)
        return out

    def validate_key(self, key):
        if not isinstance(key, Scalar):
            raise InvalidParameter(f"bad Vdense key {key!r}")
        off = (key - self.xi) / 2
        if not off.is_integer():
            raise InvalidParameter(f"weight {key} is not in the coset of {self.xi}")

    def key_depth(self, key):
        return abs(((key - self.xi) / 2).as_int())

    def key_weight(self, key):
        return key

    def basis_keys(self, depth):
        return [self.xi + 2 * m for m in range(-depth, depth + 1)]

    def key_sort_token(self, key):
        return key.sort_key()

    def key_str(self, key):
        return f"v[{key}]"

    def key_json(self, key):
        return key.to_json()

    def key_from_json(self, data):
        return Scalar.from_json(data)

    def generator(self):
        return self.basis_vec(self.xi)

    def generator_relations(self):
        return [(UEnvElt.from_sl2(H), self.xi), (casimir_elt(), self.tau)]

    def params_json(self):
        return {"xi": self.xi.to_json(), "tau": self.tau.to_json()}


class VermaModule(Module):
    """Highest weight Verma module; keys k >= 0 for f^k m."""

    family = "Verma"
    is_weight_family = True

    def __init__(self, delta):
        self.delta = Scalar.of(delta)

    def _act_key(self, x, key):
        k = key
        out: dict = {}

        def add(key2, c):
            if c.is_zero():
                return
            s = out.get(key2, Scalar.zero()) + c
            if s.is_zero():
                out.pop(key2, None)
            else:
                out[key2] = s

        if k >= 1:
            add(k - 1, x.ce * k * (self.delta - (k - 1)))
        add(k, x.ch * (self.delta - 2 * k))
        add(k + 1, x.cf)
        return out

    def act_generic(self, x, vec: ModVec) -> ModVec:
        """Oracle route: multiply in U(sl2), then e -> 0 and h -> delta."""
        acc: dict = {}
        for k, coeff in vec.terms.items():
            u = nf_multiply(UEnvElt.from_sl2(x), UEnvElt.monomial((k, 0, 0)))
            for (a2, b2, c2), c in u.terms.items():
                if c2 > 0:
                    continue
                val = coeff * c * self.delta**b2
                s = acc.get(a2, Scalar.zero()) + val
                if s.is_zero():
                    acc.pop(a2, None)
                else:
                    acc[a2] = s
        return ModVec(self, acc)

    def validate_key(self, key):
        if not (isinstance(key, int) and key >= 0):
            raise InvalidParameter(f"bad Verma key {key!r}")

    def key_depth(self, key):
        return key

    def key_weight(self, key):
        return self.delta - 2 * key

    def basis_keys(self, depth):
        return list(range(depth + 1))

    def key_str(self, key):
        return f"f^{key} m"

    def generator(self):
        return self.basis_vec(0)

    def generator_relations(self):
        return [(UEnvElt.from_sl2(H), self.delta), (UEnvElt.from_sl2(E), Scalar.zero())]

    def basis_words(self, depth):
        return [(k, (F,) * k) for k in range(depth + 1)]

    def params_json(self):
        return {"delta": self.delta.to_json()}


class LowVermaModule(Module):
    """Lowest weight Verma module; keys k >= 0 for e^k m."""

    family = "LowVerma"
    is_weight_family = True

    def __init__(self, delta):
        self.delta = Scalar.of(delta)

    def _act_key(self, x, key):
        k = key
        out: dict = {}

        def add(key2, c):
            if c.is_zero():
                return
            s = out.get(key2, Scalar.zero()) + c
            if s.is_zero():
                out.pop(key2, None)
            else:
                out[key2] = s

        add(k + 1, x.ce)
        add(k, x.ch * (self.delta + 2 * k))
        if k >= 1:
            add(k - 1, -x.cf * k * (self.delta + (k - 1)))
        return out

    def validate_key(self, key):
        if not (isinstance(key, int) and key >= 0):
            raise InvalidParameter(f"bad LowVerma key {key!r}")

    def key_depth(self, key):
        return key

    def key_weight(self, key):
        return self.delta + 2 * key

    def basis_keys(self, depth):
        return list(range(depth + 1))

    def key_str(self, key):
        return f"e^{key} m"

    def generator(self):
        return self.basis_vec(0)

    def generator_relations(self):
        return [(UEnvElt.from_sl2(H), self.delta), (UEnvElt.from_sl2(F), Scalar.zero())]

    def basis_words(self, depth):
        return [(k, (E,) * k) for k in range(depth + 1)]

    def params_json(self):
        return {"delta": self.delta.to_json()}


class TwistModule(Module):
    """Same underlying space as ``inner``; x acts as aut(x) does on inner."""

    family = "Twist"

    def __init__(self, inner: Module, aut):
        if not isinstance(inner, Module):
            raise InvalidParameter("Twist needs an inner module")
        self.inner = inner
        self.aut = aut
        self._aut_inv = aut.inverse()
        self.is_weight_family = inner.is_weight_family

    def _act_key(self, x, key):
        return self.inner._act_key(self.aut.apply(x), key)

    def validate_key(self, key):
        self.inner.validate_key(key)

    def key_depth(self, key):
        return self.inner.key_depth(key)

    def key_weight(self, key):
        # weights with respect to the twisted Cartan generator aut^{-1}(h)
        return self.inner.key_weight(key)

    def basis_keys(self, depth):
        return self.inner.basis_keys(depth)

    def key_sort_token(self, key):
        return self.inner.key_sort_token(key)

    def key_str(self, key):
        return self.inner.key_str(key)

    def key_json(self, key):
        return self.inner.key_json(key)

    def key_from_json(self, data):
        return self.inner.key_from_json(data)

    def generator(self):
        return ModVec(self, dict(self.inner.generator().terms))

    def generator_relations(self):
        return [(aut_extend(self._aut_inv, u), s)
                for u, s in self.inner.generator_relations()]

    def basis_words(self, depth):
        return [(key, tuple(self._aut_inv.apply(g) for g in word))
                for key, word in self.inner.basis_words(depth)]

    def params_json(self):
        return {"inner": {"family": self.inner.family, "params": self.inner.params_json()},
                "aut": self.aut.to_json()}


class TensorModule(Module):
    """Tensor product with the Leibniz action x(a@b) = xa@b + a@xb."""

    family = "Tensor"

    def __init__(self, left: Module, right: Module):
        self.left = left
        self.right = right
        self.accepts_vir = left.accepts_vir and right.accepts_vir
        self.is_weight_family = left.is_weight_family and right.is_weight_family

    def _leibniz(self, act_left, act_right, key):
        kl, kr = key
        out: dict = {}
        for k2, c in act_left(kl).items():
            key2 = (k2, kr)
            s = out.get(key2, Scalar.zero()) + c
            if s.is_zero():
                out.pop(key2, None)
            else:
                out[key2] = s
        for k2, c in act_right(kr).items():
            key2 = (kl, k2)
            s = out.get(key2, Scalar.zero()) + c
            if s.is_zero():
                out.pop(key2, None)
            else:
                out[key2] = s
        return out

    def _act_key(self, x, key):
        return self._leibniz(lambda k: self.left._act_key(x, k),
                             lambda k: self.right._act_key(x, k), key)

    def _act_vir_key(self, x, key):
        return self._leibniz(lambda k: self.left._act_vir_key(x, k),
                             lambda k: self.right._act_vir_key(x, k), key)

    def validate_key(self, key):
        if not (isinstance(key, tuple) and len(key) == 2):
            raise InvalidParameter(f"bad Tensor key {key!r}")
        self.left.validate_key(key[0])
        self.right.validate_key(key[1])

    def key_depth(self, key):
        return self.left.key_depth(key[0]) + self.right.key_depth(key[1])

    def key_weight(self, key):
        return self.left.key_weight(key[0]) + self.right.key_weight(key[1])

    def basis_keys(self, depth):
        out = []
        for kl in self.left.basis_keys(depth):
            dl = self.left.key_depth(kl)
            for kr in self.right.basis_keys(depth - dl):
                out.append((kl, kr))
        return out

    def key_sort_token(self, key):
        return (self.left.key_sort_token(key[0]), self.right.key_sort_token(key[1]))

    def key_str(self, key):
        return f"{self.left.key_str(key[0])} @ {self.right.key_str(key[1])}"

    def key_json(self, key):
        return [self.left.key_json(key[0]), self.right.key_json(key[1])]

    def key_from_json(self, data):
        return (self.left.key_from_json(data[0]), self.right.key_from_json(data[1]))

    def generator(self):
        gl = self.left.generator()
        gr = self.right.generator()
        (kl, cl), = gl.terms.items()
        (kr, cr), = gr.terms.items()
        return ModVec(self, {(kl, kr): cl * cr})

    def params_json(self):
        return {
            "left": {"family": self.left.family, "params": self.left.params_json()},
            "right": {"family": self.right.family, "params": self.right.params_json()},
        }


# -- operations on top of the zoo ---------------------------------------------


def act_uenv(module: Module, u: UEnvElt, vec: ModVec) -> ModVec:
    """Extend the action to U(sl2) by applying each PBW monomial."""
    out = module.zero()
    gens = {"e": E, "h": H, "f": F}
    for mono, coeff in u.terms.items():
        cur = vec
        for letter in reversed(monomial_letters(mono)):
            cur = module.act(gens[letter], cur)
        out = out + cur.scale(coeff)
    return out


def act_word(module: Module, word, vec: ModVec) -> ModVec:
    """Apply a tuple of algebra elements right-to-left."""
    cur = vec
    for x in reversed(word):
        cur = module.act(x, cur)
    return cur


def casimir_action(module: Module, vec: ModVec) -> ModVec:
    """Action of the Casimir element 4fe + (h+1)^2 through act."""
    return act_uenv(module, casimir_elt(), vec)


def weight_decompose(module: Module, vec: ModVec) -> list:
    """Group a vector by exact weight; raises for non-weight families."""
    if not module.is_weight_family:
        raise NotWeightModule(f"{module.family} is not a weight-module family")
    groups: dict = {}
    for key, coeff in vec.terms.items():
        w = module.key_weight(key)
        groups.setdefault(w, {})[key] = coeff
    return [(w, ModVec(module, groups[w]))
            for w in sorted(groups, key=lambda s: s.sort_key())]


def _scalar_param(value) -> Scalar:
    if isinstance(value, list):
        return Scalar.from_json(value)
    return Scalar.of(value)


def aut_from_json(data):
    from .lie import Automorphism

    kind = data["kind"]
    params = [_scalar_param(p) for p in data.get("params", [])]
    if kind == "identity":
        return Automorphism.identity()
    if kind == "gamma":
        return Automorphism.gamma(params[0])
    if kind == "gamma2":
        return Automorphism.gamma2(params[0], params[1])
    if kind == "sigma":
        return Automorphism.sigma()
    if kind == "inverse":
        return aut_from_json(data["of"]).inverse()
    raise InvalidParameter(f"unknown automorphism kind {kind!r}")


def make_module(spec: dict) -> Module:
    """Build a module handle from its JSON description."""
    from .induced import MuData, VirPolyModule

    if not isinstance(spec, dict) or "family" not in spec:
        raise InvalidParameter("module spec must carry a family tag")
    family = spec["family"]
    if family == "W":
        return WModule(_scalar_param(spec["eta"]))
    if family == "X":
        return XModule(_scalar_param(spec["xi"]))
    if family == "Xbar":
        return XbarModule(_scalar_param(spec["xi"]), _scalar_param(spec["tau"]))
    if family == "Vdense":
        return DenseModule(_scalar_param(spec["xi"]), _scalar_param(spec["tau"]))
    if family == "Verma":
        return VermaModule(_scalar_param(spec["delta"]))
    if family == "LowVerma":
        return LowVermaModule(_scalar_param(spec["delta"]))
    if family == "VirPoly":
        mu = MuData(
            tuple((_scalar_param(lam), int(m)) for lam, m in spec["roots"]),
            tuple(tuple(_scalar_param(c) for c in p) for p in spec["polys"]),
        )
        return VirPolyModule(mu, int(spec.get("depth", 6)))
    if family == "Twist":
        return TwistModule(make_module(spec["inner"]), aut_from_json(spec["aut"]))
    if family == "Tensor":
        return TensorModule(make_module(spec["left"]), make_module(spec["right"]))
    raise InvalidParameter(f"unknown module family {family!r}")
