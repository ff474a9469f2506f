"""Exact sparse linear algebra over Q(i).

Vectors are finite maps key -> Scalar over an arbitrary hashable key set
with a caller-supplied total order.  The single structure here is an
incrementally maintained reduced echelon: every stored row has pivot
coefficient one and its tail is supported on non-pivot keys only, so
membership tests, ranks and canonical reductions are all one substitution
pass.  Arithmetic is exact rational; nothing is ever rounded.
"""

from __future__ import annotations

from .scalar import Scalar


class Echelon:
    """Reduced echelon form of a growing set of sparse vectors.

    ``key_order(key)`` must return a sortable token; the pivot of a row is
    its largest key under that order.  For PBW monomials the degree-lex
    order keeps reductions degree-compatible.
    """

    def __init__(self, key_order=None):
        self.key_order = key_order if key_order is not None else _default_order
        self.rows: dict[object, dict] = {}  # pivot key -> reduced row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residue of vec after eliminating every pivot key.

        Rows are fully reduced against each other, so one substitution pass
        suffices: eliminating a pivot only introduces non-pivot keys.
        """
        out: dict = {}

        def add(k, c):
            s = out.get(k, Scalar.zero()) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s

        for key, coeff in vec.items():
            if coeff.is_zero():
                continue
            row = self.rows.get(key)
            if row is None:
                add(key, coeff)
            else:
                for k, c in row.items():
                    if k != key:
                        add(k, -(coeff * c))
        return out

    def insert(self, vec: dict) -> bool:
        """Add a vector; True if it enlarged the span."""
        residue = self.reduce(vec)
        residue = {k: c for k, c in residue.items() if not c.is_zero()}
        if not residue:
            return False
        pivot = max(residue, key=self.key_order)
        pv = residue[pivot]
        row = {k: c / pv for k, c in residue.items()}
        # keep existing rows reduced against the new pivot
        for pk, existing in self.rows.items():
            coeff = existing.get(pivot)
            if coeff is None:
                continue
            for k, c in row.items():
                s = existing.get(k, Scalar.zero()) + (-coeff) * c
                if s.is_zero():
                    existing.pop(k, None)
                else:
                    existing[k] = s
        self.rows[pivot] = row
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def reduction_table(self) -> dict:
        """pivot key -> tail map, i.e. pivot = sum(tail) on the row space."""
        table = {}
        for pivot, row in self.rows.items():
            table[pivot] = {k: -c for k, c in row.items() if k != pivot}
        return table


def _default_order(key):
    return key


def rank_of(vectors, key_order=None) -> int:
    ech = Echelon(key_order)
    for v in vectors:
        ech.insert(v)
    return ech.rank


def degree_lex(mono) -> tuple:
    """Sort token for PBW monomials: total degree first, then tuple order."""
    return (sum(mono), mono)
