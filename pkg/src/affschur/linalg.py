"""Sparse reduced-echelon linear algebra over an exact scalar field.

Vectors are dicts {column index: scalar} with zero entries absent.
A SubspaceBasis keeps its rows in reduced row-echelon form with pivot
columns strictly increasing, each pivot entry 1 and eliminated from every
other row.  The RREF of a row space is unique, so basis equality is
subspace equality and every report derived from a basis is deterministic.
"""

from __future__ import annotations

__all__ = ["SubspaceBasis", "nullspace"]


def vec_axpy(out: dict, f, row: dict) -> None:
    # out += f * row, in place
    for c, x in row.items():
        y = out.get(c)
        y = f * x if y is None else y + f * x
        if y:
            out[c] = y
        else:
            out.pop(c, None)


class SubspaceBasis:
    """Reduced echelon spanning set, built incrementally."""

    __slots__ = ("pivots", "rows")

    def __init__(self):
        self.pivots: list[int] = []
        self.rows: list[dict] = []

    @classmethod
    def from_vectors(cls, vectors) -> "SubspaceBasis":
        basis = cls()
        for v in vectors:
            basis.insert(v)
        return basis

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """The residual of vec after subtracting its projection."""
        out = {c: x for c, x in vec.items() if x}
        for p, row in zip(self.pivots, self.rows):
            f = out.get(p)
            if f is not None:
                vec_axpy(out, -f, row)
        return out

    def coords(self, vec: dict) -> tuple[dict, dict]:
        """(coordinates over the basis rows, residual)."""
        out = {c: x for c, x in vec.items() if x}
        coeffs: dict = {}
        for k, (p, row) in enumerate(zip(self.pivots, self.rows)):
            f = out.get(p)
            if f is not None:
                coeffs[k] = f
                vec_axpy(out, -f, row)
        return coeffs, out

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict) -> bool:
        """Add vec to the span; returns True when the rank grew."""
        res = self.reduce(vec)
        if not res:
            return False
        p = min(res)
        inv = res[p] ** 0 / res[p]
        row = {c: inv * x for c, x in res.items()}
        for other in self.rows:
            f = other.get(p)
            if f is not None:
                vec_axpy(other, -f, row)
        at = 0
        while at < len(self.pivots) and self.pivots[at] < p:
            at += 1
        self.pivots.insert(at, p)
        self.rows.insert(at, row)
        return True

    def vectors(self) -> list[dict]:
        return [dict(row) for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.pivots == other.pivots and self.rows == other.rows

    def __repr__(self):
        return "SubspaceBasis(rank=%d)" % self.rank

    @staticmethod
    def intersection(a: "SubspaceBasis", b: "SubspaceBasis", ncols: int) -> "SubspaceBasis":
        """Intersection of two subspaces of a space with ncols coordinates.

        Zassenhaus: echelonize rows (x|x) for x in a and (y|0) for y in b;
        the rows supported on the right half span the intersection.
        """
        work = SubspaceBasis()
        for x in a.rows:
            double = dict(x)
            for c, val in x.items():
                double[c + ncols] = val
            work.insert(double)
        for y in b.rows:
            work.insert(dict(y))
        out = SubspaceBasis()
        for p, row in zip(work.pivots, work.rows):
            if p >= ncols:
                out.insert({c - ncols: x for c, x in row.items()})
        return out


def nullspace(rows: list[dict], ncols: int, one) -> list[dict]:
    """Basis of {x : sum_c row[c] * x_c = 0 for every row}.

    ``one`` is the multiplicative unit of the scalar field.  Solutions are
    the standard free-column vectors of the RREF, ordered by free column.
    """
    basis = SubspaceBasis.from_vectors(rows)
    pivset = set(basis.pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        sol = {free: one}
        for p, row in zip(basis.pivots, basis.rows):
            f = row.get(free)
            if f is not None:
                sol[p] = -f
        out.append(sol)
    return out
