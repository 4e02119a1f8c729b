"""Dominant tuples of polynomials and the segment bijection.

A dominant tuple over window n is a tuple (Q_1, ..., Q_n) of polynomials
in u with constant term 1, stored here by their root data: Q_i(u) =
prod_c (1 - c u) over a multiset of nonzero scalars c.  Dominance means
every ratio

    Q_i(v^{i-1} u) / Q_{i+1}(v^{i+1} u)      (1 <= i < n)

is again a polynomial; on root multisets R_i this is the containment
v^2 R_{i+1} <= R_i.

A segment of length m <= n and center a contributes the root
a v^{m-2i+1} to Q_i for every i <= m, and nothing for i > m.  This sends
multisegments in the n-window bijectively onto dominant tuples, with
deg Q_i = (number of segments of length >= i), the dual partition of
the length profile.  The inverse peels roots: the multiset difference
R_i - v^2 R_{i+1} consists of a v^{1-i} over the length-i centers a
(for i < n), and each root b of Q_n is b = a v^{1-n} for a length-n
center a.

Enlarging the window pads the tuple with constant polynomials, and the
restriction functor from a larger window N >= n picks out the weight
spaces supported in the first n places; the idempotent doing so has
eigenvalue sum_{lam} prod_i [alpha_i choose lam_i] on a weight-alpha
vector, which is 1 or 0 according to the support condition.
"""

from __future__ import annotations

from collections import Counter

from .combinatorics import Multisegment, Segment, compositions
from .errors import DomainError
from .scalar import (
    NOT_POLYNOMIAL,
    QV,
    UPoly,
    poly_ratio_if_polynomial,
    quantum_binomial,
    scalar_sort_key,
    scalar_text,
)

__all__ = [
    "DominantTuple",
    "pa",
    "pa_inverse",
    "tilde",
    "g_projection",
]


class DominantTuple:
    """A tuple of polynomials with constant term 1, held by roots.

    roots[i] is the sorted root multiset of the (i+1)-st polynomial.
    """

    __slots__ = ("K", "roots")

    def __init__(self, K, roots):
        self.K = K
        self.roots = tuple(
            tuple(sorted(rs, key=scalar_sort_key)) for rs in roots
        )
        for rs in self.roots:
            for c in rs:
                if not c:
                    raise ValueError("roots must be nonzero")

    @property
    def n(self) -> int:
        return len(self.roots)

    @property
    def r(self) -> int:
        return sum(len(rs) for rs in self.roots)

    def degrees(self) -> tuple:
        return tuple(len(rs) for rs in self.roots)

    def polys(self) -> list[UPoly]:
        return [UPoly.from_roots(rs, self.K) for rs in self.roots]

    def is_dominant(self) -> bool:
        polys = self.polys()
        v = self.K.v
        for i in range(1, self.n):
            num = polys[i - 1].scale_arg(v ** (i - 1))
            den = polys[i].scale_arg(v ** (i + 1))
            if poly_ratio_if_polynomial(num, den, self.K) is NOT_POLYNOMIAL:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, DominantTuple):
            return NotImplemented
        return self.roots == other.roots

    def __hash__(self):
        return hash(self.roots)

    def __repr__(self):
        return "DominantTuple(%s)" % (
            ", ".join(
                "[" + ", ".join(scalar_text(c) for c in rs) + "]"
                for rs in self.roots
            ),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "roots": [
                [scalar_text(c) for c in rs] for rs in self.roots
            ],
        }

    @classmethod
    def from_json(cls, data: dict, K=QV) -> "DominantTuple":
        roots = [[K.parse(t) for t in rs] for rs in data["roots"]]
        if len(roots) != data["n"]:
            raise DomainError("root list count disagrees with n")
        return cls(K, roots)


def pa(n: int, r: int, s: Multisegment, K=QV) -> DominantTuple:
    """The dominant tuple over window n attached to a multisegment."""
    if s.r != r:
        raise DomainError("multisegment size %d, expected %d" % (s.r, r))
    if not s.in_window(n):
        raise DomainError("segment length exceeds window %d" % n)
    v = K.v
    roots = [[] for _ in range(n)]
    for seg in s:
        m = seg.length
        for i in range(1, m + 1):
            roots[i - 1].append(seg.center * v ** (m - 2 * i + 1))
    return DominantTuple(K, roots)


def pa_inverse(n: int, r: int, Q: DominantTuple) -> Multisegment:
    """The multisegment attached to a dominant tuple; DomainError if the
    tuple is not dominant or its degrees do not sum to r."""
    if Q.n != n:
        raise DomainError("tuple over window %d, expected %d" % (Q.n, n))
    if Q.r != r:
        raise DomainError("degrees sum to %d, expected %d" % (Q.r, r))
    K = Q.K
    v = K.v
    segments = []
    for i in range(1, n):
        remaining = Counter(Q.roots[i - 1])
        for b in Q.roots[i]:
            shifted = b * v ** 2
            if remaining[shifted] <= 0:
                raise DomainError(
                    "tuple is not dominant at position %d" % i
                )
            remaining[shifted] -= 1
        for c, mult in remaining.items():
            center = c * v ** (i - 1)
            for _ in range(mult):
                segments.append(Segment(center, i))
    for b in Q.roots[n - 1]:
        segments.append(Segment(b * v ** (n - 1), n))
    return Multisegment(segments)


def tilde(Q: DominantTuple, N: int) -> DominantTuple:
    """Extend a tuple to a larger window by constant polynomials."""
    if N < Q.n:
        raise DomainError("cannot shrink a tuple from %d to %d" % (Q.n, N))
    return DominantTuple(Q.K, Q.roots + ((),) * (N - Q.n))


def g_projection(N: int, n: int, W):
    """Restrict a window-N module to the window-n weight support.

    Keeps the basis rows whose weight is supported in the first n places
    (their index entries then lie in 1..n already) and re-coordinates
    them over I(n, r).  The selecting idempotent acts on each row by the
    binomial eigenvalue sum, which must come out 0 or 1.
    """
    from .combinatorics import index_tuples
    from .schur_functor import SpannedModule

    if not 1 <= n <= N:
        raise DomainError("need 1 <= n <= N, got n=%d N=%d" % (n, N))
    if W.n != N:
        raise DomainError("module lives in window %d, not %d" % (W.n, N))
    K = W.K
    r = W.r
    lams = list(compositions(n, r))
    columns = {idx: c for c, idx in enumerate(index_tuples(n, r))}
    kept = []
    for row in W.basis.rows:
        alpha = W.row_weight(row)
        eig = K.zero
        for lam in lams:
            term = K.one
            for i in range(n):
                term = term * quantum_binomial(alpha[i], lam[i], K)
                if not term:
                    break
            eig = eig + term
        supported = sum(alpha[:n]) == r
        if eig != (K.one if supported else K.zero):
            raise ArithmeticError(
                "projection eigenvalue is not idempotent on weight %r"
                % (alpha,)
            )
        if supported:
            kept.append(
                {columns[W.ambient[c]]: x for c, x in row.items()}
            )
    return SpannedModule(K, n, r, W.params, W.mu, kept)
