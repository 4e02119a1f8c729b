"""Symmetric group and segment combinatorics.

Permutations of {1..r} are stored in window notation (the tuple of images
of 1..r) with composition (w*u)(k) = w(u(k)), so that place permutation
on index tuples, i.w = (i_{w(1)}, ..., i_{w(r)}), is a right action.
Lengths are inversion counts and reduced words are produced by peeling
descents from the right, giving w = s_{i_1} ... s_{i_m}.

Segments are arithmetic v-strings (a v^{-k+1}, a v^{-k+3}, ..., a v^{k-1})
recorded by their center a (a nonzero scalar) and length k; a multisegment
is an unordered multiset of segments, normalized here to the canonical
order: length descending, then serialized center text ascending.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .scalar import QV, scalar_text

__all__ = [
    "Permutation",
    "Segment",
    "Multisegment",
    "compositions",
    "partitions",
    "dual_partition",
    "sym_group",
    "young_generators",
    "young_subgroup",
    "min_coset_reps",
    "place_permutation",
    "index_tuples",
    "residue_weight",
    "in_window",
    "decompose_index",
    "multisegments_over",
]


class Permutation:
    """A permutation of {1..r} in window notation."""

    __slots__ = ("window", "_length", "_word")

    def __init__(self, window):
        w = tuple(window)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError("not a permutation window: %r" % (window,))
        self.window = w
        self._length = None
        self._word = None

    @classmethod
    def identity(cls, r: int) -> "Permutation":
        return cls(range(1, r + 1))

    @classmethod
    def adjacent(cls, i: int, r: int) -> "Permutation":
        """The simple reflection s_i swapping i and i+1."""
        if not 1 <= i < r:
            raise ValueError("generator index out of range")
        w = list(range(1, r + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @property
    def degree(self) -> int:
        return len(self.window)

    def __call__(self, k: int) -> int:
        return self.window[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.window[j - 1] for j in other.window))

    def inverse(self) -> "Permutation":
        out = [0] * len(self.window)
        for pos, val in enumerate(self.window):
            out[val - 1] = pos + 1
        return Permutation(out)

    @property
    def length(self) -> int:
        if self._length is None:
            w = self.window
            n = len(w)
            self._length = sum(
                1
                for a in range(n)
                for b in range(a + 1, n)
                if w[a] > w[b]
            )
        return self._length

    def right_descent(self, i: int) -> bool:
        """True when l(w s_i) < l(w), i.e. w(i) > w(i+1)."""
        return self.window[i - 1] > self.window[i]

    def times_adjacent(self, i: int) -> "Permutation":
        """w s_i: swap the window entries at positions i, i+1."""
        w = list(self.window)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def reduced_word(self) -> tuple:
        """Indices (i_1, ..., i_m) with w = s_{i_1} ... s_{i_m} reduced."""
        if self._word is None:
            word = []
            w = self
            while True:
                for i in range(1, w.degree):
                    if w.right_descent(i):
                        word.append(i)
                        w = w.times_adjacent(i)
                        break
                else:
                    break
            self._word = tuple(reversed(word))
        return self._word

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __lt__(self, other):
        return self.window < other.window

    def __repr__(self):
        return "Permutation(%r)" % (self.window,)


@lru_cache(maxsize=None)
def sym_group(r: int) -> tuple:
    """All of S_r, in lexicographic window order."""
    return tuple(
        Permutation(w) for w in itertools.permutations(range(1, r + 1))
    )


def compositions(p: int, r: int):
    """All compositions of r into p non-negative parts, lexicographic."""
    if p == 0:
        if r == 0:
            yield ()
        return
    if p == 1:
        yield (r,)
        return
    for first in range(r + 1):
        for rest in compositions(p - 1, r - first):
            yield (first,) + rest


def partitions(r: int, max_part: int | None = None) -> list[tuple]:
    """Partitions of r with parts bounded by max_part, largest part first."""
    if max_part is None:
        max_part = r
    if r == 0:
        return [()]
    out = []
    for first in range(min(r, max_part), 0, -1):
        for rest in partitions(r - first, first):
            out.append((first,) + rest)
    return out


def dual_partition(mu) -> tuple:
    """Column lengths: (mu')_j = #{i : mu_i >= j}."""
    mu = tuple(mu)
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)) or any(
        m < 0 for m in mu
    ):
        raise ValueError("not a partition: %r" % (mu,))
    if not mu or mu[0] == 0:
        return ()
    return tuple(
        sum(1 for m in mu if m >= j) for j in range(1, mu[0] + 1)
    )


def _block_bounds(mu) -> list[tuple[int, int]]:
    bounds = []
    start = 1
    for m in mu:
        bounds.append((start, start + m - 1))
        start += m
    return bounds


def young_generators(mu) -> list[int]:
    """Indices i with s_i inside the Young subgroup of the composition mu."""
    gens = []
    for lo, hi in _block_bounds(mu):
        gens.extend(range(lo, hi))
    return gens


def young_subgroup(mu) -> list[Permutation]:
    """All elements of the Young subgroup S_mu <= S_r, r = sum(mu)."""
    r = sum(mu)
    blocks = _block_bounds(mu)
    out = []
    pools = [
        list(itertools.permutations(range(lo, hi + 1))) for lo, hi in blocks
    ]
    for choice in itertools.product(*pools):
        w = [0] * r
        for (lo, _hi), perm in zip(blocks, choice):
            for off, val in enumerate(perm):
                w[lo - 1 + off] = val
        out.append(Permutation(w))
    return out


def min_coset_reps(mu) -> list[Permutation]:
    """Distinguished minimal-length right coset representatives for S_mu.

    d qualifies exactly when every w in S_mu satisfies
    l(w d) = l(w) + l(d), equivalently d^-1 is increasing on each block.
    """
    r = sum(mu)
    gens = young_generators(mu)
    out = []
    for d in sym_group(r):
        pos = {val: p for p, val in enumerate(d.window)}
        if all(pos[i] < pos[i + 1] for i in gens):
            out.append(d)
    return out


def place_permutation(idx: tuple, w: Permutation) -> tuple:
    """i.w = (i_{w(1)}, ..., i_{w(r)}); a right action on index tuples."""
    return tuple(idx[j - 1] for j in w.window)


def index_tuples(n: int, r: int):
    """I(n, r): tuples in {1..n}^r, lexicographic."""
    return itertools.product(range(1, n + 1), repeat=r)


def residue_weight(idx: tuple, n: int) -> tuple:
    """The composition counting entries congruent to each of 1..n mod n."""
    out = [0] * n
    for s in idx:
        out[(s - 1) % n] += 1
    return tuple(out)


def in_window(idx: tuple, n: int) -> bool:
    return all(1 <= s <= n for s in idx)


def decompose_index(idx: tuple, n: int) -> tuple[tuple, tuple]:
    """Write idx = j + n*lam with j in I(n, r)."""
    j = tuple((s - 1) % n + 1 for s in idx)
    lam = tuple((s - js) // n for s, js in zip(idx, j))
    return j, lam


class Segment:
    """A v-segment with the given center (nonzero scalar) and length."""

    __slots__ = ("center", "length")

    def __init__(self, center, length: int):
        if length < 1:
            raise ValueError("segment length must be positive")
        if not center:
            raise ValueError("segment center must be nonzero")
        self.center = center
        self.length = int(length)

    def expand(self, K=QV) -> tuple:
        """The entries (a v^{-k+1}, a v^{-k+3}, ..., a v^{k-1})."""
        k = self.length
        return tuple(
            self.center * K.v_pow(-k + 1 + 2 * t) for t in range(k)
        )

    def sort_key(self) -> tuple:
        return (-self.length, scalar_text(self.center))

    def to_json(self) -> dict:
        return {"center": scalar_text(self.center), "length": self.length}

    @classmethod
    def from_json(cls, obj: dict, K=QV) -> "Segment":
        return cls(K.parse(obj["center"]), int(obj["length"]))

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return self.length == other.length and self.center == other.center

    def __hash__(self):
        return hash((self.length, scalar_text(self.center)))

    def __repr__(self):
        return "Segment(%s, %d)" % (scalar_text(self.center), self.length)


class Multisegment:
    """An unordered multiset of segments, stored in canonical order
    (length descending, then center text ascending)."""

    __slots__ = ("segments",)

    def __init__(self, segments):
        self.segments = tuple(
            sorted(segments, key=lambda s: s.sort_key())
        )

    @property
    def r(self) -> int:
        return sum(s.length for s in self.segments)

    def wp(self) -> tuple:
        """The weakly decreasing tuple of segment lengths."""
        return tuple(s.length for s in self.segments)

    def in_window(self, n: int) -> bool:
        """Membership in S_r^(n): every length at most n."""
        return all(s.length <= n for s in self.segments)

    def juxtapose(self, K=QV) -> tuple:
        """Concatenate the segment expansions in canonical order."""
        out = []
        for s in self.segments:
            out.extend(s.expand(K))
        return tuple(out)

    def to_json(self) -> list:
        return [s.to_json() for s in self.segments]

    @classmethod
    def from_json(cls, obj: list, K=QV) -> "Multisegment":
        return cls(Segment.from_json(s, K) for s in obj)

    def __eq__(self, other):
        if not isinstance(other, Multisegment):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self):
        return hash(self.segments)

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __repr__(self):
        return "Multisegment([%s])" % ", ".join(repr(s) for s in self.segments)


def multisegments_over(r: int, centers, max_len: int | None = None):
    """All multisegments of total length r with centers drawn from the
    given grid and segment lengths bounded by max_len (default r).

    Equal-length segments are unordered, so centers for a group of equal
    lengths are chosen as a multiset; the enumeration is duplicate-free.
    """
    centers = list(centers)
    cap = r if max_len is None else max_len
    for mu in partitions(r, max_part=cap):
        groups = []
        for length in sorted(set(mu), reverse=True):
            groups.append((length, mu.count(length)))
        pools = [
            list(
                itertools.combinations_with_replacement(
                    range(len(centers)), count
                )
            )
            for _length, count in groups
        ]
        for pick in itertools.product(*pools):
            segs = []
            for (length, _count), chosen in zip(groups, pick):
                for ci in chosen:
                    segs.append(Segment(centers[ci], length))
            yield Multisegment(segs)
