"""The tensor space bimodule: quantum loop algebra acting on the left,
affine Hecke algebra on the right.

The underlying space has basis {omega_i : i in Z^r}; indices are read
modulo n when residues matter, with representatives in 1..n.

Right Hecke action.  X_t subtracts n from the t-th index and X_t^-1 adds
n.  On tuples inside the window I(n, r) = {1..n}^r the generator T_k acts
by the three-case rule

    omega_i T_k = v^2 omega_i                            if i_k = i_{k+1},
    omega_i T_k = v omega_{i s_k}                        if i_k < i_{k+1},
    omega_i T_k = v omega_{i s_k} + (v^2-1) omega_i      if i_k > i_{k+1},

and on any other tuple the action is forced by the algebra: write
i = j + n lam with j in the window, so omega_i = omega_j X^{-lam}, rewrite
X^{-lam} T_k to normal form and apply the window rule to each term.

Left action.  On a single factor (r = 1) the generators act by

    E_i omega_s = [s = i+1 mod n] omega_{s-1}
    F_i omega_s = [s = i   mod n] omega_{s+1}
    K_i^{+-1} omega_s = v^{+-[s = i mod n]} omega_s
    z_t^+ omega_s = omega_{s - t n},   z_t^- omega_s = omega_{s + t n}

and on r factors through the comultiplication

    E_i -> E_i (x) Ktilde_i + 1 (x) E_i
    F_i -> F_i (x) 1 + Ktilde_i^-1 (x) F_i
    K_i -> K_i (x) K_i,   z_t^+- -> z_t^+- (x) 1 + 1 (x) z_t^+-

with Ktilde_i = K_i K_{i+1}^-1 (indices mod n), expanded once into the
sum over the factor carrying E or F; diagonal factors contribute scalar
powers of v read off from the neighbouring entries.  The two actions
commute; ``commutation_witness`` checks this exhaustively on a window.
"""

from __future__ import annotations

import itertools

from .combinatorics import (
    Permutation,
    decompose_index,
    in_window,
    residue_weight,
)
from .hecke import AffineHeckeElem
from .scalar import QV

__all__ = [
    "TensorVector",
    "h_act",
    "u_act",
    "weight_of",
    "commutation_witness",
    "u_generators",
    "h_generators",
]


class TensorVector:
    """A finite scalar combination of basis tensors omega_i, i in Z^r."""

    __slots__ = ("K", "terms")

    def __init__(self, K, terms: dict | None = None):
        self.K = K
        self.terms = {}
        if terms:
            for idx, c in terms.items():
                if c:
                    self.terms[idx] = c

    @classmethod
    def basis(cls, K, idx) -> "TensorVector":
        return cls(K, {tuple(idx): K.one})

    def __add__(self, other):
        out = dict(self.terms)
        for idx, c in other.terms.items():
            y = out.get(idx)
            y = c if y is None else y + c
            if y:
                out[idx] = y
            else:
                del out[idx]
        return TensorVector(self.K, out)

    def __sub__(self, other):
        return self + other.scaled(-self.K.one)

    def scaled(self, c) -> "TensorVector":
        if not c:
            return TensorVector(self.K)
        return TensorVector(
            self.K, {idx: c * x for idx, x in self.terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "TensorVector(0)"
        parts = [
            "%s * w%s" % (self.K.text(c), list(idx))
            for idx, c in sorted(self.terms.items())
        ]
        return "TensorVector(%s)" % "  +  ".join(parts)


def weight_of(idx: tuple, n: int) -> tuple:
    """Residue weight: the composition counting entries in each residue
    class mod n (representatives 1..n)."""
    return residue_weight(idx, n)


def _res_match(s: int, i: int, n: int) -> bool:
    return (s - i) % n == 0


def _window_T(K, idx: tuple, k: int) -> dict:
    """The three-case right action of T_k on a window tuple."""
    a, b = idx[k - 1], idx[k]
    if a == b:
        return {idx: K.v_pow(2)}
    swapped = list(idx)
    swapped[k - 1], swapped[k] = b, a
    swapped = tuple(swapped)
    if a < b:
        return {swapped: K.v}
    return {swapped: K.v, idx: K.v_pow(2) - K.one}


def h_act(tv: TensorVector, gen: tuple, n: int) -> TensorVector:
    """Right action of a Hecke generator ("T", k), ("X", t), ("Xinv", t)."""
    K = tv.K
    kind, pos = gen
    out: dict = {}

    def bump(idx, c):
        y = out.get(idx)
        y = c if y is None else y + c
        if y:
            out[idx] = y
        else:
            del out[idx]

    if kind == "X" or kind == "Xinv":
        step = -n if kind == "X" else n
        for idx, c in tv.terms.items():
            nl = list(idx)
            nl[pos - 1] += step
            bump(tuple(nl), c)
        return TensorVector(K, out)
    if kind != "T":
        raise ValueError("unknown generator kind %r" % (kind,))

    for idx, c in tv.terms.items():
        r = len(idx)
        if in_window(idx, n):
            for jdx, f in _window_T(K, idx, pos).items():
                bump(jdx, c * f)
            continue
        j, lam = decompose_index(idx, n)
        neg = tuple(-x for x in lam)
        mono = AffineHeckeElem.monomial(K, Permutation.identity(r), neg)
        rewritten = mono.times_T(pos)
        for (u, nu), f in rewritten.terms.items():
            vec = {j: c * f}
            for i in u.reduced_word():
                nxt: dict = {}
                for jdx, cc in vec.items():
                    for kdx, ff in _window_T(K, jdx, i).items():
                        y = nxt.get(kdx)
                        y = cc * ff if y is None else y + cc * ff
                        if y:
                            nxt[kdx] = y
                        else:
                            del nxt[kdx]
                vec = nxt
            for jdx, cc in vec.items():
                shifted = tuple(s - n * e for s, e in zip(jdx, nu))
                bump(shifted, cc)
    return TensorVector(K, out)


def _ktilde_exponent(i: int, s: int, n: int) -> int:
    up = 1 if _res_match(s, i, n) else 0
    ip1 = i % n + 1
    down = 1 if _res_match(s, ip1, n) else 0
    return up - down


def u_act(tv: TensorVector, gen: tuple, n: int, r: int) -> TensorVector:
    """Left action of a loop-algebra generator on the r-fold tensor space.

    Generators: ("E", i), ("F", i), ("K", i), ("Kinv", i) with 1 <= i <= n,
    and ("z+", s), ("z-", s) with s >= 1.
    """
    K = tv.K
    kind, idx_g = gen
    out: dict = {}

    def bump(idx, c):
        y = out.get(idx)
        y = c if y is None else y + c
        if y:
            out[idx] = y
        else:
            del out[idx]

    if kind in ("E", "F", "K", "Kinv") and not 1 <= idx_g <= n:
        raise ValueError("generator index out of range")
    if kind in ("z+", "z-") and idx_g < 1:
        raise ValueError("loop degree must be positive")

    for idx, c in tv.terms.items():
        if len(idx) != r:
            raise ValueError("tensor degree mismatch")
        if kind == "K" or kind == "Kinv":
            e = sum(1 for s in idx if _res_match(s, idx_g, n))
            bump(idx, c * K.v_pow(e if kind == "K" else -e))
        elif kind == "E":
            ip1 = idx_g % n + 1
            for k in range(r):
                if _res_match(idx[k], ip1, n):
                    e = sum(
                        _ktilde_exponent(idx_g, idx[m], n)
                        for m in range(k + 1, r)
                    )
                    nl = list(idx)
                    nl[k] -= 1
                    bump(tuple(nl), c * K.v_pow(e))
        elif kind == "F":
            for k in range(r):
                if _res_match(idx[k], idx_g, n):
                    e = sum(
                        _ktilde_exponent(idx_g, idx[m], n) for m in range(k)
                    )
                    nl = list(idx)
                    nl[k] += 1
                    bump(tuple(nl), c * K.v_pow(-e))
        elif kind == "z+" or kind == "z-":
            step = -idx_g * n if kind == "z+" else idx_g * n
            for k in range(r):
                nl = list(idx)
                nl[k] += step
                bump(tuple(nl), c)
        else:
            raise ValueError("unknown generator kind %r" % (kind,))
    return TensorVector(K, out)


def u_generators(n: int, zmax: int = 2) -> list[tuple]:
    gens = []
    for i in range(1, n + 1):
        gens.extend([("E", i), ("F", i), ("K", i), ("Kinv", i)])
    for s in range(1, zmax + 1):
        gens.extend([("z+", s), ("z-", s)])
    return gens

def h_generators(r: int) -> list[tuple]:
    gens = [("T", k) for k in range(1, r)]
    for t in range(1, r + 1):
        gens.extend([("X", t), ("Xinv", t)])
    return gens


def commutation_witness(
    K, n: int, r: int, window: tuple[int, int], zmax: int = 2, cap: int = 20
) -> dict:
    """Exhaustively check that the two actions commute on all basis
    tensors with entries in the window.  Returns a report with the number
    of checked pairs and any violations found (up to ``cap``)."""
    lo, hi = window
    violations = []
    checked = 0
    ugens = u_generators(n, zmax)
    hgens = h_generators(r)
    for entries in itertools.product(range(lo, hi + 1), repeat=r):
        base = TensorVector.basis(K, entries)
        for hg in hgens:
            hv = h_act(base, hg, n)
            for ug in ugens:
                checked += 1
                left = u_act(hv, ug, n, r)
                right = h_act(u_act(base, ug, n, r), hg, n)
                if left != right:
                    if len(violations) < cap:
                        violations.append(
                            {
                                "index": list(entries),
                                "u_generator": list(ug),
                                "h_generator": list(hg),
                            }
                        )
    return {"checked": checked, "violations": violations}
