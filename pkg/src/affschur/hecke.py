"""Hecke algebras of type A: finite, affine (extended), and evaluation modules.

The finite Hecke algebra H(r) has basis {T_w : w in S_r} with

    T_w T_i = T_{w s_i}                         if l(w s_i) > l(w),
    T_w T_i = (v^2 - 1) T_w + v^2 T_{w s_i}     otherwise,

equivalently (T_i + 1)(T_i - v^2) = 0 together with the braid relations.

The extended affine Hecke algebra adjoins commuting invertible generators
X_1, ..., X_r subject to

    T_i X_i T_i = v^2 X_{i+1},      X_j T_i = T_i X_j   (j != i, i+1),

and every element has a unique normal form  sum c_{w,lam} T_w X^lam  with
the X-monomial on the right.  Multiplication rewrites X^lam past one T_i
at a time using the four single-step consequences of the relations above:

    X_i     T_i = T_i X_{i+1}  - (v^2-1) X_{i+1}
    X_{i+1} T_i = T_i X_i      + (v^2-1) X_{i+1}
    X_i^-1  T_i = T_i X_{i+1}^-1 + (v^2-1) X_i^-1
    X_{i+1}^-1 T_i = T_i X_i^-1  - (v^2-1) X_i^-1

driven by a recursion that peels one power of X_i or X_{i+1} per step
(the product X_i X_{i+1} is s_i-symmetric, hence commutes with T_i, which
is what makes the peeling terminate).  The relation and associativity
test suites pin this rewriting down before anything else relies on it.

Evaluation modules: for an invertible parameter tuple a = (a_1, ..., a_r),
the left module M_a is the quotient of the affine algebra by the left
ideal generated by X_j - a_j; it has basis {Tbar_w} and the action of any
element is computed by lifting, multiplying, and substituting X^lam -> a^lam.
"""

from __future__ import annotations

from .combinatorics import (
    Permutation,
    min_coset_reps,
    sym_group,
    young_generators,
    young_subgroup,
)
from .errors import check_hecke_rank
from .linalg import SubspaceBasis
from .scalar import QV, scalar_text

__all__ = [
    "FiniteHeckeElem",
    "AffineHeckeElem",
    "EvalModuleElem",
    "finite_mul",
    "affine_mul",
    "y_mu",
    "c_element",
    "ideal_I",
    "ideal_J",
    "eval_action",
    "hecke_coordinates",
]


class FiniteHeckeElem:
    """An element of H(r): a scalar combination of basis elements T_w."""

    __slots__ = ("K", "r", "terms")

    def __init__(self, K, r: int, terms: dict | None = None):
        self.K = K
        self.r = r
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @classmethod
    def unit(cls, K, r: int) -> "FiniteHeckeElem":
        return cls(K, r, {Permutation.identity(r): K.one})

    @classmethod
    def generator(cls, K, r: int, i: int) -> "FiniteHeckeElem":
        return cls(K, r, {Permutation.adjacent(i, r): K.one})

    @classmethod
    def basis_elem(cls, K, w: Permutation) -> "FiniteHeckeElem":
        return cls(K, w.degree, {w: K.one})

    @classmethod
    def generator_inverse(cls, K, r: int, i: int) -> "FiniteHeckeElem":
        """T_i^-1 = v^-2 T_i + (v^-2 - 1) T_e."""
        vm2 = K.v_pow(-2)
        return cls(
            K,
            r,
            {
                Permutation.adjacent(i, r): vm2,
                Permutation.identity(r): vm2 - K.one,
            },
        )

    def __add__(self, other: "FiniteHeckeElem") -> "FiniteHeckeElem":
        out = dict(self.terms)
        for w, c in other.terms.items():
            y = out.get(w)
            y = c if y is None else y + c
            if y:
                out[w] = y
            else:
                del out[w]
        return FiniteHeckeElem(self.K, self.r, out)

    def __neg__(self):
        return FiniteHeckeElem(
            self.K, self.r, {w: -c for w, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "FiniteHeckeElem":
        if not c:
            return FiniteHeckeElem(self.K, self.r)
        return FiniteHeckeElem(
            self.K, self.r, {w: c * x for w, x in self.terms.items()}
        )

    def times_gen(self, i: int) -> "FiniteHeckeElem":
        """Right multiplication by T_i."""
        K = self.K
        vv = K.v_pow(2)
        vv1 = vv - K.one
        out: dict = {}
        for w, c in self.terms.items():
            ws = w.times_adjacent(i)
            if w.right_descent(i):
                # l(w s_i) < l(w): T_w T_i = (v^2-1) T_w + v^2 T_{w s_i}
                y = out.get(w)
                y = c * vv1 if y is None else y + c * vv1
                if y:
                    out[w] = y
                else:
                    del out[w]
                y = out.get(ws)
                y = c * vv if y is None else y + c * vv
                if y:
                    out[ws] = y
                else:
                    del out[ws]
            else:
                y = out.get(ws)
                y = c if y is None else y + c
                if y:
                    out[ws] = y
                else:
                    del out[ws]
        return FiniteHeckeElem(K, self.r, out)

    def __mul__(self, other):
        if isinstance(other, FiniteHeckeElem):
            return finite_mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __eq__(self, other):
        if not isinstance(other, FiniteHeckeElem):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def embed(self) -> "AffineHeckeElem":
        zero_lam = (0,) * self.r
        return AffineHeckeElem(
            self.K,
            self.r,
            {(w, zero_lam): c for w, c in self.terms.items()},
        )

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda p: (p.length, p.window)):
            parts.append(
                "%s * T%s" % (self.K.text(self.terms[w]), list(w.window))
            )
        return "  +  ".join(parts)

    def __repr__(self):
        return "FiniteHeckeElem(%s)" % self.text()


def finite_mul(a: FiniteHeckeElem, b: FiniteHeckeElem) -> FiniteHeckeElem:
    """Product in H(r), via reduced words of the right factor."""
    out = FiniteHeckeElem(a.K, a.r)
    for w, c in b.terms.items():
        acc = a
        for i in w.reduced_word():
            acc = acc.times_gen(i)
        out = out + acc.scaled(c)
    return out


class AffineHeckeElem:
    """An element of the extended affine Hecke algebra in normal form:
    terms keyed by (w, lam) meaning T_w X^lam."""

    __slots__ = ("K", "r", "terms")

    def __init__(self, K, r: int, terms: dict | None = None):
        self.K = K
        self.r = r
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c:
                    self.terms[key] = c

    @classmethod
    def unit(cls, K, r: int) -> "AffineHeckeElem":
        return cls(K, r, {(Permutation.identity(r), (0,) * r): K.one})

    @classmethod
    def gen_T(cls, K, r: int, i: int) -> "AffineHeckeElem":
        return cls(K, r, {(Permutation.adjacent(i, r), (0,) * r): K.one})

    @classmethod
    def gen_T_inverse(cls, K, r: int, i: int) -> "AffineHeckeElem":
        return FiniteHeckeElem.generator_inverse(K, r, i).embed()

    @classmethod
    def gen_X(cls, K, r: int, t: int, power: int = 1) -> "AffineHeckeElem":
        if not 1 <= t <= r:
            raise ValueError("X index out of range")
        lam = [0] * r
        lam[t - 1] = power
        return cls(K, r, {(Permutation.identity(r), tuple(lam)): K.one})

    @classmethod
    def monomial(cls, K, w: Permutation, lam, coeff=None) -> "AffineHeckeElem":
        c = coeff if coeff is not None else K.one
        return cls(K, w.degree, {(w, tuple(lam)): c})

    def __add__(self, other: "AffineHeckeElem") -> "AffineHeckeElem":
        out = dict(self.terms)
        for key, c in other.terms.items():
            y = out.get(key)
            y = c if y is None else y + c
            if y:
                out[key] = y
            else:
                del out[key]
        return AffineHeckeElem(self.K, self.r, out)

    def __neg__(self):
        return AffineHeckeElem(
            self.K, self.r, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "AffineHeckeElem":
        if not c:
            return AffineHeckeElem(self.K, self.r)
        return AffineHeckeElem(
            self.K, self.r, {k: c * x for k, x in self.terms.items()}
        )

    def times_X(self, t: int, power: int) -> "AffineHeckeElem":
        """Right multiplication by X_t^power (trivial in normal form)."""
        out = {}
        for (w, lam), c in self.terms.items():
            nl = list(lam)
            nl[t - 1] += power
            out[(w, tuple(nl))] = c
        return AffineHeckeElem(self.K, self.r, out)

    def times_X_monomial(self, nu) -> "AffineHeckeElem":
        out = {}
        for (w, lam), c in self.terms.items():
            key = (w, tuple(a + b for a, b in zip(lam, nu)))
            y = out.get(key)
            out[key] = c if y is None else y + c
        return AffineHeckeElem(self.K, self.r, out)

    def times_T(self, i: int) -> "AffineHeckeElem":
        """Right multiplication by T_i, rewriting X past T."""
        K = self.K
        out = AffineHeckeElem(K, self.r)
        for (w, lam), c in self.terms.items():
            for (u, mu), c2 in _x_past_gen(K, self.r, lam, i).terms.items():
                # T_w * (T_u X^mu), with u the identity or s_i
                if u.length == 0:
                    part = {(w, mu): c * c2}
                    out = out + AffineHeckeElem(K, self.r, part)
                else:
                    prod = FiniteHeckeElem(K, self.r, {w: c * c2}).times_gen(i)
                    out = out + AffineHeckeElem(
                        K,
                        self.r,
                        {(x, mu): cc for x, cc in prod.terms.items()},
                    )
        return out

    def __mul__(self, other):
        if isinstance(other, AffineHeckeElem):
            return affine_mul(self, other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __eq__(self, other):
        if not isinstance(other, AffineHeckeElem):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def finite_part(self) -> FiniteHeckeElem:
        """Drop to H(r) when no X occurs; error otherwise."""
        zero = (0,) * self.r
        out = {}
        for (w, lam), c in self.terms.items():
            if lam != zero:
                raise ValueError("element has X content")
            out[w] = c
        return FiniteHeckeElem(self.K, self.r, out)

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, lam in sorted(
            self.terms, key=lambda k: (k[0].length, k[0].window, k[1])
        ):
            c = self.terms[(w, lam)]
            parts.append(
                "%s * T%s * X%s"
                % (self.K.text(c), list(w.window), list(lam))
            )
        return "  +  ".join(parts)

    def __repr__(self):
        return "AffineHeckeElem(%s)" % self.text()


def _x_past_gen(K, r: int, lam: tuple, i: int) -> AffineHeckeElem:
    """Normal form of X^lam T_i.

    Only the (i, i+1) coordinates interact with T_i; the rest of lam rides
    along.  The recursion reduces the gap a - b of those two exponents.
    """
    a = lam[i - 1]
    b = lam[i]
    rest = list(lam)
    rest[i - 1] = 0
    rest[i] = 0
    core = _balance(K, r, a, b, i)
    if any(rest):
        core = core.times_X_monomial(
            tuple(rest)
        )  # disjoint support: multiplying by X^rest commutes with T_i
    return core


def _balance(K, r: int, a: int, b: int, i: int) -> AffineHeckeElem:
    # X_i^a X_{i+1}^b T_i in normal form.
    if a == b:
        lam = [0] * r
        lam[i - 1] = b
        lam[i] = a
        return AffineHeckeElem(
            K, r, {(Permutation.adjacent(i, r), tuple(lam)): K.one}
        )
    vv1 = K.v_pow(2) - K.one
    if a > b:
        sub = _balance(K, r, a - 1, b, i).times_X(i + 1, 1)
        lam = [0] * r
        lam[i - 1] = a - 1
        lam[i] = b + 1
        extra = AffineHeckeElem(
            K, r, {(Permutation.identity(r), tuple(lam)): -vv1}
        )
        return sub + extra
    sub = _balance(K, r, a, b - 1, i).times_X(i, 1)
    lam = [0] * r
    lam[i - 1] = a
    lam[i] = b
    extra = AffineHeckeElem(
        K, r, {(Permutation.identity(r), tuple(lam)): vv1}
    )
    return sub + extra


def affine_mul(a: AffineHeckeElem, b: AffineHeckeElem) -> AffineHeckeElem:
    """Product in the affine algebra, result in normal form."""
    out = AffineHeckeElem(a.K, a.r)
    for (u, nu), c in b.terms.items():
        acc = a
        for i in u.reduced_word():
            acc = acc.times_T(i)
        if any(nu):
            acc = acc.times_X_monomial(nu)
        out = out + acc.scaled(c)
    return out


def y_mu(K, mu) -> FiniteHeckeElem:
    """The alternating Young-subgroup sum  sum_{w in S_mu} (-v^2)^{-l(w)} T_w.

    Satisfies T_i y = -y for every generator s_i of S_mu.
    """
    r = sum(mu)
    check_hecke_rank(r)
    base = -(K.v_pow(2))
    terms = {}
    for w in young_subgroup(mu):
        terms[w] = base ** (-w.length)
    return FiniteHeckeElem(K, r, terms)


def c_element(K, r: int, i: int) -> FiniteHeckeElem:
    """C_i = v^-1 T_i - v; a scalar multiple of the rank-one y."""
    return FiniteHeckeElem(
        K,
        r,
        {
            Permutation.adjacent(i, r): K.v_pow(-1),
            Permutation.identity(r): -K.v,
        },
    )


def hecke_coordinates(h: FiniteHeckeElem, order: dict) -> dict:
    """Coordinate vector of h over the T_w basis, columns per ``order``."""
    return {order[w]: c for w, c in h.terms.items()}


def _basis_order(r: int) -> dict:
    return {w: k for k, w in enumerate(sym_group(r))}


def ideal_I(K, mu) -> SubspaceBasis:
    """The left ideal H(r) y_mu as a subspace of H(r), echelonized over
    the T_w coordinate basis in window order."""
    r = sum(mu)
    check_hecke_rank(r)
    order = _basis_order(r)
    y = y_mu(K, mu)
    basis = SubspaceBasis()
    for w in sym_group(r):
        vec = finite_mul(FiniteHeckeElem.basis_elem(K, w), y)
        basis.insert(hecke_coordinates(vec, order))
    return basis


def ideal_J(K, mu) -> SubspaceBasis:
    """The intersection of the images of right multiplication by C_i over
    the generators s_i of S_mu (the whole of H(r) when there are none)."""
    r = sum(mu)
    check_hecke_rank(r)
    order = _basis_order(r)
    gens = young_generators(mu)
    group = sym_group(r)
    if not gens:
        return SubspaceBasis.from_vectors(
            [{order[w]: K.one} for w in group]
        )
    ncols = len(group)
    result = None
    for i in gens:
        ci = c_element(K, r, i)
        image = SubspaceBasis()
        for w in group:
            vec = finite_mul(FiniteHeckeElem.basis_elem(K, w), ci)
            image.insert(hecke_coordinates(vec, order))
        if result is None:
            result = image
        else:
            result = SubspaceBasis.intersection(result, image, ncols)
    return result


class EvalModuleElem:
    """An element of the evaluation module M_a, in the Tbar_w basis."""

    __slots__ = ("K", "a", "terms")

    def __init__(self, K, a: tuple, terms: dict | None = None):
        self.K = K
        self.a = tuple(a)
        for x in self.a:
            if not x:
                raise ValueError("evaluation parameters must be invertible")
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[w] = c

    @property
    def r(self) -> int:
        return len(self.a)

    @classmethod
    def cyclic_generator(cls, K, a) -> "EvalModuleElem":
        a = tuple(a)
        return cls(K, a, {Permutation.identity(len(a)): K.one})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            y = out.get(w)
            y = c if y is None else y + c
            if y:
                out[w] = y
            else:
                del out[w]
        return EvalModuleElem(self.K, self.a, out)

    def __sub__(self, other):
        return self + other.scaled(-self.K.one)

    def scaled(self, c) -> "EvalModuleElem":
        return EvalModuleElem(
            self.K, self.a, {w: c * x for w, x in self.terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, EvalModuleElem):
            return NotImplemented
        return self.a == other.a and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "EvalModuleElem(0)"
        parts = [
            "%s * Tbar%s" % (self.K.text(c), list(w.window))
            for w, c in sorted(
                self.terms.items(), key=lambda t: (t[0].length, t[0].window)
            )
        ]
        return "EvalModuleElem(%s)" % "  +  ".join(parts)


def eval_action(gen: tuple, m: EvalModuleElem) -> EvalModuleElem:
    """Left action of a generator ("T", i), ("X", t) or ("Xinv", t) on M_a.

    Lift to the affine algebra, multiply on the left, then substitute
    X^lam -> prod a_t^{lam_t}.
    """
    K = m.K
    r = m.r
    kind, idx = gen
    if kind == "T":
        g = AffineHeckeElem.gen_T(K, r, idx)
    elif kind == "X":
        g = AffineHeckeElem.gen_X(K, r, idx, 1)
    elif kind == "Xinv":
        g = AffineHeckeElem.gen_X(K, r, idx, -1)
    else:
        raise ValueError("unknown generator kind %r" % (kind,))
    lifted = AffineHeckeElem(
        K, r, {(w, (0,) * r): c for w, c in m.terms.items()}
    )
    prod = affine_mul(g, lifted)
    out: dict = {}
    for (w, lam), c in prod.terms.items():
        scale = c
        for t, e in enumerate(lam):
            if e:
                scale = scale * m.a[t] ** e
        y = out.get(w)
        y = scale if y is None else y + scale
        if y:
            out[w] = y
        else:
            out.pop(w, None)
    return EvalModuleElem(K, m.a, out)
