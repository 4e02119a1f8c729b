"""Exact scalars for quantum algebra: the field Q(v) and polynomials over it.

The quantum parameter v is transcendental, so the coefficient field is the
field of rational functions Q(v).  An element is stored as a reduced
fraction of Laurent polynomials in v with rational coefficients, normalized
so that equality of values is equality of representations:

* the denominator is an ordinary polynomial in v, monic, with nonzero
  constant term (every net power of v is carried by the numerator);
* numerator and denominator share no nonconstant polynomial factor.

No floating point is used anywhere.

Two arithmetic contexts are provided.  ``QV`` is the symbolic field above.
``RationalScalars(p/q)`` specializes v to a rational number other than
0, 1 and -1 (hence not a root of unity), with plain ``Fraction`` values;
it exists so large verification runs can trade symbolic certainty for
speed.  Both contexts expose the same small protocol (``one``, ``zero``,
``v``, ``v_pow``, ``from_int``, ``from_fraction``, ``parse``, ``text``)
and every algebraic routine in this package is written against it.

The module also provides polynomials in an auxiliary variable u over
either context (``UPoly``), truncated exponentials of such polynomials,
product expansions from root multisets (``PlusMinusSeries``), and the
quantum integers and Gaussian binomial coefficients

    [s]        = (v^s - v^-s) / (v - v^-1),
    [c over a] = prod_{s=1}^{a} (v^{c-s+1} - v^{-c+s-1}) / (v^s - v^-s),

computed by exact division.

>>> quantum_integer(2).text()
'(v^2+1)/(v)'
>>> quantum_integer(2) == QV.v + QV.v_pow(-1)
True
>>> QV.parse("(v^2-1)/(v)") == QV.v - QV.v_inv
True
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Union

__all__ = [
    "FieldElem",
    "NotPolynomial",
    "NOT_POLYNOMIAL",
    "PlusMinusSeries",
    "QV",
    "RationalScalars",
    "SymbolicScalars",
    "UPoly",
    "exp_truncated",
    "poly_ratio_if_polynomial",
    "quantum_binomial",
    "quantum_integer",
    "scalar_sort_key",
    "scalar_text",
]

_F0 = Fraction(0)
_F1 = Fraction(1)

# ---------------------------------------------------------------------------
# Laurent polynomials as {exponent: Fraction} dicts.  These helpers never
# mutate their arguments; zero coefficients are never stored.


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        y = out.get(e, _F0) + c
        if y:
            out[e] = y
        else:
            out.pop(e, None)
    return out


def _pneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) == 1:
        ((ea, ca),) = a.items()
        return {ea + e: ca * c for e, c in b.items()}
    if len(b) == 1:
        ((eb, cb),) = b.items()
        return {eb + e: cb * c for e, c in a.items()}
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            y = out.get(e, _F0) + ca * cb
            if y:
                out[e] = y
            else:
                out.pop(e, None)
    return out


def _pshift(a: dict, k: int) -> dict:
    if k == 0:
        return dict(a)
    return {e + k: c for e, c in a.items()}


def _pscale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {e: x * c for e, x in a.items()}


def _pdivmod(a: dict, b: dict) -> tuple[dict, dict]:
    # Ordinary polynomial division; requires b nonzero with exponents >= 0.
    db = max(b)
    lb = b[db]
    q: dict = {}
    r = dict(a)
    while r:
        dr = max(r)
        if dr < db:
            break
        c = r[dr] / lb
        q[dr - db] = c
        for e, x in b.items():
            ee = dr - db + e
            y = r.get(ee, _F0) - c * x
            if y:
                r[ee] = y
            else:
                r.pop(ee, None)
    return q, r


def _pgcd(a: dict, b: dict) -> dict:
    # Monic gcd of two nonzero ordinary polynomials.
    while b:
        a, b = b, _pdivmod(a, b)[1]
    lead = a[max(a)]
    if lead != 1:
        a = _pscale(a, _F1 / lead)
    return a


_DEN_ONE = {0: _F1}


class FieldElem:
    """An element of Q(v) in canonical reduced form.

    Use the ``QV`` context (or the classmethod constructors) rather than
    calling the raw constructor; arithmetic keeps results canonical.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: dict, den: dict, _raw: bool = False):
        if _raw:
            self._num = num
            self._den = den
        else:
            self._num, self._den = _normalize(num, den)
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_fraction(cls, value) -> "FieldElem":
        fr = Fraction(value)
        return cls({0: fr} if fr else {}, dict(_DEN_ONE), _raw=True)

    @classmethod
    def v_power(cls, k: int) -> "FieldElem":
        return cls({k: _F1}, dict(_DEN_ONE), _raw=True)

    @classmethod
    def from_laurent(cls, coeffs: dict) -> "FieldElem":
        num = {int(e): Fraction(c) for e, c in coeffs.items() if c}
        return cls(num, dict(_DEN_ONE), _raw=True)

    # -- arithmetic -------------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, FieldElem):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem.from_fraction(other)
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if self._den == _DEN_ONE and o._den == _DEN_ONE:
            return FieldElem(_padd(self._num, o._num), dict(_DEN_ONE), _raw=True)
        num = _padd(_pmul(self._num, o._den), _pmul(o._num, self._den))
        return FieldElem(num, _pmul(self._den, o._den))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(_pneg(self._num), self._den, _raw=True)

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        if self._den == _DEN_ONE and o._den == _DEN_ONE:
            return FieldElem(_pmul(self._num, o._num), dict(_DEN_ONE), _raw=True)
        return FieldElem(_pmul(self._num, o._num), _pmul(self._den, o._den))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if not self._num:
            raise ZeroDivisionError("inverse of zero in Q(v)")
        return FieldElem(dict(self._den), dict(self._num))

    def __truediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = FieldElem.from_fraction(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __bool__(self):
        return bool(self._num)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (
                    tuple(sorted(self._num.items())),
                    tuple(sorted(self._den.items())),
                )
            )
        return self._hash

    # -- presentation -----------------------------------------------------

    def text(self) -> str:
        """Serialize as a reduced fraction of integer Laurent polynomials.

        The numerator's negative powers of v are cleared into the
        denominator so both parts print as ordinary polynomials, e.g.
        ``(v^2-1)/(v)`` for v - v^-1.
        """
        num, den = _int_clear(self._num, self._den)
        if den == {0: 1}:
            return _format_int_poly(num)
        return "(%s)/(%s)" % (_format_int_poly(num), _format_int_poly(den))

    def __str__(self):
        return self.text()

    def __repr__(self):
        return "FieldElem(%r)" % self.text()

    def substitute(self, value: Fraction) -> Fraction:
        """Evaluate at a rational v; raises ZeroDivisionError if the
        denominator vanishes there."""
        num = _eval_poly(self._num, value)
        den = _eval_poly(self._den, value)
        return num / den


def _normalize(num: dict, den: dict) -> tuple[dict, dict]:
    if not den:
        raise ZeroDivisionError("zero denominator in Q(v)")
    num = {e: c for e, c in num.items() if c}
    if not num:
        return {}, dict(_DEN_ONE)
    if den == _DEN_ONE:
        return num, dict(_DEN_ONE)
    mn = min(num)
    md = min(den)
    shift = mn - md
    n0 = _pshift(num, -mn)
    d0 = _pshift(den, -md)
    if len(d0) > 1 or max(d0) > 0:
        if len(n0) > 1 or max(n0) > 0:
            g = _pgcd(n0, d0)
            if len(g) > 1 or max(g) > 0:
                n0, _ = _pdivmod(n0, g)
                d0, _ = _pdivmod(d0, g)
    lead = d0[max(d0)]
    if lead != 1:
        inv = _F1 / lead
        n0 = _pscale(n0, inv)
        d0 = _pscale(d0, inv)
    if d0 == _DEN_ONE:
        return _pshift(n0, shift), dict(_DEN_ONE)
    return _pshift(n0, shift), d0


def _eval_poly(p: dict, value: Fraction) -> Fraction:
    total = _F0
    for e, c in p.items():
        total += c * value**e
    return total


def _int_clear(num: dict, den: dict) -> tuple[dict, dict]:
    """Rescale a canonical fraction so both parts have integer coefficients,
    non-negative exponents, and overall content 1."""
    shift = min(0, min(num)) if num else 0
    lcm = 1
    for c in list(num.values()) + list(den.values()):
        lcm = lcm * c.denominator // _int_gcd(lcm, c.denominator)
    n = {e - shift: int(c * lcm) for e, c in num.items()}
    d = {e - shift: int(c * lcm) for e, c in den.items()}
    content = 0
    for c in list(n.values()) + list(d.values()):
        content = _int_gcd(content, abs(c))
    if content > 1:
        n = {e: c // content for e, c in n.items()}
        d = {e: c // content for e, c in d.items()}
    return n, d


def _format_int_poly(p: dict) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, reverse=True):
        c = p[e]
        if e == 0:
            body = str(abs(c))
        else:
            vpart = "v" if e == 1 else "v^%d" % e
            body = vpart if abs(c) == 1 else "%d*%s" % (abs(c), vpart)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# Parsing.  Accepted forms: "(POLY)/(POLY)" or "POLY", where POLY is a sum
# of terms  [+-] [p[/q]] [*] [v[^exp]]  with integer p, q and integer exp.


def _split_terms(s: str) -> list[str]:
    terms = []
    cur = []
    for i, ch in enumerate(s):
        if ch in "+-" and cur and s[i - 1] not in "^+-*/":
            terms.append("".join(cur))
            cur = [ch]
        else:
            cur.append(ch)
    if cur:
        terms.append("".join(cur))
    return terms


def _parse_term(t: str) -> tuple[Fraction, int]:
    sign = 1
    while t and t[0] in "+-":
        if t[0] == "-":
            sign = -sign
        t = t[1:]
    if not t:
        raise ValueError("empty term")
    coeff = _F1
    exp = 0
    star = t.find("*")
    if star >= 0:
        coeff = Fraction(t[:star])
        t = t[star + 1 :]
    if t.startswith("v"):
        rest = t[1:]
        if rest.startswith("^"):
            exp = int(rest[1:])
        elif rest:
            raise ValueError("bad term %r" % t)
        else:
            exp = 1
    elif t:
        if star >= 0:
            raise ValueError("bad term %r" % t)
        coeff = Fraction(t)
    return sign * coeff, exp


def _parse_poly_text(s: str) -> dict:
    s = s.strip().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    out: dict = {}
    for term in _split_terms(s):
        c, e = _parse_term(term)
        y = out.get(e, _F0) + c
        if y:
            out[e] = y
        else:
            out.pop(e, None)
    return out


def _parse_field_text(s: str) -> tuple[dict, dict]:
    s = s.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")") and ")/(" in s:
        left, right = s[1:-1].split(")/(", 1)
        return _parse_poly_text(left), _parse_poly_text(right)
    return _parse_poly_text(s), dict(_DEN_ONE)


# ---------------------------------------------------------------------------
# Arithmetic contexts.


class SymbolicScalars:
    """The symbolic field Q(v); elements are FieldElem."""

    name = "symbolic"

    def __init__(self):
        self.zero = FieldElem.from_fraction(0)
        self.one = FieldElem.from_fraction(1)
        self.v = FieldElem.v_power(1)
        self.v_inv = FieldElem.v_power(-1)

    def v_pow(self, k: int) -> FieldElem:
        return FieldElem.v_power(k)

    def from_int(self, n: int) -> FieldElem:
        return FieldElem.from_fraction(n)

    def from_fraction(self, fr) -> FieldElem:
        return FieldElem.from_fraction(fr)

    def parse(self, text: str) -> FieldElem:
        num, den = _parse_field_text(text)
        return FieldElem(num, den)

    def text(self, x: FieldElem) -> str:
        return x.text()

    def __repr__(self):
        return "SymbolicScalars()"


class RationalScalars:
    """Q with v specialized to a rational value outside {0, 1, -1}.

    Elements are plain Fractions, so all the algebraic machinery runs
    unchanged but much faster.  Values 0, 1 and -1 are rejected because
    they collapse quantum integers (roots of unity or zero).
    """

    name = "rational"

    def __init__(self, value):
        value = Fraction(value)
        if value in (0, 1, -1):
            raise ValueError("v must avoid 0, 1 and -1")
        self.value = value
        self.zero = _F0
        self.one = _F1
        self.v = value
        self.v_inv = _F1 / value

    def v_pow(self, k: int) -> Fraction:
        return self.value**k

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, fr) -> Fraction:
        return Fraction(fr)

    def parse(self, text: str) -> Fraction:
        num, den = _parse_field_text(text)
        return _eval_poly(num, self.value) / _eval_poly(den, self.value)

    def text(self, x) -> str:
        return str(Fraction(x))

    def __repr__(self):
        return "RationalScalars(%s)" % self.value


QV = SymbolicScalars()

Scalar = Union[FieldElem, Fraction]


def scalar_text(x) -> str:
    """Canonical text for a scalar from either context."""
    if isinstance(x, FieldElem):
        return x.text()
    return str(Fraction(x))


def scalar_sort_key(x) -> tuple:
    """Deterministic ordering key for scalars, by serialized text."""
    return (len(scalar_text(x)), scalar_text(x))


# ---------------------------------------------------------------------------
# Quantum integers and Gaussian binomials.


def quantum_integer(s: int, K=QV):
    """[s] = (v^s - v^-s)/(v - v^-1); an honest Laurent polynomial."""
    num = K.v_pow(s) - K.v_pow(-s)
    if not num:
        return K.zero
    return num / (K.v - K.v_pow(-1))


def quantum_binomial(c: int, a: int, K=QV):
    """Gaussian binomial [c over a] for integer c and a >= 0.

    Vanishes for 0 <= c < a; defined for negative c as well (the product
    formula never divides by zero).
    """
    if a < 0:
        raise ValueError("lower index must be non-negative")
    out = K.one
    for s in range(1, a + 1):
        num = K.v_pow(c - s + 1) - K.v_pow(-c + s - 1)
        den = K.v_pow(s) - K.v_pow(-s)
        out = out * num / den
        if not out:
            return K.zero
    return out


# ---------------------------------------------------------------------------
# Polynomials in u over a scalar context.


class UPoly:
    """Dense polynomial in u with scalar coefficients (index = power of u).

    Instances are immutable; trailing zero coefficients are stripped so
    equality is coefficientwise.  The same class represents polynomials
    in u^-1 where noted (the index is then the power of u^-1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls, K=QV) -> "UPoly":
        return cls((K.one,))

    @classmethod
    def from_roots(cls, roots, K=QV) -> "UPoly":
        """prod_i (1 - a_i u) for the given root data a_i."""
        out = cls((K.one,))
        for a in roots:
            out = out * cls((K.one, -a))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def constant_term(self, K=QV):
        return self.coeffs[0] if self.coeffs else K.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly(())
        out = [None] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                p = ca * cb
                out[i + j] = p if out[i + j] is None else out[i + j] + p
        return UPoly(out)

    def scale(self, c) -> "UPoly":
        return UPoly(tuple(c * x for x in self.coeffs))

    def scale_arg(self, c) -> "UPoly":
        """Substitute u -> c*u."""
        out = []
        power = None
        for k, x in enumerate(self.coeffs):
            power = (power * c) if k else (c**0)
            out.append(x * power)
        return UPoly(out)

    def truncate(self, order: int) -> "UPoly":
        """Reduce modulo u^order."""
        return UPoly(self.coeffs[:order])

    def text_coeffs(self, K=QV) -> list[str]:
        return [K.text(c) for c in self.coeffs]

    def __repr__(self):
        return "UPoly(%r)" % (self.coeffs,)


class NotPolynomial:
    """Sentinel result: the requested ratio is not a polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_POLYNOMIAL"

    def __bool__(self):
        return False


NOT_POLYNOMIAL = NotPolynomial()


def poly_ratio_if_polynomial(num: UPoly, den: UPoly, K=QV):
    """num/den when the division is exact, NOT_POLYNOMIAL otherwise.

    Both arguments must have constant term 1 (the normalization used for
    Drinfeld polynomials); anything else is an error.
    """
    if not den:
        raise ValueError("zero denominator")
    if num.constant_term(K) != K.one or den.constant_term(K) != K.one:
        raise ValueError("ratio requires constant term 1 on both sides")
    rem = list(num.coeffs)
    dc = den.coeffs
    q = []
    for _ in range(max(len(rem) - len(dc) + 1, 0)):
        c = rem[0]
        q.append(c)
        for j, d in enumerate(dc):
            rem[j] = rem[j] - c * d
        rem.pop(0)
    if any(rem):
        return NOT_POLYNOMIAL
    return UPoly(q)


def exp_truncated(p: UPoly, order: int, K=QV) -> UPoly:
    """exp of a polynomial with zero constant term, modulo u^order."""
    if p.coeffs and p.coeffs[0]:
        raise ValueError("exp needs zero constant term")
    out = UPoly((K.one,))
    term = UPoly((K.one,))
    factorial = 1
    for m in range(1, order):
        term = (term * p).truncate(order)
        if not term:
            break
        factorial *= m
        out = out + term.scale(K.from_fraction(Fraction(1, factorial)))
    return out.truncate(order)


class PlusMinusSeries:
    """A multiset of nonzero root data {a_i} with its two product
    expansions: prod (1 - a_i u) and prod (1 - a_i^-1 u^-1)."""

    __slots__ = ("roots", "K")

    def __init__(self, roots, K=QV):
        roots = tuple(roots)
        for a in roots:
            if not a:
                raise ValueError("zero root in product expansion")
        self.roots = tuple(sorted(roots, key=scalar_sort_key))
        self.K = K

    def expand_plus(self) -> UPoly:
        return UPoly.from_roots(self.roots, self.K)

    def expand_minus(self) -> UPoly:
        """Coefficients indexed by powers of u^-1."""
        inv = [self.K.one / a for a in self.roots]
        return UPoly.from_roots(inv, self.K)

    def __eq__(self, other):
        if not isinstance(other, PlusMinusSeries):
            return NotImplemented
        return self.roots == other.roots

    def __repr__(self):
        return "PlusMinusSeries([%s])" % ", ".join(
            scalar_text(a) for a in self.roots
        )
