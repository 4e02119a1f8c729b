"""Named verification suites behind the command line.

Every suite returns the same report shape:

    {"suite": name, "parameters": {...}, "passed": bool,
     "checks": [{"name", "checked", "pass", "counterexample"?}, ...]}

with checks assembled in a fixed order and counterexamples fully
JSON-serializable, so identical configurations produce identical
reports.  The suites are exhaustive over their declared ranges; nothing
here is sampled.
"""

from __future__ import annotations

from itertools import product

from .combinatorics import (
    Multisegment,
    Segment,
    dual_partition,
    multisegments_over,
    partitions,
)
from .drinfeld import g_projection, pa, pa_inverse, tilde
from .errors import check_hecke_rank, check_schur_bounds
from .hecke import ideal_I, ideal_J
from .scalar import QV, scalar_text
from .schur_functor import (
    highest_weight_vectors,
    k_eigenvalue_check,
    pseudo_hw_report,
    exterior_window_dim,
    schur_image,
)
from .tensor_space import TensorVector, commutation_witness, h_act

__all__ = [
    "SUITE_NAMES",
    "run_suite",
    "hecke_relation_suite",
    "bimodule_suite",
    "rogawski_suite",
    "factorization_suite",
    "bijection_suite",
    "central_character_suite",
    "gfunctor_suite",
    "default_grid",
    "generic_multisegment",
    "weights_to_json",
]

GENERIC_PRIMES = (2, 3, 5, 7)


def default_grid(K=QV) -> list:
    """Centers q * v^k for q in {2, 3, 5} and |k| <= 2."""
    out = []
    for q in (2, 3, 5):
        for k in range(-2, 3):
            out.append(K.from_int(q) * K.v**k)
    return out


def generic_multisegment(mu, K=QV) -> Multisegment:
    """Segments with lengths mu and pairwise multiplicatively
    independent centers (distinct primes), so no two are linked."""
    if len(mu) > len(GENERIC_PRIMES):
        raise ValueError("not enough generic centers staged")
    return Multisegment(
        [
            Segment(K.from_int(GENERIC_PRIMES[i]), m)
            for i, m in enumerate(mu)
        ]
    )


def weights_to_json(report: dict) -> list:
    return [
        {"weight": list(w), "dim": d}
        for w, d in sorted(report.items(), reverse=True)
    ]


class _Tally:
    """Accumulates one named check: count plus first counterexample."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.counterexample = None

    def record(self, ok: bool, payload):
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = payload

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "checked": self.checked,
            "pass": self.counterexample is None,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _report(suite: str, parameters: dict, tallies) -> dict:
    checks = [t.to_json() for t in tallies]
    return {
        "suite": suite,
        "parameters": parameters,
        "passed": all(c["pass"] for c in checks),
        "checks": checks,
    }


def hecke_relation_suite(K, n: int, r: int, window=None) -> dict:
    """Defining relations of the affine Hecke algebra as operator
    identities on tensor basis vectors with indices in the window."""
    check_hecke_rank(r)
    if window is None:
        window = (-n, 2 * n)
    lo, hi = window
    v2 = K.v_pow(2)
    cache: dict = {}

    def on_basis(idx, gen):
        key = (idx, gen)
        got = cache.get(key)
        if got is None:
            got = h_act(TensorVector.basis(K, idx), gen, n)
            cache[key] = got
        return got

    def act(tv, gen):
        out = TensorVector(K)
        for idx, c in tv.terms.items():
            out = out + on_basis(idx, gen).scaled(c)
        return out

    quadratic = _Tally("quadratic")
    braid = _Tally("braid")
    t_commute = _Tally("t-commute")
    x_commute = _Tally("x-commute")
    x_inverse = _Tally("x-inverse")
    mixed_same = _Tally("mixed-defining")
    mixed_far = _Tally("mixed-commute")

    for idx in product(range(lo, hi + 1), repeat=r):
        omega = TensorVector.basis(K, idx)
        for k in range(1, r):
            tk = on_basis(idx, ("T", k))
            lhs = act(tk, ("T", k))
            rhs = tk.scaled(v2 - K.one) + omega.scaled(v2)
            quadratic.record(lhs == rhs, {"index": list(idx), "k": k})
        for k in range(1, r - 1):
            a = act(act(on_basis(idx, ("T", k)), ("T", k + 1)), ("T", k))
            b = act(act(on_basis(idx, ("T", k + 1)), ("T", k)), ("T", k + 1))
            braid.record(a == b, {"index": list(idx), "k": k})
        for j in range(1, r - 1):
            for k in range(j + 2, r):
                a = act(on_basis(idx, ("T", j)), ("T", k))
                b = act(on_basis(idx, ("T", k)), ("T", j))
                t_commute.record(
                    a == b, {"index": list(idx), "j": j, "k": k}
                )
        for t in range(1, r + 1):
            back = h_act(h_act(omega, ("X", t), n), ("Xinv", t), n)
            x_inverse.record(back == omega, {"index": list(idx), "t": t})
            for u in range(t + 1, r + 1):
                a = h_act(h_act(omega, ("X", t), n), ("X", u), n)
                b = h_act(h_act(omega, ("X", u), n), ("X", t), n)
                x_commute.record(
                    a == b, {"index": list(idx), "t": t, "u": u}
                )
        for k in range(1, r):
            lhs = act(h_act(on_basis(idx, ("T", k)), ("X", k), n), ("T", k))
            rhs = h_act(omega, ("X", k + 1), n).scaled(v2)
            mixed_same.record(lhs == rhs, {"index": list(idx), "k": k})
            for t in range(1, r + 1):
                if t in (k, k + 1):
                    continue
                a = on_basis(idx, ("T", k))
                lhs2 = h_act(a, ("X", t), n)
                rhs2 = act(h_act(omega, ("X", t), n), ("T", k))
                mixed_far.record(
                    rhs2 == lhs2, {"index": list(idx), "t": t, "k": k}
                )

    return _report(
        "hecke-relations",
        {"n": n, "r": r, "window": [lo, hi]},
        (
            quadratic,
            braid,
            t_commute,
            x_commute,
            x_inverse,
            mixed_same,
            mixed_far,
        ),
    )


def bimodule_suite(K, n: int, r: int, window=None, zmax: int = 2) -> dict:
    """Commutation of the two actions, exhaustively over the window."""
    check_hecke_rank(r)
    if window is None:
        window = (-n, 2 * n)
    witness = commutation_witness(K, n, r, window, zmax=zmax, cap=1)
    tally = _Tally("u-h-commutation")
    tally.checked = witness["checked"]
    if witness["violations"]:
        tally.counterexample = witness["violations"][0]
    return _report(
        "bimodule",
        {"n": n, "r": r, "window": list(window), "zmax": zmax},
        (tally,),
    )


def rogawski_suite(K, r: int) -> dict:
    """Annihilator-ideal equality for every dominant shape of r."""
    check_hecke_rank(r)
    tallies = []
    for mu in partitions(r):
        tally = _Tally("I=J mu=%s" % (list(mu),))
        same = ideal_I(K, mu) == ideal_J(K, mu)
        tally.record(same, {"mu": list(mu)})
        tallies.append(tally)
    return _report("rogawski", {"r": r}, tallies)


def factorization_suite(K, n: int, r: int, grid=None) -> dict:
    """Dimension law and segmentwise factorization of window modules.

    Per dominant shape: the module dimension equals both the binomial
    product and the product of single-segment dimensions.  Over the
    center grid: the dimension law for every multisegment.
    """
    check_schur_bounds(n, r)
    from math import comb

    tallies = []
    exterior = {}
    for mu in partitions(r):
        s = generic_multisegment(mu, K)
        W = schur_image(n, s, K)
        expected = 1
        for m in mu:
            expected *= comb(n, m)
        law = _Tally("dim-law mu=%s" % (list(mu),))
        law.record(
            W.dimension == expected,
            {"mu": list(mu), "dimension": W.dimension, "expected": expected},
        )
        factors = 1
        for m in mu:
            if m not in exterior:
                exterior[m] = exterior_window_dim(n, m, K)
            factors *= exterior[m]
        fac = _Tally("factor-product mu=%s" % (list(mu),))
        fac.record(
            W.dimension == factors,
            {"mu": list(mu), "dimension": W.dimension, "factors": factors},
        )
        tallies.append(law)
        tallies.append(fac)
    if grid is None:
        grid = [K.from_int(q) for q in (2, 3, 5)]
    grid_tally = _Tally("dim-law-grid")
    for s in multisegments_over(r, grid, r):
        W = schur_image(n, s, K)
        mu = s.wp()
        expected = 1
        for m in mu:
            expected *= comb(n, m)
        grid_tally.record(
            W.dimension == expected,
            {
                "multisegment": s.to_json(),
                "dimension": W.dimension,
                "expected": expected,
            },
        )
    tallies.append(grid_tally)
    return _report(
        "factorization",
        {"n": n, "r": r, "grid": [scalar_text(c) for c in grid]},
        tallies,
    )


def bijection_suite(K, n: int, r: int, grid=None) -> dict:
    """Round trips, degree law, and dominance over the center grid."""
    check_schur_bounds(n, r)
    if grid is None:
        grid = default_grid(K)
    forward = _Tally("map-round-trip")
    backward = _Tally("tuple-round-trip")
    degrees = _Tally("degree-law")
    dominant = _Tally("dominance")
    for s in multisegments_over(r, grid, n):
        payload = {"multisegment": s.to_json()}
        Q = pa(n, r, s, K)
        dominant.record(Q.is_dominant(), payload)
        forward.record(pa_inverse(n, r, Q) == s, payload)
        back = pa(n, r, pa_inverse(n, r, Q), K)
        backward.record(back == Q, payload)
        dual = dual_partition(s.wp())
        dual = dual + (0,) * (n - len(dual))
        degrees.record(
            Q.degrees() == dual,
            {"multisegment": s.to_json(), "degrees": list(Q.degrees())},
        )
    return _report(
        "bijection",
        {"n": n, "r": r, "grid": [scalar_text(c) for c in grid]},
        (forward, backward, degrees, dominant),
    )


def central_character_suite(K, n: int, r: int, tmax: int = 2) -> dict:
    """Pseudo-highest-weight uniqueness, K-eigenvalues, and the central
    character versus the Drinfeld product, per in-window shape."""
    check_schur_bounds(n, r)
    tallies = []
    for mu in partitions(r, max_part=n):
        s = generic_multisegment(mu, K)
        W = schur_image(n, s, K)
        report = pseudo_hw_report(W, s, tmax)
        label = list(mu)
        unique = _Tally("hw-unique mu=%s" % (label,))
        unique.record(
            report.hw_dim == 1, {"mu": label, "hw_dim": report.hw_dim}
        )
        eig = _Tally("k-eigenvalues mu=%s" % (label,))
        if report.hw_dim >= 1:
            hw = highest_weight_vectors(W, report.weight)
            eig.record(
                k_eigenvalue_check(W, hw.vectors()[0], report.weight),
                {"mu": label, "weight": list(report.weight)},
            )
        else:
            eig.record(False, {"mu": label, "hw_dim": report.hw_dim})
        match = _Tally("product-match mu=%s" % (label,))
        match.record(
            report.match,
            {
                "mu": label,
                "series": [scalar_text(c) for c in report.series],
                "expected": [scalar_text(c) for c in report.expected],
            },
        )
        tallies.extend((unique, eig, match))
    return _report(
        "central-character", {"n": n, "r": r, "tmax": tmax}, tallies
    )


def gfunctor_suite(K, N: int, n: int, r: int, grid=None) -> dict:
    """Window-extension compatibility of the bijection and per-weight
    dimensions of the projected large-window module."""
    check_schur_bounds(n, r)
    check_schur_bounds(N, r)
    tallies = []
    for mu in partitions(r, max_part=n):
        s = generic_multisegment(mu, K)
        label = list(mu)
        compat = _Tally("tilde-compat mu=%s" % (label,))
        compat.record(
            pa(N, r, s, K) == tilde(pa(n, r, s, K), N), {"mu": label}
        )
        small = schur_image(n, s, K)
        projected = g_projection(N, n, schur_image(N, s, K))
        weights = _Tally("g-weights mu=%s" % (label,))
        weights.record(
            projected.weight_report() == small.weight_report(),
            {
                "mu": label,
                "projected": weights_to_json(projected.weight_report()),
                "direct": weights_to_json(small.weight_report()),
            },
        )
        tallies.extend((compat, weights))
    if grid is None:
        grid = default_grid(K)
    grid_tally = _Tally("tilde-grid")
    for s in multisegments_over(r, grid, n):
        grid_tally.record(
            pa(N, r, s, K) == tilde(pa(n, r, s, K), N),
            {"multisegment": s.to_json()},
        )
    tallies.append(grid_tally)
    return _report(
        "gfunctor",
        {"N": N, "n": n, "r": r, "grid": [scalar_text(c) for c in grid]},
        tallies,
    )


SUITE_NAMES = (
    "hecke-relations",
    "bimodule",
    "rogawski",
    "factorization",
    "bijection",
    "central-character",
    "gfunctor",
    "all",
)


def run_suite(
    name: str,
    K,
    n: int,
    r: int,
    N=None,
    window=None,
    tmax: int = 2,
    grid=None,
) -> list:
    """Dispatch one suite (or all of them) and return report dicts."""
    if name == "hecke-relations":
        return [hecke_relation_suite(K, n, r, window)]
    if name == "bimodule":
        return [bimodule_suite(K, n, r, window)]
    if name == "rogawski":
        return [rogawski_suite(K, r)]
    if name == "factorization":
        return [factorization_suite(K, n, r, grid)]
    if name == "bijection":
        return [bijection_suite(K, n, r, grid)]
    if name == "central-character":
        return [central_character_suite(K, n, r, tmax)]
    if name == "gfunctor":
        big = N if N is not None else n + 1
        return [gfunctor_suite(K, big, n, r, grid)]
    if name == "all":
        out = []
        for sub in SUITE_NAMES[:-1]:
            out.extend(run_suite(sub, K, n, r, N, window, tmax, grid))
        return out
    raise ValueError("unknown suite %r" % (name,))
