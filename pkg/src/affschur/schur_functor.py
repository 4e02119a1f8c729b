"""Window modules for the affine Schur functor.

For a multisegment s with |s| = r and lengths mu = (mu_1 >= mu_2 >= ...),
the functor sends the induced evaluation-module ideal attached to s to a
module realized concretely inside the n-window tensor space: juxtaposing
the segment expansions gives the parameter tuple a = a(s), the window
span is

    span{ omega_j y_mu : j in I(n, r) }   inside  Omega_n^(x r),

and the loop-algebra generators act by the tensor action followed by
reduction of out-of-window indices through the evaluation substitution

    omega_{j + n lam}  =  omega_j X^{-lam}  ->  a^{-lam} omega_j.

Everything downstream is a report over this realization: the dimension
(which matches prod_i C(n, mu_i), or vanishes when some length exceeds
n), weight space dimensions, pseudo-highest-weight vectors (killed by
E_1..E_{n-1}, of weight the dual partition mu'), eigenvalues of the
central elements z_t^+, and the resulting truncated central character

    exp( - sum_{t <= tmax} zeta_t u^t / t ),

which the Drinfeld-polynomial product of the associated dominant tuple
must reproduce.  Spanning vectors are weight homogeneous, so the echelon
basis splits along weights and every report is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import (
    Multisegment,
    dual_partition,
    decompose_index,
    in_window,
    index_tuples,
)
from .errors import check_schur_bounds
from .hecke import y_mu
from .linalg import SubspaceBasis, nullspace
from .scalar import QV, UPoly, exp_truncated
from .tensor_space import TensorVector, h_act, u_act, weight_of

__all__ = [
    "SpannedModule",
    "schur_image",
    "highest_weight_vectors",
    "central_character",
    "product_drinfeld_check",
    "factorization_check",
    "weight_dimension_report",
    "k_eigenvalue_check",
    "PseudoHWReport",
    "pseudo_hw_report",
    "exterior_window_dim",
]


class SpannedModule:
    """A loop-algebra module spanned inside the n-window tensor space.

    Holds the echelonized basis over the I(n, r) coordinate columns and
    applies generators with out-of-window reduction through the parameter
    tuple.  Action matrices are cached; computing one checks closure.
    """

    __slots__ = (
        "K",
        "n",
        "r",
        "params",
        "mu",
        "ambient",
        "columns",
        "basis",
        "_matrices",
    )

    def __init__(self, K, n: int, r: int, params: tuple, mu: tuple, rows):
        self.K = K
        self.n = n
        self.r = r
        self.params = tuple(params)
        self.mu = tuple(mu)
        self.ambient = list(index_tuples(n, r))
        self.columns = {idx: c for c, idx in enumerate(self.ambient)}
        self.basis = SubspaceBasis.from_vectors(rows)
        self._matrices = {}

    @property
    def dimension(self) -> int:
        return self.basis.rank

    def reduce_tensor(self, tv: TensorVector) -> dict:
        """Coordinates of a tensor vector after out-of-window reduction."""
        out: dict = {}
        for idx, c in tv.terms.items():
            if in_window(idx, self.n):
                col = self.columns[idx]
                scale = c
            else:
                j, lam = decompose_index(idx, self.n)
                col = self.columns[j]
                scale = c
                for t, e in enumerate(lam):
                    if e:
                        scale = scale * self.params[t] ** (-e)
            y = out.get(col)
            y = scale if y is None else y + scale
            if y:
                out[col] = y
            else:
                del out[col]
        return out

    def to_tensor(self, vec: dict) -> TensorVector:
        return TensorVector(
            self.K, {self.ambient[c]: x for c, x in vec.items()}
        )

    def apply_generator(self, gen: tuple, vec: dict) -> dict:
        acted = u_act(self.to_tensor(vec), gen, self.n, self.r)
        return self.reduce_tensor(acted)

    def action_matrix(self, gen: tuple) -> list[dict]:
        """Rows of coordinates (over the basis) of gen applied to each
        basis vector.  Raises if the span is not closed under gen."""
        if gen in self._matrices:
            return self._matrices[gen]
        rows = []
        for row in self.basis.rows:
            image = self.apply_generator(gen, row)
            coords, residual = self.basis.coords(image)
            if residual:
                raise ArithmeticError(
                    "span is not closed under %r" % (gen,)
                )
            rows.append(coords)
        self._matrices[gen] = rows
        return rows

    def row_weight(self, row: dict) -> tuple:
        weights = {weight_of(self.ambient[c], self.n) for c in row}
        if len(weights) != 1:
            raise ArithmeticError("basis row mixes weights")
        return weights.pop()

    def weight_report(self) -> dict:
        """Dimension of each weight space, as {weight tuple: dim}."""
        out: dict = {}
        for row in self.basis.rows:
            w = self.row_weight(row)
            out[w] = out.get(w, 0) + 1
        return out

    def weight_rows(self, lam: tuple) -> list[dict]:
        lam = tuple(lam)
        return [
            dict(row)
            for row in self.basis.rows
            if self.row_weight(row) == lam
        ]

    def __repr__(self):
        return "SpannedModule(n=%d, r=%d, dim=%d)" % (
            self.n,
            self.r,
            self.dimension,
        )


def _window_span_rows(K, n: int, r: int, mu) -> list[dict]:
    """Coordinate vectors of omega_j y_mu for all j in I(n, r)."""
    columns = {idx: c for c, idx in enumerate(index_tuples(n, r))}
    y = y_mu(K, mu)
    rows = []
    for j in index_tuples(n, r):
        acc = TensorVector(K)
        for w, c in y.terms.items():
            tv = TensorVector.basis(K, j)
            for i in w.reduced_word():
                tv = h_act(tv, ("T", i), n)
            acc = acc + tv.scaled(c)
        rows.append({columns[idx]: c for idx, c in acc.terms.items()})
    return rows


def schur_image(n: int, s: Multisegment, K=QV) -> SpannedModule:
    """The window module attached to the multisegment s."""
    r = s.r
    check_schur_bounds(n, r)
    mu = s.wp()
    params = s.juxtapose(K)
    rows = _window_span_rows(K, n, r, mu)
    return SpannedModule(K, n, r, params, mu, rows)


def exterior_window_dim(n: int, m: int, K=QV) -> int:
    """dim of the n-window span for a single length-m segment (the
    quantum exterior power); computed by rank, not by formula."""
    rows = _window_span_rows(K, n, m, (m,))
    return SubspaceBasis.from_vectors(rows).rank


def highest_weight_vectors(W: SpannedModule, lam) -> SubspaceBasis:
    """The subspace of weight-lam vectors killed by E_1, ..., E_{n-1}.

    Returned echelonized over the ambient coordinate columns.
    """
    lam = tuple(lam)
    rows = W.weight_rows(lam)
    m = len(rows)
    if m == 0:
        return SubspaceBasis.from_vectors([])
    constraints: dict = {}
    for i in range(1, W.n):
        for k, row in enumerate(rows):
            image = W.apply_generator(("E", i), row)
            for col, c in image.items():
                constraints.setdefault((i, col), {})[k] = c
    sols = nullspace(list(constraints.values()), m, W.K.one)
    out = []
    for sol in sols:
        vec: dict = {}
        for k, f in sol.items():
            for col, c in rows[k].items():
                y = vec.get(col)
                y = f * c if y is None else y + f * c
                if y:
                    vec[col] = y
                else:
                    del vec[col]
        out.append(vec)
    return SubspaceBasis.from_vectors(out)


def central_character(W: SpannedModule, vec: dict, tmax: int) -> UPoly:
    """exp(- sum_t zeta_t u^t / t) mod u^{tmax+1}, where zeta_t is the
    eigenvalue of z_t^+ on vec; errors if vec is not an eigenvector."""
    K = W.K
    if not vec:
        raise ValueError("central character of the zero vector")
    c0 = min(vec)
    zetas = []
    for t in range(1, tmax + 1):
        image = W.apply_generator(("z+", t), vec)
        zeta = image.get(c0, K.zero) / vec[c0]
        check = dict(image)
        for col, c in vec.items():
            y = check.get(col)
            y = -zeta * c if y is None else y - zeta * c
            if y:
                check[col] = y
            else:
                del check[col]
        if check:
            raise ArithmeticError(
                "vector is not an eigenvector of z_%d^+" % t
            )
        zetas.append(zeta)
    series = UPoly(
        [K.zero]
        + [-z / K.from_int(t + 1) for t, z in enumerate(zetas)]
    )
    return exp_truncated(series, tmax + 1, K)


def k_eigenvalue_check(W: SpannedModule, vec: dict, lam) -> bool:
    """Each K_i acts on vec by v^{lam_i}."""
    K = W.K
    lam = tuple(lam)
    for i in range(1, W.n + 1):
        image = W.apply_generator(("K", i), vec)
        expected = {c: K.v_pow(lam[i - 1]) * x for c, x in vec.items()}
        if image != expected:
            return False
    return True


def _padded_dual(mu, n: int) -> tuple:
    dual = dual_partition(mu)
    if len(dual) > n:
        raise ValueError("dual partition does not fit the window")
    return dual + (0,) * (n - len(dual))


def product_drinfeld_check(
    W: SpannedModule, s: Multisegment, tmax: int
) -> bool:
    """Compare the central character of the pseudo-highest-weight vector
    with the product of the Drinfeld polynomials of the dominant tuple
    attached to s, both modulo u^{tmax+1}."""
    from .drinfeld import pa

    K = W.K
    lam = _padded_dual(W.mu, W.n)
    hw = highest_weight_vectors(W, lam)
    if hw.rank == 0:
        return False
    series = central_character(W, hw.vectors()[0], tmax)
    tup = pa(W.n, W.r, s, K)
    product = UPoly((K.one,))
    for poly in tup.polys():
        product = (product * poly).truncate(tmax + 1)
    return series == product.truncate(tmax + 1)


def factorization_check(n: int, s: Multisegment, K=QV) -> bool:
    """dim of the window module equals the product over segments of the
    single-segment window dimensions."""
    W = schur_image(n, s, K)
    product = 1
    for seg in s:
        product *= exterior_window_dim(n, seg.length, K)
        if product == 0:
            break
    return W.dimension == product


def weight_dimension_report(W: SpannedModule) -> dict:
    return W.weight_report()


@dataclass(frozen=True)
class PseudoHWReport:
    """Summary of the pseudo-highest-weight analysis of a window module."""

    weight: tuple
    hw_dim: int
    series: tuple
    expected: tuple
    match: bool


def pseudo_hw_report(
    W: SpannedModule, s: Multisegment, tmax: int
) -> PseudoHWReport:
    from .drinfeld import pa

    K = W.K
    lam = _padded_dual(W.mu, W.n)
    hw = highest_weight_vectors(W, lam)
    if hw.rank == 0:
        return PseudoHWReport(lam, 0, (), (), False)
    series = central_character(W, hw.vectors()[0], tmax)
    tup = pa(W.n, W.r, s, K)
    product = UPoly((K.one,))
    for poly in tup.polys():
        product = (product * poly).truncate(tmax + 1)
    product = product.truncate(tmax + 1)
    return PseudoHWReport(
        lam,
        hw.rank,
        tuple(series.coeffs),
        tuple(product.coeffs),
        series == product,
    )
