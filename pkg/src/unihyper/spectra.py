"""Spectra: numeric eigenvalues, exact characteristic polynomials and ranks,
multiplicity counting, and the edge-deletion interlacing check."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.linalg import eigh

from .core import Hypergraph, make_part
from .errors import (
    InvalidInputError,
    KindError,
    NumericalDisagreementError,
    NumericInputError,
)
from .exact import charpoly_berkowitz, det_bareiss, minor, rank_exact
from .matrices import SymMatrix, unified_laplacian, unified_signless_laplacian

DEFAULT_TOL = 1e-10
CHAIN_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted in descending order, plus optional eigenvectors.

    ``vectors[:, i]`` belongs to ``values[i]`` when vectors are present.
    """

    values: tuple
    residual: float
    kind: str
    matrix: SymMatrix | None = field(default=None, repr=False)
    vectors: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def nu(self, i: int) -> float:
        """1-based access matching the descending convention."""
        return self.values[i - 1]


def eigenvalues_sym(M: SymMatrix, tol: float = DEFAULT_TOL, vectors: bool = False) -> Spectrum:
    """Eigen-decomposition of a symmetric matrix.

    Uses LAPACK's tridiagonal reduction with implicit-shift QL/QR (``dsyev``),
    which is deterministic. Every pair is checked against its residual.
    """
    if tol <= 0:
        raise InvalidInputError("tol must be positive")
    a = np.asarray(M.data, dtype=np.float64)
    if not np.all(np.isfinite(a)):
        raise NumericInputError("matrix has non-finite entries")
    if a.shape[0] == 0:
        return Spectrum((), 0.0, M.name, M, np.zeros((0, 0)) if vectors else None)
    w, v = eigh(a, driver="ev")
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    res = float(np.max(np.linalg.norm(a @ v - v * w, axis=0)))
    bound = tol * (1.0 + float(np.linalg.norm(a)))
    if res > bound:
        raise NumericalDisagreementError(f"eigen-residual {res:.3e} exceeds {bound:.3e}")
    values = tuple(0.0 if x == 0 else float(x) for x in w)
    return Spectrum(values, res, M.name, M, v if vectors else None)


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial, coefficients highest degree first."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def roots(self) -> np.ndarray:
        if self.degree == 0:
            return np.zeros(0)
        r = np.roots([float(c) for c in self.coeffs])
        return np.sort(r.real)[::-1]

    def __str__(self):
        terms = []
        d = self.degree
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = d - i
            mag = abs(c)
            coef = "" if mag == 1 and p > 0 else str(mag)
            var = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, coef + var))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


def _exact_rows(M) -> list:
    if isinstance(M, SymMatrix):
        if not M.is_exact:
            raise KindError(f"{M.name} is a float matrix; exact routines need integers")
        return M.exact()
    rows = [list(r) for r in M]
    for r in rows:
        for x in r:
            if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
                raise KindError("exact routines need int or Fraction entries")
    return rows


def char_poly_exact(M) -> CharPoly:
    return CharPoly(tuple(charpoly_berkowitz(_exact_rows(M))))


def cofactor_exact(M, i: int, j: int):
    rows = _exact_rows(M)
    k = len(rows)
    if not (0 <= i < k and 0 <= j < k):
        raise InvalidInputError(f"cofactor index ({i}, {j}) out of range for order {k}")
    sign = -1 if (i + j) % 2 else 1
    return sign * det_bareiss(minor(rows, i, j))


def matrix_rank(M) -> int:
    if hasattr(M, "exact"):
        return rank_exact(M.exact())
    return rank_exact(_exact_rows(M))


def default_cluster_tol(M: SymMatrix | None) -> float:
    norm = M.frobenius() if M is not None else 0.0
    return 1e-7 * (1.0 + norm)


def exact_multiplicity(M: SymMatrix, target: int) -> int | None:
    """Nullity of M - target*I by exact rank, when that is expressible exactly."""
    if M.is_exact:
        rows = M.exact()
        for i in range(len(rows)):
            rows[i][i] -= target
        return len(rows) - rank_exact(rows)
    if M.pencil is not None:
        # normalized Laplacian: nullity of (L - t*D) on parts with d* > 0,
        # plus the all-zero rows of parts with d* = 0 when t = 0
        lap, dstar = M.pencil
        keep = [i for i, d in enumerate(dstar) if d > 0]
        rows = [[lap[i][j] - (target * dstar[i] if i == j else 0) for j in keep] for i in keep]
        null = len(keep) - rank_exact(rows) if keep else 0
        if target == 0:
            null += len(dstar) - len(keep)
        return null
    return None


def multiplicity_of(spec: Spectrum, target: float, cluster_tol: float | None = None) -> int:
    """Number of eigenvalues within ``cluster_tol`` of ``target``.

    For integer targets the count is compared with an exact nullity whenever
    the source matrix allows it; a mismatch raises.
    """
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(spec.matrix)
    if cluster_tol <= 0:
        raise InvalidInputError("cluster_tol must be positive")
    count = sum(abs(x - target) <= cluster_tol for x in spec.values)
    if spec.matrix is not None and float(target).is_integer():
        exact = exact_multiplicity(spec.matrix, int(target))
        if exact is not None and exact != count:
            raise NumericalDisagreementError(
                f"clustered multiplicity {count} of {target} disagrees with exact nullity {exact}"
            )
    return count


def distinct_count(values, tol: float = 1e-6) -> int:
    """Number of clusters among sorted values, gaps larger than ``tol`` split."""
    vals = sorted(values)
    if not vals:
        return 0
    count = 1
    for a, b in zip(vals, vals[1:]):
        if b - a > tol:
            count += 1
    return count


@dataclass(frozen=True)
class InterlacingReport:
    applicable: bool
    reason: str
    branch: str | None = None  # "pair" for |e| = 2, "shifted" otherwise
    nu_holds: bool | None = None
    xi_holds: bool | None = None
    worst_slack: float | None = None

    @property
    def holds(self) -> bool | None:
        if not self.applicable:
            return None
        return bool(self.nu_holds and self.xi_holds)


def _chain_slack(chain) -> float:
    return min((b - a for a, b in zip(chain, chain[1:])), default=0.0)


def _chain(before, after, pair: bool, r: int) -> list[float]:
    """Chain 0 <= after_k <= before_k <= after_{k-1}+2r <= before_{k-1}+2r <= ...

    Values are 1-based descending; the offsets 2rj vanish when ``pair``.
    """
    k = len(before)
    chain = [0.0, after[k - 1], before[k - 1]]
    for j in range(1, k):
        off = 0 if pair else 2 * r * j
        chain += [after[k - j - 1] + off, before[k - j - 1] + off]
    return chain


def interlacing_check(H: Hypergraph, e, r: int, tol: float = CHAIN_TOL) -> InterlacingReport:
    """Check the eigenvalue chains relating H and H - e^r.

    Returns an inapplicable report unless ``e`` is a non-loop edge with
    multiplicity at least ``r`` whose removal leaves I(H) unchanged.
    """
    e = make_part(e)
    if len(e) < 2:
        return InterlacingReport(False, "edge is a loop")
    m = H.multiplicity(e)
    if not (isinstance(r, int) and 0 < r <= m):
        return InterlacingReport(False, f"r must satisfy 0 < r <= m(e) = {m}")
    H2 = H.without(e, r)
    if H2.index != H.index:
        return InterlacingReport(False, "removing the edge changes the index set")
    pair = len(e) == 2
    L1 = eigenvalues_sym(unified_laplacian(H)).values
    L2 = eigenvalues_sym(unified_laplacian(H2)).values
    Q1 = eigenvalues_sym(unified_signless_laplacian(H)).values
    Q2 = eigenvalues_sym(unified_signless_laplacian(H2)).values
    s_nu = _chain_slack(_chain(L1, L2, pair, r))
    s_xi = _chain_slack(_chain(Q1, Q2, pair, r))
    return InterlacingReport(
        True,
        "ok",
        "pair" if pair else "shifted",
        s_nu >= -tol,
        s_xi >= -tol,
        min(s_nu, s_xi),
    )
