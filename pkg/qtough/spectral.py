"""Signless Laplacian / adjacency spectra, quotient matrices and the edge-count bound."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from scipy import optimize
from scipy.sparse.csgraph import connected_components

from .config import EQUITABLE_TOL, SOLVER_TOL
from .errors import EigenSolverError, InvalidParameters, ReducibleMatrixError
from .graph_core import Graph, iter_bits

MAX_DENSE_ORDER = 128


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u in range(g.n):
        for v in iter_bits(g.rows[u]):
            a[u, v] = 1.0
    return a


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q(G) = D(G) + A(G)."""
    q = adjacency_matrix(g)
    q[np.diag_indices(g.n)] = g.degrees()
    return q


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray
    residual: float
    spectrum: np.ndarray


def _check_symmetric(m: np.ndarray) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidParameters(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DENSE_ORDER:
        raise InvalidParameters(f"dense solver is limited to order {MAX_DENSE_ORDER}")
    if not np.array_equal(m, m.T):
        raise InvalidParameters("matrix is not symmetric")


def largest_eigenpair(m: np.ndarray, tol: float = SOLVER_TOL) -> EigenPair:
    """Largest eigenvalue with a residual-certified unit eigenvector.

    Raises EigenSolverError when LAPACK fails or when
    ||Mv - lambda v||_inf > tol * max(1, ||M||_inf).
    """
    m = np.asarray(m, dtype=np.float64)
    _check_symmetric(m)
    if m.shape[0] == 0:
        raise InvalidParameters("largest eigenvalue of an empty matrix")
    if tol <= 0:
        raise InvalidParameters(f"tol must be > 0, got {tol}")
    try:
        values, vectors = np.linalg.eigh(m)
    except np.linalg.LinAlgError as e:
        raise EigenSolverError(f"eigh did not converge: {e}") from e

    value = float(values[-1])
    vector = vectors[:, -1]
    # Perron vector sign convention
    if vector.sum() < 0:
        vector = -vector
    residual = float(np.max(np.abs(m @ vector - value * vector)))
    bound = tol * max(1.0, float(np.max(np.abs(m).sum(axis=1))))
    if residual > bound:
        raise EigenSolverError(f"residual {residual:.3e} exceeds {bound:.3e}")
    return EigenPair(value=value, vector=vector, residual=residual, spectrum=values)


def largest_eigenvalue(m: np.ndarray, tol: float = SOLVER_TOL) -> float:
    return largest_eigenpair(m, tol).value


def spectrum(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    _check_symmetric(m)
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as e:
        raise EigenSolverError(f"eigvalsh did not converge: {e}") from e


def q_index(g: Graph, tol: float = SOLVER_TOL) -> float:
    if g.n < 1:
        raise InvalidParameters("q-index needs at least one vertex")
    return largest_eigenvalue(signless_laplacian(g), tol)


def adjacency_spectral_radius(g: Graph, tol: float = SOLVER_TOL) -> float:
    if g.n < 1:
        raise InvalidParameters("spectral radius needs at least one vertex")
    return largest_eigenvalue(adjacency_matrix(g), tol)


@dataclass(frozen=True)
class Partition:
    classes: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, classes: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(tuple(c) for c in classes))

    @classmethod
    def blocks(cls, sizes: Sequence[int]) -> "Partition":
        """Consecutive index blocks of the given sizes; empty blocks are dropped."""
        classes, start = [], 0
        for size in sizes:
            if size > 0:
                classes.append(tuple(range(start, start + size)))
            start += size
        return cls(tuple(classes))

    @classmethod
    def singletons(cls, order: int) -> "Partition":
        return cls(tuple((v,) for v in range(order)))

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def validate(self, order: int) -> None:
        seen: set[int] = set()
        for c in self.classes:
            if not c:
                raise InvalidParameters("partition classes must be nonempty")
            for v in c:
                if not 0 <= v < order:
                    raise InvalidParameters(f"partition index {v} outside 0..{order - 1}")
                if v in seen:
                    raise InvalidParameters(f"partition classes overlap at {v}")
                seen.add(v)
        if len(seen) != order:
            raise InvalidParameters(f"partition covers {len(seen)} of {order} indices")


@dataclass(frozen=True)
class QuotientMatrix:
    entries: np.ndarray
    class_sizes: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def to_json(self) -> dict:
        return {"entries": self.entries.tolist(), "class_sizes": list(self.class_sizes)}


def _block_row_sums(m: np.ndarray, p: Partition) -> List[List[np.ndarray]]:
    m = np.asarray(m, dtype=np.float64)
    p.validate(m.shape[0])
    return [[m[np.ix_(ci, cj)].sum(axis=1) for cj in p.classes] for ci in p.classes]


def quotient_matrix(m: np.ndarray, p: Partition) -> QuotientMatrix:
    """Entry (i, j) is the average row sum of block M_ij."""
    sums = _block_row_sums(m, p)
    entries = np.array([[float(block.mean()) for block in row] for row in sums], dtype=np.float64)
    return QuotientMatrix(entries=entries, class_sizes=p.sizes)


def is_equitable(m: np.ndarray, p: Partition, tol: float = EQUITABLE_TOL) -> bool:
    for row in _block_row_sums(m, p):
        for block in row:
            if np.max(np.abs(block - block.mean())) > tol:
                return False
    return True


def is_irreducible(entries: np.ndarray) -> bool:
    graph = (np.asarray(entries) > 0).astype(np.int8)
    count, _ = connected_components(graph, directed=True, connection="strong")
    return count == 1


def characteristic_value(entries: np.ndarray, x: float) -> float:
    """det(xI - M)."""
    entries = np.asarray(entries, dtype=np.float64)
    return float(np.linalg.det(x * np.eye(entries.shape[0]) - entries))


def perron_root(qm: QuotientMatrix, tol: float = 1e-12) -> float:
    """Spectral radius of a nonnegative irreducible matrix.

    Bisection of det(xI - M) between a point just below the largest real
    eigenvalue estimate and the maximum row sum; the root lies in
    [min row sum, max row sum].
    """
    entries = np.asarray(qm.entries, dtype=np.float64)
    if entries.size == 0:
        raise InvalidParameters("perron root of an empty matrix")
    if np.any(entries < 0):
        raise ReducibleMatrixError("perron root needs a nonnegative matrix")
    if not is_irreducible(entries):
        raise ReducibleMatrixError("perron root needs an irreducible matrix")

    row_sums = entries.sum(axis=1)
    lo_bound, hi = float(row_sums.min()), float(row_sums.max())
    if hi - lo_bound <= tol:
        return hi

    scale = max(1.0, hi)
    # general eigensolver seeds the bracket; bisection on det(xI - M) certifies and refines it
    estimate = float(np.max(np.linalg.eigvals(entries).real))
    step = max(1e-9 * scale, 1e-12)
    lo = min(max(estimate - step, lo_bound), hi)
    while characteristic_value(entries, lo) >= 0 and lo > lo_bound:
        step *= 4
        lo = max(estimate - step, lo_bound)
    f_lo, f_hi = characteristic_value(entries, lo), characteristic_value(entries, hi)
    if f_hi == 0:
        return hi
    if f_lo == 0:
        return lo
    if f_lo > 0 or f_hi < 0:
        # the estimate already sits on the root to within rounding
        return min(max(estimate, lo_bound), hi)
    return float(optimize.bisect(lambda x: characteristic_value(entries, x), lo, hi, xtol=tol, maxiter=200))


def quotient_eigenvalues(qm: QuotientMatrix) -> np.ndarray:
    return np.sort(np.linalg.eigvals(qm.entries).real)


def das_feng_yu_bound(g: Graph) -> float:
    """q(G) <= 2e(G)/(n-1) + n - 2."""
    if g.n <= 1:
        raise InvalidParameters(f"edge-count bound needs n >= 2, got {g.n}")
    return 2 * g.edge_count / (g.n - 1) + g.n - 2
