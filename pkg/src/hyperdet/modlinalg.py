"""Exact incremental row reduction, rank and nullspace over GF(p).

ModRref maintains a full reduced row-echelon form of everything absorbed so
far.  The state is stored compressed: pivot columns are implicit (each pivot
row has leading 1 there and zeros in every other pivot column), so only the
rank x nfree block F of values on free columns is kept, as small integers.

Absorption is blocked for speed.  Incoming rows are first compressed against
the state (C = B_free - B_piv . F mod p), then C is reduced by a panel
elimination whose trailing updates are float64 matrix products.  All values
stay far below 2^53, so float64 products and bounded sums are exact; every
intermediate is reduced mod p before it can grow past that bound.  A direct
rational-arithmetic ladder is provided for small cross-checks.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix

__all__ = [
    "DEFAULT_PRIME",
    "SECOND_PRIME",
    "ModVector",
    "ModRref",
    "symmetric_lift",
    "exact_rank_ladder",
]

DEFAULT_PRIME = 1009
SECOND_PRIME = 2003

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is optional
    _mpq = Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class ModVector:
    """Sparse vector of length n with entries reduced mod p."""

    __slots__ = ("n", "indices", "values")

    def __init__(self, n: int, indices, values, p: int | None = None):
        idx = np.asarray(indices, dtype=np.int64)
        val = np.asarray(values, dtype=np.int64)
        if idx.shape != val.shape:
            raise ValueError("indices and values must have equal length")
        if p is not None:
            idx, inverse = np.unique(idx, return_inverse=True)
            merged = np.zeros(idx.size, dtype=np.int64)
            np.add.at(merged, inverse, val % p)
            val = merged % p
            keep = val != 0
            idx, val = idx[keep], val[keep]
        if idx.size and (idx[0] < 0 or idx[-1] >= n):
            raise ValueError("index out of range")
        self.n = n
        self.indices = idx
        self.values = val

    @classmethod
    def from_pairs(cls, n: int, pairs, p: int) -> "ModVector":
        acc: dict[int, int] = {}
        for c, v in pairs:
            acc[c] = (acc.get(c, 0) + v) % p
        items = sorted((c, v) for c, v in acc.items() if v)
        idx = [c for c, _ in items]
        val = [v for _, v in items]
        return cls(n, idx, val)

    def dense(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=np.int64)
        out[self.indices] = self.values
        return out

    def __len__(self) -> int:
        return self.n


def symmetric_lift(v, p: int) -> np.ndarray:
    """Entrywise representative in (-p/2, p/2) as an integer vector."""
    dense = v.dense() if isinstance(v, ModVector) else np.asarray(v, np.int64)
    dense = dense % p
    return np.where(dense > p // 2, dense - p, dense)


def _rref_dense(D: np.ndarray, p: int, panel: int = 128) -> tuple[list, list]:
    """In-place RREF of D (float64, entries in [0, p)) over GF(p).

    Returns (pivot_cols, pivot_rows), paired and ascending in column.  After
    return, row pivot_rows[t] holds the fully reduced RREF row with leading 1
    in column pivot_cols[t]; all other rows are zero mod p in every column.

    Columns are processed in panels.  Within a panel the elimination runs on
    an int64 copy without intermediate reduction (values stay below
    panel * p^2 < 2^60); the trailing block is then updated with at most one
    float64 matrix product per panel.  Multipliers are recorded per pivot, so
    the trailing rows of the new pivots must be finalized sequentially before
    the bulk product, exactly reproducing the in-panel elimination order.
    """
    m, n = D.shape
    pivot_cols: list[int] = []
    pivot_rows: list[int] = []
    free_rows = np.ones(m, dtype=bool)
    j0 = 0
    while j0 < n and len(pivot_rows) < m:
        j1 = min(j0 + panel, n)
        S = D[:, j0:j1].astype(np.int64)
        mults: list[np.ndarray] = []
        invs: list[int] = []
        panel_rows: list[int] = []
        panel_cols: list[int] = []
        for t in range(j1 - j0):
            col = S[:, t] % p
            cand = np.nonzero((col != 0) & free_rows)[0]
            if cand.size == 0:
                continue
            r = int(cand[0])
            inv = pow(int(col[r]), -1, p)
            S[r, t:] = (S[r, t:] % p) * inv % p
            mult = col
            mult[r] = 0  # zero multiplier leaves the pivot row itself intact
            S[:, t:] -= np.outer(mult, S[r, t:])
            mults.append(mult.astype(np.float64))
            invs.append(inv)
            panel_rows.append(r)
            panel_cols.append(j0 + t)
            free_rows[r] = False
        D[:, j0:j1] = S % p
        s = len(panel_rows)
        if s:
            trail = D[:, j1:]
            M = np.column_stack(mults)
            U = np.empty((s, n - j1), dtype=np.float64)
            for t, r in enumerate(panel_rows):
                acc = trail[r].copy()
                if t:
                    acc -= M[r, :t] @ U[:t]
                    acc %= p
                U[t] = acc * invs[t] % p
            for t, r in enumerate(panel_rows):
                trail[r] = U[t]
                M[r, : t + 1] = 0.0
            step = max(1, (1 << 22) // max(1, m))
            for c0 in range(0, n - j1, step):
                c1 = min(c0 + step, n - j1)
                trail[:, c0:c1] -= M @ U[:, c0:c1]
                trail[:, c0:c1] %= p
            pivot_rows.extend(panel_rows)
            pivot_cols.extend(panel_cols)
        j0 = j1
    return pivot_cols, pivot_rows


class ModRref:
    """Incremental reduced row-echelon form over GF(p).

    The represented matrix has self.rank rows over self.ncols columns: row t
    has a 1 in pivot column t, zeros in the other pivot columns, and the
    stored values self._f[t] on the free (non-pivot) columns.
    """

    def __init__(self, p: int, ncols: int, *, row_chunk: int = 4096):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if ncols < 0:
            raise ValueError("ncols must be >= 0")
        self.p = p
        self.ncols = ncols
        self._row_chunk = row_chunk
        self._dtype = np.int16 if p < (1 << 15) else np.int32
        self._pivcols = np.empty(0, dtype=np.int64)
        self._free = np.arange(ncols, dtype=np.int64)
        self._f = np.zeros((0, ncols), dtype=self._dtype)

    @property
    def rank(self) -> int:
        return len(self._pivcols)

    @property
    def nullity(self) -> int:
        return self.ncols - self.rank

    @property
    def pivot_columns(self) -> np.ndarray:
        return self._pivcols.copy()

    def absorb_block(self, rows: list[ModVector]) -> "ModRref":
        """Reduce the rows against the state and extend it; returns self."""
        for start in range(0, len(rows), self._row_chunk):
            self._absorb_chunk(rows[start : start + self._row_chunk])
        return self

    def _absorb_chunk(self, rows: list[ModVector]) -> None:
        if not rows or self._free.size == 0:
            return
        p = self.p
        for v in rows:
            if v.n != self.ncols:
                raise ValueError(f"row length {v.n} != {self.ncols} columns")
        indptr = np.zeros(len(rows) + 1, dtype=np.int64)
        np.cumsum([v.indices.size for v in rows], out=indptr[1:])
        indices = np.concatenate([v.indices for v in rows])
        data = np.concatenate([v.values for v in rows])
        mat = csr_matrix(
            (data % p, indices, indptr), shape=(len(rows), self.ncols)
        )
        # Compress against current pivots: C = B_free - B_piv . F  (mod p).
        if self.rank:
            c = mat[:, self._free].toarray().astype(np.float64)
            c -= mat[:, self._pivcols] @ self._f.astype(np.float64)
            c %= p
        else:
            c = mat.toarray().astype(np.float64)
        piv_local, piv_rows = _rref_dense(c, p)
        if not piv_local:
            return
        new_pivs = self._free[piv_local]
        keep = np.ones(self._free.size, dtype=bool)
        keep[piv_local] = False
        r2 = c[piv_rows][:, keep]
        if self.rank:
            f64 = self._f.astype(np.float64)
            f_kept = f64[:, keep] - f64[:, piv_local] @ r2
            f_kept %= p
        else:
            f_kept = np.empty((0, int(keep.sum())), dtype=np.float64)
        all_pivs = np.concatenate([self._pivcols, new_pivs])
        order = np.argsort(all_pivs, kind="stable")
        stacked = np.vstack([f_kept, r2]).astype(self._dtype)
        self._pivcols = all_pivs[order]
        self._f = stacked[order]
        self._free = self._free[keep]

    def nullspace(self) -> list[ModVector]:
        """Canonical basis: one vector per free column, ascending."""
        out = []
        for j, col in enumerate(self._free):
            vals = (-self._f[:, j]) % self.p
            nz = np.nonzero(vals)[0]
            idx = np.concatenate([self._pivcols[nz], [col]])
            val = np.concatenate([vals[nz], [1]])
            order = np.argsort(idx)
            out.append(ModVector(self.ncols, idx[order], val[order]))
        return out

    def rows(self) -> list[ModVector]:
        """The stored RREF rows as sparse vectors (pivot entry included)."""
        out = []
        for t in range(self.rank):
            vals = self._f[t].astype(np.int64)
            nz = np.nonzero(vals)[0]
            idx = np.concatenate([[self._pivcols[t]], self._free[nz]])
            val = np.concatenate([[1], vals[nz]])
            order = np.argsort(idx)
            out.append(ModVector(self.ncols, idx[order], val[order]))
        return out

    def check_structure(self) -> None:
        """Raise ValueError if any RREF invariant is violated."""
        piv, free = self._pivcols, self._free
        if np.any(np.diff(piv) <= 0) or np.any(np.diff(free) <= 0):
            raise ValueError("pivot/free columns not strictly ascending")
        if np.intersect1d(piv, free).size:
            raise ValueError("pivot and free columns overlap")
        if piv.size + free.size != self.ncols:
            raise ValueError("pivot and free columns do not cover the matrix")
        if self._f.shape != (piv.size, free.size):
            raise ValueError("stored block has wrong shape")
        if self._f.size:
            if self._f.min() < 0 or self._f.max() >= self.p:
                raise ValueError("entries not reduced mod p")
            # Row t has leading entry in its pivot column: every free column
            # to the left of it must be zero.
            left = free[None, :] < piv[:, None]
            if np.any(left & (self._f != 0)):
                raise ValueError("nonzero entry left of a leading 1")


def exact_rank_ladder(blocks, ncols: int) -> list[int]:
    """Cumulative ranks over the rationals, one entry per block.

    blocks is an iterable of row lists; each row is a list of (column, int)
    pairs.  Small instances only: this is the characteristic-0 cross-check
    for the modular engine, using exact rational elimination.
    """
    pivots: dict[int, dict[int, object]] = {}
    ladder = []
    for block in blocks:
        for pairs in block:
            row = {c: _mpq(v) for c, v in pairs if v}
            while row:
                c = min(row)
                lead = row.pop(c)
                prow = pivots.get(c)
                if prow is None:
                    pivots[c] = {cc: vv / lead for cc, vv in row.items()}
                    break
                for cc, vv in prow.items():
                    nv = row.get(cc, 0) - lead * vv
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
        ladder.append(len(pivots))
    return ladder
