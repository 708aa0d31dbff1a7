"""Enumeration of weight-space monomial bases W(d; Omega).

By the slice-sum characterization, the exponent arrays of weight Omega and
degree d are exactly the nonnegative p x q x r arrays with prescribed slice
sums in all three modes (a 3-dimensional contingency table with 1-dimensional
margins).  The slice sums follow from the weight by telescoping:

    T_m(i) - T_m(i+1) = omega_{m,i},   sum_i T_m(i) = d.

Enumeration is recursive backtracking over the entries in flattening order,
so the output is automatically sorted ascending in the total order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrays import ExponentArray, Format, SliceSums, Weight

__all__ = [
    "slice_sums_from_weight",
    "enumerate_weight_space",
    "count_weight_space",
    "index_of",
    "invariant_degree_info",
    "DegreeInfo",
]


def slice_sums_from_weight(
    fmt: Format, degree: int, weight: Weight
) -> SliceSums | None:
    """Solve the telescoping system for all three modes.

    Returns None when any mode's solution is non-integral or has a negative
    entry; in that case W(d; Omega) is empty.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    sums = []
    for mode in range(1, 4):
        n = fmt.dim(mode)
        omega = weight.component(mode)
        # T(i) = t + suffix(i) with suffix(i) = omega_i + ... + omega_{n-2},
        # and n*t + sum_l (l+1)*omega_l = d.
        rem = degree - sum((l + 1) * w for l, w in enumerate(omega))
        t, residue = divmod(rem, n)
        if residue:
            return None
        suffix = [0] * n
        for i in range(n - 2, -1, -1):
            suffix[i] = suffix[i + 1] + omega[i]
        ts = tuple(t + s for s in suffix)
        if any(x < 0 for x in ts):
            return None
        sums.append(ts)
    return SliceSums(*sums)


def _slice_completions(rows: tuple[int, ...], cols: tuple[int, ...], memo) -> int:
    """Count q x r tables with the given row and column sums.

    rows and cols must have equal totals.  The count only depends on the
    multisets, so memo keys use the sorted tuples.
    """
    key = (tuple(sorted(rows)), tuple(sorted(cols)))
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        return 1  # the single row is forced to equal cols entrywise
    first, rest = rows[0], rows[1:]
    total = 0

    def place(idx: int, left: int, cols_now: tuple[int, ...]) -> None:
        nonlocal total
        if idx == len(cols_now) - 1:
            if left <= cols_now[idx]:
                new_cols = cols_now[:idx] + (cols_now[idx] - left,)
                total += _slice_completions(rest, new_cols, memo)
            return
        for e in range(min(left, cols_now[idx]) + 1):
            place(idx + 1, left - e, cols_now[:idx] + (cols_now[idx] - e,) + cols_now[idx + 1:])

    place(0, first, cols)
    memo[key] = total
    return total


def _search(fmt: Format, sums: SliceSums, collect, count_only: bool) -> int:
    """Backtracking core shared by enumeration and counting.

    Entries are assigned in flattening order.  r1/r2/r3 hold the remaining
    budget of each slice; the last cell of any line is forced, and a cell is
    pruned when the rest of its mode-1 slice cannot absorb the budget.
    When counting, the final mode-1 slice is not enumerated: its completions
    form a q x r contingency table whose count is computed by recursion on
    rows with memoization.
    """
    p, q, r = fmt.dims
    r1, r2, r3 = list(sums.t1), list(sums.t2), list(sums.t3)
    flat = [0] * fmt.size
    memo: dict = {}
    found = 0

    def fill(pos: int) -> None:
        nonlocal found
        if count_only and p > 1 and pos == (p - 1) * q * r:
            found += _slice_completions(tuple(r2), tuple(r3), memo)
            return
        if pos == fmt.size:
            found += 1
            if not count_only:
                collect(tuple(flat))
            return
        i, j, k = fmt.coords(pos)
        last_j, last_k = j == q - 1, k == r - 1
        if i == p - 1:
            # Inside the final slice every line ends here in some mode.
            if last_j and last_k:
                e = r1[i]
                if e != r2[j] or e != r3[k]:
                    return
                lo = hi = e
            elif last_k:
                e = r2[j]
                if e > r1[i] or e > r3[k]:
                    return
                lo = hi = e
            elif last_j:
                e = r3[k]
                if e > r1[i] or e > r2[j]:
                    return
                lo = hi = e
            else:
                lo, hi = 0, min(r1[i], r2[j], r3[k])
        elif last_j and last_k:
            e = r1[i]
            if e > r2[j] or e > r3[k]:
                return
            lo = hi = e
        else:
            lo, hi = 0, min(r1[i], r2[j], r3[k])
        for e in range(lo, hi + 1):
            r1[i] -= e
            r2[j] -= e
            r3[k] -= e
            # Capacity prune: the rest of slice i must absorb its budget.
            cap = 0
            jj, kk = j, k + 1
            while jj < q:
                while kk < r:
                    cap += min(r2[jj], r3[kk])
                    kk += 1
                jj += 1
                kk = 0
            if r1[i] <= cap:
                flat[pos] = e
                fill(pos + 1)
            r1[i] += e
            r2[j] += e
            r3[k] += e
        flat[pos] = 0

    fill(0)
    return found


def enumerate_weight_space(
    fmt: Format, degree: int, weight: Weight | None = None
) -> list[ExponentArray]:
    """All exponent arrays of the given degree and weight, sorted ascending.

    weight=None means the zero weight.  Returns [] when the slice sums are
    infeasible (e.g. a zero-weight degree not divisible by every dimension).
    """
    if weight is None:
        weight = Weight.zero(fmt)
    sums = slice_sums_from_weight(fmt, degree, weight)
    if sums is None:
        return []
    out: list[ExponentArray] = []
    _search(fmt, sums, lambda f: out.append(ExponentArray(fmt, f)), False)
    return out


def count_weight_space(
    fmt: Format, degree: int, weight: Weight | None = None
) -> int:
    """len(enumerate_weight_space(...)) without materializing the arrays."""
    if weight is None:
        weight = Weight.zero(fmt)
    sums = slice_sums_from_weight(fmt, degree, weight)
    if sums is None:
        return 0
    return _search(fmt, sums, None, True)


def index_of(a: ExponentArray, basis: list[ExponentArray]) -> int | None:
    """1-based binary-search index of a in a sorted basis, None if absent."""
    lo, hi = 0, len(basis)
    key = a.flat
    while lo < hi:
        mid = (lo + hi) // 2
        if basis[mid].flat < key:
            lo = mid + 1
        else:
            hi = mid
    if lo < len(basis) and basis[lo].flat == key and basis[lo].fmt == a.fmt:
        return lo + 1
    return None


@dataclass(frozen=True, slots=True)
class DegreeInfo:
    """Degree constraints for invariants of one format."""

    lcm_step: int
    hyperdet_degree: int | None


def invariant_degree_info(fmt: Format) -> DegreeInfo:
    """LCM degree step, plus the hyperdeterminant degree when defined.

    The degree formula 2*C(q+r-2, q-1)*(q-1)*(r-1) applies to sub-boundary
    formats: sorted dimensions p >= q >= r with p = q + r - 2.
    """
    p, q, r = sorted(fmt.dims, reverse=True)
    degree = None
    if p == q + r - 2:
        degree = 2 * comb(q + r - 2, q - 1) * (q - 1) * (r - 1)
    return DegreeInfo(fmt.lcm_step, degree)
