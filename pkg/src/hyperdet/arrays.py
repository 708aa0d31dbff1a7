"""Exponent arrays of p x q x r monomials: flattening, order, weights.

A degree-d monomial in the p*q*r variables x_{ijk} is determined by its
exponent array E = (e_{ijk}), a p x q x r array of nonnegative integers
summing to d.  Arrays are flattened in lexicographic subscript order
(i outermost, then j, then k):

    flat(E) = [e_111, e_112, e_121, e_122, ..., e_pq1, ..., e_pqr]

and the total order on arrays of one format is lex order on flattenings.
The matrix form prints E as p rows; row i lists e_{ij1} for j = 1..q,
then a vertical bar, then e_{ij2}, and so on for each of the r slices.

Indices are 0-based throughout the code; all text and file output follows
the 1-based layout conventions above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FormatMismatchError

__all__ = [
    "Format",
    "ExponentArray",
    "Weight",
    "SliceSums",
    "compare",
    "weight_of",
    "slice_sums",
    "render_matrix_form",
    "parse_matrix_form",
]


@dataclass(frozen=True, slots=True)
class Format:
    """Dimensions (p, q, r) of a 3-dimensional array."""

    p: int
    q: int
    r: int

    def __post_init__(self) -> None:
        if min(self.p, self.q, self.r) < 1:
            raise ValueError(f"dimensions must be >= 1, got {self.dims}")

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def size(self) -> int:
        return self.p * self.q * self.r

    def dim(self, mode: int) -> int:
        """Length of the given mode (1, 2 or 3)."""
        return self.dims[mode - 1]

    def position(self, i: int, j: int, k: int) -> int:
        """Flat index of entry (i, j, k), all 0-based."""
        return (i * self.q + j) * self.r + k

    def coords(self, pos: int) -> tuple[int, int, int]:
        """Inverse of position()."""
        pos, k = divmod(pos, self.r)
        i, j = divmod(pos, self.q)
        return (i, j, k)

    @property
    def lcm_step(self) -> int:
        """Every invariant's degree is a multiple of LCM(p, q, r)."""
        return math.lcm(self.p, self.q, self.r)


@dataclass(frozen=True, slots=True)
class Weight:
    """Cartan eigenvalue lists (Omega_1, Omega_2, Omega_3).

    The three components have lengths p-1, q-1, r-1; the concatenation is
    the ordered list of p+q+r-3 integers used in the tables.
    """

    w1: tuple[int, ...]
    w2: tuple[int, ...]
    w3: tuple[int, ...]

    @classmethod
    def zero(cls, fmt: Format) -> "Weight":
        return cls((0,) * (fmt.p - 1), (0,) * (fmt.q - 1), (0,) * (fmt.r - 1))

    @classmethod
    def from_concat(cls, fmt: Format, entries) -> "Weight":
        entries = tuple(int(x) for x in entries)
        if len(entries) != fmt.p + fmt.q + fmt.r - 3:
            raise ValueError(
                f"weight for {fmt.dims} needs {fmt.p + fmt.q + fmt.r - 3} "
                f"entries, got {len(entries)}"
            )
        a, b = fmt.p - 1, fmt.p + fmt.q - 2
        return cls(entries[:a], entries[a:b], entries[b:])

    @property
    def concat(self) -> tuple[int, ...]:
        return self.w1 + self.w2 + self.w3

    def component(self, mode: int) -> tuple[int, ...]:
        return (self.w1, self.w2, self.w3)[mode - 1]

    @property
    def is_zero(self) -> bool:
        return not any(self.concat)


@dataclass(frozen=True, slots=True)
class SliceSums:
    """Entry sums over the 2-dimensional slices of each mode.

    t1[i] sums slice i of mode 1 (all j, k), and analogously for t2, t3.
    All three lists sum to the degree.
    """

    t1: tuple[int, ...]
    t2: tuple[int, ...]
    t3: tuple[int, ...]

    def component(self, mode: int) -> tuple[int, ...]:
        return (self.t1, self.t2, self.t3)[mode - 1]


@dataclass(frozen=True, slots=True)
class ExponentArray:
    """Immutable p x q x r array of nonnegative integer exponents."""

    fmt: Format
    flat: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.flat) != self.fmt.size:
            raise ValueError(
                f"flattening has length {len(self.flat)}, "
                f"format {self.fmt.dims} needs {self.fmt.size}"
            )
        if any(e < 0 for e in self.flat):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def zero(cls, fmt: Format) -> "ExponentArray":
        return cls(fmt, (0,) * fmt.size)

    @classmethod
    def from_nested(cls, fmt: Format, nested) -> "ExponentArray":
        """Build from nested lists indexed [i][j][k]."""
        flat = tuple(
            int(nested[i][j][k])
            for i in range(fmt.p)
            for j in range(fmt.q)
            for k in range(fmt.r)
        )
        return cls(fmt, flat)

    def __getitem__(self, ijk: tuple[int, int, int]) -> int:
        return self.flat[self.fmt.position(*ijk)]

    @property
    def degree(self) -> int:
        return sum(self.flat)

    def move_unit(self, src: int, dst: int) -> "ExponentArray":
        """Move one exponent unit from flat position src to dst."""
        flat = list(self.flat)
        flat[src] -= 1
        flat[dst] += 1
        return ExponentArray(self.fmt, tuple(flat))

    def _check_same_format(self, other: "ExponentArray") -> None:
        if self.fmt != other.fmt:
            raise FormatMismatchError(
                f"cannot compare formats {self.fmt.dims} and {other.fmt.dims}"
            )

    def __lt__(self, other: "ExponentArray") -> bool:
        self._check_same_format(other)
        return self.flat < other.flat

    def __le__(self, other: "ExponentArray") -> bool:
        self._check_same_format(other)
        return self.flat <= other.flat

    def __gt__(self, other: "ExponentArray") -> bool:
        return not self.__le__(other)

    def __ge__(self, other: "ExponentArray") -> bool:
        return not self.__lt__(other)

    def __str__(self) -> str:
        return render_matrix_form(self)


def compare(a: ExponentArray, b: ExponentArray) -> int:
    """First-difference lex comparison of flattenings: -1, 0 or +1."""
    a._check_same_format(b)
    if a.flat == b.flat:
        return 0
    return -1 if a.flat < b.flat else 1


def slice_sums(a: ExponentArray) -> SliceSums:
    """Entry sums over the slices of each mode."""
    p, q, r = a.fmt.dims
    t1 = [0] * p
    t2 = [0] * q
    t3 = [0] * r
    pos = 0
    for i in range(p):
        for j in range(q):
            for k in range(r):
                e = a.flat[pos]
                pos += 1
                t1[i] += e
                t2[j] += e
                t3[k] += e
    return SliceSums(tuple(t1), tuple(t2), tuple(t3))


def weight_of(a: ExponentArray) -> Weight:
    """Weight of the monomial X(E): consecutive differences of slice sums."""
    t = slice_sums(a)
    return Weight(
        tuple(t.t1[i] - t.t1[i + 1] for i in range(a.fmt.p - 1)),
        tuple(t.t2[j] - t.t2[j + 1] for j in range(a.fmt.q - 1)),
        tuple(t.t3[k] - t.t3[k + 1] for k in range(a.fmt.r - 1)),
    )


def render_matrix_form(a: ExponentArray) -> str:
    """Matrix form: p rows of q columns per mode-3 slice, slices split by |."""
    p, q, r = a.fmt.dims
    width = max(len(str(e)) for e in a.flat)
    lines = []
    for i in range(p):
        blocks = []
        for k in range(r):
            blocks.append(
                " ".join(str(a[i, j, k]).rjust(width) for j in range(q))
            )
        lines.append("[ " + " | ".join(blocks) + " ]")
    return "\n".join(lines)


def parse_matrix_form(text: str, fmt: Format | None = None) -> ExponentArray:
    """Parse the output of render_matrix_form (format inferred if omitted)."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip().lstrip("[").rstrip("]")
        if not line.strip():
            continue
        rows.append([[int(e) for e in blk.split()] for blk in line.split("|")])
    p = len(rows)
    if p == 0:
        raise ValueError("empty matrix form")
    r = len(rows[0])
    q = len(rows[0][0])
    if any(len(row) != r or any(len(blk) != q for blk in row) for row in rows):
        raise ValueError("ragged matrix form")
    inferred = Format(p, q, r)
    if fmt is not None and fmt != inferred:
        raise FormatMismatchError(
            f"matrix form has format {inferred.dims}, expected {fmt.dims}"
        )
    flat = tuple(
        rows[i][k][j] for i in range(p) for j in range(q) for k in range(r)
    )
    return ExponentArray(inferred, flat)
