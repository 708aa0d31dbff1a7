"""Simple raising operators U_i^(m) as sparse maps between weight spaces.

U_i^(1) acts on a monomial X(E) as sum_{j,k} e_{i+1,j,k} X(E') where E'
moves one exponent unit from slice i+1 to slice i of mode 1 (and likewise
for modes 2 and 3).  It maps the zero weight space W(d; 0) into the higher
weight space whose weight is the i-th Cartan matrix row placed in the
operator's mode.  Invariants of degree d are the joint kernel of all the
simple raising operators on W(d; 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrays import ExponentArray, Format, Weight
from .errors import EnumerationError
from .weightspace import enumerate_weight_space, index_of

__all__ = [
    "RaisingOp",
    "OperatorBlock",
    "all_raising_ops",
    "cartan_row",
    "target_weight",
    "apply_raising",
    "operator_block",
]


@dataclass(frozen=True, slots=True)
class RaisingOp:
    """U_index^(mode) with mode in {1,2,3} and 1 <= index <= dim(mode)-1."""

    mode: int
    index: int

    def __post_init__(self) -> None:
        if self.mode not in (1, 2, 3):
            raise ValueError(f"mode must be 1, 2 or 3, got {self.mode}")
        if self.index < 1:
            raise ValueError(f"index must be >= 1, got {self.index}")

    @property
    def name(self) -> str:
        return f"U{self.index}^({self.mode})"


def all_raising_ops(fmt: Format) -> list[RaisingOp]:
    """Mode 1 by index, then mode 2, then mode 3 (the rank-ladder order)."""
    return [
        RaisingOp(mode, i)
        for mode in (1, 2, 3)
        for i in range(1, fmt.dim(mode))
    ]


def cartan_row(n: int, i: int) -> tuple[int, ...]:
    """Row i (1-based) of the (n-1) x (n-1) Cartan matrix of sl_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"row index {i} out of range for sl_{n}")
    return tuple(
        2 if j == i else -1 if abs(j - i) == 1 else 0 for j in range(1, n)
    )


def target_weight(op: RaisingOp, fmt: Format) -> Weight:
    """U_i^(m) maps W(d; 0) into W(d; Gamma_i in mode m, zeros elsewhere)."""
    n = fmt.dim(op.mode)
    if op.index > n - 1:
        raise ValueError(f"{op.name} does not exist for format {fmt.dims}")
    parts = [
        (0,) * (fmt.p - 1),
        (0,) * (fmt.q - 1),
        (0,) * (fmt.r - 1),
    ]
    parts[op.mode - 1] = cartan_row(n, op.index)
    return Weight(*parts)


def apply_raising(
    op: RaisingOp, a: ExponentArray
) -> list[tuple[int, ExponentArray]]:
    """Terms (coefficient, image array) of U acting on the monomial X(a).

    One term per position with a nonzero exponent in the source slice
    (index+1 of the operator's mode); the coefficient is that exponent.
    Coincident images are not merged here.
    """
    fmt = a.fmt
    axis = op.mode - 1
    if op.index >= fmt.dim(op.mode):
        raise ValueError(f"{op.name} does not exist for format {fmt.dims}")
    others = [m for m in (0, 1, 2) if m != axis]
    out = []
    ijk = [0, 0, 0]
    for u in range(fmt.dims[others[0]]):
        ijk[others[0]] = u
        for v in range(fmt.dims[others[1]]):
            ijk[others[1]] = v
            ijk[axis] = op.index  # 0-based source slice is index+1 - 1
            src = fmt.position(*ijk)
            e = a.flat[src]
            if e:
                ijk[axis] = op.index - 1
                out.append((e, a.move_unit(src, fmt.position(*ijk))))
    return out


@dataclass(frozen=True, slots=True)
class OperatorBlock:
    """Matrix of one raising operator between explicit monomial bases.

    rows[c] lists (domain index, coefficient) pairs, sorted by domain index,
    for codomain basis element c.  Indices here are 0-based positions in the
    stored bases.
    """

    op: RaisingOp
    domain: tuple[ExponentArray, ...]
    codomain: tuple[ExponentArray, ...]
    rows: tuple[tuple[tuple[int, int], ...], ...]


def operator_block(
    op: RaisingOp,
    degree: int,
    fmt: Format,
    domain: list[ExponentArray] | None = None,
) -> OperatorBlock:
    """Assemble the sparse block of op on W(degree; 0).

    The codomain basis is enumerated from the target weight; a missing image
    would mean the enumeration is wrong and raises EnumerationError.
    """
    if domain is None:
        domain = enumerate_weight_space(fmt, degree)
    codomain = enumerate_weight_space(fmt, degree, target_weight(op, fmt))
    rows: list[dict[int, int]] = [{} for _ in codomain]
    for t, a in enumerate(domain):
        for coeff, image in apply_raising(op, a):
            c = index_of(image, codomain)
            if c is None:
                raise EnumerationError(
                    f"image of domain element {t + 1} under {op.name} "
                    f"missing from codomain:\n{image}"
                )
            row = rows[c - 1]
            row[t] = row.get(t, 0) + coeff
    return OperatorBlock(
        op,
        tuple(domain),
        tuple(codomain),
        tuple(tuple(sorted(r.items())) for r in rows),
    )
