"""Exact numeric evaluation and an independent discriminant oracle.

Everything here is exact integer arithmetic; Python integers widen as
needed, so degree-12 evaluations on entries in [-5, 5] (values near 10^22)
are safe.  The slice-pencil discriminant disc(det(A + tB)) gives ground
truth for p x p x 2 hyperdeterminants that is computed by resultants with
no input from the nullspace pipeline.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .arrays import ExponentArray, Format
from .errors import DegeneratePencilError, FormatMismatchError
from .pipeline import InvariantPolynomial

__all__ = [
    "NumericArray",
    "IntPolynomial1D",
    "evaluate",
    "multilinear_act",
    "random_unimodular",
    "random_array",
    "pencil_polynomial",
    "pencil_discriminant",
    "CovarianceReport",
    "covariance_check",
    "int_det",
]


@dataclass(frozen=True, slots=True)
class NumericArray:
    """A p x q x r array of exact integers in flattening order."""

    fmt: Format
    flat: tuple[int, ...]

    def __post_init__(self):
        if len(self.flat) != self.fmt.size:
            raise FormatMismatchError(
                f"expected {self.fmt.size} entries, got {len(self.flat)}"
            )

    @classmethod
    def from_nested(cls, fmt: Format, nested) -> "NumericArray":
        flat = tuple(
            int(nested[i][j][k])
            for i in range(fmt.p)
            for j in range(fmt.q)
            for k in range(fmt.r)
        )
        return cls(fmt, flat)

    def __getitem__(self, ijk: tuple[int, int, int]) -> int:
        return self.flat[self.fmt.position(*ijk)]

    def slice3(self, k: int) -> list[list[int]]:
        """Mode-3 slice as a p x q integer matrix."""
        return [
            [self[i, j, k] for j in range(self.fmt.q)]
            for i in range(self.fmt.p)
        ]

    def scale(self, c: int) -> "NumericArray":
        return NumericArray(self.fmt, tuple(c * t for t in self.flat))


def evaluate(poly: InvariantPolynomial, arr: NumericArray) -> int:
    """Sum of coefficient * prod t_ijk^e_ijk, exactly."""
    if poly.fmt != arr.fmt:
        raise FormatMismatchError(
            f"polynomial format {poly.fmt.dims} != array format {arr.fmt.dims}"
        )
    # Per-position power tables up to the polynomial degree.
    pows = []
    for t in arr.flat:
        row = [1]
        for _ in range(poly.degree):
            row.append(row[-1] * t)
        pows.append(row)
    total = 0
    for c, term in poly.terms:
        prod = c
        for pos, e in enumerate(term.flat):
            if e:
                prod *= pows[pos][e]
        total += prod
    return total


def _check_square(m, n: int, name: str) -> None:
    if len(m) != n or any(len(row) != n for row in m):
        raise FormatMismatchError(f"{name} must be {n}x{n}")


def multilinear_act(A, B, C, arr: NumericArray) -> NumericArray:
    """Mode-wise matrix action t' = sum A_ia B_jb C_kc t_abc."""
    p, q, r = arr.fmt.dims
    _check_square(A, p, "A")
    _check_square(B, q, "B")
    _check_square(C, r, "C")
    t = [
        [[arr[a, b, c] for c in range(r)] for b in range(q)]
        for a in range(p)
    ]
    t = [
        [
            [sum(A[i][a] * t[a][b][c] for a in range(p)) for c in range(r)]
            for b in range(q)
        ]
        for i in range(p)
    ]
    t = [
        [
            [sum(B[j][b] * t[i][b][c] for b in range(q)) for c in range(r)]
            for j in range(q)
        ]
        for i in range(p)
    ]
    t = [
        [
            [sum(C[k][c] * t[i][j][c] for c in range(r)) for k in range(r)]
            for j in range(q)
        ]
        for i in range(p)
    ]
    return NumericArray.from_nested(arr.fmt, t)


def random_unimodular(n: int, seed=None, *, entry_cap: int = 30):
    """Random n x n integer matrix of determinant exactly 1.

    Product of random elementary shears (add an integer multiple of one
    row to another), so the determinant is 1 by construction; resamples
    until all entries fit within entry_cap.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if n == 1:
        return [[1]]
    while True:
        m = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(3 * n):
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            mult = rng.choice((-2, -1, 1, 2))
            m[i] = [x + mult * y for x, y in zip(m[i], m[j])]
        if max(abs(x) for row in m for x in row) <= entry_cap:
            return m


def random_array(fmt: Format, seed=None, *, bound: int = 5) -> NumericArray:
    """Uniform integer entries in [-bound, bound]."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return NumericArray(
        fmt, tuple(rng.randint(-bound, bound) for _ in range(fmt.size))
    )


@dataclass(frozen=True, slots=True)
class IntPolynomial1D:
    """Univariate integer polynomial; coeffs[i] multiplies t^i.

    The stored length is the formal degree plus one; the top coefficient
    may be zero, which is how pencil degeneration shows up.
    """

    coeffs: tuple[int, ...]

    @property
    def formal_degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def derivative(self) -> "IntPolynomial1D":
        return IntPolynomial1D(
            tuple(i * c for i, c in enumerate(self.coeffs))[1:] or (0,)
        )

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def pencil_polynomial(arr: NumericArray) -> IntPolynomial1D:
    """det(A + tB) for the two mode-3 slices of a p x p x 2 array.

    Leibniz expansion over permutations; p is small here.  Coefficients
    are padded to formal degree p so a vanishing det(B) stays visible.
    """
    p, q, r = arr.fmt.dims
    if p != q or r != 2:
        raise FormatMismatchError(f"pencil needs p x p x 2, got {arr.fmt.dims}")
    a = arr.slice3(0)
    b = arr.slice3(1)
    total = [0] * (p + 1)
    for perm in itertools.permutations(range(p)):
        sign = _perm_sign(perm)
        prod = [sign]
        for i, j in enumerate(perm):
            prod = _poly_mul(prod, [a[i][j], b[i][j]])
        for k, c in enumerate(prod):
            total[k] += c
    return IntPolynomial1D(tuple(total))


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def int_det(m) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    a = [[int(x) for x in row] for row in m]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _sylvester(f: IntPolynomial1D, g: IntPolynomial1D):
    m = f.formal_degree
    n = g.formal_degree
    size = m + n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for s in range(n):
        rows.append([0] * s + fd + [0] * (size - s - len(fd)))
    for s in range(m):
        rows.append([0] * s + gd + [0] * (size - s - len(gd)))
    return rows


def pencil_discriminant(arr: NumericArray) -> int:
    """disc(det(A + tB)) = (-1)^(p(p-1)/2) Res(f, f') / lc(f), exactly.

    Raises DegeneratePencilError when det(B) = 0 (the pencil drops degree
    and the formula does not apply); randomized callers resample.
    """
    f = pencil_polynomial(arr)
    p = arr.fmt.p
    lc = f.leading
    if lc == 0:
        raise DegeneratePencilError(
            "det(B) = 0: pencil det(A + tB) drops degree"
        )
    res = int_det(_sylvester(f, f.derivative()))
    sign = -1 if (p * (p - 1) // 2) % 2 else 1
    num = sign * res
    if num % lc:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return num // lc


@dataclass(frozen=True, slots=True)
class CovarianceReport:
    passed: bool
    lhs: int
    rhs: int
    factor: int
    dets: tuple[int, int, int]


def covariance_check(
    poly: InvariantPolynomial, arr: NumericArray, A, B, C
) -> CovarianceReport:
    """Check evaluate(poly, (A,B,C).T) = detA^(d/p) detB^(d/q) detC^(d/r) evaluate(poly, T)."""
    p, q, r = poly.fmt.dims
    d = poly.degree
    if d % p or d % q or d % r:
        raise ValueError(f"degree {d} not divisible by all of {poly.fmt.dims}")
    da, db, dc = int_det(A), int_det(B), int_det(C)
    factor = da ** (d // p) * db ** (d // q) * dc ** (d // r)
    lhs = evaluate(poly, multilinear_act(A, B, C, arr))
    rhs = factor * evaluate(poly, arr)
    return CovarianceReport(lhs == rhs, lhs, rhs, factor, (da, db, dc))
