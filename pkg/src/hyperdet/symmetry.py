"""The symmetry group G = (S_p x S_q x S_r) x| S_2 and its orbits.

A group element g = (alpha, beta, gamma, delta) permutes the slices of an
exponent array in the three modes and, when delta is the swap and p = q,
transposes the first two subscripts.  Acting by the stages in order gives

    (g . E)_{i,j,k} = e_{alpha(i'), beta(j'), gamma(k)}

with (i', j') = (j, i) when delta is the swap and (i, j) otherwise.  Every
element therefore acts as a fixed permutation of the p*q*r flat positions,
which is how orbits are computed.

Orbit partitioning follows the greedy sweep: take the least unassigned basis
element, apply every group element, collect the images (which must all lie
in the basis), remove the orbit, repeat.  Orbits are numbered from 1 in
sweep order, which is ascending by minimal representative.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .arrays import ExponentArray, Format
from .errors import GroupClosureError

__all__ = [
    "GroupElement",
    "Orbit",
    "OrbitPartition",
    "group_elements",
    "act",
    "compose",
    "identity_element",
    "position_permutation",
    "permutation_table",
    "orbit_partition",
]


@dataclass(frozen=True, slots=True)
class GroupElement:
    """(alpha, beta, gamma, swap12); permutations map index -> image, 0-based."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    swap12: bool

    def __post_init__(self) -> None:
        if self.swap12 and len(self.alpha) != len(self.beta):
            raise ValueError("swap12 requires p = q")


def identity_element(fmt: Format) -> GroupElement:
    return GroupElement(
        tuple(range(fmt.p)), tuple(range(fmt.q)), tuple(range(fmt.r)), False
    )


def group_elements(fmt: Format) -> list[GroupElement]:
    """All |G| elements; delta ranges over the swap only when p = q.

    The order matches the paper's nesting: alpha varies slowest, then beta,
    then gamma, then delta; each S_n is in lexicographic order starting at
    the identity, so the identity element comes first.
    """
    swaps = (False, True) if fmt.p == fmt.q else (False,)
    return [
        GroupElement(a, b, c, d)
        for a, b, c, d in product(
            permutations(range(fmt.p)),
            permutations(range(fmt.q)),
            permutations(range(fmt.r)),
            swaps,
        )
    ]


@lru_cache(maxsize=None)
def position_permutation(g: GroupElement, fmt: Format) -> tuple[int, ...]:
    """src[dest] so that act(g, E).flat[dest] = E.flat[src[dest]]."""
    if len(g.alpha) != fmt.p or len(g.beta) != fmt.q or len(g.gamma) != fmt.r:
        raise ValueError(f"element does not act on format {fmt.dims}")
    src = []
    for i in range(fmt.p):
        for j in range(fmt.q):
            ii, jj = (j, i) if g.swap12 else (i, j)
            for k in range(fmt.r):
                src.append(fmt.position(g.alpha[ii], g.beta[jj], g.gamma[k]))
    return tuple(src)


def act(g: GroupElement, a: ExponentArray) -> ExponentArray:
    """Apply alpha, beta, gamma, then delta to the exponent array."""
    src = position_permutation(g, a.fmt)
    return ExponentArray(a.fmt, tuple(a.flat[s] for s in src))


def _comp(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """(f after g)(x) = f[g[x]]."""
    return tuple(f[x] for x in g)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The element m with act(m, E) = act(g, act(h, E)) for all E.

    Derived from the staged action: when h carries the swap, h's alpha and
    beta land on g's beta and alpha respectively.
    """
    if h.swap12:
        return GroupElement(
            _comp(h.alpha, g.beta), _comp(h.beta, g.alpha),
            _comp(h.gamma, g.gamma), not g.swap12,
        )
    return GroupElement(
        _comp(h.alpha, g.alpha), _comp(h.beta, g.beta),
        _comp(h.gamma, g.gamma), g.swap12,
    )


@dataclass(frozen=True, slots=True)
class Orbit:
    """One orbit: minimal representative, 1-based member indices, size."""

    representative: ExponentArray
    members: tuple[int, ...]
    size: int


@dataclass(frozen=True, slots=True)
class OrbitPartition:
    """Orbits of a sorted basis, numbered from 1 in sweep order."""

    fmt: Format
    orbits: tuple[Orbit, ...]

    def __len__(self) -> int:
        return len(self.orbits)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(o.size for o in self.orbits)

    def orbit_ids(self, n: int) -> np.ndarray:
        """1-based orbit id of each basis index 0..n-1."""
        ids = np.zeros(n, dtype=np.int32)
        for num, o in enumerate(self.orbits, start=1):
            for m in o.members:
                ids[m - 1] = num
        return ids


def _basis_flats(basis: list[ExponentArray]) -> list[tuple[int, ...]]:
    flats = [a.flat for a in basis]
    if any(flats[i] >= flats[i + 1] for i in range(len(flats) - 1)):
        raise ValueError("basis must be sorted strictly ascending")
    return flats


def permutation_table(
    basis: list[ExponentArray], g: GroupElement, fmt: Format
) -> np.ndarray:
    """t with basis[t[i]] = act(g, basis[i]); requires a G-closed basis."""
    flats = _basis_flats(basis)
    mat = np.array(flats, dtype=np.int64)
    src = np.array(position_permutation(g, fmt), dtype=np.intp)
    images = mat[:, src]
    order = np.lexsort(images.T[::-1])
    if not np.array_equal(images[order], mat):
        raise GroupClosureError(f"basis is not closed under {g}")
    t = np.empty(len(basis), dtype=np.int64)
    t[order] = np.arange(len(basis))
    return t


def orbit_partition(basis: list[ExponentArray], fmt: Format) -> OrbitPartition:
    """Greedy orbit sweep over a sorted, G-closed basis."""
    flats = _basis_flats(basis)
    perms = [position_permutation(g, fmt) for g in group_elements(fmt)]
    n = len(basis)
    assigned = bytearray(n)
    orbits = []
    for seed in range(n):
        if assigned[seed]:
            continue
        flat = flats[seed]
        members = set()
        for src in perms:
            image = tuple(flat[s] for s in src)
            idx = bisect_left(flats, image)
            if idx == n or flats[idx] != image:
                raise GroupClosureError(
                    f"image of basis element {seed + 1} is not in the basis:\n"
                    f"{ExponentArray(fmt, image)}"
                )
            members.add(idx)
        for m in members:
            assigned[m] = 1
        ordered = sorted(members)
        orbits.append(
            Orbit(basis[seed], tuple(m + 1 for m in ordered), len(ordered))
        )
    return OrbitPartition(fmt, tuple(orbits))
