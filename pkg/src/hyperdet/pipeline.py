"""End-to-end invariant computation, normalization and certification.

The degree-d invariants are the kernel of the direct sum of all simple
raising operators on the zero weight space.  The pipeline enumerates the
weight-zero basis, absorbs each operator block into a modular RREF (mode 1
operators by index, then mode 2, then mode 3, which reproduces the paper's
cumulative rank ladder), reads off the mod-p nullspace, and lifts each
vector to a candidate integer polynomial with symmetric representatives.

Candidates are modular until verified.  Certification re-applies every
raising operator with exact integer arithmetic (Python integers cannot
overflow) and checks that coefficients are constant on symmetry orbits.
The modular nullity bounds the rational dimension from above; each verified
integer invariant bounds it from below; when the counts agree the dimension
is exact.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, replace

from .arrays import ExponentArray, Format, weight_of
from .modlinalg import DEFAULT_PRIME, ModRref, ModVector, symmetric_lift
from .operators import RaisingOp, all_raising_ops, apply_raising, operator_block
from .symmetry import OrbitPartition, orbit_partition
from .weightspace import enumerate_weight_space

__all__ = [
    "InvariantPolynomial",
    "BlockReport",
    "PipelineReport",
    "CensusRow",
    "Census",
    "CertificationResult",
    "compute_invariant_space",
    "coefficient_census",
    "verify_annihilation_integer",
    "certify",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class InvariantPolynomial:
    """Integer polynomial as (coefficient, exponent array) terms.

    Terms are sorted ascending by array and hold no zero coefficients.
    Canonical normalization divides out the content and makes the
    coefficient of the least array positive.  orbit_view, when present,
    lists (minimal representative, orbit size, coefficient) per orbit.
    """

    fmt: Format
    degree: int
    terms: tuple[tuple[int, ExponentArray], ...]
    orbit_view: tuple[tuple[ExponentArray, int, int], ...] | None = None

    @classmethod
    def from_coefficients(
        cls, fmt: Format, degree: int, basis: list[ExponentArray], coeffs
    ) -> "InvariantPolynomial":
        terms = [(int(c), a) for c, a in zip(coeffs, basis) if c]
        return cls(fmt, degree, tuple(terms)).normalized()

    def normalized(self) -> "InvariantPolynomial":
        """Content 1 and positive coefficient on the least term."""
        if not self.terms:
            return self
        content = math.gcd(*(c for c, _ in self.terms))
        sign = 1 if self.terms[0][0] > 0 else -1
        if content == 1 and sign == 1:
            return self
        d = sign * content
        return replace(
            self, terms=tuple((c // d, a) for c, a in self.terms)
        )

    def validate(self) -> None:
        """Raise ValueError unless all structural invariants hold."""
        prev = None
        for c, a in self.terms:
            if not c:
                raise ValueError("zero coefficient stored")
            if a.fmt != self.fmt:
                raise ValueError("term format differs from polynomial format")
            if a.degree != self.degree:
                raise ValueError(f"term degree {a.degree} != {self.degree}")
            if not weight_of(a).is_zero:
                raise ValueError("term of nonzero weight")
            if prev is not None and prev >= a.flat:
                raise ValueError("terms not strictly ascending")
            prev = a.flat
        if self.terms:
            if math.gcd(*(c for c, _ in self.terms)) != 1:
                raise ValueError("content is not 1")
            if self.terms[0][0] < 0:
                raise ValueError("least term has negative coefficient")
        if self.orbit_view is not None:
            by_flat = {a.flat: c for c, a in self.terms}
            for rep, size, coef in self.orbit_view:
                if rep.fmt != self.fmt or rep.degree != self.degree:
                    raise ValueError("orbit representative format or degree off")
                if not weight_of(rep).is_zero:
                    raise ValueError("orbit representative of nonzero weight")
                if size < 1:
                    raise ValueError("orbit size must be positive")
                if by_flat.get(rep.flat, 0) != coef:
                    raise ValueError(
                        "orbit coefficient disagrees with term coefficient"
                    )

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.terms)

    @property
    def distinct_coefficients(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.coefficients)))

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True, slots=True)
class BlockReport:
    op: RaisingOp
    codomain_size: int
    cumulative_rank: int


@dataclass(frozen=True, slots=True)
class CensusRow:
    """One distinct coefficient: total multiplicity and 1-based orbit ids."""

    coefficient: int
    multiplicity: int
    orbit_ids: tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_ids)


@dataclass(frozen=True, slots=True)
class Census:
    """Coefficient census rows ascending by coefficient."""

    rows: tuple[CensusRow, ...]
    constant_on_orbits: bool
    violations: tuple[int, ...] = ()


@dataclass(frozen=True, slots=True)
class PipelineReport:
    fmt: Format
    degree: int
    prime: int
    basis_size: int
    blocks: tuple[BlockReport, ...]
    nullity: int
    candidate_count: int
    verified_count: int | None = None
    exact_dimension: bool | None = None
    notes: tuple[str, ...] = ()

    @property
    def rank_ladder(self) -> tuple[int, ...]:
        return tuple(b.cumulative_rank for b in self.blocks)

    @property
    def codomain_sizes(self) -> tuple[int, ...]:
        return tuple(b.codomain_size for b in self.blocks)

    def render(self) -> str:
        lines = [
            f"format {self.fmt.dims}, degree {self.degree}, p = {self.prime}",
            f"weight-zero basis: {self.basis_size}",
        ]
        for b in self.blocks:
            lines.append(
                f"  {b.op.name}: codomain {b.codomain_size}, "
                f"cumulative rank {b.cumulative_rank}"
            )
        lines.append(f"nullspace dimension: {self.nullity}")
        lines.append(f"candidates: {self.candidate_count}")
        if self.verified_count is not None:
            lines.append(f"integer-verified invariants: {self.verified_count}")
        if self.exact_dimension is not None:
            lines.append(
                "dimension over Q is exact: modular nullity "
                f"{self.nullity} bounds above, {self.verified_count} verified "
                "integer invariants bound below"
                if self.exact_dimension
                else f"dimension over Q not settled: between "
                f"{self.verified_count} and {self.nullity}"
            )
        lines.extend(self.notes)
        return "\n".join(lines)


def _invariant_space(fmt: Format, degree: int, prime: int):
    """Shared core: returns (basis, candidates, report)."""
    if prime < 3:
        raise ValueError("prime must be >= 3")
    t0 = time.perf_counter()
    basis = enumerate_weight_space(fmt, degree)
    logger.info(
        "weight-zero basis for %s degree %d: %d arrays (%.2fs)",
        fmt.dims, degree, len(basis), time.perf_counter() - t0,
    )
    if not basis:
        report = PipelineReport(
            fmt, degree, prime, 0, (), nullity=0, candidate_count=0
        )
        return basis, [], report
    state = ModRref(prime, len(basis))
    blocks = []
    for op in all_raising_ops(fmt):
        t0 = time.perf_counter()
        blk = operator_block(op, degree, fmt, domain=basis)
        rows = [
            ModVector.from_pairs(len(basis), pairs, prime)
            for pairs in blk.rows
        ]
        codomain_size = len(blk.codomain)
        del blk
        state.absorb_block(rows)
        blocks.append(BlockReport(op, codomain_size, state.rank))
        logger.info(
            "%s: codomain %d, cumulative rank %d (%.2fs)",
            op.name, codomain_size, state.rank, time.perf_counter() - t0,
        )
    candidates = [
        InvariantPolynomial.from_coefficients(
            fmt, degree, basis, symmetric_lift(v, prime)
        )
        for v in state.nullspace()
    ]
    report = PipelineReport(
        fmt,
        degree,
        prime,
        len(basis),
        tuple(blocks),
        nullity=state.nullity,
        candidate_count=len(candidates),
    )
    return basis, candidates, report


def compute_invariant_space(
    fmt: Format, degree: int, prime: int = DEFAULT_PRIME
) -> tuple[list[InvariantPolynomial], PipelineReport]:
    """Modular nullspace candidates and the rank-ladder report."""
    _, candidates, report = _invariant_space(fmt, degree, prime)
    return candidates, report


def verify_annihilation_integer(
    poly: InvariantPolynomial, op: RaisingOp
) -> list[tuple[int, ExponentArray]]:
    """Surviving terms of U applied to the polynomial, exactly over Z.

    Merges coincident image monomials and drops zero sums; the result is
    empty exactly when the operator annihilates the polynomial.  Arithmetic
    uses Python integers, which widen automatically and never wrap.
    """
    acc: dict[tuple[int, ...], int] = {}
    for c, a in poly.terms:
        for e, image in apply_raising(op, a):
            key = image.flat
            acc[key] = acc.get(key, 0) + c * e
    survivors = [
        (v, ExponentArray(poly.fmt, k)) for k, v in acc.items() if v
    ]
    survivors.sort(key=lambda t: t[1].flat)
    return survivors


def coefficient_census(
    poly: InvariantPolynomial,
    partition: OrbitPartition,
    basis: list[ExponentArray],
) -> Census:
    """Verify orbit-constant coefficients and aggregate the census.

    partition must be the orbit partition of basis, and every term of poly
    must lie in basis.  Orbits on which the polynomial vanishes are skipped;
    rows are ascending by coefficient.
    """
    vec = [0] * len(basis)
    i = 0
    for c, a in poly.terms:
        while i < len(basis) and basis[i].flat < a.flat:
            i += 1
        if i == len(basis) or basis[i].flat != a.flat:
            raise ValueError(f"term not in basis:\n{a}")
        vec[i] = c
    buckets: dict[int, list[tuple[int, int]]] = {}
    violations = []
    for num, orbit in enumerate(partition.orbits, start=1):
        values = {vec[m - 1] for m in orbit.members}
        if len(values) > 1:
            violations.append(num)
            continue
        value = values.pop()
        if value:
            buckets.setdefault(value, []).append((num, orbit.size))
    rows = tuple(
        CensusRow(
            coefficient=coef,
            multiplicity=sum(size for _, size in entries),
            orbit_ids=tuple(num for num, _ in entries),
        )
        for coef, entries in sorted(buckets.items())
    )
    return Census(rows, not violations, tuple(violations))


@dataclass(frozen=True, slots=True)
class CertificationResult:
    invariants: tuple[InvariantPolynomial, ...]
    censuses: tuple[Census, ...]
    rejected: tuple[InvariantPolynomial, ...]
    report: PipelineReport
    partition: OrbitPartition | None

    def __bool__(self) -> bool:
        return bool(self.invariants)


def certify(
    fmt: Format, degree: int, prime: int = DEFAULT_PRIME
) -> CertificationResult:
    """Compute candidates, then verify each one exactly over the integers.

    A certified invariant passes integer annihilation under every simple
    raising operator and has orbit-constant coefficients.  Certified
    polynomials carry their orbit view.
    """
    basis, candidates, report = _invariant_space(fmt, degree, prime)
    partition = None
    invariants: list[InvariantPolynomial] = []
    censuses: list[Census] = []
    rejected: list[InvariantPolynomial] = []
    notes = []
    if candidates:
        t0 = time.perf_counter()
        partition = orbit_partition(basis, fmt)
        logger.info(
            "orbit partition: %d orbits (%.2fs)",
            len(partition), time.perf_counter() - t0,
        )
    for cand in candidates:
        t0 = time.perf_counter()
        residuals = {
            op.name: verify_annihilation_integer(cand, op)
            for op in all_raising_ops(fmt)
        }
        census = coefficient_census(cand, partition, basis)
        surviving = {name: len(r) for name, r in residuals.items() if r}
        if surviving or not census.constant_on_orbits:
            rejected.append(cand)
            if surviving:
                notes.append(f"candidate rejected, residual terms: {surviving}")
            if not census.constant_on_orbits:
                notes.append(
                    "candidate rejected, non-constant orbits: "
                    f"{census.violations}"
                )
            continue
        orbit_coef = {
            num: row.coefficient for row in census.rows for num in row.orbit_ids
        }
        view = tuple(
            (o.representative, o.size, orbit_coef.get(num, 0))
            for num, o in enumerate(partition.orbits, start=1)
        )
        invariants.append(replace(cand, orbit_view=view))
        censuses.append(census)
        logger.info(
            "candidate verified over Z in %.2fs (%d terms)",
            time.perf_counter() - t0, len(cand),
        )
    report = replace(
        report,
        verified_count=len(invariants),
        exact_dimension=len(invariants) == report.nullity,
        notes=tuple(notes),
    )
    return CertificationResult(
        tuple(invariants), tuple(censuses), tuple(rejected), report, partition
    )
