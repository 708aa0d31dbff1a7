"""Command line surface: enumerate, invariant, verify, orbits, oracle.

Exit codes: 0 success, 1 internal error, 2 usage (argparse), 3 clean run
that found no invariants, 4 verification or oracle comparison failed,
5 file I/O or format error.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from dataclasses import dataclass, field

from .errors import (
    DegeneratePencilError,
    HyperdetError,
    PolynomialFileError,
    VerificationError,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_NO_INVARIANTS = 3
EXIT_VERIFY_FAILED = 4
EXIT_IO = 5

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Everything a command needs; two runs from equal configs match."""

    fmt: tuple[int, int, int] | None = None
    degree: int | None = None
    weight: tuple[int, ...] | None = None
    prime: int = 1009
    second_prime: int = 2003
    seed: int = 0
    samples: int = 20
    bound: int = 5
    out: str | None = None
    as_json: bool = False
    cross_check: bool = False
    paths: tuple[str, ...] = field(default_factory=tuple)
    verbosity: int = 0

    def validate(self) -> None:
        if self.prime < 3 or self.second_prime < 3:
            raise ValueError("primes must be >= 3")
        if self.prime == self.second_prime:
            raise ValueError("primes must be distinct")
        if self.samples < 0:
            raise ValueError("samples must be >= 0")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cfg = cls(
            fmt=tuple(args.format) if getattr(args, "format", None) else None,
            degree=getattr(args, "degree", None),
            weight=tuple(args.weight) if getattr(args, "weight", None) else None,
            prime=getattr(args, "prime", 1009),
            second_prime=getattr(args, "second_prime", 2003),
            seed=getattr(args, "seed", 0),
            samples=getattr(args, "samples", 20),
            bound=getattr(args, "bound", 5),
            out=getattr(args, "out", None),
            as_json=getattr(args, "json", False),
            cross_check=getattr(args, "cross_check", False),
            paths=tuple(getattr(args, "paths", ())),
            verbosity=args.verbose,
        )
        cfg.validate()
        return cfg


def _format_of(cfg: RunConfig):
    from .arrays import Format

    return Format(*cfg.fmt)


def _weight_of_config(cfg: RunConfig, fmt):
    from .arrays import Weight

    if cfg.weight is None or cfg.weight == (0,):
        return Weight.zero(fmt)
    want = (fmt.p - 1) + (fmt.q - 1) + (fmt.r - 1)
    if len(cfg.weight) != want:
        raise ValueError(
            f"weight needs {want} entries for format {fmt.dims} "
            f"(or the single entry 0)"
        )
    return Weight.from_concat(fmt, cfg.weight)


def cmd_enumerate(cfg: RunConfig) -> int:
    """Write the sorted weight-space basis; print the count."""
    import json

    from .weightspace import enumerate_weight_space

    fmt = _format_of(cfg)
    weight = _weight_of_config(cfg, fmt)
    basis = enumerate_weight_space(fmt, cfg.degree, weight)
    print(f"format {fmt.dims}, degree {cfg.degree}, weight {weight.concat}")
    print(f"count: {len(basis)}")
    if cfg.out:
        obj = {
            "format": list(fmt.dims),
            "degree": cfg.degree,
            "weight": list(weight.concat),
            "count": len(basis),
            "basis": [list(a.flat) for a in basis],
        }
        with open(cfg.out, "w") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"wrote {cfg.out}")
    return EXIT_OK


def cmd_invariant(cfg: RunConfig) -> int:
    """Run the full pipeline with integer certification; write results."""
    from .io import write_polynomial
    from .pipeline import certify

    fmt = _format_of(cfg)
    result = certify(fmt, cfg.degree, cfg.prime)
    print(result.report.render())
    for census in result.censuses:
        print("coefficient census (coefficient, multiplicity, orbits):")
        for row in census.rows:
            ids = ",".join(map(str, row.orbit_ids))
            print(f"  {row.coefficient:6d}  {row.multiplicity:6d}  {ids}")
    if cfg.cross_check:
        from .pipeline import compute_invariant_space

        _, second = compute_invariant_space(fmt, cfg.degree, cfg.second_prime)
        agree = (
            second.rank_ladder == result.report.rank_ladder
            and second.nullity == result.report.nullity
        )
        print(
            f"cross-check p = {cfg.second_prime}: ladder "
            f"{', '.join(map(str, second.rank_ladder))}, "
            f"nullity {second.nullity} -> "
            f"{'agrees' if agree else 'DISAGREES'}"
        )
        if not agree:
            return EXIT_VERIFY_FAILED
    if cfg.out and result.invariants:
        stem, dot, ext = cfg.out.rpartition(".")
        for idx, poly in enumerate(result.invariants, start=1):
            path = (
                cfg.out
                if len(result.invariants) == 1
                else f"{stem}-{idx}{dot}{ext}" if dot else f"{cfg.out}-{idx}"
            )
            write_polynomial(poly, path)
            print(f"wrote {path} ({len(poly)} terms)")
    if result.rejected:
        return EXIT_VERIFY_FAILED
    if not result.invariants:
        return EXIT_NO_INVARIANTS
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    """Re-verify stored polynomial files, independent of their origin."""
    from .io import read_polynomial
    from .operators import all_raising_ops
    from .pipeline import (
        coefficient_census,
        verify_annihilation_integer,
    )
    from .symmetry import orbit_partition
    from .weightspace import enumerate_weight_space

    all_ok = True
    for path in cfg.paths:
        poly = read_polynomial(path)
        print(f"{path}: format {poly.fmt.dims}, degree {poly.degree}, "
              f"{len(poly)} terms")
        for op in all_raising_ops(poly.fmt):
            residual = verify_annihilation_integer(poly, op)
            ok = not residual
            all_ok &= ok
            status = "pass" if ok else f"FAIL ({len(residual)} residual terms)"
            print(f"  {op.name}: {status}")
            if residual and cfg.verbosity:
                for c, a in residual[:5]:
                    print(f"    {c} * {a.flat}")
        basis = enumerate_weight_space(poly.fmt, poly.degree)
        partition = orbit_partition(basis, poly.fmt)
        census = coefficient_census(poly, partition, basis)
        ok = census.constant_on_orbits
        all_ok &= ok
        print(
            f"  orbit constancy ({len(partition)} orbits): "
            + ("pass" if ok else f"FAIL on orbits {census.violations}")
        )
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def cmd_orbits(cfg: RunConfig) -> int:
    """Write the orbit table (id, size, minimal representative)."""
    from .io import orbit_table_json, render_orbit_table
    from .symmetry import orbit_partition
    from .weightspace import enumerate_weight_space

    fmt = _format_of(cfg)
    basis = enumerate_weight_space(fmt, cfg.degree)
    partition = orbit_partition(basis, fmt)
    sizes = sorted(partition.sizes)
    print(f"format {fmt.dims}, degree {cfg.degree}: "
          f"{len(partition)} orbits on {len(basis)} arrays")
    print(f"size multiset: {sizes}")
    text = (
        orbit_table_json(partition)
        if cfg.as_json
        else render_orbit_table(partition)
    )
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
        print(f"wrote {cfg.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _oracle_invariant(fmt):
    """The hyperdeterminant used for the pencil comparison."""
    from .io import BUILTIN_INVARIANTS, builtin_invariant
    from .pipeline import certify
    from .weightspace import invariant_degree_info

    name = f"{fmt.p}x{fmt.q}x{fmt.r}-d{invariant_degree_info(fmt).hyperdet_degree}"
    if name in BUILTIN_INVARIANTS:
        return builtin_invariant(name)
    if fmt.dims == (2, 2, 2):
        return certify(fmt, 4).invariants[0]
    raise ValueError(
        f"no stored hyperdeterminant for format {fmt.dims}; "
        "oracle supports 2x2x2 and 3x3x2"
    )


def cmd_oracle(cfg: RunConfig) -> int:
    """Seeded random arrays: evaluate(hyperdet) vs pencil discriminant."""
    from .oracles import evaluate, pencil_discriminant, random_array

    fmt = _format_of(cfg)
    if fmt.p != fmt.q or fmt.r != 2:
        raise ValueError(f"oracle needs a p x p x 2 format, got {fmt.dims}")
    if cfg.samples == 0:
        print("0 samples requested: vacuous pass")
        return EXIT_OK
    poly = _oracle_invariant(fmt)
    rng = random.Random(cfg.seed)
    sign = None
    matches = 0
    budget = 50 * cfg.samples
    done = 0
    while done < cfg.samples:
        if budget == 0:
            raise HyperdetError(
                "retry budget exhausted: every sample had det(B) = 0"
            )
        budget -= 1
        arr = random_array(fmt, rng, bound=cfg.bound)
        try:
            disc = pencil_discriminant(arr)
        except DegeneratePencilError:
            continue
        done += 1
        val = evaluate(poly, arr)
        if disc == 0:
            ok = val == 0
            note = "both zero" if ok else "disc 0, invariant nonzero"
        elif val in (disc, -disc):
            s = 1 if val == disc else -1
            if sign is None:
                sign = s
            ok = s == sign
            note = f"sign {s:+d}"
        else:
            ok = False
            note = "magnitude mismatch"
        matches += ok
        print(f"  sample {done:3d}: invariant {val}, disc {disc} [{note}]"
              + ("" if ok else " FAIL"))
    print(f"{matches}/{cfg.samples} matches, pinned sign "
          f"{'n/a' if sign is None else f'{sign:+d}'}")
    return EXIT_OK if matches == cfg.samples else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperdet",
        description="Polynomial invariants of p x q x r integer arrays.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log progress (repeat for debug)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, required=True):
        p.add_argument(
            "--format", nargs=3, type=int, metavar=("P", "Q", "R"),
            required=required, help="array dimensions",
        )

    p = sub.add_parser("enumerate", help="enumerate a weight-space basis")
    add_format(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument(
        "--weight", nargs="+", type=int, default=None,
        help="weight entries (default and '0' mean the zero weight)",
    )
    p.add_argument("--out", help="write the basis as JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "invariant", help="compute and certify invariants of a degree"
    )
    add_format(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--prime", type=int, default=1009)
    p.add_argument(
        "--second-prime", dest="second_prime", type=int, default=2003
    )
    p.add_argument(
        "--cross-check", action="store_true",
        help="repeat the rank ladder at the second prime",
    )
    p.add_argument("--out", help="write certified invariants as JSON")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("verify", help="re-verify stored polynomial files")
    p.add_argument("paths", nargs="+", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", help="orbit table of the zero weight space")
    add_format(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true", help="JSON instead of text")
    p.add_argument("--out", help="write the table to a file")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser(
        "oracle", help="compare a hyperdeterminant with the pencil discriminant"
    )
    add_format(p)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=5, help="entry range [-B, B]")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(
            logging.WARNING if args.verbose == 0
            else logging.INFO if args.verbose == 1
            else logging.DEBUG
        ),
        format="%(message)s",
    )
    try:
        cfg = RunConfig.from_args(args)
        return args.func(cfg)
    except (PolynomialFileError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except VerificationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValueError as e:
        # semantically invalid argument values (bad prime, wrong weight
        # length, unsupported oracle format) are usage errors like
        # argparse's own
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HyperdetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        import traceback

        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
