"""Persistent file formats: polynomials, arrays, orbit tables, reports.

JSON everywhere machine-readable, with coefficients and evaluation-sized
integers rendered as decimal strings so values above 2^63 survive any JSON
reader.  Rendering is deterministic (sorted keys, fixed indentation, one
trailing newline), which makes golden-artifact diffs and byte-exact
round-trips meaningful.  Orbit tables also render as text in the matrix
form for eyeballing.
"""

from __future__ import annotations

import json
from importlib.resources import files

from .arrays import ExponentArray, Format, render_matrix_form
from .errors import PolynomialFileError
from .oracles import NumericArray
from .pipeline import InvariantPolynomial
from .symmetry import OrbitPartition

__all__ = [
    "GENERATOR",
    "NORMALIZATION",
    "render_polynomial",
    "parse_polynomial",
    "write_polynomial",
    "read_polynomial",
    "builtin_invariant",
    "BUILTIN_INVARIANTS",
    "write_array",
    "read_array",
    "render_orbit_table",
    "orbit_table_json",
]

GENERATOR = "hyperdet 0.1.0"
NORMALIZATION = "content-1-least-term-positive"

BUILTIN_INVARIANTS = {
    "3x3x2-d12": "invariant_3x3x2_d12.json",
    "4x4x2-d8": "invariant_4x4x2_d8.json",
}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_polynomial(poly: InvariantPolynomial) -> str:
    obj = {
        "format": list(poly.fmt.dims),
        "degree": poly.degree,
        "generator": GENERATOR,
        "normalization": NORMALIZATION,
        "terms": [[str(c), list(a.flat)] for c, a in poly.terms],
    }
    if poly.orbit_view is not None:
        obj["orbits"] = [
            [list(rep.flat), size, str(coef)]
            for rep, size, coef in poly.orbit_view
        ]
    return _dump(obj)


def parse_polynomial(text: str) -> InvariantPolynomial:
    """Inverse of render_polynomial; any malformation raises PolynomialFileError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolynomialFileError(f"not valid JSON: {e}") from e
    try:
        dims = obj["format"]
        if len(dims) != 3 or any(int(n) < 1 for n in dims):
            raise PolynomialFileError(f"bad format {dims}")
        fmt = Format(*(int(n) for n in dims))
        degree = int(obj["degree"])
        terms = tuple(
            (int(coef), ExponentArray(fmt, tuple(int(e) for e in flat)))
            for coef, flat in obj["terms"]
        )
        view = None
        if "orbits" in obj:
            view = tuple(
                (
                    ExponentArray(fmt, tuple(int(e) for e in rep)),
                    int(size),
                    int(coef),
                )
                for rep, size, coef in obj["orbits"]
            )
    except PolynomialFileError:
        raise
    except Exception as e:
        raise PolynomialFileError(f"malformed polynomial file: {e}") from e
    poly = InvariantPolynomial(fmt, degree, terms, view)
    try:
        poly.validate()
    except ValueError as e:
        raise PolynomialFileError(str(e)) from e
    return poly


def write_polynomial(poly: InvariantPolynomial, path) -> None:
    with open(path, "w") as fh:
        fh.write(render_polynomial(poly))


def read_polynomial(path) -> InvariantPolynomial:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise PolynomialFileError(f"cannot read {path}: {e}") from e
    return parse_polynomial(text)


def builtin_invariant(name: str) -> InvariantPolynomial:
    """Load a certified invariant shipped with the package.

    Names: '3x3x2-d12' (the hyperdeterminant) and '4x4x2-d8'.
    """
    if name not in BUILTIN_INVARIANTS:
        raise KeyError(
            f"unknown invariant {name!r}; have {sorted(BUILTIN_INVARIANTS)}"
        )
    text = files("hyperdet.data").joinpath(BUILTIN_INVARIANTS[name]).read_text()
    return parse_polynomial(text)


def write_array(arr: NumericArray, path) -> None:
    """Row-major per mode-3 slice: slices[k][i][j]."""
    p, q, r = arr.fmt.dims
    obj = {
        "format": [p, q, r],
        "slices": [arr.slice3(k) for k in range(r)],
    }
    with open(path, "w") as fh:
        fh.write(_dump(obj))


def read_array(path) -> NumericArray:
    with open(path) as fh:
        obj = json.load(fh)
    fmt = Format(*(int(n) for n in obj["format"]))
    slices = obj["slices"]
    nested = [
        [[int(slices[k][i][j]) for k in range(fmt.r)] for j in range(fmt.q)]
        for i in range(fmt.p)
    ]
    return NumericArray.from_nested(fmt, nested)


def render_orbit_table(partition: OrbitPartition) -> str:
    """Human-readable orbit table: id, size, minimal representative."""
    lines = [f"{len(partition)} orbits, sizes sum {sum(partition.sizes)}"]
    for num, orbit in enumerate(partition.orbits, start=1):
        lines.append(f"orbit {num}  size {orbit.size}")
        lines.append(render_matrix_form(orbit.representative))
    return "\n".join(lines) + "\n"


def orbit_table_json(partition: OrbitPartition) -> str:
    obj = {
        "format": list(partition.fmt.dims),
        "orbits": [
            {
                "id": num,
                "size": o.size,
                "representative": list(o.representative.flat),
                "members": list(o.members),
            }
            for num, o in enumerate(partition.orbits, start=1)
        ],
    }
    return _dump(obj)
