"""Degree 6 on 3x3x2 arrays: a full pipeline run that finds nothing.

The five simple raising operators map the 288-dimensional zero weight
space into higher weight spaces; absorbing their blocks one at a time
drives the cumulative rank to 288, so the common nullspace is zero and
there is no degree-6 invariant.  The zero weight space still splits into
8 orbits under the 144-element symmetry group.
"""

from hyperdet import (
    Format,
    certify,
    enumerate_weight_space,
    orbit_partition,
    render_matrix_form,
)


def main() -> None:
    fmt = Format(3, 3, 2)
    result = certify(fmt, 6)
    print(result.report.render())

    basis = enumerate_weight_space(fmt, 6)
    partition = orbit_partition(basis, fmt)
    print(f"\norbit partition: {len(partition)} orbits, "
          f"sizes {sorted(partition.sizes)}")
    for num, orbit in enumerate(partition.orbits, start=1):
        print(f"\norbit {num}  size {orbit.size}")
        print(render_matrix_form(orbit.representative))


if __name__ == "__main__":
    main()
