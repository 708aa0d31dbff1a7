"""Weight spaces of monomials on p x q x r arrays.

A degree-d monomial in the entries x_ijk is an exponent array; its weight
under the Cartan subalgebra is the tuple of consecutive slice-sum
differences in each mode.  Invariants live in the zero weight space, whose
basis this script enumerates for a few small cases.
"""

from hyperdet import (
    Format,
    Weight,
    count_weight_space,
    enumerate_weight_space,
    invariant_degree_info,
    render_matrix_form,
    slice_sums,
)


def main() -> None:
    for dims in ((2, 2, 2), (3, 3, 2), (4, 4, 2), (2, 2, 3)):
        fmt = Format(*dims)
        info = invariant_degree_info(fmt)
        print(
            f"format {dims}: invariant degrees are multiples of "
            f"{info.lcm_step}, hyperdeterminant degree "
            f"{info.hyperdet_degree}"
        )
        d = info.lcm_step
        print(f"  |W({d};0)| = {count_weight_space(fmt, d)}")

    fmt = Format(3, 3, 2)
    print("\nzero weight space of degree 6 on 3x3x2 arrays:")
    basis = enumerate_weight_space(fmt, 6)
    print(f"  {len(basis)} exponent arrays, sorted by flattening")
    first, last = basis[0], basis[-1]
    for label, arr in (("first", first), ("last", last)):
        print(f"  {label}: slice sums {slice_sums(arr)}")
        print("    " + render_matrix_form(arr).replace("\n", "\n    "))

    print("\nzero weight forces equal parallel slice sums;")
    print("degree 7 admits none, degree 12 carries the hyperdeterminant:")
    print(f"  |W(7;0)| = {count_weight_space(fmt, 7)}")
    print(f"  |W(12;0)| = {count_weight_space(fmt, 12)}")

    w = Weight.from_concat(fmt, (2, -1, 0, 0, 0))
    print(f"\na higher weight {w.concat} (one raising step in mode 1):")
    print(f"  |W(6;w)| = {count_weight_space(fmt, 6, w)}")


if __name__ == "__main__":
    main()
