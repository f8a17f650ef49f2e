"""Tour of the arithmetic layer: finite fields, matrices, subspaces.

Run:  python3 demos/01_fields_and_subspaces.py
"""

from qgeom import (
    Matrix,
    enumerate_k_subspaces,
    field_from_order,
    field_new,
    full_space,
    gaussian_binomial,
    projective_points,
    span,
)


def show_field_arithmetic():
    print("== GF(4) ==")
    f4 = field_new(2, 2)
    print(f"modulus coefficients (little-endian): {f4.modulus}")
    g = 2  # the class of x
    print(f"g * g     = {f4.mul(g, g)}   (x^2 = x + 1)")
    print(f"g * (g+1) = {f4.mul(g, 3)}   (x^2 + x = 1)")
    print(f"g^3       = {f4.pow(g, 3)}   (multiplicative order 3)")
    print(f"frobenius g -> g^2 = {f4.frobenius(g)}")
    print()

    print("== GF(9) ==")
    f9 = field_from_order(9)
    a = 5
    print(f"5 + 5 = {f9.add(a, a)}  5 * 5 = {f9.mul(a, a)}  5^-1 = {f9.inv(a)}")
    print()


def show_subspace_lattice():
    print("== subspaces of GF(2)^4 ==")
    f = field_new(2)
    u = span(f, 4, [(1, 1, 0, 0), (0, 0, 1, 1)])
    w = span(f, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    print(f"dim u = {u.dim}, dim w = {w.dim}")
    print(f"dim(u + w) = {u.dim_sum(w)}, dim(u ∩ w) = {u.dim_intersect(w)}")
    print(f"modular identity: {u.dim} + {w.dim} = {u.dim_sum(w)} + {u.dim_intersect(w)}")
    print(f"canonical basis of u: {u.basis_rows}")
    print()


def show_enumeration():
    print("== counting subspaces ==")
    for q in (2, 3):
        f = field_from_order(q)
        amb = full_space(f, 4)
        for k in range(5):
            count = sum(1 for _ in enumerate_k_subspaces(amb, k))
            binom = gaussian_binomial(4, k, q)
            mark = "ok" if count == binom else "MISMATCH"
            print(f"q={q} k={k}: enumerated {count:5d}  [4 choose {k}]_{q} = {binom:5d}  {mark}")
    print()
    f = field_new(2)
    line = span(f, 3, [(1, 0, 1), (0, 1, 1)])
    print(f"projective points of a 2-space over GF(2): "
          f"{[p.rep for p in projective_points(line)]}")


def show_rank_machinery():
    print()
    print("== rank and kernel over GF(3) ==")
    f = field_new(3)
    m = Matrix(f, [(1, 2, 0), (2, 1, 0), (0, 0, 1)])
    print(f"rank = {m.rank()}")
    sing = Matrix(f, [(1, 2, 0), (2, 1, 0), (0, 0, 0)])
    print(f"kernel basis of a singular matrix: {sing.kernel_basis().entries}")


if __name__ == "__main__":
    show_field_arithmetic()
    show_subspace_lattice()
    show_enumeration()
    show_rank_machinery()
