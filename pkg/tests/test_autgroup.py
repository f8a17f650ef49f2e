import random

import pytest

from qgeom import (
    Matrix,
    NotAutomorphism,
    PointPermutation,
    SemilinearMap,
    Theorem2Violation,
    check_theorem2_relation,
    field_new,
    induced_block_permutation,
    is_design_automorphism,
    lift,
    point_index_map,
    random_stabilizer_element,
    span,
    stabilizer_order,
)


def test_semilinear_requires_h_stabilization():
    f = field_new(2)
    # last row touches the block columns: does not stabilize the hyperplane
    rows = [
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0),
        (1, 0, 0, 0, 1),
    ]
    with pytest.raises(ValueError):
        SemilinearMap(Matrix(f, rows), 0)


def test_semilinear_requires_invertible():
    f = field_new(2)
    rows = [(1, 0), (1, 0)]
    with pytest.raises(ValueError):
        SemilinearMap(Matrix(f, rows), 0)


def test_semilinear_frob_range():
    f = field_new(2, 2)
    m = Matrix.identity(f, 3)
    SemilinearMap(m, 1)
    with pytest.raises(ValueError):
        SemilinearMap(m, 2)


def test_apply_vector_frobenius_first():
    # x -> M (x^p), so with M = diag(g, 1) and x = (g, g), over GF(4):
    # frobenius maps g to g^2, then the matrix scales coordinate 0 by g
    f = field_new(2, 2)
    g = 2  # a generator of GF(4)
    m = Matrix(f, [(g, 0), (0, 1)])
    phi = SemilinearMap(m, 1)
    out = phi.apply_vector((g, g))
    g2 = f.frobenius(g)
    assert out == (f.mul(g, g2), g2)


def test_compose_is_apply_after_apply():
    f = field_new(2, 2)
    rng = random.Random(6)
    for _ in range(50):
        a = random_stabilizer_element(f, 1, rng.randrange(10**9))
        b = random_stabilizer_element(f, 1, rng.randrange(10**9))
        ab = a.compose(b)
        for _ in range(5):
            v = tuple(rng.randrange(4) for _ in range(3))
            assert ab.apply_vector(v) == a.apply_vector(b.apply_vector(v))


def test_inverse_round_trip():
    f = field_new(3, 2)
    rng = random.Random(10)
    for _ in range(25):
        phi = random_stabilizer_element(f, 1, rng.randrange(10**9))
        both = phi.compose(phi.inverse())
        n = phi.dim
        for _ in range(5):
            v = tuple(rng.randrange(9) for _ in range(n))
            assert both.apply_vector(v) == v


def test_random_stabilizer_element_is_deterministic():
    f = field_new(2)
    a = random_stabilizer_element(f, 2, 42)
    b = random_stabilizer_element(f, 2, 42)
    assert a == b
    c = random_stabilizer_element(f, 2, 43)
    assert a != c


def test_random_stabilizer_element_shape():
    f = field_new(3)
    phi = random_stabilizer_element(f, 2, 7)
    rows = phi.matrix.entries
    assert rows[4][:4] == (0, 0, 0, 0)
    assert rows[4][4] != 0


def test_frobenius_powers_are_sampled():
    f = field_new(2, 2)
    seen = {random_stabilizer_element(f, 1, i).frob for i in range(60)}
    assert seen == {0, 1}


def test_apply_subspace_preserves_dimension(setting22):
    field, h, s = setting22
    rng = random.Random(3)
    for i in range(20):
        phi = random_stabilizer_element(field, 2, i)
        w = span(field, 5, [tuple(rng.randrange(2) for _ in range(5)) for _ in range(3)])
        img = phi.apply_subspace(w)
        assert img.dim == w.dim
        assert phi.apply_subspace(h) == h


def test_lift_hand_example(setting22):
    field, h, s = setting22
    # swap e1 and e2; identity elsewhere
    rows = [
        (0, 1, 0, 0, 0),
        (1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 1, 0),
        (0, 0, 0, 0, 1),
    ]
    phi = SemilinearMap(Matrix(field, rows), 0)
    perm = lift(phi, s)
    idx = point_index_map(field, 5)
    assert perm.apply(idx[(1, 0, 0, 0, 0)]) == idx[(0, 1, 0, 0, 0)]
    assert perm.apply(idx[(0, 1, 0, 0, 0)]) == idx[(1, 0, 0, 0, 0)]
    assert perm.apply(idx[(0, 0, 0, 0, 1)]) == idx[(0, 0, 0, 0, 1)]
    # a point outside H moves by phi directly
    assert perm.apply(idx[(1, 0, 0, 0, 1)]) == idx[(0, 1, 0, 0, 1)]


def test_lift_of_scalar_is_identity():
    f = field_new(3)
    rows = [[2 if i == j else 0 for j in range(5)] for i in range(5)]
    phi = SemilinearMap(Matrix(f, rows), 0)
    from qgeom import coordinate_hyperplane, polarity_new

    h = coordinate_hyperplane(f, 5)
    s = polarity_new(f, h)
    assert lift(phi, s).is_identity


def test_lift_is_group_homomorphism(setting22):
    field, h, s = setting22
    rng = random.Random(100)
    for trial in range(100):
        a = random_stabilizer_element(field, 2, (100, trial, 0))
        b = random_stabilizer_element(field, 2, (100, trial, 1))
        la = lift(a, s)
        lb = lift(b, s)
        assert lift(a.compose(b), s) == la.compose(lb)


def test_lift_homomorphism_gf3_sampled(setting32):
    field, h, s = setting32
    for trial in range(10):
        a = random_stabilizer_element(field, 2, (7, trial, 0))
        b = random_stabilizer_element(field, 2, (7, trial, 1))
        assert lift(a.compose(b), s) == lift(a, s).compose(lift(b, s))


def test_lift_rejects_map_not_stabilizing_that_hyperplane(setting22):
    from qgeom import polarity_new, span as mkspan

    field, h, s = setting22
    # valid stabilizer of the coordinate hyperplane, paired with a
    # polarity of a different hyperplane it moves
    rows = [
        (1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0),
        (0, 0, 1, 0, 0),
        (0, 0, 0, 1, 1),
        (0, 0, 0, 0, 1),
    ]
    phi = SemilinearMap(Matrix(field, rows), 0)
    other_h = mkspan(
        field,
        5,
        [(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 0, 1)],
    )
    s2 = polarity_new(field, other_h)
    with pytest.raises(ValueError):
        lift(phi, s2)


def test_lifted_maps_are_design_automorphisms(setting22, jt22):
    field, h, s = setting22
    for i in range(50):
        phi = random_stabilizer_element(field, 2, (1, i))
        perm = lift(phi, s)
        assert is_design_automorphism(jt22, perm) is True
        blocks = induced_block_permutation(jt22, perm)
        assert blocks is not None
        assert sorted(blocks) == list(range(155))


def test_non_automorphism_is_reported(jt22):
    # transposing two points of one block generally breaks the design
    perm = list(range(31))
    perm[0], perm[30] = perm[30], perm[0]
    res = is_design_automorphism(jt22, PointPermutation(tuple(perm)))
    assert res is not True
    assert isinstance(res, NotAutomorphism)
    assert not res
    img = sorted(res.image)
    assert not jt22.has_block(img)
    assert induced_block_permutation(jt22, PointPermutation(tuple(perm))) is None


def test_theorem2_relation_holds(setting22, tg22, jt22, cert22):
    field, h, s = setting22
    for i in range(25):
        phi = random_stabilizer_element(field, 2, (2, i))
        assert check_theorem2_relation(jt22, tg22, cert22, phi, s) is True


def test_theorem2_relation_detects_corruption(setting22, tg22, jt22, cert22):
    from qgeom import IsoCertificate

    field, h, s = setting22
    bad = list(cert22.mapping)
    bad[0], bad[1] = bad[1], bad[0]
    bad_cert = IsoCertificate(tuple(bad), cert22.source, cert22.target)
    phi = random_stabilizer_element(field, 2, (3, 0))
    res = check_theorem2_relation(jt22, tg22, bad_cert, phi, s)
    assert res is not True
    assert isinstance(res, Theorem2Violation)
    assert not res


def test_stabilizer_order_values():
    assert stabilizer_order(2, 2, 1) == 322560
    assert stabilizer_order(3, 2, 1) == 1965150720
    assert stabilizer_order(2, 0, 1) == 1
    assert stabilizer_order(4, 1, 2) == 2 * (16 * (16 - 1) * (16 - 4))
    with pytest.raises(ValueError):
        stabilizer_order(6, 2, 1)
    with pytest.raises(ValueError):
        stabilizer_order(4, 2, 3)


def test_point_permutation_algebra():
    p = PointPermutation((1, 2, 0))
    q = PointPermutation((0, 2, 1))
    assert p.compose(q).perm == (1, 0, 2)
    assert p.compose(p.inverse()).is_identity
    with pytest.raises(ValueError):
        PointPermutation((0, 0, 1))
