import random

import pytest

from qgeom import (
    coordinate_hyperplane,
    enumerate_k_subspaces,
    field_new,
    polarity_new,
    span,
)


def all_subspaces(amb):
    for k in range(amb.dim + 1):
        yield from enumerate_k_subspaces(amb, k)


def test_involution_inclusion_reversal_de_morgan_exhaustive(setting22):
    # every law over all 67 subspaces of the 4-dim hyperplane
    field, h, s = setting22
    subs = list(all_subspaces(h))
    assert len(subs) == 67
    for w in subs:
        sw = s.apply(w)
        assert sw.dim == h.dim - w.dim
        assert s.apply(sw) == w
    for u in subs:
        su = s.apply(u)
        for w in subs:
            sw = s.apply(w)
            if u.contains(w):
                assert sw.contains(su)
    # sigma(U + W) = sigma(U) meet sigma(W) on a deterministic sample of pairs
    for i in range(0, 67, 3):
        for j in range(1, 67, 5):
            u, w = subs[i], subs[j]
            assert s.apply(u.sum(w)) == s.apply(u).intersect(s.apply(w))
            assert s.apply(u.intersect(w)) == s.apply(u).sum(s.apply(w))


def test_polarity_dim_law_gf3(setting32):
    field, h, s = setting32
    rng = random.Random(5)
    for _ in range(150):
        k = rng.randrange(0, 5)
        vecs = [tuple(rng.randrange(3) for _ in range(5)) for _ in range(k)]
        vecs = [v[:4] + (0,) for v in vecs]  # stay inside the hyperplane
        w = span(field, 5, vecs)
        sw = s.apply(w)
        assert sw.dim == 4 - w.dim
        assert s.apply(sw) == w


def test_polarity_with_nonidentity_gram():
    f = field_new(2)
    h = coordinate_hyperplane(f, 5)
    gram = [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ]
    s = polarity_new(f, h, gram)
    for w in all_subspaces(h):
        sw = s.apply(w)
        assert sw.dim == 4 - w.dim
        assert s.apply(sw) == w
    # hyperbolic pairing sends <e1> to the span of {e1, e3, e4}
    e1 = span(f, 5, [(1, 0, 0, 0, 0)])
    img = s.apply(e1)
    assert img.contains_vector((1, 0, 0, 0, 0))
    assert not img.contains_vector((0, 1, 0, 0, 0))


def test_skew_gram_gf3():
    f = field_new(3)
    h = coordinate_hyperplane(f, 5)
    gram = [
        [0, 1, 0, 0],
        [2, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 2, 0],
    ]
    s = polarity_new(f, h, gram)
    rng = random.Random(9)
    for _ in range(60):
        k = rng.randrange(0, 5)
        vecs = [tuple(rng.randrange(3) for _ in range(4)) + (0,) for _ in range(k)]
        w = span(f, 5, vecs)
        assert s.apply(s.apply(w)) == w


def test_extreme_subspaces(setting22):
    field, h, s = setting22
    from qgeom import zero_space

    z = zero_space(field, 5)
    assert s.apply(z) == h
    assert s.apply(h) == z


def test_apply_rejects_subspace_outside_h(setting22):
    field, h, s = setting22
    w = span(field, 5, [(0, 0, 0, 0, 1)])
    with pytest.raises(ValueError):
        s.apply(w)


def test_degenerate_gram_rejected():
    f = field_new(2)
    h = coordinate_hyperplane(f, 5)
    singular = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 0],
    ]
    with pytest.raises(ValueError):
        polarity_new(f, h, singular)


def test_asymmetric_gram_rejected():
    f = field_new(3)
    h = coordinate_hyperplane(f, 5)
    lopsided = [
        [1, 1, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]
    with pytest.raises(ValueError):
        polarity_new(f, h, lopsided)


def test_wrong_shape_gram_rejected():
    f = field_new(2)
    h = coordinate_hyperplane(f, 5)
    with pytest.raises(ValueError):
        polarity_new(f, h, [[1, 0], [0, 1]])
