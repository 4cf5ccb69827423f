import itertools
import random

import pytest

from gpdalg import (
    BoundExceededError,
    Matrix,
    NonFreeQuotientError,
    Subspace,
    canonical_rows,
    enumerate_subspaces,
    left_kernel,
    mat_kernel,
    ring_from_spec,
    subspace_intersect,
    subspace_preimage,
)

Q = ring_from_spec("q")
F2 = ring_from_spec("fp:2")
F3 = ring_from_spec("fp:3")
F5 = ring_from_spec("fp:5")
Z4 = ring_from_spec("zn:4")
Z6 = ring_from_spec("zn:6")


def brute_span(ring, gens, dim):
    """All ring-combinations of the generators, by closure (finite rings)."""
    seen = {(ring.zero,) * dim}
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for g in gens:
            for c in ring.elements():
                w = tuple(ring.add(v[i], ring.mul(c, g[i]))
                          for i in range(dim))
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return seen


def test_matrix_ops():
    A = Matrix.from_rows(Q, [[1, 2], [3, 4]])
    B = Matrix.from_rows(Q, [[0, 1], [1, 0]])
    assert (A * B).to_lists() == [[2, 1], [4, 3]]
    assert (A + B).to_lists() == [[1, 3], [4, 4]]
    assert A.transpose().to_lists() == [[1, 3], [2, 4]]
    assert A.apply((1, 0)) == (1, 3)
    I = Matrix.identity(Q, 2)
    assert A * I == A and I * A == A
    assert Matrix.zeros(Q, 2, 2).is_zero()


def test_rref_canonical_and_idempotent():
    rows = [(2, 4, 2), (1, 2, 3), (3, 6, 5)]
    can = canonical_rows(Q, [Q.coerce_vector(r) for r in rows], 3)
    assert can == ((1, 2, 0), (0, 0, 1))
    assert canonical_rows(Q, list(can), 3) == can


def test_howell_canonical_frozen():
    # over Z/4 the span of (2,1) needs a second saturation row
    S = Subspace(Z4, 2, [(2, 1)])
    assert S.basis == ((2, 1), (0, 2))
    assert S.element_count() == 4
    assert sorted(brute_span(Z4, [(2, 1)], 2)) == sorted(
        [(0, 0), (2, 1), (0, 2), (2, 3)])


def test_canonical_form_is_generator_independent():
    rng = random.Random(7)
    for ring in (F3, Z4, Z6):
        for _ in range(25):
            dim = rng.randint(1, 4)
            gens = [tuple(rng.randrange(ring.modulus) for _ in range(dim))
                    for _ in range(rng.randint(1, 3))]
            S = Subspace(ring, dim, gens)
            shuffled = list(gens)
            rng.shuffle(shuffled)
            # throw in redundant combinations of the originals
            extra = tuple(ring.add(gens[0][i], gens[-1][i])
                          for i in range(dim))
            T = Subspace(ring, dim, shuffled + [extra])
            assert S.basis == T.basis
            assert S == T


def test_membership_matches_brute_force():
    for ring in (F2, Z4):
        gens = [(1, 2, 0), (0, 2, 2)]
        gens = [ring.coerce_vector(g) for g in gens]
        S = Subspace(ring, 3, gens)
        expected = brute_span(ring, gens, 3)
        for v in itertools.product(ring.elements(), repeat=3):
            assert S.contains(v) == (v in expected)
        assert S.element_count() == len(expected)


def test_kernel_is_complete():
    A = Matrix.from_rows(Z4, [[2, 1, 0], [0, 2, 2]])
    K = mat_kernel(A)
    sols = {v for v in itertools.product(range(4), repeat=3)
            if all(x == 0 for x in A.apply(v))}
    for v in K.basis:
        assert all(x == 0 for x in A.apply(v))
    assert K.element_count() == len(sols)
    for v in sols:
        assert K.contains(v)


def test_left_kernel():
    A = Matrix.from_rows(F3, [[1, 2], [2, 4 % 3], [0, 0]])
    L = left_kernel(A)
    for v in L.basis:
        prod = tuple(
            F3.add(F3.mul(v[0], A.at(0, j)),
                   F3.add(F3.mul(v[1], A.at(1, j)), F3.mul(v[2], A.at(2, j))))
            for j in range(2))
        assert prod == (0, 0)
    assert L.num_rows == 2


def test_intersection_exhaustive():
    a = Subspace(Z4, 3, [(1, 1, 0), (0, 2, 0)])
    b = Subspace(Z4, 3, [(1, 0, 1), (0, 2, 2)])
    c = subspace_intersect(a, b)
    for v in itertools.product(range(4), repeat=3):
        assert c.contains(v) == (a.contains(v) and b.contains(v))


def test_preimage_exhaustive():
    A = Matrix.from_rows(Z4, [[1, 2], [2, 0]])
    target = Subspace(Z4, 2, [(2, 0), (0, 2)])
    P = subspace_preimage(A, target)
    for v in itertools.product(range(4), repeat=2):
        assert P.contains(v) == target.contains(A.apply(v))


def test_subspace_counts_over_small_fields():
    assert len(list(enumerate_subspaces(F2, 4))) == 67
    assert len(list(enumerate_subspaces(F3, 2))) == 6
    assert len(list(enumerate_subspaces(F2, 3))) == 16
    for S in enumerate_subspaces(F3, 2):
        assert Subspace(F3, 2, list(S.basis)) == S


def test_enumerate_subspaces_bound():
    with pytest.raises(BoundExceededError):
        list(enumerate_subspaces(F3, 6, bound=100))


def test_coordinates_need_unit_pivots():
    free = Subspace(Z4, 2, [(1, 3)])
    assert free.coordinates((3, 1)) == (3,)
    crooked = Subspace(Z4, 2, [(2, 1), (0, 2)])
    with pytest.raises(NonFreeQuotientError):
        crooked.coordinates((2, 1))


def test_zero_and_full():
    Z = Subspace.zero(Q, 3)
    F = Subspace.full(Q, 3)
    assert Z.is_zero() and not Z.is_full()
    assert F.is_full() and F.contains_subspace(Z)
    assert Z.join(F) == F
    assert subspace_intersect(Z, F) == Z
