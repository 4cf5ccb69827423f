import itertools
import random

import pytest

from gpdalg import (
    ConstructionError,
    FiniteGroupoid,
    all_bisections,
    bisection,
    bisection_inv,
    bisection_mul,
    cyclic_table,
    disjoint_union,
    group_groupoid,
    identity_bisection,
    is_bisection,
    isotropy,
    orbits,
    pair_groupoid,
    relabel_arrows,
    validate,
)

from conftest import cycle3, klein_table, named_pool, swap2, swap3, zg


def test_pool_validates():
    for name, g in named_pool():
        assert validate(g) == [], name


def test_pair_groupoid_shape():
    g = pair_groupoid(3)
    assert g.n_objects == 3 and g.n_arrows == 9
    assert orbits(g).classes == ((0, 1, 2),)
    for u in range(3):
        assert g.loops_at(u) == (g.unit(u),)
    # one arrow between every ordered pair of objects
    for v in range(3):
        for w in range(3):
            assert len(g.arrows_from_to(v, w)) == 1
    with pytest.raises(ConstructionError):
        pair_groupoid(0)


def test_group_groupoid_shape():
    g = zg(4)
    assert g.n_objects == 1 and g.n_arrows == 4
    G = isotropy(g, 0)
    assert G.order == 4
    assert G.element_order(G.generator_if_cyclic()) == 4
    bad = [[0, 1], [1, 1]]
    with pytest.raises(ConstructionError):
        group_groupoid(bad)


def test_klein_group_is_not_cyclic():
    g = group_groupoid(klein_table())
    assert validate(g) == []
    G = isotropy(g, 0)
    assert G.order == 4
    assert G.generator_if_cyclic() is None
    assert sorted(G.element_order(x) for x in range(4)) == [1, 2, 2, 2]


def test_action_groupoid_shape():
    g = swap3()
    assert g.n_objects == 3 and g.n_arrows == 6
    assert orbits(g).classes == ((0, 1), (2,))
    assert orbits(g).representatives == (0, 2)
    assert isotropy(g, 2).order == 2
    assert isotropy(g, 0).order == 1
    # a non-action: images that are not permutations
    with pytest.raises(ConstructionError):
        from gpdalg import action_groupoid
        action_groupoid(cyclic_table(2), [(0, 1), (0, 0)])


def groupoids_isomorphic(g, h):
    """Brute-force isomorphism search, for tiny instances only."""
    if g.n_objects != h.n_objects or g.n_arrows != h.n_arrows:
        return False
    for op in itertools.permutations(range(g.n_objects)):
        for ap in itertools.permutations(range(g.n_arrows)):
            if any(h.src[ap[a]] != op[g.src[a]]
                   or h.tgt[ap[a]] != op[g.tgt[a]]
                   for a in range(g.n_arrows)):
                continue
            if any(h.unit_of[op[u]] != ap[g.unit_of[u]]
                   for u in range(g.n_objects)):
                continue
            if all(h.comp.get((ap[a], ap[b])) == ap[c]
                   for (a, b), c in g.comp.items()):
                return True
    return False


def test_free_swap_action_is_pair_groupoid():
    assert groupoids_isomorphic(swap2(), pair_groupoid(2))
    assert not groupoids_isomorphic(swap2(), zg(4))


def test_cycle3_is_free_and_transitive():
    g = cycle3()
    assert orbits(g).classes == ((0, 1, 2),)
    for u in range(3):
        assert isotropy(g, u).order == 1


def test_disjoint_union():
    g = disjoint_union(zg(2), pair_groupoid(2))
    assert g.n_objects == 3 and g.n_arrows == 6
    assert validate(g) == []
    assert orbits(g).classes == ((0,), (1, 2))
    assert isotropy(g, 0).order == 2
    assert isotropy(g, 1).order == 1


def test_json_round_trip():
    for name, g in named_pool():
        g2 = FiniteGroupoid.from_json_dict(g.to_json_dict())
        assert g2 == g, name
    with pytest.raises(ConstructionError):
        FiniteGroupoid.from_json_dict({"objects": 1})


def planted(field, value):
    data = zg(2).to_json_dict()
    data[field] = value
    return FiniteGroupoid.from_json_dict(data)


def test_validate_catches_planted_defects():
    # wrong inverse: t^-1 claimed to be the unit
    g = planted("inv", [0, 0])
    assert any("inv" in msg for msg in validate(g))
    # composition table with a wrong product breaks associativity or units
    g = planted("comp", [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1]])
    assert validate(g) != []
    # missing composable pair
    g = planted("comp", [[0, 0, 0], [0, 1, 1], [1, 0, 1]])
    assert any("missing" in msg for msg in validate(g))
    # unit with the wrong endpoint
    data = pair_groupoid(2).to_json_dict()
    data["units"] = [1, 3]
    assert validate(FiniteGroupoid.from_json_dict(data)) != []


def test_relabel_preserves_structure():
    rng = random.Random(3)
    for name, g in named_pool()[:8]:
        perm = list(range(g.n_arrows))
        rng.shuffle(perm)
        h = relabel_arrows(g, perm)
        assert validate(h) == [], name
        assert orbits(h).classes == orbits(g).classes
        for u in range(g.n_objects):
            assert isotropy(h, u).order == isotropy(g, u).order


def test_isotropy_constant_on_orbits():
    for name, g in named_pool():
        orb = orbits(g)
        for cls in orb.classes:
            orders = {isotropy(g, u).order for u in cls}
            assert len(orders) == 1, name


def test_isotropy_group_axioms():
    for g in (zg(4), swap3(), group_groupoid(klein_table())):
        for u in range(g.n_objects):
            G = isotropy(g, u)
            k = G.order
            e = G.identity
            for i in range(k):
                assert G.table[e][i] == i and G.table[i][e] == i
                assert G.table[i][G.inv[i]] == e
                for j in range(k):
                    for l in range(k):
                        assert G.table[G.table[i][j]][l] \
                            == G.table[i][G.table[j][l]]


def test_bisection_basics():
    g = pair_groupoid(2)
    # arrows 1 and 2 are (0<-1) and (1<-0): a global swap bisection
    U = bisection(g, [1, 2])
    V = identity_bisection(g)
    assert bisection_mul(g, U, V) == U
    assert bisection_mul(g, V, U) == U
    assert bisection_mul(g, U, U) == V
    assert bisection_inv(g, U) == U
    assert not is_bisection(g, [0, 1])  # both target object 0
    with pytest.raises(Exception):
        bisection(g, [0, 1])


def test_bisection_inverse_monoid_laws():
    g = swap3()
    bis = all_bisections(g)
    assert identity_bisection(g) in bis
    for U in bis:
        Ui = bisection_inv(g, U)
        assert bisection_mul(g, bisection_mul(g, U, Ui), U) == U
    for U, V, W in itertools.islice(itertools.product(bis, repeat=3), 3000):
        left = bisection_mul(g, bisection_mul(g, U, V), W)
        right = bisection_mul(g, U, bisection_mul(g, V, W))
        assert left == right


def test_all_bisections_closed_under_product():
    g = pair_groupoid(2)
    bis = set(all_bisections(g))
    for U in bis:
        assert bisection_inv(g, U) in bis
        for V in bis:
            assert bisection_mul(g, U, V) in bis
