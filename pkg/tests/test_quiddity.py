import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from friezeroots.quiddity import (
    MINUS_IDENTITY,
    Triangulation,
    canonical_rotation,
    catalan,
    cycle_to_triangulation,
    det,
    ears,
    enumerate_cycles,
    enumerate_rotation_classes,
    eta,
    eta_product,
    insert_ear,
    is_fan_shaped,
    is_quiddity_cycle,
    matmul,
    psi,
    psi_inv,
    remove_ear,
    reverse,
    rotate,
    triangulation_to_cycle,
    xi,
)

from oracles import brute_force_cycles, eta_product_naive

CYCLES_UP_TO_10 = [c for n in range(3, 11) for c in enumerate_cycles(n)]


@st.composite
def cycles(draw, max_len=14):
    """Random cycles built by ear insertions from (0, 0)."""
    c = (0, 0)
    for _ in range(draw(st.integers(1, max_len - 2))):
        c = insert_ear(c, draw(st.integers(1, len(c))))
    return c


def test_eta_shape():
    assert eta(0) == ((0, -1), (1, 0))
    assert eta(2) == ((2, -1), (1, 0))
    assert det(eta(2)) == 1


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_eta_rule(a, b):
    lhs = matmul(eta(a), eta(b))
    rhs = matmul(matmul(eta(a + 1), eta(1)), eta(b + 1))
    assert lhs == rhs


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_xi_rule(a, b):
    lhs = matmul(matmul(xi(a), xi(3)), xi(b))
    assert lhs == matmul(xi(a - 1), xi(b - 1))


def test_eta_product_examples():
    assert eta_product((0, 0)) == MINUS_IDENTITY
    assert eta_product((1, 1, 1)) == MINUS_IDENTITY
    assert eta_product((2, 2, 2)) == ((4, -3), (3, -2))
    assert [list(r) for r in eta_product((2, 2, 2))] == eta_product_naive((2, 2, 2))


@pytest.mark.parametrize("seq,expected", [
    ((0, 0), True),
    ((1, 2, 1, 2), True),
    ((2, 2, 2), False),
    ((1, 1, 1, 1), False),
    ((1, 1, 1), True),
    ((0, 0, 0), False),
    ((), False),
    ((5,), False),
    (("a", 1), False),
    ((3, 1, 2, 2, 1), True),
    ((1, 2, 2, 1, 3), True),
])
def test_is_quiddity_cycle(seq, expected):
    assert is_quiddity_cycle(seq) is expected


def test_enumerate_small():
    assert enumerate_cycles(2) == [(0, 0)]
    assert enumerate_cycles(3) == [(1, 1, 1)]
    assert enumerate_cycles(4) == [(1, 2, 1, 2), (2, 1, 2, 1)]
    assert len(enumerate_cycles(7)) == 42


@pytest.mark.parametrize("n", range(2, 9))
def test_enumerate_matches_brute_force(n):
    assert enumerate_cycles(n) == brute_force_cycles(n)


@pytest.mark.parametrize("n", range(2, 15))
def test_catalan_counts(n):
    assert len(enumerate_cycles(n)) == catalan(n - 2)


def test_enumeration_is_sorted_and_unique():
    cs = enumerate_cycles(9)
    assert cs == sorted(set(cs))


@pytest.mark.parametrize("n,shards", [(9, 3), (10, 7), (6, 4), (4, 5)])
def test_sharded_enumeration_partitions(n, shards):
    parts = [enumerate_cycles(n, k, shards) for k in range(shards)]
    flat = [c for p in parts for c in p]
    assert len(flat) == len(set(flat))
    assert sorted(flat) == enumerate_cycles(n)
    assert parts == [enumerate_cycles(n, k, shards) for k in range(shards)]


def test_enumerate_rejects_short():
    with pytest.raises(ValueError):
        enumerate_cycles(1)


@pytest.mark.parametrize("n", range(3, 11))
def test_rotation_classes(n):
    full = {canonical_rotation(c) for c in enumerate_cycles(n)}
    assert enumerate_rotation_classes(n) == sorted(full)


@pytest.mark.parametrize("c", CYCLES_UP_TO_10[::7])
def test_product_and_sum(c):
    assert eta_product(c) == MINUS_IDENTITY
    assert sum(c) == 3 * len(c) - 6


def test_rotate_reverse():
    assert rotate((1, 2, 1, 2), 1) == (2, 1, 2, 1)
    assert reverse((1, 3, 1, 4, 1, 3, 1, 4)) == (4, 1, 3, 1, 4, 1, 3, 1)
    c = (1, 3, 1, 4, 1, 3, 1, 4)
    assert rotate(c, len(c)) == c


def test_closure_exhaustive():
    for c in CYCLES_UP_TO_10:
        n = len(c)
        assert is_quiddity_cycle(reverse(c))
        for k in range(n):
            assert is_quiddity_cycle(rotate(c, k))
        for i in range(1, n + 1):
            assert is_quiddity_cycle(insert_ear(c, i))
        assert is_quiddity_cycle(psi_inv(c))


def test_insert_remove_examples():
    assert insert_ear((0, 0), 1) == (1, 1, 1)
    assert remove_ear((1, 2, 1, 2), 1) == (1, 1, 1)
    assert insert_ear((1, 1, 1), 1) == (2, 1, 2, 1)


def test_remove_ear_rejects_non_ear():
    with pytest.raises(ValueError):
        remove_ear((1, 2, 1, 2), 2)
    with pytest.raises(ValueError):
        remove_ear((0, 0), 1)


def test_insert_remove_inverse_exhaustive():
    for n in range(2, 9):
        for c in enumerate_cycles(n):
            for i in range(1, n + 1):
                grown = insert_ear(c, i)
                assert remove_ear(grown, i + 1) == c


@given(cycles())
def test_peeling_terminates_in_n_minus_2_steps(c):
    steps = 0
    while len(c) > 2:
        c = remove_ear(c, min(ears(c)))
        steps += 1
        assert is_quiddity_cycle(c)
    assert c == (0, 0)


@pytest.mark.parametrize("n", range(3, 11))
def test_peeling_exhaustive(n):
    for c in enumerate_cycles(n):
        steps = 0
        while len(c) > 2:
            c = remove_ear(c, min(ears(c)))
            steps += 1
        assert c == (0, 0) and steps == n - 2


def test_psi_examples():
    assert psi((3, 1, 3, 1, 3, 1)) == (1, 1, 1)
    assert psi((5, 1, 3, 1, 5, 1, 3, 1, 5, 1, 3, 1)) == (3, 1, 3, 1, 3, 1)
    assert psi((2, 1, 2, 1)) == (0, 0)
    assert is_quiddity_cycle(psi((3, 1, 3, 1, 3, 1)))


@pytest.mark.parametrize("bad", [(1, 1, 1), (1, 2, 1, 2), (3, 1, 4, 1, 3, 2)])
def test_psi_rejects(bad):
    with pytest.raises(ValueError):
        psi(bad)


def test_psi_bijection_exhaustive():
    # A' \ {(1,1,1)}: cycles with 1 at every even position
    for n in range(4, 13, 2):
        primed = [c for c in enumerate_cycles(n) if all(a == 1 for a in c[1::2])]
        images = [psi(c) for c in primed]
        for c, p in zip(primed, images):
            assert is_quiddity_cycle(p)
            assert psi_inv(p) == c
        assert sorted(images) == enumerate_cycles(n // 2)


def test_ears_and_fans():
    assert ears((1, 2, 1, 2)) == {1, 3}
    assert is_fan_shaped((3, 1, 2, 2, 1))
    assert is_fan_shaped((2, 2, 1, 3, 1))
    assert is_fan_shaped((1, 1, 1))
    assert not is_fan_shaped((1, 3, 1, 3, 1, 3))


def test_fan_shape_means_common_vertex():
    for n in range(3, 10):
        for c in enumerate_cycles(n):
            t = cycle_to_triangulation(c)
            common = set.intersection(*(set(tri) for tri in t.triangles))
            assert is_fan_shaped(c) == bool(common)


def test_triangulation_examples():
    assert cycle_to_triangulation((1, 1, 1)).triangles == ((1, 2, 3),)
    t = cycle_to_triangulation((3, 1, 4, 1, 3, 1, 4, 1))
    expected = {(1, 2, 3), (3, 4, 5), (5, 6, 7), (7, 8, 1), (1, 3, 7), (3, 5, 7)}
    assert set(t.triangles) == {tuple(sorted(x)) for x in expected}
    assert t.degrees() == (3, 1, 4, 1, 3, 1, 4, 1)


def test_triangulation_round_trip_exhaustive():
    for c in CYCLES_UP_TO_10:
        t = cycle_to_triangulation(c)
        t.validate()
        assert len(t.triangles) == len(c) - 2
        assert triangulation_to_cycle(t) == c


def test_triangulation_bijection_counts():
    n = 8
    images = {cycle_to_triangulation(c).triangles for c in enumerate_cycles(n)}
    assert len(images) == catalan(n - 2)


def test_invalid_triangulation():
    crossing = Triangulation(4, ((1, 2, 3), (2, 3, 4)))
    with pytest.raises(ValueError):
        triangulation_to_cycle(crossing)
    with pytest.raises(ValueError):
        Triangulation(5, ((1, 3, 5), (1, 2, 4), (2, 3, 4))).validate()
    with pytest.raises(ValueError):
        cycle_to_triangulation((0, 0))


@settings(max_examples=200)
@given(cycles(), st.integers(0, 30))
def test_rotation_commutes_with_validity(c, k):
    r = rotate(c, k)
    assert is_quiddity_cycle(r)
    assert canonical_rotation(r) == canonical_rotation(c)
