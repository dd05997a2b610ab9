import random

from hypothesis import given, settings, strategies as st

from modclose.lattices import Lattice


def columns_strategy(dim, max_cols=4):
    return st.lists(
        st.tuples(*([st.integers(min_value=-9, max_value=9)] * dim)),
        max_size=max_cols,
    )


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=3).flatmap(
    lambda d: st.tuples(st.just(d), columns_strategy(d), st.randoms(use_true_random=False))
))
def test_canonical_basis_independent_of_generator_order(args):
    dim, cols, rnd = args
    lat = Lattice.from_columns(dim, cols)
    shuffled = cols[:]
    rnd.shuffle(shuffled)
    assert Lattice.from_columns(dim, shuffled) == lat
    # scaling a generator list by unimodular recombination keeps the lattice
    if len(cols) >= 2:
        mixed = cols[:]
        mixed[0] = tuple(a + 2 * b for a, b in zip(mixed[0], mixed[1]))
        assert Lattice.from_columns(dim, mixed) == lat


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=1, max_value=3).flatmap(
    lambda d: st.tuples(
        st.just(d),
        columns_strategy(d),
        st.tuples(*([st.integers(min_value=-20, max_value=20)] * d)),
        st.randoms(use_true_random=False),
    )
))
def test_reduce_gives_canonical_coset_representatives(args):
    dim, cols, vec, rnd = args
    lat = Lattice.from_columns(dim, cols)
    rep = lat.reduce(vec)
    # reduction is idempotent and moves by lattice vectors only
    assert lat.reduce(rep) == rep
    assert lat.contains(tuple(a - b for a, b in zip(vec, rep)))
    # translating by a random lattice vector does not change the representative
    if lat.basis:
        shift = list(vec)
        for col in lat.basis:
            r = rnd.randint(-3, 3)
            shift = [a + r * b for a, b in zip(shift, col)]
        assert lat.reduce(shift) == rep
    # basis columns are members; the basis is echelon with positive pivots
    for col, (row, pivot) in zip(lat.basis, lat.pivots):
        assert lat.contains(col)
        assert col[row] == pivot > 0
        assert all(col[i] == 0 for i in range(row))
    rows = [r for r, _ in lat.pivots]
    assert rows == sorted(set(rows))


def test_left_reduction_below_pivots():
    # earlier columns carry entries in [0, pivot) at later pivot rows
    rng = random.Random(5)
    for _ in range(200):
        dim = rng.randint(2, 4)
        cols = [
            tuple(rng.randint(-9, 9) for _ in range(dim))
            for _ in range(rng.randint(0, 4))
        ]
        lat = Lattice.from_columns(dim, cols)
        for j, (row, pivot) in enumerate(lat.pivots):
            for j2 in range(j):
                assert 0 <= lat.basis[j2][row] < pivot


def test_intersection_and_sum_against_membership():
    rng = random.Random(11)
    for _ in range(50):
        dim = rng.randint(1, 3)
        a = Lattice.from_columns(
            dim, [tuple(rng.randint(-6, 6) for _ in range(dim)) for _ in range(2)]
        )
        b = Lattice.from_columns(
            dim, [tuple(rng.randint(-6, 6) for _ in range(dim)) for _ in range(2)]
        )
        both = a.intersect(b)
        total = a.sum(b)
        for c in both.basis:
            assert a.contains(c) and b.contains(c)
        # box scan: vectors in both lattices lie in the intersection
        for _ in range(30):
            v = tuple(rng.randint(-12, 12) for _ in range(dim))
            if a.contains(v) and b.contains(v):
                assert both.contains(v)
            if a.contains(v) or b.contains(v):
                assert total.contains(v)


def test_saturation_examples():
    lat = Lattice.from_columns(2, [(2, 4)])
    sat = lat.saturation()
    assert sat.contains((1, 2))
    assert not sat.contains((1, 1))
    assert lat.saturation().saturation() == sat
    zero = Lattice.from_columns(2, [])
    assert zero.saturation() == zero
