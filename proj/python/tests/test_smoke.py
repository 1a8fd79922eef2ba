import pytest

import mcover


def test_path_is_perfect():
    g = mcover.Graph(4, [(0, 1), (1, 2), (2, 3)])
    r = mcover.solve(g)
    assert r["mc"] == 1
    assert r["branch"] == "perfect"
    assert r["matchings"] == [[(0, 1), (2, 3)]]


def test_star_needs_one_matching_per_leaf():
    g = mcover.parse_graph("p 4 3\ne 1 2\ne 1 3\ne 1 4\n")
    r = mcover.solve(g)
    assert r["mc"] == 3
    assert mcover.verify_cover(g, r["matchings"])
    assert mcover.brute_mc(g) == 3


def test_decompose_path_on_three_vertices():
    ge = mcover.decompose(mcover.Graph(3, [(0, 1), (1, 2)]))
    assert ge["d"] == [0, 2]
    assert ge["a"] == [1]
    assert ge["c"] == []


def test_errors():
    with pytest.raises(mcover.ParseError):
        mcover.parse_graph("p 2 1\ne 1 3\n")
    with pytest.raises(mcover.NoCoverError):
        mcover.solve(mcover.Graph(3, [(0, 1)]))
    with pytest.raises(mcover.BudgetExceeded):
        mcover.brute_mc(mcover.Graph(13, [(i, i + 1) for i in range(12)]))


def test_random_graphs_agree_with_oracle():
    for seed in range(40):
        g = mcover.random_connected_gnp(8, 0.35, seed)
        r = mcover.solve(g)
        assert mcover.verify_cover(g, r["matchings"])
        assert r["mc"] == mcover.brute_mc(g, max_edges=28)
        assert len(mcover.maximum_matching(g)) == mcover.brute_nu(g, max_edges=28)


def test_generators_are_seeded():
    a = mcover.random_connected_gnm(50, 150, 9)
    b = mcover.random_connected_gnm(50, 150, 9)
    assert a == b
    assert a.num_edges == 150
