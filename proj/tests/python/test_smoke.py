import math

import pytest

import graphroots as gr


def cycle(n):
    return gr.Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_square_and_girth():
    c7 = cycle(7)
    assert gr.girth(c7) == 7
    assert gr.girth(gr.Graph(3, [(0, 1), (1, 2)])) == math.inf
    assert gr.square(c7).m == 14
    assert gr.power(c7, 3) == gr.Graph(7, [(i, j) for i in range(7) for j in range(i + 1, 7)])


def test_root7_round_trip():
    c9 = cycle(9)
    result = gr.recognize_root7(gr.square(c9))
    assert result["verdict"] == "YES"
    assert result["girth"] == 9
    assert gr.is_isomorphic(result["root"], c9)


def test_root7_rejects_octahedron():
    result = gr.recognize_root7(gr.square(cycle(6)))
    assert result["verdict"] == "NO"
    assert result["reason"] == "TOO_MANY_CLIQUES"


def test_root6_and_neighborhood():
    c6 = cycle(6)
    g = gr.square(c6)
    result = gr.recognize_girth6(g)
    assert result["verdict"] == "YES"
    assert gr.check_square_root(result["root"], g)
    assert gr.root_with_neighborhood(g, 0, [1, 5]) == c6
    assert gr.root_with_neighborhood(g, 0, [1]) is None


def test_cliques():
    cliques, complete = gr.maximal_cliques(gr.square(cycle(6)), cap=6)
    assert not complete
    cliques, complete = gr.maximal_cliques(gr.square(cycle(6)))
    assert complete and len(cliques) == 8
    p4sq = gr.square(gr.Graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert gr.max_weight_clique(p4sq, [1, 1, 1, 5], 4) == ([1, 2, 3], 7.0)


def test_oracle():
    k5 = gr.Graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    search = gr.find_roots(k5, girth_min=7, limit=10)
    assert search["status"] == "EXHAUSTED"
    assert len(search["roots"]) == 5


def test_reduction():
    subsets = [[1, 2, 3], [2, 5], [3, 4], [1, 4]]
    g, roles = gr.build_reduction(5, subsets)
    assert (g.n, g.m) == (26, 116)
    assert roles[0] == "U1" and roles[-1] == "X"
    assert gr.validate_splitting(5, subsets, [1, 3, 5], [2, 4])
    root = gr.find_roots(g, limit=1)["roots"][0]
    b1, b2, _ = gr.extract_partition(5, subsets, root)
    assert gr.validate_splitting(5, subsets, b1, b2)


def test_errors():
    with pytest.raises(gr.GraphRootsError):
        gr.parse_edge_list("2 1\n0 5\n")
    with pytest.raises(gr.GraphRootsError):
        gr.Graph(2, [(0, 0)])
    with pytest.raises(gr.GraphRootsError):
        gr.build_reduction(2, [[]])
