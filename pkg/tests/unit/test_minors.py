import pytest

from app.generators import complete, subdivided_k33, toroidal_grid
from app.graph import Graph
from app.minors import (
    InvalidDecompositionError,
    InvalidModelError,
    MinorModel,
    StarDecomposition,
    complete_bipartite,
    contract,
    find_canonical_k33,
    has_k_t3_depth1_minor,
    is_locally_embeddable,
    k_t3,
    nonplanar_blocks,
    validate_model,
)
from app.oracle import naive_depth1_minor
from tests.fixtures import grid_graph, k33, k33_with_pendant, path_graph, wheel


class TestContraction:
    def test_star_collapses_into_its_center(self):
        contracted = contract(path_graph(4), StarDecomposition({2: [3]}))

        assert contracted.vertices == (1, 2, 4)
        assert contracted.edges == ((1, 2), (2, 4))

    def test_parallel_edges_collapse(self):
        triangle = Graph.from_edges([(1, 2), (2, 3), (1, 3)])

        contracted = contract(triangle, StarDecomposition({1: [2]}))

        assert contracted.edges == ((1, 3),)

    def test_leaf_must_touch_its_center(self):
        with pytest.raises(InvalidDecompositionError):
            contract(path_graph(4), StarDecomposition({1: [3]}))

    def test_stars_must_be_disjoint(self):
        with pytest.raises(InvalidDecompositionError):
            StarDecomposition({2: [3], 4: [3]}).validate(path_graph(4))

    def test_decomposition_accessors(self):
        dec = StarDecomposition({5: [4, 6], 1: []})

        assert dec.centers == (1, 5)
        assert dec.vertices() == {1, 4, 5, 6}
        assert dec.owner() == {1: 1, 4: 5, 5: 5, 6: 5}
        assert dec.to_dict() == {1: [], 5: [4, 6]}


class TestTargets:
    def test_k_t3_shape(self):
        target = k_t3(4)

        assert target.vertices == tuple(range(1, 8))
        assert target.size() == 12
        assert target.neighbors_of(1) == (4, 5, 6, 7)

    def test_complete_bipartite(self):
        assert complete_bipartite(2, 3).size() == 6


class TestDepthOneMinors:
    def test_k33_contains_itself(self):
        g = k33()

        model = has_k_t3_depth1_minor(g, 3)

        assert model is not None
        validate_model(g, model)
        assert model.vertices == frozenset(g.vertices)
        assert model.subgraph(g).size() == 9

    def test_subdivided_k33_is_a_depth_one_minor(self):
        g = subdivided_k33(1)

        model = has_k_t3_depth1_minor(g, 3)

        assert model is not None
        validate_model(g, model)

    @pytest.mark.parametrize(
        "g",
        [path_graph(8), grid_graph(5, 5), wheel(7), complete(5)],
        ids=["path", "grid", "wheel", "k5"],
    )
    def test_graphs_without_k33_depth_one_minor(self, g):
        assert has_k_t3_depth1_minor(g, 3) is None
        assert is_locally_embeddable(g, 3)

    def test_k_t3_needs_enough_wide_stars(self):
        g = complete_bipartite(3, 4)

        assert has_k_t3_depth1_minor(g, 4) is not None
        assert has_k_t3_depth1_minor(g, 5) is None

    @pytest.mark.parametrize(
        "g, t",
        [
            (k33(), 3),
            (complete(6), 3),
            (complete(5), 3),
            (wheel(6), 3),
            (Graph.from_edges([(i, i % 6 + 1) for i in range(1, 7)]), 3),
            (complete_bipartite(3, 4), 4),
        ],
        ids=["k33", "k6", "k5", "wheel", "c6", "k34"],
    )
    def test_agrees_with_enumeration(self, g, t):
        assert (has_k_t3_depth1_minor(g, t) is not None) == naive_depth1_minor(g, t)

    def test_torus_grid_has_no_k73(self):
        assert has_k_t3_depth1_minor(toroidal_grid(4, 4), 7) is None

    def test_t_below_three_is_rejected(self):
        with pytest.raises(ValueError):
            has_k_t3_depth1_minor(k33(), 2)

    def test_tampered_model_is_rejected(self):
        g = k33()
        model = has_k_t3_depth1_minor(g, 3)
        first_edge = next(iter(model.edge_witnesses))
        witnesses = dict(model.edge_witnesses)
        witnesses[first_edge] = (1, 2)
        broken = MinorModel(model.target, model.decomposition, model.branch, witnesses)

        with pytest.raises(InvalidModelError):
            validate_model(g, broken)


class TestNonplanarBlocks:
    def test_planar_graphs_have_none(self):
        assert nonplanar_blocks(grid_graph(4, 4), 6) == []

    def test_block_of_k33_with_pendant(self):
        blocks = nonplanar_blocks(k33_with_pendant(), 6)

        assert [block.vertices for block in blocks] == [(1, 2, 3, 4, 5, 6)]
        assert nonplanar_blocks(k33_with_pendant(), 6, containing=7) == []

    def test_torus_grid_is_one_nonplanar_block(self):
        blocks = nonplanar_blocks(toroidal_grid(4, 4), 6)

        assert len(blocks) == 1
        assert blocks[0].order() == 16


class TestCanonicalK33:
    def test_witness_is_the_k33(self):
        g = k33_with_pendant()

        witness = find_canonical_k33(g, 1)

        assert witness == k33()

    def test_vertices_outside_every_nonplanar_block_have_none(self):
        assert find_canonical_k33(k33_with_pendant(), 7) is None

    def test_planar_graphs_have_none(self):
        assert find_canonical_k33(grid_graph(4, 4), 6) is None

    def test_every_member_finds_the_same_witness(self):
        g = k33_with_pendant()

        witnesses = {find_canonical_k33(g, v) for v in range(1, 7)}

        assert witnesses == {k33()}

    def test_twice_subdivided_k33_needs_every_vertex(self):
        witness = find_canonical_k33(subdivided_k33(2), 1)

        assert witness is not None
        assert witness.order() == 24
        assert witness == subdivided_k33(2)

    @pytest.mark.parametrize("v", [1, 6, 11])
    def test_torus_witness_is_deletion_minimal(self, v):
        g = toroidal_grid(4, 4)

        witness = find_canonical_k33(g, v)

        assert witness is not None
        assert v in witness
        assert has_k_t3_depth1_minor(witness, 3) is not None
        for x in witness.vertices:
            assert has_k_t3_depth1_minor(witness.without([x]), 3) is None

    def test_torus_witnesses_share_one_size(self):
        g = toroidal_grid(4, 4)

        sizes = {find_canonical_k33(g, v).order() for v in g.vertices}

        assert len(sizes) == 1
