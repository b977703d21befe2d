from itertools import combinations

import pytest

from analysis.complex_core import (
    Simplex,
    SimplicialComplex,
    VertexUniverse,
    boundary,
    canonicalize,
    closure_of,
    f_vector,
    f_vector_frame,
    faces,
    facets_paper,
    maximal_facets,
    maximal_simplices,
    p_skeleton,
    register_vertex,
)
from analysis.errors import (
    DuplicateVertexError,
    EmptySimplexError,
    SimplexSizeError,
    UnknownVertexError,
)


def power_set(vertices):
    return {
        combo
        for size in range(1, len(vertices) + 1)
        for combo in combinations(sorted(vertices), size)
    }


class TestVertexUniverse:

    def test_first_registration_gets_index_zero(self):
        universe = VertexUniverse()
        assert register_vertex(universe, 'v0').index == 0
        assert len(universe) == 1

    def test_sequential_indices(self):
        universe = VertexUniverse()
        indices = [register_vertex(universe, v).index for v in ('v0', 'v1', 'v2')]
        assert indices == [0, 1, 2]
        assert universe.ids == ('v0', 'v1', 'v2')

    def test_duplicate_id_rejected(self):
        universe = VertexUniverse(['v0'])
        with pytest.raises(DuplicateVertexError) as excinfo:
            universe.register('v0')
        assert excinfo.value.vertex_id == 'v0'

    def test_id_with_whitespace_rejected(self):
        with pytest.raises(ValueError):
            VertexUniverse(['v 0'])

    def test_equality_is_ordered_ids(self):
        assert VertexUniverse(['a', 'b']) == VertexUniverse(['a', 'b'])
        assert VertexUniverse(['a', 'b']) != VertexUniverse(['b', 'a'])


class TestCanonicalize:

    @pytest.fixture
    def universe(self):
        return VertexUniverse(['v0', 'v1', 'v2'])

    def test_dedup_and_sort(self, universe):
        simplex = canonicalize(universe, ['v2', 'v0', 'v2'])
        assert simplex == (0, 2)
        assert simplex.dimension == 1

    def test_singleton(self, universe):
        simplex = canonicalize(universe, ['v0'])
        assert simplex == (0,)
        assert simplex.dimension == 0

    def test_triangle_dimension(self, universe):
        assert canonicalize(universe, ['v0', 'v1', 'v2']).dimension == 2

    def test_empty_list_rejected(self, universe):
        with pytest.raises(EmptySimplexError):
            canonicalize(universe, [])

    def test_unknown_id_rejected(self, universe):
        with pytest.raises(UnknownVertexError):
            canonicalize(universe, ['v0', 'v9'])

    def test_simplex_requires_strictly_increasing(self):
        with pytest.raises(ValueError):
            Simplex([2, 1])
        with pytest.raises(ValueError):
            Simplex([1, 1])


class TestInsertClosed:

    def test_worked_example_has_seven_members(self, worked_complex):
        assert set(worked_complex.labels()) == {
            ('v_i',), ('v_j',), ('v_k',),
            ('v_i', 'v_j'), ('v_i', 'v_k'), ('v_j', 'v_k'),
            ('v_i', 'v_j', 'v_k'),
        }
        assert len(worked_complex) == 7

    def test_vertex_only(self):
        complex_ = SimplicialComplex(VertexUniverse(['v0'])).insert_closed((0,))
        assert len(complex_) == 1
        assert complex_.dimension == 0

    def test_four_simplex_matches_power_set(self):
        universe = VertexUniverse([f"v{i}" for i in range(7)])
        complex_ = SimplicialComplex(universe).insert_closed((1, 2, 4, 5, 6))
        assert complex_.member_set() == power_set((1, 2, 4, 5, 6))

    def test_idempotent(self, ijk_universe):
        complex_ = SimplicialComplex(ijk_universe)
        complex_.insert_closed((0, 1, 2))
        complex_.insert_closed((0, 1, 2))
        complex_.insert_closed((0, 1))
        assert len(complex_) == 7

    def test_unsorted_sequence_is_canonicalized(self, ijk_universe):
        complex_ = SimplicialComplex(ijk_universe).insert_closed([2, 0])
        assert (0, 2) in complex_

    def test_size_guard(self):
        universe = VertexUniverse(['a', 'b', 'c', 'd'])
        complex_ = SimplicialComplex(universe, simplex_cap=3)
        with pytest.raises(SimplexSizeError):
            complex_.insert_closed((0, 1, 2, 3))
        assert len(complex_) == 0

    def test_index_outside_universe(self, ijk_universe):
        with pytest.raises(UnknownVertexError):
            SimplicialComplex(ijk_universe).insert_closed((0, 3))

    def test_frozen_complex_rejects_insert(self, worked_complex):
        with pytest.raises(RuntimeError):
            worked_complex.insert_closed((0,))

    def test_copy_is_mutable_and_independent(self):
        universe = VertexUniverse(['a', 'b', 'c'])
        original = closure_of(universe, [(0, 1)]).freeze()
        clone = original.copy()
        assert clone == original
        clone.insert_closed((1, 2))
        assert len(clone) == 5
        assert len(original) == 3

    def test_closure_of_two_edges(self):
        universe = VertexUniverse(['a', 'b', 'c'])
        complex_ = closure_of(universe, [(0, 1), (1, 2)])
        assert f_vector(complex_) == (3, 2)

    def test_members_are_lexicographic(self, worked_complex):
        assert worked_complex.members() == [
            (0,), (0, 1), (0, 1, 2), (0, 2), (1,), (1, 2), (2,),
        ]


class TestFaces:

    @pytest.mark.parametrize('simplex, expected', [
        ((0, 1), 3),
        ((0, 1, 2), 7),
        ((0, 1, 2, 3, 4), 31),
    ])
    def test_face_counts(self, simplex, expected):
        result = faces(Simplex(simplex))
        assert len(result) == expected
        assert result == sorted(result)
        assert Simplex(simplex) in result


class TestBoundary:

    def test_worked_example(self, worked_complex):
        result = boundary(worked_complex)
        assert len(result) == 6
        assert (0, 1, 2) not in result

    def test_vertex_only_complex_is_empty(self):
        universe = VertexUniverse(['a', 'b'])
        complex_ = closure_of(universe, [(0,), (1,)])
        assert boundary(complex_) == []

    def test_full_five_vertex_complex(self, full_five):
        result = boundary(full_five)
        assert len(result) == 30
        assert (0, 1, 2, 3, 4) not in result


class TestFacets:

    def test_codimension_one_facets_of_worked_example(self, worked_complex):
        selection = facets_paper(worked_complex)
        assert selection.definition == 'codimension-1'
        assert list(selection) == [(0, 1), (0, 2), (1, 2)]
        assert selection.warning is None

    def test_codimension_one_facets_of_full_complex(self, full_five):
        selection = facets_paper(full_five)
        assert len(selection) == 5
        assert all(s.dimension == 3 for s in selection)

    def test_codimension_one_facets_of_graph_are_vertices(self):
        universe = VertexUniverse(['a', 'b', 'c'])
        complex_ = closure_of(universe, [(0, 1), (1, 2)])
        assert list(facets_paper(complex_)) == [(0,), (1,), (2,)]

    def test_dimension_zero_warns(self):
        complex_ = closure_of(VertexUniverse(['a']), [(0,)])
        selection = facets_paper(complex_)
        assert len(selection) == 0
        assert selection.warning

    def test_maximal_of_worked_example(self, worked_complex):
        assert maximal_simplices(worked_complex) == [(0, 1, 2)]

    def test_maximal_of_disjoint_edges(self):
        universe = VertexUniverse(['a', 'b', 'c', 'd'])
        complex_ = closure_of(universe, [(0, 1), (2, 3)])
        assert maximal_simplices(complex_) == [(0, 1), (2, 3)]

    def test_maximal_of_full_complex(self, full_five):
        selection = maximal_facets(full_five)
        assert selection.definition == 'maximal'
        assert list(selection) == [(0, 1, 2, 3, 4)]


class TestSkeleton:

    def test_one_skeleton_of_worked_example(self, worked_complex):
        assert len(p_skeleton(worked_complex, 1)) == 6

    def test_zero_skeleton_is_vertex_set(self, full_five):
        skeleton = p_skeleton(full_five, 0)
        assert skeleton.members() == full_five.vertices()

    def test_one_skeleton_of_full_complex(self, full_five):
        assert len(p_skeleton(full_five, 1)) == 15

    def test_large_p_returns_equal_complex(self, worked_complex):
        assert p_skeleton(worked_complex, 5) == worked_complex

    def test_negative_p_rejected(self, worked_complex):
        with pytest.raises(ValueError):
            p_skeleton(worked_complex, -1)

    def test_skeleton_composition(self, full_five):
        for p in range(5):
            for q in range(5):
                assert p_skeleton(p_skeleton(full_five, p), q) == p_skeleton(full_five, min(p, q))


class TestFVector:

    def test_worked_example(self, worked_complex):
        assert f_vector(worked_complex) == (3, 3, 1)

    def test_full_complex(self, full_five):
        assert f_vector(full_five) == (5, 10, 10, 5, 1)
        assert sum(f_vector(full_five)) == len(full_five)

    def test_empty_complex(self):
        complex_ = SimplicialComplex(VertexUniverse())
        assert f_vector(complex_) == ()
        assert complex_.dimension == -1

    def test_skeleton_truncates_prefix(self, full_five):
        assert f_vector(p_skeleton(full_five, 2)) == (5, 10, 10)

    def test_frame(self, full_five):
        frame = f_vector_frame(full_five)
        assert list(frame.columns) == ['dimension', 'count', 'order_class']
        assert frame['count'].tolist() == [5, 10, 10, 5, 1]
        assert frame['order_class'].tolist() == ['lower', 'lower', 'higher', 'higher', 'higher']
