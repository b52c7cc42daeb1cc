"""
Unit tests for arrangements, components of differences and their convex unions
"""



from fractions import Fraction

from django.test import TestCase
from mock import patch

from toric_extensions.exceptions import TruncationError, UnionNotConvexError
from toric_extensions.geometry.polyhedron import Polyhedron, hull
from toric_extensions.tests.utils import (
    cremona_pair,
    delta_f1,
    f1_pair,
    flood_fill_count,
    poly,
    random_pairs,
    twisted_pair,
)
from toric_extensions.topology import (
    arrangement_cells,
    chambers,
    components,
    default_half_space,
    nabla_of,
    sigma_family_from_components,
    truncate,
    union_is_convex,
)

HALF = Fraction(1, 2)


class ArrangementTests(TestCase):
    """
    Cutting polyhedra along hyperplanes
    """

    def test_chambers(self):
        """
        The unit square cut along both diagonals gives four triangles
        """

        square = poly((0, 0), (1, 0), (0, 1), (1, 1))
        pieces = chambers(square, [((1, -1), 0), ((1, 1), -1)])
        self.assertEqual(len(pieces), 4)
        self.assertEqual(sum(piece.volume() for piece in pieces), 1)
        # a hyperplane missing the interior changes nothing
        self.assertEqual(chambers(square, [((1, 0), 5)]), [square])

    def test_arrangement_cells(self):
        """
        The triangle of F1 cut by the segment at height one
        """

        plus, minus = f1_pair()
        complex_ = arrangement_cells(minus, plus)
        inside = [cell for cell in complex_.cells if cell.inside]
        # the segment and its two end points
        self.assertEqual(len(inside), 3)
        self.assertEqual(sorted(cell.dim for cell in inside), [0, 0, 1])
        # x = 1 also cuts the lower part
        top = [cell for cell in complex_.cells if cell.dim == 2]
        self.assertEqual(len(top), 3)
        for low, high in complex_.incidence:
            self.assertEqual(complex_.cells[high].dim, complex_.cells[low].dim + 1)

    def test_arrangement_without_plus(self):
        """
        An empty subtrahend leaves the faces of minus
        """

        complex_ = arrangement_cells(delta_f1(0, 2), Polyhedron.empty(2))
        self.assertEqual(len(complex_.cells), 7)
        self.assertEqual(len(complex_.outside_cells()), 7)


class ComponentTests(TestCase):
    """
    Connected components of minus \\ plus
    """

    def test_hirzebruch_components(self):
        """
        The segment cuts the triangle into a lower and an upper piece
        """

        plus, minus = f1_pair()
        decomposition = components(minus, plus)
        self.assertEqual(decomposition.count, 2)
        self.assertFalse(decomposition.truncated)
        self.assertEqual(decomposition.core, plus)
        lower, upper = decomposition.components
        self.assertEqual(lower.closure, delta_f1(1, 1))
        self.assertEqual(upper.closure, delta_f1(0, 1).translate((0, 1)))

        nablas = sigma_family_from_components(decomposition)
        self.assertEqual(nablas, [delta_f1(1, 1), delta_f1(0, 1).translate((0, 1))])

    def test_cremona_components(self):
        """
        The inner triangle touches every edge: three components, ordered by their
        smallest vertex
        """

        plus, minus = cremona_pair()
        decomposition = components(minus, plus)
        self.assertEqual(decomposition.count, 3)
        self.assertEqual(
            [component.closure.vertices[0] for component in decomposition.components],
            [(-1, -1), (0, -1), (0, 0)],
        )
        nablas = sigma_family_from_components(decomposition)
        self.assertEqual(nablas[0], poly((-1, -1), (0, -1), (1, 0), (0, 0)))
        self.assertEqual(nablas[1], poly((0, -1), (1, -1), (1, 0), (0, 0)))
        self.assertEqual(nablas[2], poly((0, 0), (1, 0), (1, 1), (0, -1)))

    def test_shared_smallest_vertex(self):
        """
        The diagonal splits the square into two triangles through (0, 0); the
        rest of the sorted vertices decides the order
        """

        decomposition = components(poly((0, 0), (2, 0), (0, 2), (2, 2)), poly((0, 0), (2, 2)))
        self.assertEqual(decomposition.count, 2)
        self.assertEqual(
            [component.closure for component in decomposition.components],
            [poly((0, 0), (0, 2), (2, 2)), poly((0, 0), (2, 0), (2, 2))],
        )

    def test_general_position_components(self):
        """
        A segment sticking out of the triangle meets it in a half-integral core
        """

        plus, minus = twisted_pair()
        decomposition = components(minus, plus)
        self.assertEqual(decomposition.count, 2)
        self.assertEqual(decomposition.core, poly((0, 0), (HALF, 0)))
        lower, upper = sigma_family_from_components(decomposition)
        self.assertEqual(lower, poly((0, -1), (1, -1), (HALF, 0), (0, 0)))
        self.assertEqual(upper, poly((0, 0), (HALF, 0), (0, 1)))

    def test_no_and_one_component(self):
        """
        A covering subtrahend leaves nothing, a disjoint one leaves minus whole
        """

        minus = delta_f1(1, 1)
        self.assertEqual(components(minus, minus.scale(2).translate((-1, -1))).count, 0)
        self.assertEqual(components(minus, minus.translate((10, 10))).count, 1)
        self.assertEqual(components(minus, Polyhedron.empty(2)).count, 1)
        self.assertTrue(components(minus, minus.translate((10, 10))).core.is_empty)

    def test_matches_grid_flood_fill(self):
        """
        Component counts agree with an independent flood fill on a fine grid
        """

        for minus, plus in random_pairs(3, 50):
            self.assertEqual(
                components(minus, plus).count,
                flood_fill_count(minus, plus),
                'mismatch for minus={minus} plus={plus}'.format(minus=minus, plus=plus),
            )


class TruncationTests(TestCase):
    """
    Unbounded inputs are cut down by a common half-space first
    """

    def setUp(self):
        """
        Two quadrants, one inside the other
        """

        self.minus = hull([(0, 0)], rays=[(1, 0), (0, 1)])
        self.plus = hull([(1, 1)], rays=[(1, 0), (0, 1)])

    def test_default_half_space(self):
        """
        The normal sums the dual tail generators, the bound clears every vertex
        """

        normal, bound = default_half_space([self.minus, self.plus])
        self.assertEqual(normal, (1, 1))
        self.assertEqual(bound, 3)

    def test_truncate(self):
        """
        The cut keeps every vertex and bounds the polyhedron
        """

        cut = truncate(self.minus, ((1, 1), 3))
        self.assertTrue(cut.is_bounded)
        self.assertEqual(cut, poly((0, 0), (3, 0), (0, 3)))
        self.assertEqual(truncate(delta_f1(1, 1), ((1, 1), 0)), delta_f1(1, 1))

        with self.assertRaises(TruncationError):
            truncate(self.plus, ((1, 1), 1))
        with self.assertRaises(TruncationError):
            truncate(self.minus, ((1, -1), 3))

    def test_unbounded_components(self):
        """
        The L-shaped difference of the quadrants is connected
        """

        decomposition = components(self.minus, self.plus)
        self.assertTrue(decomposition.truncated)
        self.assertEqual(decomposition.count, 1)

    def test_truncation_does_not_change_the_count(self):
        """
        Doubling the truncation margin gives the same components
        """

        with patch('toric_extensions.const.TOREXT_TRUNCATION_MARGIN', 2):
            self.assertEqual(components(self.minus, self.plus).count, 1)

    def test_different_tail_cones(self):
        """
        The components of unbounded inputs need equal tail cones
        """

        with self.assertRaises(TruncationError):
            components(self.minus, hull([(0, 0)], rays=[(1, 1)]))


class ConvexUnionTests(TestCase):
    """
    nabla_of and union_is_convex
    """

    def test_union_is_convex(self):
        """
        Neighbouring squares form a rectangle, distant ones do not
        """

        square = poly((0, 0), (1, 0), (0, 1), (1, 1))
        self.assertTrue(union_is_convex([square, square.translate((1, 0))]))
        self.assertFalse(union_is_convex([square, square.translate((2, 0))]))
        self.assertFalse(union_is_convex([square, square.translate((1, 1))]))
        self.assertTrue(union_is_convex([]))

    def test_nabla_not_convex(self):
        """
        A gap between component and core is detected
        """

        square = poly((0, 0), (1, 0), (0, 1), (1, 1))
        with self.assertRaises(UnionNotConvexError):
            nabla_of(square, square.translate((2, 0)))
        self.assertEqual(nabla_of(square, square.translate((1, 0))), poly((0, 0), (2, 0), (0, 1), (2, 1)))
