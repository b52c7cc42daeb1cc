"""
Unit tests for normal fans, refinements and divisors of polyhedra
"""



from fractions import Fraction

import ddt
from django.test import TestCase

from toric_extensions.exceptions import FanSupportMismatch, IncompatiblePolyhedronError, NotFullDimensionalError
from toric_extensions.fans import (
    cartier_data,
    common_refinement,
    divisor_of,
    is_ample,
    is_compatible,
    normal_cones,
    normal_fan,
    refine_by_polyhedra,
    refines,
    section_in_chart,
)
from toric_extensions.geometry.cone import Cone
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.polyhedron import Polyhedron, hull
from toric_extensions.tests.utils import cremona_fan, delta_f1, f1_fan, f1_pair, poly

SQUARE = ((0, 0), (1, 0), (0, 1), (1, 1))


@ddt.ddt
class FanDictionaryTests(TestCase):
    """
    Go through fans.py
    """

    def test_normal_fan_of_square(self):
        """
        The unit square has the four quadrants as normal fan
        """

        f = normal_fan(poly(*SQUARE))
        self.assertEqual(list(f.rays), [(1, 0), (0, 1), (-1, 0), (0, -1)])
        self.assertEqual(len(f.maximal_cones), 4)
        self.assertEqual(len(normal_cones(poly(*SQUARE))), 4)

    def test_normal_fan_of_hirzebruch_polytope(self):
        """
        Delta_(1,1) is ample on the first Hirzebruch surface
        """

        self.assertEqual(normal_fan(delta_f1(1, 1)), f1_fan())
        self.assertTrue(is_ample(delta_f1(1, 1), f1_fan()))
        self.assertFalse(is_ample(delta_f1(1, 0), f1_fan()))

    def test_normal_fan_needs_full_dimension(self):
        """
        Segments and strips have no normal fan
        """

        with self.assertRaises(NotFullDimensionalError):
            normal_fan(poly((0, 0), (1, 0)))
        with self.assertRaises(NotFullDimensionalError):
            normal_fan(hull([(0, 0), (0, 1)], lines=[(1, 0)]))

    def test_refines(self):
        """
        The hexagon fan refines the quadrants, not the other way round
        """

        square_fan = normal_fan(poly(*SQUARE))
        self.assertTrue(refines(cremona_fan(), square_fan))
        self.assertFalse(refines(square_fan, cremona_fan()))
        self.assertTrue(refines(f1_fan(), f1_fan()))

    def test_common_refinement(self):
        """
        F1 and the quadrants meet in a five ray fan
        """

        square_fan = normal_fan(poly(*SQUARE))
        both = common_refinement(f1_fan(), square_fan)
        both.validate()
        self.assertEqual(list(both.rays), [(1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1)])
        self.assertEqual(len(both.maximal_cones), 5)
        self.assertTrue(refines(both, f1_fan()))
        self.assertTrue(refines(both, square_fan))
        self.assertEqual(refine_by_polyhedra(f1_fan(), [poly(*SQUARE)]), both)

    def test_common_refinement_support_mismatch(self):
        """
        Fans with different supports cannot be refined together
        """

        quadrant = Fan.from_indices([(1, 0), (0, 1)], [[0, 1]])
        with self.assertRaises(FanSupportMismatch):
            common_refinement(f1_fan(), quadrant)

    def test_refine_by_lower_dimensional(self):
        """
        A compatible segment leaves the fan alone, a skew one splits a cone
        """

        self.assertEqual(refine_by_polyhedra(f1_fan(), [delta_f1(1, 0)]), f1_fan())
        refined = refine_by_polyhedra(f1_fan(), [poly((0, 0), (1, 1))])
        self.assertIn((1, -1), refined.rays)
        self.assertTrue(is_compatible(poly((0, 0), (1, 1)), refined))

    @ddt.data(
        ((1, 0), [0, 0, 1, 0]),
        ((0, 1), [0, 0, 1, 1]),
        ((1, 1), [0, 0, 2, 1]),
        ((0, 2), [0, 0, 2, 2]),
    )
    @ddt.unpack
    def test_hirzebruch_divisors(self, degree, expected):
        """
        Delta_(i,j) has divisor (0, 0, i + j, j)
        """

        divisor = divisor_of(delta_f1(*degree), f1_fan())
        self.assertEqual(divisor.coefficients, expected)
        self.assertEqual([tuple(ray) for ray in divisor.rays], [(1, 0), (0, 1), (-1, -1), (0, -1)])

    def test_translated_divisor(self):
        """
        Moving a polytope by a lattice vector changes the divisor by a principal one
        """

        plus, __ = f1_pair()
        self.assertEqual(divisor_of(plus, f1_fan()).coefficients, [0, -1, 2, 1])

    def test_incompatible(self):
        """
        The square is not compatible with F1
        """

        square = poly(*SQUARE)
        self.assertFalse(is_compatible(square, f1_fan()))
        with self.assertRaises(IncompatiblePolyhedronError):
            divisor_of(square, f1_fan())
        with self.assertRaises(IncompatiblePolyhedronError):
            cartier_data(square, f1_fan())

    def test_non_lattice_polytope(self):
        """
        Half-integral vertices give no integral divisor on Z^2
        """

        with self.assertRaises(IncompatiblePolyhedronError):
            divisor_of(poly((0, 0), (Fraction(1, 2), 0)), f1_fan())

    def test_unbounded(self):
        """
        A shifted quadrant on the fan of the quadrant
        """

        f = Fan.from_indices([(1, 0), (0, 1)], [[0, 1]])
        quadrant = hull([(1, 2)], rays=[(1, 0), (0, 1)])
        self.assertTrue(is_compatible(quadrant, f))
        self.assertEqual(divisor_of(quadrant, f).coefficients, [-1, -2])
        self.assertFalse(is_compatible(quadrant, f1_fan()))

    def test_empty_is_compatible(self):
        """
        The empty polyhedron is compatible with every fan
        """

        self.assertTrue(is_compatible(Polyhedron.empty(2), f1_fan()))

    def test_cartier_data(self):
        """
        The minimizing vertex of Delta_(1,1) per maximal cone
        """

        f = f1_fan()
        data = cartier_data(delta_f1(1, 1), f)
        expected = {(0, 1): (0, 0), (0, 3): (0, 1), (1, 2): (2, 0), (2, 3): (1, 1)}
        for cone in f.maximal_cones:
            self.assertEqual(data.point_for(cone), expected[tuple(f.cone_indices(cone))])

    def test_section_in_chart(self):
        """
        Delta_(1,1) plus the dual of the first quadrant is the first quadrant
        """

        cone = Cone([(1, 0), (0, 1)])
        self.assertTrue(section_in_chart(delta_f1(1, 1), cone, (5, 5)))
        self.assertFalse(section_in_chart(delta_f1(1, 1), cone, (-1, 0)))
