"""
Tests for the pycddlib conversions
"""



from fractions import Fraction

from django.test import TestCase

from toric_extensions.backends.cdd.backend_provider import CddPolyhedralBackend


class CddPolyhedralBackendTests(TestCase):
    """
    Go through the H to V and V to H conversions
    """

    def setUp(self):
        """
        Harnessing
        """
        self.provider = CddPolyhedralBackend(MAX_CONVERSION_CACHE_SIZE=8)

    def test_triangle(self):
        """
        x >= 0, y >= 0, x + y <= 1 has three vertices and no rays
        """

        points, rays, lines = self.provider.to_generators(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)], [])
        self.assertEqual(sorted(points), [(0, 0), (0, 1), (1, 0)])
        self.assertEqual(rays, ())
        self.assertEqual(lines, ())

    def test_exact_fractions(self):
        """
        Vertices are exact rationals
        """

        points, __, __ = self.provider.to_generators(1, [((2,), 0), ((-3,), 1)], [])
        self.assertEqual(sorted(points), [(0,), (Fraction(1, 3),)])
        self.assertTrue(all(isinstance(x, Fraction) for point in points for x in point))

    def test_empty(self):
        """
        Infeasible systems give None
        """

        self.assertIsNone(self.provider.to_generators(1, [((1,), -2), ((-1,), 1)], []))
        self.assertTrue(self.provider.is_empty(1, [((1,), -2), ((-1,), 1)], []))

    def test_whole_space(self):
        """
        No constraints at all describe the whole space
        """

        points, rays, lines = self.provider.to_generators(2, [], [])
        self.assertEqual(len(points), 1)
        self.assertEqual(len(lines), 2)
        self.assertEqual(rays, ())

    def test_equations(self):
        """
        A segment from one equation and two inequalities
        """

        points, __, __ = self.provider.to_generators(2, [((1, 0), 0), ((-1, 0), 1)], [((0, 1), 0)])
        self.assertEqual(sorted(points), [(0, 0), (1, 0)])

    def test_to_inequalities(self):
        """
        V to H drops the trivial row and finds equations
        """

        inequalities, equations = self.provider.to_inequalities(2, [(0, 0), (1, 0)], [], [])
        self.assertEqual(len(inequalities), 2)
        self.assertEqual(len(equations), 1)

        inequalities, equations = self.provider.to_inequalities(2, [(0, 0)], [(1, 0), (0, 1)], [])
        self.assertEqual(len(inequalities), 2)
        self.assertEqual(equations, ())

    def test_cache(self):
        """
        The same conversion is answered from the cache
        """

        first = self.provider.to_generators(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)], [])
        second = self.provider.to_generators(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)], [])
        self.assertIs(first, second)

    def test_cone_has_apex(self):
        """
        A homogeneous system is a cone and always contains the origin
        """

        points, rays, lines = self.provider.to_generators(2, [((1, 0), 0), ((0, 1), 0)], [])
        self.assertEqual(points, ((0, 0),))
        self.assertEqual(sorted(rays), [(0, 1), (1, 0)])
        self.assertEqual(lines, ())
        self.assertFalse(self.provider.is_empty(2, [((1, 0), 0), ((0, 1), 0)], []))

    def test_half_plane_cone(self):
        """
        A cone with a line still gets the origin as its point
        """

        points, rays, lines = self.provider.to_generators(2, [((1, 0), 0)], [])
        self.assertEqual(points, ((0, 0),))
        self.assertEqual(len(rays), 1)
        self.assertEqual(len(lines), 1)

    def test_zero_cone(self):
        """
        x = 0, y = 0 is the origin alone
        """

        points, rays, lines = self.provider.to_generators(2, [], [((1, 0), 0), ((0, 1), 0)])
        self.assertEqual(points, ((0, 0),))
        self.assertEqual(rays, ())
        self.assertEqual(lines, ())
