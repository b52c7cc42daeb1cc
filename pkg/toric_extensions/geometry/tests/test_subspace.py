"""
Unit tests for subspaces and filtrations
"""



from django.test import TestCase

from toric_extensions.geometry.subspace import Filtration, Subspace


class SubspaceTests(TestCase):
    """
    Go through the Subspace class
    """

    def test_canonical_basis(self):
        """
        Equal spans compare equal whatever the spanning vectors
        """

        self.assertEqual(Subspace(3, [(1, 1, 0), (0, 1, 0)]), Subspace.coordinate(3, [0, 1]))
        self.assertEqual(Subspace(2, [(2, 2)]), Subspace(2, [(-1, -1)]))
        self.assertEqual(Subspace(2, [(0, 0)]), Subspace.zero(2))
        self.assertTrue(Subspace(2, [(1, 0), (1, 1)]).is_full)

    def test_sum_and_meet(self):
        """
        Sum and intersection of two lines in the plane and two planes in space
        """

        first, second = Subspace(2, [(1, 0)]), Subspace(2, [(1, 1)])
        self.assertEqual(first + second, Subspace.full(2))
        self.assertTrue((first & second).is_zero)
        self.assertEqual(first & Subspace.full(2), first)

        xy, yz = Subspace.coordinate(3, [0, 1]), Subspace.coordinate(3, [1, 2])
        self.assertEqual(xy & yz, Subspace.coordinate(3, [1]))

    def test_contains_and_complement(self):
        """
        Membership and orthogonal complements
        """

        line = Subspace(2, [(1, -1)])
        self.assertTrue(line.contains((-3, 3)))
        self.assertFalse(line.contains((1, 0)))
        self.assertEqual(line.orthogonal_complement(), Subspace(2, [(1, 1)]))
        self.assertEqual(Subspace.zero(2).orthogonal_complement(), Subspace.full(2))
        self.assertTrue(Subspace.full(2).contains_subspace(line))

    def test_direct_sum_and_image(self):
        """
        Block placement and linear images
        """

        total = Subspace(1, [(1,)]).direct_sum(Subspace.zero(2))
        self.assertEqual(total, Subspace.coordinate(3, [0]))
        image = Subspace.full(2).image([(1, 1)], 1)
        self.assertEqual(image, Subspace.full(1))
        self.assertTrue(Subspace(2, [(1, -1)]).image([(1, 1)], 1).is_zero)


class FiltrationTests(TestCase):
    """
    Go through the Filtration class
    """

    def _tangent_like(self):
        return Filtration(2, {
            (1, 0): (0, [Subspace(2, [(1, 0)])]),
            (0, 1): (0, [Subspace(2, [(0, 1)])]),
        })

    def test_levels(self):
        """
        Whole space up to lower, the steps, then zero
        """

        filtration = self._tangent_like()
        self.assertTrue(filtration.level((1, 0), -5).is_full)
        self.assertTrue(filtration.level((1, 0), 0).is_full)
        self.assertEqual(filtration.level((1, 0), 1), Subspace(2, [(1, 0)]))
        self.assertTrue(filtration.level((1, 0), 2).is_zero)
        self.assertEqual(filtration.zero_from((1, 0)), 2)
        self.assertEqual(filtration.level_range(), (0, 2))
        self.assertEqual(filtration.dimension_profile(range(0, 3)), {(1, 0): [2, 1, 0], (0, 1): [2, 1, 0]})

    def test_trimming(self):
        """
        Leading full steps raise lower, trailing zero steps are dropped
        """

        trimmed = Filtration(1, {(1,): (3, [Subspace.full(1), Subspace.full(1), Subspace.zero(1)])})
        self.assertEqual(trimmed.chain((1,)), (5, ()))
        self.assertEqual(trimmed, Filtration(1, {(1,): (5, [])}))

    def test_not_decreasing(self):
        """
        Steps must shrink
        """

        with self.assertRaises(ValueError):
            Filtration(2, {(1, 0): (0, [Subspace(2, [(1, 0)]), Subspace(2, [(0, 1)])])})

    def test_from_levels(self):
        """
        Sampling a level function
        """

        def level(ray, value):
            return Subspace.full(1) if value <= ray[0] else Subspace.zero(1)

        filtration = Filtration.from_levels(1, [(2,), (-1,)], level, -3, 3)
        self.assertEqual(filtration.lower((2,)), 2)
        self.assertEqual(filtration.lower((-1,)), -1)
        self.assertEqual(len(filtration.subspaces()), 2)
