"""
Unit tests for polyhedral functors, Koszul complexes and exactness checks
"""



from fractions import Fraction

from django.test import TestCase
from mock import patch

from toric_extensions.exceptions import ConeNotInFanError, ExactnessError, SigmaFamilyError
from toric_extensions.extensions import long_koszul_sequence
from toric_extensions.fans import normal_fan
from toric_extensions.geometry.cone import Cone
from toric_extensions.geometry.polyhedron import Polyhedron, hull
from toric_extensions.koszul import (
    KoszulComplex,
    PolyFunctor,
    evaluation_subcomplex,
    is_exact,
    koszul_complex,
    localize,
    subsets,
    validate_sigma_family,
    verify_exactness_everywhere,
)
from toric_extensions.tests.utils import (
    cremona_fan,
    cremona_pair,
    delta_f1,
    f1_fan,
    f1_names,
    poly,
    projective_line_fan,
    projective_line_functor,
)

SQUARE = ((0, 0), (1, 0), (0, 1), (1, 1))


def f1_family():
    return [delta_f1(1, 1), delta_f1(0, 1).translate((0, 1))]


def cremona_family():
    return [
        poly((-1, -1), (0, -1), (1, 0), (0, 0)),
        poly((0, -1), (1, -1), (1, 0), (0, 0)),
        poly((0, 0), (1, 0), (1, 1), (0, -1)),
    ]


class FunctorTests(TestCase):
    """
    Building functors from families and from explicit values
    """

    def test_subsets(self):
        """
        By size, then lexicographically
        """

        self.assertEqual(subsets(2), [(), (0,), (1,), (0, 1)])
        self.assertEqual(len(subsets(4)), 16)

    def test_family_values(self):
        """
        The union at the empty subset, intersections elsewhere
        """

        functor = validate_sigma_family(f1_family(), f1_fan())
        self.assertEqual(functor.value(()), delta_f1(0, 2))
        self.assertEqual(functor.value((1, 0)), poly((0, 1), (1, 1)))
        self.assertEqual(functor.dimension, 2)

    def test_union_not_convex(self):
        """
        Distant squares have no convex union
        """

        square = poly(*SQUARE)
        with self.assertRaises(SigmaFamilyError) as context:
            validate_sigma_family([square, square.translate((3, 0))], normal_fan(square))
        self.assertEqual(context.exception.subset, ())

    def test_member_not_compatible(self):
        """
        The halves of the square are not compatible with the quadrants
        """

        square_fan = normal_fan(poly(*SQUARE))
        halves = [poly((0, 0), (1, 0), (0, 1)), poly((1, 0), (0, 1), (1, 1))]
        with self.assertRaises(SigmaFamilyError) as context:
            validate_sigma_family(halves, square_fan)
        self.assertEqual(context.exception.subset, (0,))

    def test_empty_family(self):
        """
        A family needs members
        """

        with self.assertRaises(SigmaFamilyError):
            validate_sigma_family([], f1_fan())

    def test_from_values(self):
        """
        Every subset needs a value and values shrink along inclusions
        """

        segment = poly((0,), (1,))
        with self.assertRaises(SigmaFamilyError):
            PolyFunctor.from_values(1, {(): segment}, projective_line_fan())
        with self.assertRaises(SigmaFamilyError) as context:
            PolyFunctor.from_values(2, {
                (): poly((0,)),
                (0,): segment,
                (1,): Polyhedron.empty(1),
                (0, 1): Polyhedron.empty(1),
            }, projective_line_fan())
        self.assertEqual(context.exception.subset, (0,))


class KoszulComplexTests(TestCase):
    """
    Labels, boundaries and exactness of Koszul complexes
    """

    def test_boundaries(self):
        """
        The complex of a two member family
        """

        complex_ = koszul_complex(validate_sigma_family(f1_family(), f1_fan()))
        self.assertEqual(complex_.dims(), [1, 2, 1])
        self.assertEqual(complex_.boundaries[2], [[-1], [1]])
        self.assertEqual(complex_.boundaries[1], [[1, 1]])
        self.assertTrue(is_exact(complex_))

    def test_square_zero(self):
        """
        d o d = 0 on the full complex of three indices
        """

        labels = {}
        for subset in subsets(3):
            labels.setdefault(len(subset), []).append(subset)
        complex_ = KoszulComplex(3, labels)
        self.assertEqual(complex_.dims(), [1, 3, 3, 1])
        for degree in (2, 3):
            outer, inner = complex_.boundaries[degree - 1], complex_.boundaries[degree]
            for row in outer:
                for column in range(len(inner[0])):
                    self.assertEqual(sum(row[k] * inner[k][column] for k in range(len(row))), 0)
        # the simplex is acyclic
        self.assertTrue(is_exact(complex_))

    def test_evaluation_subcomplex(self):
        """
        Evaluating at a point keeps the labels whose value contains it
        """

        functor = validate_sigma_family(f1_family(), f1_fan())
        complex_ = koszul_complex(functor)
        lower = evaluation_subcomplex(complex_, functor, (1, 0))
        self.assertEqual(lower.dims(), [0, 1, 1])
        self.assertTrue(is_exact(lower))
        outside = evaluation_subcomplex(complex_, functor, (5, 5))
        self.assertTrue(outside.is_zero)
        self.assertTrue(is_exact(outside))

    def test_not_exact(self):
        """
        A lone degree zero label is not exact
        """

        self.assertFalse(is_exact(KoszulComplex(1, {0: [()]})))


class LocalizationTests(TestCase):
    """
    F + dual(sigma) at cones of the fan
    """

    def test_zero_cone(self):
        """
        Localizing at the zero cone leaves the functor unchanged
        """

        functor = projective_line_functor()
        self.assertIs(localize(functor, Cone.zero(1)), functor)

    def test_ray(self):
        """
        At the ray (1) every nonempty value grows to the right
        """

        localized = localize(projective_line_functor(), Cone([(1,)]))
        self.assertEqual(localized.value(()), hull([(0,)], rays=[(1,)], dimension=1))
        self.assertEqual(localized.value((1,)), hull([(1,)], rays=[(1,)], dimension=1))
        self.assertTrue(localized.value((0, 1)).is_empty)

    def test_cone_not_in_fan(self):
        """
        Only cones of the fan can be localized at
        """

        functor = validate_sigma_family(f1_family(), f1_fan())
        with self.assertRaises(ConeNotInFanError):
            localize(functor, Cone([(1, 1)]))


class ExactnessTests(TestCase):
    """
    verify_exactness_everywhere on families and on the counterexample on P^1
    """

    def test_hirzebruch_family(self):
        """
        A family on F1 is exact at every cone
        """

        report = verify_exactness_everywhere(validate_sigma_family(f1_family(), f1_fan()))
        self.assertTrue(report.passed)
        self.assertEqual(len(report.cones), 9)
        self.assertEqual(report.failures(), [])
        self.assertTrue(all(entry.lattice_exact for entry in report.cones))

    def test_cremona_family(self):
        """
        The three convex unions on the hexagon fan are exact everywhere
        """

        plus, __ = cremona_pair()
        functor = validate_sigma_family(cremona_family(), cremona_fan())
        self.assertEqual(functor.value((0, 1, 2)), plus)
        self.assertTrue(verify_exactness_everywhere(functor).passed)

    def test_projective_line_counterexample(self):
        """
        Lattice points miss the failure at 1/2 that the cell samples find
        """

        report = verify_exactness_everywhere(projective_line_functor())
        self.assertFalse(report.passed)

        zero = [entry for entry in report.cones if entry.cone.is_zero][0]
        self.assertTrue(zero.lattice_exact)
        self.assertFalse(zero.cell_exact)
        self.assertEqual(zero.witnesses, [(Fraction(1, 2),)])
        self.assertGreater(zero.samples_checked, 0)

    def test_long_sequence_refused(self):
        """
        The counterexample gives no exact sequence and the report travels with the error
        """

        with self.assertRaises(ExactnessError) as context:
            long_koszul_sequence(projective_line_functor())
        self.assertFalse(context.exception.report.passed)

    def test_long_sequence(self):
        """
        Terms from the top degree down, labelled by the input names
        """

        sequence = long_koszul_sequence(validate_sigma_family(f1_family(), f1_fan()), names=f1_names())
        self.assertTrue(sequence.certified)
        self.assertEqual(
            [[summand.label for summand in term.summands] for term in sequence.terms],
            [['(1,0)'], ['(1,1)', '(0,1)'], ['(0,2)']],
        )
        self.assertEqual(sequence.maps, [[[-1], [1]], [[1, 1]]])

    def test_long_sequence_without_names(self):
        """
        Unnamed terms get their subset as label
        """

        with patch('toric_extensions.const.TOREXT_VERIFY_SEQUENCES', False):
            sequence = long_koszul_sequence(validate_sigma_family(f1_family(), f1_fan()))
        self.assertFalse(sequence.certified)
        self.assertEqual(sequence.terms[0].summands[0].label, 'F(0, 1)')
        self.assertEqual(sequence.terms[-1].summands[0].label, 'F()')

    def test_empty_intersection(self):
        """
        Empty values drop out of the complex
        """

        functor = PolyFunctor.from_values(2, {
            (): poly((0,), (1,)),
            (0,): poly((0,), (1,)),
            (1,): poly((0,), (1,)),
            (0, 1): Polyhedron.empty(1),
        }, projective_line_fan())
        self.assertEqual(koszul_complex(functor).dims(), [0, 2, 1])
        self.assertFalse(verify_exactness_everywhere(functor).passed)
