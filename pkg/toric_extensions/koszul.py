"""
Polyhedral functors on subsets of an index set, their Koszul subcomplexes and
evaluation subcomplexes, localization at cones, and exactness checks over
lattice points and over every cell of the relevant hyperplane arrangement.
"""



import logging
import itertools

from contracts import contract

from toric_extensions.data import ConeExactness, ExactnessReport
from toric_extensions.exceptions import (
    ExactnessError,
    SigmaFamilyError,
    ConeNotInFanError,
)
from toric_extensions.fans import is_compatible
from toric_extensions.geometry import linalg
from toric_extensions.geometry.cone import Cone, dual_cone
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.polyhedron import hull, intersect, lattice_points, minkowski_sum
from toric_extensions.topology import arrangement_faces, face_sample, union_is_convex

log = logging.getLogger(__name__)


def subsets(index_count):
    """
    All subsets of range(index_count) as sorted tuples, by size then lexicographically
    """

    indices = range(index_count)
    return [subset for size in range(index_count + 1) for subset in itertools.combinations(indices, size)]


class PolyFunctor:
    """
    A contravariant assignment subset -> polyhedron on 2^I, together with its fan
    """

    __slots__ = ('index_count', 'values', 'fan')

    def __init__(self, index_count, values, fan):
        self.index_count = index_count
        self.values = {tuple(sorted(subset)): value for subset, value in values.items()}
        self.fan = fan

    @classmethod
    @contract(fan=Fan)
    def from_values(cls, index_count, values, fan):
        """
        Any functor, given the value of every subset; checks contravariance only
        """

        functor = cls(index_count, values, fan)
        for subset in subsets(index_count):
            if subset not in functor.values:
                raise SigmaFamilyError('no value for subset {subset}'.format(subset=subset), subset=subset)
        for smaller in subsets(index_count):
            for larger in subsets(index_count):
                if set(smaller) < set(larger) and not functor.value(smaller).contains(functor.value(larger)):
                    raise SigmaFamilyError(
                        'F{larger} is not contained in F{smaller}'.format(larger=larger, smaller=smaller),
                        subset=larger,
                    )
        return functor

    @property
    def dimension(self):
        return self.fan.rank

    def value(self, subset):
        return self.values[tuple(sorted(subset))]

    def __eq__(self, other):
        return isinstance(other, PolyFunctor) and self.index_count == other.index_count and \
            self.values == other.values and self.fan == other.fan

    def __hash__(self):
        return hash((self.index_count, frozenset(self.values.items()), self.fan))

    def __repr__(self):
        return 'PolyFunctor(index_count={count}, values={values})'.format(count=self.index_count, values=self.values)


@contract(polys='list', f=Fan)
def validate_sigma_family(polys, f):
    """
    Checks that the union and every nonempty intersection are compatible with f and
    returns the functor subset -> intersection, with the union at the empty subset
    """

    if not polys:
        raise SigmaFamilyError('a family needs at least one polyhedron', subset=())

    if not union_is_convex(polys):
        raise SigmaFamilyError('union not compatible: the union is not convex', subset=())
    union = hull([vertex for p in polys for vertex in p.vertices], dimension=f.rank)
    if not is_compatible(union, f):
        raise SigmaFamilyError('union not compatible with the fan', subset=())

    values = {(): union}
    for subset in subsets(len(polys))[1:]:
        value = polys[subset[0]]
        for index in subset[1:]:
            value = intersect(value, polys[index])
        if not is_compatible(value, f):
            raise SigmaFamilyError(
                'intersection not compatible with fan for subset {subset}'.format(subset=subset),
                subset=subset,
            )
        values[subset] = value

    log.debug('Validated a family of %d polyhedra', len(polys))
    return PolyFunctor(len(polys), values, f)


class KoszulComplex:
    """
    Labels per homological degree and the boundary matrices d_p: C_p -> C_(p-1)
    (rows indexed by labels of degree p - 1)
    """

    __slots__ = ('index_count', 'labels', 'boundaries')

    def __init__(self, index_count, labels):
        self.index_count = index_count
        self.labels = {degree: sorted(labels.get(degree, [])) for degree in range(index_count + 1)}
        self.boundaries = {}
        for degree in range(1, index_count + 1):
            self.boundaries[degree] = _boundary(self.labels[degree], self.labels[degree - 1])
        self._check_square_zero()

    def _check_square_zero(self):
        for degree in range(2, self.index_count + 1):
            outer, inner = self.boundaries[degree - 1], self.boundaries[degree]
            for row in outer:
                for column in range(len(self.labels[degree])):
                    if sum(row[k] * inner[k][column] for k in range(len(row))) != 0:
                        raise ExactnessError('d o d is not zero in degree {degree}'.format(degree=degree))

    def dims(self):
        """
        Dimensions from the top degree down to degree 0
        """
        return [len(self.labels[degree]) for degree in range(self.index_count, -1, -1)]

    def dim(self, degree):
        return len(self.labels.get(degree, []))

    def boundary_rank(self, degree):
        if degree < 1 or degree > self.index_count:
            return 0
        rows, columns = self.dim(degree - 1), self.dim(degree)
        if not rows or not columns:
            return 0
        return linalg.rank(self.boundaries[degree], columns)

    @property
    def is_zero(self):
        return all(not labels for labels in self.labels.values())

    def __repr__(self):
        return 'KoszulComplex(dims={dims})'.format(dims=self.dims())


def _boundary(sources, targets):
    """
    d(e_I) = sum_j (-1)^j e_(I minus its j-th element), restricted to the target labels
    """

    positions = {label: row for row, label in enumerate(targets)}
    matrix = [[0] * len(sources) for __ in targets]
    for column, label in enumerate(sources):
        for j in range(len(label)):
            face = label[:j] + label[j + 1:]
            if face in positions:
                matrix[positions[face]][column] = (-1) ** j
    return matrix


def _labels_where(functor, predicate):
    labels = {}
    for subset in subsets(functor.index_count):
        if predicate(functor.value(subset)):
            labels.setdefault(len(subset), []).append(subset)
    return labels


@contract(functor=PolyFunctor)
def koszul_complex(functor):
    """
    Labels I' with F(I') nonempty and the signed Koszul boundary
    """
    return KoszulComplex(functor.index_count, _labels_where(functor, lambda value: not value.is_empty))


@contract(complex_=KoszulComplex, functor=PolyFunctor)
def evaluation_subcomplex(complex_, functor, m):
    """
    The subcomplex of labels I' of complex_ with m in F(I')
    """

    m = linalg.as_vector(m)
    present = {label for labels in complex_.labels.values() for label in labels}
    labels = {}
    for label in sorted(present):
        if functor.value(label).contains_point(m):
            labels.setdefault(len(label), []).append(label)
    return KoszulComplex(complex_.index_count, labels)


@contract(complex_=KoszulComplex)
def is_exact(complex_):
    """
    rank d_(p+1) + rank d_p = dim C_p in every degree, the ends included
    """

    return all(
        complex_.boundary_rank(degree + 1) + complex_.boundary_rank(degree) == complex_.dim(degree)
        for degree in range(complex_.index_count + 1)
    )


@contract(functor=PolyFunctor, sigma=Cone)
def localize(functor, sigma):
    """
    F(I') + dual(sigma) for every I'; the zero cone leaves F as it is
    """

    if not functor.fan.contains_cone(sigma):
        raise ConeNotInFanError('{sigma} is not a cone of the fan'.format(sigma=sigma))
    if sigma.is_zero:
        return functor
    shift = dual_cone(sigma).polyhedron
    values = {subset: minkowski_sum(value, shift) for subset, value in functor.values.items()}
    return PolyFunctor(functor.index_count, values, functor.fan)


def _sampling_box_radius(values, hyperplanes, dimension):
    """
    Bound on the coordinates of every vertex of every value and of the arrangement
    """

    radius = 0
    for value in values:
        for vertex in value.vertices:
            radius = max(radius, max(abs(x) for x in vertex))
    for planes in itertools.combinations(hyperplanes, dimension):
        point = linalg.solve_affine([normal for normal, __ in planes], [-offset for __, offset in planes])
        if point is not None:
            radius = max(radius, max(abs(x) for x in point))
    return int(radius) + 1


def _box(radius, dimension):
    corners = list(itertools.product(*[(-radius, radius)] * dimension))
    return hull(corners, dimension=dimension)


def _check_cone(functor, complex_, sigma):
    localized = localize(functor, sigma)
    values = [value for value in localized.values.values() if not value.is_empty]
    hyperplanes = sorted({plane for value in values for plane in value.hyperplanes()})
    dimension = functor.dimension
    box = _box(_sampling_box_radius(values, hyperplanes, dimension), dimension)

    witnesses = []
    samples = 0
    for vertex_set, __ in arrangement_faces(box, hyperplanes):
        sample = face_sample(vertex_set)
        samples += 1
        if not is_exact(evaluation_subcomplex(complex_, localized, sample)):
            witnesses.append(sample)

    lattice_witnesses = []
    for point in lattice_points(box, functor.fan.lattice.dual()):
        samples += 1
        if not is_exact(evaluation_subcomplex(complex_, localized, point)):
            lattice_witnesses.append(point)

    log.debug('Cone %s: %d samples, %d cell failures, %d lattice failures',
              sigma, samples, len(witnesses), len(lattice_witnesses))
    return ConeExactness(
        cone=sigma,
        lattice_exact=not lattice_witnesses,
        cell_exact=not witnesses,
        witnesses=sorted(witnesses),
        lattice_witnesses=sorted(lattice_witnesses),
        samples_checked=samples,
    )


@contract(functor=PolyFunctor)
def verify_exactness_everywhere(functor):
    """
    Exactness of every localized evaluation complex, at every cone of the fan (the zero
    cone included) and at one sample per arrangement cell and per lattice point
    """

    complex_ = koszul_complex(functor)
    entries = [_check_cone(functor, complex_, sigma) for sigma in functor.fan.faces()]
    report = ExactnessReport(cones=entries, passed=all(entry.cell_exact for entry in entries))
    log.info('Exactness check over %d cones: %s', len(entries), 'passed' if report.passed else 'failed')
    return report

