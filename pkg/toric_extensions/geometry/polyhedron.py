"""
Exact rational polyhedra with synchronized H- and V-representations.

A Polyhedron is immutable. Its inequalities (normal, offset) encode
<m, normal> >= -offset with primitive integer normals, its equations encode
<m, normal> = -offset. Vertices, rays and lines are the canonical V side: rays and
vertices are projected onto the orthogonal complement of the lineality space so
structural equality is set equality.
"""



import math
import logging
import itertools
from fractions import Fraction
from collections import namedtuple

from contracts import contract

from toric_extensions import const
from toric_extensions.exceptions import UnboundedEnumerationError
from toric_extensions.geometry import linalg
from toric_extensions.geometry.lattice import Lattice
from toric_extensions.backends.backend import polyhedral_backend

log = logging.getLogger(__name__)

VRepresentation = namedtuple('VRepresentation', ['vertices', 'rays', 'lines'])


def _canonical_lines(lines, dimension):
    basis = linalg.span_basis(lines, dimension)
    return sorted(linalg.sign_normalized(row) for row in basis)


def _canonical_equations(equations, dimension):
    rows = [tuple(normal) + (offset,) for normal, offset in equations]
    reduced = linalg.span_basis(rows, dimension + 1)
    result = []
    for row in reduced:
        normal, offset = row[:dimension], row[dimension]
        factor = linalg.primitive_scale(normal)
        result.append((linalg.primitive(normal), offset * factor))
    return sorted(result)


def _canonical_inequalities(inequalities, equations):
    """
    Projects normals onto the complement of the equation normals, then makes them primitive
    """

    equation_normals = [linalg.as_vector(normal) for normal, __ in equations]
    equation_offsets = [offset for __, offset in equations]
    result = set()
    for normal, offset in inequalities:
        normal = linalg.as_vector(normal)
        offset = linalg.as_fraction(offset)
        if equation_normals:
            size = len(equation_normals)
            gram = [[linalg.dot(equation_normals[i], equation_normals[j]) for j in range(size)] for i in range(size)]
            coefficients = linalg.mat_vec(linalg.inverse(gram), [linalg.dot(e, normal) for e in equation_normals])
            for coefficient, e_normal, e_offset in zip(coefficients, equation_normals, equation_offsets):
                normal = linalg.sub(normal, linalg.scale(e_normal, coefficient))
                offset -= coefficient * e_offset
        if linalg.is_zero(normal):
            continue
        factor = linalg.primitive_scale(normal)
        result.add((linalg.primitive(normal), offset * factor))
    return sorted(result)


def affine_rank(points):
    """
    Dimension of the affine hull of a nonempty point set
    """

    points = list(points)
    base = points[0]
    return linalg.rank([linalg.sub(point, base) for point in points[1:]], len(base))


class Polyhedron:
    """
    A rational polyhedron, possibly empty, possibly with lineality
    """

    __slots__ = ('dimension', 'inequalities', 'equations', 'vertices', 'rays', 'lines', '_faces')

    def __init__(self, dimension, inequalities, equations, vertices, rays, lines):
        """
        Stores already canonical data, use the module level constructors instead
        """

        self.dimension = dimension
        self.inequalities = tuple(inequalities)
        self.equations = tuple(equations)
        self.vertices = tuple(vertices)
        self.rays = tuple(rays)
        self.lines = tuple(lines)
        self._faces = None

    @classmethod
    def empty(cls, dimension):
        """
        The distinguished empty polyhedron; 0 >= 1 is its only inequality
        """
        return cls(dimension, [(tuple([0] * dimension), Fraction(-1))], [], [], [], [])

    @classmethod
    def _canonical(cls, dimension, inequalities, equations, points, rays, lines):
        """
        Canonicalizes matching H and V data without any conversion
        """

        lines = _canonical_lines(lines, dimension)
        line_basis = [linalg.as_vector(line) for line in lines]
        equations = _canonical_equations(equations, dimension)
        inequalities = _canonical_inequalities(inequalities, equations)

        vertices = sorted({linalg.project_onto_complement(point, line_basis) for point in points})
        canonical_rays = set()
        for ray in rays:
            projected = linalg.project_onto_complement(ray, line_basis)
            if not linalg.is_zero(projected):
                canonical_rays.add(linalg.primitive(projected))

        return cls(dimension, inequalities, equations, vertices, sorted(canonical_rays), lines)

    @classmethod
    def from_hrep(cls, dimension, inequalities, equations=()):
        """
        Builds the polyhedron {<m, v> >= -offset} from (v, offset) pairs, redundancy allowed
        """

        inequalities = [(linalg.as_vector(normal), linalg.as_fraction(offset)) for normal, offset in inequalities]
        equations = [(linalg.as_vector(normal), linalg.as_fraction(offset)) for normal, offset in equations]

        backend = polyhedral_backend()
        generators = backend.to_generators(dimension, inequalities, equations)
        if generators is None:
            return cls.empty(dimension)

        points, rays, lines = generators
        irredundant, found_equations = backend.to_inequalities(dimension, points, rays, lines)
        return cls._canonical(dimension, irredundant, found_equations, points, rays, lines)

    @classmethod
    def from_vrep(cls, points, rays=(), lines=(), dimension=None):
        """
        Convex hull of points plus the cone spanned by rays and lines
        """

        points = [linalg.as_vector(point) for point in points]
        if dimension is None:
            dimension = len(points[0])
        rays = [linalg.as_vector(ray) for ray in rays if not linalg.is_zero(ray)]
        lines = [linalg.as_vector(line) for line in lines if not linalg.is_zero(line)]

        inequalities, equations = polyhedral_backend().to_inequalities(dimension, points, rays, lines)
        return cls.from_hrep(dimension, inequalities, equations)

    @property
    def is_empty(self):
        return not self.vertices

    @property
    def is_bounded(self):
        return not self.rays and not self.lines

    @property
    def is_pointed(self):
        return not self.lines

    @property
    def dim(self):
        """
        Dimension of the affine hull, -1 when empty
        """
        if self.is_empty:
            return -1
        return self.dimension - len(self.equations)

    @property
    def is_full_dimensional(self):
        return self.dim == self.dimension

    @property
    def hrep(self):
        """
        All constraints as inequalities; every equation becomes two opposite inequalities
        """

        result = list(self.inequalities)
        for normal, offset in self.equations:
            result.append((normal, offset))
            result.append((tuple(-x for x in normal), -offset))
        return result

    @property
    def vrep(self):
        return VRepresentation(self.vertices, self.rays, self.lines)

    def hyperplanes(self):
        """
        Facet hyperplanes and equation hyperplanes as (normal, offset) pairs
        """
        return list(self.inequalities) + list(self.equations)

    def contains_point(self, point):
        if self.is_empty:
            return False
        for normal, offset in self.inequalities:
            if linalg.dot(point, normal) + offset < 0:
                return False
        for normal, offset in self.equations:
            if linalg.dot(point, normal) + offset != 0:
                return False
        return True

    def contains_direction(self, direction):
        """
        Whether direction lies in the tail cone
        """
        return all(linalg.dot(direction, normal) >= 0 for normal, __ in self.inequalities) and \
            all(linalg.dot(direction, normal) == 0 for normal, __ in self.equations)

    def contains(self, other):
        """
        Containment of another polyhedron
        """

        if other.is_empty:
            return True
        if self.is_empty:
            return False
        return (
            all(self.contains_point(vertex) for vertex in other.vertices) and
            all(self.contains_direction(ray) for ray in other.rays) and
            all(self.contains_direction(line) and self.contains_direction(tuple(-x for x in line))
                for line in other.lines)
        )

    def interior_sample(self):
        """
        The vertex barycenter, a relative interior point of a bounded polyhedron
        """

        count = len(self.vertices)
        return tuple(sum(coordinates, Fraction(0)) / count for coordinates in zip(*self.vertices))

    def tail_cone(self):
        from toric_extensions.geometry.cone import Cone  # pylint: disable=import-outside-toplevel
        generators = list(self.rays) + list(self.lines) + [tuple(-x for x in line) for line in self.lines]
        return Cone(generators, dimension=self.dimension)

    def translate(self, vector):
        """
        self + vector
        """

        if self.is_empty:
            return self
        vector = linalg.as_vector(vector)
        return Polyhedron._canonical(
            self.dimension,
            [(normal, offset - linalg.dot(vector, normal)) for normal, offset in self.inequalities],
            [(normal, offset - linalg.dot(vector, normal)) for normal, offset in self.equations],
            [linalg.add(vertex, vector) for vertex in self.vertices],
            self.rays,
            self.lines,
        )

    def negate(self):
        """
        -self
        """

        if self.is_empty:
            return self
        return Polyhedron._canonical(
            self.dimension,
            [(tuple(-x for x in normal), offset) for normal, offset in self.inequalities],
            [(tuple(-x for x in normal), offset) for normal, offset in self.equations],
            [tuple(-x for x in vertex) for vertex in self.vertices],
            [tuple(-x for x in ray) for ray in self.rays],
            self.lines,
        )

    def scale(self, factor):
        """
        factor * self for a positive rational factor
        """

        factor = linalg.as_fraction(factor)
        if factor <= 0:
            raise ValueError('dilation factor must be positive')
        if self.is_empty:
            return self
        return Polyhedron._canonical(
            self.dimension,
            [(normal, offset * factor) for normal, offset in self.inequalities],
            [(normal, offset * factor) for normal, offset in self.equations],
            [linalg.scale(vertex, factor) for vertex in self.vertices],
            self.rays,
            self.lines,
        )

    def min_pairing(self, direction):
        """
        min <m, direction> over the polyhedron; None when unbounded below
        """

        if self.is_empty:
            return None
        if any(linalg.dot(ray, direction) < 0 for ray in self.rays):
            return None
        if any(linalg.dot(line, direction) != 0 for line in self.lines):
            return None
        return min(linalg.dot(vertex, direction) for vertex in self.vertices)

    def faces(self):
        """
        All nonempty faces of a bounded polyhedron as frozensets of vertices, mapped to their dimension
        """

        if self._faces is not None:
            return self._faces
        if self.is_empty:
            return {}
        if not self.is_bounded:
            raise UnboundedEnumerationError('face enumeration needs a bounded polyhedron')

        vertex_set = frozenset(self.vertices)
        facet_sets = [
            frozenset(v for v in self.vertices if linalg.dot(v, normal) + offset == 0)
            for normal, offset in self.inequalities
        ]
        found = {vertex_set}
        pending = [vertex_set]
        while pending:
            face = pending.pop()
            for facet in facet_sets:
                smaller = face & facet
                if smaller and smaller not in found:
                    found.add(smaller)
                    pending.append(smaller)

        self._faces = {face: affine_rank(face) for face in found}
        return self._faces

    def volume(self):
        """
        Exact Euclidean volume of a full-dimensional polytope via a pulling triangulation
        """

        if self.is_empty or not self.is_full_dimensional:
            return Fraction(0)
        if not self.is_bounded:
            raise UnboundedEnumerationError('volume of an unbounded polyhedron')

        faces = self.faces()
        total = Fraction(0)
        for simplex in _pulling_triangulation(frozenset(self.vertices), faces):
            apex = simplex[0]
            rows = [linalg.sub(vertex, apex) for vertex in simplex[1:]]
            total += abs(linalg.determinant(rows))
        return total / math.factorial(self.dimension)

    def _key(self):
        return (self.dimension, self.inequalities, self.equations)

    def __eq__(self, other):
        return isinstance(other, Polyhedron) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_empty:
            return 'Polyhedron(empty, dimension={dimension})'.format(dimension=self.dimension)
        return 'Polyhedron(vertices={vertices}, rays={rays}, lines={lines})'.format(
            vertices=[tuple(str(x) for x in v) for v in self.vertices],
            rays=list(self.rays),
            lines=list(self.lines),
        )


def _pulling_triangulation(face, faces):
    """
    Simplices (tuples of vertices, apex first) triangulating a face
    """

    dimension = faces[face]
    if dimension == 0:
        return [tuple(face)]

    apex = min(face)
    simplices = []
    for sub_face, sub_dimension in faces.items():
        if sub_dimension == dimension - 1 and sub_face < face and apex not in sub_face:
            for simplex in _pulling_triangulation(sub_face, faces):
                simplices.append((apex,) + simplex)
    return simplices


def hull(points, rays=(), lines=(), dimension=None):
    """
    Smallest polyhedron containing all points and closed under adding rays and lines
    """
    return Polyhedron.from_vrep(points, rays, lines, dimension=dimension)


@contract(p=Polyhedron)
def vertices_of(p):
    """
    V-representation of p; an empty polyhedron has no vertices
    """
    return p.vrep


@contract(p=Polyhedron, q=Polyhedron)
def minkowski_sum(p, q):
    """
    Exact Minkowski sum; the empty polyhedron is absorbing
    """

    if p.is_empty or q.is_empty:
        return Polyhedron.empty(p.dimension)
    if len(q.vertices) == 1:
        return p.translate(q.vertices[0]) if q.is_bounded else _sum_by_vertices(p, q)
    if len(p.vertices) == 1 and p.is_bounded:
        return q.translate(p.vertices[0])
    return _sum_by_vertices(p, q)


def _sum_by_vertices(p, q):
    points = [linalg.add(a, b) for a in p.vertices for b in q.vertices]
    return hull(points, list(p.rays) + list(q.rays), list(p.lines) + list(q.lines), dimension=p.dimension)


@contract(p=Polyhedron, q=Polyhedron)
def intersect(p, q):
    """
    Exact intersection via concatenated constraints
    """

    if p.is_empty or q.is_empty:
        return Polyhedron.empty(p.dimension)
    return Polyhedron.from_hrep(
        p.dimension,
        list(p.inequalities) + list(q.inequalities),
        list(p.equations) + list(q.equations),
    )


@contract(p=Polyhedron, lattice=Lattice)
def is_lattice_polyhedron(p, lattice):
    """
    True iff every vertex of p lies in the lattice
    """
    return all(lattice.contains(vertex) for vertex in p.vertices)


@contract(p=Polyhedron, lattice=Lattice)
def lattice_points(p, lattice):
    """
    All lattice points in a bounded polyhedron, sorted lexicographically
    """

    if p.is_empty:
        return []
    if not p.is_bounded:
        raise UnboundedEnumerationError('unbounded enumeration')

    coordinates = [lattice.coordinates(vertex) for vertex in p.vertices]
    lower = [math.ceil(min(c[i] for c in coordinates)) for i in range(p.dimension)]
    upper = [math.floor(max(c[i] for c in coordinates)) for i in range(p.dimension)]

    count = 1
    for low, high in zip(lower, upper):
        count *= max(high - low + 1, 0)
    if count > const.TOREXT_MAX_LATTICE_POINTS:
        raise UnboundedEnumerationError(
            'enumeration box of {count} points exceeds TOREXT_MAX_LATTICE_POINTS'.format(count=count)
        )

    basis_rows = lattice.basis_rows()
    found = []
    for integer_coordinates in itertools.product(*[range(low, high + 1) for low, high in zip(lower, upper)]):
        point = linalg.mat_vec(basis_rows, integer_coordinates)
        if p.contains_point(point):
            found.append(point)
    return sorted(found)
