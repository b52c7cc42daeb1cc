"""
Rational polyhedral cones, stored as polyhedra with the origin as apex
"""



import logging

from contracts import contract

from toric_extensions.geometry import linalg
from toric_extensions.geometry.polyhedron import Polyhedron, intersect

log = logging.getLogger(__name__)


class Cone:
    """
    The cone spanned by a finite set of generators. Extreme rays are primitive integer
    vectors modulo the lineality space
    """

    __slots__ = ('_polyhedron',)

    def __init__(self, generators, dimension=None):
        generators = [linalg.as_vector(generator) for generator in generators]
        if dimension is None:
            if not generators:
                raise ValueError('the dimension of a cone without generators must be given')
            dimension = len(generators[0])
        origin = tuple([0] * dimension)
        self._polyhedron = Polyhedron.from_vrep([origin], rays=generators, dimension=dimension)

    @classmethod
    def from_polyhedron(cls, polyhedron):
        """
        Wraps a polyhedron whose constraints all pass through the origin
        """

        if any(offset != 0 for __, offset in polyhedron.hyperplanes()):
            raise ValueError('{p} is not a cone'.format(p=polyhedron))
        cone = cls.__new__(cls)
        cone._polyhedron = polyhedron  # pylint: disable=protected-access
        return cone

    @classmethod
    def zero(cls, dimension):
        return cls([], dimension=dimension)

    @property
    def dimension(self):
        """
        Ambient dimension
        """
        return self._polyhedron.dimension

    @property
    def dim(self):
        return self._polyhedron.dim

    @property
    def polyhedron(self):
        return self._polyhedron

    @property
    def rays(self):
        return self._polyhedron.rays

    @property
    def lineality(self):
        return self._polyhedron.lines

    @property
    def generators(self):
        """
        Extreme rays followed by the lineality basis in both signs
        """
        return list(self.rays) + [
            vector for line in self.lineality for vector in (line, tuple(-x for x in line))
        ]

    @property
    def facet_normals(self):
        return [normal for normal, __ in self._polyhedron.inequalities]

    @property
    def equation_normals(self):
        return [normal for normal, __ in self._polyhedron.equations]

    @property
    def is_pointed(self):
        return not self.lineality

    @property
    def is_zero(self):
        return not self.rays and not self.lineality

    def contains(self, vector):
        return self._polyhedron.contains_point(vector)

    def contains_cone(self, other):
        return all(self.contains(generator) for generator in other.generators)

    def relative_interior_sample(self):
        """
        Sum of the generators, which lies in the relative interior
        """

        total = tuple([0] * self.dimension)
        for generator in self.rays:
            total = linalg.add(total, generator)
        return linalg.as_vector(total)

    def faces(self):
        """
        All faces of a pointed cone, as cones, the zero face included
        """

        rays = list(self.rays)
        facet_sets = [
            frozenset(ray for ray in rays if linalg.dot(ray, normal) == 0)
            for normal in self.facet_normals
        ]
        found = {frozenset(rays)}
        pending = [frozenset(rays)]
        while pending:
            face = pending.pop()
            for facet in facet_sets:
                smaller = face & facet
                if smaller not in found:
                    found.add(smaller)
                    pending.append(smaller)
        ordered = sorted(found, key=lambda face: (len(face), sorted(face)))
        return [Cone(sorted(face), dimension=self.dimension) for face in ordered]

    def __eq__(self, other):
        return isinstance(other, Cone) and self._polyhedron == other._polyhedron

    def __hash__(self):
        return hash(self._polyhedron)

    def __repr__(self):
        return 'Cone(rays={rays}, lineality={lineality})'.format(rays=list(self.rays), lineality=list(self.lineality))


@contract(cone=Cone)
def dual_cone(cone):
    """
    {u : <u, v> >= 0 for all v in cone}
    """

    generators = list(cone.facet_normals)
    for normal in cone.equation_normals:
        generators.append(normal)
        generators.append(tuple(-x for x in normal))
    return Cone(generators, dimension=cone.dimension)


@contract(left=Cone, right=Cone)
def intersect_cones(left, right):
    return Cone.from_polyhedron(intersect(left.polyhedron, right.polyhedron))
