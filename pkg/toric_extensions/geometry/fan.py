"""
Complete or convex-support fans of pointed rational cones
"""



import logging
from functools import cmp_to_key

from toric_extensions.exceptions import FanError
from toric_extensions.geometry import linalg
from toric_extensions.geometry.cone import Cone, intersect_cones
from toric_extensions.geometry.lattice import Lattice

log = logging.getLogger(__name__)


def _half_plane(vector):
    x, y = vector
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _counterclockwise(left, right):
    half_left, half_right = _half_plane(left), _half_plane(right)
    if half_left != half_right:
        return half_left - half_right
    cross = left[0] * right[1] - left[1] * right[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def sort_rays(rays, rank):
    """
    Counterclockwise from (1, 0) in rank 2, lexicographic otherwise
    """

    if rank == 2:
        return sorted(rays, key=cmp_to_key(_counterclockwise))
    return sorted(rays)


class Fan:
    """
    A fan given by its maximal cones. The lattice is the N side and defaults to Z^r;
    a finer or coarser lattice changes the primitive generators of the rays
    """

    __slots__ = ('lattice', 'maximal_cones', 'rays', '_faces')

    def __init__(self, cones, lattice=None, rank=None):
        cones = list(cones)
        if rank is None:
            if lattice is not None:
                rank = lattice.rank
            elif cones:
                rank = cones[0].dimension
            else:
                raise FanError('a fan without cones needs an explicit rank')
        self.lattice = lattice if lattice is not None else Lattice.standard(rank)

        maximal = []
        for cone in cones:
            if not cone.is_pointed:
                raise FanError('{cone} is not pointed'.format(cone=cone))
            if cone in maximal:
                continue
            if any(other.contains_cone(cone) and other != cone for other in cones):
                continue
            maximal.append(cone)

        rays = {ray for cone in maximal for ray in cone.rays}
        self.rays = tuple(sort_rays(rays, rank))
        self.maximal_cones = tuple(sorted(maximal, key=self._cone_key))
        self._faces = None

    @classmethod
    def from_indices(cls, rays, cone_indices, lattice=None):
        """
        Builds a fan from a ray list and maximal cones given as lists of ray indices
        """

        rays = [linalg.as_vector(ray) for ray in rays]
        if not rays:
            raise FanError('a fan needs at least one ray')
        cones = []
        for indices in cone_indices:
            try:
                cones.append(Cone([rays[index] for index in indices], dimension=len(rays[0])))
            except IndexError as ex:
                raise FanError('cone {indices} refers to a missing ray'.format(indices=indices)) from ex
        return cls(cones, lattice=lattice, rank=len(rays[0]))

    @property
    def rank(self):
        return self.lattice.rank

    def _cone_key(self, cone):
        return sorted(self.ray_index(ray) for ray in cone.rays)

    def ray_index(self, ray):
        return self.rays.index(tuple(ray))

    def cone_indices(self, cone):
        """
        Sorted ray indices spanning cone
        """
        return sorted(self.ray_index(ray) for ray in cone.rays)

    def generator(self, ray):
        """
        The primitive generator of ray in the fan's lattice
        """
        return self.lattice.primitive_along(ray)

    def generators(self):
        return [self.generator(ray) for ray in self.rays]

    def with_lattice(self, lattice):
        return Fan(self.maximal_cones, lattice=lattice, rank=self.rank)

    def support(self):
        """
        The cone spanned by all rays; equals the support when the support is convex
        """
        return Cone(list(self.rays), dimension=self.rank)

    def is_complete(self):
        return self.support().dim == self.rank and not self.support().facet_normals

    def faces(self):
        """
        Every cone of the fan, the zero cone included, by dimension then rays
        """

        if self._faces is None:
            found = set()
            for cone in self.maximal_cones:
                found.update(cone.faces())
            self._faces = tuple(sorted(found, key=lambda cone: (cone.dim, self._cone_key(cone))))
        return self._faces

    def contains_cone(self, cone):
        return cone in self.faces()

    def cones_containing(self, ray):
        return [cone for cone in self.maximal_cones if tuple(ray) in cone.rays]

    def validate(self):
        """
        Checks full dimensionality of the maximal cones, the face-intersection property
        and convexity of the support. Raises FanError
        """

        if not self.maximal_cones:
            raise FanError('a fan needs at least one maximal cone')
        for cone in self.maximal_cones:
            if cone.dim != self.rank:
                raise FanError('maximal cone {cone} is not full-dimensional'.format(cone=cone))

        for index, left in enumerate(self.maximal_cones):
            for right in self.maximal_cones[index + 1:]:
                meet = intersect_cones(left, right)
                if not (_is_face_of(meet, left) and _is_face_of(meet, right)):
                    raise FanError('{left} and {right} do not meet along a common face'.format(left=left, right=right))

        support = self.support()
        for cone in self.maximal_cones:
            for normal in cone.facet_normals:
                if all(linalg.dot(ray, normal) >= 0 for ray in support.generators):
                    continue
                facet_rays = [ray for ray in cone.rays if linalg.dot(ray, normal) == 0]
                sample = Cone(facet_rays, dimension=self.rank).relative_interior_sample()
                if not any(other != cone and other.contains(sample) for other in self.maximal_cones):
                    raise FanError('the support of the fan is not convex near {cone}'.format(cone=cone))

        log.debug('Validated fan with %d rays and %d maximal cones', len(self.rays), len(self.maximal_cones))

    def __eq__(self, other):
        return isinstance(other, Fan) and self.lattice == other.lattice and \
            set(self.maximal_cones) == set(other.maximal_cones)

    def __hash__(self):
        return hash((self.lattice, frozenset(self.maximal_cones)))

    def __repr__(self):
        return 'Fan(rays={rays}, cones={cones})'.format(
            rays=list(self.rays),
            cones=[self.cone_indices(cone) for cone in self.maximal_cones],
        )


def _is_face_of(face, cone):
    """
    face == cone cut by every facet hyperplane of cone vanishing on face
    """

    vanishing = [
        normal for normal in cone.facet_normals
        if all(linalg.dot(ray, normal) == 0 for ray in face.rays)
    ]
    rays = [ray for ray in cone.rays if all(linalg.dot(ray, normal) == 0 for normal in vanishing)]
    return Cone(rays, dimension=cone.dimension) == face
