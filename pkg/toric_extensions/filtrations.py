"""
Klyachko filtrations: constructors for line bundles and the tangent sheaf,
stretching and squishing along finite covers, pushouts of filtrations for the
middle sheaf of an extension, and the compatibility and splitting tests.
"""



import logging

from contracts import contract

from toric_extensions.data import ToricDivisor
from toric_extensions.exceptions import FiltrationAdditivityError, FiltrationError, NotAStretchingError
from toric_extensions.geometry import linalg
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.subspace import Filtration, Subspace

log = logging.getLogger(__name__)


def _ceil_div(value, divisor):
    return -(-value // divisor)


@contract(divisor=ToricDivisor)
def line_bundle_filtration(divisor):
    """
    E^l = Q for l <= lambda_rho, zero above
    """
    chains = {tuple(ray): (coefficient, []) for ray, coefficient in zip(divisor.rays, divisor.coefficients)}
    return Filtration(1, chains)


@contract(f=Fan)
def tangent_filtration(f):
    """
    Whole space for l <= 0, the line of the ray at l = 1, zero from l = 2 on
    """

    rank = f.rank
    return Filtration(rank, {ray: (0, [Subspace(rank, [ray])]) for ray in f.rays})


@contract(filtration=Filtration, factors=dict)
def stretch(filtration, factors):
    """
    F^l = E^ceil(l / d_rho), the pullback along a cover with stretch factors d_rho
    """

    chains = {}
    for ray in filtration.rays:
        factor = factors.get(ray, 1)
        lower = filtration.lower(ray)
        highest = factor * (filtration.zero_from(ray) - 1)
        steps = [filtration.level(ray, _ceil_div(level, factor)) for level in range(factor * lower + 1, highest + 1)]
        chains[ray] = (factor * lower, steps)
    return Filtration(filtration.ambient_dim, chains)


@contract(filtration=Filtration, factors=dict)
def squish(filtration, factors):
    """
    H^l = F^(d_rho * l), after checking that F is a d_rho-th stretching at every ray
    """

    chains = {}
    for ray in filtration.rays:
        factor = factors.get(ray, 1)
        lowest = filtration.lower(ray) - factor
        highest = filtration.zero_from(ray) + factor
        for level in range(lowest, highest + 1):
            if filtration.level(ray, level) != filtration.level(ray, factor * _ceil_div(level, factor)):
                raise NotAStretchingError(ray, level)

        lower = filtration.lower(ray) // factor
        top = _ceil_div(filtration.zero_from(ray), factor)
        steps = [filtration.level(ray, factor * level) for level in range(lower + 1, top + 1)]
        chains[ray] = (lower, steps)
    return Filtration(filtration.ambient_dim, chains)


@contract(left=Filtration, right=Filtration)
def direct_sum(left, right):
    """
    Levelwise direct sum on the same rays
    """

    if set(left.rays) != set(right.rays):
        raise FiltrationError('direct sums need filtrations on the same rays')
    chains = {}
    for ray in left.rays:
        lower = min(left.lower(ray), right.lower(ray))
        highest = max(left.zero_from(ray), right.zero_from(ray))
        chains[ray] = (lower, [
            left.level(ray, level).direct_sum(right.level(ray, level)) for level in range(lower + 1, highest + 1)
        ])
    return Filtration(left.ambient_dim + right.ambient_dim, chains)


class PushoutQuotient:
    """
    The space (Q^k (+) Q^(n+1)) / {(phi c, -K c)}: k copies of the left line bundle
    followed by the n + 1 middle summands, modulo the kernel embedding. The quotient
    basis is given by the non-pivot coordinates of the reduced relations
    """

    def __init__(self, kernel_basis, functional):
        self.kernel_basis = [list(row) for row in kernel_basis]
        self.functional = [list(row) for row in functional]
        self.copies = len(self.functional)
        self.middle = len(self.kernel_basis)
        self.size = self.copies + self.middle

        columns = len(self.kernel_basis[0]) if self.kernel_basis else 0
        relations = [
            tuple(self.functional[row][j] for row in range(self.copies)) +
            tuple(-self.kernel_basis[row][j] for row in range(self.middle))
            for j in range(columns)
        ]
        self._rows, pivots = linalg.rref(relations, self.size) if relations else ([], ())
        self._pivots = pivots
        self.free = [index for index in range(self.size) if index not in pivots]

    @property
    def dimension(self):
        return len(self.free)

    def plus_index(self, copy):
        return copy

    def nabla_index(self, index):
        return self.copies + index

    def project(self, vector):
        vector = list(linalg.as_vector(vector))
        for row, pivot in zip(self._rows, self._pivots):
            coefficient = vector[pivot]
            if coefficient:
                vector = [a - coefficient * b for a, b in zip(vector, row)]
        return tuple(vector[index] for index in self.free)

    def image_vector(self, index):
        return self.project(tuple(int(i == index) for i in range(self.size)))

    def summand_image(self, index):
        """
        The image of one summand, a subspace of dimension at most one
        """
        return Subspace(self.dimension, [self.image_vector(index)])


def _check_inputs(core, plus, nablas):
    for filtration in [core, plus] + list(nablas):
        if filtration.ambient_dim != 1:
            raise FiltrationAdditivityError('pushouts take line bundle filtrations')
    for ray in plus.rays:
        if core.lower(ray) > plus.lower(ray) or any(core.lower(ray) > nabla.lower(ray) for nabla in nablas):
            raise FiltrationAdditivityError('the core is not contained in every summand at ray {ray}'.format(ray=ray))


@contract(core=Filtration, plus=Filtration, nablas='list', kernel_basis='list')
def pushout_filtration(core, plus, nablas, kernel_basis, functional=None):
    """
    Filtration of (plus^k (+) nabla_0 (+) ... (+) nabla_n) / image(kernel_basis), where
    functional (k x n, default the identity) maps the kernel copies into plus^k
    """

    _check_inputs(core, plus, nablas)
    size = len(nablas) - 1
    if len(kernel_basis) != size + 1 or any(len(row) != size for row in kernel_basis):
        raise FiltrationAdditivityError('kernel basis must be {rows}x{size}'.format(rows=size + 1, size=size))
    if functional is None:
        functional = [[int(i == j) for j in range(size)] for i in range(size)]

    quotient = PushoutQuotient(kernel_basis, functional)
    copies = quotient.copies

    def level(ray, value):
        vectors = []
        if plus.level(ray, value).is_full:
            vectors.extend(quotient.image_vector(quotient.plus_index(c)) for c in range(copies))
        for index, nabla in enumerate(nablas):
            if nabla.level(ray, value).is_full:
                vectors.append(quotient.image_vector(quotient.nabla_index(index)))
        subspace = Subspace(quotient.dimension, vectors)

        minus_dim = int(any(nabla.level(ray, value).is_full for nabla in nablas))
        expected = copies * plus.level(ray, value).dim + minus_dim
        if subspace.dim != expected:
            raise FiltrationAdditivityError('ray {ray}, level {level}: dimension {got} != {expected}'.format(
                ray=ray, level=value, got=subspace.dim, expected=expected))
        return subspace

    filtrations = [plus, core] + list(nablas)
    lowest = min(f.lower(ray) for f in filtrations for ray in plus.rays)
    highest = max(f.zero_from(ray) for f in filtrations for ray in plus.rays)
    result = Filtration.from_levels(quotient.dimension, plus.rays, level, lowest, highest)
    log.debug('Pushout filtration of rank %d over %d rays', quotient.dimension, len(plus.rays))
    return result


def _intersection_closure(subspaces, ambient_dim):
    found = set(subspaces) | {Subspace.full(ambient_dim), Subspace.zero(ambient_dim)}
    changed = True
    while changed:
        changed = False
        for left in list(found):
            for right in list(found):
                meet = left & right
                if meet not in found:
                    found.add(meet)
                    changed = True
    return found


def _is_coordinate_family(subspaces, ambient_dim):
    """
    Whether one basis makes every subspace a coordinate subspace: summing, over the
    intersection closure, the dimension each member adds beyond its proper members
    must give exactly the ambient dimension
    """

    members = _intersection_closure(subspaces, ambient_dim)
    total = 0
    for member in members:
        below = Subspace.zero(ambient_dim)
        for other in members:
            if other != member and member.contains_subspace(other):
                below = below + other
        total += member.dim - below.dim
    return total == ambient_dim


def _ray_subspaces(filtration, ray):
    __, steps = filtration.chain(ray)
    return list(steps)


@contract(filtration=Filtration)
def is_split(filtration):
    """
    Whether the filtration is a direct sum of line bundles
    """

    subspaces = [subspace for ray in filtration.rays for subspace in _ray_subspaces(filtration, ray)]
    return _is_coordinate_family(subspaces, filtration.ambient_dim)


@contract(filtration=Filtration, f=Fan)
def check_compatibility(filtration, f):
    """
    Klyachko's condition: on every maximal cone the filtrations of its rays split simultaneously
    """

    for cone in f.maximal_cones:
        subspaces = [
            subspace for ray in cone.rays if ray in filtration.rays
            for subspace in _ray_subspaces(filtration, ray)
        ]
        if not _is_coordinate_family(subspaces, filtration.ambient_dim):
            log.debug('Filtration is not compatible on %s', cone)
            return False
    return True


@contract(left=Filtration, right=Filtration)
def isomorphic_profile(left, right):
    """
    Equality up to a change of ambient basis, judged on the dimensions of every
    subspace and of every pairwise intersection
    """

    if left.ambient_dim != right.ambient_dim or set(left.rays) != set(right.rays):
        return False
    low_left, high_left = left.level_range()
    low_right, high_right = right.level_range()
    levels = range(min(low_left, low_right), max(high_left, high_right) + 1)
    keys = [(ray, level) for ray in left.rays for level in levels]

    for ray, level in keys:
        if left.level(ray, level).dim != right.level(ray, level).dim:
            return False
    for index, (ray, level) in enumerate(keys):
        for other_ray, other_level in keys[index + 1:]:
            meet_left = left.level(ray, level) & left.level(other_ray, other_level)
            meet_right = right.level(ray, level) & right.level(other_ray, other_level)
            if meet_left.dim != meet_right.dim:
                return False
    return True


@contract(filtration=Filtration, f=Fan)
def sections_contain(filtration, f, ray, u, vector):
    """
    e (x) chi^u is a section over the chart of ray iff e lies in E^(-<u, v_rho>)
    """

    level = -linalg.dot(linalg.as_vector(u), f.generator(ray))
    if level.denominator != 1:
        raise FiltrationError('{u} is not a lattice degree'.format(u=u))
    return filtration.level(tuple(ray), int(level)).contains(vector)
