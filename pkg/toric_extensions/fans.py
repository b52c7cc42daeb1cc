"""
Normal fans, refinement and compatibility, and the dictionary between
polyhedra and nef toric divisors
"""



import logging

from contracts import contract

from toric_extensions.data import CartierData, ToricDivisor
from toric_extensions.exceptions import (
    FanSupportMismatch,
    NotFullDimensionalError,
    IncompatiblePolyhedronError,
)
from toric_extensions.geometry import linalg
from toric_extensions.geometry.cone import Cone, dual_cone, intersect_cones
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.polyhedron import Polyhedron, minkowski_sum

log = logging.getLogger(__name__)


def _normal_cone_at(p, vertex):
    """
    Inner normal cone of p at vertex: spanned by the normals of the constraints tight there
    """

    generators = [normal for normal, offset in p.inequalities if linalg.dot(vertex, normal) + offset == 0]
    for normal, __ in p.equations:
        generators.append(normal)
        generators.append(tuple(-x for x in normal))
    return Cone(generators, dimension=p.dimension)


@contract(p=Polyhedron)
def normal_cones(p):
    """
    The normal cone at every vertex of p; non-pointed when p is not full-dimensional
    """

    if p.is_empty:
        return []
    return [_normal_cone_at(p, vertex) for vertex in p.vertices]


@contract(p=Polyhedron)
def normal_fan(p):
    """
    Inner normal fan of a full-dimensional polyhedron
    """

    if p.is_empty or not p.is_full_dimensional:
        raise NotFullDimensionalError('not full-dimensional: {p}'.format(p=p))
    if not p.is_pointed:
        raise NotFullDimensionalError('{p} has no vertex'.format(p=p))
    return Fan(normal_cones(p), rank=p.dimension)


def _same_support(left, right):
    return left.support() == right.support()


@contract(fine=Fan, coarse=Fan)
def refines(fine, coarse):
    """
    True iff the supports agree and every maximal cone of fine lies in a cone of coarse
    """

    if not _same_support(fine, coarse):
        return False
    return all(
        any(big.contains_cone(small) for big in coarse.maximal_cones)
        for small in fine.maximal_cones
    )


def _full_dimensional_meets(cones, others, rank):
    result = []
    for cone in cones:
        for other in others:
            meet = intersect_cones(cone, other)
            if meet.dim == rank and meet not in result:
                result.append(meet)
    return result


@contract(a=Fan, b=Fan)
def common_refinement(a, b):
    """
    The coarsest fan refining both; its maximal cones are the full-dimensional meets
    """

    if not _same_support(a, b):
        raise FanSupportMismatch('fans with different supports have no common refinement')
    cones = _full_dimensional_meets(a.maximal_cones, b.maximal_cones, a.rank)
    return Fan(cones, lattice=a.lattice, rank=a.rank)


@contract(f=Fan, polys='list')
def refine_by_polyhedra(f, polys):
    """
    Refines f until every polyhedron in polys is compatible with it. Unlike
    common_refinement this also handles polyhedra of lower dimension
    """

    cones = list(f.maximal_cones)
    for p in polys:
        if p.is_empty:
            continue
        cones = _full_dimensional_meets(cones, normal_cones(p), f.rank)
    refined = Fan(cones, lattice=f.lattice, rank=f.rank)
    if refined != f:
        log.info('Refined a fan of %d maximal cones into %d', len(f.maximal_cones), len(refined.maximal_cones))
    return refined


def _tail_matches(p, f):
    return p.tail_cone() == dual_cone(f.support())


def _minimizing_vertex(p, cone):
    """
    The vertex of p minimizing every generator of cone at once, or None
    """

    candidates = list(p.vertices)
    for ray in cone.rays:
        best = min(linalg.dot(vertex, ray) for vertex in candidates)
        candidates = [vertex for vertex in candidates if linalg.dot(vertex, ray) == best]
    if not candidates:
        return None
    for vertex in candidates:
        if all(linalg.dot(vertex, ray) == p.min_pairing(ray) for ray in cone.rays):
            return vertex
    return None


@contract(p=Polyhedron, f=Fan)
def is_compatible(p, f):
    """
    Tail cone equal to the dual of the support and normal fan refined by f.
    The empty polyhedron is compatible with every fan
    """

    if p.is_empty:
        return True
    if not _tail_matches(p, f):
        return False
    return all(_minimizing_vertex(p, cone) is not None for cone in f.maximal_cones)


@contract(p=Polyhedron, f=Fan)
def is_ample(p, f):
    """
    The divisor of p is ample on f iff the normal fan of p is f itself
    """

    if p.is_empty or not p.is_full_dimensional or not p.is_pointed:
        return False
    return set(normal_fan(p).maximal_cones) == set(f.maximal_cones)


def _require_compatible(p, f):
    if not is_compatible(p, f):
        raise IncompatiblePolyhedronError('{p} is not compatible with {f}'.format(p=p, f=f))


@contract(p=Polyhedron, f=Fan)
def cartier_data(p, f):
    """
    For each maximal cone the vertex m_sigma with p + dual(sigma) = m_sigma + dual(sigma)
    """

    _require_compatible(p, f)
    cones = list(f.maximal_cones)
    return CartierData(cones=cones, points=[_minimizing_vertex(p, cone) for cone in cones])


@contract(p=Polyhedron, f=Fan)
def divisor_of(p, f):
    """
    lambda_rho = -min <p, v_rho>, with v_rho primitive in the lattice of f
    """

    _require_compatible(p, f)
    coefficients = []
    for ray in f.rays:
        value = -p.min_pairing(f.generator(ray))
        if value.denominator != 1:
            raise IncompatiblePolyhedronError(
                '{p} is not a lattice polyhedron for the lattice of the fan'.format(p=p)
            )
        coefficients.append(int(value))
    return ToricDivisor(rays=list(f.rays), coefficients=coefficients)


@contract(p=Polyhedron, cone=Cone)
def section_in_chart(p, cone, u):
    """
    Whether u lies in p + dual(cone), i.e. carries a section over the chart of cone
    """

    if p.is_empty:
        return False
    return minkowski_sum(p, dual_cone(cone).polyhedron).contains_point(linalg.as_vector(u))
