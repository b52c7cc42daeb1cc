"""
Topology of polyhedron differences: the arrangement of one polyhedron cut by the
hyperplanes of another, connected components of the difference, and the convex
unions of those components with the common core.
"""



import logging

import networkx
from contracts import contract

from toric_extensions import const
from toric_extensions.data import Cell, CellComplex, Component, ComponentDecomposition
from toric_extensions.exceptions import TruncationError, UnionNotConvexError
from toric_extensions.geometry import linalg
from toric_extensions.geometry.cone import dual_cone
from toric_extensions.geometry.polyhedron import Polyhedron, affine_rank, hull, intersect

log = logging.getLogger(__name__)


def _sign(value):
    return (value > 0) - (value < 0)


def _split(chamber, normal, offset):
    """
    Cuts a chamber along <m, normal> + offset = 0 when the hyperplane crosses its interior
    """

    values = [linalg.dot(vertex, normal) + offset for vertex in chamber.vertices]
    if min(values) >= 0 or max(values) <= 0:
        return [chamber]
    negated = tuple(-x for x in normal)
    dimension = chamber.dimension
    upper = intersect(chamber, Polyhedron.from_hrep(dimension, [(normal, offset)]))
    lower = intersect(chamber, Polyhedron.from_hrep(dimension, [(negated, -offset)]))
    return [upper, lower]


def chambers(p, hyperplanes):
    """
    Top dimensional pieces of a bounded polyhedron cut by (normal, offset) hyperplanes
    """

    pieces = [p]
    for normal, offset in hyperplanes:
        if linalg.is_zero(normal):
            continue
        pieces = [piece for chamber in pieces for piece in _split(chamber, normal, offset)]
    return pieces


def arrangement_faces(p, hyperplanes):
    """
    Every face of every chamber, deduplicated, as (vertex set, dimension) sorted by dimension
    """

    found = {}
    for chamber in chambers(p, hyperplanes):
        found.update(chamber.faces())
    return sorted(found.items(), key=lambda item: (item[1], sorted(item[0])))


def face_sample(vertex_set):
    """
    Vertex barycenter, a rational point in the relative interior of the face
    """

    count = len(vertex_set)
    return tuple(sum(coordinates, linalg.as_fraction(0)) / count for coordinates in zip(*vertex_set))


@contract(minus=Polyhedron, plus=Polyhedron)
def arrangement_cells(minus, plus):
    """
    The complex of all faces of minus cut by every hyperplane of plus, with cover relations
    """

    hyperplanes = plus.hyperplanes() if not plus.is_empty else []
    faces = arrangement_faces(minus, hyperplanes)

    cells = []
    for vertex_set, dimension in faces:
        sample = face_sample(vertex_set)
        cells.append(Cell(
            polyhedron=hull(sorted(vertex_set), dimension=minus.dimension),
            dim=dimension,
            sign_vector=[_sign(linalg.dot(sample, normal) + offset) for normal, offset in hyperplanes],
            inside=plus.contains_point(sample),
        ))

    incidence = []
    for low, (low_set, low_dim) in enumerate(faces):
        for high, (high_set, high_dim) in enumerate(faces):
            if high_dim == low_dim + 1 and low_set < high_set:
                incidence.append((low, high))

    log.debug('Arrangement of %d hyperplanes has %d cells', len(hyperplanes), len(cells))
    return CellComplex(cells=cells, incidence=incidence, hyperplanes=list(hyperplanes))


def default_half_space(polys):
    """
    (normal, bound) with normal the sum of the dual tail cone generators and bound past
    every vertex by the truncation margin
    """

    tail = polys[0].tail_cone()
    generators = dual_cone(tail).generators
    normal = tuple([0] * polys[0].dimension)
    for generator in generators:
        normal = linalg.add(normal, generator)
    bound = max(linalg.dot(vertex, normal) for p in polys for vertex in p.vertices)
    return normal, bound + const.TOREXT_TRUNCATION_MARGIN


@contract(p=Polyhedron)
def truncate(p, half_space):
    """
    p cut by {<m, normal> <= bound}; the half-space must bound p and keep all its vertices
    """

    if p.is_empty or p.is_bounded:
        return p
    normal, bound = half_space
    normal = linalg.as_vector(normal)
    if p.lines or any(linalg.dot(ray, normal) <= 0 for ray in p.rays):
        raise TruncationError('half-space does not bound {p}'.format(p=p))
    if any(linalg.dot(vertex, normal) > bound for vertex in p.vertices):
        raise TruncationError('half-space cuts off vertices of {p}'.format(p=p))
    negated = tuple(-x for x in normal)
    return intersect(p, Polyhedron.from_hrep(p.dimension, [(negated, bound)]))


@contract(minus=Polyhedron, plus=Polyhedron)
def components(minus, plus):
    """
    Connected components of minus \\ plus, ordered by the sorted vertices of their closure
    """

    truncated = False
    if not minus.is_bounded or (not plus.is_empty and not plus.is_bounded):
        if not plus.is_empty and plus.tail_cone() != minus.tail_cone():
            raise TruncationError('components need equal tail cones for unbounded inputs')
        half_space = default_half_space([p for p in (minus, plus) if not p.is_empty])
        minus = truncate(minus, half_space)
        plus = truncate(plus, half_space)
        truncated = True

    complex_ = arrangement_cells(minus, plus)
    graph = networkx.Graph()
    outside = complex_.outside_cells()
    graph.add_nodes_from(outside)
    outside_set = set(outside)
    graph.add_edges_from(
        (low, high) for low, high in complex_.incidence if low in outside_set and high in outside_set
    )

    found = []
    for indices in networkx.connected_components(graph):
        indices = sorted(indices)
        vertices = sorted({v for index in indices for v in complex_.cells[index].polyhedron.vertices})
        pieces = [
            complex_.cells[index].polyhedron for index in indices
            if complex_.cells[index].dim == minus.dim
        ]
        found.append(Component(
            cells=indices,
            closure=hull(vertices, dimension=minus.dimension),
            pieces=pieces,
        ))
    found.sort(key=lambda component: (component.closure.vertices, component.cells))

    core = intersect(plus, minus) if not plus.is_empty else Polyhedron.empty(minus.dimension)
    log.info('Difference splits into %d components', len(found))
    return ComponentDecomposition(components=found, core=core, complex=complex_, truncated=truncated)


def _component_volume(component):
    return sum((piece.volume() for piece in component.pieces), linalg.as_fraction(0))


def nabla_of(component, core):
    """
    The convex union of a component with the core, verified to be the set union
    """

    if isinstance(component, Polyhedron):
        component = Component(cells=[], closure=component, pieces=[component])

    points = list(component.closure.vertices) + list(core.vertices)
    union = hull(points, dimension=component.closure.dimension)
    pieces = list(component.pieces) + ([core] if not core.is_empty else [])

    if not all(union.contains(piece) for piece in pieces):
        raise UnionNotConvexError('hull does not contain its pieces')

    target = union.dim - 1
    for normal, offset in union.inequalities:
        on_facet = [
            vertex for piece in pieces for vertex in piece.vertices
            if linalg.dot(vertex, normal) + offset == 0
        ]
        if not on_facet or affine_rank(on_facet) < target:
            raise UnionNotConvexError('union not convex: facet {normal} is not supported by a piece'.format(
                normal=normal))

    if union.is_full_dimensional:
        expected = _component_volume(component) + core.volume()
        if union.volume() != expected:
            raise UnionNotConvexError('union not convex: volume {got} != {expected}'.format(
                got=union.volume(), expected=expected))
    return union


@contract(decomposition=ComponentDecomposition)
def sigma_family_from_components(decomposition):
    """
    The convex unions nabla_0, ..., nabla_n of the components with the core
    """
    return [nabla_of(component, decomposition.core) for component in decomposition.components]


def union_is_convex(polys):
    """
    Whether the union of polytopes is convex: every arrangement face of the hull
    cut by all their hyperplanes has its sample in one of them
    """

    polys = [p for p in polys if not p.is_empty]
    if not polys:
        return True
    union = hull([vertex for p in polys for vertex in p.vertices], dimension=polys[0].dimension)
    hyperplanes = [plane for p in polys for plane in p.hyperplanes()]
    for vertex_set, __ in arrangement_faces(union, hyperplanes):
        sample = face_sample(vertex_set)
        if not any(p.contains_point(sample) for p in polys):
            return False
    return True
