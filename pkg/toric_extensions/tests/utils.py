"""
Shared fixtures for the test suites: the fans and polytope pairs that the
computations are checked against, a pool of small random polytopes, and an
independent grid flood fill for counting connected components
"""



import random
from fractions import Fraction

import networkx

from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.polyhedron import Polyhedron, hull, is_lattice_polyhedron
from toric_extensions.geometry.lattice import Lattice
from toric_extensions.koszul import PolyFunctor

F1_RAYS = [(1, 0), (0, 1), (-1, -1), (0, -1)]
CREMONA_RAYS = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
TWISTED_RAYS = [(1, 0), (0, 1), (-1, 0), (-2, -1), (-1, -1), (0, -1)]
POOL_RAYS = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]


def poly(*vertices):
    """
    The convex hull of the given vertices
    """
    return hull(list(vertices), dimension=len(vertices[0]))


def cyclic_fan(rays, lattice=None):
    """
    The complete plane fan whose maximal cones join consecutive rays
    """

    count = len(rays)
    return Fan.from_indices(rays, [[i, (i + 1) % count] for i in range(count)], lattice=lattice)


def f1_fan():
    return cyclic_fan(F1_RAYS)


def delta_f1(i, j):
    """
    x >= 0, y >= 0, x + y <= i + j, y <= j
    """
    return Polyhedron.from_hrep(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), i + j), ((0, -1), j)])


def f1_pair(anchored=True):
    """
    (plus, minus) = (Delta_(1,0), Delta_(0,2)); anchored moves plus up by (0, 1)
    """

    plus = delta_f1(1, 0)
    if anchored:
        plus = plus.translate((0, 1))
    return plus, delta_f1(0, 2)


def f1_names():
    return {
        '(1,0)': delta_f1(1, 0),
        '(0,1)': delta_f1(0, 1),
        '(1,1)': delta_f1(1, 1),
        '(0,2)': delta_f1(0, 2),
    }


def cremona_fan():
    return cyclic_fan(CREMONA_RAYS)


def cremona_pair():
    """
    plus = conv{0, e1, -e2}; minus = twice its negative, moved by (1, -1)
    """

    plus = poly((0, 0), (1, 0), (0, -1))
    minus = poly((1, -1), (-1, -1), (1, 1))
    return plus, minus


def twisted_fan():
    return cyclic_fan(TWISTED_RAYS)


def twisted_pair():
    """
    A pair whose intersection has the vertex (1/2, 0)
    """

    plus = poly((0, 0), (1, 0))
    minus = poly((0, -1), (1, -1), (0, 1))
    return plus, minus


def projective_line_fan():
    return Fan.from_indices([(1,), (-1,)], [[0], [1]])


def projective_line_functor():
    """
    [0, 1] over the two points, meeting in nothing
    """

    return PolyFunctor.from_values(2, {
        (): poly((0,), (1,)),
        (0,): poly((0,)),
        (1,): poly((1,)),
        (0, 1): Polyhedron.empty(1),
    }, projective_line_fan())


def pool_fan():
    return cyclic_fan(POOL_RAYS)


def random_polytope(rng, radius=4, lattice=False, attempts=200):
    """
    A full-dimensional polytope with facet normals among the pool rays and
    vertices in [-radius, radius]^2
    """

    standard = Lattice.standard(2)
    for __ in range(attempts):
        inequalities = []
        for normal in POOL_RAYS:
            if rng.random() < 0.7:
                bound = rng.randint(1, 2 * radius)
                offset = bound - rng.randint(0, radius)
                inequalities.append((normal, offset))
        # the box keeps every candidate bounded
        inequalities.extend([((1, 0), radius), ((-1, 0), radius), ((0, 1), radius), ((0, -1), radius)])
        p = Polyhedron.from_hrep(2, inequalities)
        if p.is_empty or not p.is_full_dimensional:
            continue
        if lattice and not is_lattice_polyhedron(p, standard):
            continue
        return p
    raise AssertionError('no random polytope found')


def random_pairs(seed, count, lattice=False):
    rng = random.Random(seed)
    return [(random_polytope(rng, lattice=lattice), random_polytope(rng, lattice=lattice)) for __ in range(count)]


def flood_fill_count(minus, plus, denominator=8):
    """
    Connected components of minus \\ plus on the 1/denominator grid, with 8-neighbors
    """

    step = Fraction(1, denominator)
    xs = [vertex[0] for vertex in minus.vertices]
    ys = [vertex[1] for vertex in minus.vertices]
    low_x, high_x = int(min(xs) * denominator), int(max(xs) * denominator)
    low_y, high_y = int(min(ys) * denominator), int(max(ys) * denominator)

    graph = networkx.Graph()
    for i in range(low_x, high_x + 1):
        for j in range(low_y, high_y + 1):
            point = (i * step, j * step)
            if minus.contains_point(point) and (plus.is_empty or not plus.contains_point(point)):
                graph.add_node((i, j))
    for i, j in list(graph.nodes):
        for di, dj in ((1, 0), (0, 1), (1, 1), (1, -1)):
            if (i + di, j + dj) in graph:
                graph.add_edge((i, j), (i + di, j + dj))
    return networkx.number_connected_components(graph)


def f1_document(with_fan=True):
    """
    The anchored F1 pair as an input document
    """

    document = {
        'polyhedra': {
            'plus': {'vertices': [['0', '1'], ['1', '1']]},
            'minus': {'vertices': [['0', '0'], ['2', '0'], ['0', '2']]},
        },
        'jobs': {},
    }
    if with_fan:
        document['fans'] = {
            'fan': {'rays': [['1', '0'], ['0', '1'], ['-1', '-1'], ['0', '-1']], 'cones': [[0, 1], [1, 2], [2, 3], [3, 0]]},
        }
    return document


def p1_document():
    """
    The interval functor on P^1 as an input document
    """

    return {
        'polyhedra': {
            'interval': {'vertices': [['0'], ['1']]},
            'left': {'vertices': [['0']]},
            'right': {'vertices': [['1']]},
            'nothing': {'dimension': 1, 'empty': True},
        },
        'fans': {
            'line': {'rays': [['1'], ['-1']], 'cones': [[0], [1]]},
        },
        'functors': {
            'p1': {
                'index_count': 2,
                'fan': 'line',
                'values': {'': 'interval', '0': 'left', '1': 'right', '0,1': 'nothing'},
            },
        },
    }
