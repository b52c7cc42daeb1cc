"""
Degree-wise H^0 and H^1 of O(plus - minus) from the topology of minus \\ (plus - m),
and the Cech complex of the same sheaf over the affine charts as an independent check
"""



import logging
import itertools
from fractions import Fraction

from contracts import contract

from toric_extensions.data import DegreeEntry, GradedTable
from toric_extensions.exceptions import InputError, OracleMismatchError, UnboundedEnumerationError
from toric_extensions.fans import divisor_of
from toric_extensions.geometry import linalg
from toric_extensions.geometry.cone import intersect_cones
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.lattice import Lattice
from toric_extensions.geometry.polyhedron import Polyhedron, intersect, lattice_points, minkowski_sum
from toric_extensions.topology import components

log = logging.getLogger(__name__)


@contract(minus=Polyhedron, plus=Polyhedron)
def reduced_dims(minus, plus, m):
    """
    (dim H~^-1, dim H~^0) of minus \\ (plus - m), which are h^0 and h^1 in degree m
    """

    m = linalg.as_vector(m)
    shifted = plus.translate(tuple(-x for x in m))
    if shifted.contains(minus):
        return 1, 0
    if intersect(minus, shifted).is_empty:
        # the difference is all of minus, which is connected
        return 0, 0
    count = components(minus, shifted).count
    return 0, max(count - 1, 0)


@contract(minus=Polyhedron, plus=Polyhedron)
def ext_dim_equivariant(minus, plus):
    """
    Dimension of the degree zero equivariant Ext space: #components(minus \\ plus) - 1
    """
    return reduced_dims(minus, plus, tuple([0] * minus.dimension))[1]


def _thresholds(plus, minus, f):
    """
    Per ray the bound t with sections in degree m over a chart iff <m, v> >= t on its rays
    """

    lower = divisor_of(plus, f).as_mapping()
    upper = divisor_of(minus, f).as_mapping()
    return {ray: upper[ray] - lower[ray] for ray in f.rays}


def _has_section(rays, thresholds, generators, m):
    return all(linalg.dot(m, generators[ray]) >= thresholds[ray] for ray in rays)


@contract(plus=Polyhedron, minus=Polyhedron, f=Fan)
def cech_h_degree(plus, minus, f, m):
    """
    (h^0, h^1) in degree m from the ranks of the Cech complex over the maximal cones
    """

    m = linalg.as_vector(m)
    thresholds = _thresholds(plus, minus, f)
    generators = {ray: f.generator(ray) for ray in f.rays}
    cones = list(f.maximal_cones)

    def rays_of(indices):
        meet = cones[indices[0]]
        for index in indices[1:]:
            meet = intersect_cones(meet, cones[index])
        return meet.rays

    def basis(size):
        return [
            indices for indices in itertools.combinations(range(len(cones)), size)
            if _has_section(rays_of(indices), thresholds, generators, m)
        ]

    zero, one, two = basis(1), basis(2), basis(3)
    zero_positions = {indices: column for column, indices in enumerate(zero)}
    one_positions = {indices: column for column, indices in enumerate(one)}

    d0 = []
    for i, j in one:
        row = [0] * len(zero)
        if (j,) in zero_positions:
            row[zero_positions[(j,)]] += 1
        if (i,) in zero_positions:
            row[zero_positions[(i,)]] -= 1
        d0.append(row)

    d1 = []
    for i, j, k in two:
        row = [0] * len(one)
        for sign, face in ((1, (j, k)), (-1, (i, k)), (1, (i, j))):
            if face in one_positions:
                row[one_positions[face]] += sign
        d1.append(row)

    rank0 = linalg.rank(d0, len(zero)) if zero else 0
    rank1 = linalg.rank(d1, len(one)) if one else 0
    h0 = len(zero) - rank0
    h1 = len(one) - rank1 - rank0
    log.debug('Cech complex in degree %s: dims %s, ranks %s -> (%s, %s)',
              m, (len(zero), len(one), len(two)), (rank0, rank1), h0, h1)
    return h0, h1


def _serializable_degree(point):
    return [int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in point]


@contract(plus=Polyhedron, minus=Polyhedron)
def graded_table(plus, minus, f=None, oracle=False):
    """
    h^0 and h^1 for every lattice degree of the window plus + (-minus); all other
    degrees are zero. With oracle=True every entry is recomputed from the Cech complex
    """

    if not plus.is_bounded or not minus.is_bounded:
        raise UnboundedEnumerationError(
            'graded tables need polytopes; query single degrees with reduced_dims instead'
        )
    if oracle and f is None:
        raise InputError('the Cech oracle needs a fan')

    lattice = f.lattice.dual() if f is not None else Lattice.standard(plus.dimension)
    window = minkowski_sum(plus, minus.negate())

    entries = []
    for m in lattice_points(window, lattice):
        h0, h1 = reduced_dims(minus, plus, m)
        if oracle:
            expected = cech_h_degree(plus, minus, f, m)
            if expected != (h0, h1):
                raise OracleMismatchError('degree {m}: components give {got}, Cech gives {expected}'.format(
                    m=m, got=(h0, h1), expected=expected))
        entries.append(DegreeEntry(degree=_serializable_degree(m), h0=h0, h1=h1))

    table = GradedTable(entries=entries, window=window, oracle_checked=oracle)
    log.info('Graded table over %d degrees: h0 total %d, h1 total %d',
             len(entries), table.h0_total, table.h1_total)
    return table
