"""
Equivariant extension sequences of nef line bundles: the long Koszul sequence of a
family, the universal extension of O(minus) by O(plus) built from the components of
minus \\ plus, single extensions obtained by pushout, and class arithmetic.
"""



import logging

from contracts import contract

from toric_extensions import const
from toric_extensions.data import (
    ExtClass,
    Summand,
    SheafTerm,
    LatticeRefinement,
    ExtensionSequence,
)
from toric_extensions.exceptions import (
    LatticeError,
    ExactnessError,
    ExtClassError,
    SequenceCertificationError,
)
from toric_extensions.fans import divisor_of, refine_by_polyhedra
from toric_extensions.filtrations import (
    PushoutQuotient,
    line_bundle_filtration,
    pushout_filtration,
    squish,
    stretch,
)
from toric_extensions.geometry import linalg
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.lattice import Lattice, lattice_join, order_in_quotient
from toric_extensions.geometry.polyhedron import Polyhedron, hull, intersect, lattice_points
from toric_extensions.koszul import PolyFunctor, koszul_complex, verify_exactness_everywhere
from toric_extensions.topology import components, sigma_family_from_components

log = logging.getLogger(__name__)


def kernel_basis(size):
    """
    The embedding of {e_i - e_0}: a row of -1s over the identity
    """
    return [[-1] * size] + [[int(i == j) for j in range(size)] for i in range(size)]


def sum_map(size):
    return [[1] * (size + 1)]


def _as_entry(value):
    value = linalg.as_fraction(value)
    return int(value) if value.denominator == 1 else value


def label_for(p, names, lattice, fallback):
    """
    The name of an input polyhedron equal to p up to a lattice translation, else fallback
    """

    for name, candidate in sorted((names or {}).items()):
        if candidate.is_empty or p.is_empty or candidate.dimension != p.dimension:
            continue
        if len(candidate.vertices) != len(p.vertices):
            continue
        shift = linalg.sub(p.vertices[0], candidate.vertices[0])
        if lattice.contains(shift) and candidate.translate(shift) == p:
            return name
    return fallback


def _summand(p, f, lattice, names, fallback):
    return Summand(
        label=label_for(p, names, lattice, fallback),
        polyhedron=p,
        divisor=divisor_of(p, f),
        lattice=lattice,
    )


def _term(polys, f, lattice, names, fallbacks):
    return SheafTerm(summands=[_summand(p, f, lattice, names, fallback) for p, fallback in zip(polys, fallbacks)])


def _chart_window(polys, lattice):
    vertices = [vertex for p in polys if not p.is_empty for vertex in p.vertices]
    if not vertices:
        return []
    margin = const.TOREXT_CERTIFICATION_MARGIN
    dimension = len(vertices[0])
    low = [min(vertex[i] for vertex in vertices) - margin for i in range(dimension)]
    high = [max(vertex[i] for vertex in vertices) + margin for i in range(dimension)]
    corners = [
        tuple(high[i] if (mask >> i) & 1 else low[i] for i in range(dimension))
        for mask in range(2 ** dimension)
    ]
    return lattice_points(hull(corners, dimension=dimension), lattice)


def _restricted_rank(matrix, rows, columns):
    rows_kept = [[matrix[r][c] for c in columns] for r in rows]
    if not rows_kept or not columns:
        return 0
    return linalg.rank(rows_kept, len(columns))


def certify_chartwise(term_polys, maps, f, lattice):
    """
    On every maximal cone and in every degree of a window around the polytopes, the
    complex of chart sections with the given matrices is exact
    """

    coefficients = [[divisor_of(p, f).as_mapping() for p in polys] for polys in term_polys]
    generators = {ray: f.generator(ray) for ray in f.rays}
    window = _chart_window([p for polys in term_polys for p in polys], lattice)

    for cone in f.maximal_cones:
        for m in window:
            pairings = {ray: linalg.dot(m, generators[ray]) for ray in cone.rays}
            present = [
                [index for index, mapping in enumerate(term) if all(pairings[ray] >= -mapping[ray] for ray in cone.rays)]
                for term in coefficients
            ]
            for k, kept in enumerate(present):
                outgoing = _restricted_rank(maps[k], present[k + 1], kept) if k < len(maps) else 0
                incoming = _restricted_rank(maps[k - 1], kept, present[k - 1]) if k > 0 else 0
                if outgoing + incoming != len(kept):
                    raise SequenceCertificationError(
                        'not exact at term {k} on {cone} in degree {m}'.format(k=k, cone=cone, m=m)
                    )
    log.debug('Certified a %d-term sequence on %d charts over %d degrees',
              len(term_polys), len(f.maximal_cones), len(window))
    return True


@contract(plus=Polyhedron, minus=Polyhedron, lattice=Lattice)
def refine_lattice_for_intersection(plus, minus, lattice, f=None):
    """
    The smallest refinement of lattice making plus & minus a lattice polyhedron, its dual
    and the stretch factor d_rho = order of v_rho in N / N~ for every ray of f
    """

    core = intersect(plus, minus)
    if core.is_empty:
        raise LatticeError('plus and minus do not meet')

    refined = lattice_join(lattice, core.vertices)
    dual = refined.dual()
    rays, factors = [], []
    if f is not None:
        coarse_dual = lattice.dual()
        rays = list(f.rays)
        factors = [order_in_quotient(coarse_dual.primitive_along(ray), dual, coarse_dual) for ray in rays]
    if refined != lattice:
        log.info('Refined the character lattice to %s with stretch factors %s', refined, factors)
    return LatticeRefinement(lattice=refined, dual_lattice=dual, rays=rays, stretch_factors=factors)


@contract(functor=PolyFunctor)
def long_koszul_sequence(functor, names=None):
    """
    0 -> (+) O(F(I')), #I' = |I| -> ... -> O(F(empty)) -> 0 with the Koszul boundaries
    """

    complex_ = koszul_complex(functor)
    f = functor.fan
    lattice = f.lattice.dual()

    terms = []
    for degree in range(functor.index_count, -1, -1):
        labels = complex_.labels[degree]
        polys = [functor.value(label) for label in labels]
        fallbacks = ['F{label}'.format(label=label) for label in labels]
        terms.append(_term(polys, f, lattice, names, fallbacks))
    maps = [complex_.boundaries[degree] for degree in range(functor.index_count, 0, -1)]

    certified = False
    if const.TOREXT_VERIFY_SEQUENCES:
        report = verify_exactness_everywhere(functor)
        if not report.passed:
            raise ExactnessError('the Koszul sequence is not exact on every chart', report=report)
        certified = True

    sequence = ExtensionSequence(
        kind=const.SEQUENCE_KIND_LONG_KOSZUL,
        terms=terms,
        maps=maps,
        fan=f,
        certified=certified,
    )
    sequence.validate()
    return sequence


def _middle_filtration(plus, core, nablas, f, refinement, functional=None):
    """
    stretch -> pushout -> squish: the filtration of the middle sheaf on the original variety
    """

    factors = refinement.as_mapping()
    fine = f.with_lattice(refinement.dual_lattice)
    plus_filtration = stretch(line_bundle_filtration(divisor_of(plus, f)), factors)
    core_filtration = line_bundle_filtration(divisor_of(core, fine))
    nabla_filtrations = [line_bundle_filtration(divisor_of(nabla, fine)) for nabla in nablas]
    pushed = pushout_filtration(
        core_filtration, plus_filtration, nabla_filtrations, kernel_basis(len(nablas) - 1), functional
    )
    return squish(pushed, factors)


def _quotient_maps(size, functional=None):
    """
    The left and right maps of a pushout sequence in the quotient basis
    """

    if functional is None:
        functional = [[int(i == j) for j in range(size)] for i in range(size)]
    quotient = PushoutQuotient(kernel_basis(size), functional)
    columns = [quotient.image_vector(quotient.plus_index(copy)) for copy in range(quotient.copies)]
    left = [[_as_entry(column[row]) for column in columns] for row in range(quotient.dimension)]
    right = [[int(index >= quotient.copies) for index in quotient.free]]
    return left, right


def _zero_extension(plus, minus, f, names, count):
    lattice = f.lattice.dual()
    sequence = ExtensionSequence(
        kind=const.SEQUENCE_KIND_SHORT_UNIVERSAL,
        terms=[
            SheafTerm(summands=[]),
            _term([minus], f, lattice, names, ['minus']),
            _term([minus], f, lattice, names, ['minus']),
        ],
        maps=[[[]], [[1]]],
        classes=[],
        fan=f,
        core=intersect(plus, minus),
        zero_ext=True,
        message='zero Ext space: minus \\ plus has {count} component(s)'.format(count=count),
    )
    log.info('Extension space is zero')
    return sequence


@contract(plus=Polyhedron, minus=Polyhedron, f=Fan)
def universal_extension(plus, minus, f, names=None):
    """
    The universal degree zero extension 0 -> O(plus)^n -> H -> O(minus) -> 0, where
    n + 1 is the number of components of minus \\ plus
    """

    decomposition = components(minus, plus)
    count = decomposition.count
    if count <= 1:
        return _zero_extension(plus, minus, f, names, count)

    size = count - 1
    core = decomposition.core
    nablas = sigma_family_from_components(decomposition)
    work = refine_by_polyhedra(f, [plus, minus, core] + nablas)
    lattice = work.lattice.dual()
    classes = [ExtClass.component_class(count, index) for index in range(1, count)]
    nabla_fallbacks = ['nabla_{i}'.format(i=i) for i in range(count)]

    if core == plus:
        refinement = LatticeRefinement(
            lattice=lattice, dual_lattice=work.lattice, rays=list(work.rays), stretch_factors=[1] * len(work.rays)
        )
        maps = [kernel_basis(size), sum_map(size)]
        terms = [
            _term([plus] * size, work, lattice, names, ['plus'] * size),
            _term(nablas, work, lattice, names, nabla_fallbacks),
            _term([minus], work, lattice, names, ['minus']),
        ]
        certified = False
        if const.TOREXT_VERIFY_SEQUENCES:
            certified = certify_chartwise([[plus] * size, nablas, [minus]], maps, work, lattice)
        sequence = ExtensionSequence(
            kind=const.SEQUENCE_KIND_SHORT_UNIVERSAL,
            terms=terms,
            maps=maps,
            classes=classes,
            fan=work,
            core=core,
            nablas=nablas,
            refinement=refinement,
            certified=certified,
        )
        sequence.validate()
        log.info('Universal extension with %d components (inclusion case)', count)
        return sequence

    refinement = refine_lattice_for_intersection(plus, minus, lattice, work)
    fine = work.with_lattice(refinement.dual_lattice)
    upper_maps = [kernel_basis(size), sum_map(size)]
    upper_terms = [
        _term([core] * size, fine, refinement.lattice, names, ['core'] * size),
        _term(nablas, fine, refinement.lattice, names, nabla_fallbacks),
        _term([minus], fine, refinement.lattice, names, ['minus']),
    ]
    certified = False
    if const.TOREXT_VERIFY_SEQUENCES:
        certified = certify_chartwise([[core] * size, nablas, [minus]], upper_maps, fine, refinement.lattice)

    middle = _middle_filtration(plus, core, nablas, work, refinement)
    left, right = _quotient_maps(size)
    sequence = ExtensionSequence(
        kind=const.SEQUENCE_KIND_SHORT_UNIVERSAL,
        terms=[
            _term([plus] * size, work, lattice, names, ['plus'] * size),
            SheafTerm(summands=[], label='H', filtration=middle),
            _term([minus], work, lattice, names, ['minus']),
        ],
        maps=[left, right],
        classes=classes,
        fan=work,
        core=core,
        nablas=nablas,
        refinement=refinement,
        upper_terms=upper_terms,
        upper_maps=upper_maps,
        middle_filtration=middle,
        certified=certified,
    )
    sequence.validate()
    log.info('Universal extension with %d components (general position, stretch factors %s)',
             count, refinement.stretch_factors)
    return sequence


def _functional_for(size, index, functional):
    if functional is not None:
        functional = [int(value) for value in functional]
        if len(functional) != size:
            raise ExtClassError('a functional on {size} copies needs {size} entries'.format(size=size))
        return functional
    if index is None or index < 0 or index > size:
        raise ExtClassError('index {index} out of range 0..{size}'.format(index=index, size=size))
    if index == 0:
        return [-1] * size
    return [int(j == index - 1) for j in range(size)]


@contract(sequence=ExtensionSequence)
def pushout_single(sequence, index=None, functional=None):
    """
    The rank two extension 0 -> O(plus) -> H -> O(minus) -> 0 obtained by pushing the
    universal extension out along the i-th projection (index 0: the all -1 functional)
    or along any integer functional. Returns (sequence, class, filtration of H)
    """

    if sequence.kind != const.SEQUENCE_KIND_SHORT_UNIVERSAL:
        raise ExtClassError('single extensions are pushed out of a universal extension')
    size = len(sequence.classes)
    if size == 0:
        raise ExtClassError('index out of range: the extension space is zero')
    row = _functional_for(size, index, functional)
    ext_class = ExtClass(coordinates=row, component_count=size + 1)

    plus = sequence.terms[0].summands[0].polyhedron
    minus = sequence.terms[-1].summands[0].polyhedron
    filtration = _middle_filtration(
        plus, sequence.core, sequence.nablas, sequence.fan, sequence.refinement, functional=[row]
    )
    left, right = _quotient_maps(size, functional=[row])

    label = 'H_{index}'.format(index=index) if functional is None else 'H'
    single = ExtensionSequence(
        kind=const.SEQUENCE_KIND_SINGLE_PUSHOUT,
        terms=[
            SheafTerm(summands=[sequence.terms[0].summands[0]]),
            SheafTerm(summands=[], label=label, filtration=filtration),
            SheafTerm(summands=[sequence.terms[-1].summands[0]]),
        ],
        maps=[left, right],
        classes=[ext_class],
        fan=sequence.fan,
        core=sequence.core,
        nablas=sequence.nablas,
        refinement=sequence.refinement,
        middle_filtration=filtration,
        certified=sequence.certified,
    )
    single.validate()
    log.debug('Pushed out along %s on %s', row, minus)
    return single, ext_class, filtration


def class_sum(classes):
    """
    Coordinatewise sum, the class level Baer sum
    """

    classes = list(classes)
    if not classes:
        raise ExtClassError('class_sum needs at least one class')
    counts = {ext_class.component_count for ext_class in classes}
    if len(counts) != 1:
        raise ExtClassError('mismatched component counts {counts}'.format(counts=sorted(counts)))
    coordinates = [sum(values) for values in zip(*[ext_class.coordinates for ext_class in classes])]
    return ExtClass(coordinates=coordinates, component_count=counts.pop())
