"""
All pure data objects that the computations produce. This avoids generic
dictionaries being passed around between the pipeline stages and the
serializers.
"""



from django.core.exceptions import ValidationError

from toric_extensions import const
from toric_extensions.base_data import (
    DictField,
    EnumField,
    ListField,
    ValueField,
    StringField,
    BooleanField,
    IntegerField,
    BaseDataObject,
    RelatedObjectField
)
from toric_extensions.geometry import linalg
from toric_extensions.geometry.cone import Cone
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.lattice import Lattice
from toric_extensions.geometry.polyhedron import Polyhedron
from toric_extensions.geometry.subspace import Filtration


class ToricDivisor(BaseDataObject):
    """
    D = sum of coefficient * D_ray over the rays of the carrying fan
    """

    # primitive ray directions, in fan order
    rays = ListField()

    # integer coefficients aligned with rays
    coefficients = ListField()

    def coefficient(self, ray):
        return self.coefficients[[tuple(r) for r in self.rays].index(tuple(ray))]

    def as_mapping(self):
        return {tuple(ray): coefficient for ray, coefficient in zip(self.rays, self.coefficients)}

    @property
    def is_zero(self):
        return all(coefficient == 0 for coefficient in self.coefficients)

    def __add__(self, other):
        if [tuple(r) for r in self.rays] != [tuple(r) for r in other.rays]:
            raise ValueError('divisors live on different ray sets')
        return ToricDivisor(
            rays=list(self.rays),
            coefficients=[a + b for a, b in zip(self.coefficients, other.coefficients)],
        )

    def validate(self):
        """
        One integer coefficient per ray
        """

        if len(self.rays) != len(self.coefficients):
            raise ValidationError('ToricDivisor needs exactly one coefficient per ray')
        if not all(isinstance(coefficient, int) for coefficient in self.coefficients):
            raise ValidationError('ToricDivisor coefficients must be integers')


class CartierData(BaseDataObject):
    """
    The minimizing vertex m_sigma for each maximal cone
    """

    cones = ListField()

    points = ListField()

    def point_for(self, cone):
        return self.points[self.cones.index(cone)]


class Cell(BaseDataObject):
    """
    One face of the hyperplane arrangement cut into a polyhedron
    """

    polyhedron = ValueField(Polyhedron)

    dim = IntegerField()

    # -1, 0 or 1 per hyperplane at the relative interior sample
    sign_vector = ListField()

    # whether the relative interior lies inside the subtracted polyhedron
    inside = BooleanField()


class CellComplex(BaseDataObject):
    """
    All faces of an arrangement, with cover relations (lower index, higher index)
    """

    cells = ListField()

    incidence = ListField()

    # (normal, offset) pairs that cut the complex
    hyperplanes = ListField()

    def outside_cells(self):
        return [index for index, cell in enumerate(self.cells) if not cell.inside]


class Component(BaseDataObject):
    """
    A connected component of a polyhedron difference
    """

    # indices into the cell complex
    cells = ListField()

    # convex hull of the component
    closure = ValueField(Polyhedron)

    # full-dimensional cells, whose union is the closure of the component
    pieces = ListField()


class ComponentDecomposition(BaseDataObject):
    """
    Connected components of minus \\ plus in canonical order
    """

    components = ListField()

    # plus intersected with minus
    core = ValueField(Polyhedron)

    complex = RelatedObjectField(CellComplex)

    # whether unbounded inputs were cut down by a common half-space first
    truncated = BooleanField(default=False)

    @property
    def count(self):
        return len(self.components)


class DegreeEntry(BaseDataObject):
    """
    h0 and h1 of a difference line bundle in one lattice degree
    """

    degree = ListField()

    h0 = IntegerField(default=0)

    h1 = IntegerField(default=0)

    @property
    def is_zero(self):
        return self.h0 == 0 and self.h1 == 0


class GradedTable(BaseDataObject):
    """
    Degree-wise cohomology over the enumeration window
    """

    entries = ListField()

    window = ValueField(Polyhedron)

    # whether every entry was confirmed by the Cech complex
    oracle_checked = BooleanField(default=False)

    def entry(self, degree):
        degree = linalg.as_vector(degree)
        for entry in self.entries:
            if linalg.as_vector(entry.degree) == degree:
                return entry
        return DegreeEntry(degree=list(degree), h0=0, h1=0)

    @property
    def h0_total(self):
        return sum(entry.h0 for entry in self.entries)

    @property
    def h1_total(self):
        return sum(entry.h1 for entry in self.entries)

    def support(self, i):
        """
        Degrees where h^i is nonzero
        """

        attribute = 'h{i}'.format(i=i)
        return [tuple(entry.degree) for entry in self.entries if getattr(entry, attribute)]

    def nonzero_entries(self):
        return [entry for entry in self.entries if not entry.is_zero]


class Summand(BaseDataObject):
    """
    One line bundle O(P) inside a term of a sequence
    """

    label = StringField()

    polyhedron = ValueField(Polyhedron)

    divisor = RelatedObjectField(ToricDivisor)

    # M or its refinement
    lattice = ValueField(Lattice)


class SheafTerm(BaseDataObject):
    """
    A term of a sequence: a direct sum of line bundles, or a sheaf known only by
    its filtration
    """

    summands = ListField(default=[])

    label = StringField()

    filtration = ValueField(Filtration)

    @property
    def rank(self):
        if self.filtration is not None and not self.summands:
            return self.filtration.ambient_dim
        return len(self.summands)


class ExtClass(BaseDataObject):
    """
    A degree zero extension class in the basis [C_1], ..., [C_n]; [C_0] is minus
    the sum of the others
    """

    coordinates = ListField()

    component_count = IntegerField()

    @classmethod
    def component_class(cls, component_count, index):
        """
        [C_index]
        """

        size = component_count - 1
        if index == 0:
            return cls(coordinates=[-1] * size, component_count=component_count)
        return cls(coordinates=[int(i == index - 1) for i in range(size)], component_count=component_count)

    @property
    def is_zero(self):
        return all(value == 0 for value in self.coordinates)

    def __neg__(self):
        return ExtClass(coordinates=[-value for value in self.coordinates], component_count=self.component_count)

    def validate(self):
        if self.component_count is None or self.component_count < 1:
            raise ValidationError('ExtClass needs at least one component')
        if len(self.coordinates) != self.component_count - 1:
            raise ValidationError('ExtClass needs one coordinate per component beyond the first')


class LatticeRefinement(BaseDataObject):
    """
    The refined character lattice, its dual and the per-ray stretch factors
    """

    lattice = ValueField(Lattice)

    dual_lattice = ValueField(Lattice)

    rays = ListField()

    stretch_factors = ListField()

    def as_mapping(self):
        return {tuple(ray): factor for ray, factor in zip(self.rays, self.stretch_factors)}

    @property
    def is_trivial(self):
        return all(factor == 1 for factor in self.stretch_factors)


class ExtensionSequence(BaseDataObject):
    """
    A sequence of sheaves with integer matrices between consecutive terms
    """

    kind = EnumField(
        allowed_values=[
            const.SEQUENCE_KIND_LONG_KOSZUL,
            const.SEQUENCE_KIND_SHORT_UNIVERSAL,
            const.SEQUENCE_KIND_SINGLE_PUSHOUT,
        ]
    )

    terms = ListField()

    # maps[k] has one row per summand of terms[k + 1] and one column per summand of terms[k]
    maps = ListField(default=[])

    # the classes the sequence corresponds to, one per left hand copy
    classes = ListField(default=[])

    fan = ValueField(Fan)

    core = ValueField(Polyhedron)

    nablas = ListField(default=[])

    refinement = RelatedObjectField(LatticeRefinement)

    # core level sequence on the refined variety
    upper_terms = ListField(default=[])

    upper_maps = ListField(default=[])

    middle_filtration = ValueField(Filtration)

    certified = BooleanField(default=False)

    zero_ext = BooleanField(default=False)

    message = StringField()

    @property
    def is_general_position(self):
        return bool(self.upper_maps)

    def validate(self):
        """
        Matrix shapes fit the terms and consecutive maps compose to zero
        """

        if len(self.maps) != max(len(self.terms) - 1, 0):
            raise ValidationError('a sequence of {count} terms needs {maps} maps'.format(
                count=len(self.terms), maps=len(self.terms) - 1))
        for index, matrix in enumerate(self.maps):
            rows, columns = self.terms[index + 1].rank, self.terms[index].rank
            if len(matrix) != rows or any(len(row) != columns for row in matrix):
                raise ValidationError('map {index} does not have shape {rows}x{columns}'.format(
                    index=index, rows=rows, columns=columns))
        for left, right in zip(self.maps, self.maps[1:]):
            for row in right:
                for column in range(len(left[0]) if left else 0):
                    if sum(row[k] * left[k][column] for k in range(len(row))) != 0:
                        raise ValidationError('consecutive maps do not compose to zero')


class ConeExactness(BaseDataObject):
    """
    Exactness of the localized evaluation complexes at one cone
    """

    cone = ValueField(Cone)

    lattice_exact = BooleanField()

    cell_exact = BooleanField()

    # failing arrangement samples, sorted
    witnesses = ListField(default=[])

    lattice_witnesses = ListField(default=[])

    samples_checked = IntegerField(default=0)


class ExactnessReport(BaseDataObject):
    """
    Result of checking a functor on every cone and every arrangement cell
    """

    cones = ListField(default=[])

    passed = BooleanField()

    def failures(self):
        return [entry for entry in self.cones if not entry.cell_exact]


class JobSpec(BaseDataObject):
    """
    One command with its resolved inputs and options
    """

    command = EnumField(allowed_values=const.COMMANDS)

    # name -> domain value
    inputs = DictField(default={})

    options = DictField(default={})

    def validate(self):
        """
        The degree option belongs to cohomology only
        """

        if self.command is None:
            raise ValidationError('JobSpec needs a command')
        if self.options.get('degree') is not None and self.command != const.COMMAND_COHOMOLOGY:
            raise ValidationError("the degree option is only valid for '{command}'".format(
                command=const.COMMAND_COHOMOLOGY))
