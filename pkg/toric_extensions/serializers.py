"""
Serializers (Django REST Framework) for the geometric values and result records.
Rationals always travel as "p/q" strings, never as floats.
"""



import logging
from fractions import Fraction

from rest_framework import serializers

from toric_extensions.exceptions import JobError, RationalParseError
from toric_extensions.geometry.cone import Cone
from toric_extensions.geometry.fan import Fan
from toric_extensions.geometry.lattice import Lattice
from toric_extensions.geometry.polyhedron import Polyhedron
from toric_extensions.geometry.subspace import Filtration, Subspace
from toric_extensions.koszul import PolyFunctor

log = logging.getLogger(__name__)


def parse_rational(text):
    """
    -?[0-9]+(/[1-9][0-9]*)? to a Fraction in lowest terms
    """

    text = str(text)
    position = 0
    if text.startswith('-'):
        position = 1
    start = position
    while position < len(text) and text[position].isdigit():
        position += 1
    if position == start:
        raise RationalParseError(text, position)
    if position == len(text):
        return Fraction(int(text))
    if text[position] != '/':
        raise RationalParseError(text, position)

    position += 1
    start = position
    if position >= len(text) or text[position] not in '123456789':
        raise RationalParseError(text, position)
    while position < len(text) and text[position].isdigit():
        position += 1
    if position != len(text):
        raise RationalParseError(text, position)
    numerator, denominator = text.split('/')
    return Fraction(int(numerator), int(denominator))


def serialize_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{p}/{q}'.format(p=value.numerator, q=value.denominator)


class RationalField(serializers.Field):
    """
    A specialized serializer for exact rationals
    """

    # pylint: disable=arguments-differ
    def to_representation(self, value):
        """
        to json format
        """
        return serialize_rational(value)

    def to_internal_value(self, data):
        """
        from json format: "p/q" strings or integers
        """

        if isinstance(data, bool) or isinstance(data, float):
            raise serializers.ValidationError('rationals are written as integers or "p/q" strings')
        try:
            return parse_rational(data)
        except RationalParseError as ex:
            raise serializers.ValidationError(str(ex))


def vector_field(**kwargs):
    return serializers.ListField(child=RationalField(), **kwargs)


def vector_list_field(**kwargs):
    return serializers.ListField(child=vector_field(), **kwargs)


def _vectors(values):
    return [tuple(vector) for vector in values]


class ConstraintSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    <normal, x> + offset >= 0 (or = 0 for equations)
    """

    normal = vector_field()
    offset = RationalField()

    def to_representation(self, instance):
        normal, offset = instance
        return {
            'normal': [serialize_rational(x) for x in normal],
            'offset': serialize_rational(offset),
        }


class LatticeSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for Lattice
    """

    basis = vector_list_field()

    def create(self, validated_data):
        return Lattice(_vectors(validated_data['basis']))


class ConeSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for Cone
    """

    dimension = serializers.IntegerField(min_value=1)
    rays = vector_list_field(required=False, default=list)
    lineality = vector_list_field(required=False, default=list)

    def create(self, validated_data):
        generators = _vectors(validated_data['rays'])
        for line in _vectors(validated_data['lineality']):
            generators.extend([line, tuple(-x for x in line)])
        return Cone(generators, dimension=validated_data['dimension'])


class PolyhedronSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Writes both representations. Reads either one; when both are given they must agree
    """

    dimension = serializers.IntegerField(min_value=1, required=False)
    empty = serializers.BooleanField(required=False, default=False)
    vertices = vector_list_field(required=False)
    rays = vector_list_field(required=False)
    lines = vector_list_field(required=False)
    inequalities = ConstraintSerializer(many=True, required=False)
    equations = ConstraintSerializer(many=True, required=False)

    def to_representation(self, instance):
        return {
            'dimension': instance.dimension,
            'empty': instance.is_empty,
            'vertices': [[serialize_rational(x) for x in vertex] for vertex in instance.vertices],
            'rays': [[serialize_rational(x) for x in ray] for ray in instance.rays],
            'lines': [[serialize_rational(x) for x in line] for line in instance.lines],
            'inequalities': ConstraintSerializer(instance.inequalities, many=True).data,
            'equations': ConstraintSerializer(instance.equations, many=True).data,
        }

    def validate(self, attrs):
        has_vrep = 'vertices' in attrs
        has_hrep = 'inequalities' in attrs or 'equations' in attrs
        if not (has_vrep or has_hrep or attrs.get('empty')):
            raise serializers.ValidationError('a polyhedron needs vertices or inequalities')
        if 'dimension' not in attrs:
            vectors = attrs.get('vertices') or [c['normal'] for c in attrs.get('inequalities', [])] or \
                [c['normal'] for c in attrs.get('equations', [])]
            if not vectors:
                raise serializers.ValidationError('the dimension cannot be inferred')
            attrs['dimension'] = len(vectors[0])
        return attrs

    def create(self, validated_data):
        dimension = validated_data['dimension']
        if validated_data.get('empty'):
            return Polyhedron.empty(dimension)

        from_hrep = None
        if 'inequalities' in validated_data or 'equations' in validated_data:
            from_hrep = Polyhedron.from_hrep(
                dimension,
                [(tuple(c['normal']), c['offset']) for c in validated_data.get('inequalities', [])],
                [(tuple(c['normal']), c['offset']) for c in validated_data.get('equations', [])],
            )
        if 'vertices' not in validated_data:
            return from_hrep

        from_vrep = Polyhedron.from_vrep(
            _vectors(validated_data['vertices']),
            rays=_vectors(validated_data.get('rays', [])),
            lines=_vectors(validated_data.get('lines', [])),
            dimension=dimension,
        )
        if from_hrep is not None and from_hrep != from_vrep:
            raise serializers.ValidationError('the inequalities and the vertices describe different polyhedra')
        return from_vrep


class FanSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Rays, maximal cones as lists of ray indices, and an optional lattice basis for N
    """

    rays = vector_list_field()
    cones = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)))
    lattice = vector_list_field(required=False)

    def to_representation(self, instance):
        return {
            'rays': [[serialize_rational(x) for x in ray] for ray in instance.rays],
            'cones': [list(instance.cone_indices(cone)) for cone in instance.maximal_cones],
            'lattice': [[serialize_rational(x) for x in row] for row in instance.lattice.basis],
        }

    def create(self, validated_data):
        rays = _vectors(validated_data['rays'])
        for indices in validated_data['cones']:
            if any(index >= len(rays) for index in indices):
                raise serializers.ValidationError('cone {indices} refers to a missing ray'.format(indices=indices))
        lattice = Lattice(_vectors(validated_data['lattice'])) if validated_data.get('lattice') else None
        f = Fan.from_indices(rays, validated_data['cones'], lattice=lattice)
        f.validate()
        return f


class ToricDivisorSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for ToricDivisor
    """

    rays = vector_list_field()
    coefficients = serializers.ListField(child=serializers.IntegerField())


class ChainSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    One ray of a filtration: full up to lower, then the listed subspaces, then zero
    """

    ray = vector_field()
    lower = serializers.IntegerField()
    steps = serializers.ListField(child=vector_list_field(allow_empty=True))


class FiltrationSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for Filtration, with the dimension profile per ray
    """

    ambient_dim = serializers.IntegerField(min_value=1)
    chains = ChainSerializer(many=True)

    def to_representation(self, instance):
        low, high = instance.level_range()
        levels = list(range(low, high + 1))
        chains, profiles = [], {}
        for ray in instance.rays:
            lower, steps = instance.chain(ray)
            chains.append({
                'ray': [serialize_rational(x) for x in ray],
                'lower': lower,
                'steps': [[[serialize_rational(x) for x in row] for row in step.basis] for step in steps],
            })
            profiles[_ray_key(ray)] = instance.dimension_profile(levels)[ray]
        return {
            'ambient_dim': instance.ambient_dim,
            'chains': chains,
            'levels': levels,
            'profiles': profiles,
        }

    def create(self, validated_data):
        dimension = validated_data['ambient_dim']
        chains = {
            tuple(chain['ray']): (chain['lower'], [Subspace(dimension, _vectors(step)) for step in chain['steps']])
            for chain in validated_data['chains']
        }
        return Filtration(dimension, chains)


def _ray_key(vector):
    return '({values})'.format(values=','.join(serialize_rational(x) for x in vector))


class ComponentSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for Component
    """

    closure = PolyhedronSerializer()
    pieces = PolyhedronSerializer(many=True)


class ComponentDecompositionSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for ComponentDecomposition
    """

    count = serializers.IntegerField()
    components = ComponentSerializer(many=True)
    core = PolyhedronSerializer()
    truncated = serializers.BooleanField()


class DegreeEntrySerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for DegreeEntry
    """

    h0 = serializers.IntegerField()
    h1 = serializers.IntegerField()


class GradedTableSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    Only the nonzero degrees, keyed "(a,b)"
    """

    def to_representation(self, instance):
        return {
            _ray_key(entry.degree): DegreeEntrySerializer(entry).data
            for entry in instance.nonzero_entries()
        }


class ExtClassSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for ExtClass
    """

    coordinates = serializers.ListField(child=serializers.IntegerField())
    component_count = serializers.IntegerField()


class SummandSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for Summand
    """

    label = serializers.CharField()
    polyhedron = PolyhedronSerializer()
    divisor = ToricDivisorSerializer()
    lattice = LatticeSerializer()


class SheafTermSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for SheafTerm
    """

    label = serializers.CharField(allow_null=True)
    rank = serializers.IntegerField()
    summands = SummandSerializer(many=True)
    filtration = FiltrationSerializer(allow_null=True)


class LatticeRefinementSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for LatticeRefinement
    """

    lattice = LatticeSerializer()
    dual_lattice = LatticeSerializer()
    rays = vector_list_field()
    stretch_factors = serializers.ListField(child=serializers.IntegerField())


class ExtensionSequenceSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for ExtensionSequence
    """

    kind = serializers.CharField()
    terms = SheafTermSerializer(many=True)
    maps = serializers.ListField(child=serializers.ListField(child=serializers.ListField(child=RationalField())))
    classes = ExtClassSerializer(many=True)
    fan = FanSerializer(allow_null=True)
    core = PolyhedronSerializer(allow_null=True)
    nablas = PolyhedronSerializer(many=True)
    refinement = LatticeRefinementSerializer(allow_null=True)
    upper_terms = SheafTermSerializer(many=True)
    upper_maps = serializers.ListField(
        child=serializers.ListField(child=serializers.ListField(child=RationalField()))
    )
    middle_filtration = FiltrationSerializer(allow_null=True)
    certified = serializers.BooleanField()
    zero_ext = serializers.BooleanField()
    message = serializers.CharField(allow_null=True)


class ConeExactnessSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for ConeExactness
    """

    cone = serializers.SerializerMethodField()
    lattice_exact = serializers.BooleanField()
    cell_exact = serializers.BooleanField()
    witnesses = vector_list_field()
    lattice_witnesses = vector_list_field()
    samples_checked = serializers.IntegerField()

    def get_cone(self, instance):
        return [[serialize_rational(x) for x in ray] for ray in instance.cone.rays]


class ExactnessReportSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    DRF Serializer definition for ExactnessReport
    """

    passed = serializers.BooleanField()
    cones = ConeExactnessSerializer(many=True)


class FunctorSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    index_count and values keyed by comma-joined subsets ("" for the empty subset);
    values name polyhedra of the document
    """

    index_count = serializers.IntegerField(min_value=0)
    fan = serializers.CharField(required=False, default='fan')
    values = serializers.DictField(child=serializers.CharField())


def _subset_key(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(sorted(int(part) for part in text.split(',')))
    except ValueError:
        raise JobError("malformed subset key '{text}'".format(text=text))


class InputDocumentSerializer(serializers.Serializer):  # pylint: disable=abstract-method
    """
    {lattices, polyhedra, fans, functors, jobs}; save() resolves every entry to a
    domain value and returns a dict of name -> value per section
    """

    # name -> basis, or name -> {"basis": basis}
    lattices = serializers.DictField(required=False, default=dict)
    polyhedra = serializers.DictField(child=serializers.DictField(), required=False, default=dict)
    fans = serializers.DictField(child=serializers.DictField(), required=False, default=dict)
    functors = serializers.DictField(child=serializers.DictField(), required=False, default=dict)
    jobs = serializers.DictField(child=serializers.DictField(), required=False, default=dict)

    @staticmethod
    def _load(serializer_class, data):
        serializer = serializer_class(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.save()

    def create(self, validated_data):
        lattices = {
            name: self._load(LatticeSerializer, data if isinstance(data, dict) and 'basis' in data else {'basis': data})
            for name, data in validated_data['lattices'].items()
        }

        polyhedra = {name: self._load(PolyhedronSerializer, data) for name, data in validated_data['polyhedra'].items()}

        fans = {}
        for name, data in validated_data['fans'].items():
            data = dict(data)
            if isinstance(data.get('lattice'), str):
                if data['lattice'] not in lattices:
                    raise JobError("fan '{name}' refers to unknown lattice '{lattice}'".format(
                        name=name, lattice=data['lattice']))
                data['lattice'] = [[serialize_rational(x) for x in row] for row in lattices[data['lattice']].basis]
            fans[name] = self._load(FanSerializer, data)

        functors = {}
        for name, data in validated_data['functors'].items():
            serializer = FunctorSerializer(data=data)
            serializer.is_valid(raise_exception=True)
            spec = serializer.validated_data
            if spec['fan'] not in fans:
                raise JobError("functor '{name}' refers to unknown fan '{fan}'".format(name=name, fan=spec['fan']))
            values = {}
            for key, polyhedron_name in spec['values'].items():
                if polyhedron_name not in polyhedra:
                    raise JobError("functor '{name}' refers to unknown polyhedron '{p}'".format(
                        name=name, p=polyhedron_name))
                values[_subset_key(key)] = polyhedra[polyhedron_name]
            functors[name] = PolyFunctor.from_values(spec['index_count'], values, fans[spec['fan']])

        log.debug('Loaded %d polyhedra, %d fans and %d functors', len(polyhedra), len(fans), len(functors))
        return {
            'lattices': lattices,
            'polyhedra': polyhedra,
            'fans': fans,
            'functors': functors,
            'jobs': validated_data['jobs'],
        }
