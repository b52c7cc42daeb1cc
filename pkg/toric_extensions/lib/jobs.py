"""
All in-proc API endpoints for running a job: loading an input document,
resolving the bindings of a command and dispatching it. Every result comes
back as an exit status and a JSON-ready payload
"""



import logging
from functools import reduce

from contracts import contract
from django.core.exceptions import ValidationError
from rest_framework import exceptions as drf_exceptions

from toric_extensions import const
from toric_extensions.cohomology import cech_h_degree, graded_table, reduced_dims
from toric_extensions.data import JobSpec
from toric_extensions.exceptions import InputError, InvariantViolation, JobError, OracleMismatchError
from toric_extensions.extensions import long_koszul_sequence, pushout_single, universal_extension
from toric_extensions.fans import divisor_of, normal_fan, refine_by_polyhedra
from toric_extensions.filtrations import (
    check_compatibility,
    direct_sum,
    is_split,
    line_bundle_filtration,
    tangent_filtration,
)
from toric_extensions.koszul import validate_sigma_family, verify_exactness_everywhere
from toric_extensions.renderers.renderer import get_renderer_for_format
from toric_extensions.renderers.svg import plot_context
from toric_extensions.serializers import (
    ComponentDecompositionSerializer,
    DegreeEntrySerializer,
    ExactnessReportSerializer,
    ExtClassSerializer,
    ExtensionSequenceSerializer,
    FiltrationSerializer,
    GradedTableSerializer,
    InputDocumentSerializer,
    parse_rational,
    serialize_rational,
)
from toric_extensions.topology import components

log = logging.getLogger(__name__)


def load_document(data):
    """
    Parses an input document into {lattices, polyhedra, fans, functors, jobs}
    """

    if not isinstance(data, dict):
        raise JobError('the input document must be a JSON object')
    serializer = InputDocumentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def parse_degree(text):
    """
    "a,b" to a tuple of rationals
    """

    parts = [part.strip() for part in str(text).split(',')]
    return tuple(parse_rational(part) for part in parts)


def _lookup(section, name, kind):
    if name not in section:
        raise JobError("unknown {kind} '{name}'".format(kind=kind, name=name))
    return section[name]


def _default_fan(plus, minus):
    """
    The normal fan of minus refined by plus, for documents that do not name a fan
    """

    f = normal_fan(minus)
    return refine_by_polyhedra(f, [plus]) if not plus.is_empty else f


@contract(command=str)
def build_job(document, command, degree=None, verify_oracle=False, index=None):
    """
    Resolves the bindings of command in document (default names plus, minus, fan)
    into a JobSpec
    """

    if command not in const.COMMANDS:
        raise JobError("unknown command '{command}'".format(command=command))
    bindings = dict(document['jobs'].get(command, {}))
    polyhedra, fans = document['polyhedra'], document['fans']

    inputs = {'names': polyhedra}
    for role in ('plus', 'minus'):
        name = bindings.get(role, role)
        if name in polyhedra:
            inputs[role] = polyhedra[name]
        elif role in bindings:
            raise JobError("unknown polyhedron '{name}'".format(name=name))
    fan_name = bindings.get('fan', 'fan')
    if fan_name in fans:
        inputs['fan'] = fans[fan_name]
    elif 'fan' in bindings:
        raise JobError("unknown fan '{name}'".format(name=fan_name))
    if 'functor' in bindings:
        inputs['functor'] = _lookup(document['functors'], bindings['functor'], 'functor')
    if 'family' in bindings:
        inputs['family'] = [_lookup(polyhedra, name, 'polyhedron') for name in bindings['family']]
    if 'filtration' in bindings:
        inputs['filtration'] = bindings['filtration']

    options = {
        'degree': parse_degree(degree) if degree is not None else None,
        'verify_oracle': bool(verify_oracle),
        'index': index,
    }
    job = JobSpec(command=command, inputs=inputs, options=options)
    job.validate()
    return job


def _require(inputs, *roles):
    missing = [role for role in roles if role not in inputs]
    if missing:
        raise JobError('missing inputs: {missing}'.format(missing=', '.join(missing)))
    return [inputs[role] for role in roles]


def _fan_for(inputs):
    if 'fan' in inputs:
        return inputs['fan']
    plus, minus = _require(inputs, 'plus', 'minus')
    return _default_fan(plus, minus)


def _degree_key(m):
    return '({values})'.format(values=','.join(serialize_rational(x) for x in m))


def _run_components(inputs, options):
    minus, plus = _require(inputs, 'minus', 'plus')
    return ComponentDecompositionSerializer(components(minus, plus)).data


def _run_cohomology(inputs, options):
    plus, minus = _require(inputs, 'plus', 'minus')
    oracle = options['verify_oracle']
    f = _fan_for(inputs) if oracle or 'fan' in inputs else None

    m = options.get('degree')
    if m is None:
        return GradedTableSerializer(graded_table(plus, minus, f, oracle=oracle)).data

    h0, h1 = reduced_dims(minus, plus, m)
    if oracle:
        expected = cech_h_degree(plus, minus, f, m)
        if expected != (h0, h1):
            raise OracleMismatchError('degree {m}: components give {got}, Cech gives {expected}'.format(
                m=m, got=(h0, h1), expected=expected))
    return {_degree_key(m): DegreeEntrySerializer({'h0': h0, 'h1': h1}).data}


def _family_functor(inputs):
    if 'functor' in inputs:
        return inputs['functor']
    family = inputs['family']
    if 'fan' not in inputs:
        raise JobError('a family needs a fan')
    return validate_sigma_family(family, inputs['fan'])


def _run_ext(inputs, options):
    if 'functor' in inputs or 'family' in inputs:
        sequence = long_koszul_sequence(_family_functor(inputs), names=inputs['names'])
        return ExtensionSequenceSerializer(sequence).data

    plus, minus = _require(inputs, 'plus', 'minus')
    sequence = universal_extension(plus, minus, _fan_for(inputs), names=inputs['names'])
    result = ExtensionSequenceSerializer(sequence).data
    result['ext_dim'] = len(sequence.classes)
    return result


def _middle_of(sequence):
    """
    The filtration of the middle sheaf of a universal extension
    """

    if sequence.middle_filtration is not None:
        return sequence.middle_filtration
    return reduce(direct_sum, [
        line_bundle_filtration(summand.divisor) for summand in sequence.terms[1].summands
    ])


def _run_klyachko(inputs, options):
    ext_class = None
    if inputs.get('filtration') == 'tangent':
        f = _require(inputs, 'fan')[0]
        filtration = tangent_filtration(f)
    elif inputs.get('filtration') == 'minus':
        f = _fan_for(inputs)
        filtration = line_bundle_filtration(divisor_of(_require(inputs, 'minus')[0], f))
    else:
        plus, minus = _require(inputs, 'plus', 'minus')
        sequence = universal_extension(plus, minus, _fan_for(inputs), names=inputs['names'])
        f = sequence.fan
        if options.get('index') is not None:
            __, ext_class, filtration = pushout_single(sequence, options['index'])
        else:
            filtration = _middle_of(sequence)

    return {
        'filtration': FiltrationSerializer(filtration).data,
        'class': ExtClassSerializer(ext_class).data if ext_class is not None else None,
        'split': is_split(filtration),
        'compatible': check_compatibility(filtration, f),
    }


def _run_verify(inputs, options):
    if 'functor' not in inputs and 'family' not in inputs:
        raise JobError("verify needs a 'functor' or a 'family' binding")
    return ExactnessReportSerializer(verify_exactness_everywhere(_family_functor(inputs))).data


def render_plot(inputs):
    """
    SVG text for the plus and minus inputs of a job, components shaded
    """

    minus, plus = _require(inputs, 'minus', 'plus')
    renderer = get_renderer_for_format(const.RENDER_FORMAT_SVG)
    if renderer is None:
        raise JobError('no renderer is registered for svg')
    context = plot_context(minus, plus, components(minus, plus), inputs.get('fan'))
    return renderer.render(context, const.RENDER_FORMAT_SVG)


def _run_plot(inputs, options):
    return {'svg': render_plot(inputs)}


_HANDLERS = {
    const.COMMAND_COMPONENTS: _run_components,
    const.COMMAND_COHOMOLOGY: _run_cohomology,
    const.COMMAND_EXT: _run_ext,
    const.COMMAND_KLYACHKO: _run_klyachko,
    const.COMMAND_VERIFY: _run_verify,
    const.COMMAND_PLOT: _run_plot,
}


def exit_status_for(ex):
    if isinstance(ex, InvariantViolation):
        return const.EXIT_INVARIANT_VIOLATION
    return const.EXIT_VALIDATION_ERROR


def error_payload(ex):
    """
    {"error": {"type", "message", ...}} with whatever detail the exception carries
    """

    if isinstance(ex, drf_exceptions.ValidationError):
        message = ex.detail
    elif isinstance(ex, ValidationError):
        message = '; '.join(ex.messages)
    else:
        message = str(ex)
    error = {'type': ex.__class__.__name__, 'message': message}
    for attribute in ('position', 'subset', 'level'):
        if getattr(ex, attribute, None) is not None:
            error[attribute] = getattr(ex, attribute)
    if getattr(ex, 'ray', None) is not None:
        error['ray'] = [serialize_rational(x) for x in ex.ray]
    if getattr(ex, 'report', None) is not None:
        error['report'] = ExactnessReportSerializer(ex.report).data
    if isinstance(error.get('subset'), tuple):
        error['subset'] = list(error['subset'])
    return {'error': error}


@contract(job=JobSpec)
def run(job):
    """
    Dispatches job and returns (exit status, payload)
    """

    log.info("Running command '%s'", job.command)
    try:
        job.validate()
        result = _HANDLERS[job.command](job.inputs, job.options)
    except (InputError, ValidationError, drf_exceptions.ValidationError, InvariantViolation) as ex:
        log.warning("Command '%s' failed: %s", job.command, ex)
        return exit_status_for(ex), error_payload(ex)
    except Exception as ex:  # pylint: disable=broad-except
        # anything unplanned is a bug, reported like a failed internal check
        log.exception(ex)
        return const.EXIT_INVARIANT_VIOLATION, error_payload(ex)
    log.info("Command '%s' finished", job.command)
    return const.EXIT_SUCCESS, {'command': job.command, 'result': result}
