"""
Lists of constants that can be used in the toric extensions subsystem
"""



from django.conf import settings

TOREXT_POLYHEDRAL_BACKEND = getattr(
    settings,
    'TOREXT_POLYHEDRAL_BACKEND',
    {
        'class': 'toric_extensions.backends.cdd.backend_provider.CddPolyhedralBackend',
        'options': {
            'MAX_CONVERSION_CACHE_SIZE': 4096,
        }
    }
)

# guards against run-away enumerations of lattice points
TOREXT_MAX_LATTICE_POINTS = getattr(settings, 'TOREXT_MAX_LATTICE_POINTS', 250000)

# offset added past the largest vertex pairing when truncating unbounded pairs
TOREXT_TRUNCATION_MARGIN = getattr(settings, 'TOREXT_TRUNCATION_MARGIN', 1)

# how far past the vertices the chart-wise certification samples degrees
TOREXT_CERTIFICATION_MARGIN = getattr(settings, 'TOREXT_CERTIFICATION_MARGIN', 1)

TOREXT_VERIFY_SEQUENCES = getattr(settings, 'TOREXT_VERIFY_SEQUENCES', True)

TOREXT_SVG_SCALE = getattr(settings, 'TOREXT_SVG_SCALE', 60)
TOREXT_SVG_PADDING = getattr(settings, 'TOREXT_SVG_PADDING', 20)

RENDER_FORMAT_JSON = 'json'
RENDER_FORMAT_SVG = 'svg'

TOREXT_RENDERERS = getattr(
    settings,
    'TOREXT_RENDERERS',
    [
        'toric_extensions.renderers.basic.JsonResultRenderer',
        'toric_extensions.renderers.svg.SvgPlotRenderer',
    ]
)

COMMAND_COMPONENTS = 'components'
COMMAND_COHOMOLOGY = 'cohomology'
COMMAND_EXT = 'ext'
COMMAND_KLYACHKO = 'klyachko'
COMMAND_VERIFY = 'verify'
COMMAND_PLOT = 'plot'

COMMANDS = [
    COMMAND_COMPONENTS,
    COMMAND_COHOMOLOGY,
    COMMAND_EXT,
    COMMAND_KLYACHKO,
    COMMAND_VERIFY,
    COMMAND_PLOT,
]

SEQUENCE_KIND_LONG_KOSZUL = 'long-koszul'
SEQUENCE_KIND_SHORT_UNIVERSAL = 'short-universal'
SEQUENCE_KIND_SINGLE_PUSHOUT = 'single-pushout'

EXIT_SUCCESS = 0
EXIT_VALIDATION_ERROR = 2
EXIT_INVARIANT_VIOLATION = 3
