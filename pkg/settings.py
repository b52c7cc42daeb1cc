"""
Django settings file for local development and the test suite
"""

import os

BASE_DIR = os.path.dirname(__file__)

DEBUG = True
TEST_MODE = True
USE_TZ = True
TIME_ZONE = 'UTC'
SECRET_KEY = 'SHHHHHH'

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': ':memory:',
    },
}

INSTALLED_APPS = (
    'django.contrib.contenttypes',
    'rest_framework',
    'toric_extensions',
)

TEMPLATES = [{
    'BACKEND': 'django.template.backends.django.DjangoTemplates',
    'APP_DIRS': True,
}]

TOREXT_POLYHEDRAL_BACKEND = {
    'class': 'toric_extensions.backends.cdd.backend_provider.CddPolyhedralBackend',
    'options': {
        'MAX_CONVERSION_CACHE_SIZE': 4096,
    }
}

# keeps accidental huge enumerations in tests short
TOREXT_MAX_LATTICE_POINTS = 100000

TOREXT_VERIFY_SEQUENCES = True

TOREXT_RENDERERS = [
    'toric_extensions.renderers.basic.JsonResultRenderer',
    'toric_extensions.renderers.svg.SvgPlotRenderer',
]
