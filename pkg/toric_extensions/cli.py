"""
The torext console script: configures minimal settings when none are present
and hands over to the torext management command
"""



import os
import sys

import django
from django.conf import settings
from django.core.management import execute_from_command_line

MINIMAL_SETTINGS = {
    'INSTALLED_APPS': ['rest_framework', 'toric_extensions'],
    'TEMPLATES': [{
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'APP_DIRS': True,
    }],
    'USE_TZ': True,
    # logs go to stderr, results to stdout
    'LOGGING': {
        'version': 1,
        'disable_existing_loggers': False,
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
            }
        },
        'root': {
            'handlers': ['console'],
            'level': 'WARNING'
        }
    },
}


def main(argv=None):
    """
    torext <command> --in <file> [options]
    """

    argv = list(sys.argv[1:] if argv is None else argv)
    if not os.environ.get('DJANGO_SETTINGS_MODULE') and not settings.configured:
        settings.configure(**MINIMAL_SETTINGS)
        django.setup()
    execute_from_command_line(['torext', 'torext'] + argv)


if __name__ == '__main__':
    main()
