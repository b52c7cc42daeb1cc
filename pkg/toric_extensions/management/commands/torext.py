"""
Django management command running one toric extensions job over an input document:

    python manage.py torext ext --in pair.json --out result.json
"""



import json
import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from rest_framework import exceptions as drf_exceptions

from toric_extensions import const, startup
from toric_extensions.exceptions import InputError
from toric_extensions.lib.jobs import build_job, error_payload, exit_status_for, load_document, render_plot, run
from toric_extensions.renderers.renderer import get_renderer_for_format

log = logging.getLogger(__name__)


class Command(BaseCommand):
    """
    Django Management command for the torext front end
    """

    help = 'Runs one of the toric extensions commands over a JSON input document'

    def add_arguments(self, parser):
        parser.add_argument('command', choices=const.COMMANDS)
        parser.add_argument('--in', dest='input', required=True, help='input document (JSON)')
        parser.add_argument('--degree', default=None, help='a single degree "a,b" (cohomology only)')
        parser.add_argument('--out', default=None, help='write the JSON result here instead of stdout')
        parser.add_argument('--svg', default=None, help='also write a plot of the plus and minus inputs')
        parser.add_argument('--verify-oracle', dest='verify_oracle', action='store_true',
                            help='cross-check cohomology with the Cech complex')
        parser.add_argument('--index', type=int, default=None,
                            help='klyachko: push out along the i-th projection, 0 for the all -1 functional')

    def _emit(self, text, path):
        if path:
            with open(path, 'w') as handle:
                handle.write(text)
        else:
            self.stdout.write(text, ending='')

    def _load_job(self, options):
        try:
            with open(options['input']) as handle:
                data = json.load(handle)
        except (OSError, ValueError) as ex:
            raise InputError("cannot read '{path}': {ex}".format(path=options['input'], ex=ex))
        document = load_document(data)
        return build_job(
            document,
            options['command'],
            degree=options['degree'],
            verify_oracle=options['verify_oracle'],
            index=options['index'],
        )

    def handle(self, *args, **options):
        """
        Management command entry point
        """

        startup.initialize()
        renderer = get_renderer_for_format(const.RENDER_FORMAT_JSON)

        try:
            job = self._load_job(options)
        except (InputError, ValidationError, drf_exceptions.ValidationError) as ex:
            status, payload = exit_status_for(ex), error_payload(ex)
            job = None
        else:
            status, payload = run(job)

        if status == const.EXIT_SUCCESS and job.command == const.COMMAND_PLOT and options['svg']:
            self._emit(payload['result']['svg'], options['svg'])
            payload['result']['svg'] = options['svg']
        elif status == const.EXIT_SUCCESS and options['svg']:
            try:
                self._emit(render_plot(job.inputs), options['svg'])
            except InputError as ex:
                log.warning('No plot written: %s', ex)

        self._emit(renderer.render(payload, const.RENDER_FORMAT_JSON), options['out'])
        if status != const.EXIT_SUCCESS:
            raise CommandError(str(payload['error']['message']), returncode=status)
