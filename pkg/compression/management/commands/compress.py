import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from compression import fileformat
from compression.management.loading import DATA_ERROR
from compression.zl78 import Scheme, compress, format_elements

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Compress a file into the ZL78 or ZLW binary format'

    def add_arguments(self, parser):
        parser.add_argument('input', help='File to compress')
        parser.add_argument('output', help='Destination .cz file')
        parser.add_argument('--scheme', choices=Scheme.values, default=Scheme.ZL78)
        parser.add_argument('--show', action='store_true', help='Also print the elements in "(r,a)" form')

    def handle(self, *args, **options):
        try:
            text = Path(options['input']).read_bytes()
        except OSError as exc:
            raise CommandError(f'cannot read {options["input"]}: {exc.strerror or exc}', returncode=DATA_ERROR)

        z = compress(text, options['scheme'])
        data = fileformat.dumps(z)
        try:
            Path(options['output']).write_bytes(data)
        except OSError as exc:
            raise CommandError(f'cannot write {options["output"]}: {exc.strerror or exc}', returncode=DATA_ERROR)

        ratio = len(data) / len(text) if text else 0.0
        self.stdout.write(f'n={z.n} u={len(text)} bytes={len(data)} ratio={ratio:.3f}')
        logger.info('compressed %s into %s (%s)', options['input'], options['output'], z.scheme.label)
        if options['show']:
            self.stdout.write(format_elements(z))
