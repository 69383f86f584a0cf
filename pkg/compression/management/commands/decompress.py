import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from compression.exceptions import FormatError
from compression.management.loading import DATA_ERROR, load_compressed
from compression.zl78 import decompress

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Restore the original bytes of a .cz file'

    def add_arguments(self, parser):
        parser.add_argument('input', help='Compressed .cz file')
        parser.add_argument('output', help='Destination file')

    def handle(self, *args, **options):
        z = load_compressed(options['input'])
        try:
            text = decompress(z)
        except FormatError as exc:
            raise CommandError(f'{options["input"]}: {exc}', returncode=DATA_ERROR)
        try:
            Path(options['output']).write_bytes(text)
        except OSError as exc:
            raise CommandError(f'cannot write {options["output"]}: {exc.strerror or exc}', returncode=DATA_ERROR)
        logger.info('restored %d bytes from %s', len(text), options['input'])
