import logging
import time

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from compression.exceptions import (
    FormatError,
    ParameterError,
    PreconditionError,
    UnsupportedConfigurationError,
)
from compression.management.loading import DATA_ERROR, USAGE_ERROR, load_compressed
from compression.zl78 import Scheme
from search.stats import SearchStats, StatsRecord

logger = logging.getLogger(__name__)


class SearchCommand(BaseCommand):
    """Shared flags and output handling of the approx and regex commands."""

    mode = None

    def add_arguments(self, parser):
        parser.add_argument('file', help='Compressed input (.cz)')
        parser.add_argument('--pattern', required=True)
        parser.add_argument(
            '--tau',
            type=int,
            help='Trade-off parameter; larger values use less memory (default: CZGREP_DEFAULT_TAU)',
        )
        parser.add_argument('--stats', action='store_true', help='Print one JSON stats line to stderr')
        parser.add_argument(
            '--scheme-override',
            choices=Scheme.values,
            help='Require the input to use this scheme',
        )
        parser.add_argument(
            '--explicit-trie',
            action='store_true',
            help='Build the dictionary trie first (Omega(n) space, needed for ZLW approximate search)',
        )
        parser.add_argument('--record', action='store_true', help='Store the run in the experiments database')

    def run_search(self, z, options, stats):
        raise NotImplementedError

    def pattern_length(self, options):
        return len(options['pattern'].encode('utf-8'))

    def errors(self, options):
        return None

    def handle(self, *args, **options):
        z = load_compressed(options['file'])
        override = options['scheme_override']
        if override and Scheme(override) != z.scheme:
            raise CommandError(
                f'{options["file"]} is a {z.scheme.label} stream, not {Scheme(override).label}',
                returncode=USAGE_ERROR,
            )
        if options['tau'] is None:
            options['tau'] = settings.CZGREP['DEFAULT_TAU']

        stats = SearchStats()
        started = time.perf_counter()
        try:
            matches = self.run_search(z, options, stats)
        except (ParameterError, UnsupportedConfigurationError) as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)
        except (FormatError, PreconditionError) as exc:
            raise CommandError(str(exc), returncode=DATA_ERROR)
        elapsed_ms = (time.perf_counter() - started) * 1000

        if matches:
            self.stdout.write('\n'.join(map(str, matches)))

        record = StatsRecord.from_stats(
            stats,
            m=self.pattern_length(options),
            k=self.errors(options),
            match_count=len(matches),
            wall_time_ms=elapsed_ms,
        )
        if options['stats']:
            self.stderr.write(record.as_json(), style_func=lambda message: message)
        if options['record']:
            from experiments.models import SearchRun

            run = SearchRun.objects.record_run(record, self.mode, options['file'], z.scheme, options['pattern'])
            logger.info('recorded run %s', run.run_id)
        logger.info('%s search over %s: %d matches', self.mode, options['file'], len(matches))
