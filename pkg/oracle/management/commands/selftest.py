import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from compression.zl78 import Scheme, compress, decompress
from oracle.brute import oracle_approx, oracle_regex
from oracle.cases import MODES, PROFILES, random_case
from search.approx import search_approx
from search.regex import search_regex

logger = logging.getLogger(__name__)


def check_case(case, scheme):
    """Return a failure description, or None when the engine agrees with the oracle."""
    z = compress(case.text, scheme)
    if decompress(z) != case.text:
        return 'roundtrip mismatch'
    if case.mode == 'approx':
        expected = oracle_approx(case.text, case.pattern, case.k)
        found = search_approx(z, case.pattern, case.k, case.tau, explicit_trie=scheme == Scheme.ZLW)
    else:
        expected = oracle_regex(case.text, case.pattern)
        found = search_regex(z, case.pattern, case.tau)
    if found != expected:
        missing = sorted(set(expected) - set(found))[:5]
        extra = sorted(set(found) - set(expected))[:5]
        return f'missing {missing} extra {extra}'
    return None


class Command(BaseCommand):
    help = 'Compare both search engines against the brute-force oracles on seeded random cases'

    def add_arguments(self, parser):
        parser.add_argument('--cases', type=int, help='Cases per mode (default: CZGREP_SELFTEST_CASES)')
        parser.add_argument('--seed', type=int, default=0, help='Base seed; CZGREP_SEED overrides it')
        parser.add_argument('--mode', choices=MODES, help='Only test one engine')
        parser.add_argument('--profile', choices=PROFILES, help='Only use one text profile')
        parser.add_argument('--max-length', type=int, help='Upper bound on the text length')

    def handle(self, *args, **options):
        cases = options['cases'] if options['cases'] is not None else settings.CZGREP['SELFTEST_CASES']
        seed = settings.CZGREP['SEED'] if settings.CZGREP['SEED'] is not None else options['seed']
        modes = [options['mode']] if options['mode'] else list(MODES)
        profiles = [options['profile']] if options['profile'] else list(PROFILES)
        schemes = list(Scheme)

        failures = 0
        total = 0
        for mode in modes:
            for number in range(cases):
                profile = profiles[number % len(profiles)]
                scheme = schemes[number % len(schemes)]
                case = random_case(seed + number, profile, mode, max_length=options['max_length'])
                problem = check_case(case, scheme)
                total += 1
                if problem:
                    failures += 1
                    self.stderr.write(f'FAIL {case} scheme={scheme.value}: {problem}')
                else:
                    logger.debug('ok %s scheme=%s', case, scheme.value)

        if failures:
            raise CommandError(f'{failures} of {total} cases disagree with the oracle (seed {seed})', returncode=1)
        self.stdout.write(self.style.SUCCESS(f'{total} cases agree with the oracle (seed {seed})'))
