from django.core.management.base import CommandError

from search.management.base import USAGE_ERROR, SearchCommand
from search.regex import RegexSyntaxError, parse_regex, search_regex


class Command(SearchCommand):
    help = 'Report the ending positions of all substrings matched by a regular expression'
    mode = 'regex'

    def pattern_length(self, options):
        return options['regex_size']

    def run_search(self, z, options, stats):
        return search_regex(z, options['regex'], options['tau'], explicit_trie=options['explicit_trie'], stats=stats)

    def handle(self, *args, **options):
        try:
            options['regex'] = parse_regex(options['pattern'])
        except RegexSyntaxError as exc:
            self.stderr.write(exc.caret(), style_func=lambda message: message)
            raise CommandError(f'invalid pattern: {exc}', returncode=USAGE_ERROR)
        options['regex_size'] = options['regex'].size
        super().handle(*args, **options)
