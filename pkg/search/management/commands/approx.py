from search.approx import search_approx
from search.management.base import SearchCommand


class Command(SearchCommand):
    help = 'Report the ending positions of all substrings within edit distance k of the pattern'
    mode = 'approx'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--errors', '-k', type=int, required=True, help='Error threshold k (0 <= k < m)')

    def errors(self, options):
        return options['errors']

    def run_search(self, z, options, stats):
        return search_approx(
            z,
            options['pattern'].encode('utf-8'),
            options['errors'],
            options['tau'],
            explicit_trie=options['explicit_trie'],
            stats=stats,
        )
