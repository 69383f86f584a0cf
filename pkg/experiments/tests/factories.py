import factory

from compression.zl78 import Scheme
from experiments.models import SearchRun


class SearchRunFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = SearchRun

    mode = SearchRun.Mode.APPROX
    source = factory.Sequence(lambda n: f'corpus/part{n}.cz')
    scheme = Scheme.ZL78
    pattern = 'base'
    errors = 2
    tau = 8
    n = 1000
    trie_nodes = factory.SelfAttribute('n')
    u = 12000
    selected_size = factory.LazyAttribute(lambda run: 1 + run.trie_nodes // run.tau)
    peak_live_descriptions = 2
    peak_live_chars = 20
    match_count = 3
    wall_time_ms = factory.Faker('pyfloat', min_value=0, max_value=500)

    class Params:
        regex = factory.Trait(mode=SearchRun.Mode.REGEX, pattern='a(n|a)*', errors=None)
