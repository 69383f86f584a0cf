import json
from dataclasses import asdict, dataclass
from typing import Optional


@dataclass
class SearchStats:
    """Resource counters collected while a search runs."""

    n: int = 0
    trie_nodes: int = 0
    u: int = 0
    tau: int = 0
    selected_size: int = 0
    peak_live_descriptions: int = 0
    peak_live_chars: int = 0
    internal_cells: int = 0

    def observe(self, *descriptions):
        live = [d for d in descriptions if d is not None]
        chars = sum(len(d.rpre) + len(d.rsuf) for d in live)
        self.peak_live_descriptions = max(self.peak_live_descriptions, len(live))
        self.peak_live_chars = max(self.peak_live_chars, chars)


@dataclass(frozen=True)
class StatsRecord:
    n: int
    trie_nodes: int
    u: int
    m: int
    k: Optional[int]
    tau: int
    selected: int
    peak_live_descriptions: int
    peak_live_chars: int
    internal_cells: int
    match_count: int
    wall_time_ms: float

    @classmethod
    def from_stats(cls, stats, m, k, match_count, wall_time_ms):
        return cls(
            n=stats.n,
            trie_nodes=stats.trie_nodes,
            u=stats.u,
            m=m,
            k=k,
            tau=stats.tau,
            selected=stats.selected_size,
            peak_live_descriptions=stats.peak_live_descriptions,
            peak_live_chars=stats.peak_live_chars,
            internal_cells=stats.internal_cells,
            match_count=match_count,
            wall_time_ms=round(wall_time_ms, 3),
        )

    def as_dict(self):
        data = asdict(self)
        if data['k'] is None:
            del data['k']
        return data

    def as_json(self):
        return json.dumps(self.as_dict(), sort_keys=True)
