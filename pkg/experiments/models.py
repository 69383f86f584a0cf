from django.db import models
from django.utils import timezone

from compression.zl78 import Scheme


class SearchRunManager(models.Manager):
    def record_run(self, stats, mode, source, scheme, pattern, **extra_fields):
        """Persist the StatsRecord of one search."""
        if mode not in SearchRun.Mode.values:
            raise ValueError(f'Unknown search mode {mode!r}')
        if not pattern:
            raise ValueError('The pattern must be set')

        run = self.model(
            mode=mode,
            source=str(source),
            scheme=Scheme(scheme),
            pattern=pattern,
            errors=stats.k,
            tau=stats.tau,
            n=stats.n,
            trie_nodes=stats.trie_nodes,
            u=stats.u,
            selected_size=stats.selected,
            peak_live_descriptions=stats.peak_live_descriptions,
            peak_live_chars=stats.peak_live_chars,
            internal_cells=stats.internal_cells,
            match_count=stats.match_count,
            wall_time_ms=stats.wall_time_ms,
            **extra_fields
        )
        run.save(using=self._db)
        return run


class SearchRun(models.Model):
    class Mode(models.TextChoices):
        APPROX = 'approx', 'Approximate'
        REGEX = 'regex', 'Regular expression'

    run_id = models.AutoField(primary_key=True)
    mode = models.CharField(max_length=10, choices=Mode.choices)
    source = models.CharField(max_length=500, help_text='Compressed file that was searched')
    scheme = models.CharField(max_length=10, choices=Scheme.choices, default=Scheme.ZL78)
    pattern = models.TextField()
    errors = models.PositiveIntegerField(null=True, blank=True, help_text='Error threshold k (approximate runs)')
    tau = models.PositiveIntegerField(help_text='Trade-off parameter after clamping')
    n = models.PositiveIntegerField(help_text='Number of compression elements')
    trie_nodes = models.PositiveIntegerField(default=0, help_text='Non-root dictionary trie nodes (256 seeds included for ZLW)')
    u = models.PositiveIntegerField(help_text='Length of the uncompressed text')
    selected_size = models.PositiveIntegerField()
    peak_live_descriptions = models.PositiveIntegerField(default=0)
    peak_live_chars = models.PositiveIntegerField(default=0)
    internal_cells = models.PositiveIntegerField(default=0, help_text='Cells of the internal match sets (approximate runs)')
    match_count = models.PositiveIntegerField(default=0)
    wall_time_ms = models.FloatField(default=0)
    created_at = models.DateTimeField(default=timezone.now)

    objects = SearchRunManager()

    class Meta:
        db_table = 'search_runs'
        verbose_name = 'Search Run'
        verbose_name_plural = 'Search Runs'
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.get_mode_display()} '{self.pattern}' on {self.source} (tau={self.tau})"

    @property
    def selected_bound(self):
        return 1 + (self.trie_nodes or self.n) / self.tau if self.tau else None

    def within_selection_bound(self):
        return self.selected_size <= self.selected_bound
