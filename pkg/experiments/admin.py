from django.contrib import admin

from .models import SearchRun


@admin.register(SearchRun)
class SearchRunAdmin(admin.ModelAdmin):
    list_display = ('run_id', 'mode', 'source', 'scheme', 'pattern', 'errors', 'tau', 'trie_nodes', 'selected_size', 'match_count', 'wall_time_ms', 'created_at')
    list_filter = ('mode', 'scheme', 'tau', 'created_at')
    search_fields = ('source', 'pattern')
    ordering = ('-created_at',)
    readonly_fields = ('created_at',)
