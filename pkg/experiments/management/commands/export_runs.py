import logging

import openpyxl
from django.core.management.base import BaseCommand, CommandError
from django.utils import timezone
from openpyxl.styles import Alignment, Font, PatternFill

from experiments.models import SearchRun

HEADERS = [
    'Run', 'Mode', 'Source', 'Scheme', 'Pattern', 'k', 'tau', 'n', 'Trie nodes', 'u', '|C|',
    'Peak descriptions', 'Peak chars', 'Internal cells', 'Matches', 'Wall time (ms)', 'Recorded',
]

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Export recorded search runs to an Excel workbook'

    def add_arguments(self, parser):
        parser.add_argument('path', help='Destination .xlsx file')
        parser.add_argument('--mode', choices=SearchRun.Mode.values, help='Only export runs of this mode')

    def handle(self, *args, **options):
        runs = SearchRun.objects.all().order_by('-created_at', '-run_id')
        if options['mode']:
            runs = runs.filter(mode=options['mode'])

        wb = openpyxl.Workbook()
        ws = wb.active
        ws.title = 'Search Runs'

        header_font = Font(bold=True, color='FFFFFF')
        header_fill = PatternFill(start_color='366092', end_color='366092', fill_type='solid')
        header_alignment = Alignment(horizontal='center', vertical='center')

        ws.merge_cells(start_row=1, start_column=1, end_row=1, end_column=len(HEADERS))
        title_cell = ws['A1']
        title_cell.value = 'Compressed search trade-off runs'
        title_cell.font = Font(bold=True, size=16)
        title_cell.alignment = Alignment(horizontal='center')
        ws['A2'] = 'Generated:'
        ws['B2'] = timezone.now().strftime('%Y-%m-%d %H:%M:%S')

        for col, header in enumerate(HEADERS, 1):
            cell = ws.cell(row=4, column=col, value=header)
            cell.font = header_font
            cell.fill = header_fill
            cell.alignment = header_alignment

        count = 0
        for row, run in enumerate(runs, 5):
            values = [
                run.run_id, run.get_mode_display(), run.source, run.scheme, run.pattern,
                run.errors, run.tau, run.n, run.trie_nodes, run.u,
                run.selected_size, run.peak_live_descriptions, run.peak_live_chars, run.internal_cells,
                run.match_count, run.wall_time_ms, run.created_at.strftime('%Y-%m-%d %H:%M:%S'),
            ]
            for col, value in enumerate(values, 1):
                ws.cell(row=row, column=col, value=value)
            count += 1

        for column in ws.iter_cols(min_row=4):
            width = max((len(str(cell.value)) for cell in column if cell.value is not None), default=0)
            ws.column_dimensions[column[0].column_letter].width = min(width + 2, 50)

        try:
            wb.save(options['path'])
        except OSError as exc:
            raise CommandError(f'cannot write {options["path"]}: {exc}', returncode=1)
        logger.info('exported %d runs', count)
        self.stdout.write(self.style.SUCCESS(f'Exported {count} runs to {options["path"]}'))
