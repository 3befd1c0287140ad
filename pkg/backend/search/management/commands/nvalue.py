import csv

from django.core.exceptions import ValidationError

from api.serializers import NValueSerializer, SearchReportSerializer
from delrecon.commands import ToolkitCommand, non_negative
from search.cache import cached_search
from search.engine import ENGINES
from sequences.formulas import closed_form_value, table_value

CSV_HEADER = ('n', 'd', 't', 'value', 'source')


class Command(ToolkitCommand):
    help = 'N(n, d, t) по формуле, по таблице или полным перебором.'

    output_formats = ('text', 'json', 'csv')

    def add_command_arguments(self, parser):
        parser.add_argument('--n', type=non_negative, required=True)
        parser.add_argument('--d', type=non_negative, required=True)
        parser.add_argument('--t', type=non_negative, required=True)
        parser.add_argument(
            '--mode', choices=('formula', 'table', 'search'),
            default='formula',
        )
        parser.add_argument('--threads', type=non_negative, default=None)
        parser.add_argument('--engine', choices=ENGINES, default='vector')
        parser.add_argument(
            '--extended', action='store_true',
            help='Разрешить перебор до предельного n.',
        )
        parser.add_argument(
            '--no-cache', action='store_true', dest='no_cache',
            help='Не читать и не записывать кэш перебора.',
        )

    def run(self, n, d, t, mode, output, **options):
        report = None
        if mode == 'search':
            report = cached_search(
                n, d, t, engine=options['engine'],
                threads=options['threads'], extended=options['extended'],
                use_cache=not options['no_cache'],
            )
            value, source = report.value, f'search:{report.engine}'
        else:
            lookup = closed_form_value if mode == 'formula' else table_value
            found = lookup(n, d, t)
            if found is None:
                raise ValidationError(
                    f'Для (n={n}, d={d}, t={t}) нет значения в режиме {mode}.',
                    code='unsupported',
                )
            value, source = found
        row = {'n': n, 'd': d, 't': t, 'value': value, 'source': source}
        if output == 'csv':
            writer = csv.writer(self.stdout, lineterminator='\n')
            writer.writerow(CSV_HEADER)
            writer.writerow([row[key] for key in CSV_HEADER])
        elif output == 'json':
            data = {'schema_version': 1, **NValueSerializer(row).data}
            if report is not None:
                data['report'] = SearchReportSerializer(report).data
            self.write_json(data)
        else:
            self.echo(
                {**options, 'n': n, 'd': d, 't': t, 'mode': mode},
                'n', 'd', 't', 'mode',
            )
            self.stdout.write(f'N({n}, {d}, {t}) = {value} [{source}]')
            if report is not None and report.witness is not None:
                self.stdout.write(
                    f'Свидетель: x = {report.witness.x}, '
                    f'y = {report.witness.y}'
                )
                self.stdout.write(
                    f'Пар: {report.pairs_scanned}, '
                    f'классов: {report.classes_scanned}, '
                    f'время: {report.elapsed:.2f} с'
                )
