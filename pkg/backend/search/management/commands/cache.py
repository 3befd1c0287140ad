from django.core.exceptions import ValidationError

from api.serializers import SearchReportSerializer
from delrecon.commands import ToolkitCommand, non_negative
from search.cache import cache_clear, cache_entries, cache_load


class Command(ToolkitCommand):
    help = 'Просмотр и очистка кэша перебора.'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=('list', 'show', 'clear'))
        parser.add_argument('--n', type=non_negative)
        parser.add_argument('--d', type=non_negative)
        parser.add_argument('--t', type=non_negative)

    def run(self, action, output, **options):
        getattr(self, f'run_{action}')(output, **options)

    def run_list(self, output, **options):
        entries = cache_entries()
        if output == 'json':
            self.write_json({
                'schema_version': 1,
                'entries': [
                    {
                        'path': str(path),
                        'report': (
                            None if isinstance(report, ValidationError)
                            else SearchReportSerializer(report).data
                        ),
                    }
                    for path, report in entries
                ],
            })
            return
        for path, report in entries:
            if isinstance(report, ValidationError):
                self.stdout.write(self.style.ERROR(
                    f'{path.name}: повреждён'
                ))
                continue
            self.stdout.write(
                f'{path.name}: N({report.n}, {report.d}, {report.t}) = '
                f'{report.value}, версия {report.engine_version}'
            )
        self.stdout.write(f'Записей: {len(entries)}')

    def run_show(self, output, n, d, t, **options):
        if None in (n, d, t):
            raise ValidationError(
                'Для show нужны --n, --d и --t.', code='precondition'
            )
        report = cache_load(n, d, t)
        if report is None:
            self.fail(f'В кэше нет записи для ({n}, {d}, {t}).')
        if output == 'json':
            self.write_json(SearchReportSerializer(report).data)
            return
        self.stdout.write(
            f'N({n}, {d}, {t}) = {report.value}, '
            f'пар: {report.pairs_scanned}, '
            f'классов: {report.classes_scanned}'
        )
        if report.witness is not None:
            self.stdout.write(
                f'Свидетель: x = {report.witness.x}, y = {report.witness.y}'
            )

    def run_clear(self, output, **options):
        removed = cache_clear()
        if output == 'json':
            self.write_json({'schema_version': 1, 'removed': removed})
            return
        self.stdout.write(self.style.SUCCESS(f'Удалено записей: {removed}'))
