from pathlib import Path

from rest_framework.renderers import JSONRenderer

from api.serializers import ThresholdReportSerializer
from delrecon.commands import ToolkitCommand, non_negative
from reconstruct.experiment import CODES, threshold_experiment


class Command(ToolkitCommand):
    help = 'Моделирование реконструкции по N + 1 и N прочтениям.'

    def add_command_arguments(self, parser):
        parser.add_argument('--n', type=non_negative, required=True)
        parser.add_argument('--d', type=non_negative, required=True)
        parser.add_argument('--t', type=non_negative, required=True)
        parser.add_argument('--trials', type=non_negative, default=200)
        parser.add_argument('--seed', type=non_negative, default=0)
        parser.add_argument('--code', choices=CODES, default='greedy')
        parser.add_argument(
            '--json', type=Path, default=None, dest='json_path',
            help='Сохранить отчёт в файл.',
        )
        parser.add_argument('--no-cache', action='store_true', dest='no_cache')

    def run(self, n, d, t, trials, seed, code, json_path, no_cache, output,
            **options):
        report = threshold_experiment(
            n, d, t, trials=trials, seed=seed, code=code,
            use_cache=not no_cache,
        )
        data = ThresholdReportSerializer(report).data
        if json_path is not None:
            json_path.write_bytes(JSONRenderer().render(data))
        if output == 'json':
            self.write_json(data)
        else:
            self.echo(
                {'n': n, 'd': d, 't': t, 'trials': trials, 'seed': seed,
                 'code': code},
                'n', 'd', 't', 'trials', 'seed', 'code',
            )
            self.stdout.write(
                f'N = {report.nvalue} [{report.nvalue_source}], '
                f'порог {report.threshold}, код из {report.code_size} слов'
            )
            self.stdout.write(
                f'Однозначно: {report.successes} из {report.attempted}, '
                f'пропущено: {report.skipped}'
            )
            if report.sharp_x is not None:
                self.stdout.write(
                    f'На {report.sharp_reads} прочтениях пары '
                    f'{report.sharp_x}, {report.sharp_y}: '
                    f'кандидатов {report.sharp_candidates}'
                )
        if not report.passed:
            self.fail('Порог реконструкции не подтверждён.')
        if output == 'text':
            self.stdout.write(self.style.SUCCESS('Порог подтверждён'))
