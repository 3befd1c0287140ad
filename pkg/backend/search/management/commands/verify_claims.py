from api.serializers import ClaimRecordSerializer
from delrecon.commands import ToolkitCommand, non_negative
from search.claims import verify_constants


class Command(ToolkitCommand):
    help = 'Пересчёт опубликованных констант и таблица расхождений.'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--only', action='append', default=None,
            help='Проверять только константы с этим префиксом.',
        )
        parser.add_argument('--extended', action='store_true')
        parser.add_argument('--threads', type=non_negative, default=None)
        parser.add_argument('--no-cache', action='store_true', dest='no_cache')

    def run(self, only, extended, threads, no_cache, output, **options):
        records = verify_constants(
            extended=extended, only=only, threads=threads,
            use_cache=not no_cache,
        )
        if not records:
            self.fail(
                f'Нет констант с префиксом {", ".join(only)}.', returncode=2
            )
        failed = [
            record for record in records if record.failed and record.blocking
        ]
        if output == 'json':
            self.write_json({
                'schema_version': 1,
                'passed': not failed,
                'claims': ClaimRecordSerializer(records, many=True).data,
            })
        else:
            self.echo(
                {'only': only, 'extended': extended}, 'only', 'extended'
            )
            for record in records:
                line = (
                    f'{record.status:<24} {record.claim_id}: '
                    f'{record.relation} {record.expected}, '
                    f'получено {record.computed}'
                    + ('' if record.blocking else ' (справочно)')
                )
                if record.failed and record.blocking:
                    self.stdout.write(self.style.ERROR(line))
                else:
                    self.stdout.write(line)
        if failed:
            self.fail(
                'Расхождения: ' + ', '.join(r.claim_id for r in failed)
            )
        if output == 'text':
            self.stdout.write(
                self.style.SUCCESS(f'Проверено констант: {len(records)}')
            )
