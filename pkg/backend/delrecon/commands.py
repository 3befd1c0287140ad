import argparse

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from sequences.core import BinarySequence


def binary_word(text):
    """Тип аргумента: слово из символов 0 и 1."""

    try:
        return BinarySequence.parse(text)
    except ValidationError as error:
        raise argparse.ArgumentTypeError('; '.join(error.messages))


def non_negative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'ожидается целое число: {text}')
    if value < 0:
        raise argparse.ArgumentTypeError(f'ожидается число >= 0: {text}')
    return value


class ToolkitCommand(BaseCommand):
    """
    Общая основа команд: флаг --output, вывод JSON через JSONRenderer
    и перевод ошибок проверки в код завершения 2.
    """

    requires_system_checks = []
    output_formats = ('text', 'json')

    def add_arguments(self, parser):
        parser.add_argument(
            '--output', choices=self.output_formats, default='text',
            help='Формат вывода.',
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except ValidationError as error:
            raise CommandError('; '.join(error.messages), returncode=2)

    def run(self, **options):
        raise NotImplementedError

    def write_json(self, data):
        self.stdout.write(JSONRenderer().render(data).decode())

    def echo(self, options, *names):
        """Печатает разрешённые параметры запуска в текстовом режиме."""

        resolved = ', '.join(
            f'{name}={self._format(options[name])}' for name in names
        )
        self.stdout.write(f'Параметры: {resolved}')

    @staticmethod
    def _format(value):
        if isinstance(value, (list, tuple)):
            return ','.join(str(item) for item in value) or '-'
        return '-' if value is None else str(value)

    def fail(self, message, returncode=1):
        raise CommandError(message, returncode=returncode)
