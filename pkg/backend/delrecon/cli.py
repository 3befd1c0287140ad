"""
Единая точка входа: delrecon <команда> [параметры].

Команды — management-команды приложений; имена с дефисом
отображаются на модули с подчёркиванием.
"""
import os
import sys

import django
from django.core.management import get_commands, load_command_class
from django.core.management.base import CommandError

VERBS = (
    'ball', 'distance', 'intersect', 'construct', 'nvalue',
    'verify-claims', 'cache', 'reconstruct-sim',
)
USAGE = f'Использование: delrecon {{{"|".join(VERBS)}}} [параметры]'


def dispatch(argv, stdout=None, stderr=None):
    """Выполняет команду и возвращает код завершения."""

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in VERBS:
        if argv:
            stderr.write(f'Неизвестная команда: {argv[0]}\n')
        stderr.write(USAGE + '\n')
        return 2
    verb, arguments = argv[0], argv[1:]
    name = verb.replace('-', '_')
    command = load_command_class(get_commands()[name], name)
    parser = command.create_parser('delrecon', verb)
    try:
        options = parser.parse_args(arguments)
    except CommandError as error:
        stderr.write(f'delrecon {verb}: {error}\n')
        stderr.write(parser.format_usage())
        return 2
    except SystemExit as exit:
        return exit.code or 0
    options = vars(options)
    args = options.pop('args', ())
    try:
        command.execute(*args, stdout=stdout, stderr=stderr, **options)
    except CommandError as error:
        stderr.write(f'delrecon {verb}: {error}\n')
        return error.returncode
    return 0


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'delrecon.settings')
    django.setup()
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == '__main__':
    main()
