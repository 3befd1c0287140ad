from django.core.exceptions import ValidationError

from delrecon.commands import ToolkitCommand, binary_word, non_negative
from sequences.balls import ball_size, deletion_ball


class Command(ToolkitCommand):
    help = 'Шар удалений D_t(x): размер или все элементы.'

    def add_command_arguments(self, parser):
        parser.add_argument('--x', type=binary_word, required=True)
        parser.add_argument('--t', type=non_negative, required=True)
        parser.add_argument(
            '--count', action='store_true', help='Печатать только размер.'
        )

    def run(self, x, t, count, output, **options):
        if t > x.length:
            raise ValidationError(
                f'Радиус t={t} больше длины слова {x.length}.',
                code='out_of_range',
            )
        if output == 'json':
            ball = deletion_ball(x, t)
            self.write_json({
                'schema_version': 1,
                'x': str(x),
                't': t,
                'size': len(ball),
                'elements': None if count else [str(z) for z in ball],
            })
            return
        self.echo({'x': x, 't': t}, 'x', 't')
        if count:
            self.stdout.write(str(ball_size(x, t)))
            return
        for element in deletion_ball(x, t):
            self.stdout.write(str(element))
