from api.serializers import PairWitnessSerializer
from delrecon.commands import ToolkitCommand, non_negative
from sequences.formulas import construct_extremal


class Command(ToolkitCommand):
    help = 'Явная экстремальная пара и проверенный размер пересечения.'

    def add_command_arguments(self, parser):
        parser.add_argument('--n', type=non_negative, required=True)
        parser.add_argument('--d', type=non_negative, required=True)
        parser.add_argument('--t', type=non_negative, default=None)

    def run(self, n, d, t, output, **options):
        witness = construct_extremal(n, d, t)
        if not witness.is_consistent():
            self.fail(f'Пара {witness.x}, {witness.y} не прошла проверку.')
        if output == 'json':
            data = dict(PairWitnessSerializer(witness).data)
            self.write_json({'schema_version': 1, **data})
            return
        self.echo(
            {'n': n, 'd': d, 't': witness.radius}, 'n', 'd', 't'
        )
        self.stdout.write(f'x = {witness.x}')
        self.stdout.write(f'y = {witness.y}')
        self.stdout.write(
            f'd_L = {witness.distance}, '
            f'|D_t(x) ∩ D_t(y)| = {witness.intersection} ({witness.rule})'
        )
        self.stdout.write(self.style.SUCCESS('Пара проверена'))
