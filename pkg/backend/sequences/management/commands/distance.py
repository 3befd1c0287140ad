from delrecon.commands import ToolkitCommand, binary_word
from sequences.balls import lcs_length, levenshtein_distance


class Command(ToolkitCommand):
    help = 'Расстояние Левенштейна по удалениям d_L(x, y) = n - НОП(x, y).'

    def add_command_arguments(self, parser):
        parser.add_argument('--x', type=binary_word, required=True)
        parser.add_argument('--y', type=binary_word, required=True)

    def run(self, x, y, output, **options):
        distance = levenshtein_distance(x, y)
        lcs = lcs_length(x, y)
        if output == 'json':
            self.write_json({
                'schema_version': 1, 'x': str(x), 'y': str(y),
                'distance': distance, 'lcs': lcs,
            })
            return
        self.echo({'x': x, 'y': y}, 'x', 'y')
        self.stdout.write(str(distance))
        self.stdout.write(f'НОП: {lcs}')
