from delrecon.commands import ToolkitCommand, binary_word, non_negative
from sequences.intersect import intersection, intersection_size


class Command(ToolkitCommand):
    help = 'Размер пересечения |D_s(x) ∩ D_t(y)| и, по запросу, его элементы.'

    def add_command_arguments(self, parser):
        parser.add_argument('--x', type=binary_word, required=True)
        parser.add_argument('--y', type=binary_word, required=True)
        parser.add_argument('--s', type=non_negative, required=True)
        parser.add_argument('--t', type=non_negative, required=True)
        parser.add_argument(
            '--witnesses', action='store_true',
            help='Печатать элементы пересечения.',
        )

    def run(self, x, y, s, t, witnesses, output, **options):
        size = intersection_size(x, s, y, t)
        elements = intersection(x, s, y, t) if witnesses else None
        if output == 'json':
            self.write_json({
                'schema_version': 1, 'x': str(x), 'y': str(y),
                's': s, 't': t, 'size': size,
                'elements': (
                    None if elements is None else [str(z) for z in elements]
                ),
            })
            return
        self.echo({'x': x, 'y': y, 's': s, 't': t}, 'x', 'y', 's', 't')
        self.stdout.write(str(size))
        for element in elements or ():
            self.stdout.write(str(element))
