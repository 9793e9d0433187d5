import logging

from django.core.management.base import CommandError

from api.serializers import KappaResultSerializer
from cli.base import GroupCommand
from cli.enums import ExitCode
from commuting.exceptions import TooLargeForExact
from treecount.engines import applicable_methods, kappa_auto, run_engine, with_cross_checks
from treecount.enums import METHOD_ALIASES
from treecount.exceptions import TreeCountError

logger = logging.getLogger(__name__)


class Command(GroupCommand):
    help = 'Counts the spanning trees of the commuting graph of a group.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--method', default='auto', choices=['auto', *METHOD_ALIASES])
        parser.add_argument('--cross-check', dest='cross_check', default=False, action='store_true',
                            help='Run every applicable engine and report whether they agree')

    def handle(self, *args, **options):
        G = self.build_group(options)
        method = options['method']
        try:
            if method == 'auto':
                result = kappa_auto(G, cross_check=options['cross_check'])
            else:
                result = run_engine(G, METHOD_ALIASES[method])
                if options['cross_check']:
                    result = with_cross_checks(G, result, applicable_methods(G))
        except (TreeCountError, TooLargeForExact) as e:
            raise CommandError(str(e), returncode=ExitCode.INAPPLICABLE)
        self.write_json({'group': G.name, 'order': G.order, **KappaResultSerializer(result).data})
