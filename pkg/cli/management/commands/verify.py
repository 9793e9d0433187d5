import json
import logging
from collections import Counter

from django.core.management.base import BaseCommand, CommandError

from api.serializers import LedgerEntrySerializer
from cli.enums import ExitCode
from formulas.enums import Scope
from formulas.ledger import has_unexpected_mismatch, verify_ledger
from formulas.scopes import get_scope

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Checks every closed form in a scope against values computed on the groups it describes.'

    def add_arguments(self, parser):
        parser.add_argument('--scope', default=Scope.DEFAULT, choices=Scope.values)
        parser.add_argument('--workers', type=int, help='Process pool size; defaults to LEDGER_WORKERS')
        parser.add_argument('--omit-timings', dest='omit_timings', default=False, action='store_true',
                            help='Leave out per-entry run times so repeated runs print identical output')

    def handle(self, *args, **options):
        entries = verify_ledger(get_scope(options['scope']), workers=options.get('workers'))
        serializer = LedgerEntrySerializer(entries, many=True, context={'omit_timings': options['omit_timings']})
        summary = Counter(str(entry.classification) for entry in entries)
        self.stdout.write(json.dumps({
            'scope': str(options['scope']),
            'summary': dict(sorted(summary.items())),
            'entries': serializer.data,
        }, indent=2))
        if has_unexpected_mismatch(entries):
            raise CommandError('Unexpected mismatch in the ledger', returncode=ExitCode.UNEXPECTED_MISMATCH)
