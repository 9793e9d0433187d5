import logging

from django.core.management.base import CommandError

from api.serializers import (
    PartitionCertificateSerializer, PartitionSearchResultSerializer, VerificationReportSerializer, error_paths,
)
from cli.base import GroupCommand, read_json
from cli.enums import ExitCode
from partitions.bounds import lower_bound_blocks, partition_kappa_bound
from partitions.certificates import verify_partition
from partitions.enums import SearchMode
from partitions.exceptions import PartitionError
from partitions.search import find_partition
from treecount.exceptions import ExactCapExceeded

logger = logging.getLogger(__name__)


class Command(GroupCommand):
    help = 'Searches for, verifies, or bounds a partition of a group into an abelian subgroup and commuting blocks.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        action = parser.add_mutually_exclusive_group(required=True)
        action.add_argument('--find', choices=SearchMode.values)
        action.add_argument('--verify', metavar='CERTIFICATE', help='PartitionCertificate JSON file')
        action.add_argument('--bound', default=False, action='store_true',
                            help='Class-count lower bound on the number of blocks')
        parser.add_argument('--n-max', dest='n_max', type=int)

    def find(self, G, options) -> dict:
        try:
            result = find_partition(G, mode=options['find'], n_max=options.get('n_max'))
        except (ExactCapExceeded, PartitionError) as e:
            raise CommandError(str(e), returncode=ExitCode.INAPPLICABLE)
        return PartitionSearchResultSerializer(result).data

    def verify(self, G, options) -> dict:
        serializer = PartitionCertificateSerializer(data=read_json(options['verify']))
        if not serializer.is_valid():
            raise CommandError('; '.join(error_paths(serializer.errors)), returncode=ExitCode.PARSE_ERROR)
        certificate = serializer.save()
        report = verify_partition(G, certificate)
        data = VerificationReportSerializer(report).data
        if report.ok:
            data['kappa_lower_bound'] = str(partition_kappa_bound(certificate))
        return data

    def handle(self, *args, **options):
        G = self.build_group(options)
        if options.get('find'):
            data = self.find(G, options)
        elif options.get('verify'):
            data = self.verify(G, options)
        else:
            data = {'lower_bound': lower_bound_blocks(G)}
        self.write_json({'group': G.name, 'order': G.order, **data})
