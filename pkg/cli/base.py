"""Shared argument handling for the commands that act on one group."""
import json
import logging

from django.core.management.base import BaseCommand, CommandError

from algebra.exceptions import AlgebraError
from api.serializers import GroupSpecSerializer, error_paths
from cli.enums import FAMILY_FLAGS, ExitCode
from commuting.graphs import commuting_graph, write_edge_list
from groups.specs import group_from_spec
from groups.tables import GroupTable

logger = logging.getLogger(__name__)


def read_json(path: str):
    try:
        with open(path) as f:
            return json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise CommandError(f'{path}: {e}', returncode=ExitCode.PARSE_ERROR)


class GroupCommand(BaseCommand):

    def add_arguments(self, parser):
        parser.add_argument('spec', nargs='?', help='GroupSpec JSON file')
        parser.add_argument('--family', help='Named family, built from the integer flags below')
        for flag in FAMILY_FLAGS:
            parser.add_argument(f'--{flag}', dest=flag, type=int)
        parser.add_argument('--dump-graph', dest='dump_graph', metavar='FILE',
                            help='Write the commuting graph as an edge list')

    def read_spec(self, options) -> dict:
        if options.get('spec') and options.get('family'):
            raise CommandError('Give a GroupSpec file or --family, not both', returncode=ExitCode.PARSE_ERROR)
        if options.get('spec'):
            data = read_json(options['spec'])
        elif options.get('family'):
            params = {flag: options[flag] for flag in FAMILY_FLAGS if options.get(flag) is not None}
            data = {'family': options['family'], 'params': params}
        else:
            raise CommandError('A GroupSpec file or --family is required', returncode=ExitCode.PARSE_ERROR)

        serializer = GroupSpecSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError('; '.join(error_paths(serializer.errors)), returncode=ExitCode.PARSE_ERROR)
        return serializer.validated_data

    def build_group(self, options) -> GroupTable:
        spec = self.read_spec(options)
        try:
            G = group_from_spec(spec)
        except AlgebraError as e:
            raise CommandError(str(e), returncode=ExitCode.CONSTRUCTION_ERROR)
        if options.get('dump_graph'):
            write_edge_list(commuting_graph(G), options['dump_graph'])
        return G

    def write_json(self, data):
        self.stdout.write(json.dumps(data, indent=2))
