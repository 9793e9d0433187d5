import logging

from api.serializers import GroupProfileSerializer
from cli.base import GroupCommand
from groups.structure import profile

logger = logging.getLogger(__name__)


class Command(GroupCommand):
    help = 'Prints the profile of a group: order, centre, class sizes, element orders and centralizer count.'

    def handle(self, *args, **options):
        G = self.build_group(options)
        self.write_json({'name': G.name, **GroupProfileSerializer(profile(G)).data})
