from django.apps import AppConfig


class CommutingConfig(AppConfig):
    name = 'commuting'
