from django.apps import AppConfig


class TreecountConfig(AppConfig):
    name = 'treecount'
