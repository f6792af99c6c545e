from django.apps import AppConfig


class MatcoreConfig(AppConfig):
    name = 'matcore'
    verbose_name = 'Dense complex linear algebra'
