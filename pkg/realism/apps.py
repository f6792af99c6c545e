from django.apps import AppConfig


class RealismConfig(AppConfig):
    name = 'realism'
    verbose_name = 'Realism witnesses and hidden-variable models'
