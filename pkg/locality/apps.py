from django.apps import AppConfig


class LocalityConfig(AppConfig):
    name = 'locality'
    verbose_name = 'Strong and weak locality'
