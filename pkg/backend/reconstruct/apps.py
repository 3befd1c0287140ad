from django.apps import AppConfig


class ReconstructConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'reconstruct'
