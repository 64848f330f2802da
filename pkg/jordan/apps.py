from django.apps import AppConfig


class JordanConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "jordan"
