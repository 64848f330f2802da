from django.apps import AppConfig


class IndependenceConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "independence"
