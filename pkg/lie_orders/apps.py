from django.apps import AppConfig


class LieOrdersConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "lie_orders"
