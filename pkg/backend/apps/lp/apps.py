from django.apps import AppConfig


class LpConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.lp"
    verbose_name = "Linear programs"
