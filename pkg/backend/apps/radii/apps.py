from django.apps import AppConfig


class RadiiConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.radii"
    verbose_name = "Radii functionals"
