from django.apps import AppConfig


class DiagramConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.diagram"
    verbose_name = "Blaschke-Santaló diagrams"
