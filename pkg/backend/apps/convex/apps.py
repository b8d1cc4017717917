from django.apps import AppConfig


class ConvexConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.convex"
    verbose_name = "Convex polygons"
