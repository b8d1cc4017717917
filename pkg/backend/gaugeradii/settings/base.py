"""
Django settings for gaugeradii project.

The project has no web surface: Django provides configuration, logging,
management commands and the template engine used for SVG rendering.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

from pathlib import Path
import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent.parent

# Initialize django-environ
env = environ.Env(
    DEBUG=(bool, False),
    GAUGE_RADII_WORKERS=(int, 1),
    GAUGE_RADII_LOG_LEVEL=(str, 'WARNING'),
)

# Read .env file if present; every setting below has a default
env_file = BASE_DIR / '.env'
if env_file.exists():
    environ.Env.read_env(env_file)


SECRET_KEY = env('SECRET_KEY', default='gaugeradii-local-only-key')

DEBUG = env('DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "rest_framework",

    # Local apps
    'apps.convex',
    'apps.lp',
    'apps.radii',
    'apps.containment',
    'apps.diagram',
    'apps.cli',
]

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "autoescape": True,
        },
    },
]

# No persistence: results go to CSV/SVG/report files chosen on the command line
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True


# Numerical configuration
# GAUGE_RADII_TOL overrides tolerances, e.g. "geo=1e-9,lp=1e-10,cert=1e-6"
TOLERANCE_OVERRIDES = env.dict('GAUGE_RADII_TOL', cast={'value': float}, default={})

GAUGE_RADII = {
    'EPS_GEO': TOLERANCE_OVERRIDES.get('geo', 1e-9),
    'EPS_LP': TOLERANCE_OVERRIDES.get('lp', 1e-9),
    'EPS_CERT': TOLERANCE_OVERRIDES.get('cert', 1e-6),
    'CLASSIFY_TOL': TOLERANCE_OVERRIDES.get('classify', 1e-6),
    'UNKNOWN_TOLERANCES': sorted(set(TOLERANCE_OVERRIDES) - {'geo', 'lp', 'cert', 'classify'}),
    'DISK_SEGMENTS': 720,
    'WORKERS': env('GAUGE_RADII_WORKERS'),
    'LEXICOGRAPHIC_TIES': True,
}


# Logging
LOG_LEVEL = env('GAUGE_RADII_LOG_LEVEL').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'core': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}
