"""
Development settings for gaugeradii project.
"""

from .base import *

DEBUG = True

LOGGING['loggers']['apps']['level'] = env('GAUGE_RADII_LOG_LEVEL', default='INFO').upper()
