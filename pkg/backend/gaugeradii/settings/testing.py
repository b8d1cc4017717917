"""
Test settings for gaugeradii project.
"""

from .base import *

DEBUG = False

# Tests pin the tolerances; GAUGE_RADII_TOL from the shell must not leak in
GAUGE_RADII = {
    **GAUGE_RADII,
    'EPS_GEO': 1e-9,
    'EPS_LP': 1e-9,
    'EPS_CERT': 1e-6,
    'CLASSIFY_TOL': 1e-6,
    'UNKNOWN_TOLERANCES': [],
    'WORKERS': 1,
}

LOGGING['loggers']['apps']['level'] = 'WARNING'
