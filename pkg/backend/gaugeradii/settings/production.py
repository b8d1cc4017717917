"""
Production settings for gaugeradii project (batch runs on shared machines).
"""

from .base import *

DEBUG = False

SECRET_KEY = env('SECRET_KEY')
