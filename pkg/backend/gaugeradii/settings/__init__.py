"""
Settings package: base, development (default), testing, production.
"""
