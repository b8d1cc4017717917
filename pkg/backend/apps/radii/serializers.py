# backend/apps/radii/serializers.py
from rest_framework import serializers

from apps.convex.serializers import PointField


class RadiiProfileSerializer(serializers.Serializer):
    """Read-only rendering of a RadiiProfile for --json reports"""
    r = serializers.FloatField(read_only=True)
    D = serializers.FloatField(read_only=True)
    R = serializers.FloatField(read_only=True)
    s = serializers.FloatField(read_only=True)
    x = serializers.FloatField(read_only=True)
    y = serializers.FloatField(read_only=True)
    incenter = PointField(read_only=True)
    circumcenter = PointField(read_only=True)
    diameter_pair = serializers.ListField(child=PointField(), read_only=True)
    width_direction = PointField(read_only=True)
    symmetric = serializers.BooleanField(read_only=True)
