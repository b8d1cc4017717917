# backend/apps/containment/serializers.py
from rest_framework import serializers

from apps.convex.serializers import PointField, PolygonSerializer


class ContainmentCertificateSerializer(serializers.Serializer):
    """Read-only rendering of a certificate (contacts in the frame of C)"""
    k = serializers.IntegerField(read_only=True)
    points = serializers.ListField(child=PointField(), read_only=True)
    normals = serializers.ListField(child=PointField(), read_only=True)
    mu = serializers.ListField(child=serializers.FloatField(), source='weights', read_only=True)
    translation = PointField(read_only=True)
    scale = serializers.FloatField(read_only=True)
    residual = serializers.FloatField(read_only=True)


class HalfplaneRegionSerializer(serializers.Serializer):
    normals = serializers.ListField(child=PointField(), read_only=True)
    offsets = serializers.ListField(child=serializers.FloatField(), read_only=True)
    is_strip = serializers.BooleanField(read_only=True)


class SimplexReductionSerializer(serializers.Serializer):
    """Reduction summary with the guarantee slacks"""
    k = serializers.IntegerField(read_only=True)
    T = PolygonSerializer(read_only=True)
    S = HalfplaneRegionSerializer(read_only=True)
    Ssym = HalfplaneRegionSerializer(read_only=True, allow_null=True)
    R_TS = serializers.FloatField(read_only=True)
    r_TS = serializers.FloatField(read_only=True)
    D_TS = serializers.FloatField(read_only=True)
    slacks = serializers.DictField(child=serializers.FloatField(), source='guarantee_slacks', read_only=True)
