# backend/apps/convex/serializers.py
import json
import math

from rest_framework import serializers

from core.exceptions import GeometryError
from .geometry import ConvexPolygon, Point


class PolygonSerializer(serializers.Serializer):
    """
    Polygon text format: {"vertices": [[x, y], ...]}, counterclockwise.
    Clockwise input is accepted and reversed.
    """
    vertices = serializers.ListField(
        child=serializers.ListField(
            child=serializers.FloatField(),
            min_length=2,
            max_length=2,
        ),
        min_length=1,
    )

    def validate_vertices(self, value):
        """Reject NaN and infinite coordinates"""
        for pair in value:
            if not all(math.isfinite(c) for c in pair):
                raise serializers.ValidationError("Coordinates must be finite numbers")
        return value

    def validate(self, attrs):
        """Build the polygon; points out of convex position are an error"""
        try:
            attrs['polygon'] = ConvexPolygon(attrs['vertices'])
        except GeometryError as exc:
            raise serializers.ValidationError({'vertices': str(exc)})
        return attrs

    def create(self, validated_data):
        return validated_data['polygon']

    def to_representation(self, instance):
        return {'vertices': [[x, y] for x, y in instance.vertices]}


def parse_polygon(text):
    """Polygon from a JSON document; raises serializers.ValidationError"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise serializers.ValidationError(f"Invalid JSON: {exc.msg}")
    if not isinstance(data, dict):
        raise serializers.ValidationError("Expected an object with a 'vertices' field")
    serializer = PolygonSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def dump_polygon(polygon):
    return json.dumps(PolygonSerializer(polygon).data)


class PointField(serializers.Field):
    """A Point as an [x, y] pair"""

    default_error_messages = {
        'invalid': 'Expected a pair of finite numbers.',
    }

    def to_representation(self, value):
        return [float(value[0]), float(value[1])]

    def to_internal_value(self, data):
        try:
            x, y = (float(c) for c in data)
        except (TypeError, ValueError):
            self.fail('invalid')
        if not (math.isfinite(x) and math.isfinite(y)):
            self.fail('invalid')
        return Point(x, y)
