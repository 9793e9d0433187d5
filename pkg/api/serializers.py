from rest_framework import serializers

from groups.enums import Family
from groups.families import normalize_family
from groups.exceptions import UnknownFamily
from partitions.certificates import PartitionCertificate


def error_paths(errors, prefix: str = '') -> list[str]:
    """Flatten DRF's nested error structure into 'generators[1]: message' and 'params.k: message' lines."""
    lines = []
    if isinstance(errors, dict):
        for key, value in errors.items():
            if key == 'non_field_errors':
                path = prefix
            elif isinstance(key, int):
                path = f'{prefix}[{key}]'
            else:
                path = f'{prefix}.{key}' if prefix else str(key)
            lines.extend(error_paths(value, path))
    elif isinstance(errors, list):
        for value in errors:
            lines.extend(error_paths(value, prefix))
    else:
        lines.append(f'{prefix}: {errors}' if prefix else str(errors))
    return lines


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class DecimalStringField(serializers.Field):
    """Integers of any size as base-10 strings."""

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        try:
            return int(str(data))
        except ValueError:
            raise serializers.ValidationError('Expected a decimal integer string.')


class FactorsField(serializers.Field):

    def to_representation(self, value):
        return [[p, e] for p, e in value]


class FieldSpecSerializer(serializers.Serializer):
    p = serializers.IntegerField(min_value=2)
    n = serializers.IntegerField(min_value=1, default=1)


class GroupSpecSerializer(serializers.Serializer):
    family = serializers.CharField(required=False)
    params = serializers.DictField(required=False, default=dict)
    generators = serializers.ListField(child=serializers.JSONField(), required=False, allow_empty=False)
    field = FieldSpecSerializer(required=False)
    points = serializers.IntegerField(required=False, min_value=1)
    name = serializers.CharField(required=False, allow_blank=True)

    def validate_family(self, value):
        try:
            return normalize_family(value).value
        except UnknownFamily as e:
            raise serializers.ValidationError(str(e))

    def validate_generators(self, value):
        errors = {}
        for index, generator in enumerate(value):
            if not isinstance(generator, list) or not all(isinstance(row, list) for row in generator):
                errors[index] = ['Expected a list of cycles or matrix rows.']
            elif not all(_is_int(entry) for row in generator for entry in row):
                errors[index] = ['Entries must be integers.']
        if errors:
            raise serializers.ValidationError(errors)
        return value

    def _validate_params(self, family: str, params: dict) -> dict:
        if family != Family.DIRECT_PRODUCT:
            errors = {key: ['Must be an integer.'] for key, value in params.items() if not _is_int(value)}
            if errors:
                raise serializers.ValidationError({'params': errors})
            return params

        errors = {}
        validated = {}
        for side in ('left', 'right'):
            nested = GroupSpecSerializer(data=params.get(side))
            if params.get(side) is None:
                errors[side] = ['This field is required.']
            elif not nested.is_valid():
                errors[side] = nested.errors
            elif 'family' not in nested.validated_data:
                errors[side] = ['Direct product factors must be named families.']
            else:
                validated[side] = nested.validated_data
        if errors:
            raise serializers.ValidationError({'params': errors})
        return validated

    def validate(self, attrs):
        if ('family' in attrs) == ('generators' in attrs):
            raise serializers.ValidationError('Give exactly one of "family" or "generators".')
        if 'family' in attrs:
            if 'field' in attrs or 'points' in attrs:
                raise serializers.ValidationError('"field" and "points" only apply to generators.')
            attrs['params'] = self._validate_params(attrs['family'], attrs.get('params') or {})
        elif attrs.get('params'):
            raise serializers.ValidationError({'params': ['Only families take parameters.']})
        return attrs


class GroupProfileSerializer(serializers.Serializer):
    order = serializers.IntegerField()
    center = serializers.ListField(child=serializers.IntegerField())
    center_size = serializers.IntegerField()
    class_count = serializers.IntegerField()
    class_sizes = serializers.ListField(child=serializers.IntegerField())
    element_order_spectrum = serializers.ListField(child=serializers.IntegerField())
    max_spectrum = serializers.ListField(child=serializers.IntegerField())
    centralizer_count = serializers.IntegerField()
    is_ac = serializers.BooleanField()


class KappaResultSerializer(serializers.Serializer):
    value = DecimalStringField()
    method = serializers.CharField()
    factors = FactorsField(allow_null=True)
    notes = serializers.ListField(child=serializers.CharField())
    engines = serializers.SerializerMethodField()
    engines_agreed = serializers.BooleanField(allow_null=True)

    def get_engines(self, obj):
        return {str(method): str(value) for method, value in obj.engines.items()}


class PartitionCertificateSerializer(serializers.Serializer):
    A = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)
    blocks = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False),
    )
    n = serializers.IntegerField(read_only=True)
    block_sizes = serializers.ListField(child=serializers.IntegerField(), read_only=True)
    verified = serializers.BooleanField(read_only=True)

    def create(self, validated_data):
        return PartitionCertificate(
            A=tuple(validated_data['A']), blocks=tuple(tuple(block) for block in validated_data['blocks']),
        )


class VerificationReportSerializer(serializers.Serializer):
    ok = serializers.BooleanField()
    n = serializers.IntegerField()
    violation = serializers.CharField(allow_null=True)
    message = serializers.CharField(allow_blank=True)


class PartitionSearchResultSerializer(serializers.Serializer):
    result = serializers.CharField(source='outcome')
    mode = serializers.CharField()
    lower_bound = serializers.IntegerField()
    certificate = PartitionCertificateSerializer(allow_null=True)
    message = serializers.CharField(allow_blank=True)


class ClosedFormValueSerializer(serializers.Serializer):
    formula = serializers.CharField()
    value = DecimalStringField()
    factors = FactorsField()


class OracleValueSerializer(serializers.Serializer):
    engine = serializers.CharField()
    value = DecimalStringField()
    factors = FactorsField(allow_null=True)


class LedgerEntrySerializer(serializers.Serializer):
    formula = serializers.CharField()
    params = serializers.DictField()
    group = serializers.CharField(allow_blank=True)
    closed_form = ClosedFormValueSerializer(allow_null=True)
    oracles = OracleValueSerializer(many=True)
    verdict = serializers.CharField()
    classification = serializers.CharField()
    ms = serializers.FloatField()
    notes = serializers.ListField(child=serializers.CharField())

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if self.context.get('omit_timings'):
            data.pop('ms')
        return data
