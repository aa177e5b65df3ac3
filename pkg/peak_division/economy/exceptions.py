from django.core.exceptions import ValidationError


class InvalidRational(ValidationError):
    pass


class InvalidEndowment(ValidationError):
    pass


class InvalidDimensions(ValidationError):
    pass


class ShapeError(ValidationError):
    pass


class InvalidPeak(ValidationError):
    pass


class InfeasibleAllocation(ValidationError):
    pass


class InvalidPreference(ValidationError):
    pass


class BetweennessHolds(ValidationError):
    pass
