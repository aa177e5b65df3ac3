from django.core.exceptions import ValidationError

from peak_division.economy.exceptions import InvalidPeak  # noqa: F401


class InvalidReference(ValidationError):
    pass


class InvalidOrder(ValidationError):
    pass


class UnknownRule(ValidationError):
    pass
