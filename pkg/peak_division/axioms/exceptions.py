from django.core.exceptions import ValidationError


class InvalidGrid(ValidationError):
    pass


class UnknownAxiom(ValidationError):
    pass


class MultiCommodity(Exception):
    pass


class InconsistentImplication(Exception):
    pass
