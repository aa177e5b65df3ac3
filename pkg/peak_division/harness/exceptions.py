from django.core.exceptions import ValidationError


class InvalidScenario(ValidationError):
    pass


class UnknownBuiltin(Exception):
    pass


class GoldenMismatch(Exception):
    pass


class ReportWriteError(Exception):
    pass
