from fractions import Fraction

from pydantic import BaseModel

from ..rationals import format_rational, parse_rational


class Rational(Fraction):
    """
    pydantic field type for exact rationals, read from "p/q", integer or
    decimal literals.
    """

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def __modify_schema__(cls, field_schema):
        field_schema.update(type="string", pattern=r"^-?\d+(\.\d+)?(/\d+)?$", examples=["27/2", "13.5"])

    @classmethod
    def validate(cls, value) -> Fraction:
        # ValidationError subclasses are not ValueErrors, pydantic needs one
        try:
            return parse_rational(value)
        except Exception as e:
            raise ValueError(str(e))


class ExactModel(BaseModel):
    class Config:
        frozen = True
        json_encoders = {Fraction: format_rational}
