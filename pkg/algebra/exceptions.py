class AlgebraError(ValueError):
    pass


class NonPrimeCharacteristic(AlgebraError):
    pass


class UnsupportedSize(AlgebraError):
    pass


class CarrierMismatch(AlgebraError):
    pass


class InvalidElement(AlgebraError):
    pass
