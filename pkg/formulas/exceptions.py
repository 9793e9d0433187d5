class FormulaError(ValueError):
    pass


class UnknownFormula(FormulaError):
    pass


class ParamsOutOfRange(FormulaError):
    pass
