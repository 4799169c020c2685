class DomainError(ValueError):
    """An argument lies outside the range where a formula is stated.

    ``parameter`` names the offending argument so the CLI can report it.
    """

    def __init__(self, parameter: str, message: str):
        super().__init__(message)
        self.parameter = parameter
