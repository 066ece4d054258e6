"""Exception hierarchy shared across the toolkit."""


class OlabError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(OlabError):
    """Malformed or unsupported configuration record."""


class DomainError(OlabError):
    """Argument outside the mathematical domain of an operation."""


class ParameterError(DomainError):
    """Constructor parameter outside its admissible range."""


class UnrepresentableBallError(DomainError):
    """Requested ball does not fit inside the sampled domain."""
