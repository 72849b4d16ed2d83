"""Exception types shared across the toolkit."""


class BlockadeError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(BlockadeError):
    """Invalid configuration or scenario input.

    ``path`` points at the offending field, e.g. ``"system.kappa"``.
    """

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class NumericalError(BlockadeError):
    """Integration failed or produced non-finite / unphysical output."""


class TruncationError(BlockadeError):
    """The requested state cannot be represented in the truncated basis."""


class UndefinedValueError(BlockadeError):
    """A quantity (e.g. g2 of a near-vacuum state) is not defined."""
