"""Exception hierarchy shared across the engine."""


class EngineError(Exception):
    """Base class for engine-specific failures."""


class ConfigError(EngineError):
    """Invalid or inconsistent configuration."""


class DataError(EngineError):
    """Problems with input data or the dataset store."""


class MalformedHeaderError(DataError):
    """CSV header does not match the expected OHLCV schema."""


class StoreIOError(DataError):
    """The dataset store failed to read or write."""


class InsufficientHistoryError(DataError):
    """Not enough bars to satisfy a window or warm-up request."""


class WarmupError(InsufficientHistoryError):
    """Window warm-up is shorter than the indicator configuration requires."""
