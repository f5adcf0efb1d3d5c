"""Exception hierarchy shared across the package.

Three failure classes matter to callers (and to the CLI, which maps them
to distinct exit codes): configuration problems, bad or missing data, and
numeric faults. Everything raised by this package derives from
:class:`FlowcastError`.
"""


class FlowcastError(Exception):
    """Base class for all errors raised by flowcast."""


class ConfigError(FlowcastError):
    """Invalid, contradictory, or unparseable configuration."""


class DataError(FlowcastError):
    """Missing files, malformed records, or inputs violating contracts."""


class OutOfBoundsError(DataError):
    """A coordinate or timestamp falls outside the configured study area."""


class StructuralError(DataError):
    """Shapes, layouts, or caches do not line up (programming error)."""


class CheckpointError(DataError):
    """Unreadable checkpoint or format-version mismatch."""


class NumericError(FlowcastError):
    """Non-finite values or an undefined metric."""


class TrainingDivergedError(NumericError):
    """Loss became non-finite during optimization."""
