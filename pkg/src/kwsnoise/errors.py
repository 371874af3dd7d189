"""Exception types shared across the workbench."""


class KwsError(Exception):
    """Base class for all workbench errors."""


class EmptyBufferError(KwsError, ValueError):
    """An operation received a zero-length audio buffer."""


class InsufficientNoiseError(KwsError, ValueError):
    """A noise source clip is shorter than the requested chunk."""


class DegenerateInputError(KwsError, ValueError):
    """An input has zero power (or is otherwise unusable) for SNR mixing."""


class ShapeError(KwsError, ValueError):
    """Tensor shapes do not compose."""


class ConfigError(KwsError, ValueError):
    """An invalid layer / feature / experiment configuration."""


class LabelError(KwsError, ValueError):
    """A class label outside the valid range."""


class StateError(KwsError, RuntimeError):
    """An operation was called in the wrong order (e.g. backward before forward)."""


class DegenerateBatchError(KwsError, ValueError):
    """Batch statistics requested over fewer than two values."""


class DatasetError(KwsError, ValueError):
    """A dataset is empty or missing a required split."""


class IngestionError(KwsError, ValueError):
    """A dataset directory is missing or contains no usable audio."""


class DivergenceError(KwsError, ArithmeticError):
    """Training produced a non-finite loss.

    Carries the epoch and batch index at which the divergence occurred.
    """

    def __init__(self, epoch, batch):
        self.epoch = epoch
        self.batch = batch
        super().__init__(f"non-finite training loss at epoch {epoch}, batch {batch}")
