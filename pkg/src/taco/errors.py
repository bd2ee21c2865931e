"""Exception types shared across the engine."""


class TacoError(Exception):
    """Base class for engine errors."""


class ParseError(TacoError):
    """A data file could not be parsed."""


class ValidationError(TacoError):
    """A loaded record violates an invariant."""


class EmptyStep(TacoError):
    """A raw step was blank."""


class EmptyInput(TacoError):
    """An operation received blank text where content is required."""


class UnparseableNavigation(TacoError):
    """A navigation utterance matched no known command pattern."""


class SpecError(TacoError):
    """A simulator spec references an unresolvable placeholder."""


class InsufficientData(TacoError):
    """A training label has too few examples."""

    def __init__(self, label: str, count: int, minimum: int):
        self.label = label
        self.count = count
        self.minimum = minimum
        super().__init__(f"label {label!r} has {count} examples, needs >= {minimum}")


class EmptyCorpus(TacoError):
    """Tried to index an empty corpus."""


class NonFiniteScore(TacoError):
    """A score vector contained NaN or infinity."""


class NoUsableEntries(TacoError):
    """No weak-label entry was usable for training."""


class MissingGold(TacoError):
    """An evaluated query has no gold labels."""


class EmptyVariantList(TacoError):
    """A responder has no template variants."""


class MissingSlot(TacoError):
    """A declared template slot was not given a value."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing value for slot {name!r}")


class UnknownSlot(TacoError):
    """A slot value was supplied that the template does not declare."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"undeclared slot {name!r}")


class EmptyFavorites(TacoError):
    """The favorites list is empty."""


class EmptyQuestion(TacoError):
    """A question classifier received blank text."""


class ItemNotFound(TacoError):
    """List removal did not match any item."""


class InvalidTimerState(TacoError):
    """A timer operation is not valid in the timer's current state."""

    def __init__(self, current: str, requested: str):
        self.current = current
        self.requested = requested
        super().__init__(f"cannot {requested} a timer in state {current}")


class EmptyHistory(TacoError):
    """Tried to pop an empty dialogue-state history stack."""


class StorageError(TacoError):
    """Session persistence failed at the I/O level."""


class VersionConflict(TacoError):
    """Optimistic write lost to a concurrent writer."""

    def __init__(self, session_id: str, expected: int, actual: int):
        self.session_id = session_id
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"session {session_id}: stored version {actual}, caller had {expected}"
        )


class SessionBusy(TacoError):
    """Another turn is already in flight for this session."""


class NotFound(TacoError):
    """Unknown session id."""


class EmptyTranscript(TacoError):
    """Cannot export a conversation case from an empty transcript."""


class MissingDataset(TacoError):
    """An evaluation dataset file is absent or empty."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"missing or empty dataset: {name}")
