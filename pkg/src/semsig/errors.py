"""Exception hierarchy.

``InputError`` subclasses describe bad data or bad arguments; ``ComputationError``
subclasses describe inputs that were well formed but could not be processed.
The CLI maps the two families to exit codes 1 and 2.
"""


class SemsigError(Exception):
    """Base class for every error raised by the package."""

    def details(self):
        """Extra machine-readable fields for error reports."""
        return {}


class InputError(SemsigError):
    pass


class ComputationError(SemsigError):
    pass


class NonFiniteSample(InputError):
    def __init__(self, index, value):
        super().__init__(f"sample {index} is not finite ({value!r})")
        self.index = index
        self.value = value

    def details(self):
        return {"index": self.index}


class NonPositiveRate(InputError):
    def __init__(self, rate):
        super().__init__(f"sample rate must be positive, got {rate!r}")
        self.rate = rate


class AliasedFrequency(InputError):
    def __init__(self, freq_hz, sample_rate_hz):
        super().__init__(
            f"frequency {freq_hz} Hz is at or above Nyquist for {sample_rate_hz} Hz sampling"
        )


class DegeneratePhase(InputError):
    def __init__(self, phase, n_samples):
        super().__init__(f"phase '{phase}' spans {n_samples} samples, need at least 3")
        self.phase = phase
        self.n_samples = n_samples

    def details(self):
        return {"phase": self.phase, "samples": self.n_samples}


class TooShort(InputError):
    def __init__(self, length, minimum):
        super().__init__(f"signal has {length} samples, need at least {minimum}")
        self.length = length
        self.minimum = minimum

    def details(self):
        return {"length": self.length, "minimum": self.minimum}


class BadWindow(InputError):
    pass


class BadRange(InputError):
    pass


class ParseError(InputError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line

    def details(self):
        return {"line": self.line}


class MissingColumn(InputError):
    def __init__(self, line, column):
        super().__init__(f"line {line}: no column {column}")
        self.line = line
        self.column = column

    def details(self):
        return {"line": self.line, "column": self.column}


class UnsupportedFormat(InputError):
    pass


class CorruptHeader(InputError):
    pass


class EmptySymbols(ComputationError):
    def __init__(self):
        super().__init__("symbol sequence is empty")


class InconsistentTriple(ComputationError):
    """Rounded signs that no three real samples can produce.

    Only reachable with a positive sign tolerance.
    """

    def __init__(self, triple, index=None):
        where = "" if index is None else f" at interior point {index}"
        super().__init__(f"sign triple {triple} is not realizable{where}")
        self.triple = tuple(triple)
        self.index = index

    def details(self):
        return {"triple": list(self.triple), "index": self.index}
