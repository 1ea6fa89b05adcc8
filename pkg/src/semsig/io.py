"""Reading signals from CSV/WAV files and serializing reports."""
import csv
from dataclasses import asdict, dataclass, field
import json
import struct
import warnings

import numpy as np

from . import __version__
from .errors import CorruptHeader, MissingColumn, ParseError, UnsupportedFormat
from .signal import make_signal

_PCM = 1
_IEEE_FLOAT = 3
_EXTENSIBLE = 0xFFFE


def _parse_float(text):
    try:
        return float(text)
    except ValueError:
        return None


def read_csv(path, column=0, rate_hz=None):
    """Read one numeric column of a CSV file.

    A first row whose selected cell is not numeric is taken as a header and
    skipped; any later non-numeric cell is a :class:`ParseError`. Blank lines
    are ignored. CSV files carry no sample rate, so ``rate_hz`` is required.
    """
    if rate_hz is None:
        raise ValueError("a sample rate is required for CSV input")
    values = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if column >= len(row):
                raise MissingColumn(lineno, column)
            v = _parse_float(row[column].strip())
            if v is None:
                if lineno == 1:
                    continue
                raise ParseError(lineno, f"not a number: {row[column]!r}")
            values.append(v)
    return make_signal(values, rate_hz)


def _chunks(data):
    pos = 12
    while pos + 8 <= len(data):
        cid, size = struct.unpack_from("<4sI", data, pos)
        body = data[pos + 8:pos + 8 + size]
        if len(body) < size and cid != b"data":
            raise CorruptHeader(f"chunk {cid!r} truncated")
        yield cid, body
        pos += 8 + size + (size & 1)


def read_wav(path):
    """Read a RIFF/WAVE file holding 16-bit PCM or 32-bit float samples.

    Integer PCM is scaled to ``[-1, 1)``. For multichannel files only the
    first channel is kept and a ``UserWarning`` is issued.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise CorruptHeader("not a RIFF/WAVE file")

    fmt = None
    payload = None
    for cid, body in _chunks(data):
        if cid == b"fmt ":
            if len(body) < 16:
                raise CorruptHeader("fmt chunk too short")
            fmt = struct.unpack_from("<HHIIHH", body)
            if fmt[0] == _EXTENSIBLE:
                if len(body) < 26:
                    raise CorruptHeader("extensible fmt chunk too short")
                subformat = struct.unpack_from("<H", body, 24)[0]
                fmt = (subformat,) + fmt[1:]
        elif cid == b"data":
            payload = body
    if fmt is None:
        raise CorruptHeader("missing fmt chunk")
    if payload is None:
        raise CorruptHeader("missing data chunk")

    tag, channels, rate, _, block_align, bits = fmt
    if channels < 1 or rate < 1:
        raise CorruptHeader(f"bad header: {channels} channels at {rate} Hz")
    if tag == _PCM and bits == 16:
        dtype, scale = np.dtype("<i2"), 1 / 32768.0
    elif tag == _IEEE_FLOAT and bits == 32:
        dtype, scale = np.dtype("<f4"), 1.0
    else:
        raise UnsupportedFormat(f"format tag {tag} with {bits}-bit samples")
    if block_align != channels * dtype.itemsize:
        raise CorruptHeader(f"block align {block_align} does not match {channels} channels")

    n_frames = len(payload) // block_align
    frames = np.frombuffer(payload[:n_frames * block_align], dtype=dtype)
    frames = frames.reshape(n_frames, channels)
    if channels > 1:
        warnings.warn(f"{path}: {channels} channels, using the first one", stacklevel=2)
    return make_signal(frames[:, 0].astype(float) * scale, rate)


def read_signal(path, rate_hz=None, column=0):
    """Dispatch on extension: ``.wav`` files carry their own rate."""
    if str(path).lower().endswith(".wav"):
        return read_wav(path)
    return read_csv(path, column, rate_hz)


@dataclass
class Report:
    command: str
    inputs: list
    payload: dict
    tool_version: str = field(default=__version__)

    def to_json(self):
        return json.dumps(asdict(self), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text):
        obj = json.loads(text)
        return cls(command=obj["command"], inputs=obj["inputs"], payload=obj["payload"],
                   tool_version=obj["tool_version"])


def input_descriptor(path, signal):
    return {"path": str(path), "sample_rate_hz": signal.sample_rate_hz, "length": len(signal)}
