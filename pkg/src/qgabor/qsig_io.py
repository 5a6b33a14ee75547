"""File formats: QSIG2D signals/spectra, P6 PPM ingestion, P5 PGM export,
and the flat key = value report document.

QSIG2D layout (all little-endian):

    magic   6 bytes  b"QSIG2D"
    version u32      1
    n1, n2  u32, u32
    h1, h2  f64, f64
    centered u8      0 or 1
    payload n1*n2 quaternions, 4 f64 each (w, x, y, z), row-major

Round trips are bit-exact.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import (
    BadMagic,
    BadVersion,
    NonFinite,
    TruncatedPayload,
    UnsupportedFormat,
)
from .grid import GridSpec, QSignal2D
from .qft import QSpectrum2D

_MAGIC = b"QSIG2D"
_VERSION = 1
_HEADER = struct.Struct("<6sIIIddB")


def write_qsig(path, obj) -> None:
    """Write a QSignal2D or QSpectrum2D (anything with .spec and .data)."""
    spec, data = obj.spec, obj.data
    if not np.all(np.isfinite(data)):
        raise NonFinite("refusing to write non-finite samples")
    header = _HEADER.pack(_MAGIC, _VERSION, spec.n1, spec.n2,
                          spec.h1, spec.h2, 1 if spec.centered else 0)
    payload = np.ascontiguousarray(data, dtype="<f8").tobytes()
    Path(path).write_bytes(header + payload)


def _read_raw(path) -> tuple[GridSpec, np.ndarray]:
    blob = Path(path).read_bytes()
    if len(blob) < _HEADER.size or blob[:6] != _MAGIC:
        raise BadMagic(f"{path}: not a QSIG2D file")
    magic, version, n1, n2, h1, h2, centered = _HEADER.unpack_from(blob)
    if version != _VERSION:
        raise BadVersion(f"{path}: version {version}, expected {_VERSION}")
    expected = 32 * n1 * n2
    payload = blob[_HEADER.size:]
    if len(payload) != expected:
        raise TruncatedPayload(
            f"{path}: payload is {len(payload)} bytes, header promises {expected}"
        )
    data = np.frombuffer(payload, dtype="<f8").reshape(n1, n2, 4)
    if not np.all(np.isfinite(data)):
        raise NonFinite(f"{path}: payload contains non-finite values")
    return GridSpec(n1, n2, h1, h2, bool(centered)), data


def read_qsig(path) -> QSignal2D:
    spec, data = _read_raw(path)
    return QSignal2D(spec, data)


def read_qspec(path) -> QSpectrum2D:
    """Read a file written from a spectrum, keeping frequency-grid metadata."""
    spec, data = _read_raw(path)
    return QSpectrum2D(spec, data)


def ingest_ppm(path) -> QSignal2D:
    """Binary P6 PPM (maxval 255) to a pure-quaternion signal:
    w = 0, (x, y, z) = (R, G, B) / 255, unit spacing, uncentered."""
    blob = Path(path).read_bytes()
    fields, offset = _ppm_header(blob, path)
    if fields[0] != b"P6":
        raise UnsupportedFormat(f"{path}: expected binary P6, got {fields[0]!r}")
    width, height, maxval = (int(v) for v in fields[1:])
    if maxval != 255:
        raise UnsupportedFormat(f"{path}: only maxval 255 is supported")
    need = 3 * width * height
    raw = blob[offset:offset + need]
    if len(raw) != need:
        raise UnsupportedFormat(f"{path}: pixel data truncated")
    rgb = np.frombuffer(raw, dtype=np.uint8).reshape(height, width, 3)
    data = np.zeros((height, width, 4))
    data[..., 1:] = rgb / 255.0
    return QSignal2D(GridSpec(height, width, 1.0, 1.0, centered=False), data)


def _ppm_header(blob: bytes, path) -> tuple[list[bytes], int]:
    """Parse magic, width, height, maxval; handles comments and whitespace."""
    fields: list[bytes] = []
    i = 0
    while len(fields) < 4:
        if i >= len(blob):
            raise UnsupportedFormat(f"{path}: incomplete header")
        c = blob[i:i + 1]
        if c == b"#":
            while i < len(blob) and blob[i:i + 1] not in (b"\n", b"\r"):
                i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < len(blob) and not blob[j:j + 1].isspace() and blob[j:j + 1] != b"#":
                j += 1
            fields.append(blob[i:j])
            i = j
    return fields, i + 1  # single whitespace byte after maxval


def export_heatmap(values: np.ndarray, path) -> None:
    """Write a non-negative 2D array as binary P5 PGM, linearly scaled so
    the maximum maps to 255; an all-zero array maps to all-zero bytes."""
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 2:
        raise ValueError("heatmap expects a 2D array")
    if np.any(values < 0) or not np.all(np.isfinite(values)):
        raise ValueError("heatmap values must be finite and >= 0")
    peak = values.max()
    scaled = np.zeros_like(values) if peak == 0.0 else values * (255.0 / peak)
    pixels = np.rint(scaled).astype(np.uint8)
    h, w = values.shape
    Path(path).write_bytes(b"P5\n%d %d\n255\n" % (w, h) + pixels.tobytes())


def format_report(entries: dict[str, object]) -> str:
    """Flat, diff-friendly key = value document."""
    lines = []
    for key, value in entries.items():
        if isinstance(value, float):
            value = repr(value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        key, _, value = line.partition(" = ")
        out[key] = value
    return out
