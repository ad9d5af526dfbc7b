"""File formats: 8-bit PGM (P5) and PNG images, CSV signals.

PGM is the bit-exact fixture format; PNG is supported for convenience
through Pillow.  Loaded pixel values k in 0..255 become float grey
values k (the grey scale bound being 256 by default).  Saving rounds
half up to integers and requires the result to fit 0..255, so raw
morphological output normally goes through ``rescale_for_display``
first.
"""

import os

import numpy as np
from PIL import Image as PILImage

from .image import as_grey_image

__all__ = ["load_image", "save_image", "save_signal_csv", "load_signal_csv"]

_HIGH_DEPTH_MODES = ("I", "I;16", "I;16B", "I;16L", "I;16N", "F")


def _read_pgm(path):
    with open(path, "rb") as fh:
        data = fh.read()

    tokens = []
    pos = 0
    while len(tokens) < 4 and pos < len(data):
        ch = data[pos : pos + 1]
        if ch.isspace():
            pos += 1
        elif ch == b"#":
            eol = data.find(b"\n", pos)
            pos = len(data) if eol == -1 else eol + 1
        else:
            end = pos
            while end < len(data) and not data[end : end + 1].isspace():
                end += 1
            tokens.append(data[pos:end])
            pos = end
    if len(tokens) < 4 or tokens[0] != b"P5":
        raise ValueError(f"{path}: not a binary PGM (P5) file")
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise ValueError(f"{path}: malformed PGM header") from None
    if maxval != 255:
        raise ValueError(f"{path}: unsupported PGM maxval {maxval} (need 255)")
    raster = data[pos + 1 : pos + 1 + width * height]
    if len(raster) != width * height:
        raise ValueError(f"{path}: truncated PGM raster")
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).astype(np.float64)


def _write_pgm(arr, path):
    height, width = arr.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        fh.write(arr.astype(np.uint8).tobytes())


def _read_png(path):
    img = PILImage.open(path)
    if img.mode in _HIGH_DEPTH_MODES:
        raise ValueError(f"{path}: unsupported bit depth (mode {img.mode})")
    if img.mode != "L":
        img = img.convert("L")  # luma transform for colour inputs
    return np.asarray(img, dtype=np.float64)


def load_image(path):
    """Load an 8-bit greyscale image (PGM P5 or PNG) as a float64 array.

    Colour PNGs are reduced to luma; 16-bit or float inputs are
    rejected.
    """
    ext = os.path.splitext(str(path))[1].lower()
    if ext == ".pgm":
        return _read_pgm(path)
    if ext == ".png":
        return _read_png(path)
    raise ValueError(f"{path}: unsupported image format {ext!r} (use .pgm or .png)")


def save_image(f, path):
    """Save an 8-bit displayable image, rounding half up to integers.

    Values must land in 0..255 after rounding; apply
    ``rescale_for_display`` first for raw operator output.
    """
    arr = as_grey_image(f)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if not np.isfinite(arr).all():
        raise ValueError("cannot save image with non-finite pixels; rescale first")
    rounded = np.floor(arr + 0.5)
    if rounded.min() < 0 or rounded.max() > 255:
        raise ValueError("image not displayable as 8-bit (values outside 0..255); rescale first")
    ext = os.path.splitext(str(path))[1].lower()
    if ext == ".pgm":
        _write_pgm(rounded, path)
    elif ext == ".png":
        PILImage.fromarray(rounded.astype(np.uint8), mode="L").save(path)
    else:
        raise ValueError(f"{path}: unsupported image format {ext!r} (use .pgm or .png)")


def save_signal_csv(signal, path):
    """Write a 1-D signal as ``x,value`` rows, 9 significant digits, LF endings."""
    arr = as_grey_image(signal)
    if arr.ndim != 1:
        raise ValueError("CSV export is for 1-D signals")
    lines = ["x,value"]
    lines.extend(f"{i},{v:.9g}" for i, v in enumerate(arr))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_signal_csv(path):
    """Read a signal written by `save_signal_csv`; returns the value column."""
    with open(path, "r", newline="") as fh:
        header = fh.readline().strip()
        if header != "x,value":
            raise ValueError(f"{path}: unexpected CSV header {header!r}")
        values = [float(line.split(",")[1]) for line in fh if line.strip()]
    return np.asarray(values, dtype=np.float64)
