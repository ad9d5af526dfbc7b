"""Bundled sample photographs for demos and the exposure study.

The images are public-domain test photographs (the classic
cameraman/coins/moon trio shipped with scikit-image), downsampled to at
most 256 pixels per side and stored as binary PGM so the package has no
runtime dependency on scikit-image.
"""

from importlib import resources

__all__ = ["sample_names", "sample_image"]


def sample_names():
    """Names accepted by :func:`sample_image`, sorted."""
    names = []
    for entry in resources.files(__name__).iterdir():
        if entry.name.endswith(".pgm"):
            names.append(entry.name[: -len(".pgm")])
    return sorted(names)


def sample_image(name):
    """Load a bundled sample image as a float64 array of 0..255 grey levels."""
    from ..io import load_image

    ref = resources.files(__name__) / f"{name}.pgm"
    if not ref.is_file():
        raise ValueError(f"unknown sample image {name!r} (have {', '.join(sample_names())})")
    with resources.as_file(ref) as path:
        return load_image(path)
