"""Grey-level mathematical morphology on a logarithmic grey scale.

The package pairs the familiar additive (classical) morphological
operators with a family defined through the logarithmic image
processing model, where grey levels live on ``[-inf, M)`` plus the
absorbing bound ``M`` and combine multiplicatively through their
transmittances.  Both families share one structuring-function type and
one complete-lattice view of images, so they can be compared on equal
terms; the logarithmic operators come in two interchangeable
implementations (a direct one and a fast path through the absorbance
isomorphism).
"""

from .classical import (
    closing,
    dilation,
    dilation_reference,
    erosion,
    erosion_reference,
    gradient,
    opening,
)
from .image import (
    as_grey_image,
    complement,
    exposure_change,
    is_displayable,
    rescale_for_display,
    two_peak_signal,
)
from .io import load_image, load_signal_csv, save_image, save_signal_csv
from .lip import (
    DEFAULT_M,
    from_absorbance,
    lip_add,
    lip_multiply,
    lip_negate,
    lip_subtract,
    to_absorbance,
    transmittance,
)
from .logarithmic import (
    check_duality,
    log_closing,
    log_dilation,
    log_erosion,
    log_gradient,
    log_opening,
    negative_image,
)
from .structuring import StructuringFunction, flat_sf, hemisphere_sf

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_M",
    "lip_add",
    "lip_subtract",
    "lip_negate",
    "lip_multiply",
    "transmittance",
    "to_absorbance",
    "from_absorbance",
    "StructuringFunction",
    "hemisphere_sf",
    "flat_sf",
    "as_grey_image",
    "is_displayable",
    "complement",
    "rescale_for_display",
    "exposure_change",
    "two_peak_signal",
    "load_image",
    "save_image",
    "load_signal_csv",
    "save_signal_csv",
    "erosion",
    "dilation",
    "opening",
    "closing",
    "gradient",
    "erosion_reference",
    "dilation_reference",
    "log_erosion",
    "log_dilation",
    "log_opening",
    "log_closing",
    "log_gradient",
    "negative_image",
    "check_duality",
    "__version__",
]
