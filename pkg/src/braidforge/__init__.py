"""braidforge: planar degenerations, braid monodromy factorizations, and
fundamental group presentations of branch curve complements."""

from .braids import BraidWord, braid_equal, full_twist, block_full_twist
from .paths import PathSpec, HalfTwist, compile_path
from .freewords import artin_action

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "braid_equal",
    "full_twist",
    "block_full_twist",
    "PathSpec",
    "HalfTwist",
    "compile_path",
    "artin_action",
    "__version__",
]
