"""Exact computation for r-wise t-intersecting uniform set families:
extremal searches with certified bounds, canonical constructions, shifting,
lattice-path counts, and walk hitting probabilities.
"""

from ._kernel import BACKEND, HAVE_COMPILED
from .families import Family, family, load_family, save_family

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HAVE_COMPILED",
    "Family",
    "family",
    "load_family",
    "save_family",
    "__version__",
]
