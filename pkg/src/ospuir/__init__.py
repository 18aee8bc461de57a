"""Exact tools for lowest-weight representations of osp(1|2n, R).

The package decides unitarity of positive-energy lowest-weight modules,
locates reduction points and (sub)singular vectors, and computes character
series, all in exact rational arithmetic.
"""

from ospuir.root_system import RootSystemData, build_root_system
from ospuir.weights import Signature, lowest_weight, dynkin_labels

__all__ = [
    "RootSystemData",
    "build_root_system",
    "Signature",
    "lowest_weight",
    "dynkin_labels",
]

__version__ = "0.1.0"
