"""Zariski, flat and patch topologies on prime spectra.

Finite commutative rings (``spectra.rings``), finite spectral spaces as
posets (``spectra.poset``), the Pierce spectrum (``spectra.pierce``) and
symbolic one-dimensional spectra such as Spec(Z) (``spectra.zspec``).
"""

__version__ = "0.1.0"

from .poset import FLAT, PATCH, ZARISKI, TopologyView, make_poset  # noqa: E402
from .rings import PolyQuotient, Product, Table, ZMod  # noqa: E402

__all__ = [
    "FLAT",
    "PATCH",
    "ZARISKI",
    "TopologyView",
    "make_poset",
    "PolyQuotient",
    "Product",
    "Table",
    "ZMod",
]
