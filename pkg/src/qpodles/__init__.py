"""Exact computer algebra for the Podles sphere and its Z2 orbifolds.

Submodules: ``qscalar`` (the field Q(q)), ``podles`` (the algebra),
``crossed`` (crossed products), ``resolution`` (bar and MNW resolutions),
``exactla`` (sparse linear algebra), ``homology`` (Hochschild and cyclic
homology), ``chern`` (pairings and index tables) and ``cli``.
"""

from qpodles.qscalar import KERNEL, RatFunc
from qpodles.podles import AlgebraElement, AutoSpec, PBWMonomial, Podles, mu, sigma

__version__ = "0.1.0"

__all__ = ["RatFunc", "Podles", "PBWMonomial", "AlgebraElement", "AutoSpec", "sigma", "mu",
           "KERNEL", "__version__"]
