"""monoidgeom: finitely generated commutative monoids and the affine monoid
schemes they define.

Core entry points:

- lattice:   Smith normal form, cokernels, Hilbert bases (``lattice``, ``cones``)
- monoids:   :class:`~monoidgeom.affine.AffineMonoid` and friends    (``affine``)
- spectra:   faces, primes, ideals, localization                    (``specm``)
- duality:   Hom(Q, N), valuations, ball counts                     (``duality``)
- algebras:  R[Q], R[Q,K], truncated series, Rees monoids           (``algebra``)
- words:     finitely presented monoids                             (``presentation``)
- service:   FastAPI app wrapping everything (``monoidgeom.service.app``)
- cli:       ``monoidgeom`` console script, a thin client of the service
"""

from .affine import AffineMonoid, MonoidHom
from .lattice import AbelianGroup, GroupElement, IntMatrix
from .presentation import Presentation
from .specm import Face, MonoidIdeal, PrimeIdeal, SpecPoset
from .tristate import TriState

__version__ = "0.1.0"

__all__ = [
    "AffineMonoid",
    "MonoidHom",
    "AbelianGroup",
    "GroupElement",
    "IntMatrix",
    "Presentation",
    "Face",
    "MonoidIdeal",
    "PrimeIdeal",
    "SpecPoset",
    "TriState",
    "__version__",
]
