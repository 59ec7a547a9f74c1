"""nilsplit: exact rational homotopy computations for nilmanifold fibers.

The package builds Chevalley-Eilenberg models of nilpotent Lie algebras,
computes their cohomology with exact rational arithmetic, certifies
symplectic structures, assembles twisted models of bundles over S2 (and
over formal bases with several degree-2 generators), and decides whether
the twisting coefficients of a Hamiltonian model are forced to vanish,
i.e. whether the total cohomology splits as base tensor fiber.
"""

__version__ = "0.1.0"

from .exterior import Element, FreeDGA, Generator, GradedAlgebra
from .lie_algebras import CEModel, LieAlgebraSpec, ce_model, validate

__all__ = [
    "__version__",
    "Element",
    "FreeDGA",
    "Generator",
    "GradedAlgebra",
    "CEModel",
    "LieAlgebraSpec",
    "ce_model",
    "validate",
]
