"""Built-in algebra catalog.

Abelian tori in dimensions 2, 4, 6; the dimension-3 Heisenberg algebra;
the Kodaira-Thurston algebra h3 + R (the classical symplectic non-Kahler
four-manifold); h5 + R, which is even-dimensional yet admits no symplectic
structure (no closed 2-form pairs x5 with anything); and two
six-dimensional symplectic nilpotent algebras from the standard
low-dimensional classification: h3 + h3 and the free 2-step nilpotent
algebra on three generators. Symplectic entries carry a known closed
nondegenerate form so analyses are reproducible without searching.
"""

from __future__ import annotations

from fractions import Fraction

from .documents import AlgebraDocument
from .errors import DocumentError


def _doc(name, dim, brackets, omega=None) -> AlgebraDocument:
    return AlgebraDocument(
        name=name,
        dim=dim,
        brackets=tuple((i, j, k, Fraction(c)) for i, j, k, c in brackets),
        omega=None
        if omega is None
        else tuple((i, j, Fraction(c)) for i, j, c in omega),
    )


_CATALOG: dict[str, AlgebraDocument] = {}

for _d in (2, 4, 6):
    _CATALOG[f"torus{_d}"] = _doc(
        f"torus{_d}",
        _d,
        brackets=[],
        omega=[(2 * t + 1, 2 * t + 2, 1) for t in range(_d // 2)],
    )

_CATALOG["heisenberg3"] = _doc("heisenberg3", 3, brackets=[(1, 2, 3, 1)])

_CATALOG["kodaira-thurston"] = _doc(
    "kodaira-thurston",
    4,
    brackets=[(1, 2, 3, 1)],
    omega=[(1, 4, 1), (2, 3, 1)],
)

_CATALOG["heisenberg5-plus-r"] = _doc(
    "heisenberg5-plus-r",
    6,
    brackets=[(1, 2, 5, 1), (3, 4, 5, 1)],
)

# [X1,X2]=X3, [X4,X5]=X6: d x3 = -x1 x2 and d x6 = -x4 x5, so the listed
# omega pairs each center generator with one from the other block.
_CATALOG["h3-plus-h3"] = _doc(
    "h3-plus-h3",
    6,
    brackets=[(1, 2, 3, 1), (4, 5, 6, 1)],
    omega=[(1, 3, 1), (2, 5, 1), (4, 6, 1)],
)

# Free 2-step algebra on X1, X2, X3; closedness of omega needs the three
# triple terms to cancel: d(x1 x6) = d(x3 x4) = x1 x2 x3 = -d(x2 x5).
_CATALOG["free2step3"] = _doc(
    "free2step3",
    6,
    brackets=[(1, 2, 4, 1), (1, 3, 5, 1), (2, 3, 6, 1)],
    omega=[(1, 6, 1), (2, 5, 2), (3, 4, 1)],
)


def names() -> list[str]:
    return sorted(_CATALOG)


def get(name: str) -> AlgebraDocument:
    doc = _CATALOG.get(name)
    if doc is None:
        raise DocumentError(
            f"unknown catalog algebra {name!r}; available: {', '.join(names())}"
        )
    return doc


def symplectic_names() -> list[str]:
    """Catalog entries shipped with a symplectic form."""
    return [n for n in names() if _CATALOG[n].omega is not None]
