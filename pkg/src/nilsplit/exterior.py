"""Free graded-commutative algebras over the rationals.

Generators carry a name, a positive degree, and a fixed index; the index
order is the global monomial ordering and never changes after the algebra
is constructed. A monomial is a flat tuple (i0, e0, i1, e1, ...) in normal
form: indices strictly ascending, exponents positive, and exponent <= 1
for odd-degree generators since odd squares vanish. An Element maps
monomial keys to nonzero Fractions; inhomogeneous elements are allowed and
expose their homogeneous pieces by degree.

Coefficients are exact rationals throughout. The downstream forcing
argument is a statement about exact kernels of linear maps, so nothing in
this module may round.

All objects are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from . import kernels
from .errors import StructuralError

ZERO = Fraction(0)
ONE = Fraction(1)


class Generator(NamedTuple):
    name: str
    degree: int
    index: int


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise StructuralError(f"not an exact rational: {c!r}")


class GradedAlgebra:
    """Free graded-commutative algebra on named generators."""

    def __init__(self, gens: Iterable[tuple[str, int]]):
        gens = list(gens)
        names = [name for name, _ in gens]
        if len(set(names)) != len(names):
            raise StructuralError("generator names must be unique")
        for name, degree in gens:
            if not isinstance(degree, int) or degree < 1:
                raise StructuralError(
                    f"generator {name!r} has degree {degree!r}; need an integer >= 1"
                )
        self.generators = tuple(
            Generator(name, degree, i) for i, (name, degree) in enumerate(gens)
        )
        self.degrees = tuple(g.degree for g in self.generators)
        self.parity = bytes(d & 1 for d in self.degrees)
        self._by_name = {g.name: g for g in self.generators}

    # -- element constructors -------------------------------------------------

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {(): ONE})

    def scalar(self, c) -> Element:
        c = _as_fraction(c)
        return Element(self, {(): c} if c else {})

    def gen(self, name: str) -> Element:
        g = self._by_name.get(name)
        if g is None:
            raise StructuralError(f"no generator named {name!r}")
        return Element(self, {(g.index, 1): ONE})

    def element(self, terms: Mapping[tuple, object]) -> Element:
        """Build an element from a monomial-key -> coefficient mapping."""
        acc = {}
        for key, c in terms.items():
            c = _as_fraction(c)
            if not c:
                continue
            self._check_key(key)
            acc[key] = acc.get(key, ZERO) + c
        return Element(self, {k: c for k, c in acc.items() if c})

    # -- monomial utilities ---------------------------------------------------

    def _check_key(self, key) -> None:
        last = -1
        for p in range(0, len(key), 2):
            i, e = key[p], key[p + 1]
            if not 0 <= i < len(self.generators):
                raise StructuralError(f"generator index {i} out of range")
            if i <= last:
                raise StructuralError(f"monomial key not in normal form: {key}")
            if e < 1 or (self.parity[i] and e > 1):
                raise StructuralError(f"bad exponent {e} for generator {i}")
            last = i

    def monomial_degree(self, key) -> int:
        degs = self.degrees
        return sum(degs[key[p]] * key[p + 1] for p in range(0, len(key), 2))

    def monomial_str(self, key) -> str:
        if not key:
            return "1"
        parts = []
        for p in range(0, len(key), 2):
            name = self.generators[key[p]].name
            e = key[p + 1]
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def monomials_of_degree(self, k: int) -> list[tuple]:
        """All normal-form monomial keys of total degree k, sorted.

        Finite for every k: odd generators contribute exponent <= 1 and even
        generators at most k / degree. Sorted by the flat key tuple, which
        fixes the basis ordering used by every matrix downstream.
        """
        if k < 0:
            return []
        out: list[tuple] = []
        ngen = len(self.generators)
        key: list[int] = []

        def rec(i: int, remaining: int) -> None:
            if remaining == 0:
                out.append(tuple(key))
                return
            if i == ngen:
                return
            rec(i + 1, remaining)
            d = self.degrees[i]
            cap = 1 if self.parity[i] else remaining // d
            for e in range(1, cap + 1):
                if e * d > remaining:
                    break
                key.append(i)
                key.append(e)
                rec(i + 1, remaining - e * d)
                key.pop()
                key.pop()

        rec(0, k)
        out.sort()
        return out

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GradedAlgebra({gens})"


class Element:
    """An exact-rational linear combination of normal-form monomials.

    Immutable by convention: no public operation mutates `terms`, and all
    arithmetic returns fresh objects. Two elements are equal iff they live
    on the same generator set and their term maps agree.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GradedAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    # -- predicates and views -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, ZERO)

    def degrees(self) -> list[int]:
        return sorted({self.algebra.monomial_degree(k) for k in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self):
        """Degree of a homogeneous element; None for 0, error otherwise."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise StructuralError(f"element is inhomogeneous (degrees {ds})")
        return ds[0]

    def homogeneous_component(self, k: int) -> Element:
        alg = self.algebra
        return Element(
            alg,
            {key: c for key, c in self.terms.items() if alg.monomial_degree(key) == k},
        )

    def homogeneous_components(self) -> dict[int, Element]:
        return {k: self.homogeneous_component(k) for k in self.degrees()}

    # -- arithmetic -----------------------------------------------------------

    def _require_same_algebra(self, other: Element) -> None:
        if self.algebra is not other.algebra:
            raise StructuralError("elements live over different generator sets")

    def __add__(self, other: Element) -> Element:
        self._require_same_algebra(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key, ZERO) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return Element(self.algebra, terms)

    def __neg__(self) -> Element:
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, c) -> Element:
        c = _as_fraction(c)
        if not c:
            return Element(self.algebra, {})
        return Element(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        """Graded-commutative product; Koszul signs via the merge kernel."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_algebra(other)
        parity = self.algebra.parity
        merge = kernels.merge_monomials
        acc: dict[tuple, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                sign, key = merge(ka, kb, parity)
                if not sign:
                    continue
                c = ca * cb if sign > 0 else -ca * cb
                s = acc.get(key, ZERO) + c
                if s:
                    acc[key] = s
                else:
                    del acc[key]
        return Element(self.algebra, acc)

    def power(self, e: int) -> Element:
        if e < 0:
            raise StructuralError("negative powers are not defined")
        result = self.algebra.one()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    # -- rendering ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        alg = self.algebra
        return sorted(
            self.terms.items(), key=lambda kv: (alg.monomial_degree(kv[0]), kv[0])
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            mono = self.algebra.monomial_str(key)
            if key == ():
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<Element {self}>"


class Derivation:
    """The degree +1 derivation extending a map on generators.

    Determined by its generator images through the graded Leibniz rule
    D(uv) = (Du)v + (-1)^|u| u (Dv). Images must be homogeneous of the
    generator's degree plus one (or zero).
    """

    def __init__(self, algebra: GradedAlgebra, images: Mapping[str, Element]):
        self.algebra = algebra
        self._images: dict[int, Element] = {}
        for name, img in images.items():
            g = algebra._by_name.get(name)
            if g is None:
                raise StructuralError(f"no generator named {name!r}")
            if img.algebra is not algebra:
                raise StructuralError("image lives over a different generator set")
            if not img.is_zero() and img.degree() != g.degree + 1:
                raise StructuralError(
                    f"image of {name!r} must have degree {g.degree + 1}, "
                    f"got {img.degree()}"
                )
            if not img.is_zero():
                self._images[g.index] = img
        self._monomial_cache: dict[tuple, Element] = {}

    def image_of_generator(self, name: str) -> Element:
        g = self.algebra._by_name[name]
        return self._images.get(g.index, self.algebra.zero())

    def _of_monomial(self, key) -> Element:
        cached = self._monomial_cache.get(key)
        if cached is not None:
            return cached
        alg = self.algebra
        result = alg.zero()
        prefix_degree = 0
        for p in range(0, len(key), 2):
            i, e = key[p], key[p + 1]
            img = self._images.get(i)
            if img is not None:
                # D hits the block g_i^e: e * g_i^(e-1) * Dg_i, signed by the
                # degree of everything strictly before the block.
                left = key[:p] + ((i, e - 1) if e > 1 else ())
                right = key[p + 2 :]
                term = Element(alg, {left: ONE}) * img * Element(alg, {right: ONE})
                if prefix_degree & 1:
                    term = -term
                if e != 1:
                    term = term.scale(e)
                result = result + term
            prefix_degree += alg.degrees[i] * e
        self._monomial_cache[key] = result
        return result

    def __call__(self, u: Element) -> Element:
        if u.algebra is not self.algebra:
            raise StructuralError("element lives over a different generator set")
        result = self.algebra.zero()
        for key, c in u.terms.items():
            result = result + self._of_monomial(key).scale(c)
        return result


class FreeDGA:
    """A free graded-commutative algebra with a degree +1 differential."""

    def __init__(self, algebra: GradedAlgebra, differential: Derivation):
        if differential.algebra is not algebra:
            raise StructuralError("differential defined over a different algebra")
        self.algebra = algebra
        self.d = differential

    def flatness_witness(self):
        """First generator with d(d(g)) != 0, or None when d^2 = 0."""
        for g in self.algebra.generators:
            dd = self.d(self.d.image_of_generator(g.name))
            if not dd.is_zero():
                return g.name, dd
        return None

    @property
    def generators(self):
        return self.algebra.generators

    def __repr__(self):
        return f"FreeDGA({self.algebra!r})"


class AlgebraMorphism:
    """Degree-preserving algebra map determined by generator images.

    Extended multiplicatively; target-side products handle all Koszul
    signs, so images only need to be homogeneous of the source degree.
    """

    def __init__(
        self,
        source: GradedAlgebra,
        target: GradedAlgebra,
        images: Mapping[str, Element],
    ):
        self.source = source
        self.target = target
        self._images: dict[int, Element] = {}
        for g in source.generators:
            if g.name not in images:
                raise StructuralError(f"no image given for generator {g.name!r}")
            img = images[g.name]
            if img.algebra is not target:
                raise StructuralError("image lives outside the target algebra")
            if not img.is_zero() and img.degree() != g.degree:
                raise StructuralError(
                    f"image of {g.name!r} must have degree {g.degree}"
                )
            self._images[g.index] = img

    def __call__(self, u: Element) -> Element:
        if u.algebra is not self.source:
            raise StructuralError("element lives outside the source algebra")
        result = self.target.zero()
        for key, c in u.terms.items():
            term = self.target.one()
            for p in range(0, len(key), 2):
                img = self._images[key[p]]
                for _ in range(key[p + 1]):
                    term = term * img
            result = result + term.scale(c)
        return result
