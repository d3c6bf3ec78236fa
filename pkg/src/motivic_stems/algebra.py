"""Exact degree arithmetic and monomial bases for graded monomial algebras over F2.

An algebra is presented by a finite ordered list of generators, each carrying a
(stem, filtration, weight) tridegree and optional flags: ``invertible`` allows
negative exponents, ``square_zero`` caps the exponent at 1 and kills higher
powers. Coefficients always live in the two-element field, so a polynomial is
just a set of monomials and arithmetic is exact integer arithmetic throughout.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator


class PresentationError(ValueError):
    """Malformed presentation, window, or monomial data."""


class PresentationMismatchError(PresentationError):
    """Monomial or generator name does not belong to this presentation."""


class EmptyWindowWarning(UserWarning):
    """Issued when a window has inverted bounds and enumerates nothing."""


@dataclass(frozen=True)
class Tridegree:
    """Degree triple (stem s, filtration f, motivic weight w)."""

    s: int
    f: int
    w: int

    def __add__(self, other: Tridegree) -> Tridegree:
        return Tridegree(self.s + other.s, self.f + other.f, self.w + other.w)

    def __sub__(self, other: Tridegree) -> Tridegree:
        return Tridegree(self.s - other.s, self.f - other.f, self.w - other.w)

    def __neg__(self) -> Tridegree:
        return Tridegree(-self.s, -self.f, -self.w)

    def __mul__(self, k: int) -> Tridegree:
        return Tridegree(self.s * k, self.f * k, self.w * k)

    __rmul__ = __mul__

    def bidegree(self) -> Bidegree:
        return Bidegree(self.s, self.w)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.s, self.f, self.w)

    def __str__(self) -> str:
        return f"({self.s},{self.f},{self.w})"


@dataclass(frozen=True)
class Bidegree:
    """Chart coordinate (stem s, motivic weight w)."""

    s: int
    w: int

    def __add__(self, other: Bidegree) -> Bidegree:
        return Bidegree(self.s + other.s, self.w + other.w)

    def __mul__(self, k: int) -> Bidegree:
        return Bidegree(self.s * k, self.w * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.s},{self.w})"


ZERO_DEGREE = Tridegree(0, 0, 0)


@dataclass(frozen=True)
class GeneratorSpec:
    """One algebra generator: name, tridegree, and exponent discipline."""

    name: str
    degree: Tridegree
    invertible: bool = False
    square_zero: bool = False

    def __post_init__(self) -> None:
        if not self.name or any(ch.isspace() for ch in self.name):
            raise PresentationError(f"generator name {self.name!r} must be non-empty without spaces")
        if self.invertible and self.square_zero:
            raise PresentationError(f"generator {self.name!r} cannot be both invertible and square-zero")


@dataclass(frozen=True)
class Monomial:
    """Exponent vector over a presentation's generators, in declaration order."""

    exponents: tuple[int, ...]

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class MonomialAlgebraPresentation:
    """Ordered generator list defining a graded monomial algebra over F2."""

    generators: tuple[GeneratorSpec, ...]
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __init__(self, generators: Iterable[GeneratorSpec]):
        object.__setattr__(self, "generators", tuple(generators))
        names = [g.name for g in self.generators]
        dupes = {n for n in names if names.count(n) > 1}
        if dupes:
            raise PresentationError(f"duplicate generator names: {sorted(dupes)}")
        object.__setattr__(self, "_index", {g.name: i for i, g in enumerate(self.generators)})

    def __len__(self) -> int:
        return len(self.generators)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PresentationMismatchError(f"unknown generator name {name!r}") from None

    def generator(self, name: str) -> GeneratorSpec:
        return self.generators[self.index_of(name)]

    def unit(self) -> Monomial:
        return Monomial((0,) * len(self.generators))

    def monomial(self, **exponents: int) -> Monomial:
        """Build a monomial from keyword exponents; unnamed generators get 0."""
        exps = [0] * len(self.generators)
        for name, e in exponents.items():
            exps[self.index_of(name)] = e
        m = Monomial(tuple(exps))
        self.validate_monomial(m)
        return m

    def is_valid_exponents(self, exps: tuple[int, ...]) -> bool:
        if len(exps) != len(self.generators):
            return False
        for g, e in zip(self.generators, exps):
            if e < 0 and not g.invertible:
                return False
            if g.square_zero and e > 1:
                return False
        return True

    def validate_monomial(self, m: Monomial) -> None:
        if len(m.exponents) != len(self.generators):
            raise PresentationMismatchError(
                f"monomial has {len(m.exponents)} exponents, presentation has {len(self.generators)} generators"
            )
        for g, e in zip(self.generators, m.exponents):
            if e < 0 and not g.invertible:
                raise PresentationError(f"negative exponent {e} on non-invertible generator {g.name!r}")
            if g.square_zero and e > 1:
                raise PresentationError(f"exponent {e} on square-zero generator {g.name!r}")

    def degree(self, m: Monomial) -> Tridegree:
        """Tridegree of a monomial: integer linear combination of generator degrees."""
        self.validate_monomial(m)
        s = f = w = 0
        for g, e in zip(self.generators, m.exponents):
            s += e * g.degree.s
            f += e * g.degree.f
            w += e * g.degree.w
        return Tridegree(s, f, w)

    def multiply(self, m1: Monomial, m2: Monomial) -> Monomial | None:
        """Product of two monomials, or None when a square-zero power vanishes."""
        self.validate_monomial(m1)
        self.validate_monomial(m2)
        exps = tuple(a + b for a, b in zip(m1.exponents, m2.exponents))
        for g, e in zip(self.generators, exps):
            if g.square_zero and e > 1:
                return None
        return Monomial(exps)

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for g, e in zip(self.generators, m.exponents):
            if e == 0:
                continue
            parts.append(g.name if e == 1 else f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def sum_str(self, terms: Iterable[Monomial]) -> str:
        ordered = sorted(terms, key=lambda m: m.exponents)
        return " + ".join(self.monomial_str(m) for m in ordered) if ordered else "0"

    @classmethod
    def parse(cls, text: str) -> MonomialAlgebraPresentation:
        """Parse a presentation config: one `name s f w [invertible] [square_zero]` per line."""
        gens = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) < 4:
                raise PresentationError(f"line {lineno}: expected `name s f w [flags]`, got {raw!r}")
            name = tokens[0]
            try:
                s, f, w = (int(t) for t in tokens[1:4])
            except ValueError:
                raise PresentationError(f"line {lineno}: non-integer degree in {raw!r}") from None
            flags = tokens[4:]
            unknown = [t for t in flags if t not in ("invertible", "square_zero")]
            if unknown:
                raise PresentationError(f"line {lineno}: unknown flags {unknown}")
            gens.append(
                GeneratorSpec(
                    name,
                    Tridegree(s, f, w),
                    invertible="invertible" in flags,
                    square_zero="square_zero" in flags,
                )
            )
        return cls(gens)

    def serialize(self) -> str:
        lines = []
        for g in self.generators:
            flags = []
            if g.invertible:
                flags.append("invertible")
            if g.square_zero:
                flags.append("square_zero")
            lines.append(" ".join([g.name, str(g.degree.s), str(g.degree.f), str(g.degree.w), *flags]))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Window:
    """Inclusive per-generator exponent bounds, in generator declaration order.

    Bounds must be finite for every generator; the constraints of the
    presentation (non-negativity, square-zero caps) are intersected in on use,
    so a loose declared bound is harmless.
    """

    bounds: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, presentation: MonomialAlgebraPresentation, bounds: dict[str, tuple[int, int]]) -> Window:
        missing = [g.name for g in presentation.generators if g.name not in bounds]
        if missing:
            raise PresentationError(f"window missing bounds for generators: {missing}")
        extra = [n for n in bounds if n not in presentation._index]
        if extra:
            raise PresentationMismatchError(f"window bounds for unknown generators: {sorted(extra)}")
        return cls(tuple(tuple(bounds[g.name]) for g in presentation.generators))

    def effective_bounds(self, presentation: MonomialAlgebraPresentation) -> list[tuple[int, int]]:
        if len(self.bounds) != len(presentation.generators):
            raise PresentationMismatchError(
                f"window has {len(self.bounds)} bounds, presentation has {len(presentation.generators)} generators"
            )
        eff = []
        for g, (lo, hi) in zip(presentation.generators, self.bounds):
            if not g.invertible:
                lo = max(lo, 0)
            if g.square_zero:
                hi = min(hi, 1)
            eff.append((lo, hi))
        return eff

    def is_inverted(self, presentation: MonomialAlgebraPresentation) -> bool:
        return any(lo > hi for lo, hi in self.effective_bounds(presentation))

    def contains(self, presentation: MonomialAlgebraPresentation, m: Monomial) -> bool:
        if len(m.exponents) != len(self.bounds):
            return False
        return all(lo <= e <= hi for e, (lo, hi) in zip(m.exponents, self.effective_bounds(presentation)))

    def tridegree_bounds(self, presentation: MonomialAlgebraPresentation) -> tuple[Tridegree, Tridegree]:
        """Componentwise (min, max) tridegree over the exponent box."""
        lo_s = lo_f = lo_w = 0
        hi_s = hi_f = hi_w = 0
        for g, (lo, hi) in zip(presentation.generators, self.effective_bounds(presentation)):
            ds, df, dw = g.degree.s, g.degree.f, g.degree.w
            lo_s += min(lo * ds, hi * ds)
            hi_s += max(lo * ds, hi * ds)
            lo_f += min(lo * df, hi * df)
            hi_f += max(lo * df, hi * df)
            lo_w += min(lo * dw, hi * dw)
            hi_w += max(lo * dw, hi * dw)
        return Tridegree(lo_s, lo_f, lo_w), Tridegree(hi_s, hi_f, hi_w)


def iter_window_monomials(presentation: MonomialAlgebraPresentation, window: Window) -> Iterator[Monomial]:
    """Window monomials in lexicographic order on exponent vectors."""
    eff = window.effective_bounds(presentation)
    if any(lo > hi for lo, hi in eff):
        warnings.warn("window bounds are inverted; enumerating nothing", EmptyWindowWarning, stacklevel=2)
        return
    for exps in product(*(range(lo, hi + 1) for lo, hi in eff)):
        yield Monomial(exps)


def enumerate_basis(
    presentation: MonomialAlgebraPresentation, window: Window
) -> dict[Tridegree, list[Monomial]]:
    """Group the window's monomials by tridegree.

    Keys are sorted by (s, f, w); each fiber keeps the canonical lexicographic
    monomial order, which downstream linear algebra relies on.
    """
    fibers: dict[Tridegree, list[Monomial]] = {}
    for m in iter_window_monomials(presentation, window):
        fibers.setdefault(presentation.degree(m), []).append(m)
    return {t: fibers[t] for t in sorted(fibers, key=Tridegree.as_tuple)}


class F2VectorSpace:
    """Ordered monomial basis of one tridegree fiber; vectors are int bitmasks.

    Bit i corresponds to ``basis[i]``. Monomials must be pairwise distinct and
    share a tridegree; the enumeration code guarantees both.
    """

    def __init__(self, tridegree: Tridegree, basis: Iterable[Monomial]):
        self.tridegree = tridegree
        self.basis = tuple(basis)
        self._pos = {m: i for i, m in enumerate(self.basis)}
        if len(self._pos) != len(self.basis):
            raise PresentationError(f"repeated monomial in fiber basis at {tridegree}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def position(self, m: Monomial) -> int | None:
        return self._pos.get(m)

    def vector(self, monomials: Iterable[Monomial]) -> int:
        bits = 0
        for m in monomials:
            i = self._pos.get(m)
            if i is None:
                raise PresentationMismatchError(f"monomial {m} not in fiber basis at {self.tridegree}")
            bits ^= 1 << i
        return bits

    def sum_from_vector(self, bits: int) -> frozenset[Monomial]:
        out = []
        i = 0
        while bits:
            if bits & 1:
                out.append(self.basis[i])
            bits >>= 1
            i += 1
        return frozenset(out)
