"""Graded quivers and exact arithmetic in their path algebras.

Paths compose right-to-left: the word ``bc`` means "first c, then b", so
``bc`` is defined when target(c) == source(b).  Coefficients are
``fractions.Fraction`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

DUAL_SUFFIX = "^*"
LOOP_PREFIX = "t_"


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True, order=False)
class Path:
    """A path in a graded quiver.

    ``arrows`` is the written word (leftmost arrow acts last).  For a
    length-0 path the word is empty and ``source == target`` is the base
    vertex.  ``degree`` is the sum of the arrow degrees.
    """

    arrows: tuple[str, ...]
    source: str
    target: str
    degree: int = 0

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    @property
    def is_cycle(self) -> bool:
        return self.source == self.target

    def __repr__(self) -> str:
        return f"Path({path_str(self)!r})"


def display_name(name: str) -> str:
    return name.replace(DUAL_SUFFIX, "*")


def idempotent_str(vertex: str) -> str:
    return f"e{vertex}" if vertex.isdigit() else f"e_{vertex}"


def path_str(p: Path) -> str:
    if p.is_trivial:
        return idempotent_str(p.source)
    names = [display_name(a) for a in p.arrows]
    bare = [a[:-len(DUAL_SUFFIX)] if a.endswith(DUAL_SUFFIX) else a for a in p.arrows]
    sep = "" if all(len(b) == 1 for b in bare) else " "
    return sep.join(names)


@dataclass(frozen=True)
class GradedQuiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _by_name: dict = field(init=False, repr=False, compare=False, hash=False)
    _order: dict = field(init=False, repr=False, compare=False, hash=False)
    _keys: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        by_name = {}
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise QuiverError("duplicate vertex identifier")
        for a in self.arrows:
            if a.name in by_name:
                raise QuiverError(f"duplicate arrow name {a.name!r}")
            if a.name in vset:
                raise QuiverError(f"arrow name {a.name!r} clashes with a vertex")
            if a.source not in vset or a.target not in vset:
                raise QuiverError(f"arrow {a.name!r} has an undeclared endpoint")
            by_name[a.name] = a
        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(self, "_order", {a.name: i for i, a in enumerate(self.arrows)})
        object.__setattr__(self, "_keys", {})

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def arrow_index(self, name: str) -> int:
        return self._order[name]

    def idempotent(self, vertex: str) -> Path:
        if vertex not in self.vertices:
            raise QuiverError(f"unknown vertex {vertex!r}")
        return Path((), vertex, vertex, 0)

    def path(self, *names: str) -> Path:
        """Build the path with written word ``names`` (rightmost acts first)."""
        if not names:
            raise QuiverError("use idempotent() for length-0 paths")
        arrows = [self.arrow(n) for n in names]
        for left, right in zip(arrows, arrows[1:]):
            if right.target != left.source:
                raise QuiverError(f"{left.name!r} cannot follow {right.name!r}")
        return Path(tuple(names), arrows[-1].source, arrows[0].target,
                     sum(a.degree for a in arrows))

    def sort_key(self, p: Path) -> tuple:
        """Degree-lexicographic key: length, then arrow declaration order."""
        key = self._keys.get(p)
        if key is None:
            if p.is_trivial:
                key = (0, (self.vertices.index(p.source),))
            else:
                key = (len(p.arrows), tuple(self._order[a] for a in p.arrows))
            self._keys[p] = key
        return key

    def degree(self, p: Path) -> int:
        return sum(self.arrow(a).degree for a in p.arrows)

    def arrows_from(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def subquiver(self, arrow_names: Iterable[str]) -> "GradedQuiver":
        keep = set(arrow_names)
        return GradedQuiver(self.vertices, tuple(a for a in self.arrows if a.name in keep))


def make_quiver(vertices: Iterable, arrows: Iterable[tuple]) -> GradedQuiver:
    """Validated quiver from vertex ids and ``(name, source, target[, degree])``."""
    vs = tuple(str(v) for v in vertices)
    arrs = []
    for spec in arrows:
        name, src, tgt, *rest = spec
        deg = int(rest[0]) if rest else 0
        name = str(name)
        if DUAL_SUFFIX in name:
            raise QuiverError(f"arrow name {name!r} uses the reserved suffix {DUAL_SUFFIX!r}")
        if name.startswith(LOOP_PREFIX) and name[len(LOOP_PREFIX):] in vs:
            raise QuiverError(f"arrow name {name!r} is reserved for a vertex loop")
        arrs.append(Arrow(name, str(src), str(tgt), deg))
    return GradedQuiver(vs, tuple(arrs))


def compose(p: Path, q: Path) -> Path | None:
    """The product ``pq`` (q first), or None when target(q) != source(p)."""
    if q.target != p.source:
        return None
    if p.is_trivial:
        return q
    if q.is_trivial:
        return p
    return Path(p.arrows + q.arrows, q.source, p.target, p.degree + q.degree)


def degree(p: Path) -> int:
    return p.degree


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class AlgElement(Mapping):
    """Finite rational combination of paths; immutable, zero coefficients dropped."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Path, object] | Iterable[tuple[Path, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, Fraction] = {}
        for p, c in items:
            acc[p] = acc.get(p, Fraction(0)) + _frac(c)
        self._terms = {p: c for p, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def of(cls, p: Path, coeff=1) -> "AlgElement":
        return cls({p: coeff})

    def __getitem__(self, p: Path) -> Fraction:
        return self._terms[p]

    def __iter__(self) -> Iterator[Path]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "AlgElement") -> "AlgElement":
        return alg_add(self, other)

    def __neg__(self) -> "AlgElement":
        return alg_scale(-1, self)

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return alg_add(self, alg_scale(-1, other))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return alg_mul(self, other)
        return alg_scale(other, self)

    def __rmul__(self, scalar):
        return alg_scale(scalar, self)

    def degrees(self) -> set[int]:
        return {p.degree for p in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self, quiver: GradedQuiver) -> list[tuple[Path, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: quiver.sort_key(t[0]))

    def to_str(self, quiver: GradedQuiver | None = None) -> str:
        if not self._terms:
            return "0"
        if quiver is not None:
            items = self.sorted_terms(quiver)
        else:
            items = sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0].arrows, t[0].source))
        out = []
        for i, (p, c) in enumerate(items):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coeff = "" if mag == 1 else f"{mag} "
            body = f"{coeff}{path_str(p)}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"AlgElement({self.to_str()!r})"


ZERO = AlgElement()


def alg_add(x: AlgElement, y: AlgElement) -> AlgElement:
    return AlgElement(list(x.items()) + list(y.items()))


def alg_scale(r, x: AlgElement) -> AlgElement:
    r = _frac(r)
    if r == 0:
        return ZERO
    return AlgElement({p: r * c for p, c in x.items()})


def alg_mul(x: AlgElement, y: AlgElement) -> AlgElement:
    """Bilinear extension of ``compose``; non-composable products vanish."""
    acc = []
    for p, a in x.items():
        for q, b in y.items():
            pq = compose(p, q)
            if pq is not None:
                acc.append((pq, a * b))
    return AlgElement(acc)


def enumerate_paths(q: GradedQuiver, max_length: int,
                    degree_filter: int | None = None) -> list[Path]:
    """All paths of length <= max_length in degree-lexicographic order."""
    if max_length < 0:
        raise ValueError("max_length must be >= 0")
    layer = [q.idempotent(v) for v in q.vertices]
    found = list(layer)
    for _ in range(max_length):
        nxt = []
        for p in layer:
            # extend on the left: the new arrow acts after p
            for a in q.arrows_from(p.target):
                nxt.append(Path((a.name,) + p.arrows, p.source, a.target, p.degree + a.degree))
        found.extend(nxt)
        layer = nxt
    if degree_filter is not None:
        found = [p for p in found if p.degree == degree_filter]
    return sorted(found, key=q.sort_key)


def unit(q: GradedQuiver) -> AlgElement:
    """Sum of all idempotents, the identity of the path algebra."""
    return AlgElement({q.idempotent(v): 1 for v in q.vertices})
