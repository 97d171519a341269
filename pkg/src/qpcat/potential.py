"""Superpotentials: signed cyclic words and their cyclic derivatives.

Rotating a cycle ``w = uv`` to ``vu`` costs the Koszul sign
``(-1)**(|u|*|v|)``.  The derivative of a cycle ``p = u a v`` with respect
to ``a`` contributes ``(-1)**(|u|*(|a|+|v|)) * vu``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .gqa import AlgElement, GradedQuiver, Path, QuiverError, path_str


class PotentialError(ValueError):
    pass


@dataclass(frozen=True)
class CyclicWord:
    representative: Path

    def __str__(self) -> str:
        return path_str(self.representative)


def _word_degree(q: GradedQuiver, word: Iterable[str]) -> int:
    return sum(q.arrow(a).degree for a in word)


def rotate(q: GradedQuiver, p: Path, i: int) -> tuple[Path, int]:
    """Move the first ``i`` letters of the word to the back; returns (path, sign)."""
    w = p.arrows
    u, v = w[:i], w[i:]
    sign = -1 if (_word_degree(q, u) * _word_degree(q, v)) % 2 else 1
    if not u or not v:
        return p, sign
    return q.path(*(v + u)), sign


def cyclic_normal_form(q: GradedQuiver, p: Path) -> tuple[CyclicWord, int]:
    """Canonical rotation of a cycle and the sign with ``p == sign * canonical``.

    The canonical rotation is the lexicographically least word under arrow
    declaration order; among equal words the smallest rotation offset wins.
    """
    if p.is_trivial:
        raise PotentialError("length-0 paths are not potential terms")
    if not p.is_cycle:
        raise PotentialError(f"{path_str(p)} is not a cycle")
    best = None
    for i in range(len(p.arrows)):
        r, s = rotate(q, p, i)
        key = tuple(q.arrow_index(a) for a in r.arrows)
        if best is None or key < best[0]:
            best = (key, r, s)
    _, rep, sign = best
    return CyclicWord(rep), sign


def self_cancelling(q: GradedQuiver, w: CyclicWord) -> bool:
    """True if some rotation maps the word to itself with sign -1 (so it is zero)."""
    p = w.representative
    for i in range(1, len(p.arrows)):
        r, s = rotate(q, p, i)
        if r == p and s == -1:
            return True
    return False


@dataclass(frozen=True)
class Potential:
    quiver: GradedQuiver
    n: int
    terms: dict = field(default_factory=dict)  # CyclicWord -> Fraction

    @classmethod
    def from_terms(cls, quiver: GradedQuiver, n: int,
                   terms: Iterable[tuple[object, Path]] = ()) -> "Potential":
        acc: dict[CyclicWord, Fraction] = {}
        for coeff, p in terms:
            word, sign = cyclic_normal_form(quiver, p)
            acc[word] = acc.get(word, Fraction(0)) + sign * Fraction(coeff)
        clean = {w: c for w, c in acc.items() if c != 0 and not self_cancelling(quiver, w)}
        ordered = dict(sorted(clean.items(), key=lambda t: quiver.sort_key(t[0].representative)))
        return cls(quiver, n, ordered)

    @classmethod
    def zero(cls, quiver: GradedQuiver, n: int) -> "Potential":
        return cls(quiver, n, {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash((self.quiver, self.n, frozenset(self.terms.items())))

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        el = AlgElement({w.representative: c for w, c in self.terms.items()})
        return el.to_str(self.quiver)


@dataclass
class PotentialReport:
    valid: bool
    n: int
    m: int
    offending: list = field(default_factory=list)
    arrow_degrees_in_range: bool = True
    out_of_range_arrows: list = field(default_factory=list)

    def messages(self) -> list[str]:
        out = []
        for word, deg in self.offending:
            out.append(f"term {word} has degree {deg}, expected {3 - self.n}")
        for name, deg in self.out_of_range_arrows:
            out.append(f"arrow {name} has degree {deg} outside [{-self.m}, 0]")
        return out


def validate_potential(W: Potential) -> PotentialReport:
    """Check that every term is a cycle of degree 3 - n.

    Also reports whether all arrow degrees lie in [-m, 0] with m = n - 2,
    which is the arrow-degree hypothesis for the cluster-category results.
    """
    target = 3 - W.n
    m = W.n - 2
    offending = []
    for word in W.terms:
        p = word.representative
        if not p.is_cycle or p.is_trivial:
            raise PotentialError(f"{word} is not a cycle")
        if p.degree != target:
            offending.append((str(word), p.degree))
    bad_arrows = [(a.name, a.degree) for a in W.quiver.arrows if not -m <= a.degree <= 0]
    return PotentialReport(not offending, W.n, m, offending, not bad_arrows, bad_arrows)


def derivative_of_cycle(q: GradedQuiver, p: Path, a: str) -> AlgElement:
    """Cyclic derivative of a single cycle ``p`` with respect to arrow ``a``."""
    arrow = q.arrow(a)
    w = p.arrows
    terms = []
    for i, x in enumerate(w):
        if x != a:
            continue
        u, v = w[:i], w[i + 1:]
        du, dv = _word_degree(q, u), _word_degree(q, v)
        sign = -1 if (du * (arrow.degree + dv)) % 2 else 1
        vu = v + u
        path = q.path(*vu) if vu else q.idempotent(arrow.source)
        terms.append((path, sign))
    return AlgElement(terms)


def cyclic_derivative(W: Potential, a: str) -> AlgElement:
    """The cyclic derivative of W with respect to arrow ``a``; parallel to a*."""
    q = W.quiver
    q.arrow(a)
    out = AlgElement()
    for word, c in W.terms.items():
        out = out + c * derivative_of_cycle(q, word.representative, a)
    return out
