"""Ginzburg dg categories of graded quivers with superpotential.

The underlying graded quiver adds, for every arrow ``a: x -> y`` of degree
``|a|``, a dual ``a^*: y -> x`` of degree ``2 - n - |a|`` and, for every
vertex ``x``, a loop ``t_x`` of degree ``1 - n``.

Sign conventions.  Words are read right-to-left (``bc`` = c then b).  The
differential is extended to paths by

    d(g_1 ... g_k) = sum_i (-1)**(|g_{i+1}| + ... + |g_k|) g_1 ... d(g_i) ... g_k,

i.e. the Koszul sign is paid for moving ``d`` past the factors that act
*before* ``g_i``.  This is the usual graded Leibniz rule written in
diagrammatic (left-to-right) order; it is the convention under which the
generator values below square to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .gqa import (DUAL_SUFFIX, LOOP_PREFIX, AlgElement, Arrow, GradedQuiver,
                  Path, QuiverError, alg_mul, compose)
from .potential import Potential, cyclic_derivative


def dual_name(a: str) -> str:
    return a + DUAL_SUFFIX


def loop_name(x: str) -> str:
    return LOOP_PREFIX + x


def extend_quiver(q: GradedQuiver, n: int) -> GradedQuiver:
    """Q + duals in degree 2-n-|a| + vertex loops in degree 1-n."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    arrows = list(q.arrows)
    for a in q.arrows:
        arrows.append(Arrow(dual_name(a.name), a.target, a.source, 2 - n - a.degree))
    for x in q.vertices:
        arrows.append(Arrow(loop_name(x), x, x, 1 - n))
    try:
        return GradedQuiver(q.vertices, tuple(arrows))
    except QuiverError as exc:
        raise QuiverError(f"reserved name collision: {exc}") from None


def _lift(q_ext: GradedQuiver, el: AlgElement) -> AlgElement:
    """Re-express an element of kQ inside the extended quiver (same words)."""
    return AlgElement({(q_ext.path(*p.arrows) if p.arrows else p): c for p, c in el.items()})


def supercommutator(x: Path, y: Path) -> AlgElement:
    """[x, y] = xy - (-1)**(|x||y|) yx for homogeneous paths."""
    sign = -1 if (x.degree * y.degree) % 2 else 1
    terms = []
    xy, yx = compose(x, y), compose(y, x)
    if xy is not None:
        terms.append((xy, 1))
    if yx is not None:
        terms.append((yx, -sign))
    return AlgElement(terms)


def loop_differential(q: GradedQuiver, q_ext: GradedQuiver, n: int, x: str) -> AlgElement:
    """(-1)**n e_x (sum_v [v, v*]) e_x."""
    total = AlgElement()
    for a in q.arrows:
        total = total + supercommutator(q_ext.path(a.name), q_ext.path(dual_name(a.name)))
    ex = AlgElement.of(q_ext.idempotent(x))
    total = alg_mul(alg_mul(ex, total), ex)
    return total if n % 2 == 0 else -total


@dataclass(frozen=True)
class DgPresentation:
    quiver: GradedQuiver
    extended: GradedQuiver
    n: int
    potential: Potential
    d_on_generators: dict = field(default_factory=dict)

    @classmethod
    def build(cls, W: Potential) -> "DgPresentation":
        q, n = W.quiver, W.n
        ext = extend_quiver(q, n)
        d = {}
        for a in q.arrows:
            d[a.name] = AlgElement()
        for a in q.arrows:
            d[dual_name(a.name)] = _lift(ext, cyclic_derivative(W, a.name))
        for x in q.vertices:
            d[loop_name(x)] = loop_differential(q, ext, n, x)
        return cls(q, ext, n, W, d)

    def generators(self) -> list[str]:
        return [a.name for a in self.extended.arrows]

    def d(self, g: str) -> AlgElement:
        return differential_on_generator(g, self)

    def with_differential(self, g: str, value: AlgElement) -> "DgPresentation":
        """Copy with one generator value replaced (used for negative controls)."""
        d = dict(self.d_on_generators)
        d[g] = value
        return DgPresentation(self.quiver, self.extended, self.n, self.potential, d)


def ginzburg(W: Potential) -> DgPresentation:
    return DgPresentation.build(W)


def differential_on_generator(g: str, pres: DgPresentation) -> AlgElement:
    pres.extended.arrow(g)
    return pres.d_on_generators[g]


def apply_d_path(p: Path, pres: DgPresentation) -> AlgElement:
    if p.is_trivial:
        return AlgElement()
    q = pres.extended
    word = p.arrows
    degs = [q.arrow(g).degree for g in word]
    out = []
    after = sum(degs)  # total degree of the letters right of position i
    for i, g in enumerate(word):
        after -= degs[i]
        dg = pres.d_on_generators[g]
        if not dg:
            continue
        sign = -1 if after % 2 else 1
        left = q.path(*word[:i]) if i else None
        right = q.path(*word[i + 1:]) if i + 1 < len(word) else None
        for r, c in dg.items():
            t = r
            if right is not None:
                t = compose(t, right)
            if left is not None and t is not None:
                t = compose(left, t)
            if t is not None:
                out.append((t, sign * c))
    return AlgElement(out)


def apply_d(x: AlgElement, pres: DgPresentation) -> AlgElement:
    out = []
    for p, c in x.items():
        for r, e in apply_d_path(p, pres).items():
            out.append((r, c * e))
    return AlgElement(out)


@dataclass
class DSquaredReport:
    residues: dict = field(default_factory=dict)  # generator -> nonzero AlgElement

    @property
    def passed(self) -> bool:
        return not self.residues


def check_d_squared(pres: DgPresentation) -> DSquaredReport:
    """Evaluate d(d(g)) on every generator; nonzero values are reported."""
    residues = {}
    for g in pres.generators():
        r = apply_d(pres.d_on_generators[g], pres)
        if r:
            residues[g] = r
    return DSquaredReport(residues)


def check_degrees(pres: DgPresentation) -> list[str]:
    """Generators whose differential is not of degree +1 or not parallel."""
    bad = []
    for a in pres.extended.arrows:
        for p in pres.d_on_generators[a.name]:
            if p.degree != a.degree + 1 or p.source != a.source or p.target != a.target:
                bad.append(a.name)
                break
    return bad


def generators_nonpositive(pres: DgPresentation) -> bool:
    return all(a.degree <= 0 for a in pres.extended.arrows)
