"""Zeroth homology of a Ginzburg dg category via noncommutative rewriting.

H^0 is the path algebra of the degree-0 arrows modulo the two-sided ideal
generated by the cyclic derivatives of the arrows of degree 3 - n.  The
ideal is presented by a rewriting system on paths (leading path -> tail),
completed Buchberger-style under the degree-lexicographic order.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .ginzburg import DgPresentation, check_d_squared, dual_name
from .gqa import AlgElement, GradedQuiver, Path, compose, path_str

DEFAULT_MAX_STEPS = 10_000
DEFAULT_MAX_BASIS = 100_000

COMPLETE = "complete"
BOUND_EXCEEDED = "bound-exceeded"

FINITE = "finite"
INFINITE = "infinite"
UNDETERMINED = "undetermined"


class RelationError(ValueError):
    pass


class ScopeError(ValueError):
    pass


def _vertices_of(q: GradedQuiver, p: Path) -> list[str]:
    if p.is_trivial:
        return [p.source]
    vs = [p.source]
    for name in reversed(p.arrows):
        vs.append(q.arrow(name).target)
    return vs


def _neg(key: tuple) -> tuple:
    """Order-reversing image of a deglex key, for use with a min-heap."""
    return (-key[0], tuple(-k for k in key[1]))


@dataclass
class RewritingSystem:
    quiver: GradedQuiver
    rules: dict = field(default_factory=dict)  # lead Path -> tail AlgElement
    status: str = COMPLETE
    steps: int = 0
    killed: frozenset = frozenset()  # vertices whose idempotent is a leading term
    monomial_order: str = "deglex"

    def __post_init__(self):
        self._reindex()

    def key(self, p: Path):
        return self.quiver.sort_key(p)

    @property
    def max_lead(self) -> int:
        return max((len(p) for p in self.rules), default=0)

    def find(self, p: Path):
        """First (position, lead) with ``lead`` a subword of ``p``, or None."""
        if self.killed and any(v in self.killed for v in _vertices_of(self.quiver, p)):
            return (-1, None)
        w = p.arrows
        for i in range(len(w)):
            for lead in self._by_first.get(w[i], ()):
                k = len(lead.arrows)
                if w[i:i + k] == lead.arrows:
                    return (i, lead)
        return None

    def _reindex(self):
        idx = {}
        for lead in sorted(self.rules, key=self.key):
            idx.setdefault(lead.arrows[0], []).append(lead)
        self._by_first = idx

    def is_reducible(self, p: Path) -> bool:
        return self.find(p) is not None

    def reduce(self, x: AlgElement) -> AlgElement:
        """Normal form of ``x``; reduces the largest reducible term first."""
        work: dict[Path, Fraction] = dict(x.items())
        heap = [(_neg(self.key(p)), p) for p in work]
        heapq.heapify(heap)
        done: dict[Path, Fraction] = {}
        while heap:
            _, p = heapq.heappop(heap)
            c = work.pop(p, 0)
            if c == 0:
                continue
            hit = self.find(p)
            if hit is None:
                done[p] = c
                continue
            i, lead = hit
            if lead is None:
                continue
            w = p.arrows
            left, right = w[:i], w[i + len(lead.arrows):]
            for t, e in self.rules[lead].items():
                r = t
                if right:
                    r = compose(r, self.quiver.path(*right))
                if left:
                    r = compose(self.quiver.path(*left), r)
                if r not in work:
                    heapq.heappush(heap, (_neg(self.key(r)), r))
                work[r] = work.get(r, Fraction(0)) + c * e
        return AlgElement(done)

    def rule_elements(self) -> list[AlgElement]:
        return [AlgElement.of(lead) - tail for lead, tail in self.rules.items()]

    def overlaps(self):
        """All overlap ambiguities as (word, via-first, via-second) pairs."""
        out = []
        leads = sorted(self.rules, key=self.key)
        for l1 in leads:
            for l2 in leads:
                a, b = l1.arrows, l2.arrows
                for k in range(1, min(len(a), len(b))):
                    if a[len(a) - k:] == b[:k]:
                        out.append((l1, l2, k))
        return out

    def s_element(self, l1: Path, l2: Path, k: int) -> AlgElement:
        a, b = l1.arrows, l2.arrows
        pre, post = a[:len(a) - k], b[k:]
        pre_p, post_p = self.quiver.path(*pre), self.quiver.path(*post)
        one = AlgElement((compose(t, post_p), c) for t, c in self.rules[l1].items())
        two = AlgElement((compose(pre_p, t), c) for t, c in self.rules[l2].items())
        return one - two

    def is_confluent(self) -> bool:
        return all(not self.reduce(self.s_element(*ov)) for ov in self.overlaps())


def _check_parallel(r: AlgElement):
    ends = {(p.source, p.target) for p in r}
    if len(ends) > 1:
        raise RelationError(f"relation {r.to_str()} has non-parallel terms")


def _touches(q: GradedQuiver, big: Path, lead: Path, killed) -> bool:
    if killed and any(v in killed for v in _vertices_of(q, big)):
        return True
    k, w = len(lead.arrows), big.arrows
    return k > 0 and any(w[i:i + k] == lead.arrows for i in range(len(w) - k + 1))


def _overlaps_between(l1: Path, l2: Path):
    a, b = l1.arrows, l2.arrows
    return [k for k in range(1, min(len(a), len(b))) if a[len(a) - k:] == b[:k]]


def complete_rewriting(quiver: GradedQuiver, relations: list[AlgElement],
                       max_steps: int = DEFAULT_MAX_STEPS) -> RewritingSystem:
    """Complete ``relations`` into a confluent, interreduced rewriting system.

    Overlap ambiguities are resolved shortest-word first; each resolution
    counts as one step against ``max_steps``.
    """
    for r in relations:
        _check_parallel(r)
    sys = RewritingSystem(quiver)
    pending = deque(r for r in relations if r)
    pairs: list = []
    counter = itertools.count()

    def push_pairs(lead: Path):
        for other in list(sys.rules):
            for l1, l2 in ((lead, other), (other, lead)) if other != lead else ((lead, lead),):
                for k in _overlaps_between(l1, l2):
                    size = len(l1) + len(l2) - k
                    heapq.heappush(pairs, (size, next(counter), l1, l2, k))

    def add(r: AlgElement):
        r = sys.reduce(r)
        if not r:
            return
        lead = max(r, key=sys.key)
        c = r[lead]
        tail = AlgElement({p: -e / c for p, e in r.items() if p != lead})
        if lead.is_trivial:
            sys.killed = sys.killed | {lead.source}
        else:
            sys.rules[lead] = tail
        # only the new lead can make older leads (or tails) reducible
        for old in list(sys.rules):
            if old != lead and _touches(quiver, old, lead, sys.killed):
                pending.append(AlgElement.of(old) - sys.rules.pop(old))
        sys._reindex()
        for ld, t in list(sys.rules.items()):
            if any(_touches(quiver, p, lead, sys.killed) for p in t):
                sys.rules[ld] = sys.reduce(t)
        if not lead.is_trivial:
            push_pairs(lead)

    def drain():
        while pending:
            add(pending.popleft())

    drain()
    while pairs:
        _, _, l1, l2, k = heapq.heappop(pairs)
        if l1 not in sys.rules or l2 not in sys.rules:
            continue
        sys.steps += 1
        if sys.steps > max_steps:
            sys.status = BOUND_EXCEEDED
            return sys
        pending.append(sys.s_element(l1, l2, k))
        drain()
    sys.status = COMPLETE
    return sys


@dataclass
class H0Result:
    verdict: str
    quiver: GradedQuiver
    relations: list
    system: RewritingSystem
    basis: list = field(default_factory=list)
    witness: Path | None = None
    reason: str = ""

    @property
    def dimension(self) -> int | None:
        return len(self.basis) if self.verdict == FINITE else None

    def basis_strings(self) -> list[str]:
        return [path_str(p) for p in self.basis]


def degree_zero_relations(pres: DgPresentation) -> list[AlgElement]:
    """d-images of degree -1 duals, cut down to their degree-0 part."""
    rels = []
    target = 3 - pres.n
    for a in pres.quiver.arrows:
        if a.degree != target:
            continue
        r = pres.d_on_generators[dual_name(a.name)]
        r = AlgElement({p: c for p, c in r.items() if p.degree == 0})
        if r:
            rels.append(r)
    return rels


def degree_zero_quiver(q: GradedQuiver) -> GradedQuiver:
    return q.subquiver(a.name for a in q.arrows if a.degree == 0)


def irreducible_paths(sys: RewritingSystem, max_basis: int):
    """Enumerate irreducible paths by length.

    Returns ``(verdict, paths, witness)``.  A cycle ``c`` with
    ``len(c) >= max(L - 1, 1)`` (L the longest leading word) whose square
    is irreducible has all powers irreducible, which witnesses infinite
    dimension.
    """
    q = sys.quiver
    window = max(sys.max_lead - 1, 1)
    layer = [q.idempotent(v) for v in q.vertices if v not in sys.killed]
    found = list(layer)
    while layer:
        nxt = []
        for p in layer:
            for a in q.arrows_from(p.target):
                cand = Path((a.name,) + p.arrows, p.source, a.target, p.degree + a.degree)
                if not sys.is_reducible(cand):
                    nxt.append(cand)
        nxt.sort(key=q.sort_key)
        for c in nxt:
            if c.is_cycle and len(c) >= window:
                cc = compose(c, c)
                if not sys.is_reducible(cc):
                    return INFINITE, sorted(found + nxt, key=q.sort_key), c
        found.extend(nxt)
        if len(found) > max_basis:
            return UNDETERMINED, sorted(found, key=q.sort_key), None
        layer = nxt
    return FINITE, sorted(found, key=q.sort_key), None


def quotient_algebra(quiver: GradedQuiver, relations: list[AlgElement],
                     max_steps: int = DEFAULT_MAX_STEPS,
                     max_basis: int = DEFAULT_MAX_BASIS) -> H0Result:
    """kQ / (relations): finite with basis, infinite with witness, or undetermined."""
    sys = complete_rewriting(quiver, relations, max_steps)
    if sys.status != COMPLETE:
        return H0Result(UNDETERMINED, quiver, relations, sys,
                        reason=f"completion exceeded {max_steps} steps")
    verdict, paths, witness = irreducible_paths(sys, max_basis)
    if verdict == FINITE:
        return H0Result(FINITE, quiver, relations, sys, basis=paths)
    if verdict == INFINITE:
        return H0Result(INFINITE, quiver, relations, sys, witness=witness)
    return H0Result(UNDETERMINED, quiver, relations, sys,
                    reason=f"more than {max_basis} irreducible paths")


def h0(pres: DgPresentation, max_steps: int = DEFAULT_MAX_STEPS,
       max_basis: int = DEFAULT_MAX_BASIS) -> H0Result:
    lo = 3 - pres.n
    bad = [a.name for a in pres.quiver.arrows if not lo <= a.degree <= 0]
    if bad:
        raise ScopeError(f"arrow degrees outside [{lo}, 0]: {', '.join(bad)}")
    if not check_d_squared(pres).passed:
        raise ValueError("d^2 != 0 on generators; refusing to compute H^0")
    return quotient_algebra(degree_zero_quiver(pres.quiver), degree_zero_relations(pres),
                            max_steps, max_basis)


def h0_multiply(res: H0Result, x: Path, y: Path) -> AlgElement:
    """Product x*y (y acts first) in the normal-form basis."""
    if res.verdict != FINITE:
        raise ValueError("multiplication needs a finite verdict")
    xy = compose(x, y)
    if xy is None:
        return AlgElement()
    return res.system.reduce(AlgElement.of(xy))


def multiplication_table(res: H0Result) -> dict:
    table = {}
    for x in res.basis:
        for y in res.basis:
            table[(x, y)] = h0_multiply(res, x, y)
    return table
