"""m-cluster orbit categories of linearly oriented A_n, at Hom-dimension level.

Conventions: the quiver is ``n -> n-1 -> ... -> 1``.  The indecomposable
module with support ``[i, j]`` is written ``M[i, j]``; projectives are
``P_x = M[1, x]``, injectives ``I_x = M[x, n]``.  In the bounded derived
category an indecomposable is ``Sigma^s M[i, j]``.  The orbit category is
taken under ``F = tau^{-1} Sigma^m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class DbObject:
    shift: int
    i: int
    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i <= self.j <= self.n:
            raise ValueError(f"bad interval [{self.i}, {self.j}] for A_{self.n}")

    @property
    def is_projective(self) -> bool:
        return self.i == 1

    @property
    def is_injective(self) -> bool:
        return self.j == self.n

    def __str__(self) -> str:
        s = f"M[{self.i},{self.j}]"
        if self.shift == 0:
            return s
        return f"S^{self.shift} {s}"


def db(i: int, j: int, n: int, shift: int = 0) -> DbObject:
    return DbObject(shift, i, j, n)


def projective(x: int, n: int, shift: int = 0) -> DbObject:
    return DbObject(shift, 1, x, n)


def injective(x: int, n: int, shift: int = 0) -> DbObject:
    return DbObject(shift, x, n, n)


def hom_mod(x: DbObject, y: DbObject) -> int:
    """dim Hom(M[a,b], M[c,d]) = 1 iff a <= c <= b <= d."""
    return int(x.i <= y.i <= x.j <= y.j)


def _tau_module(x: DbObject) -> DbObject | None:
    if x.is_projective:
        return None
    return DbObject(x.shift, x.i - 1, x.j - 1, x.n)


def ext1_mod(x: DbObject, y: DbObject) -> int:
    """Ext^1(M, N) = D Hom(N, tau M) (hereditary AR formula)."""
    t = _tau_module(x)
    return 0 if t is None else hom_mod(y, t)


def hom_dim_db(x: DbObject, y: DbObject) -> int:
    """dim Hom_{D^b}(x, y); nonzero only when the shifts differ by 0 or 1."""
    if x.n != y.n:
        raise ValueError("objects live over different A_n")
    diff = y.shift - x.shift
    if diff == 0:
        return hom_mod(x, y)
    if diff == 1:
        return ext1_mod(x, y)
    return 0


def apply_sigma(x: DbObject, k: int = 1) -> DbObject:
    return DbObject(x.shift + k, x.i, x.j, x.n)


def apply_tau(x: DbObject) -> DbObject:
    """Derived AR translation: tau P_x = Sigma^{-1} I_x."""
    if x.is_projective:
        return injective(x.j, x.n, x.shift - 1)
    return DbObject(x.shift, x.i - 1, x.j - 1, x.n)


def apply_tau_inv(x: DbObject) -> DbObject:
    if x.is_injective:
        return projective(x.i, x.n, x.shift + 1)
    return DbObject(x.shift, x.i + 1, x.j + 1, x.n)


def apply_F(x: DbObject, m: int, k: int = 1) -> DbObject:
    """(tau^{-1} Sigma^m)^k."""
    for _ in range(k):
        x = apply_sigma(apply_tau_inv(x), m)
    for _ in range(-k):
        x = apply_tau(apply_sigma(x, -m))
    return x


def serre(x: DbObject) -> DbObject:
    """Serre functor nu, computed from the projective resolution.

    For non-projective ``M[a,b]`` the resolution ``P_{a-1} -> P_b`` goes to
    ``I_{a-1} -> I_b`` under the Nakayama functor; that map is onto with
    kernel ``M[a-1, b-1]`` sitting in cohomological degree -1.
    """
    if x.is_projective:
        return injective(x.j, x.n, x.shift)
    a, b = x.i, x.j
    # canonical map M[p,n] -> M[q,n] (p <= q) is onto with kernel M[p, q-1]
    p, q = a - 1, b
    return DbObject(x.shift + 1, p, q - 1, x.n)


def serre_inv(x: DbObject) -> DbObject:
    if x.is_injective:
        return projective(x.i, x.n, x.shift)
    return DbObject(x.shift - 1, x.i + 1, x.j + 1, x.n)


def all_modules(n: int, shift: int = 0) -> list[DbObject]:
    return [DbObject(shift, i, j, n) for i in range(1, n + 1) for j in range(i, n + 1)]


@dataclass(frozen=True, order=True)
class OrbitObject:
    representative: DbObject
    m: int

    def __str__(self) -> str:
        return str(self.representative)


def canonical(x: DbObject, m: int) -> DbObject:
    """The F-translate of x with the smallest nonnegative shift."""
    if m < 1:
        raise ValueError("m must be >= 1")
    while x.shift < 0:
        x = apply_F(x, m, 1)
    while True:
        back = apply_F(x, m, -1)
        if back.shift < 0:
            return x
        x = back


def orbit(x: DbObject | OrbitObject, m: int) -> OrbitObject:
    rep = x.representative if isinstance(x, OrbitObject) else x
    return OrbitObject(canonical(rep, m), m)


def enumerate_orbit_objects(n: int, m: int) -> list[OrbitObject]:
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    seen = set()
    for s in range(0, m + 1):
        for x in all_modules(n, s):
            seen.add(orbit(x, m))
    return sorted(seen)


def _rep(x) -> DbObject:
    return x.representative if isinstance(x, OrbitObject) else x


def orbit_hom_terms(x, y, m: int) -> dict[int, int]:
    """Nonzero summands k -> dim Hom(x, F^k y), with the window certified.

    F^k y has shift monotone in k, and Hom in D^b vanishes unless the shift
    difference is 0 or 1, so the scan stops once the shift leaves range.
    """
    x, y = _rep(x), _rep(y)
    terms = {}
    k, z = 0, y
    while z.shift <= x.shift + 1:
        h = hom_dim_db(x, z)
        if h:
            terms[k] = h
        k, z = k + 1, apply_F(z, m, 1)
    k, z = -1, apply_F(y, m, -1)
    while z.shift >= x.shift:
        h = hom_dim_db(x, z)
        if h:
            terms[k] = h
        k, z = k - 1, apply_F(z, m, -1)
    return terms


def hom_dim_orbit(x, y, m: int) -> int:
    return sum(orbit_hom_terms(x, y, m).values())


def free_module_summands(n: int) -> list[DbObject]:
    return [projective(x, n) for x in range(1, n + 1)]


def hom_sum(xs, ys, m: int) -> int:
    return sum(hom_dim_orbit(x, y, m) for x in xs for y in ys)


@dataclass
class CYReport:
    n: int
    m: int
    cy_dimension: int
    pairs: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def check_cy(n: int, m: int, cy_dimension: int | None = None) -> CYReport:
    """dim Hom(X, Y) == dim Hom(Y, Sigma^{m+1} X) over all pairs of objects."""
    d = m + 1 if cy_dimension is None else cy_dimension
    objs = enumerate_orbit_objects(n, m)
    rep = CYReport(n, m, d)
    for x in objs:
        sx = apply_sigma(x.representative, d)
        for y in objs:
            rep.pairs += 1
            lhs = hom_dim_orbit(x, y, m)
            rhs = hom_dim_orbit(y, sx, m)
            if lhs != rhs:
                rep.violations.append((str(x), str(y), lhs, rhs))
    return rep


@dataclass
class TiltingReport:
    n: int
    m: int
    objects: int
    self_ext: dict  # r -> dim Hom(T, T[r])
    passing: list  # objects L with Hom(T, L[r]) = 0 for r = 1..m
    summands: list  # objects in add(T)
    mismatches: list
    end_dim: int
    negative_self_ext: dict  # r -> dim Hom(T, T[-r]), 1 <= r <= m-1

    @property
    def passed(self) -> bool:
        return not any(self.self_ext.values()) and not self.mismatches


def check_cluster_tilting(n: int, m: int) -> TiltingReport:
    """Vanishing and maximality for the image T of the free module."""
    if m < 1:
        raise ValueError("m must be >= 1")
    T = free_module_summands(n)
    t_orbits = {orbit(p, m) for p in T}
    self_ext = {r: hom_sum(T, [apply_sigma(p, r) for p in T], m) for r in range(1, m + 1)}
    neg = {r: hom_sum(T, [apply_sigma(p, -r) for p in T], m) for r in range(1, m)}
    passing, summands, mismatches = [], [], []
    objs = enumerate_orbit_objects(n, m)
    for L in objs:
        ok = all(hom_sum(T, [apply_sigma(L.representative, r)], m) == 0 for r in range(1, m + 1))
        inside = L in t_orbits
        if ok:
            passing.append(str(L))
        if inside:
            summands.append(str(L))
        if ok != inside:
            mismatches.append(str(L))
    return TiltingReport(n, m, len(objs), self_ext, passing, summands, mismatches,
                         hom_sum(T, T, m), neg)


def path_algebra_dim(n: int) -> int:
    """dim k A_n for the linear orientation: one path per pair i <= j."""
    return n * (n + 1) // 2
