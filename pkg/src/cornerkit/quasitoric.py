"""Characteristic pairs: a candidate sphere nerve plus one integer vector
per vertex, validated by the unimodular-span condition.

"Spanning a k-dimensional subtorus" is implemented as direct-summand
span — the k vectors must extend to a basis of Zⁿ, i.e. their Smith form
is k ones — not merely rank-k span.  Locally standard actions need
isotropy subtori to be direct summands, and the H₁-vanishing criterion
for lifted actions forces the same reading.

Rows are used exactly as given: a non-primitive row can never span a
summand, and silently fixing it would turn invalid input valid.  Callers
who want gcd-normalization apply normalize_rows explicitly; fan rays are
normalized on ingestion (with a warning) since rays are directions.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .homology import (FGAbelianGroup, IntegerMatrix, cokernel, snf,
                       snf_diagonal, unimodular_inverse)
from .simplicial import Simplex, SimplicialComplex, build_complex

@dataclass(frozen=True)
class CharacteristicPair:
    """nerve on m vertices, torus rank n, and an m×n matrix whose row i is
    the vector attached to vertex i."""

    nerve: SimplicialComplex
    n: int
    lam: IntegerMatrix

    def __post_init__(self):
        m = self.nerve.num_vertices
        if self.lam.rows != m:
            raise ValueError(f"lambda has {self.lam.rows} rows for {m} vertices")
        if self.lam.cols != self.n:
            raise ValueError(f"lambda has {self.lam.cols} columns, expected n={self.n}")
        if m < self.n:
            raise ValueError(f"need at least n={self.n} vertices, got {m}")
        for i, row in enumerate(self.lam.entries):
            if all(x == 0 for x in row):
                raise ValueError(f"row {i} of lambda is zero")

    def row(self, i: int) -> tuple[int, ...]:
        return self.lam.entries[i]


@dataclass(frozen=True)
class Fan:
    """Simplicial fan data: primitive rays and maximal cones as ray-index
    sets of size <= n."""

    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rays:
            raise ValueError("fan needs at least one ray")
        dim = len(self.rays[0])
        rays = []
        for i, r in enumerate(self.rays):
            if len(r) != dim:
                raise ValueError("rays of mixed dimension")
            g = math.gcd(*r) if any(r) else 0
            if g == 0:
                raise ValueError(f"ray {i} is zero")
            if g != 1:
                warnings.warn(f"ray {i} = {list(r)} is not primitive; "
                              f"dividing by gcd {g}")
                r = tuple(x // g for x in r)
            rays.append(tuple(int(x) for x in r))
        object.__setattr__(self, "rays", tuple(rays))
        cones = tuple(tuple(sorted(c)) for c in self.max_cones)
        object.__setattr__(self, "max_cones", cones)
        for c in cones:
            if len(set(c)) != len(c):
                raise ValueError(f"cone {list(c)} repeats a ray")
            if any(i < 0 or i >= len(rays) for i in c):
                raise ValueError(f"cone {list(c)} references a missing ray")
            if len(c) > dim:
                raise ValueError(f"cone {list(c)} is not simplicial in Z^{dim}")

    @property
    def dim(self) -> int:
        return len(self.rays[0])


def unimodular_span(vectors, n: int | None = None) -> bool:
    """Do k <= n integer vectors span a rank-k direct summand of Zⁿ?

    Equivalent to the Smith normal form being exactly k ones.
    """
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if not vecs:
        return True
    width = len(vecs[0])
    if any(len(v) != width for v in vecs):
        raise ValueError("vectors of mixed dimension")
    if n is None:
        n = width
    elif n != width:
        raise ValueError(f"vectors live in Z^{width}, not Z^{n}")
    if len(vecs) > n:
        raise ValueError(f"{len(vecs)} vectors cannot span a summand of Z^{n}")
    diag = snf_diagonal(IntegerMatrix.from_rows(vecs))
    return len(diag) == len(vecs) and all(d == 1 for d in diag)


def is_characteristic(p: CharacteristicPair) -> tuple[bool, Simplex | None]:
    """Facet-by-facet unimodular-span validation.

    Subsets of a summand basis are summand bases, so checking facets is
    equivalent to checking every simplex; the witness on failure is the
    first failing facet in lexicographic order.
    """
    for f in p.nerve.facets:
        if len(f) > p.n:
            return False, f
        if not unimodular_span([p.row(v) for v in f.vertices], p.n):
            return False, f
    return True, None


def pi1_orbit_union(p: CharacteristicPair) -> FGAbelianGroup:
    """Zⁿ modulo the span of all the vectors: trivial exactly when the
    assignment is surjective over Z."""
    return cokernel(p.lam.transpose())


def h1_total_space(p: CharacteristicPair, lifts: IntegerMatrix) -> FGAbelianGroup:
    """Z^m modulo the span of the lifted vectors.

    Each lift row must project onto the matching lambda row in the first
    n coordinates; the quotient vanishes exactly when the lifts span Z^m
    unimodularly.
    """
    m = p.nerve.num_vertices
    if lifts.rows != m or lifts.cols != m:
        raise ValueError(f"lifts must be {m}x{m}")
    for i in range(m):
        if lifts.entries[i][:p.n] != p.row(i):
            raise ValueError(f"lift row {i} does not project onto lambda row {i}")
    return cokernel(lifts.transpose())


def complete_lifts(p: CharacteristicPair) -> IntegerMatrix | None:
    """Search for lifts making H1 of the total space vanish.

    Extends the columns of lambda to a basis of Z^m via the Smith
    transform when the columns span a direct summand; returns None when
    they do not.  This is a convenience completion (the choice of
    characteristic classes is the caller's in general), not part of the
    validation contract.
    """
    m = p.nerve.num_vertices
    n = p.n
    res = snf(p.lam)
    # U (m×m) · lam (m×n) · V (n×n) = D; columns of lam extend to a basis
    # of Z^m iff D has n unit diagonal entries, and then
    # [lam | last m-n columns of U⁻¹] = U⁻¹·diag(V⁻¹, I) is unimodular
    diag = res.diagonal()
    if len(diag) != n or any(d != 1 for d in diag):
        return None
    u_inv = unimodular_inverse(res.U)
    rows = [p.row(i) + tuple(u_inv.entries[i][n:]) for i in range(m)]
    lifts = IntegerMatrix.from_rows(rows)
    assert h1_total_space(p, lifts).is_trivial()
    return lifts


def from_fan(f: Fan) -> CharacteristicPair:
    """Characteristic pair read off a fan: nerve facets are the maximal
    cones, vector rows are the rays.

    Rejects singular cones (listing them all).  Completeness of the fan
    has no geometric check here; the combinatorial surrogate is running
    the sphere check on the nerve, which the CLI reports as the
    certificate used.
    """
    singular = [c for c in f.max_cones
                if not unimodular_span([f.rays[i] for i in c], f.dim)]
    if singular:
        raise ValueError("singular cones: " +
                         ", ".join(str(list(c)) for c in singular))
    nerve = build_complex([list(c) for c in f.max_cones])
    if nerve.num_vertices != len(f.rays):
        raise ValueError("some rays appear in no maximal cone")
    return CharacteristicPair(nerve, f.dim, IntegerMatrix.from_rows(f.rays))


def normalize_rows(p: CharacteristicPair) -> CharacteristicPair:
    """Divide each row by its gcd, warning when anything changes."""
    rows = []
    changed = []
    for i, row in enumerate(p.lam.entries):
        g = math.gcd(*row)
        if g > 1:
            changed.append(i)
            rows.append(tuple(x // g for x in row))
        else:
            rows.append(row)
    if changed:
        warnings.warn(f"divided non-primitive rows {changed} by their gcd")
        return CharacteristicPair(p.nerve, p.n, IntegerMatrix.from_rows(rows))
    return p


def h_vector(p: CharacteristicPair) -> tuple[int, ...]:
    """h_i = Σ_j (-1)^{i-j} C(n-j, i-j) f_{j-1}, i = 0..n, with f_{-1} = 1."""
    from .simplicial import f_vector
    f = (1,) + f_vector(p.nerve)  # f[j] = f_{j-1}
    n = p.n
    out = []
    for i in range(n + 1):
        total = 0
        for j in range(i + 1):
            if j < len(f):
                total += (-1) ** (i - j) * math.comb(n - j, i - j) * f[j]
        out.append(total)
    return tuple(out)


def even_betti_report(p: CharacteristicPair) -> tuple[int, ...]:
    """Even Betti numbers b_{2i} = h_i of the associated torus space;
    odd cohomology vanishes (cited-through from the face-ring theory).

    Preconditions: the nerve is a generalized homology (n-1)-sphere and
    the pair passes is_characteristic.
    """
    from .ghs import is_ghs
    ghs_report = is_ghs(p.nerve, p.n)
    if not ghs_report.verdict:
        raise ValueError(f"nerve is not a generalized homology "
                         f"{p.n - 1}-sphere ({len(ghs_report.failures)} failures)")
    ok, witness = is_characteristic(p)
    if not ok:
        raise ValueError(f"pair is not characteristic; offending simplex "
                         f"{list(witness.vertices)}")
    return h_vector(p)
