"""Independent oracles the tests check the library against.

Nothing in here calls into the Smith-normal-form / homology machinery
under test: ranks are rational Gaussian elimination over Fractions,
quotient-group orders come from breadth-first coset enumeration keyed by
an adjugate invariant, isomorphism is brute-force over all vertex
bijections, chain counts walk the face poset directly.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction


def rational_rank(rows: list[list[int]]) -> int:
    """Row rank over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    pivot_col = 0
    for _ in range(len(m)):
        while pivot_col < cols:
            pivot_row = next((i for i in range(rank, len(m))
                              if m[i][pivot_col] != 0), None)
            if pivot_row is None:
                pivot_col += 1
                continue
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
            pv = m[rank][pivot_col]
            m[rank] = [x / pv for x in m[rank]]
            for i in range(len(m)):
                if i != rank and m[i][pivot_col] != 0:
                    f = m[i][pivot_col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
            rank += 1
            pivot_col += 1
            break
        else:
            break
    return rank


def faces_of(facets: list[tuple[int, ...]], k: int) -> list[tuple[int, ...]]:
    found = set()
    for f in facets:
        if len(f) >= k + 1:
            found.update(itertools.combinations(sorted(f), k + 1))
    return sorted(found)


def boundary_rows(facets, k) -> list[list[int]]:
    """Rows indexed by (k-1)-faces, columns by k-faces, standard signs."""
    lower = faces_of(facets, k - 1)
    upper = faces_of(facets, k)
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, s in enumerate(upper):
        for i, v in enumerate(s):
            face = s[:i] + s[i + 1:]
            rows[index[face]][j] = (-1) ** i
    return rows


def rational_reduced_betti(facets: list, k: int) -> int:
    """Reduced Betti number over Q, straight from rational ranks."""
    facets = [tuple(sorted(f)) for f in facets]
    n_k = len(faces_of(facets, k))
    if n_k == 0:
        return 0
    if k == 0:
        rank_dk = rational_rank([[1] * n_k])  # augmentation
    else:
        rows = boundary_rows(facets, k)
        rank_dk = rational_rank(rows) if rows else 0
    up = boundary_rows(facets, k + 1)
    rank_up = rational_rank(up) if up and up[0] else 0
    return n_k - rank_dk - rank_up


def det_and_adjugate(a: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Cofactor-expansion determinant and adjugate; exact, SNF-free."""
    n = len(a)

    def minor(mat, i, j):
        return [row[:j] + row[j + 1:] for r, row in enumerate(mat) if r != i]

    def det(mat):
        if len(mat) == 1:
            return mat[0][0]
        if len(mat) == 2:
            return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
        total = 0
        for j, x in enumerate(mat[0]):
            if x:
                total += (-1) ** j * x * det(minor(mat, 0, j))
        return total

    d = det(a)
    adj = [[(-1) ** (i + j) * det(minor(a, j, i)) for j in range(n)]
           for i in range(n)]
    return d, adj


def coset_count(a: list[list[int]]) -> int:
    """|Z^n / column span| for square nonsingular a, by BFS coset
    enumeration: v and w agree iff adj(a)·(v-w) ≡ 0 mod det(a)."""
    n = len(a)
    d, adj = det_and_adjugate(a)
    if d == 0:
        raise ValueError("coset enumeration needs a nonsingular matrix")
    mod = abs(d)

    def invariant(v):
        return tuple(sum(adj[i][j] * v[j] for j in range(n)) % mod
                     for i in range(n))

    start = tuple([0] * n)
    seen = {invariant(start)}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in range(n):
            for step in (1, -1):
                w = list(v)
                w[i] += step
                key = invariant(w)
                if key not in seen:
                    seen.add(key)
                    queue.append(tuple(w))
    return len(seen)


def brute_force_isomorphic(a_facets, b_facets, a_labels=None, b_labels=None):
    """Try every vertex bijection; None or a mapping dict."""
    verts_a = sorted(set(v for f in a_facets for v in f))
    verts_b = sorted(set(v for f in b_facets for v in f))
    if len(verts_a) != len(verts_b) or len(a_facets) != len(b_facets):
        return None
    b_set = {tuple(sorted(f)) for f in b_facets}
    a_canon = [tuple(sorted(f)) for f in a_facets]
    for perm in itertools.permutations(verts_b):
        mapping = dict(zip(verts_a, perm))
        ok = True
        for f in a_canon:
            if tuple(sorted(mapping[v] for v in f)) not in b_set:
                ok = False
                break
        if not ok:
            continue
        if a_labels is not None:
            for (u, v), m in a_labels.items():
                mu, mv = mapping[u], mapping[v]
                if b_labels.get((min(mu, mv), max(mu, mv))) != m:
                    ok = False
                    break
        if ok:
            return mapping
    return None


def count_chains(facets, length: int) -> int:
    """Number of strictly increasing chains of `length` nonempty faces in
    the inclusion poset, counted by dynamic programming."""
    all_faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            all_faces.update(itertools.combinations(f, k))
    faces = sorted(all_faces, key=lambda s: (len(s), s))
    sets = [frozenset(f) for f in faces]
    # chains ending at face i with exactly L elements
    ending = [{1: 1} for _ in faces]
    for i, si in enumerate(sets):
        for j in range(i):
            if sets[j] < si:
                for lng, cnt in ending[j].items():
                    if lng + 1 not in ending[i]:
                        ending[i][lng + 1] = 0
                    ending[i][lng + 1] += cnt
    return sum(e.get(length, 0) for e in ending)


def maximal_cliques(n: int, edges: set[tuple[int, int]]):
    """All maximal cliques of the graph on 0..n-1 (Bron-Kerbosch)."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        for v in sorted(p):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return sorted(out)


def triangle_group_is_finite(p: int, q: int, r: int) -> bool:
    """Rank-3 system with all three bonds labeled: finite iff the angle
    sum exceeds a flat triangle."""
    return Fraction(1, p) + Fraction(1, q) + Fraction(1, r) > 1
