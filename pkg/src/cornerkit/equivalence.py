"""Label-preserving simplicial isomorphism by backtracking search.

The search assigns vertices most-constrained-first, filtering candidates
through a per-vertex invariant (degree, incident label multiset, facet
membership count) and checking adjacency/label consistency against the
partial map.  Every returned mapping is re-verified in full before it is
handed back, and all tie-breaking is lexicographic so results are
reproducible.  Unlabeled complexes run through the same engine as the
all-labels-equal case.
"""

from __future__ import annotations

from .simplicial import LabeledComplex, SimplicialComplex, f_vector, simplices

VertexMapping = dict[int, int]


def _parts(X) -> tuple[SimplicialComplex, dict[tuple[int, int], int]]:
    if isinstance(X, LabeledComplex):
        return X.complex, X.label_dict()
    if isinstance(X, SimplicialComplex):
        return X, {}
    raise TypeError(f"expected a complex, got {type(X).__name__}")


def _edge_labels(K: SimplicialComplex, labels) -> dict[tuple[int, int], int]:
    """Every edge gets a label; unlabeled edges share a placeholder."""
    return {e.vertices: labels.get(e.vertices, 0) for e in simplices(K, 1)}


def _vertex_invariant(K: SimplicialComplex, labels, v: int):
    incident = sorted(m for (a, b), m in labels.items() if v in (a, b))
    degree = len(incident)
    facet_count = sum(1 for f in K.facets if v in f)
    return (degree, tuple(incident), facet_count)


def invariant_fingerprint(A) -> tuple:
    """Isomorphism-invariant token; equality is necessary (never
    sufficient) for the existence of an isomorphism."""
    K, raw = _parts(A)
    labels = _edge_labels(K, raw)
    invs = sorted(_vertex_invariant(K, labels, v) for v in range(K.num_vertices))
    return (f_vector(K),
            tuple(i[0] for i in invs),
            tuple(invs))


def verify_isomorphism(A, B, mapping: VertexMapping) -> bool:
    """Does `mapping` send facets onto facets bijectively and preserve
    every edge label?"""
    KA, rawA = _parts(A)
    KB, rawB = _parts(B)
    if isinstance(A, LabeledComplex) != isinstance(B, LabeledComplex):
        return False
    n = KA.num_vertices
    if KB.num_vertices != n:
        return False
    if sorted(mapping.keys()) != list(range(n)):
        return False
    if sorted(mapping.values()) != list(range(n)):
        return False
    b_facets = {f.vertices for f in KB.facets}
    mapped = {tuple(sorted(mapping[v] for v in f.vertices)) for f in KA.facets}
    if mapped != b_facets:
        return False
    for (u, v), m in rawA.items():
        mu, mv = mapping[u], mapping[v]
        if rawB.get((min(mu, mv), max(mu, mv))) != m:
            return False
    return len(rawA) == len(rawB)


def find_isomorphism(A, B) -> VertexMapping | None:
    """A label-preserving simplicial isomorphism A -> B, or None.

    Deterministic given its inputs; any mapping returned has already
    passed verify_isomorphism.
    """
    if isinstance(A, LabeledComplex) != isinstance(B, LabeledComplex):
        raise TypeError("cannot compare a labeled complex with an unlabeled one")
    KA, rawA = _parts(A)
    KB, rawB = _parts(B)
    if invariant_fingerprint(A) != invariant_fingerprint(B):
        return None
    n = KA.num_vertices
    if n == 0:
        return {} if complexes_match({}, KA, KB) else None
    labA = _edge_labels(KA, rawA)
    labB = _edge_labels(KB, rawB)
    invA = {v: _vertex_invariant(KA, labA, v) for v in range(n)}
    invB = {v: _vertex_invariant(KB, labB, v) for v in range(n)}
    adjA = {v: {} for v in range(n)}
    adjB = {v: {} for v in range(n)}
    for (u, v), m in labA.items():
        adjA[u][v] = m
        adjA[v][u] = m
    for (u, v), m in labB.items():
        adjB[u][v] = m
        adjB[v][u] = m
    by_inv: dict[tuple, list[int]] = {}
    for v in range(n):
        by_inv.setdefault(invB[v], []).append(v)
    if sorted(by_inv) != sorted(set(invA.values())):
        return None

    # static order: rarest invariant class first, then connectivity to the
    # already-ordered prefix, lexicographic tie-break
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < n:
        best = min((v for v in range(n) if v not in placed),
                   key=lambda v: (-sum(1 for u in order if u in adjA[v]),
                                  len(by_inv.get(invA[v], ())), v))
        order.append(best)
        placed.add(best)

    # adjacency-compatible bijections can still scramble facets, so the
    # facet check runs at every completed leaf, not just the first
    result = _search(KA, KB, invA, by_inv, adjA, adjB, order)
    if result is not None:
        assert verify_isomorphism(A, B, result)
    return result


def complexes_match(mapping: VertexMapping, KA: SimplicialComplex,
                    KB: SimplicialComplex) -> bool:
    mapped = {tuple(sorted(mapping[v] for v in f.vertices)) for f in KA.facets}
    return mapped == {f.vertices for f in KB.facets}


def _search(KA, KB, invA, by_inv, adjA, adjB, order) -> VertexMapping | None:
    """Backtrack over adjacency-compatible bijections, facet-checking each
    completed assignment."""
    n = KA.num_vertices
    mapping: VertexMapping = {}
    used: set[int] = set()
    result: VertexMapping | None = None

    def backtrack(idx: int) -> bool:
        nonlocal result
        if idx == n:
            if complexes_match(mapping, KA, KB):
                result = dict(sorted(mapping.items()))
                return True
            return False
        a = order[idx]
        for b in by_inv.get(invA[a], ()):
            if b in used:
                continue
            if any(adjA[a].get(a2) != adjB[b].get(b2)
                   for a2, b2 in mapping.items()):
                continue
            mapping[a] = b
            used.add(b)
            if backtrack(idx + 1):
                return True
            del mapping[a]
            used.discard(b)
        return False

    backtrack(0)
    return result
