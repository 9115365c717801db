"""JSON encodings for the value types that cross the CLI boundary.

Complexes: {"num_vertices": int, "facets": [[int,...],...]}; the labeled
variant adds {"labels": [[u,v,m],...]}.  Pairs that never appear in the
labels list are unlabeled, which downstream Coxeter machinery reads as an
infinite bond; edges of the complex itself must all be labeled.  Unknown
keys (e.g. "provenance" notes in the shipped corpus) are preserved on
read of the raw document but ignored by the constructors.

All dumps are canonical: sorted keys, no whitespace, one trailing
newline.  parse(print(x)) == x on everything this module emits.
"""

from __future__ import annotations

import json

from .homology import FGAbelianGroup, IntegerMatrix
from .quasitoric import CharacteristicPair, Fan
from .simplicial import LabeledComplex, SimplicialComplex, build_complex


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def complex_to_obj(K: SimplicialComplex) -> dict:
    return {"num_vertices": K.num_vertices,
            "facets": [list(f.vertices) for f in K.facets]}


def labeled_to_obj(LK: LabeledComplex) -> dict:
    obj = complex_to_obj(LK.complex)
    obj["labels"] = [list(t) for t in LK.labels]
    return obj


def complex_from_obj(obj: dict) -> SimplicialComplex | LabeledComplex:
    if not isinstance(obj, dict):
        raise ValueError("complex document must be a JSON object")
    if "facets" not in obj:
        raise ValueError('complex document lacks a "facets" key')
    K = build_complex(obj["facets"])
    declared = obj.get("num_vertices")
    if declared is not None and declared != K.num_vertices:
        raise ValueError(f"declared num_vertices {declared} does not match "
                         f"facet support {K.num_vertices}")
    if "labels" in obj:
        return LabeledComplex(K, tuple((int(u), int(v), int(m))
                                       for u, v, m in obj["labels"]))
    return K


def group_to_obj(G: FGAbelianGroup) -> dict:
    return {"rank": G.free_rank, "torsion": list(G.torsion)}


def group_from_obj(obj: dict) -> FGAbelianGroup:
    return FGAbelianGroup(int(obj.get("rank", 0)),
                          tuple(int(q) for q in obj.get("torsion", ())))


def pair_to_obj(p: CharacteristicPair) -> dict:
    return {"n": p.n,
            "lambda": [list(r) for r in p.lam.entries],
            "nerve": complex_to_obj(p.nerve)}


def pair_from_obj(obj: dict) -> CharacteristicPair:
    for key in ("n", "lambda", "nerve"):
        if key not in obj:
            raise ValueError(f'characteristic pair document lacks "{key}"')
    nerve = complex_from_obj(obj["nerve"])
    if isinstance(nerve, LabeledComplex):
        nerve = nerve.complex
    return CharacteristicPair(nerve, int(obj["n"]),
                              IntegerMatrix.from_rows(obj["lambda"]))


def fan_to_obj(f: Fan) -> dict:
    return {"rays": [list(r) for r in f.rays],
            "cones": [list(c) for c in f.max_cones]}


def fan_from_obj(obj: dict) -> Fan:
    for key in ("rays", "cones"):
        if key not in obj:
            raise ValueError(f'fan document lacks "{key}"')
    return Fan(tuple(tuple(int(x) for x in r) for r in obj["rays"]),
               tuple(tuple(int(i) for i in c) for c in obj["cones"]))


def _simplex_key(vertices: tuple[int, ...]) -> str:
    return " ".join(str(v) for v in vertices)


def _parse_simplex_key(key: str) -> tuple[int, ...]:
    key = key.strip()
    return tuple(int(tok) for tok in key.split()) if key else ()


def cochain_to_obj(c) -> dict:
    return {"degree": c.degree,
            "group": group_to_obj(c.group),
            "values": {_simplex_key(k): list(v) for k, v in c.values}}


def cochain_from_obj(obj: dict, D) -> "Cochain":
    from .dualcells import Cochain
    for key in ("degree", "group", "values"):
        if key not in obj:
            raise ValueError(f'cochain document lacks "{key}"')
    group = group_from_obj(obj["group"])
    assignment = {_parse_simplex_key(k): tuple(int(x) for x in v)
                  for k, v in obj["values"].items()}
    return Cochain.build(D, int(obj["degree"]), group, assignment)


def matrix_to_obj(A: IntegerMatrix) -> list[list[int]]:
    return [list(r) for r in A.entries]
