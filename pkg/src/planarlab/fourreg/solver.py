"""Satisfying a fixed-embedding augmentation via perfect matching.

Given the faces of a plane red graph, (R, f) is satisfiable inside that
embedding iff the auxiliary graph has a perfect matching: vertex x appears
f(x) times; two copies of one vertex are adjacent (a loop at x inside an
incident face); copies of distinct vertices are adjacent iff they share a
face.  A matching is turned into non-crossing new edges by re-pairing the
endpoints consecutively around each face.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import permutations, product

from ..connectivity import two_cut_scan
from ..matching import max_matching
from ..planarity import dart_rotation, trace_faces
from .pieces import Piece, RedGraph, red_graph, side_vertices

SMALL_PIECE = 5          # brute-force base case bound (blue vertices)
MAX_ROTATIONS = 200_000


def pair_in_faces(faces: list[list[int]], f: dict[int, int]) -> list[tuple[int, int]] | None:
    demand = [x for x in sorted(f) if f[x] > 0]
    if not demand:
        return []
    face_of: dict[int, set[int]] = {x: set() for x in demand}
    for i, seq in enumerate(faces):
        for x in seq:
            if x in face_of:
                face_of[x].add(i)
    copies = [x for x in demand for _ in range(f[x])]
    if len(copies) % 2:
        return None
    adj: list[list[int]] = [[] for _ in copies]
    for i, x in enumerate(copies):
        for j in range(i + 1, len(copies)):
            y = copies[j]
            if (x == y and face_of[x]) or (x != y and face_of[x] & face_of[y]):
                adj[i].append(j)
                adj[j].append(i)
    mate = max_matching(len(copies), adj)
    if any(m == -1 for m in mate):
        return None
    per_face: dict[int, list[int]] = defaultdict(list)
    for i, j in enumerate(mate):
        if i < j:
            x, y = copies[i], copies[j]
            fi = min(face_of[x] & face_of[y])
            per_face[fi] += [x, y]
    new = []
    for fi in sorted(per_face):
        seq = faces[fi]
        pos: dict[int, int] = {}
        for k, x in enumerate(seq):
            pos.setdefault(x, k)
        pts = sorted(per_face[fi], key=lambda x: pos[x])
        new += [(pts[k], pts[k + 1]) for k in range(0, len(pts), 2)]
    return new


def red_faces(p: Piece, red: RedGraph, eids: list[int], rot: dict) -> list[list[int]]:
    """Boundary vertex sequences of R's faces for a rotation of the blue piece."""
    elist = [p.edges[e] for e in eids]
    out = []
    for walk in trace_faces(elist, rot):
        seq = []
        for d in walk:
            i = d >> 1
            seq.append(elist[i][d & 1])
            seq += side_vertices(p.etype[eids[i]], red.parts[eids[i]], (d & 1) == 0)
        out.append(seq)
    return out


def _rotations(p: Piece, eids: list[int]):
    darts: dict[int, list[int]] = {v: [] for v in p.verts}
    for i, e in enumerate(eids):
        u, v = p.edges[e]
        darts[u].append(2 * i)
        darts[v].append(2 * i + 1)
    choices = []
    for v in p.verts:
        ds = darts[v]
        if len(ds) <= 2:
            choices.append([ds])
        else:
            choices.append([[ds[0]] + list(rest) for rest in permutations(ds[1:])])
    for combo in product(*choices):
        yield dict(zip(p.verts, combo))


def brute_small(p: Piece) -> list[tuple[int, int]] | None:
    """Try every planar rotation system of the blue piece (tiny pieces only)."""
    red = red_graph(p)
    if not p.edges:
        (v,) = p.verts
        if p.f[v] % 2:
            return None
        return [(v, v)] * (p.f[v] // 2)
    eids = sorted(p.edges)
    n_faces = len(eids) - len(p.verts) + 2
    seen = set()
    for count, rot in enumerate(_rotations(p, eids)):
        if count > MAX_ROTATIONS:
            raise RuntimeError("rotation enumeration too large for brute force")
        faces = red_faces(p, red, eids, rot)
        if len(faces) != n_faces:
            continue
        key = frozenset(tuple(sorted(set(s))) for s in faces)
        if key in seen:
            continue
        seen.add(key)
        new = pair_in_faces(faces, red.f)
        if new is not None:
            return red.edges + new
    return None


DELETE_RULE = {
    ("A", "B"): "A", ("A", "C"): "C", ("B", "C"): "C",
    ("B", "D"): "D", ("C", "D"): "C",
}


def lemma2(p: Piece) -> list[tuple[int, int]] | None:
    """Decide (R, f) for a blue piece without 2-vertex-cuts; witness edges on V(R)."""
    if len(p.verts) <= 3:
        return brute_small(p)
    groups: dict[tuple[int, int], list[int]] = defaultdict(list)
    for e, (u, v) in p.edges.items():
        groups[(min(u, v), max(u, v))].append(e)
    deleted: dict[int, int] = {}            # deleted eid -> surviving partner eid
    for key, es in groups.items():
        if len(es) == 1:
            continue
        if len(es) > 2:
            raise AssertionError("triple edge in a 3-connected piece of max degree 4")
        e1, e2 = sorted(es, key=lambda e: (p.etype[e], e))
        pair = (p.etype[e1], p.etype[e2])
        if pair == ("A", "D"):
            return None
        gone = DELETE_RULE.get(pair)
        if gone is None:
            continue
        if p.etype[e1] == gone:
            deleted[e1] = e2
        else:
            deleted[e2] = e1
    red = red_graph(p)
    kept = [e for e in sorted(p.edges) if e not in deleted]
    elist = [p.edges[e] for e in kept]
    rot = dart_rotation(list(p.verts), elist)
    if rot is None:
        return None
    faces = red_faces(p, red, kept, rot)
    live = set(p.verts)
    for e in kept:
        live.update(red.parts[e])
    new = pair_in_faces(faces, {x: red.f[x] for x in live})
    if new is None:
        return None
    out = [e for k in kept for e in red.part_edges[k]]
    for e, partner in sorted(deleted.items()):
        t = p.etype[e]
        out += red.part_edges[e]
        if t == "C" and p.etype[partner] == "D":
            # C beside a diamond: w takes over the diamond's q-edge q-z
            w = red.parts[e][0]
            q = red.parts[partner][4]
            k = next(i for i, ed in enumerate(new) if q in ed)
            a, b = new.pop(k)
            z = b if a == q else a
            new += [(w, z), (w, q)]
        elif t == "C":
            w = red.parts[e][0]
            out.append((w, w))
        elif t == "D":
            x = red.parts[partner][0]
            k = next(i for i, ed in enumerate(new) if x in ed)
            a, b = new.pop(k)
            z = b if a == x else a
            _, _, _, pp, q = red.parts[e]
            new += [(q, z), (pp, x)]
    return out + new


def is_two_cut_free(p: Piece) -> bool:
    return two_cut_scan(list(p.verts), p.edge_list()) is None


def witness_ok(p: Piece, edges: list[tuple[int, int]]) -> bool:
    """M satisfies (R, f): contains R, degrees deg_R + f, planar."""
    red = red_graph(p)
    have = Counter((min(a, b), max(a, b)) for a, b in edges)
    need = Counter((min(a, b), max(a, b)) for a, b in red.edges)
    if any(have[e] < c for e, c in need.items()):
        return False
    deg: dict[int, int] = defaultdict(int)
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    for x in red.verts:
        if deg[x] != red.degree(x) + red.f[x]:
            return False
    if set(deg) - set(red.verts):
        return False
    return dart_rotation(red.verts, edges) is not None
