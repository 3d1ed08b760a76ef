"""Planarity testing with rotation-system output.

Each biconnected block of the simple support is embedded by path addition
(Demoucron, Malgrange and Pertuiset): keep a plane subgraph, compute its
fragments, and route a path of a fragment through a face that admits it,
preferring fragments with a single admissible face.  Block rotations are
concatenated at cut vertices.  Parallel edges are re-inserted next to their
representative (forming digons) and loops as two consecutive darts, which
is the same as subdividing them before the test and contracting after.

Non-planar inputs yield a Kuratowski subgraph found by greedy edge deletion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .connectivity import block_structure, components_of
from .graphs import Edge, LabeledGraph, PlanarMultigraph


# ---------------------------------------------------------------- block embedding


def _find_cycle(start, adj: dict) -> list:
    # shortest path from start to a neighbour t avoiding the edge start-t
    t = min(adj[start])
    prev = {start: None}
    queue = [start]
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        for y in sorted(adj[x]):
            if x == start and y == t:
                continue
            if y not in prev:
                prev[y] = x
                queue.append(y)
    if t not in prev:
        raise ValueError("no cycle in a biconnected block")
    path = [t]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path


def _split_face(face: list, a, b, interior: list) -> tuple[list, list]:
    ia, ib = face.index(a), face.index(b)
    k = len(face)
    arc1 = [face[(ia + t) % k] for t in range((ib - ia) % k + 1)]  # a .. b
    arc2 = [face[(ib + t) % k] for t in range((ia - ib) % k + 1)]  # b .. a
    f1 = arc1 + interior[::-1]
    f2 = arc2 + interior
    return f1, f2


def _dmp_faces(vertices: Sequence, adj: dict, n_edges: int) -> list[list] | None:
    """Faces (consistently oriented vertex cycles) of a biconnected simple block."""
    cyc = _find_cycle(min(vertices), adj)
    faces = [cyc, cyc[::-1]]
    fsets = [set(cyc), set(cyc)]
    emb_v = set(cyc)
    emb_e = {frozenset((cyc[i], cyc[i - 1])) for i in range(len(cyc))}
    while len(emb_e) < n_edges:
        frags = []
        for v in sorted(emb_v):
            for w in sorted(adj[v]):
                if w in emb_v and v < w and frozenset((v, w)) not in emb_e:
                    frags.append(({v, w}, [v, w]))
        seen = set()
        for s in sorted(vertices):
            if s in emb_v or s in seen:
                continue
            comp = [s]
            seen.add(s)
            att = set()
            i = 0
            while i < len(comp):
                x = comp[i]
                i += 1
                for y in adj[x]:
                    if y in emb_v:
                        att.add(y)
                    elif y not in seen:
                        seen.add(y)
                        comp.append(y)
            frags.append((att, set(comp)))
        chosen = None
        for att, data in frags:
            ok = [k for k, fs in enumerate(fsets) if att <= fs]
            if not ok:
                return None
            if chosen is None or (len(ok) == 1 and len(chosen[2]) > 1):
                chosen = (att, data, ok)
                if len(ok) == 1:
                    break
        att, data, ok = chosen
        k = ok[0]
        if isinstance(data, list):
            a, b = data
            interior = []
        else:
            comp = data
            a = min(att)
            x = min(y for y in adj[a] if y in comp)
            prev = {x: None}
            queue = [x]
            end = None
            i = 0
            while end is None:
                y = queue[i]
                i += 1
                outs = sorted(z for z in adj[y] if z in emb_v and z != a)
                if outs:
                    end = (y, outs[0])
                    break
                for z in sorted(adj[y]):
                    if z in comp and z not in prev:
                        prev[z] = y
                        queue.append(z)
            y, b = end
            interior = [y]
            while prev[interior[-1]] is not None:
                interior.append(prev[interior[-1]])
            interior.reverse()
        f1, f2 = _split_face(faces[k], a, b, interior)
        faces[k] = f1
        fsets[k] = set(f1)
        faces.append(f2)
        fsets.append(set(f2))
        path = [a] + interior + [b]
        emb_v.update(interior)
        emb_e.update(frozenset((path[i], path[i + 1])) for i in range(len(path) - 1))
    return faces


def _rotation_from_faces(faces: list[list], adj: dict) -> dict:
    succ: dict = {}
    for f in faces:
        k = len(f)
        for i in range(k):
            succ.setdefault(f[i], {})[f[i - 1]] = f[(i + 1) % k]
    rot = {}
    for v, sv in succ.items():
        start = min(sv)
        order = [start]
        while True:
            nxt = sv[order[-1]]
            if nxt == start:
                break
            order.append(nxt)
        if len(order) != len(adj[v]):
            raise AssertionError("face set does not induce a rotation")
        rot[v] = order
    return rot


def simple_rotation(vertices: Sequence, edges: Sequence[Edge]) -> dict | None:
    """Neighbour rotation for the simple support, or None when non-planar."""
    adj: dict = {v: set() for v in vertices}
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    simple = sorted({(min(u, v), max(u, v)) for u, v in edges if u != v})
    bs = block_structure(list(vertices), simple)
    rot: dict = {v: [] for v in vertices}
    for blk in bs.blocks:
        bedges = [simple[e] for e in blk]
        if len(bedges) == 1:
            u, v = bedges[0]
            rot[u].append(v)
            rot[v].append(u)
            continue
        bverts = sorted({x for e in bedges for x in e})
        if len(bedges) > 3 * len(bverts) - 6:
            return None
        badj: dict = {v: set() for v in bverts}
        for u, v in bedges:
            badj[u].add(v)
            badj[v].add(u)
        faces = _dmp_faces(bverts, badj, len(bedges))
        if faces is None:
            return None
        for v, order in _rotation_from_faces(faces, badj).items():
            rot[v].extend(order)
    return rot


def dart_rotation(vertices: Sequence, edges: Sequence[Edge]) -> dict | None:
    """Rotation of darts (dart 2e leaves edges[e][0], dart 2e+1 leaves edges[e][1])."""
    rot = simple_rotation(vertices, edges)
    if rot is None:
        return None
    by_pair: dict = {}
    loops: dict = {v: [] for v in vertices}
    for i, (u, v) in enumerate(edges):
        if u == v:
            loops[u].append(i)
        else:
            by_pair.setdefault((min(u, v), max(u, v)), []).append(i)
    out = {}
    for v in vertices:
        darts = []
        for w in rot[v]:
            ids = by_pair[(min(v, w), max(v, w))]
            if v > w:
                ids = ids[::-1]
            for e in ids:
                darts.append(2 * e if edges[e][0] == v else 2 * e + 1)
        for e in loops[v]:
            darts += [2 * e, 2 * e + 1]
        out[v] = darts
    return out


def trace_faces(edges: Sequence[Edge], rot: dict) -> list[list[int]]:
    """Face walks as dart lists; next dart = successor of the reversed dart."""
    pos = {}
    for v, ds in rot.items():
        for i, d in enumerate(ds):
            pos[d] = (v, i)
    seen = set()
    walks = []
    for d0 in sorted(pos):
        if d0 in seen:
            continue
        walk = []
        d = d0
        while d not in seen:
            seen.add(d)
            walk.append(d)
            v, i = pos[d ^ 1]
            ds = rot[v]
            d = ds[(i + 1) % len(ds)]
        walks.append(walk)
    return walks


def dart_tail(edges: Sequence[Edge], d: int):
    return edges[d >> 1][d & 1]


def dart_head(edges: Sequence[Edge], d: int):
    return edges[d >> 1][1 - (d & 1)]


# ---------------------------------------------------------------- public types


@dataclass(frozen=True)
class RotationEmbedding:
    host: PlanarMultigraph
    rotation: tuple[tuple[int, ...], ...]   # rotation[v-1]: darts leaving v, cyclic

    def at(self, v: int) -> tuple[int, ...]:
        return self.rotation[v - 1]

    def tail(self, d: int) -> int:
        return dart_tail(self.host.edges, d)

    def head(self, d: int) -> int:
        return dart_head(self.host.edges, d)

    def rot_dict(self) -> dict:
        return {v: list(self.rotation[v - 1]) for v in range(1, self.host.n + 1)}

    def faces(self) -> list[tuple[int, ...]]:
        return [tuple(w) for w in trace_faces(self.host.edges, self.rot_dict())]

    def face_vertices(self, face: Sequence[int]) -> list[int]:
        return [self.tail(d) for d in face]

    def face_count(self) -> int:
        nontrivial = sum(
            1 for c in components_of(list(range(1, self.host.n + 1)), self.host.edges)
            if any(self.rotation[v - 1] for v in c)
        )
        return len(self.faces()) - nontrivial + 1

    def euler_ok(self) -> bool:
        g = self.host
        kappa = len(components_of(list(range(1, g.n + 1)), g.edges))
        return g.n - g.m + self.face_count() == 1 + kappa


@dataclass(frozen=True)
class NonPlanarWitness:
    kind: str                      # "K5" or "K33"
    edges: tuple[Edge, ...]        # a Kuratowski subdivision in the simple support
    branch_vertices: tuple[int, ...]


def faces(e: RotationEmbedding) -> list[tuple[int, ...]]:
    return e.faces()


def is_planar_edges(vertices: Sequence, edges: Sequence[Edge]) -> bool:
    simple = {(min(u, v), max(u, v)) for u, v in edges if u != v}
    if len(simple) <= 8:
        return True
    return simple_rotation(vertices, sorted(simple)) is not None


def is_planar(g: LabeledGraph | PlanarMultigraph) -> bool:
    return is_planar_edges(range(1, g.n + 1), list(g.edges))


def kuratowski_subgraph(vertices: Sequence, edges: Sequence[Edge]) -> NonPlanarWitness:
    keep = sorted({(min(u, v), max(u, v)) for u, v in edges if u != v})
    if is_planar_edges(vertices, keep):
        raise ValueError("graph is planar")
    i = 0
    while i < len(keep):
        trial = keep[:i] + keep[i + 1:]
        if not is_planar_edges(vertices, trial):
            keep = trial
        else:
            i += 1
    deg: dict = {}
    for u, v in keep:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    branch = tuple(sorted(v for v, d in deg.items() if d >= 3))
    bdeg = sorted(deg[v] for v in branch)
    if bdeg == [4] * 5:
        kind = "K5"
    elif bdeg == [3] * 6:
        kind = "K33"
    else:  # pragma: no cover - minimal non-planar graphs are Kuratowski subdivisions
        raise AssertionError(f"unexpected minimal non-planar graph {keep}")
    return NonPlanarWitness(kind, tuple(keep), branch)


def embed(g: PlanarMultigraph | LabeledGraph) -> RotationEmbedding | NonPlanarWitness:
    if isinstance(g, LabeledGraph):
        g = g.to_multigraph()
    vs = list(range(1, g.n + 1))
    rot = dart_rotation(vs, g.edges)
    if rot is None:
        return kuratowski_subgraph(vs, g.edges)
    return RotationEmbedding(g, tuple(tuple(rot[v]) for v in vs))
