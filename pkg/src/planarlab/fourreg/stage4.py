"""The iterative loop on a blue graph without cut vertices.

Each iteration finds a minimal 2-vertex-cut {u, v} with a smallest side
B1, decides the small half through ``lemma2`` (or brute force when tiny),
and continues on the other half with an augmentation that records what the
small half needs from it.  Case names follow the u1/v1/u2/v2 statements:
u1 holds when f(u) = 0 or u has exactly one edge into B1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..connectivity import two_cut_scan
from .pieces import TYPE_SUM, Piece
from .solver import SMALL_PIECE, brute_small, lemma2

log = logging.getLogger(__name__)


@dataclass
class Step:
    kind: str                                  # "base", "split", "done"
    case: str = ""
    verdict: bool | None = None                # for base/done
    next_piece: Piece | None = None            # for split
    cut: tuple[int, int] | None = None
    side_pieces: tuple[Piece, ...] = ()        # the small-side augmentations examined
    side_verdicts: tuple[bool, ...] = ()


def _sub(p: Piece, verts, eids, fixed: dict[int, int] | None = None) -> Piece:
    f = {v: p.f[v] for v in verts}
    if fixed:
        f.update(fixed)
    return Piece(tuple(sorted(verts)), {e: p.edges[e] for e in eids},
                 {e: p.etype[e] for e in eids}, f)


def _with_edge(p: Piece, u: int, v: int, t: str) -> Piece:
    eid = p.next_eid()
    edges = dict(p.edges)
    edges[eid] = (u, v)
    etype = dict(p.etype)
    etype[eid] = t
    return Piece(p.verts, edges, etype, dict(p.f))


def _count(p: Piece, x: int, side: set[int]) -> int:
    return sum(1 for a, b in p.edges.values()
               if (a == x and b in side) or (b == x and a in side))


def solve_piece(p: Piece) -> bool:
    """Satisfiability of any connected cut-vertex-free piece."""
    if two_cut_scan(list(p.verts), p.edge_list()) is None:
        return lemma2(p) is not None
    if len(p.verts) <= SMALL_PIECE - 1:
        return brute_small(p) is not None
    log.debug("side piece with a 2-cut; recursing")
    return solve(p)


def _pieces_for_cut(p: Piece, u: int, v: int, side1: set[int]):
    side2 = set(p.verts) - side1 - {u, v}
    e1 = [e for e, (a, b) in p.edges.items() if a in side1 or b in side1]
    e2 = [e for e, (a, b) in p.edges.items() if a in side2 or b in side2]
    euv = [e for e, (a, b) in p.edges.items() if {a, b} == {u, v}]
    return side2, e1, e2, euv


def _sum(p: Piece, verts, eids) -> int:
    return sum(p.f[x] for x in verts) + sum(TYPE_SUM[p.etype[e]] for e in eids)


def _disjunction(first: list[Piece], second: list[Piece], case: str) -> Step:
    """(ii)-subcases: R1' (A) and R1'' (D) decide which R2 variant survives."""
    s1, s2 = solve_piece(first[0]), solve_piece(first[1])
    if s1 and s2:
        nxt = second[2]          # C-vertex variant
    elif s1:
        nxt = second[0]          # bare edge
    elif s2:
        nxt = second[1]          # diamond
    else:
        return Step("done", case, verdict=False, side_pieces=tuple(first), side_verdicts=(s1, s2))
    return Step("split", case, next_piece=nxt, side_pieces=tuple(first), side_verdicts=(s1, s2))


def _case_a(p: Piece, u: int, v: int, side1: set[int], label: str) -> Step:
    side2, e1, e2, euv = _pieces_for_cut(p, u, v, side1)
    b1 = _sub(p, side1 | {u, v}, e1, {u: 0, v: 0})           # B1-dagger, f(u)=f(v)=0
    b2 = _sub(p, side2 | {u, v}, e2 + euv)                     # B2-star, f kept
    s1 = _sum(p, side1, e1)
    if s1 % 2:
        left = _with_edge(b1, u, v, "B")
        ok = solve_piece(left)
        step = Step("split" if ok else "done", label + "(i)", verdict=None if ok else False,
                    next_piece=_with_edge(b2, u, v, "B") if ok else None,
                    side_pieces=(left,), side_verdicts=(ok,))
    else:
        step = _disjunction([_with_edge(b1, u, v, "A"), _with_edge(b1, u, v, "D")],
                            [_with_edge(b2, u, v, t) for t in "ADC"], label + "(ii)")
    step.cut = (u, v)
    return step


def _case_b(p: Piece, u: int, v: int, side1: set[int]) -> Step:
    side2, e1, e2, euv = _pieces_for_cut(p, u, v, side1)
    b1 = _sub(p, side1 | {u, v}, e1 + euv)                     # B1-star, f kept
    b2 = _sub(p, side2 | {u, v}, e2, {u: 0, v: 0})             # B2-dagger, f(u)=f(v)=0
    s1 = _sum(p, side1 | {u, v}, e1 + euv)
    if s1 % 2:
        left = _with_edge(b1, u, v, "B")
        ok = solve_piece(left)
        step = Step("split" if ok else "done", "b(i)", verdict=None if ok else False,
                    next_piece=_with_edge(b2, u, v, "B") if ok else None,
                    side_pieces=(left,), side_verdicts=(ok,))
    else:
        step = _disjunction([_with_edge(b1, u, v, "A"), _with_edge(b1, u, v, "D")],
                            [_with_edge(b2, u, v, t) for t in "ADC"], "b(ii)")
    step.cut = (u, v)
    return step


def stage4_step(p: Piece) -> Step:
    cut = two_cut_scan(list(p.verts), p.edge_list())
    if cut is None:
        return Step("base", "lemma2", verdict=lemma2(p) is not None)
    u, v, side = cut
    side1 = set(side)
    side2 = set(p.verts) - side1 - {u, v}

    def stmt(x: int, s: set[int]) -> bool:
        return p.f[x] == 0 or _count(p, x, s) == 1

    u1, v1, u2, v2 = stmt(u, side1), stmt(v, side1), stmt(u, side2), stmt(v, side2)
    if u1 and v1:
        return _case_a(p, u, v, side1, "a")
    if u2 and v2:
        return _case_b(p, u, v, side1)
    # case (c): orient so that u1, not u2, not v1, v2
    if not (u1 and not u2 and not v1 and v2):
        u, v = v, u
        u1, v1, u2, v2 = v1, u1, v2, u2
    assert u1 and not u2 and not v1 and v2, "case (c) structure"
    assert len(side1) == 1 and p.f[u] == 1 and p.f[v] == 1
    if len(side2) == 1:
        return Step("base", "c-small", verdict=brute_small(p) is not None, cut=(u, v))
    (x,) = [b if a == v else a for a, b in p.edges.values()
            if (a == v and b in side2) or (b == v and a in side2)]
    return _case_a(p, u, x, side1 | {v}, "c/a")


def solve(p: Piece) -> bool:
    while True:
        step = stage4_step(p)
        if step.kind != "split":
            return bool(step.verdict)
        p = step.next_piece
