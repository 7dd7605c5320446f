"""Horizontal Gauss diagrams for singular virtual braid words.

A diagram is a time-ordered list of arrows between n strands plus the
strand permutation.  Strands are named by their starting slot.  An arrow
records one real crossing:

  * positive classical: from the over strand to the under strand, kind POS;
  * negative classical: from the over strand (the one entering the lower
    slot) to the under strand, kind NEG;
  * singular: tail is the strand entering the upper slot, kind SING.

Virtual letters produce no arrow at all: they only permute slots.  This
fixes the translation ``gauss_of_braid`` exactly; ``braid_of_gauss`` is
the deterministic section that routes each arrow's head next to its tail
with virtual letters (tail kept in the upper slot for POS/SING arrows, in
the lower slot for NEG), emits the crossing, and closes with a virtual
word realising the residual permutation.  The round trip
``gauss_of_braid(braid_of_gauss(g)) == g`` is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, NamedTuple

from .words import (
    BraidWord, Budget, Distinct, Equivalent, Kind, TraceStep, Unknown, Verdict,
    apply_step, identity_perm, invert_perm, compose_perms, is_perm, invert_step,
    rho, sigma, tau, virtual_word_of_perm,
)


class ArrowKind(IntEnum):
    POS = 0
    NEG = 1
    SING = 2


class Arrow(NamedTuple):
    tail: int
    head: int
    kind: ArrowKind


@dataclass(frozen=True)
class GaussWord:
    n: int
    arrows: tuple[Arrow, ...] = ()
    perm: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be positive, got {self.n}")
        arrows = tuple(Arrow(t, h, ArrowKind(k)) for t, h, k in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        perm = tuple(self.perm) if self.perm else identity_perm(self.n)
        object.__setattr__(self, "perm", perm)
        for a in arrows:
            if not (1 <= a.tail <= self.n and 1 <= a.head <= self.n):
                raise ValueError(f"arrow {a} leaves strands 1..{self.n}")
            if a.tail == a.head:
                raise ValueError(f"arrow {a} joins a strand to itself")
        if len(perm) != self.n or not is_perm(perm):
            raise ValueError(f"bad strand permutation {perm}")

    def __len__(self) -> int:
        return len(self.arrows)


# --- translation --------------------------------------------------------

def gauss_of_braid(w: BraidWord) -> GaussWord:
    pos = list(range(1, w.n + 1))
    arrows = []
    for g in w.letters:
        i = g.index - 1
        a, b = pos[i], pos[i + 1]
        if g.kind == Kind.POS:
            arrows.append(Arrow(a, b, ArrowKind.POS))
        elif g.kind == Kind.NEG:
            arrows.append(Arrow(b, a, ArrowKind.NEG))
        elif g.kind == Kind.SING:
            arrows.append(Arrow(a, b, ArrowKind.SING))
        pos[i], pos[i + 1] = b, a
    out = [0] * w.n
    for slot, strand in enumerate(pos):
        out[strand - 1] = slot + 1
    return GaussWord(w.n, tuple(arrows), tuple(out))


def braid_of_gauss(g: GaussWord) -> BraidWord:
    pos = list(range(1, g.n + 1))
    letters = []

    def swap(i: int):
        letters.append(rho(i))
        pos[i - 1], pos[i] = pos[i], pos[i - 1]

    for ar in g.arrows:
        if ar.kind == ArrowKind.NEG:
            while pos.index(ar.head) != pos.index(ar.tail) - 1:
                sh, st = pos.index(ar.head) + 1, pos.index(ar.tail) + 1
                swap(sh if sh < st - 1 else sh - 1)
            i = pos.index(ar.head) + 1
            letters.append(sigma(i, -1))
        else:
            while pos.index(ar.head) != pos.index(ar.tail) + 1:
                sh, st = pos.index(ar.head) + 1, pos.index(ar.tail) + 1
                swap(sh - 1 if sh > st + 1 else sh)
            i = pos.index(ar.tail) + 1
            letters.append(sigma(i) if ar.kind == ArrowKind.POS else tau(i))
        pos[i - 1], pos[i] = pos[i], pos[i - 1]

    cur = [0] * g.n
    for slot, strand in enumerate(pos):
        cur[strand - 1] = slot + 1
    residual = compose_perms(invert_perm(tuple(cur)), g.perm)
    tail = virtual_word_of_perm(residual)
    return BraidWord(g.n, tuple(letters) + tail.letters)


# --- invariants ---------------------------------------------------------

PairInvariant = dict[tuple[int, int], tuple[int, int]]


def pair_invariants(g: GaussWord) -> PairInvariant:
    """Per unordered strand pair: (signed classical crossing count, singular
    crossing count).  All-zero pairs are omitted.  Invariant under every
    omega move: cancellations leave the sums alone, reorderings obviously so.
    """
    writhe: dict[tuple[int, int], int] = {}
    sing: dict[tuple[int, int], int] = {}
    for a in g.arrows:
        key = (min(a.tail, a.head), max(a.tail, a.head))
        if a.kind == ArrowKind.SING:
            sing[key] = sing.get(key, 0) + 1
        else:
            writhe[key] = writhe.get(key, 0) + (1 if a.kind == ArrowKind.POS else -1)
    out: PairInvariant = {}
    for key in sorted(set(writhe) | set(sing)):
        w, s = writhe.get(key, 0), sing.get(key, 0)
        if w or s:
            out[key] = (w, s)
    return out


def _support_disjoint(a: Arrow, b: Arrow) -> bool:
    return not ({a.tail, a.head} & {b.tail, b.head})


def _arrow_key(a: Arrow):
    return (min(a.tail, a.head), max(a.tail, a.head), int(a.kind), a.tail)


def canonical_form_trace(g: GaussWord) -> tuple[GaussWord, tuple[TraceStep, ...]]:
    """Lexicographically least arrow sequence reachable by swapping adjacent
    arrows with disjoint supports, with the swaps that realise it.

    Greedy selection: repeatedly pull the least arrow that can reach the
    front past disjoint neighbours.  (A plain bubble pass can stall on a
    non-minimal fixpoint when an arrow blocks a smaller distant one.)
    """
    arrows = list(g.arrows)
    trace: list[TraceStep] = []
    for q in range(len(arrows)):
        best_j = q
        best = _arrow_key(arrows[q])
        for j in range(q + 1, len(arrows)):
            # movable to the front of the suffix iff disjoint from everything before it
            if not all(_support_disjoint(arrows[m], arrows[j]) for m in range(q, j)):
                continue
            kj = _arrow_key(arrows[j])
            if kj < best:
                best, best_j = kj, j
        for j in range(best_j, q, -1):
            a, b = arrows[j - 1], arrows[j]
            trace.append(TraceStep("swap", j - 1, (a, b), (b, a)))
            arrows[j - 1], arrows[j] = b, a
    return GaussWord(g.n, tuple(arrows), g.perm), tuple(trace)


def canonical_form(g: GaussWord) -> GaussWord:
    return canonical_form_trace(g)[0]


# --- omega moves --------------------------------------------------------

_SIGNED = (ArrowKind.POS, ArrowKind.NEG)


def _omega_moves(arrows: tuple[Arrow, ...], n: int, max_arrows: int):
    """Single omega moves in a fixed order: O2 cancellations, O2 insertions,
    O3 triangle slides (either orientation), SO2 and SO3 singular slides,
    then disjoint-support swaps."""
    moves = []
    k = len(arrows)
    for p in range(k - 1):
        a, b = arrows[p], arrows[p + 1]
        if a.tail == b.tail and a.head == b.head and \
                {a.kind, b.kind} == {ArrowKind.POS, ArrowKind.NEG}:
            moves.append(("O2", p, (a, b), ()))
    if k + 2 <= max_arrows:
        for p in range(k + 1):
            for t in range(1, n + 1):
                for h in range(1, n + 1):
                    if t == h:
                        continue
                    for e in _SIGNED:
                        other = ArrowKind.NEG if e == ArrowKind.POS else ArrowKind.POS
                        moves.append(("O2", p, (), (Arrow(t, h, e), Arrow(t, h, other))))
    for p in range(k - 2):
        x, y, z = arrows[p:p + 3]
        if x.kind in _SIGNED and y.kind in _SIGNED and z.kind in _SIGNED:
            fwd = x.tail == y.tail and x.head == z.tail and y.head == z.head
            bwd = x.head == y.head and y.tail == z.tail and x.tail == z.head
            if fwd or bwd:
                moves.append(("O3", p, (x, y, z), (z, y, x)))
    for p in range(k - 1):
        x, y = arrows[p], arrows[p + 1]
        if y.tail == x.head and y.head == x.tail:
            if x.kind == ArrowKind.SING and y.kind in _SIGNED:
                moves.append(("SO2", p, (x, y),
                              (Arrow(x.tail, x.head, y.kind), Arrow(y.tail, y.head, ArrowKind.SING))))
            elif x.kind in _SIGNED and y.kind == ArrowKind.SING:
                moves.append(("SO2", p, (x, y),
                              (Arrow(x.tail, x.head, ArrowKind.SING), Arrow(y.tail, y.head, x.kind))))
    for p in range(k - 2):
        x, y, z = arrows[p:p + 3]
        fwd = (x.kind == ArrowKind.SING and y.kind in _SIGNED and y.kind == z.kind
               and y.tail == z.tail and x.tail == z.head and x.head == y.head)
        bwd = (z.kind == ArrowKind.SING and x.kind in _SIGNED and x.kind == y.kind
               and x.tail == y.tail and z.tail == x.head and z.head == y.head)
        if fwd or bwd:
            moves.append(("SO3", p, (x, y, z), (z, y, x)))
    for p in range(k - 1):
        a, b = arrows[p], arrows[p + 1]
        if _support_disjoint(a, b):
            moves.append(("swap", p, (a, b), (b, a)))
    return moves


def omega_neighbors(g: GaussWord, max_arrows: int | None = None) -> tuple[tuple[TraceStep, GaussWord], ...]:
    """Diagrams one omega move away; insertions are capped at ``max_arrows``
    (defaults to two more than the current size)."""
    cap = max_arrows if max_arrows is not None else len(g.arrows) + 2
    out = []
    for label, p, before, after, child in _arrow_neighbors(
            _encode_arrows(g.arrows), g.n, cap):
        out.append((TraceStep(label, p, before, after),
                    GaussWord(g.n, _decode_arrows(child), g.perm)))
    return tuple(out)


def _encode_arrows(arrows: Iterable[Arrow]) -> bytes:
    return bytes(x for a in arrows for x in (a.tail, a.head, int(a.kind)))


def _decode_arrows(data: bytes) -> tuple[Arrow, ...]:
    return tuple(Arrow(data[i], data[i + 1], ArrowKind(data[i + 2]))
                 for i in range(0, len(data), 3))


def _arrow_neighbors(state: bytes, n: int, max_arrows: int):
    arrows = _decode_arrows(state)
    out = []
    for label, p, before, after in _omega_moves(arrows, n, max_arrows):
        child = state[:3 * p] + _encode_arrows(after) + state[3 * (p + len(before)):]
        out.append((label, p, before, after, child))
    return out


def replay_omega_trace(g: GaussWord, trace: Iterable[TraceStep]) -> GaussWord:
    arrows = g.arrows
    for step in trace:
        arrows = apply_step(arrows, step)
    return GaussWord(g.n, arrows, g.perm)


def omega_equivalent(g: GaussWord, h: GaussWord, budget: Budget | None = None) -> Verdict:
    """Three-valued omega-move equivalence of diagrams, same shape as the
    word problem: invariant screen, then commutation-only canonicalisation,
    then bounded bidirectional search over single moves."""
    if g.n != h.n:
        raise ValueError("strand counts differ")
    if budget is None:
        budget = Budget()
    if g.perm != h.perm:
        return Distinct("perm", g.perm, h.perm)
    pg, ph = pair_invariants(g), pair_invariants(h)
    if pg != ph:
        return Distinct("pair_invariants", pg, ph)

    cg, trace_g = canonical_form_trace(g)
    ch, trace_h = canonical_form_trace(h)
    if cg.arrows == ch.arrows:
        trace = trace_g + tuple(invert_step(s) for s in reversed(trace_h))
        if budget.max_moves is None or len(trace) <= budget.max_moves:
            return Equivalent(trace)

    from .search import bidirectional_search

    max_arrows = budget.resolve_max_len(len(g.arrows), len(h.arrows))

    def neighbors(state):
        return _arrow_neighbors(state, g.n, max_arrows)

    found = bidirectional_search(
        _encode_arrows(g.arrows), _encode_arrows(h.arrows), None,
        max_nodes=budget.nodes, max_len=max_arrows,
        max_moves=budget.max_moves, neighbors=neighbors)
    if isinstance(found, list):
        trace = tuple(TraceStep(label, p, before, after)
                      for label, p, before, after in found)
        if replay_omega_trace(g, trace).arrows != h.arrows:
            raise AssertionError("search produced a trace that does not replay")
        return Equivalent(trace)
    return Unknown(*found)


# --- serialisation ------------------------------------------------------

_KIND_TO_CHAR = {ArrowKind.POS: "+", ArrowKind.NEG: "-", ArrowKind.SING: "s"}
_CHAR_TO_KIND = {v: k for k, v in _KIND_TO_CHAR.items()}


def gauss_to_dict(g: GaussWord) -> dict:
    return {
        "n": g.n,
        "arrows": [{"tail": a.tail, "head": a.head, "kind": _KIND_TO_CHAR[a.kind]}
                   for a in g.arrows],
        "perm": list(g.perm),
    }


def gauss_from_dict(d: dict) -> GaussWord:
    try:
        n = d["n"]
        arrows = tuple(Arrow(a["tail"], a["head"], _CHAR_TO_KIND[a["kind"]])
                       for a in d["arrows"])
        perm = tuple(d["perm"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed gauss word data: {exc}") from exc
    return GaussWord(n, arrows, perm)
