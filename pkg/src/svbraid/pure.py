"""The pure part of the singular virtual braid monoid.

Pure words are sequences over an X/Y alphabet: ``X(i, j, sign)`` is a
classical crossing where strand i passes over strand j, ``Y(i, j)`` a
singular one with i as the distinguished (upper-slot) strand.  Each letter
names strands, not slots, so a pure word is exactly a horizontal Gauss
diagram with identity permutation, and the whole monoid splits as pure
words extended by the symmetric group acting on strand names.

``embed_pure_generator`` realises a letter as a braid word by routing the
two strands together with virtual crossings, crossing them, and routing
back.  This is the unique braid-word shape forced by the requirement that
the letter's diagram have one arrow and identity permutation; transcribing
a conjugation formula by hand is not needed and easy to get wrong.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .words import (
    BraidWord, Budget, Equivalent, Kind, Perm, Verdict, compose_perms, concat,
    identity_perm, inverse_word, invert_perm, is_perm, theta,
    virtual_word_of_perm,
)
from .gauss import (
    Arrow, ArrowKind, GaussWord, braid_of_gauss, gauss_of_braid,
    omega_equivalent,
)


class PureGenerator(NamedTuple):
    i: int
    j: int
    kind: ArrowKind


def X(i: int, j: int, sign: int = 1) -> PureGenerator:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if i == j:
        raise ValueError(f"generator joins a strand to itself: {i}")
    return PureGenerator(i, j, ArrowKind.POS if sign == 1 else ArrowKind.NEG)


def Y(i: int, j: int) -> PureGenerator:
    if i == j:
        raise ValueError(f"generator joins a strand to itself: {i}")
    return PureGenerator(i, j, ArrowKind.SING)


@dataclass(frozen=True)
class PureWord:
    n: int
    letters: tuple[PureGenerator, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be positive, got {self.n}")
        letters = tuple(PureGenerator(i, j, ArrowKind(k))
                        for i, j, k in self.letters)
        object.__setattr__(self, "letters", letters)
        for g in letters:
            if not (1 <= g.i <= self.n and 1 <= g.j <= self.n):
                raise ValueError(f"letter {g} leaves strands 1..{self.n}")
            if g.i == g.j:
                raise ValueError(f"letter {g} joins a strand to itself")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return print_pure_word(self)


_PURE_TOKEN_RE = re.compile(r"(X\+|X-|Y)([0-9]+),([0-9]+)\Z")
_PURE_KIND = {"X+": ArrowKind.POS, "X-": ArrowKind.NEG, "Y": ArrowKind.SING}
_PURE_PREFIX = {ArrowKind.POS: "X+", ArrowKind.NEG: "X-", ArrowKind.SING: "Y"}


def print_pure_word(p: PureWord) -> str:
    if not p.letters:
        return "e"
    return " ".join(f"{_PURE_PREFIX[g.kind]}{g.i},{g.j}" for g in p.letters)


def parse_pure_word(text: str, n: int) -> PureWord:
    tokens = text.split()
    if tokens == ["e"]:
        return PureWord(n)
    letters = []
    for tok in tokens:
        m = _PURE_TOKEN_RE.match(tok)
        if m is None:
            raise ValueError(f"bad pure-word token {tok!r}")
        letters.append(PureGenerator(int(m.group(2)), int(m.group(3)),
                                     _PURE_KIND[m.group(1)]))
    return PureWord(n, tuple(letters))


# --- embedding into braid words -----------------------------------------

def embed_pure_generator(g: PureGenerator, n: int) -> BraidWord:
    """Braid word whose Gauss diagram is the single arrow of g with
    identity permutation; theta is the identity."""
    return braid_of_gauss(GaussWord(n, (Arrow(g.i, g.j, g.kind),)))


def embed_pure_word(p: PureWord) -> BraidWord:
    return concat(BraidWord(p.n),
                  *(embed_pure_generator(g, p.n) for g in p.letters))


def tau_of_permutation(p: Perm) -> BraidWord:
    """Virtual-only word realising p; adjacent transpositions map to single
    virtual letters."""
    return virtual_word_of_perm(p)


# --- semidirect decomposition -------------------------------------------

@dataclass(frozen=True)
class SemidirectPair:
    pure: PureWord
    perm: Perm

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if len(self.perm) != self.pure.n or not is_perm(self.perm):
            raise ValueError(f"bad permutation {self.perm} for n={self.pure.n}")

    @property
    def n(self) -> int:
        return self.pure.n


def decompose(w: BraidWord) -> SemidirectPair:
    """Split w into its pure part (the arrows of its Gauss diagram, read as
    X/Y letters) and its strand permutation.  Reassembling as
    embed_pure_word(pure) followed by tau_of_permutation(perm) reproduces
    the Gauss diagram of w exactly."""
    g = gauss_of_braid(w)
    letters = tuple(PureGenerator(a.tail, a.head, a.kind) for a in g.arrows)
    return SemidirectPair(PureWord(w.n, letters), g.perm)


def reassemble_pair(pair: SemidirectPair) -> BraidWord:
    return concat(embed_pure_word(pair.pure), tau_of_permutation(pair.perm))


def relabel_pure(p: PureWord, perm: Perm) -> PureWord:
    """Rename every strand index through perm."""
    if len(perm) != p.n or not is_perm(perm):
        raise ValueError(f"bad permutation {perm} for n={p.n}")
    return PureWord(p.n, tuple(
        PureGenerator(perm[g.i - 1], perm[g.j - 1], g.kind) for g in p.letters))


def semidirect_multiply(a: SemidirectPair, b: SemidirectPair) -> SemidirectPair:
    """Product in the semidirect splitting.

    The second pure part is relabelled through the inverse of the first
    permutation: with theta written left to right, a strand named x in b's
    frame is the strand that a's permutation sends to x.  This is the
    unique action making decompose a homomorphism.
    """
    if a.n != b.n:
        raise ValueError("strand counts differ")
    moved = relabel_pure(b.pure, invert_perm(a.perm))
    return SemidirectPair(PureWord(a.n, a.pure.letters + moved.letters),
                          compose_perms(a.perm, b.perm))


# --- defining relations of the pure monoid ------------------------------

class SPCheck(NamedTuple):
    label: str
    family: str
    verdict: Verdict


@dataclass(frozen=True)
class SPReport:
    n: int
    checks: tuple[SPCheck, ...]

    @property
    def passed(self) -> bool:
        return all(isinstance(c.verdict, Equivalent) for c in self.checks)

    def failures(self) -> tuple[SPCheck, ...]:
        return tuple(c for c in self.checks
                     if not isinstance(c.verdict, Equivalent))


def sp_relation_instances(n: int) -> tuple[tuple[str, PureWord, PureWord], ...]:
    """All defining-relation instances of the pure monoid at strand count n:

      SP1  X(i,j,e) X(i,j,-e) = empty
      SP2  X(i,j,e) X(i,k,e) X(j,k,e) = X(j,k,e) X(i,k,e) X(i,j,e)
      SP3  g h = h g for letters with disjoint strand supports
      SP4  Y(i,j) X(j,i,e) = X(i,j,e) Y(j,i)
      SP5  Y(j,k) X(i,k,e) X(i,j,e) = X(i,j,e) X(i,k,e) Y(j,k)
    """
    if n < 2:
        raise ValueError(f"need at least two strands, got {n}")
    strands = range(1, n + 1)
    out = []

    def inst(family, lhs, rhs):
        out.append((family, PureWord(n, tuple(lhs)), PureWord(n, tuple(rhs))))

    for i in strands:
        for j in strands:
            if i == j:
                continue
            for e in (1, -1):
                inst("SP1", [X(i, j, e), X(i, j, -e)], [])
    for i in strands:
        for j in strands:
            for k in strands:
                if len({i, j, k}) < 3:
                    continue
                for e in (1, -1):
                    inst("SP2",
                         [X(i, j, e), X(i, k, e), X(j, k, e)],
                         [X(j, k, e), X(i, k, e), X(i, j, e)])
    letters = [X(i, j, e) for i in strands for j in strands if i != j
               for e in (1, -1)]
    letters += [Y(i, j) for i in strands for j in strands if i != j]
    for a in letters:
        for b in letters:
            if a <= b or ({a.i, a.j} & {b.i, b.j}):
                continue
            inst("SP3", [a, b], [b, a])
    for i in strands:
        for j in strands:
            if i == j:
                continue
            for e in (1, -1):
                inst("SP4", [Y(i, j), X(j, i, e)], [X(i, j, e), Y(j, i)])
    for i in strands:
        for j in strands:
            for k in strands:
                if len({i, j, k}) < 3:
                    continue
                for e in (1, -1):
                    inst("SP5",
                         [Y(j, k), X(i, k, e), X(i, j, e)],
                         [X(i, j, e), X(i, k, e), Y(j, k)])
    return tuple(out)


def verify_sp_relations(n: int, budget: Budget | None = None) -> SPReport:
    """Embed both sides of every defining relation and certify that their
    Gauss diagrams are omega-equivalent.  Any non-Equivalent verdict is a
    reported failure."""
    checks = []
    for family, lhs, rhs in sp_relation_instances(n):
        label = f"{family} {print_pure_word(lhs)} = {print_pure_word(rhs)}"
        verdict = omega_equivalent(gauss_of_braid(embed_pure_word(lhs)),
                                   gauss_of_braid(embed_pure_word(rhs)),
                                   budget)
        checks.append(SPCheck(label, family, verdict))
    checks.sort(key=lambda c: c.label)
    return SPReport(n, tuple(checks))


# --- singular factorization ---------------------------------------------

@dataclass(frozen=True)
class SingularFactorization:
    n: int
    conjugated_taus: tuple[tuple[BraidWord, int], ...]
    virtual_part: BraidWord


def factor_singular(w: BraidWord) -> SingularFactorization:
    """Split w as a product of conjugated singular letters times its
    singularity-free content.

    The k-th singular letter tau_i contributes (c_k, i) where c_k is the
    prefix before it with singular letters removed; the remaining factor is
    w with singular letters removed.  Reassembling as
    prod c_k tau_{i_k} c_k^{-1} times the remainder free-reduces back to w.
    """
    prefix: list = []
    taus = []
    for g in w.letters:
        if g.kind == Kind.SING:
            taus.append((BraidWord(w.n, tuple(prefix)), g.index))
        else:
            prefix.append(g)
    return SingularFactorization(w.n, tuple(taus), BraidWord(w.n, tuple(prefix)))


def reassemble_factorization(f: SingularFactorization) -> BraidWord:
    from .words import tau as tau_letter
    parts = []
    for c, i in f.conjugated_taus:
        parts.append(concat(c, BraidWord(f.n, (tau_letter(i),)), inverse_word(c)))
    parts.append(f.virtual_part)
    return concat(BraidWord(f.n), *parts)


# --- serialisation ------------------------------------------------------

def pair_to_dict(pair: SemidirectPair) -> dict:
    return {"pure": print_pure_word(pair.pure), "perm": list(pair.perm)}


def pair_from_dict(d: dict, n: int) -> SemidirectPair:
    try:
        pure = parse_pure_word(d["pure"], n)
        perm = tuple(d["perm"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed semidirect pair data: {exc}") from exc
    return SemidirectPair(pure, perm)
