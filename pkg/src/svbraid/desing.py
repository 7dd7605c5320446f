"""Desingularization into the virtual braid monoid algebra.

``eta_hat`` replaces every singular letter by the formal difference of the
two classical resolutions and expands multiplicatively, producing an
integer combination of singularity-free words.  Keys of the combination
are plain letter sequences: no relation, not even free cancellation, is
applied when merging, so ``t1 t1`` expands to four distinct terms even
though the two middle ones cancel in the group.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .words import (
    BraidWord, Generator, Kind, degree, free_reduce, parse_word, print_word,
    sigma, singularity_count,
)


class FormalSum:
    """Integer combination of braid words, zero coefficients dropped.

    Term order is insertion order; equality ignores it.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Iterable[tuple[BraidWord, int]] = ()):
        self.n = n
        self._terms: dict[tuple[Generator, ...], int] = {}
        for word, coeff in terms:
            self.add(word, coeff)

    def add(self, word: BraidWord, coeff: int) -> None:
        if word.n != self.n:
            raise ValueError("strand count mismatch")
        if any(g.kind == Kind.SING for g in word.letters):
            raise ValueError("formal sums hold singularity-free words only")
        key = word.letters
        new = self._terms.get(key, 0) + coeff
        if new:
            self._terms[key] = new
        else:
            self._terms.pop(key, None)

    def coefficient(self, word: BraidWord) -> int:
        return self._terms.get(word.letters, 0)

    def terms(self) -> Iterator[tuple[BraidWord, int]]:
        for key, coeff in self._terms.items():
            yield BraidWord(self.n, key), coeff

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FormalSum)
                and self.n == other.n and self._terms == other._terms)

    def __repr__(self) -> str:
        parts = []
        for word, coeff in self.terms():
            sign = "+" if coeff > 0 else "-"
            mag = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
            parts.append(f"{sign} {mag}{print_word(word)}")
        body = " ".join(parts) if parts else "0"
        return f"FormalSum(n={self.n}: {body})"


DegreeSpectrum = dict[int, int]


def eta_hat_expansion(w: BraidWord, max_singularities: int = 20) -> Iterator[tuple[int, BraidWord]]:
    """Signed resolution branches, before any merging.

    Singular letters are resolved left to right, positive branch first, so
    branch k of 2^d reads its bits most-significant-first.  The sign is the
    parity of negative choices.  Exactly 2^d branches for d singularities.
    """
    spots = [i for i, g in enumerate(w.letters) if g.kind == Kind.SING]
    d = len(spots)
    if d > max_singularities:
        raise ValueError(
            f"{d} singular letters exceeds the expansion cap {max_singularities}")
    base = list(w.letters)
    for bits in range(1 << d):
        letters = base[:]
        negatives = 0
        for j, i in enumerate(spots):
            negative = (bits >> (d - 1 - j)) & 1
            negatives += negative
            letters[i] = sigma(w.letters[i].index, -1 if negative else 1)
        yield (-1) ** negatives, BraidWord(w.n, tuple(letters))


def eta_hat(w: BraidWord, max_singularities: int = 20) -> FormalSum:
    """Multiplicative extension of tau -> sigma - sigma^{-1}; classical and
    virtual letters pass through unchanged."""
    out = FormalSum(w.n)
    for sign, word in eta_hat_expansion(w, max_singularities):
        out.add(word, sign)
    return out


def eta(w: BraidWord, max_singularities: int = 20) -> FormalSum:
    """Restriction of eta_hat to words without virtual letters."""
    for pos, g in enumerate(w.letters):
        if g.kind == Kind.VIRT:
            raise ValueError(
                f"letter {pos + 1} is virtual; eta is defined on singular "
                f"classical words only")
    return eta_hat(w, max_singularities)


def flatten(w: BraidWord) -> BraidWord:
    """Replace every singular letter by the positive classical one."""
    return BraidWord(w.n, tuple(
        sigma(g.index) if g.kind == Kind.SING else g for g in w.letters))


def degree_spectrum(f: FormalSum) -> DegreeSpectrum:
    """Histogram of term degrees weighted by absolute coefficient."""
    out: DegreeSpectrum = {}
    for word, coeff in f.terms():
        d = degree(word)
        out[d] = out.get(d, 0) + abs(coeff)
    return dict(sorted(out.items()))


def scalar_preimage_check(w: BraidWord) -> bool:
    """True when eta_hat(w) is certifiably a scalar multiple of the empty
    word: w free-reduces to nothing.  Words with singular letters always
    fail, matching the two distinct extremal degrees of their spectrum."""
    return len(free_reduce(w)) == 0


# --- serialisation ------------------------------------------------------

def formal_sum_to_dicts(f: FormalSum) -> list[dict]:
    rows = [{"coeff": coeff, "word": print_word(word)} for word, coeff in f.terms()]
    rows.sort(key=lambda r: r["word"])
    return rows


def formal_sum_from_dicts(data: Iterable[dict], n: int) -> FormalSum:
    out = FormalSum(n)
    for row in data:
        out.add(parse_word(row["word"], n), row["coeff"])
    return out
