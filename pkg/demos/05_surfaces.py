"""The thickened diagram: Euler characteristic, boundaries, genus.

Run with: python3 demos/05_surfaces.py
"""

import random

from svbraid import (
    BraidWord, Kind, euler_by_traversal, euler_characteristic, parse_word,
    print_word, relation_catalog, ribbon_of_braid, surface_summary,
)
from svbraid.suites import random_word


def show(text, n):
    w = parse_word(text, n) if text != "e" else BraidWord(n)
    s = surface_summary(w)
    print(f"  {text:12s} n={n}  euler={s.euler:3d}  boundaries={s.boundaries}  "
          f"genus={s.genus}")
    return s


print("small cases:")
show("e", 1)
show("e", 2)
show("s1", 2)
show("t1", 2)
show("r1", 2)
print()

print("the same virtual crossing on more strands needs a handle:")
show("r1", 2)
show("r1", 3)
show("r1 r2", 3)
show("r1 t2 r1", 3)
print()

# classical and singular crossings thicken to disks, so words without
# virtual letters always give a planar surface
rng = random.Random(2)
for _ in range(100):
    w = random_word(rng, rng.randint(2, 5), 10,
                    kinds=(Kind.POS, Kind.NEG, Kind.SING))
    assert surface_summary(w).genus == 0
print("100 random crossing-only words: all planar")
print()

# the Euler characteristic by vertex weights equals the traversal count
for _ in range(100):
    w = random_word(rng, rng.randint(2, 5), 12)
    r = ribbon_of_braid(w)
    assert euler_characteristic(r) == euler_by_traversal(r)
print("100 random words: weight-sum and traversal Euler characteristics agree")
print()

# defining relations never change the genus
pairs = [(inst.lhs, inst.rhs) for m in (3, 4) for inst in relation_catalog(m)]
for lhs, rhs in pairs:
    assert surface_summary(lhs).genus == surface_summary(rhs).genus
print(f"{len(pairs)} relation instances: genus equal on both sides")
print()

# hunting for higher genus with more virtual letters
best = None
for _ in range(400):
    w = random_word(rng, 5, 14)
    s = surface_summary(w)
    if best is None or s.genus > best[1]:
        best = (w, s.genus)
print(f"highest genus found in 400 random 5-strand words: {best[1]} "
      f"({print_word(best[0])})")
print("done")
