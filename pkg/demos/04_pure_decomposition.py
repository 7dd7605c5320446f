"""Splitting off the strand permutation: the pure monoid.

Run with: python3 demos/04_pure_decomposition.py
"""

import random

from svbraid import (
    Equivalent, concat, decompose, embed_pure_word, equivalent,
    factor_singular, free_reduce, gauss_of_braid, identity_perm, parse_word,
    print_pure_word, print_word, reassemble_factorization, reassemble_pair,
    semidirect_multiply, theta, verify_sp_relations,
)
from svbraid.suites import random_word

w = parse_word("s1 t2", 3)
pair = decompose(w)
print(f"word          {print_word(w)}")
print(f"pure part     {print_pure_word(pair.pure)}")
print(f"permutation   {pair.perm}")
back = reassemble_pair(pair)
print(f"reassembled   {print_word(back)}")
verdict = equivalent(w, back)
assert isinstance(verdict, Equivalent)
print(f"certified equal in {len(verdict.trace)} move(s)")
print()

# the pure part always lies in the kernel of the permutation map
embedded = embed_pure_word(pair.pure)
assert theta(embedded) == identity_perm(3)
print(f"pure part embeds as {print_word(embedded)}, permutation identity")
print()

# decomposition respects products: act on the second pure part by the
# first permutation, multiply permutations
rng = random.Random(1)
for _ in range(100):
    n = rng.randint(2, 4)
    u, v = random_word(rng, n, 6), random_word(rng, n, 6)
    assert decompose(concat(u, v)) == semidirect_multiply(decompose(u), decompose(v))
print("100 random pairs: decompose is a homomorphism into the semidirect product")
print()

report = verify_sp_relations(4)
assert report.passed
print(f"presentation relations on 4 strands: {len(report.checks)} instances, "
      f"all certified")
print()

# every word factors as conjugated singular letters times crossing content
w = parse_word("r1 s2' t1 r2 s2 t2", 3)
f = factor_singular(w)
print(f"factoring {print_word(w)}:")
for c, i in f.conjugated_taus:
    print(f"  t{i} conjugated by {print_word(c)}")
print(f"  remaining content {print_word(f.virtual_part)}")
assert free_reduce(reassemble_factorization(f)) == free_reduce(w)
print("product of the factors reduces back to the word")
print("done")
