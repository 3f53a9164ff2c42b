"""
Ruling out decompositions
=========================

Enumerate every decomposition of the genus 3 Hodge structure, see which rule
removes it, and compute decomposable-locus codimensions for the survivors.
"""

from collections import Counter

from kodaira_monodromy.albert import AlbertClass, AlbertType
from kodaira_monodromy.hodge import enumerate_decompositions
from kodaira_monodromy.obstructions import apply_exclusions, decomposable_codim, decomposable_strata, rule

decomps = enumerate_decompositions(3)
verdicts = [apply_exclusions(d) for d in decomps]
print(len(decomps), "decompositions")
print(Counter(v.rule_id or "survives" for v in verdicts))

for rid in ("R3", "R4", "R5", "R6"):
    print(rid, "-", rule(rid).description)

# survivors: exactly one summand is allowed to move
for d, v in zip(decomps, verdicts):
    if not v.excluded:
        print(d.shape_label, d)

# the real cubic case: only E^3 is decomposable, a curve in a threefold
cubic = AlbertClass(AlbertType.I, 3, 1, 2, 3)
print(decomposable_strata(cubic))
print("codim", decomposable_codim(cubic))

# the ball quotient has a decomposable divisor
ball = AlbertClass(AlbertType.IV, 1, 1, 3, 3)
for s in decomposable_strata(ball):
    print(s.shape, s.dimension, s.pieces)
print("codim", decomposable_codim(ball))
