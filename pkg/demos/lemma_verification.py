"""
Finite machine proofs behind the dichotomies
============================================

"""

from lpqcycles import (
    verify_l2211_periodicity,
    verify_lemma_cartesian_local,
    verify_lemma_strong_local,
)

# every span-4 labeling of a 3x3 cartesian window forces the diagonal
# identity f(1,1) = f(0,2); the checker enumerates all of them
rep = verify_lemma_cartesian_local()
print(f"{rep.check}: holds={rep.holds} over {rep.count} labelings")

# one extra color and the identity collapses, with a counterexample
rep = verify_lemma_cartesian_local(span=5)
print(f"{rep.check}: holds={rep.holds} over {rep.count} labelings")
print("counterexample grid:")
print(rep.witness.color_grid())

# the strong window is 4x4 at span 6 and forces f(1,2) = f(2,1)
rep = verify_lemma_strong_local()
print(f"{rep.check}: holds={rep.holds} over {rep.count} labelings")

# diagonality turns torus questions into cyclic word questions; under
# the strong gaps (2,2,1,1) the feasible lengths at span 6 are exactly
# the multiples of 7
feasible = verify_l2211_periodicity(28)
print("feasible lengths up to 28:", sorted(feasible))
print("length-7 word:", feasible[7].colors)
