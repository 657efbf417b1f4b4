"""
Cyclic patterns and their diagonal lifts
========================================

A pattern is a cyclic word of colors; condition vectors state the least
gap allowed at each forward offset.  Lifting a length-L word onto an
m x n torus with L | m and L | n colors cell (i, j) by position (i + j)
mod L, which makes every anti-diagonal constant.
"""

from lpqcycles import (
    Pattern,
    ProductKind,
    concatenated_strong_pattern,
    exists_cycle_pattern,
    is_diagonal,
    l21_cycle_pattern,
    lift_diagonal,
    reduce_rows,
    semigroup_decompose,
    torus,
    validate,
    validate_pattern,
)

CART = ProductKind.CARTESIAN
STRONG = ProductKind.STRONG

# every length d >= 3 carries a span-4 word for the cartesian gaps (2, 1)
for d in (3, 7, 8):
    print(f"length {d}:", l21_cycle_pattern(d).colors)

# the strong gaps (2, 2, 1, 1) are far more rigid: searching spans 6
# finds words only at multiples of 7
for d in range(3, 15):
    found = exists_cycle_pattern(d, 6, (2, 2, 1, 1))
    if found is not None:
        print(f"span-6 word of length {d}:", found.colors)

# at span 7 an 8-word appears, and the two blocks concatenate to cover
# every length in the numerical semigroup generated by 7 and 8
dec = semigroup_decompose(45, 7, 8)
print(f"45 = {dec.a}*7 + {dec.b}*8")
pat = concatenated_strong_pattern(45)
print("length-45 word validates:", validate_pattern(pat) == [])

# lifting shows the word as constant anti-diagonals
f = lift_diagonal(l21_cycle_pattern(3), CART, 3, 6)
print("lifted grid:")
print(f.color_grid())
print("diagonal:", is_diagonal(f), " violations:", validate(torus(CART, 3, 6), f))

# an invalid word lifts to an invalid labeling, never to a valid one
bad = Pattern((0, 1, 2), (2, 1))
print("bad word violations:", len(validate_pattern(bad)))
print("bad lift violations:", len(validate(torus(CART, 3, 6), lift_diagonal(bad, CART, 3, 6))))

# a tall diagonal labeling loses its top rows and stays valid
tall = lift_diagonal(l21_cycle_pattern(3), CART, 12, 3)
short = reduce_rows(tall)
print("reduced", tall.shape.rows, "rows to", short.shape.rows, "- still valid:",
      validate(torus(CART, short.shape.rows, 3), short) == [])
