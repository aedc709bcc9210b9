"""The two extremal families that pin down the connectivity hypotheses.

Both graphs satisfy every degree-sum condition, miss the connectivity bar by
exactly one, and have no even [a,b]-factor: connectivity a-1 is not enough,
so the hypothesis kappa >= a cannot be weakened.
"""

from fractions import Fraction

import evenfactor as ef


def profile(name, g, a, b):
    _, delta, big = ef.degree_profile(g)
    print(f"{name}: n={g.n}, m={g.m}, degrees in [{delta},{big}]")
    print(f"  edge connectivity   = {ef.edge_connectivity(g)}")
    print(f"  vertex connectivity = {ef.vertex_connectivity(g)}")
    print(f"  sigma2              = {ef.sigma2(g)}"
          f"  (needs >= {Fraction(2 * a * g.n, a + b)})")
    print(f"  order threshold     = {ef.order_threshold(a, b)}  (n = {g.n})")
    report = ef.conjecture_conditions(g, a, b)
    print(f"  degree-sum conditions all hold: {report.overall}")
    report = ef.main_theorem_conditions(g, a, b)
    failing = [c.name for c in report.conditions if not c.holds]
    print(f"  strengthened conditions failing: {failing}")
    factor = ef.find_even_factor(g, a, b)
    print(f"  even [{a},{b}]-factor: {'present' if factor else 'ABSENT'}")
    print()


print("Family 1: two cliques bridged through an adjacent pair (a=4, b=12, t=9)")
profile("H", ef.example1(4, 12, 9), 4, 12)

print("Family 2: an independent hub set meeting a+1 cliques (a=4, b=24, t=6)")
profile("L", ef.example2(4, 24, 6), 4, 24)

print("Why family 1 fails: the degree-a vertex y forces all its edges into")
print("any factor, which leaves an odd number of edges crossing into the")
print("first clique - impossible when every factor degree is even.")
print()
print("Parameter validation is exact; slightly off parameters are rejected:")
for a, b, t in [(4, 12, 8), (4, 10, 12), (4, 24, 9)]:
    try:
        ef.example1(a, b, t) if b < 20 else ef.example2(a, b, t)
    except ValueError as err:
        print(f"  ({a},{b},{t}) rejected: {err}")
