"""Eigenvalue view of factor existence: bipartite thresholds and the sweep.

For complete bipartite graphs the largest adjacency eigenvalue decides
[a,b]-factor existence (sharp at equality).  The extremal non-factorable
graph attaches one vertex to a clique by a-1 edges; its eigenvalue is the
largest root of a cubic, and the sweep looks for graphs above that bar
without a factor.
"""

import evenfactor as ef

print("Complete bipartite K_{x,14-x}, bounds [2,4]:")
print(f"  {'x':>2} {'lambda1':>10} {'threshold':>10} {'eigen-route':>12} "
      f"{'closed-form':>12} {'search':>8}")
threshold = ef.bipartite_threshold(2, 4, 14)
for x in range(1, 8):
    g = ef.complete_bipartite(x, 14 - x)
    lam = ef.lambda1(g).lambda1
    cls = ef.classify_threshold(lam, threshold)
    closed = ef.observation_decide(x, 14 - x, 2, 4)
    present = ef.find_ab_factor(g, 2, 4) is not None
    print(f"  {x:>2} {lam:>10.6f} {threshold:>10.6f} {cls:>12} "
          f"{str(closed):>12} {str(present):>8}")

print()
print("The cubic root rho(n,a) equals lambda1 of the extremal graph:")
for n, a in [(5, 2), (8, 4), (12, 6), (20, 10)]:
    lam = ef.lambda1(ef.h_na(n, a)).lambda1
    root = ef.rho(n, a)
    print(f"  n={n:>2} a={a:>2}: lambda1={lam:.10f}  rho={root:.10f}  "
          f"|diff|={abs(lam - root):.2e}")

print()
print("Exhaustive sweep at n=5, bounds [2,2]: every graph strictly above the")
print("bar has a factor, and the extremal graph sits exactly on it.")
records = ef.conjecture_sweep(5, 2, 2, source="exhaustive")
print(" ", ef.sweep_summary(records))
for rec in records:
    tag = rec.verdict if rec.verdict else "on the boundary"
    print(f"  lambda1={rec.lambda1:.6f} vs rho={rec.rho:.6f}: "
          f"{rec.classification:>9} -> {tag}")
