"""Two tosses of a possibly biased coin, and the walk that counts heads minus tails.

Run with ``python3 demos/01_coin_toss.py``.
"""

from martkit import classify, cond_exp
from martkit.scenarios import coin_walk

for p in ("1/2", "2/3", "1/3"):
    m, f, x = coin_walk(p)
    print(f"p(heads) = {p}")
    print("  weights      ", [str(w) for w in m.weights])
    # What do we expect of the second step, knowing the first toss?
    best_guess = cond_exp(m, f[1], x[2]).table
    print("  E(X_2 | F_1) ", [str(v[0]) for v in best_guess])
    print("  X_1          ", [str(v[0]) for v in x[1]])

    report = classify(m, f, x)
    print("  kind:", report.kind)
    ce = report.martingale.counterexample
    if ce is not None:
        labels = [m.labels[w] for w in ce.event]
        print(f"  first failure of the fair-game identity: i={ce.i}, j={ce.j}, on {labels}, "
              f"{ce.lhs[0]} vs {ce.rhs[0]}")
    print()
