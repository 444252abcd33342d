"""You cannot beat a fair game with a betting system, but you can ride a favourable one."""

from martkit import ProcessTable, classify, transform
from martkit.scenarios import coin_walk

# double the stake after a head, stop betting after a tail
stakes = ProcessTable([[0, 0, 0, 0], [1, 1, 1, 1], [2, 2, 0, 0]])

for p in ("1/2", "2/3"):
    m, f, x = coin_walk(p)
    winnings = transform(stakes, x)
    print(f"p = {p}: winnings at time 2 = {[str(v[0]) for v in winnings[2]]}, "
          f"kind = {classify(m, f, winnings).kind}")

# Betting against the coin turns the favourable game into a losing one.
m, f, x = coin_walk("2/3")
short = ProcessTable([[0] * 4, [-1] * 4, [-1, -1, -1, -1]])
print("short the 2/3 coin:", classify(m, f, transform(short, x)).kind)
