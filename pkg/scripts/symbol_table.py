"""Print the values of g^U and the u-functions on every CE symbol in a degree
range, and report how many symbols the universal element and the closed form
for u(k) agree on."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from orderone.abelian import phi
from orderone.delta1 import all_symbols, g_universal, u_k_closed, u_M, u_Q, u_U


@dataclass
class TableConfig:
    lo: int = -3
    hi: int = 3


def run(cfg: TableConfig) -> int:
    rows = []
    agree = 0
    for s in all_symbols(cfg.lo, cfg.hi):
        gu = g_universal(s)
        agree += phi(gu) == u_k_closed(s)
        rows.append((str(s), str(gu), str(u_k_closed(s)), str(u_U(s)), str(u_M(s)), str(u_Q(s))))
    head = ("symbol", "g_U", "u(k)", "u(U)", "u(M)", "u(Q)")
    widths = [max(len(r[i]) for r in rows + [head]) for i in range(len(head))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    print(fmt.format(*head))
    for r in rows:
        print(fmt.format(*r))
    print(f"\nphi(g_U) = u(k) on {agree}/{len(rows)} symbols")
    return 0 if agree == len(rows) else 1


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--lo", type=int, default=TableConfig.lo)
    p.add_argument("--hi", type=int, default=TableConfig.hi)
    return run(TableConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
