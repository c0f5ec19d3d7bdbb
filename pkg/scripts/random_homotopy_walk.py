"""Random walks through CE moves starting from standard embeddings.

Tracks k, f^K and U along each walk and checks at every step that f^K = F(k),
that eta(f^K) = U, that both Euler-characteristic identities hold, and that
the mirror law holds.  Prints a summary of the U values reached.

    python3 scripts/random_homotopy_walk.py --walks 200 --length 40
"""

from __future__ import annotations

import argparse
import collections
import random
from dataclasses import dataclass

from orderone.abelian import F_map, eta
from orderone.census import fk_of, k_of, mirror, u_of, validate
from orderone.moves import apply_move, format_move
from orderone.sampling import random_standard, random_trace


@dataclass
class WalkConfig:
    walks: int = 200
    length: int = 40
    max_genus: int = 6
    max_deg: int = 5
    seed: int = 0
    show: int = 3


def run(cfg: WalkConfig) -> int:
    rng = random.Random(cfg.seed)
    reached = collections.Counter()
    failures = 0
    for w in range(cfg.walks):
        start = random_standard(rng, cfg.max_genus)
        g = start.genus
        end, trace = random_trace(rng, start, cfg.length, cfg.max_deg)
        # replay so the checks run on every intermediate census
        c = start
        for s, d in trace:
            c = apply_move(c, s, d)
            f = fk_of(c)
            ok = (
                f == F_map(k_of(c))
                and eta(f) == u_of(c)
                and validate(c).ok
                and u_of(mirror(c)) == 5 - 3 * g - u_of(c)
            )
            if not ok:
                failures += 1
                print(f"walk {w}: check failed after {format_move(s, d)} at {c}")
                break
        reached[(g, u_of(end))] += 1
        if w < cfg.show:
            moves = ", ".join(format_move(s, d) for s, d in trace[:8])
            print(f"walk {w}: g={g} U {u_of(start)} -> {u_of(end)}  [{moves}{', ...' if len(trace) > 8 else ''}]")
    print(f"{cfg.walks} walks of length {cfg.length}, {failures} failures")
    for g in sorted({g for g, _ in reached}):
        vals = sorted(u for gg, u in reached if gg == g)
        print(f"  g={g}: U reached in [{vals[0]}, {vals[-1]}], {len(vals)} distinct values")
    return 1 if failures else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in vars(WalkConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=val)
    return run(WalkConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
