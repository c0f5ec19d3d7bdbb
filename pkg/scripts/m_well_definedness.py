"""How often does the embedding version of M depend on the choice of kernel
bases?  Compares pairs sharing a quadratic form (as regularly homotopic
embeddings must) with unrelated pairs."""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from orderone.invariant_m import m_embeddings
from orderone.sampling import random_embedding_pair, random_invertible


@dataclass
class MConfig:
    pairs: int = 300
    changes: int = 10
    max_genus: int = 5
    seed: int = 1


def basis_dependent(rng: random.Random, e, e2, changes: int) -> bool:
    g = e.genus
    base = m_embeddings(e, e2)
    for _ in range(changes):
        ch = (random_invertible(rng, g), random_invertible(rng, g))
        if m_embeddings(e, e2, changes=ch) != base:
            return True
    return False


def run(cfg: MConfig) -> int:
    rng = random.Random(cfg.seed)
    result = {}
    for same in (True, False):
        bad = 0
        for _ in range(cfg.pairs):
            g = rng.randint(1, cfg.max_genus)
            e, e2 = random_embedding_pair(rng, g, same_form=same)
            bad += basis_dependent(rng, e, e2, cfg.changes)
        result[same] = bad
        label = "same quadratic form" if same else "unrelated         "
        print(f"{label}: {bad}/{cfg.pairs} pairs with basis-dependent M")
    return 1 if result[True] else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in vars(MConfig()).items():
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=val)
    return run(MConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
