"""Command-line front end.

Every subcommand reads JSON files (``-`` for stdin) and writes one document.
Exit status: 0 on success, 1 when a validation or relation check fails, 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from .abelian import GUElement, OElement
from .census import Census, fk_of, k_of, mirror, standard_census, u_of, uhat_of, validate
from .delta1 import SYMBOL_FUNCTIONS, all_symbols, check_relations
from .invariant_m import (
    DiffeoAction,
    EmbeddingSides,
    epsilon_pair,
    m_diffeo,
    m_embeddings,
    q_diff_diffeo,
    q_diff_embeddings,
    u_diff_embeddings,
    uhat_diff_diffeo,
    uhat_diff_embeddings,
)
from .moves import MoveNotApplicableError, apply_sequence, parse_move

__all__ = ["main", "run"]


class InputError(Exception):
    pass


def _load(path: str, stdin) -> Any:
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def _parse(path: str, stdin, builder: Callable[[Any], Any]) -> Any:
    obj = _load(path, stdin)
    try:
        return builder(obj)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _to_json(v: Any) -> Any:
    if isinstance(v, (GUElement, OElement, Census)):
        return v.to_json()
    if isinstance(v, int):
        return int(v)
    return v


def _census_text(c: Census) -> str:
    chambers = " ".join(f"{m}:{e}" for m, e in sorted(c.chi.items())) or "(none)"
    triples = " ".join(f"{m}:{n}" for m, n in sorted(c.n.items())) or "(none)"
    return f"genus {c.genus}\nchambers (degree:euler) {chambers}\ntriple points (degree:count) {triples}"


class _Out:
    def __init__(self, mode: str, stream) -> None:
        self.mode = mode
        self.stream = stream

    def emit(self, payload: Any, text: str) -> None:
        if self.mode == "json":
            self.stream.write(json.dumps(payload, indent=2) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _cmd_validate(args, out: _Out, stdin) -> int:
    c = _parse(args.census, stdin, lambda o: Census.from_json(o, strict=False))
    rep = validate(c)
    lines = ["ok" if rep.ok else "FAILED"]
    lines += [f"odd triple-point count at degree {m}" for m in rep.odd_degrees]
    lines += rep.identity_failures
    out.emit(rep.to_json(), "\n".join(lines))
    return 0 if rep.ok else 1


_INVARIANTS: dict[str, Callable[[Census], Any]] = {"fk": fk_of, "k": k_of, "u": u_of, "uhat": uhat_of}


def _cmd_eval(args, out: _Out, stdin) -> int:
    c = _parse(args.census, stdin, Census.from_json)
    v = _INVARIANTS[args.invariant](c)
    out.emit(_to_json(v), f"{args.invariant} = {v}")
    return 0


def _emit_census_value(c: Census, what: str, out: _Out) -> None:
    if what == "census":
        out.emit(c.to_json(), _census_text(c))
    else:
        v = _INVARIANTS[what](c)
        out.emit(_to_json(v), f"{what} = {v}")


def _cmd_moves(args, out: _Out, stdin) -> int:
    c = _parse(args.census, stdin, Census.from_json)
    if (args.apply is None) == (args.file is None):
        raise InputError("moves: give exactly one of --apply or --file")
    if args.apply is not None:
        texts = [t for t in args.apply.split(",") if t.strip()]
        where = "--apply"
    else:
        texts = _load(args.file, stdin)
        where = args.file
        if not isinstance(texts, list) or not all(isinstance(t, str) for t in texts):
            raise InputError(f"{where}: expected a JSON array of move strings")
    try:
        trace = [parse_move(t) for t in texts]
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None
    try:
        c = apply_sequence(c, trace)
    except MoveNotApplicableError as exc:
        raise InputError(f"{where}: {exc}") from None
    _emit_census_value(c, args.emit, out)
    return 0


def _cmd_mirror(args, out: _Out, stdin) -> int:
    c = _parse(args.census, stdin, Census.from_json)
    _emit_census_value(mirror(c), "census", out)
    return 0


def _cmd_standard(args, out: _Out, stdin) -> int:
    if args.genus < 0:
        raise InputError("--genus must be non-negative")
    _emit_census_value(standard_census(args.genus, args.side), "census", out)
    return 0


def _cmd_m_diffeo(args, out: _Out, stdin) -> int:
    d = _parse(args.diffeo, stdin, DiffeoAction.from_json)
    m = m_diffeo(d)
    payload = {"M": int(m), "Uhat": int(uhat_diff_diffeo(d)), "Q": int(q_diff_diffeo(d, m))}
    out.emit(payload, f"M(i, i o h) = {m}\nUhat(i, i o h) = {payload['Uhat']}\nQ(i, i o h) = {payload['Q']}")
    return 0


def _pair(args, stdin) -> tuple[EmbeddingSides, EmbeddingSides]:
    if args.embeddings.count("-") > 1:
        raise InputError("at most one input may be read from stdin")
    e, e2 = (_parse(p, stdin, EmbeddingSides.from_json) for p in args.embeddings)
    if e.genus != e2.genus:
        raise InputError(f"genus mismatch: {e.genus} vs {e2.genus}")
    return e, e2


def _cmd_m_embed(args, out: _Out, stdin) -> int:
    e, e2 = _pair(args, stdin)
    m = m_embeddings(e, e2)
    out.emit({"M": int(m)}, f"M(e, e') = {m}")
    return 0


def _cmd_q_embed(args, out: _Out, stdin) -> int:
    e, e2 = _pair(args, stdin)
    payload = {
        "Q": int(q_diff_embeddings(e, e2)),
        "M": int(m_embeddings(e, e2)),
        "Uhat": int(uhat_diff_embeddings(e, e2)),
    }
    out.emit(payload, f"Q(e, e') = {payload['Q']}  (M = {payload['M']}, Uhat = {payload['Uhat']})")
    return 0


def _cmd_u_embed(args, out: _Out, stdin) -> int:
    e, e2 = _pair(args, stdin)
    payload = {"U": u_diff_embeddings(e, e2), "epsilon": epsilon_pair(e, e2)}
    out.emit(payload, f"U(e, e') = {payload['U']}  (epsilon = {payload['epsilon']})")
    return 0


def _degree_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _cmd_symbols(args, out: _Out, stdin) -> int:
    fn = SYMBOL_FUNCTIONS[args.which]
    rows = [(s, fn(s)) for s in all_symbols(*args.range)]
    width = max((len(str(s)) for s, _ in rows), default=0)
    out.emit(
        [{"symbol": str(s), "value": _to_json(v)} for s, v in rows],
        "\n".join(f"{str(s):<{width}}  {v}" for s, v in rows),
    )
    return 0


def _cmd_check_relations(args, out: _Out, stdin) -> int:
    if args.window < 0:
        raise InputError("--window must be non-negative")
    names = list(SYMBOL_FUNCTIONS) if args.which == "all" else [args.which]
    window = range(-args.window, args.window + 1)
    found = {name: check_relations(SYMBOL_FUNCTIONS[name], window) for name in names}
    payload = {
        "window": [-args.window, args.window],
        "violations": {
            name: [{"relation": v.relation, "m": v.m, "lhs": _to_json(v.lhs), "rhs": _to_json(v.rhs)} for v in vs]
            for name, vs in found.items()
        },
    }
    lines = [f"{name}: {'ok' if not vs else f'{len(vs)} violation(s)'}" for name, vs in found.items()]
    lines += [f"  {name}: {v}" for name, vs in found.items() for v in vs]
    out.emit(payload, "\n".join(lines))
    return 1 if any(found.values()) else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")

    p = _Parser(prog="orderone", description="Order one invariants of surface immersions on census data.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", _cmd_validate, "check parity and the Euler-characteristic identities")
    sp.add_argument("--census", required=True)

    sp = add("eval", _cmd_eval, "evaluate k, f^K, U or Uhat on a census")
    sp.add_argument("--census", required=True)
    sp.add_argument("--invariant", choices=tuple(_INVARIANTS), required=True)

    sp = add("moves", _cmd_moves, "apply a CE trace to a census")
    sp.add_argument("--census", required=True)
    sp.add_argument("--apply", help='comma separated moves, e.g. "T3@0:+,Q4@1:-"')
    sp.add_argument("--file", help="JSON array of move strings")
    sp.add_argument("--emit", choices=("census",) + tuple(_INVARIANTS), default="census")

    sp = add("mirror", _cmd_mirror, "census after an orientation-reversing reparametrisation")
    sp.add_argument("--census", required=True)

    sp = add("standard", _cmd_standard, "census of a standard embedding")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--side", type=int, choices=(-1, 1), required=True)

    sp = add("m-diffeo", _cmd_m_diffeo, "M, Uhat and Q differences for i and i o h")
    sp.add_argument("--diffeo", required=True)

    for name, func, what in (
        ("m-embed", _cmd_m_embed, "M(e, e')"),
        ("q-embed", _cmd_q_embed, "Q(e, e')"),
        ("u-embed", _cmd_u_embed, "U(e, e')"),
    ):
        sp = add(name, func, f"{what} for two embeddings")
        sp.add_argument("--embeddings", nargs=2, metavar=("E", "E2"), required=True)

    sp = add("symbols", _cmd_symbols, "table of a canonical function on CE symbols")
    sp.add_argument("--range", type=_degree_range, default=(-3, 3), metavar="LO..HI")
    sp.add_argument("--which", choices=tuple(SYMBOL_FUNCTIONS), default="gu")

    sp = add("check-relations", _cmd_check_relations, "verify the relation system on a degree window")
    sp.add_argument("--window", type=int, default=20)
    sp.add_argument("--which", choices=tuple(SYMBOL_FUNCTIONS) + ("all",), default="all")
    return p


def _glue_ranges(argv: list[str]) -> list[str]:
    # "--range -3..3" would otherwise be read as an unknown option "-3..3"
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--range":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--range={nxt}")
        else:
            out.append(tok)
    return out


def run(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    argv = _glue_ranges(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
        return args.func(args, _Out(args.output, stdout), stdin)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
