"""Command-line front end.

Thin wrappers over the library: every subcommand parses its inputs, calls
one library operation and prints the JSON (or SVG) serialization of the
result.  Exit codes: 0 success (or a true/found result), 1 a false/none
result from a predicate-style subcommand, 2 usage or validation errors.
`--graph -` (the default) reads the graph from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .contraction_words import (
    default_contraction_word,
    is_contraction_element,
    is_contraction_word,
)
from .diagrams import Pairing, find_well_pairing, render_svg
from .embeddings import (
    CoContractionSpec,
    Homomorphism,
    apply_hom,
    build_hom,
    check_well_defined,
    sample_injectivity,
)
from .graphs import FAMILY_KINDS, Graph, complement, induced_subgraph, load_graph, make_family
from .recognition import find_induced_cycle, is_chordal, is_isomorphic, is_weakly_chordal
from .transform import co_contract, cocontraction_chain, contract
from .words import (
    cyclic_reduce,
    equals,
    find_q_pair,
    in_parabolic,
    normal_form,
    parse_word,
    support,
)

__all__ = ["main", "console_main"]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _graph_arg(args) -> Graph:
    return load_graph(_read_text(args.graph))


def _set_arg(text: str) -> list[str]:
    names = [n for n in text.split(",") if n]
    if not names:
        raise ValueError("empty vertex set")
    return names


def _emit(obj) -> None:
    print(json.dumps(obj))


# --- graph ---


def _cmd_graph_complement(args) -> int:
    _emit(complement(_graph_arg(args)).to_json_obj())
    return 0


def _cmd_graph_induce(args) -> int:
    _emit(induced_subgraph(_graph_arg(args), _set_arg(args.set)).to_json_obj())
    return 0


def _cmd_graph_contract(args) -> int:
    _emit(contract(_graph_arg(args), _set_arg(args.set)).to_json_obj())
    return 0


def _cmd_graph_cocontract(args) -> int:
    _emit(co_contract(_graph_arg(args), _set_arg(args.set)).to_json_obj())
    return 0


def _cmd_graph_chain(args) -> int:
    g = _graph_arg(args)
    steps = cocontraction_chain(g, _set_arg(args.set))
    final = steps[-1].graph if steps else g
    _emit(
        {
            "steps": [
                {"pair": sorted(step.pair), "graph": step.graph.to_json_obj()}
                for step in steps
            ],
            "final": final.to_json_obj(),
        }
    )
    return 0


def _cmd_graph_iso(args) -> int:
    g1 = _graph_arg(args)
    g2 = load_graph(_read_text(args.graph2))
    mapping = is_isomorphic(g1, g2)
    _emit({"isomorphism": mapping})
    return 0 if mapping is not None else 1


def _cmd_graph_recognize(args) -> int:
    g = _graph_arg(args)
    cycle = find_induced_cycle(g, args.min_len)
    _emit(
        {
            "chordal": is_chordal(g),
            "weakly_chordal": is_weakly_chordal(g),
            "induced_cycle": cycle,
        }
    )
    return 0


# --- family ---


def _cmd_family(args) -> int:
    kind = {"cocycle": "complement_cycle"}.get(args.kind, args.kind)
    _emit(make_family(kind, args.n).to_json_obj())
    return 0


# --- word ---


def _word_arg(args, g: Graph, attr: str = "word"):
    return parse_word(getattr(args, attr), g)


def _cmd_word_nf(args) -> int:
    g = _graph_arg(args)
    _emit({"normal_form": str(normal_form(_word_arg(args, g)))})
    return 0


def _cmd_word_eq(args) -> int:
    g = _graph_arg(args)
    result = equals(_word_arg(args, g), _word_arg(args, g, "word2"))
    _emit({"equal": result})
    return 0 if result else 1


def _cmd_word_support(args) -> int:
    g = _graph_arg(args)
    _emit({"support": g.sorted_set(support(_word_arg(args, g)))})
    return 0


def _cmd_word_parabolic(args) -> int:
    g = _graph_arg(args)
    result = in_parabolic(_word_arg(args, g), _set_arg(args.set))
    _emit({"in_parabolic": result})
    return 0 if result else 1


def _cmd_word_cyclic(args) -> int:
    g = _graph_arg(args)
    u, v = cyclic_reduce(_word_arg(args, g))
    _emit({"u": str(u), "v": str(v)})
    return 0


def _cmd_word_qpair(args) -> int:
    g = _graph_arg(args)
    witness = find_q_pair(_word_arg(args, g))
    if witness is None:
        _emit({"witness": None})
        return 1
    _emit(
        {
            "witness": {
                "i": witness.i,
                "j": witness.j,
                "vertex": witness.vertex,
                "intermediate": str(witness.intermediate),
            }
        }
    )
    return 0


# --- cw ---


def _cmd_cw_check(args) -> int:
    g = _graph_arg(args)
    result = is_contraction_word(_word_arg(args, g), _set_arg(args.set))
    _emit({"is_contraction_word": result})
    return 0 if result else 1


def _cmd_cw_default(args) -> int:
    g = _graph_arg(args)
    _emit({"word": str(default_contraction_word(g, _set_arg(args.set)))})
    return 0


def _cmd_cw_element(args) -> int:
    g = _graph_arg(args)
    result = is_contraction_element(_word_arg(args, g), _set_arg(args.set))
    _emit({"is_contraction_element": result})
    return 0 if result else 1


# --- hom ---


def _load_hom(args, need_well_defined: bool = True) -> Homomorphism:
    obj = json.loads(_read_text(args.spec))
    if args.unchecked_word:
        print("warning: skipping contraction-word validation", file=sys.stderr)
    if "images" in obj:
        hom = Homomorphism.from_json_obj(obj)
        if not args.unchecked_word:
            _validate_loaded_images(hom)
        if need_well_defined and not check_well_defined(hom):
            raise ValueError("homomorphism is not well defined")
        return hom
    spec = CoContractionSpec.from_json_obj(obj)
    return build_hom(spec, check_words=not args.unchecked_word)


def _validate_loaded_images(hom: Homomorphism) -> None:
    from .transform import merged_members

    for v in hom.source.vertices:
        members = merged_members(v)
        if members is None or hom.target.has_vertex(v):
            continue
        if not is_contraction_word(hom.images[v], members):
            raise ValueError(f"image of {v!r} is not a contraction word of its members")


def _cmd_hom_build(args) -> int:
    obj = json.loads(_read_text(args.spec))
    if "images" in obj:
        raise ValueError("hom build expects a co-contraction spec, not a homomorphism")
    if args.unchecked_word:
        print("warning: skipping contraction-word validation", file=sys.stderr)
    hom = build_hom(CoContractionSpec.from_json_obj(obj), check_words=not args.unchecked_word)
    _emit(hom.to_json_obj())
    return 0


def _cmd_hom_apply(args) -> int:
    hom = _load_hom(args)
    w = parse_word(args.word, hom.source)
    _emit({"image": str(apply_hom(hom, w))})
    return 0


def _cmd_hom_check(args) -> int:
    hom = _load_hom(args, need_well_defined=False)
    result = check_well_defined(hom)
    _emit({"well_defined": result})
    return 0 if result else 1


def _cmd_hom_sample(args) -> int:
    hom = _load_hom(args)
    report = sample_injectivity(hom, args.trials, args.max_len, args.seed)
    _emit(
        {
            "trials": report.trials,
            "max_len": report.max_len,
            "seed": report.seed,
            "failures": [str(w) for w in report.failures],
        }
    )
    return 0 if report.ok else 1


# --- dvk ---


def _cmd_dvk_pair(args) -> int:
    g = _graph_arg(args)
    pairing = find_well_pairing(_word_arg(args, g))
    if pairing is None:
        _emit({"pairs": None})
        return 1
    _emit({"pairs": [list(pq) for pq in pairing.pairs]})
    return 0


def _cmd_dvk_svg(args) -> int:
    g = _graph_arg(args)
    w = _word_arg(args, g)
    pairing = find_well_pairing(w)
    if pairing is None:
        print("error: word is not trivial, no pairing exists", file=sys.stderr)
        return 1
    svg = render_svg(pairing)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


# --- parser ---


def _add_graph_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", default="-", help="graph file (JSON or DOT subset), - for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagco",
        description="Graph co-contraction, partially commutative words, and the maps between them.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    graph = top.add_parser("graph", help="graph operations").add_subparsers(
        dest="subcommand", required=True
    )
    for name, func, with_set in (
        ("complement", _cmd_graph_complement, False),
        ("induce", _cmd_graph_induce, True),
        ("contract", _cmd_graph_contract, True),
        ("cocontract", _cmd_graph_cocontract, True),
        ("chain", _cmd_graph_chain, True),
    ):
        sp = graph.add_parser(name)
        _add_graph_flag(sp)
        if with_set:
            sp.add_argument("--set", required=True, help="comma-separated vertex names")
        sp.set_defaults(func=func)
    sp = graph.add_parser("iso")
    _add_graph_flag(sp)
    sp.add_argument("--graph2", required=True, help="second graph file, - for stdin")
    sp.set_defaults(func=_cmd_graph_iso)
    sp = graph.add_parser("recognize")
    _add_graph_flag(sp)
    sp.add_argument("--min-len", type=int, default=5)
    sp.set_defaults(func=_cmd_graph_recognize)

    family = top.add_parser("family", help="named graph families")
    family.add_argument("kind", choices=("cycle", "cocycle") + FAMILY_KINDS)
    family.add_argument("n", type=int)
    family.set_defaults(func=_cmd_family)

    word = top.add_parser("word", help="word calculus").add_subparsers(
        dest="subcommand", required=True
    )
    for name, func, extra in (
        ("nf", _cmd_word_nf, ()),
        ("eq", _cmd_word_eq, ("word2",)),
        ("support", _cmd_word_support, ()),
        ("parabolic", _cmd_word_parabolic, ("set",)),
        ("cyclic", _cmd_word_cyclic, ()),
        ("qpair", _cmd_word_qpair, ()),
    ):
        sp = word.add_parser(name)
        _add_graph_flag(sp)
        sp.add_argument("--word", required=True, help="letters like 'a b^-1 c'")
        for flag in extra:
            sp.add_argument(f"--{flag}", required=True)
        sp.set_defaults(func=func)

    cw = top.add_parser("cw", help="contraction words").add_subparsers(
        dest="subcommand", required=True
    )
    for name, func, with_word in (
        ("check", _cmd_cw_check, True),
        ("default", _cmd_cw_default, False),
        ("element", _cmd_cw_element, True),
    ):
        sp = cw.add_parser(name)
        _add_graph_flag(sp)
        sp.add_argument("--set", required=True)
        if with_word:
            sp.add_argument("--word", required=True)
        sp.set_defaults(func=func)

    hom = top.add_parser("hom", help="induced homomorphisms").add_subparsers(
        dest="subcommand", required=True
    )
    for name, func in (
        ("build", _cmd_hom_build),
        ("apply", _cmd_hom_apply),
        ("check", _cmd_hom_check),
        ("sample", _cmd_hom_sample),
    ):
        sp = hom.add_parser(name)
        sp.add_argument("--spec", required=True, help="spec or homomorphism JSON file, - for stdin")
        sp.add_argument(
            "--unchecked-word",
            action="store_true",
            help="accept words that are not contraction words (escape hatch)",
        )
        if name == "apply":
            sp.add_argument("--word", required=True)
        if name == "sample":
            sp.add_argument("--trials", type=int, default=200)
            sp.add_argument("--max-len", type=int, default=10)
            sp.add_argument("--seed", type=int, default=0)
        sp.set_defaults(func=func)

    dvk = top.add_parser("dvk", help="triviality pairings and their pictures").add_subparsers(
        dest="subcommand", required=True
    )
    sp = dvk.add_parser("pair")
    _add_graph_flag(sp)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=_cmd_dvk_pair)
    sp = dvk.add_parser("svg")
    _add_graph_flag(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_dvk_svg)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
