"""Command-line interface.

Exit codes: 0 when a question was decided (either way), 2 on bad input,
3 when an input exceeds a size cap (override with ``LETTERKIT_MAX_N``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .decoder import Decoder, DecoderFormatError, format_decoder, parse_decoder
from .graph import (
    Graph,
    GraphFormatError,
    SizeCapError,
    canonical_form,
    format_edge_list,
    mask_of,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
    to_graph6,
)
from .obstructions import check_critical_structure, find_obstructions, graphs_up_to, obstruction_report
from .rankwidth import cutrank, linear_rankwidth_exact
from .realisation import (
    Realisation,
    WordFormatError,
    decode_word,
    format_word,
    parse_word,
    verify_realisation,
)
from .solver import Certificate, deletion_values, lettericity_brute, lettericity_dp
from .words import bound_f, factor_stats, longest_sparse_factor


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def parse_graph_text(text: str) -> Graph:
    """Edge list if the first meaningful line is an integer, graph6 otherwise."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return parse_edge_list(text) if line.lstrip("-").isdigit() else parse_graph6(line)
    raise GraphFormatError("empty graph input")


def load_graph(path: str) -> Graph:
    return parse_graph_text(_read(path))


def _int_list(text: str) -> list[int]:
    text = text.replace(",", " ").split()
    try:
        return [int(x) for x in text]
    except ValueError:
        raise InputError(f"expected a list of integers, got {text!r}") from None


# certificates

def certificate_lines(cert: Certificate, verified: bool) -> list[str]:
    lines = [f"lettericity {cert.k}"]
    if cert.decoder is not None:
        lines.append("decoder")
        lines.extend(format_decoder(cert.decoder).splitlines())
        lines.append(f"word {format_word(cert.word, cert.k)}")
        lines.append("sequence " + " ".join(map(str, cert.realisation.sequence)))
    lines.append(f"verified {'true' if verified else 'false'}")
    return lines


def parse_certificate(text: str) -> tuple[Decoder, tuple[int, ...], Optional[list[int]]]:
    """Decoder, word and (if present) vertex sequence of a printed certificate."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines and lines[0].startswith("{"):
        data = json.loads(text)
        if data.get("decoder") is None:
            raise InputError("certificate carries no decoder")
        dec = data["decoder"]
        decoder = Decoder.from_arcs(dec["k"], [tuple(a) for a in dec["arcs"]])
        return decoder, parse_word(data["word"]), data.get("sequence")
    try:
        start = lines.index("decoder")
    except ValueError:
        raise InputError("certificate has no decoder block") from None
    end = next((i for i in range(start + 1, len(lines)) if lines[i].startswith("word ")), None)
    if end is None:
        raise InputError("certificate has no word line")
    decoder = parse_decoder("\n".join(lines[start + 1:end]))
    word = parse_word(lines[end].split(None, 1)[1] if " " in lines[end] else "")
    sequence = None
    for ln in lines[end + 1:]:
        if ln.startswith("sequence"):
            sequence = _int_list(ln[len("sequence"):])
    return decoder, word, sequence


def verify_certificate(g: Graph, decoder: Decoder, word, sequence) -> str:
    if len(word) != g.n:
        return f"violation length {len(word)} != {g.n}"
    if sequence is None:
        # no embedding given: compare up to isomorphism
        same = canonical_form(decode_word(decoder, word)) == canonical_form(g)
        return "ok" if same else "violation not-isomorphic"
    if sorted(sequence) != list(range(g.n)):
        raise InputError("sequence must list every vertex exactly once")
    letters = [0] * g.n
    for i, v in enumerate(sequence):
        letters[v] = word[i]
    if any(x >= decoder.k for x in word):
        raise InputError("word uses a letter outside the decoder")
    bad = verify_realisation(g, decoder, Realisation.from_sequence(letters, sequence))
    return "ok" if bad is None else f"violation {bad[0]} {bad[1]}"


# subcommands

def cmd_decode(args) -> int:
    decoder = parse_decoder(_read(args.decoder))
    word = parse_word(args.word, args.word_format)
    sys.stdout.write(format_edge_list(decode_word(decoder, word)))
    return 0


def _order_arg(text: str):
    if text in ("natural", "lrw"):
        return text
    return _int_list(text)


def cmd_lettericity(args) -> int:
    g = load_graph(args.graph)
    if args.method == "dp":
        cert = lettericity_dp(g, _order_arg(args.order), args.max_k, args.jobs)
    else:
        cert = lettericity_brute(g, args.max_k, args.jobs)
    if cert is None:
        if args.json:
            print(json.dumps({"exceeds": args.max_k}))
        else:
            print(f"exceeds {args.max_k}")
        return 0
    verified = cert.decoder is None or verify_realisation(g, cert.decoder, cert.realisation) is None
    if args.json:
        out = {"lettericity": cert.k, "verified": verified, "decoder": None}
        if cert.decoder is not None:
            out.update(
                decoder={"k": cert.decoder.k, "arcs": [list(a) for a in cert.decoder.arc_list()]},
                word=format_word(cert.word, cert.k),
                sequence=list(cert.realisation.sequence),
            )
        print(json.dumps(out, sort_keys=True))
    else:
        print("\n".join(certificate_lines(cert, verified)))
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    if args.certificate:
        decoder, word, sequence = parse_certificate(_read(args.certificate))
    else:
        if not (args.decoder and args.word is not None):
            raise InputError("give --certificate, or --decoder and --word")
        decoder = parse_decoder(_read(args.decoder))
        word = parse_word(args.word, args.word_format)
        sequence = _int_list(args.sequence) if args.sequence else None
    print(verify_certificate(g, decoder, word, sequence))
    return 0


def cmd_lrw(args) -> int:
    g = load_graph(args.graph)
    value, order = linear_rankwidth_exact(g)
    print(f"lrw {value}")
    print("order " + " ".join(map(str, order)))
    return 0


def cmd_cutrank(args) -> int:
    g = load_graph(args.graph)
    subset = _int_list(args.set)
    if any(not 0 <= v < g.n for v in subset):
        raise InputError("vertex out of range in --set")
    print(f"cutrank {cutrank(g, mask_of(subset))}")
    return 0


def cmd_obstructions(args) -> int:
    if args.g6:
        source = list(read_graph6_lines(_read(args.g6).splitlines()))
    else:
        source = list(graphs_up_to(args.max_n))
    if args.all:
        for g in source:
            report = obstruction_report(g, args.k, args.method)
            _print_report(args, g, report)
        return 0
    for report in find_obstructions(args.k, source, args.method, exact=args.json):
        _print_report(args, report.graph, report)
    return 0


def _print_report(args, g: Graph, report) -> None:
    if report is not None:
        print(report.json_line() if args.json else report.line())
    elif args.json:
        print(json.dumps({"g6": to_graph6(g), "k": args.k, "n": g.n, "verdict": False}, sort_keys=True))
    else:
        print(f"g6 {to_graph6(g)} k {args.k} verdict false")


def cmd_critical(args) -> int:
    g = load_graph(args.graph)
    cert = lettericity_brute(g) if args.method == "brute" else lettericity_dp(g)
    deletions = deletion_values(g, args.method)
    critical = all(v < cert.k for v in deletions)
    print(f"lettericity {cert.k}")
    print("deletions " + " ".join(map(str, deletions)))
    print(f"critical {'true' if critical else 'false'}")
    if critical and cert.decoder is not None:
        problems = check_critical_structure(g, cert.k, cert.decoder, cert.realisation,
                                           check_precondition=False)
        print(f"structure-violations {len(problems)}")
        for p in problems:
            print(f"violation {p}")
    return 0


def cmd_bound(args) -> int:
    if args.k < 1:
        raise InputError("k must be positive")
    for t in range(1, args.k + 1):
        print(f"{t} {bound_f(args.k, t)}")
    return 0


def cmd_stats(args) -> int:
    word = parse_word(args.word, args.word_format)
    stats = factor_stats(word)
    print(f"length {len(word)}")
    for t, length in enumerate(stats.longest, 1):
        _, start, end = longest_sparse_factor(word, t)
        print(f"longest {t} {length} {start} {end}")
    k = max(word, default=-1) + 1
    for (a, b), value in sorted(stats.inter.items()):
        print(f"inter {format_word([a], k)} {format_word([b], k)} {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="letterkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def word_format(p):
        p.add_argument("--word-format", choices=["auto", "letters", "ids"], default="auto")

    p = sub.add_parser("decode", help="decode a word over a decoder into an edge list")
    p.add_argument("decoder", help="decoder file ('-' for stdin)")
    p.add_argument("word")
    word_format(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("lettericity", help="exact lettericity with a certificate")
    p.add_argument("graph", help="edge-list or graph6 file ('-' for stdin)")
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--method", choices=["brute", "dp"], default="brute")
    p.add_argument("--order", default="natural", help="natural, lrw, or a vertex list")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lettericity)

    p = sub.add_parser("verify", help="check a letter realisation")
    p.add_argument("graph")
    p.add_argument("--certificate", help="output of the lettericity command ('-' for stdin)")
    p.add_argument("--decoder")
    p.add_argument("--word")
    p.add_argument("--sequence", help="vertex at each word position")
    word_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lrw", help="exact linear rank-width")
    p.add_argument("graph")
    p.set_defaults(func=cmd_lrw)

    p = sub.add_parser("cutrank", help="GF(2) cut-rank of a vertex set")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="vertex list, e.g. 0,1")
    p.set_defaults(func=cmd_cutrank)

    p = sub.add_parser("obstructions", help="obstructions for k-lettericity")
    p.add_argument("k", type=int)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--max-n", type=int)
    src.add_argument("--g6", help="graph6 stream ('-' for stdin)")
    p.add_argument("--method", choices=["brute", "dp"], default="brute")
    p.add_argument("--all", action="store_true", help="print a verdict for every input graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_obstructions)

    p = sub.add_parser("critical", help="is every one-vertex deletion strictly easier")
    p.add_argument("graph")
    p.add_argument("--method", choices=["brute", "dp"], default="brute")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("bound", help="factor-length bounds for critical k-letter graphs")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("stats", help="factor and interlacing statistics of a word")
    p.add_argument("word")
    word_format(p)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, GraphFormatError, DecoderFormatError, WordFormatError,
            ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
