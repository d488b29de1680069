"""Lettericity of graphs: decoding, recognition, bounds and obstructions."""

from .decoder import Decoder, enumerate_decoders, parse_decoder, remove_twin_letters
from .graph import Graph, canonical_form, complement, induced_subgraph, parse_edge_list, parse_graph6, to_graph6
from .rankwidth import cutrank, linear_rankwidth_exact
from .realisation import (
    Realisation,
    check_letter_partition,
    decode_word,
    realise_from_partition,
    verify_realisation,
    word_of,
)
from .solver import Certificate, dp_recognize, is_critical, lettericity, lettericity_brute, lettericity_dp

__all__ = [
    "Certificate",
    "Decoder",
    "Graph",
    "Realisation",
    "canonical_form",
    "check_letter_partition",
    "complement",
    "cutrank",
    "decode_word",
    "dp_recognize",
    "enumerate_decoders",
    "induced_subgraph",
    "is_critical",
    "lettericity",
    "lettericity_brute",
    "lettericity_dp",
    "linear_rankwidth_exact",
    "parse_decoder",
    "parse_edge_list",
    "parse_graph6",
    "realise_from_partition",
    "remove_twin_letters",
    "to_graph6",
    "verify_realisation",
    "word_of",
]
