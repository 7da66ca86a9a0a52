"""Nil-blob algebras: diagram calculus, presentation, JM elements and the alcove-path isomorphisms."""

from .algebra import NILBLOB, BlobRules, Element, ExtElement, NilBlobRules, gaussian_int, mul_blob, mul_extended, mul_nilblob
from .diagrams import BlobDiagram, enumerate_diagrams, from_pairs, make_diagram, render_ascii
from .jm import J_element, L_elements, Y_elements
from .presentation import (
    GeneratorWord,
    enumerate_normal,
    evaluate,
    factorize_diagram,
    generator_element,
    normal_form,
    parse_word,
)
from .alcove import (
    BlobParams,
    PathTableau,
    classify,
    codify,
    enumerate_std,
    generator_word,
    generator_word_regular,
    map_to_nilblob,
    path_intervals,
    reduced_expression,
    region_factorize,
    residue_sequence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
