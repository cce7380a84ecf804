"""Gröbner bases for shuffle operads over the rationals."""
from .buchberger import (GroebnerResult, Presentation, buchberger, dimension, is_quadratic,
                         normal_form, normal_monomials, s_polynomial, s_polynomials)
from .division import (Embedding, all_embeddings, divides, embedding_at, first_embedding,
                       iter_embeddings, reconstruct, substitute)
from .orderings import DEFAULT_ORDERING, ORDERINGS, OrderingSpec, compare, ordering, path_key
from .permutations import (count_shuffle_permutations, is_shuffle_permutation, shuffle_permutations)
from .polynomials import OperadPolynomial, format_element
from .scm import SmallCommonMultiple, TwoChainPoset, linear_extensions, small_common_multiples
from .symmetrize import ActionError, GeneratorAction, act, canonicalize, orbit_closure
from .text import ParseError, format_presentation, parse_element, parse_presentation, parse_tree
from .trees import (Generator, Hole, Leaf, MalformedTreeError, Tree, TreeError, Vertex, corolla,
                    divisor_monomial, enumerate_monomials, format_tree, graft, is_shuffle_monomial,
                    shuffle_compose)

__version__ = "0.1.0"

__all__ = [
    "buchberger",
    "GroebnerResult",
    "Presentation",
    "dimension",
    "is_quadratic",
    "normal_form",
    "normal_monomials",
    "s_polynomial",
    "s_polynomials",
    "Embedding",
    "all_embeddings",
    "divides",
    "embedding_at",
    "first_embedding",
    "iter_embeddings",
    "reconstruct",
    "substitute",
    "DEFAULT_ORDERING",
    "ORDERINGS",
    "OrderingSpec",
    "compare",
    "ordering",
    "path_key",
    "count_shuffle_permutations",
    "is_shuffle_permutation",
    "shuffle_permutations",
    "OperadPolynomial",
    "format_element",
    "SmallCommonMultiple",
    "TwoChainPoset",
    "linear_extensions",
    "small_common_multiples",
    "ActionError",
    "GeneratorAction",
    "act",
    "canonicalize",
    "orbit_closure",
    "ParseError",
    "format_presentation",
    "parse_element",
    "parse_presentation",
    "parse_tree",
    "Generator",
    "Hole",
    "Leaf",
    "MalformedTreeError",
    "Tree",
    "TreeError",
    "Vertex",
    "corolla",
    "divisor_monomial",
    "enumerate_monomials",
    "format_tree",
    "graft",
    "is_shuffle_monomial",
    "shuffle_compose",
]
