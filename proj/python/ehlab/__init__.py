"""Edge-coloured cliques, forbidden colour patterns and homogeneous sets.

Vertices are 0-based, colours 1-based, matching the C++ library.
"""

from ._ehlab import (
    CapExceeded,
    Colouring,
    ParseError,
    __version__,
    bundled_pattern,
    bundled_patterns,
    canonical_form,
    count_copies,
    exact_h,
    find_copy,
    find_palette_copy,
    gallai_product_c4,
    h_from_s_cliques,
    homogeneous_number,
    is_free,
    k4_free_host_colouring,
    lex_product,
    max_independent_set,
    minimize_h,
    parse_ehc,
    random_colouring,
    recolour_extra,
    run_cli,
    s_clique,
    to_ehc,
    verify_monotone,
)

__all__ = [
    "CapExceeded",
    "Colouring",
    "ParseError",
    "__version__",
    "bundled_pattern",
    "bundled_patterns",
    "canonical_form",
    "count_copies",
    "exact_h",
    "find_copy",
    "find_palette_copy",
    "gallai_product_c4",
    "h_from_s_cliques",
    "homogeneous_number",
    "is_free",
    "k4_free_host_colouring",
    "lex_product",
    "max_independent_set",
    "minimize_h",
    "parse_ehc",
    "random_colouring",
    "recolour_extra",
    "run_cli",
    "s_clique",
    "to_ehc",
    "verify_monotone",
]
