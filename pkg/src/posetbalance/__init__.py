"""Exact linear-extension counts and balance constants of finite posets."""
from .extensions import (BalanceReport, ExtensionStats, balance_constant, count_extensions,
                         enumerate_extensions, format_ratio, is_alpha_balanced, pair_matrix, prob_before)
from .poset import (Poset, PosetError, boolean_lattice, chain_product, dual, from_covers, from_json,
                    from_permutation, ideal_lattice, partition_lattice, subspace_lattice, to_dot, width)
from .search import CanonicalPoset, canonical_form, conjecture_scan, enumerate_posets
from .structure import (CertificateReport, Morphism, almost_twin_pairs, anti_automorphisms, automorphisms,
                        certificates, inversion_pattern_pairs, is_almost_twin, twin_pairs)
from .tableaux import (Shape, find_almost_twin_in_shape, hook_lengths, lemma_ratio, parse_shape,
                       rectangle_balance_pair, shape_to_poset, syt_count)

__version__ = "0.1.0"
