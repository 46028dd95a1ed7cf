"""Finite bounded lattices with a complementation operation.

Core objects: FiniteLattice (order plus materialized join/meet tables),
CLattice (lattice plus a unary table), terms and identities over the
signature, congruences, standard constructions, free algebras in generated
varieties, and exhaustive verification campaigns over all small lattices.
"""

from .backend import BACKEND
from .catalog import CatalogEntry, catalog
from .clattice import (CLattice, complements_of, enumerate_complementations,
                       is_antitone, is_boolean, is_complementation,
                       is_involution, is_ortholattice)
from .congruences import (Partition, all_congruences, congruence_lattice,
                          is_congruence, is_subdirectly_irreducible, monolith,
                          principal_congruence)
from .constructions import (direct_product, find_embedding,
                            horizontal_sum, hsum_complementations,
                            subalgebra_generated)
from .enumeration import (enumerate_complemented, enumerate_lattices,
                          lattice_counts, oracle_lattice_count)
from .errors import ComplatError
from .freealg import (FreeAlgebraResult, birkhoff_bound, free_algebra,
                      minimal_separating_set, resume)
from .lattice import (FiniteLattice, are_isomorphic, build_from_covers,
                      from_leq, is_distributive, is_modular, validate)
from .terms import (Identity, Witness, builtin, builtin_names, check_identity,
                    eval_term, holds, is_associative, parse_identity,
                    parse_term, sd_tables)
from .verify import CampaignReport, THEOREM_IDS, verify

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CampaignReport", "CatalogEntry", "CLattice", "ComplatError",
    "FiniteLattice", "FreeAlgebraResult", "Identity", "Partition",
    "THEOREM_IDS", "Witness", "all_congruences", "are_isomorphic",
    "birkhoff_bound", "build_from_covers", "builtin", "builtin_names",
    "catalog", "check_identity", "complements_of", "congruence_lattice",
    "direct_product", "enumerate_complementations", "enumerate_complemented",
    "enumerate_lattices", "eval_term", "find_embedding", "free_algebra",
    "from_leq", "holds", "horizontal_sum", "hsum_complementations",
    "is_antitone", "is_associative", "is_boolean", "is_complementation",
    "is_congruence", "is_distributive", "is_involution", "is_modular",
    "is_ortholattice", "is_subdirectly_irreducible", "lattice_counts",
    "minimal_separating_set", "monolith", "oracle_lattice_count",
    "parse_identity", "parse_term", "principal_congruence", "resume",
    "sd_tables", "subalgebra_generated", "validate", "verify",
]
