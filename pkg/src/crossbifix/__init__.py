"""Cross-bifix-free codeword sets built from colored Motzkin paths.

The package constructs the non-expandable cross-bifix-free sets CBFS(q, n),
counts them exactly, generates the classic zero-run baseline sets they are
compared against, and verifies every claimed property by independent brute
force at desk scale.
"""

from .baseline import ZeroRunAvoidanceTable, construct_baseline_set, f_count, s_max, s_star
from .cbfs import (
    CodeSet,
    construct_A,
    construct_B,
    construct_C,
    construct_cbfs,
    count_A,
    count_B,
    count_C,
    count_cbfs,
)
from .motzkin import (
    MotzkinCountTable,
    generate_elevated,
    generate_motzkin,
    has_ground_elevated_factor,
    motzkin_count,
)
from .oracle import (
    VerificationReport,
    brute_count_words_avoiding_zero_run,
    brute_motzkin_count,
    enumerate_bifix_free,
    verify_count_agreement,
    verify_cross_bifix_free_set,
    verify_non_expandable,
)
from .words import (
    CrossBifix,
    HeightProfile,
    Word,
    bifixes,
    cross_bifix,
    height_profile,
    is_bifix_free,
    is_elevated,
    is_motzkin_word,
)

__version__ = "0.1.0"

__all__ = [
    "CodeSet",
    "CrossBifix",
    "HeightProfile",
    "MotzkinCountTable",
    "VerificationReport",
    "Word",
    "ZeroRunAvoidanceTable",
    "bifixes",
    "brute_count_words_avoiding_zero_run",
    "brute_motzkin_count",
    "construct_A",
    "construct_B",
    "construct_C",
    "construct_baseline_set",
    "construct_cbfs",
    "count_A",
    "count_B",
    "count_C",
    "count_cbfs",
    "cross_bifix",
    "enumerate_bifix_free",
    "f_count",
    "generate_elevated",
    "generate_motzkin",
    "has_ground_elevated_factor",
    "height_profile",
    "is_bifix_free",
    "is_elevated",
    "is_motzkin_word",
    "motzkin_count",
    "s_max",
    "s_star",
    "verify_count_agreement",
    "verify_cross_bifix_free_set",
    "verify_non_expandable",
]
