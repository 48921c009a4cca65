"""Published reference numbers, stored statically with per-cell tolerances.

Nothing here is recomputed: the reproduce commands put these next to the
estimator output. ``known_discrepancy`` cells are shown but never gate
the exit status.
"""
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Cell:
    key: str
    value: float
    tolerance: float
    citation: str
    known_discrepancy: Optional[str] = None


# Kyber768: lattice columns are external tool output and only displayed.
KYBER768_LATTICE = {
    "BKW": (239, "2^226 samples"),
    "USVP": (205, "768 samples"),
    "BDD": (201, "768 samples"),
    "BDD Hybrid": (201, "768 samples"),
    "BDD MiTM Hybrid": (357, "768 samples"),
    "Dual": (214, "768 samples"),
    "Dual Hybrid": (206, "768 samples"),
}

KYBER768 = [
    Cell("macaulay_bound", 3077, 0, "Kyber768 table, solving degree row"),
    Cell("proven_bits@768", 5554, 10, "Kyber768 table, proven estimate, 768 samples"),
    Cell("proven_bits@768^4", 5581, 2, "Kyber768 table, proven estimate, 768^4 samples"),
    Cell("d_reg@768^4", 7, 0, "Kyber768 table, lowest achievable degree of regularity, 768^4 samples"),
    Cell("optimistic_bits@768^4", 419, 2, "Kyber768 table, optimistic estimate, 768^4 samples"),
    Cell("lowest_bits@768^4", 203, 2, "Kyber768 table, lowest achievable estimate, 768^4 samples"),
    Cell("d_reg@768", 232, 0, "Kyber768 table, lowest achievable degree of regularity, 768 samples",
         "the stated sample inequality gives 279 at m = 768; 232 follows at m = 1536"),
    Cell("optimistic_bits@768", 4717, 2, "Kyber768 table, optimistic estimate, 768 samples",
         "depends on the d_reg = 232 cell"),
    Cell("lowest_bits@768", 1588, 2, "Kyber768 table, lowest achievable estimate, 768 samples",
         "depends on the d_reg = 232 cell"),
]

# (hints, omega) -> per-variant (d, optimistic, lowest)
HINTS_TABLE = {
    (0, 3): {"small_secret_small_error": (57, 1731, 712), "binary_secret": (38, 1389, 547), "binary_error": (3, 291, 131)},
    (50, 3): {"small_secret_small_error": (45, 1394, 580), "binary_secret": (30, 1125, 336), "binary_error": (2, 229, 110)},
    (210, 3): {"small_secret_small_error": (8, 339, 165), "binary_secret": (5, 290, 127), "binary_error": (0, 88, 56)},
    (0, 2): {"small_secret_small_error": (57, 1391, 481), "binary_secret": (38, 1118, 370), "binary_error": (3, 237, 92)},
    (50, 2): {"small_secret_small_error": (45, 1122, 393), "binary_secret": (30, 906, 303), "binary_error": (2, 188, 78)},
    (150, 2): {"small_secret_small_error": (22, 596, 221), "binary_secret": (15, 499, 174), "binary_error": (1, 127, 59)},
    (190, 2): {"small_secret_small_error": (13, 387, 152), "binary_secret": (8, 320, 117), "binary_error": (0, 80, 45)},
}
HINTS_N = 256
HINTS_M = "n^1.5"
HINTS_D = {"small_secret_small_error": 5, "binary_secret": 5, "binary_error": 2}
HINTS_BIT_TOLERANCE = 3
HINTS_KNOWN_DISCREPANCIES = {
    (50, 3, "binary_secret", "lowest"): "the cell's neighbours all follow one formula that gives about 446 here",
}

BINARY_ERROR_EXAMPLES = [
    {"m": "2*n", "d": 14, "bits": 434, "conjecture_bits": 279},
    {"m": "n^1.5", "d": 3, "bits": 178, "conjecture_bits": 96},
]
BINARY_ERROR_N = 256
BINARY_ERROR_OMEGA = 3.0
BINARY_ERROR_TOLERANCE = 2
BINARY_ERROR_KNOWN = {
    ("n^1.5", "conjecture_bits"): "no single-matrix formula reproduces both 279 and 96; the same instance "
                                  "in the hints table gives 131 (omega = 3) and 92 (omega = 2)",
}
