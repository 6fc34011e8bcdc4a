"""Default bounds. Echoed into every report so runs are auditable."""

DEFAULT_Q_CAP = 2 ** 20          # max |Q(P)| materialised
ORDER_MAX_MEMBERS = 2 ** 13      # max |Q| whose reverse-inclusion order is built
DEFINITIONAL_SCOTT_MAX_N = 16    # directed-subset test in scott_opens
SUBSET_SCAN_MAX_N = 16           # saturation screen over all subsets
COVER_CHECK_MAX_OPENS = 16       # cover-based compactness path
WAY_BELOW_DEFINITIONAL_MAX_N = 12
FIN_MAX_N = 16                   # fin(x) enumerates subsets
FILTERED_DEFINITIONAL_MAX_Q = 15 # |Q| for filtered-family enumeration (n <= 4)
QQ_MAX_N = 4                     # default cap for Q(Q(P))-dependent checks
KL_MAX_CANDIDATES = 20

ELEMENT_BOUND = 50
SUBFAMILY_BOUND = 4
NONPRINCIPAL_BOUND = 20
SCAN_N_MAX = 6
ENUMERATION_MAX_N = 7


def as_dict():
    return {k.lower(): v for k, v in globals().items() if k.isupper()}
