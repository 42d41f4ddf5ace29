__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"


#  Size caps
MAX_GROUND = 16
MAX_ENTRIES = 12
MAX_CORPUS_SIZE = 9

#  Outcome constants of the excluded-minor theorems
SIZE_SLACK = 16
RANK_SLACK = 8

#  Partial fields
PRIME_FIELDS = (2, 3, 5, 7, 11, 13)
FIELD_GF4 = "GF(4)"
FIELD_REGULAR = "Regular"
FIELD_DYADIC = "Dyadic"
FIELD_NEAR_REGULAR = "NearRegular"
FIELD_TWO_REGULAR = "TwoRegular"

FIELD_ALIASES = {
    "gf4": FIELD_GF4,
    "gf(4)": FIELD_GF4,
    "regular": FIELD_REGULAR,
    "dyadic": FIELD_DYADIC,
    "nearregular": FIELD_NEAR_REGULAR,
    "near-regular": FIELD_NEAR_REGULAR,
    "tworegular": FIELD_TWO_REGULAR,
    "2-regular": FIELD_TWO_REGULAR,
    "2regular": FIELD_TWO_REGULAR,
}

#  Separation kinds
DELETION = "delete"
CONTRACTION = "contract"

SPOKE = "spoke"
RIM = "rim"

FAN_TYPE_I = "I"
FAN_TYPE_II = "II"

#  Incrimination reasons
NOT_IN_P = "NotInP"
ZERO_BUT_BASIS = "ZeroButBasis"
NONZERO_BUT_DEPENDENT = "NonzeroButDependent"

REPRESENTS = "Represents"
INCRIMINATED = "Incriminated"

#  Environment
CACHE_DIR_ENV = "MFRAG_CACHE_DIR"
DEFAULT_CACHE_DIR = "~/.cache/mfrag"
