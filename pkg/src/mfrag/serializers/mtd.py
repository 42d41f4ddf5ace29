"""The ``.mtd`` format for matroids given by bases or non-bases.

::

    ground 1 2 3 4
    rank 2
    nonbases 3,4

Either a ``bases`` or a ``nonbases`` line follows; each whitespace-separated
token is one set with comma-joined labels, and ``-`` is the empty set.
``nonbases`` lists the non-bases among the sets of size ``rank``. An optional
leading ``name`` line names the matroid.
"""

import logging
from itertools import combinations

from lark import Transformer

from mfrag.matroid import Matroid, MatroidException, popcount, set_key
from mfrag.serializers import LineGrammar, Serializer, token_error

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

logger = logging.getLogger(__name__)

EMPTY_SET = "-"


def _format_set(matroid, mask):
    if not mask:
        return EMPTY_SET
    return ",".join(matroid.ordered(mask))


MTD_GRAMMAR = r"""
start: _NL? name_line? ground_line rank_line family_line

name_line: "name" TEXT _NL
ground_line: "ground" LABEL+ _NL
rank_line: "rank" VALUE _NL
family_line: FAMILY labelset* _NL

labelset: LABEL ("," LABEL)*
        | EMPTY

FAMILY: "bases" | "nonbases"
EMPTY: "-"
TEXT: /[^\s#]([^\n#]*[^\s#])?/
LABEL: /[^\s#,]+/
VALUE: /[^\s#]+/
"""


class MTDTransformer(Transformer):
    def name_line(self, children):
        return str(children[0])

    def ground_line(self, children):
        return children

    def rank_line(self, children):
        return children[0]

    def labelset(self, children):
        # the first token locates the set; '-' contributes no label
        return children[0], [t for t in children if t.type == "LABEL"]

    def family_line(self, children):
        return str(children[0]), children[1:]

    def start(self, children):
        name = children.pop(0) if len(children) == 4 else None
        ground, rank, (keyword, sets) = children
        return name, ground, rank, keyword, sets


MTD = LineGrammar(
    MTD_GRAMMAR,
    MTDTransformer(),
    {
        "FAMILY": "'bases' or 'nonbases'",
        "EMPTY": "'-'",
        "TEXT": "a name",
        "LABEL": "a label",
        "VALUE": "the rank",
    },
)


class MTDSerializer(Serializer):
    """Serializer for :py:class:`~mfrag.matroid.Matroid` in the ``.mtd`` format.

    The shorter of the basis and non-basis lists is written.
    """

    def serialize(self, stream, **kwargs):
        m = self.obj
        r = m.rank()
        bases = m.basis_masks
        candidates = [
            sum(1 << i for i in combo) for combo in combinations(range(m.size), r)
        ]
        nonbases = [c for c in candidates if c not in bases]
        lines = []
        if m.name:
            lines.append("name %s" % m.name)
        lines.append(" ".join(["ground"] + list(m.ground)))
        lines.append("rank %d" % r)
        if len(nonbases) < len(bases):
            keyword, masks = "nonbases", nonbases
        else:
            keyword, masks = "bases", bases
        tokens = [_format_set(m, mask) for mask in sorted(masks, key=set_key)]
        lines.append(" ".join([keyword] + tokens))
        self.write(stream, "\n".join(lines) + "\n")

    def deserialize(self, stream, validate=True, **kwargs):
        """
        Reads a matroid.

        :param validate: Check the basis exchange axiom.
        :raises ParseError: with line and column.
        :raises ExchangeAxiomViolation: when validating.
        """
        (name, ground, rank, keyword, sets), _ = MTD.parse(stream)
        index = {}
        for token in ground:
            if token in index:
                raise token_error("duplicate label %s" % token, token)
            index[str(token)] = len(index)
        if not rank.isdigit() or int(rank) > len(ground):
            raise token_error("invalid rank %s" % rank, rank)
        r = int(rank)

        listed = set()
        for first, labels in sets:
            mask = 0
            for label in labels:
                if label not in index:
                    raise token_error("unknown label %s" % label, label)
                mask |= 1 << index[label]
            if popcount(mask) != r:
                raise token_error("set does not have %d elements" % r, first)
            listed.add(mask)
        if keyword == "bases":
            bases = listed
        else:
            bases = {
                sum(1 << i for i in combo)
                for combo in combinations(range(len(ground)), r)
            } - listed
        try:
            matroid = Matroid(list(index), bases, name=name, validate=validate)
        except MatroidException:
            logger.debug("Invalid basis family: %s", keyword)
            raise
        logger.debug("Read %r", matroid)
        return matroid
