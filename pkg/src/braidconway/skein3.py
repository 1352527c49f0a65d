"""Skein resolution trees for positive band words on three strands.

On three strands there are exactly three band generators: the Artin pair
acting on strands 1,2 and 2,3, and the band joining strands 1 and 3.
Written G12, G23, G13, they satisfy the rotation relation

    G23 G12 = G13 G23 = G12 G13      (the same braid element)

so the alphabet carries a 3-cycle G12 -> G23 -> G13 -> G12, called the
successor here.  A cyclically adjacent pair of distinct letters is
"ascending" when its second letter is the successor of its first, and
"descending" when the first is the successor of the second; the three
descending pairs are precisely the three spellings of the relation above.

The Conway polynomial of a closed positive band word resolves by a binary
tree.  At a doubled letter (a "square") w = P x x Q the skein relation
splits the closure into P Q, weight 1, and P x Q, weight z.  When no
square exists but some cyclic pair descends, the pair is respelled via
the relation so that its new second letter equals the letter that follows
the pair; that creates a square one step to the right, and the closure is
unchanged (for the wraparound pair, unchanged up to conjugation).  Words
on which neither move fires are the leaves:

* the empty word and single letters (closures with a split component),
* two distinct letters (an unknot),
* the ascending cycles, i.e. rotations of (G12 G23 G13)^k.

Each leaf has a known Conway polynomial, and the value of the whole word
is the sum over leaves of z^(number of weight-z edges on the path) times
the leaf value.  Every step is deterministic, leftmost-first, so the same
word always produces the same tree.
"""

from __future__ import annotations

import dataclasses
import enum
from functools import lru_cache

from .braid import BandWord, ParseError
from .polyring import Z, ZPoly, fibonacci_poly

__all__ = [
    "Letter",
    "LETTERS",
    "Word",
    "LeafKind",
    "Node",
    "Unresolvable",
    "NoSquare",
    "NotDescending",
    "parse_word",
    "format_word",
    "to_band_word",
    "classify_leaf",
    "find_square",
    "rewrite_descending",
    "split_square",
    "resolve",
    "leaf_conway",
    "conway_via_skein",
]


class Letter(enum.Enum):
    """A positive band generator on three strands."""

    G12 = "1"
    G23 = "2"
    G13 = "13"

    @property
    def successor(self) -> "Letter":
        return _SUCCESSOR[self]

    def __repr__(self) -> str:
        return f"Letter.{self.name}"


_SUCCESSOR = {
    Letter.G12: Letter.G23,
    Letter.G23: Letter.G13,
    Letter.G13: Letter.G12,
}

#: Enumeration order: G12 < G23 < G13 wherever words are ordered.
LETTERS = (Letter.G12, Letter.G23, Letter.G13)

Word = tuple[Letter, ...]


class Unresolvable(RuntimeError):
    """No leaf, no square, no descending pair: impossible for real words."""


class NoSquare(ValueError):
    """split_square was pointed at a position that is not a square."""


class NotDescending(ValueError):
    """rewrite_descending was pointed at a pair that does not descend."""


_BY_TOKEN = {letter.value: letter for letter in LETTERS}


def parse_word(text: str) -> Word:
    """Read a whitespace-separated word over the tokens 1, 2, 13."""
    out = []
    for token in text.split():
        if token not in _BY_TOKEN:
            raise ParseError(f"bad band letter {token!r}: expected 1, 2 or 13")
        out.append(_BY_TOKEN[token])
    return tuple(out)


def format_word(w: Word) -> str:
    return " ".join(letter.value for letter in w)


_BAND_TRIPLE = {Letter.G12: (1, 2, 1), Letter.G23: (2, 3, 1), Letter.G13: (1, 3, 1)}


def to_band_word(w: Word) -> BandWord:
    """The same word as a positive BandWord on three strands."""
    return BandWord(3, tuple(_BAND_TRIPLE[letter] for letter in w))


@dataclasses.dataclass(frozen=True)
class LeafKind:
    """What kind of leaf a word is; k is the power for triple cycles."""

    kind: str
    k: int = 0

    EMPTY = "empty"
    SINGLE_LETTER = "single-letter"
    TWO_DISTINCT = "two-distinct"
    TRIPLE_POWER = "triple-power"

    @classmethod
    def empty(cls) -> "LeafKind":
        return cls(cls.EMPTY)

    @classmethod
    def single_letter(cls) -> "LeafKind":
        return cls(cls.SINGLE_LETTER)

    @classmethod
    def two_distinct(cls) -> "LeafKind":
        return cls(cls.TWO_DISTINCT)

    @classmethod
    def triple_power(cls, k: int) -> "LeafKind":
        if k < 1:
            raise ValueError(f"triple power needs k >= 1, got {k}")
        return cls(cls.TRIPLE_POWER, k)


def classify_leaf(w: Word) -> LeafKind | None:
    """The leaf kind of w, or None when w still resolves further."""
    length = len(w)
    if length == 0:
        return LeafKind.empty()
    if length == 1:
        return LeafKind.single_letter()
    if length == 2:
        return LeafKind.two_distinct() if w[0] != w[1] else None
    if all(w[(t + 1) % length] is w[t].successor for t in range(length)):
        # A full ascending cycle: the successor has order 3, so the length
        # is a multiple of 3 and w is a rotation of (G12 G23 G13)^(L/3).
        return LeafKind.triple_power(length // 3)
    return None


def find_square(w: Word) -> int | None:
    """Smallest cyclic index t with w[t] == w[t+1], if any.

    Indices run 0 <= t < len(w), so the wraparound pair comes last.  Words
    shorter than two letters have no pair of positions to compare.
    """
    length = len(w)
    if length < 2:
        return None
    for t in range(length):
        if w[t] is w[(t + 1) % length]:
            return t
    return None


def rewrite_descending(w: Word, pos: int) -> Word:
    """Respell the descending cyclic pair at pos to end with the next letter.

    The pair (w[pos], w[pos+1]) is one spelling of the two-letter relation
    element; the spelling ending in x is (successor(x), x).  Choosing x to
    be the letter at pos+2 plants a square at (pos+1, pos+2).  Positions
    are cyclic and the word keeps its length.
    """
    length = len(w)
    if length < 3:
        raise NotDescending(f"need at least 3 letters, got {length}")
    a, b = w[pos], w[(pos + 1) % length]
    if b.successor is not a:
        raise NotDescending(
            f"pair at {pos} ({a.value} {b.value}) does not descend"
        )
    nxt = w[(pos + 2) % length]
    out = list(w)
    out[pos] = nxt.successor
    out[(pos + 1) % length] = nxt
    return tuple(out)


def split_square(w: Word, pos: int) -> tuple[Word, Word]:
    """Resolve the square at cyclic position pos.

    Returns (erased, reduced): the word with both square letters removed,
    and the word with one removed.  A wrapping square is first brought
    inside by rotating the word, which conjugates the closure and changes
    neither child's value.
    """
    length = len(w)
    if pos < 0 or pos >= length:
        raise NoSquare(f"position {pos} out of range for length {length}")
    if w[pos] is not w[(pos + 1) % length]:
        raise NoSquare(f"no square at position {pos}")
    if pos + 1 == length:
        w = w[pos:] + w[:pos]
        pos = 0
    head, tail = w[:pos], w[pos + 2 :]
    return head + tail, head + w[pos : pos + 1] + tail


def _leftmost_descending(w: Word) -> int | None:
    length = len(w)
    for t in range(length):
        if w[(t + 1) % length].successor is w[t]:
            return t
    return None


def _resolution_step(w: Word) -> tuple[Word, Word]:
    """Children of a non-leaf word under the deterministic strategy."""
    pos = find_square(w)
    if pos is None:
        dpos = _leftmost_descending(w)
        if dpos is None:
            raise Unresolvable(f"no move applies to {format_word(w)!r}")
        if dpos == len(w) - 1:
            # Wraparound pair: rotate it to the front first (conjugation).
            w = w[dpos:] + w[:dpos]
            dpos = 0
        w = rewrite_descending(w, dpos)
        pos = dpos + 1
    return split_square(w, pos)


@dataclasses.dataclass(frozen=True)
class Node:
    """A resolution-tree node.

    Leaves carry their LeafKind; inner nodes carry two children, the left
    reached by the weight-1 edge (square erased) and the right by the
    weight-z edge (square reduced to one letter).
    """

    word: Word
    leaf: LeafKind | None = None
    left: "Node | None" = None
    right: "Node | None" = None

    def value(self) -> ZPoly:
        """The skein value accumulated over this subtree."""
        if self.leaf is not None:
            return leaf_conway(self.leaf)
        assert self.left is not None and self.right is not None
        return self.left.value() + Z * self.right.value()

    def leaf_count(self) -> int:
        if self.leaf is not None:
            return 1
        assert self.left is not None and self.right is not None
        return self.left.leaf_count() + self.right.leaf_count()


def resolve(w: Word) -> Node:
    """The full resolution tree of a word.

    Recursion depth is bounded by the word length: each child is strictly
    shorter than its parent.
    """
    leaf = classify_leaf(w)
    if leaf is not None:
        return Node(word=w, leaf=leaf)
    erased, reduced = _resolution_step(w)
    return Node(word=w, left=resolve(erased), right=resolve(reduced))


def leaf_conway(leaf: LeafKind) -> ZPoly:
    """The Conway polynomial of a leaf's closure.

    Empty and single-letter closures have split components, value 0; two
    distinct letters close to the unknot, value 1.  The ascending cycle
    (G12 G23 G13)^k closes to a link whose value vanishes for even k and
    for odd k equals 2z * sum_{i<k} F_{6i+4-3k}.
    """
    if leaf.kind in (LeafKind.EMPTY, LeafKind.SINGLE_LETTER):
        return ZPoly()
    if leaf.kind == LeafKind.TWO_DISTINCT:
        return ZPoly((1,))
    if leaf.kind != LeafKind.TRIPLE_POWER:
        raise ValueError(f"unknown leaf kind {leaf.kind!r}")
    k = leaf.k
    if k % 2 == 0:
        return ZPoly()
    total = ZPoly()
    for i in range(k):
        total = total + fibonacci_poly(6 * i + 4 - 3 * k)
    return 2 * Z * total


def tree_to_json(root: Node) -> dict:
    """A JSON-ready document for a resolution tree.

    Nested nodes carry the word, the edge label that reached them ("1" or
    "z", absent on the root), and either a leaf record or two children.
    The top level repeats the input word and ends with the tree's total
    skein value as a coefficient list, so the footer is the last key.
    """

    def node_doc(node: Node, edge: str | None) -> dict:
        out: dict = {"word": format_word(node.word)}
        if edge is not None:
            out["edge"] = edge
        if node.leaf is not None:
            out["leaf"] = node.leaf.kind
            if node.leaf.kind == LeafKind.TRIPLE_POWER:
                out["k"] = node.leaf.k
            out["value"] = list(leaf_conway(node.leaf).coeffs)
        else:
            assert node.left is not None and node.right is not None
            out["children"] = [
                node_doc(node.left, "1"),
                node_doc(node.right, "z"),
            ]
        return out

    return {
        "word": format_word(root.word),
        "tree": node_doc(root, None),
        "value": list(root.value().coeffs),
    }


def tree_to_dot(root: Node) -> str:
    """The tree as a DOT digraph, nodes numbered in preorder.

    Leaves are boxes annotated with their kind and value; the graph label
    carries the total.
    """
    lines = ["digraph resolution {", "  node [fontname=monospace];"]
    counter = 0

    def label(word: Word) -> str:
        return format_word(word) if word else "(empty)"

    def walk(node: Node) -> str:
        nonlocal counter
        name = f"n{counter}"
        counter += 1
        if node.leaf is not None:
            value = leaf_conway(node.leaf).render()
            lines.append(
                f'  {name} [shape=box label="{label(node.word)}\\n'
                f'{node.leaf.kind}: {value}"];'
            )
        else:
            lines.append(f'  {name} [label="{label(node.word)}"];')
            assert node.left is not None and node.right is not None
            lines.append(f'  {name} -> {walk(node.left)} [label="1"];')
            lines.append(f'  {name} -> {walk(node.right)} [label="z"];')
        return name

    walk(root)
    lines.append(f'  label="conway: {root.value().render()}";')
    lines.append("}")
    return "\n".join(lines)


@lru_cache(maxsize=None)
def _skein_value(w: Word) -> ZPoly:
    leaf = classify_leaf(w)
    if leaf is not None:
        return leaf_conway(leaf)
    erased, reduced = _resolution_step(w)
    return _skein_value(erased) + Z * _skein_value(reduced)


def conway_via_skein(w: Word) -> ZPoly:
    """The Conway polynomial of the closure of w, by resolution.

    Subword values are cached, so sweeping many related words stays
    cheap; the result always equals resolve(w).value().
    """
    return _skein_value(w)
