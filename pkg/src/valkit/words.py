"""Purely periodic continued-fraction words and the Markov tree."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import groupby
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, ResourceLimit

MAX_TREE_DEPTH = 16


@dataclass(frozen=True)
class PeriodicWord:
    """The period (a_1, ..., a_l) of a purely periodic continued fraction."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if not letters:
            raise ValueError("a periodic word needs at least one letter")
        if any(a < 1 for a in letters):
            raise ValueError(f"letters must be >= 1, got {letters}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.letters)) + "]"

    @property
    def is_even(self) -> bool:
        return len(self.letters) % 2 == 0


def as_word(w: "PeriodicWord | Sequence[int]") -> PeriodicWord:
    return w if isinstance(w, PeriodicWord) else PeriodicWord(tuple(w))


def opposite(w) -> PeriodicWord:
    return PeriodicWord(tuple(reversed(as_word(w).letters)))


def rotation(w, i: int) -> PeriodicWord:
    """Cyclic shift starting at the 1-based position ``i``."""
    w = as_word(w)
    if not 1 <= i <= len(w):
        raise IndexOutOfRange(f"rotation index {i} outside 1..{len(w)}")
    return PeriodicWord(w.letters[i - 1:] + w.letters[: i - 1])


def conjunction(w1, w2) -> PeriodicWord:
    return PeriodicWord(as_word(w1).letters + as_word(w2).letters)


def even_form(w) -> PeriodicWord:
    w = as_word(w)
    return w if w.is_even else PeriodicWord(w.letters * 2)


def has_markov_letters(w) -> bool:
    return all(a in (1, 2) for a in as_word(w))


def is_markov_word(w) -> bool:
    """Letters in {1, 2}, even length, and letters paired as a_{2k-1} = a_{2k}.

    Every word of the Markov tree has this shape (runs 2_{2j} 1_{2k}).
    """
    w = as_word(w)
    return (
        has_markov_letters(w)
        and w.is_even
        and all(w[k] == w[k + 1] for k in range(0, len(w), 2))
    )


def run_length(w) -> str:
    """Display form such as ``2_2,1_4``."""
    return ",".join(f"{a}_{len(list(g))}" for a, g in groupby(as_word(w)))


@dataclass
class MarkovNode:
    word: PeriodicWord
    depth: int
    left: PeriodicWord
    right: PeriodicWord
    parent: "MarkovNode | None" = field(default=None, repr=False)
    children: list["MarkovNode"] = field(default_factory=list, repr=False)

    def iter_nodes(self) -> Iterator["MarkovNode"]:
        """Breadth-first traversal, left child before right child."""
        queue = deque([self])
        while queue:
            node = queue.popleft()
            yield node
            queue.extend(node.children)


MARKOV_LEFT = PeriodicWord((1, 1))
MARKOV_RIGHT = PeriodicWord((2, 2))


def markov_tree(depth: int, cap: int = MAX_TREE_DEPTH) -> MarkovNode:
    """Markov tree down to ``depth``; a node between neighbors L and R is R ⊙ L."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if depth > cap:
        raise ResourceLimit(f"tree depth {depth} exceeds cap {cap}")
    root = MarkovNode(conjunction(MARKOV_RIGHT, MARKOV_LEFT), 0, MARKOV_LEFT, MARKOV_RIGHT)
    frontier = [root]
    for level in range(1, depth + 1):
        nxt = []
        for node in frontier:
            lc = MarkovNode(conjunction(node.word, node.left), level, node.left, node.word, node)
            rc = MarkovNode(conjunction(node.right, node.word), level, node.word, node.right, node)
            node.children = [lc, rc]
            nxt.extend(node.children)
        frontier = nxt
    return root


def markov_words(depth: int) -> list[PeriodicWord]:
    return [n.word for n in markov_tree(depth).iter_nodes()]


def words_from(letters: Iterable[Sequence[int]]) -> list[PeriodicWord]:
    return [as_word(w) for w in letters]
