"""Lyndon words and the Lyndon basis of the free Lie algebra.

Letters are the integers `0 .. n-1` and words are tuples of letters. A
bracket expression is either a letter or a pair `(left, right)` standing for
`[left, right]`. In the symplectic alphabet of genus g the letter `i` is
a_(i+1) and `g + i` is b_(i+1).
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Iterator, Union

from sympy.ntheory import divisors
from sympy.utilities.iterables import multiset_permutations

from sympdec import config
from sympdec.combinatorics.arithmetic import mobius, witt_dimension
from sympdec.exceptions import IntegralityError, InvalidArgumentError, ResourceLimitError

logger = logging.getLogger(__name__)

Tree = Union[int, tuple]


def letter_name(letter: int, genus: int) -> str:
    if letter < genus:
        return f'a{letter + 1}'
    return f'b{letter - genus + 1}'


def is_lyndon(word: tuple) -> bool:
    """Strictly smaller than every proper rotation."""
    return len(word) > 0 and all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_words(n: int, k: int) -> Iterator[tuple]:
    """Lyndon words of length exactly `k` over `n` letters, in lexicographic
    order (Duval's generation)."""
    if n < 1 or k < 1:
        raise InvalidArgumentError(f'Need n, k >= 1, got n={n}, k={k}')
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == k:
            yield tuple(w)
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()


def lyndon_words_with_content(content: tuple) -> list[tuple]:
    """Lyndon words in which letter `i` occurs `content[i]` times."""
    multiset = [letter for letter, count in enumerate(content) for _ in range(count)]
    if not multiset:
        return []
    return [tuple(w) for w in multiset_permutations(multiset) if is_lyndon(tuple(w))]


def lyndon_count(content: tuple) -> int:
    """Number of Lyndon words with the given letter content, without
    generating them.

    (1/n) sum_(d | gcd) mu(d) (n/d)! / prod (c_i/d)!
    """
    content = tuple(c for c in content if c)
    n = sum(content)
    if not n:
        return 0
    total = 0
    for d in divisors(gcd(*content)):
        total += mobius(d) * factorial(n // d) // prod(factorial(c // d) for c in content)
    value, rest = divmod(total, n)
    if rest:
        raise IntegralityError(f'Lyndon count for {content} is not an integer')
    return value


def standard_factorization(word: tuple) -> tuple[tuple, tuple]:
    """w = uv with v the longest proper suffix that is a Lyndon word."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise InvalidArgumentError(f'{word} has no standard factorization')


@lru_cache(maxsize=None)
def standard_bracketing(word: tuple) -> Tree:
    """Bracket expression P(w): P(a) = a, P(uv) = [P(u), P(v)]."""
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (standard_bracketing(u), standard_bracketing(v))


def tree_degree(tree: Tree) -> int:
    if isinstance(tree, int):
        return 1
    return tree_degree(tree[0]) + tree_degree(tree[1])


def tree_letters(tree: Tree) -> Counter:
    if isinstance(tree, int):
        return Counter({tree: 1})
    return tree_letters(tree[0]) + tree_letters(tree[1])


def format_tree(tree: Tree, genus: int = None) -> str:
    if isinstance(tree, int):
        return letter_name(tree, genus) if genus else str(tree)
    return f'[{format_tree(tree[0], genus)},{format_tree(tree[1], genus)}]'


@lru_cache(maxsize=None)
def _expand(tree: Tree) -> tuple:
    if isinstance(tree, int):
        return (((tree,), 1),)
    left, right = dict(_expand(tree[0])), dict(_expand(tree[1]))
    out = Counter()
    for u, x in left.items():
        for v, y in right.items():
            out[u + v] += x * y
            out[v + u] -= x * y
    return tuple((w, c) for w, c in out.items() if c)


def expand(tree: Tree) -> dict[tuple, int]:
    """Expansion of a bracket expression in the free associative algebra,
    [x, y] = xy - yx."""
    return dict(_expand(tree))


@dataclass(frozen=True)
class LyndonBasis:
    """Lyndon basis of one degree of the free Lie algebra on `alphabet_size`
    letters, optionally restricted to one letter content (weight space)."""

    alphabet_size: int
    degree: int
    words: tuple
    bracketing: tuple = ()
    content: tuple = None
    index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.bracketing:
            object.__setattr__(
                self, 'bracketing', tuple(standard_bracketing(w) for w in self.words)
            )
        object.__setattr__(self, 'index', {w: i for i, w in enumerate(self.words)})

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def coordinates(self, tree: Tree) -> dict[int, int]:
        return expand_bracket(tree, self)


def _check_basis_size(size: int) -> None:
    limit = config.settings.oracle['max_basis_size']
    if size > limit:
        raise ResourceLimitError('Lyndon basis', size, limit, 'oracle.max_basis_size')


def build_lyndon_basis(g: int, k: int, content: tuple = None) -> LyndonBasis:
    """Lyndon basis of L_H(k) with dim H = 2g.

    With `content` (letter counts, at most 2g entries) only the words of that
    weight are generated.
    """
    if g < 1 or k < 1:
        raise InvalidArgumentError(f'Need g, k >= 1, got g={g}, k={k}')
    n = 2 * g
    if content is None:
        _check_basis_size(witt_dimension(n, k))
        words = tuple(lyndon_words(n, k))
    else:
        content = tuple(content)
        if len(content) > n or sum(content) != k or min(content, default=0) < 0:
            raise InvalidArgumentError(
                f'Content {content} does not fit degree {k} over {n} letters'
            )
        words = tuple(lyndon_words_with_content(content))
    logger.debug(f'Lyndon basis g={g} k={k} content={content}: {len(words)} words')
    return LyndonBasis(n, k, words, content=content)


def expand_bracket(x: Tree, basis: LyndonBasis) -> dict[int, int]:
    """Coordinates of the bracket expression `x` in the Lyndon basis.

    P(w) equals w plus lexicographically larger words, so the smallest word
    of a Lie polynomial is always Lyndon and peeling it off repeatedly
    terminates. All coordinates are integers.
    """
    if tree_degree(x) != basis.degree:
        raise InvalidArgumentError(
            f'Expression of degree {tree_degree(x)} in a basis of degree {basis.degree}'
        )
    vec = expand(x)
    coords = {}
    while vec:
        w = min(vec)
        c = vec[w]
        i = basis.index.get(w)
        if i is None:
            if is_lyndon(w):
                raise InvalidArgumentError(
                    f'{w} lies outside the basis (content {basis.content})'
                )
            raise IntegralityError(f'Leading word {w} of a Lie element is not Lyndon')
        coords[i] = c
        for u, y in _expand(basis.bracketing[i]):
            value = vec.get(u, 0) - c * y
            if value:
                vec[u] = value
            else:
                vec.pop(u, None)
    return coords
