"""Alphabet and w-mer primitives on the implicit de Bruijn graph.

w-mers are packed as integers in base sigma with the first symbol as the
most significant digit, so walking an edge of the de Bruijn graph is a
single multiply-add: successor(x, a) has code (x.code * sigma + a) mod
sigma**w.  The graph itself is never materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

ACGT = "ACGT"
_ACGT_VALUES = {c: i for i, c in enumerate(ACGT)}

#: Default cap on the number of graph nodes an operation may touch.
DEFAULT_NODE_BUDGET = 1 << 28


class BudgetError(Exception):
    """An operation would exceed its configured memory budget."""


def check_budget(n: int, budget: int = DEFAULT_NODE_BUDGET, what: str = "operation") -> None:
    if n > budget:
        raise BudgetError(f"{what} needs {n} states, budget is {budget}")


@dataclass(frozen=True)
class Alphabet:
    """Alphabet {0, ..., sigma-1}; symbols render as decimal digits, or ACGT when sigma=4."""

    sigma: int

    def __post_init__(self) -> None:
        if self.sigma < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.sigma}")

    def parse(self, text: str) -> tuple[int, ...]:
        return parse_symbols(text, self.sigma)

    def render(self, symbols: Iterable[int], acgt: bool = False) -> str:
        return render_symbols(symbols, self.sigma, acgt=acgt)


def parse_symbols(text: str | Sequence[int], sigma: int) -> tuple[int, ...]:
    """Turn a digit string (or an ACGT string when sigma=4) into symbol values."""
    if not isinstance(text, str):
        syms = tuple(int(s) for s in text)
    elif sigma == 4 and text and text[0] in _ACGT_VALUES:
        try:
            syms = tuple(_ACGT_VALUES[c] for c in text)
        except KeyError as e:
            raise ValueError(f"invalid ACGT symbol {e.args[0]!r}") from None
    else:
        if sigma > 10:
            raise ValueError("digit text form only supports sigma <= 10")
        try:
            syms = tuple(int(c) for c in text)
        except ValueError:
            raise ValueError(f"invalid symbol in {text!r}") from None
    for s in syms:
        if not 0 <= s < sigma:
            raise ValueError(f"symbol {s} out of range for sigma={sigma}")
    return syms


def render_symbols(symbols: Iterable[int], sigma: int, acgt: bool = False) -> str:
    if acgt:
        if sigma != 4:
            raise ValueError("ACGT rendering requires sigma=4")
        return "".join(ACGT[s] for s in symbols)
    if sigma > 10:
        raise ValueError("digit text form only supports sigma <= 10")
    return "".join(str(s) for s in symbols)


@dataclass(frozen=True)
class Kmer:
    """A w-mer packed as an integer code, with explicit (sigma, w) context."""

    code: int
    sigma: int
    w: int

    def __post_init__(self) -> None:
        if self.w < 1:
            raise ValueError(f"w must be >= 1, got {self.w}")
        if self.sigma < 2:
            raise ValueError(f"sigma must be >= 2, got {self.sigma}")
        if not 0 <= self.code < self.sigma**self.w:
            raise ValueError(f"code {self.code} out of range for sigma={self.sigma}, w={self.w}")

    def symbols(self) -> tuple[int, ...]:
        out = []
        c = self.code
        for _ in range(self.w):
            c, r = divmod(c, self.sigma)
            out.append(r)
        return tuple(reversed(out))

    def text(self, acgt: bool = False) -> str:
        return render_symbols(self.symbols(), self.sigma, acgt=acgt)

    def __str__(self) -> str:
        return self.text()


def kmer_encode(s: str | Sequence[int], sigma: int) -> Kmer:
    """Pack a symbol string into a Kmer, first symbol most significant."""
    syms = parse_symbols(s, sigma)
    if not syms:
        raise ValueError("cannot encode an empty string")
    code = 0
    for v in syms:
        code = code * sigma + v
    return Kmer(code, sigma, len(syms))


def kmer_decode(code: int, sigma: int, w: int) -> str:
    return Kmer(code, sigma, w).text()


def successor(x: Kmer, a: int) -> Kmer:
    """Out-neighbor of x in the de Bruijn graph: drop the first symbol, append a."""
    if not 0 <= a < x.sigma:
        raise ValueError(f"symbol {a} out of range for sigma={x.sigma}")
    n = x.sigma**x.w
    return Kmer((x.code * x.sigma + a) % n, x.sigma, x.w)


def pure_rotation(x: Kmer) -> Kmer:
    """Cyclic left rotation: the successor that stays inside x's conjugacy class."""
    first = x.code // x.sigma ** (x.w - 1)
    return successor(x, first)


def rotation_code(code: int, sigma: int, w: int) -> int:
    """pure_rotation on raw codes, for hot loops."""
    n = sigma**w
    return (code * sigma + code // (n // sigma)) % n


def canonical_rotation_code(code: int, sigma: int, w: int) -> int:
    """Lexicographically least rotation (the conjugacy class representative)."""
    best = code
    c = code
    for _ in range(w - 1):
        c = rotation_code(c, sigma, w)
        if c < best:
            best = c
    return best


def conjugacy_class(x: Kmer) -> list[Kmer]:
    """Distinct rotations of x, in rotation order from the canonical representative.

    The class size equals the shortest period of x.
    """
    start = canonical_rotation_code(x.code, x.sigma, x.w)
    out = [start]
    c = rotation_code(start, x.sigma, x.w)
    while c != start:
        out.append(c)
        c = rotation_code(c, x.sigma, x.w)
    return [Kmer(c, x.sigma, x.w) for c in out]


def necklace_count(sigma: int, w: int) -> int:
    """Number of conjugacy classes of w-mers: (1/w) * sum over d|w of phi(d) sigma^(w/d)."""
    if sigma < 2 or w < 1:
        raise ValueError("need sigma >= 2 and w >= 1")
    total = 0
    for d in range(1, w + 1):
        if w % d == 0:
            total += _totient(d) * sigma ** (w // d)
    assert total % w == 0
    return total // w


@lru_cache(maxsize=None)
def _totient(n: int) -> int:
    result = n
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _fkm(sigma: int, n: int, lyndon: bool) -> Iterator[tuple[tuple[int, ...], int]]:
    """FKM generation in lexicographic order.

    Yields (word, period): necklace representatives of length n when
    lyndon=False, Lyndon words of length dividing n when lyndon=True.
    """
    a = [0] * (n + 1)

    def gen(t: int, p: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if t > n:
            if n % p == 0:
                if lyndon:
                    yield tuple(a[1 : p + 1]), p
                else:
                    yield tuple(a[1 : n + 1]), p
        else:
            a[t] = a[t - p]
            yield from gen(t + 1, p)
            for j in range(a[t - p] + 1, sigma):
                a[t] = j
                yield from gen(t + 1, t)

    yield from gen(1, 1)


def necklaces(sigma: int, w: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All conjugacy class representatives as (symbols, class size), lexicographic."""
    return _fkm(sigma, w, lyndon=False)


@dataclass(frozen=True)
class NecklaceTable:
    """Partition of all w-mers into conjugacy classes."""

    sigma: int
    w: int
    reps: tuple[Kmer, ...]
    sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def members(self, i: int) -> list[Kmer]:
        return conjugacy_class(self.reps[i])


def enumerate_classes(sigma: int, w: int, budget: int = DEFAULT_NODE_BUDGET) -> NecklaceTable:
    """Enumerate every conjugacy class; the count matches necklace_count."""
    check_budget(sigma**w, budget, "conjugacy class enumeration")
    reps = []
    sizes = []
    for word, period in necklaces(sigma, w):
        reps.append(kmer_encode(word, sigma))
        sizes.append(period)
    table = NecklaceTable(sigma, w, tuple(reps), tuple(sizes))
    assert len(table) == necklace_count(sigma, w)
    assert sum(sizes) == sigma**w
    return table


def debruijn_sequence(
    sigma: int, n: int, cyclic: bool = False, budget: int = DEFAULT_NODE_BUDGET
) -> str:
    """Lexicographically least de Bruijn sequence of order n (Lyndon-word concatenation).

    Linear form has length sigma**n + n - 1 and contains every n-mer exactly
    once; the cyclic form has length sigma**n.
    """
    check_budget(sigma**n + n - 1, budget, "de Bruijn sequence")
    parts: list[int] = []
    for word, _ in _fkm(sigma, n, lyndon=True):
        parts.extend(word)
    if not cyclic:
        parts.extend(parts[: n - 1])
    return render_symbols(parts, sigma)
