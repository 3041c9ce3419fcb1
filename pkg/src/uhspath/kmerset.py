"""Membership sets over all sigma^w w-mers, with exact serialization."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .core import (
    DEFAULT_NODE_BUDGET,
    Kmer,
    check_budget,
    kmer_encode,
    parse_symbols,
)

_BINARY_MAGIC = b"UHS1"


class KmerSet:
    """Immutable membership bitmap over all sigma^w w-mer codes."""

    __slots__ = ("sigma", "w", "mask", "_cardinality")

    def __init__(self, sigma: int, w: int, mask: np.ndarray):
        n = sigma**w
        if mask.shape != (n,) or mask.dtype != np.bool_:
            raise ValueError(f"mask must be a bool array of length sigma**w = {n}")
        self.sigma = sigma
        self.w = w
        mask = mask.copy()
        mask.flags.writeable = False
        self.mask = mask
        self._cardinality = int(mask.sum())

    # -- constructors ---------------------------------------------------

    @classmethod
    def empty(cls, sigma: int, w: int, budget: int = DEFAULT_NODE_BUDGET) -> "KmerSet":
        check_budget(sigma**w, budget, "KmerSet")
        return cls(sigma, w, np.zeros(sigma**w, dtype=bool))

    @classmethod
    def full(cls, sigma: int, w: int, budget: int = DEFAULT_NODE_BUDGET) -> "KmerSet":
        check_budget(sigma**w, budget, "KmerSet")
        return cls(sigma, w, np.ones(sigma**w, dtype=bool))

    @classmethod
    def from_codes(
        cls, sigma: int, w: int, codes: Iterable[int], budget: int = DEFAULT_NODE_BUDGET
    ) -> "KmerSet":
        check_budget(sigma**w, budget, "KmerSet")
        mask = np.zeros(sigma**w, dtype=bool)
        idx = np.fromiter((int(c) for c in codes), dtype=np.int64)
        if idx.size:
            if idx.min() < 0 or idx.max() >= sigma**w:
                raise ValueError("code out of range")
            mask[idx] = True
        return cls(sigma, w, mask)

    @classmethod
    def from_kmers(cls, kmers: Iterable[Kmer], sigma: int, w: int) -> "KmerSet":
        return cls.from_codes(sigma, w, (k.code for k in kmers))

    @classmethod
    def from_texts(cls, sigma: int, w: int, texts: Iterable[str]) -> "KmerSet":
        return cls.from_kmers((kmer_encode(t, sigma) for t in texts), sigma, w)

    # -- queries ----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.sigma**self.w

    @property
    def cardinality(self) -> int:
        return self._cardinality

    def relative_size(self) -> Fraction:
        """Exact |A| / sigma^w."""
        return Fraction(self.cardinality, self.n)

    def contains_code(self, code: int) -> bool:
        return bool(self.mask[code])

    def __contains__(self, x: Kmer) -> bool:
        if (x.sigma, x.w) != (self.sigma, self.w):
            raise ValueError("kmer context does not match set")
        return bool(self.mask[x.code])

    def codes(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def kmers(self) -> Iterator[Kmer]:
        for c in self.codes():
            yield Kmer(int(c), self.sigma, self.w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KmerSet):
            return NotImplemented
        return (
            self.sigma == other.sigma
            and self.w == other.w
            and bool(np.array_equal(self.mask, other.mask))
        )

    def __repr__(self) -> str:
        return f"KmerSet(sigma={self.sigma}, w={self.w}, cardinality={self.cardinality})"

    # -- serialization ----------------------------------------------------

    def save_text(self, path: str) -> None:
        with open(path, "w") as fh:
            fh.write(f"uhs sigma={self.sigma} w={self.w}\n")
            for c in self.codes():
                fh.write(Kmer(int(c), self.sigma, self.w).text())
                fh.write("\n")

    @classmethod
    def load_text(cls, path: str, budget: int = DEFAULT_NODE_BUDGET) -> "KmerSet":
        with open(path) as fh:
            header = fh.readline().split()
            if len(header) != 3 or header[0] != "uhs":
                raise ValueError(f"bad set file header in {path}")
            sigma = int(header[1].removeprefix("sigma="))
            w = int(header[2].removeprefix("w="))
            check_budget(sigma**w, budget, "KmerSet")
            mask = np.zeros(sigma**w, dtype=bool)
            for line in fh:
                line = line.strip()
                if line:
                    k = kmer_encode(line, sigma)
                    if k.w != w:
                        raise ValueError(f"k-mer {line!r} has wrong length, expected {w}")
                    mask[k.code] = True
        return cls(sigma, w, mask)

    def save_binary(self, path: str) -> None:
        if self.sigma > 255:
            raise ValueError("binary format stores sigma as one byte")
        packed = np.packbits(self.mask, bitorder="little")
        with open(path, "wb") as fh:
            fh.write(_BINARY_MAGIC)
            fh.write(bytes([self.sigma]))
            fh.write(self.w.to_bytes(4, "little"))
            fh.write(packed.tobytes())

    @classmethod
    def load_binary(cls, path: str, budget: int = DEFAULT_NODE_BUDGET) -> "KmerSet":
        with open(path, "rb") as fh:
            magic = fh.read(4)
            if magic != _BINARY_MAGIC:
                raise ValueError(f"bad magic bytes in {path}")
            sigma = fh.read(1)[0]
            w = int.from_bytes(fh.read(4), "little")
            n = sigma**w
            check_budget(n, budget, "KmerSet")
            raw = fh.read((n + 7) // 8)
            if len(raw) != (n + 7) // 8:
                raise ValueError(f"truncated set file {path}")
            bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return cls(sigma, w, bits[:n].astype(bool))


def hits(kset: KmerSet, s: str | list[int]) -> bool:
    """True iff some w-window of s is a member of the set."""
    syms = parse_symbols(s, kset.sigma)
    if len(syms) < kset.w:
        raise ValueError(f"string of length {len(syms)} is shorter than w={kset.w}")
    n = kset.n
    code = 0
    for v in syms[: kset.w]:
        code = code * kset.sigma + v
    if kset.mask[code]:
        return True
    for v in syms[kset.w :]:
        code = (code * kset.sigma + v) % n
        if kset.mask[code]:
            return True
    return False
