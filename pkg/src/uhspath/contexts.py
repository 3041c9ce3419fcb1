"""Charged contexts of a selection scheme, as sets of fixed-length strings.

A context is the shortest amount of string that determines whether a window
selects a position no earlier window already selected (a "charged" window).
For a scheme with windows of `ws` symbols the local contexts have
2w + k - 2 symbols (w windows ending at the last one); for forward schemes
ws + 1 symbols suffice (only the preceding window matters).  The expected
density of the scheme equals the relative size of its context set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import DEFAULT_NODE_BUDGET, check_budget
from .kmerset import KmerSet
from .schemes import TABLE, SelectionScheme, is_forward, scheme_values


@dataclass(frozen=True)
class ContextSet:
    """A KmerSet of charged contexts, tagged with the scheme it came from."""

    kset: KmerSet
    source: str

    def relative_size(self) -> Fraction:
        return self.kset.relative_size()


def local_context_symbols(scheme: SelectionScheme) -> int:
    return 2 * scheme.w + scheme.k - 2


def forward_context_symbols(scheme: SelectionScheme) -> int:
    return scheme.window_symbols + 1


def build_context_set_local(
    scheme: SelectionScheme, budget: int = DEFAULT_NODE_BUDGET
) -> ContextSet:
    """Contexts whose last window picks a position none of the w-1 windows
    before it picked.  Valid for any scheme, forward or not."""
    sigma = scheme.sigma
    ws = scheme.window_symbols
    W = local_context_symbols(scheme)
    m = sigma**W
    check_budget(m, budget, "local context set")
    fv = scheme_values(scheme, budget=budget)
    codes = np.arange(m, dtype=np.int64)
    win = (codes // sigma ** (W - (scheme.w - 1) - ws)) % sigma**ws
    last_pick = (scheme.w - 1) + fv[win]
    member = np.ones(m, dtype=bool)
    for i in range(scheme.w - 1):
        win = (codes // sigma ** (W - i - ws)) % sigma**ws
        member &= last_pick != i + fv[win]
    return ContextSet(KmerSet(sigma, W, member), repr(scheme))


def build_context_set_forward(
    scheme: SelectionScheme, budget: int = DEFAULT_NODE_BUDGET
) -> ContextSet:
    """Contexts of ws + 1 symbols whose second window picks a fresh position.

    Requires a forward scheme: the selected position never moves backwards,
    so the previous window is the only one that can have selected it
    already.  Minimizers are forward by construction; tables are checked.
    """
    if scheme.kind == TABLE and not is_forward(scheme, budget=budget):
        raise ValueError("scheme is not forward")
    sigma = scheme.sigma
    ws = scheme.window_symbols
    m = sigma ** (ws + 1)
    check_budget(m, budget, "forward context set")
    fv = scheme_values(scheme, budget=budget)
    codes = np.arange(m, dtype=np.int64)
    member = fv[codes % sigma**ws] + 1 != fv[codes // sigma]
    return ContextSet(KmerSet(sigma, ws + 1, member), repr(scheme))


def context_density(contexts: ContextSet) -> Fraction:
    """Expected density implied by a context set: |C| / sigma^|context|."""
    return contexts.relative_size()
