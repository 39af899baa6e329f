"""Ascending and descending central series, chains of centers, classification.

The ascending series starts at 1 and lifts U(G/term) one quotient at a
time; the descending series starts at G and applies N -> V(G | [N, G]).
For nonabelian p-groups, reaching G (respectively 1) characterizes the
nested GVZ property, and in that case both series recover the chain of
centers and its commutators exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .chartable import CharacterTable, character_table
from .errors import InternalCheckError
from .groups import (
    Group,
    Subgroup,
    center,
    commutator,
    full_subgroup,
    quotient,
    subgroup,
    trivial_subgroup,
)
from .vanishing import u_global, v_of_char, v_rel


@dataclass(frozen=True)
class CentralChain:
    """A computed series: ordered terms, the stabilized subgroup, and whether
    the series reached its target (G for ascending, 1 for descending)."""

    kind: str  # "upsilon" | "epsilon"
    terms: tuple[Subgroup, ...]
    reached: bool

    @property
    def terminal(self) -> Subgroup:
        return self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class Classification:
    abelian: bool
    vz: bool
    gvz: bool
    nested: bool
    nested_gvz: bool
    cd: tuple[int, ...]
    chain_of_centers: tuple[Subgroup, ...] | None
    center_index_of_char: tuple[int, ...] | None
    non_nested_witness: tuple[int, int] | None


def _iteration_cap(order: int) -> int:
    return 2 + int(math.log2(max(order, 2)))


def upsilon_series(
    g: Group, table: CharacterTable | None = None, table_factory=None, quotient_data=None
) -> CentralChain:
    """Ascending series: term_0 = 1, term_{i+1}/term_i = U(G/term_i).

    Each step builds the quotient and a fresh character table for it.
    ``table`` (the group's own table) short-circuits the first step;
    ``quotient_data(sub) -> (Q, projection, table_of_Q)`` lets callers
    supply a caching quotient builder, ``table_factory`` a caching table
    builder.
    """
    factory = table_factory or character_table
    terms = [trivial_subgroup(g)]
    cap = _iteration_cap(g.order)
    while True:
        cur = terms[-1]
        if cur.order == g.order:
            return CentralChain("upsilon", tuple(terms), True)
        if cur.order == 1 and table is not None:
            u_q = u_global(g, table)
            nxt = u_q
        elif quotient_data is not None:
            q, proj, table_q = quotient_data(cur)
            nxt = proj.preimage_subgroup(u_global(q, table_q))
        else:
            q, proj = quotient(g, cur)
            nxt = proj.preimage_subgroup(u_global(q, factory(q)))
        if nxt.mask == cur.mask:
            return CentralChain("upsilon", tuple(terms), False)
        if cur.mask & ~nxt.mask:
            raise InternalCheckError("ascending series failed to ascend")
        terms.append(nxt)
        if len(terms) > cap:
            raise InternalCheckError("ascending series exceeded its iteration cap")


def epsilon_series(g: Group, table: CharacterTable) -> CentralChain:
    """Descending series: term_1 = G, term_{i+1} = V(G | [term_i, G])."""
    full = full_subgroup(g)
    terms = [full]
    cap = _iteration_cap(g.order)
    while True:
        cur = terms[-1]
        if cur.order == 1:
            return CentralChain("epsilon", tuple(terms), True)
        comm = commutator(g, cur, full)
        nxt = v_rel(g, comm, table)
        if nxt.mask == cur.mask:
            return CentralChain("epsilon", tuple(terms), False)
        if nxt.mask & ~cur.mask:
            raise InternalCheckError("descending series failed to descend")
        terms.append(nxt)
        if len(terms) > cap:
            raise InternalCheckError("descending series exceeded its iteration cap")


def chain_of_centers(
    g: Group, table: CharacterTable
) -> tuple[tuple[Subgroup, ...] | None, tuple[int, int] | None]:
    """The distinct character centers sorted by containment, if they form a chain.

    Returns (chain, None) for nested groups, ordered from G downward; for
    non-nested groups returns (None, (i, j)) with a witness pair of
    character indices whose centers are incomparable.
    """
    by_mask: dict[int, int] = {}
    for i, ch in enumerate(table.chars):
        by_mask.setdefault(ch.center.mask, i)
    ordered = sorted(by_mask.items(), key=lambda kv: -table.chars[kv[1]].center.order)
    for (m_big, i_big), (m_small, i_small) in zip(ordered, ordered[1:]):
        if m_small & ~m_big:
            return None, (i_big, i_small)
    chain = tuple(table.chars[i].center for _, i in ordered)
    if chain[0].order != g.order:
        raise InternalCheckError("chain of centers does not start at the whole group")
    if chain[-1].mask != center(g).mask:
        raise InternalCheckError("chain of centers does not end at the center")
    prev_comm = None
    for x in chain:
        comm = commutator(g, x, full_subgroup(g))
        if prev_comm is not None and not (
            comm.is_subset_of(prev_comm) and comm.mask != prev_comm.mask
        ):
            raise InternalCheckError("commutators along the chain of centers do not descend strictly")
        prev_comm = comm
    return chain, None


def classify(g: Group, table: CharacterTable) -> Classification:
    """VZ / GVZ / nested flags, character degrees, and the chain of centers."""
    n = g.order
    abelian = all(ch.degree == 1 for ch in table.chars)
    z_mask = center(g).mask
    vz = all(
        v_of_char(table, i).mask == z_mask
        for i, ch in enumerate(table.chars)
        if ch.degree > 1
    )
    gvz = all(ch.degree * ch.degree * ch.center.order == n for ch in table.chars)
    chain, witness = chain_of_centers(g, table)
    nested = chain is not None
    nested_gvz = nested and gvz
    cd = tuple(sorted({ch.degree for ch in table.chars}))
    centers_of_chars = None
    if nested:
        index_of_mask = {x.mask: i for i, x in enumerate(chain)}
        centers_of_chars = tuple(index_of_mask[ch.center.mask] for ch in table.chars)
        if nested_gvz:
            if len(cd) != len(chain):
                raise InternalCheckError("degree count does not match the chain of centers")
            for x in chain:
                index = n // x.order
                root = math.isqrt(index)
                if root * root != index or root not in cd:
                    raise InternalCheckError("center index is not the square of a degree")
    return Classification(
        abelian=abelian,
        vz=vz,
        gvz=gvz,
        nested=nested,
        nested_gvz=nested_gvz,
        cd=cd,
        chain_of_centers=chain,
        center_index_of_char=centers_of_chars,
        non_nested_witness=witness,
    )


def center_kernel_criterion(
    g: Group, table: CharacterTable, chain: tuple[Subgroup, ...]
) -> tuple[bool, ...]:
    """Per-character test locating each center inside the chain via kernels.

    For a character with center X_i the commutator [X_i, G] must lie in
    the kernel while [X_{i-1}, G] must escape it (vacuous for i = 0).
    """
    full = full_subgroup(g)
    comms = [commutator(g, x, full) for x in chain]
    index_of_mask = {x.mask: i for i, x in enumerate(chain)}
    verdicts = []
    for ch in table.chars:
        i = index_of_mask[ch.center.mask]
        ok = comms[i].is_subset_of(ch.kernel)
        if i >= 1:
            ok = ok and bool(comms[i - 1].mask & ~ch.kernel.mask)
        verdicts.append(ok)
    return tuple(verdicts)
