"""Vanishing-off subgroups, their Galois duals, and the normal-subgroup lattice.

For a normal subgroup N, ``v_rel`` computes the join of the vanishing-off
subgroups of the irreducible characters whose kernel misses N, and
``u_rel`` computes the adjoint construction: the largest normal subgroup U
such that every character not containing U in its kernel vanishes off N.
The two maps form a monotone Galois connection on the normal-subgroup
lattice, which ``normal_lattice`` enumerates exactly.

Convention: v_rel over the empty character set (N trivial) is the trivial
subgroup.  The empty generating set generates the trivial group, and the
descending-series theory terminates at 1 only under this reading.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chartable import Character, CharacterTable
from .errors import InternalCheckError, SizeLimitError
from .groups import (
    Group,
    Subgroup,
    center,
    derived_subgroup,
    subgroup_generated,
    trivial_subgroup,
)

MAX_LATTICE_MEMBERS = 10_000
JOIN_CLOSURE_LIMIT = 200


def product_subgroup(g: Group, a: Subgroup, b: Subgroup) -> Subgroup:
    """The join AB of two normal subgroups (a set product, no closure needed)."""
    if not (a.normal and b.normal):
        raise ValueError("product_subgroup requires normal factors")
    if a.is_subset_of(b):
        return b
    if b.is_subset_of(a):
        return a
    members = np.unique(g.mul[np.ix_(a.member_array(), b.member_array())])
    return Subgroup(g, tuple(int(x) for x in members), True, _mask_of_array(members))


def _mask_of_array(arr) -> int:
    m = 0
    for x in arr:
        m |= 1 << int(x)
    return m


@dataclass(eq=False)
class NormalLattice:
    """All normal subgroups of a group, closed under meet and join.

    Members are deduplicated and sorted by (order, member list); the
    containment relation is available via bitmask subset tests.
    """

    group: Group
    members: tuple[Subgroup, ...]
    _index_by_mask: dict[int, int] = field(default_factory=dict)
    _join_memo: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self._index_by_mask = {s.mask: i for i, s in enumerate(self.members)}

    def __len__(self) -> int:
        return len(self.members)

    def index_of(self, s: Subgroup) -> int:
        try:
            return self._index_by_mask[s.mask]
        except KeyError:
            raise InternalCheckError("subgroup is not a member of the lattice") from None

    def index_of_mask(self, mask: int) -> int | None:
        return self._index_by_mask.get(mask)

    def leq(self, i: int, j: int) -> bool:
        return self.members[i].mask & ~self.members[j].mask == 0

    def meet(self, i: int, j: int) -> int:
        idx = self._index_by_mask.get(self.members[i].mask & self.members[j].mask)
        if idx is None:
            raise InternalCheckError("lattice is not closed under intersection")
        return idx

    def join(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        memo = self._join_memo.get(key)
        if memo is not None:
            return memo
        prod = product_subgroup(self.group, self.members[i], self.members[j])
        idx = self._index_by_mask.get(prod.mask)
        if idx is None:
            raise InternalCheckError("lattice is not closed under join")
        self._join_memo[key] = idx
        return idx

    def leq_pairs(self) -> list[tuple[int, int]]:
        """All containment pairs (i, j) with member i <= member j."""
        return [
            (i, j)
            for i in range(len(self.members))
            for j in range(len(self.members))
            if self.leq(i, j)
        ]


def normal_lattice(g: Group, table: CharacterTable) -> NormalLattice:
    """Enumerate the normal subgroups of G exactly.

    Every normal subgroup is an intersection of irreducible-character
    kernels, so closing the kernel set under pairwise intersection is
    already complete (and hence join-closed).  A join-closure sweep is
    still run for lattices of at most JOIN_CLOSURE_LIMIT members as a
    self-check; above that it is skipped as provably redundant.
    """
    n = g.order
    full_mask = (1 << n) - 1
    masks = {full_mask}
    kernel_masks = sorted({ch.kernel.mask for ch in table.chars})
    masks.update(kernel_masks)
    worklist = sorted(masks)
    while worklist:
        m = worklist.pop()
        for km in kernel_masks:
            inter = m & km
            if inter not in masks:
                if len(masks) >= MAX_LATTICE_MEMBERS:
                    raise SizeLimitError(
                        f"normal lattice exceeds {MAX_LATTICE_MEMBERS} members", len(masks)
                    )
                masks.add(inter)
                worklist.append(inter)
    subs = {m: _subgroup_from_mask(g, m) for m in masks}
    if len(masks) <= JOIN_CLOSURE_LIMIT:
        pending = sorted(masks)
        while pending:
            m = pending.pop()
            for other in list(masks):
                um = m | other
                if um in masks:
                    continue
                prod = product_subgroup(g, subs[m], subs[other])
                if prod.mask not in masks:
                    masks.add(prod.mask)
                    subs[prod.mask] = prod
                    pending.append(prod.mask)
    ordered = sorted(subs.values(), key=lambda s: (s.order, s.members))
    return NormalLattice(g, tuple(ordered))


def _subgroup_from_mask(g: Group, mask: int) -> Subgroup:
    members = tuple(i for i in range(g.order) if mask >> i & 1)
    return Subgroup(g, members, True, mask)


# -- character selections and the V/U operators --------------------------------


def irr_above(table: CharacterTable, n_sub: Subgroup) -> tuple[int, ...]:
    """Indices of the irreducible characters whose kernel does not contain N."""
    return tuple(
        i for i, ch in enumerate(table.chars) if n_sub.mask & ~ch.kernel.mask
    )


def v_of_char(table: CharacterTable, char: Character | int) -> Subgroup:
    """The vanishing-off subgroup of one character: generated by its support."""
    ch = table.chars[char] if isinstance(char, int) else char
    if ch.vanishing_off is not None:
        return ch.vanishing_off
    g = table.group
    support = [
        table.classes.members(c)
        for c in range(table.classes.count)
        if not ch.values[c].is_zero
    ]
    v = subgroup_generated(g, np.concatenate(support))
    if not v.normal:
        raise InternalCheckError("vanishing-off subgroup is not normal")
    ch.vanishing_off = v
    return v


def v_rel(g: Group, n_sub: Subgroup, table: CharacterTable) -> Subgroup:
    """V(G|N): the join of the vanishing-off subgroups over Irr(G|N).

    The empty selection (N = 1) yields the trivial subgroup.
    """
    selected = irr_above(table, n_sub)
    acc = trivial_subgroup(g)
    for i in sorted(selected, key=lambda i: -v_of_char(table, i).order):
        v = v_of_char(table, i)
        if not v.is_subset_of(acc):
            acc = product_subgroup(g, acc, v)
        if acc.order == g.order:
            break
    return acc


def v_global(g: Group, table: CharacterTable) -> Subgroup:
    """V(G): generated by the supports of the nonlinear irreducible characters."""
    return v_rel(g, derived_subgroup(g), table)


def u_rel(g: Group, n_sub: Subgroup, table: CharacterTable) -> Subgroup:
    """U(G|N): elements lying in the kernel of every character whose
    vanishing-off subgroup escapes N."""
    mask = (1 << g.order) - 1
    for i, ch in enumerate(table.chars):
        if v_of_char(table, i).mask & ~n_sub.mask:
            mask &= ch.kernel.mask
    return _subgroup_from_mask(g, mask)


def u_rel_product(
    g: Group, n_sub: Subgroup, table: CharacterTable, lattice: NormalLattice, v_cache=None
) -> Subgroup:
    """The lattice-product definition of U(G|N); cross-check oracle for u_rel."""
    acc = trivial_subgroup(g)
    for member in lattice.members:
        v = v_cache(member) if v_cache is not None else v_rel(g, member, table)
        if v.is_subset_of(n_sub):
            acc = product_subgroup(g, acc, member)
    return acc


def u_global(g: Group, table: CharacterTable) -> Subgroup:
    """U(G) = U(G | Z(G))."""
    return u_rel(g, center(g), table)


# -- DOT export -----------------------------------------------------------------


def lattice_dot(g: Group, lattice: NormalLattice, table: CharacterTable) -> str:
    """The lattice as a DOT digraph of covering edges.

    Nodes are annotated with the orders of V(G|N) and U(G|N); the full
    containment relation is the transitive closure of the edges.
    """
    lines = ["digraph normal_lattice {", "  rankdir=BT;"]
    members = lattice.members
    for i, s in enumerate(members):
        v = v_rel(g, s, table)
        u = u_rel(g, s, table)
        lines.append(
            f'  n{i} [label="order {s.order}\\nV->{v.order} U->{u.order}"];'
        )
    for i in range(len(members)):
        for j in range(len(members)):
            if i == j or not lattice.leq(i, j):
                continue
            covering = not any(
                k != i and k != j and lattice.leq(i, k) and lattice.leq(k, j)
                for k in range(len(members))
            )
            if covering:
                lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
