"""Finite groups as dense multiplication tables, plus subgroup machinery.

A group lives entirely in its Cayley table: elements are the indices
0..n-1, index 0 is the identity, and every downstream algorithm is an
elementary table computation.  Dense tables trade memory for exactness
and simplicity; the intended scale (orders <= 2000) makes that cheap.

Groups, subgroups, conjugacy-class data, and projections are immutable
after construction, so they can be shared freely between analyses.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import NormalityError, SizeLimitError, StructuralInputError

MAX_GROUP_ORDER = 2000
EXHAUSTIVE_ASSOC_LIMIT = 512
ASSOC_SAMPLES_PER_ELEMENT = 10


class Group:
    """A finite group given by a validated multiplication table.

    Attributes:
        order: number of elements.
        mul: order x order int32 table, mul[a, b] = index of a*b.
        inv: per-element inverse table.
        labels: per-element display strings.
        provenance: human-readable construction descriptor.
    """

    def __init__(self, mul: np.ndarray, inv: np.ndarray, labels: tuple[str, ...], provenance: str):
        self.order = int(mul.shape[0])
        self.mul = mul
        self.inv = inv
        self.labels = labels
        self.provenance = provenance
        mul.flags.writeable = False
        inv.flags.writeable = False
        # lazily computed structural caches (the object stays logically immutable)
        self._orders: np.ndarray | None = None
        self._exponent: int | None = None
        self._center: Subgroup | None = None
        self._derived: Subgroup | None = None
        self._classes = None
        self._abelian: bool | None = None

    def __repr__(self) -> str:
        return f"Group(order={self.order}, provenance={self.provenance!r})"

    @property
    def descriptor(self) -> str:
        return f"{self.provenance} (order {self.order})"

    def label(self, g: int) -> str:
        return self.labels[g]

    def power(self, g: int, j: int) -> int:
        """g**j by repeated squaring on the table."""
        j %= max(exponent(self), 1)
        result, base = 0, g
        while j:
            if j & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            j >>= 1
        return result

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            orders[0] = 1
            cur = np.arange(n)
            step = 1
            while (orders == 0).any():
                step += 1
                cur = self.mul[cur, np.arange(n)]
                hit = (cur == 0) & (orders == 0)
                orders[hit] = step
                if step > n:
                    raise StructuralInputError("inverses", None, "element of infinite order in table")
            self._orders = orders
        return self._orders


@dataclass(frozen=True)
class Subgroup:
    """A subset of a parent group closed under the operation.

    ``members`` is sorted; ``mask`` is the same set as a bitmask for fast
    subset/intersection tests; ``normal`` records closure under conjugation.
    """

    parent: Group
    members: tuple[int, ...]
    normal: bool
    mask: int

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def member_array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    def describe(self, max_labels: int = 16) -> str:
        labels = [self.parent.labels[g] for g in self.members[:max_labels]]
        extra = self.order - len(labels)
        body = ", ".join(labels) + (f", ...(+{extra} more)" if extra > 0 else "")
        return f"order {self.order}: {{{body}}}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))


@dataclass(frozen=True)
class ConjClasses:
    """Conjugacy classes with deterministic ordering.

    The identity class comes first; the rest are ordered by (size, least
    element index).  ``reps`` holds the least element of each class.
    """

    class_of: np.ndarray
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    count: int

    def members(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == c)


@dataclass(frozen=True)
class Projection:
    """The canonical surjection onto a quotient group."""

    source: Group
    target: Group
    map: np.ndarray

    def image_subgroup(self, s: Subgroup) -> Subgroup:
        members = np.unique(self.map[s.member_array()])
        return subgroup(self.target, members, normal=True if s.normal else None)

    def preimage_subgroup(self, s: Subgroup) -> Subgroup:
        keep = np.flatnonzero(np.isin(self.map, s.member_array()))
        return subgroup(self.source, keep, normal=True if s.normal else None)


# -- construction and validation -----------------------------------------


def _mask_of(members) -> int:
    m = 0
    for g in members:
        m |= 1 << int(g)
    return m


def _members_of(mask: int) -> tuple[int, ...]:
    out = []
    g = 0
    while mask:
        if mask & 1:
            out.append(g)
        mask >>= 1
        g += 1
    return tuple(out)


def _check_associativity(mul: np.ndarray, exhaustive: bool, seed: int) -> None:
    n = mul.shape[0]
    if exhaustive:
        for a in range(n):
            left = mul[mul[a], :]
            right = mul[a, mul]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise StructuralInputError(
                    "associativity",
                    (a, int(b), int(c)),
                    f"(a*b)*c != a*(b*c) at triple ({a}, {b}, {c})",
                )
    else:
        rng = random.Random(seed)
        for _ in range(ASSOC_SAMPLES_PER_ELEMENT * n):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                raise StructuralInputError(
                    "associativity", (a, b, c), f"(a*b)*c != a*(b*c) at triple ({a}, {b}, {c})"
                )


def _validated_group(
    mul: np.ndarray,
    labels,
    provenance: str,
    *,
    exhaustive_assoc: bool | None = None,
    seed: int = 0,
) -> Group:
    n = mul.shape[0]
    if mul.shape != (n, n):
        raise StructuralInputError("shape", mul.shape, "multiplication table is not square")
    if n == 0:
        raise StructuralInputError("identity", None, "empty table has no identity")
    if mul.min() < 0 or mul.max() >= n:
        bad = np.argwhere((mul < 0) | (mul >= n))[0]
        raise StructuralInputError(
            "closure", tuple(int(x) for x in bad), "table entry out of range [0, order)"
        )
    idx = np.arange(n)
    if not (np.array_equal(mul[0], idx) and np.array_equal(mul[:, 0], idx)):
        raise StructuralInputError("identity", 0, "element 0 does not act as the identity")
    inv = np.full(n, -1, dtype=np.int32)
    for g in range(n):
        hits = np.flatnonzero(mul[g] == 0)
        if hits.size != 1 or mul[hits[0], g] != 0:
            raise StructuralInputError("inverses", g, f"element {g} has no two-sided inverse")
        inv[g] = hits[0]
    if exhaustive_assoc is None:
        exhaustive_assoc = n <= EXHAUSTIVE_ASSOC_LIMIT
    _check_associativity(mul, exhaustive_assoc, seed)
    if labels is None:
        labels = tuple(f"g{i}" for i in range(n))
    return Group(mul.astype(np.int32), inv, tuple(labels), provenance)


def build_from_cayley(
    table,
    labels=None,
    provenance: str = "cayley",
    *,
    exhaustive_assoc: bool | None = None,
    seed: int = 0,
) -> Group:
    """Validate a raw multiplication table and wrap it as a Group.

    The identity element is detected and, if necessary, relabeled to
    index 0 by swapping indices.
    """
    mul = np.asarray(table, dtype=np.int64)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
        raise StructuralInputError("shape", mul.shape, "multiplication table is not square")
    n = mul.shape[0]
    if n and (mul.min() < 0 or mul.max() >= n):
        bad = np.argwhere((mul < 0) | (mul >= n))[0]
        raise StructuralInputError(
            "closure", tuple(int(x) for x in bad), "table entry out of range [0, order)"
        )
    idx = np.arange(n)
    ident = [g for g in range(n) if np.array_equal(mul[g], idx) and np.array_equal(mul[:, g], idx)]
    if not ident:
        raise StructuralInputError("identity", None, "no element acts as a two-sided identity")
    e = ident[0]
    if e != 0:
        perm = np.arange(n)
        perm[0], perm[e] = e, 0  # involution, so it is its own inverse
        mul = perm[mul[np.ix_(perm, perm)]]
        if labels is not None:
            labels = list(labels)
            labels[0], labels[e] = labels[e], labels[0]
    return _validated_group(mul, labels, provenance, exhaustive_assoc=exhaustive_assoc, seed=seed)


def direct_product(a: Group, b: Group, max_order: int = MAX_GROUP_ORDER) -> Group:
    """Componentwise product on pairs; element index of (x, y) is x*|B| + y."""
    n = a.order * b.order
    if n > max_order:
        raise SizeLimitError(f"product order {n} exceeds limit {max_order}", n)
    na, nb = a.order, b.order
    mul = np.kron(a.mul.astype(np.int64), np.ones((nb, nb), dtype=np.int64)) * nb + np.tile(
        b.mul.astype(np.int64), (na, na)
    )
    labels = tuple(f"({la},{lb})" for la in a.labels for lb in b.labels)
    return _validated_group(mul, labels, f"({a.provenance} x {b.provenance})")


# -- subgroup machinery ----------------------------------------------------


def _closure_members(g: Group, seed_members) -> np.ndarray:
    """Closure of {identity} | seed under the group operation."""
    cur = np.unique(np.concatenate([[0], np.asarray(list(seed_members), dtype=np.int64)]))
    while True:
        prods = np.unique(g.mul[np.ix_(cur, cur)])
        if prods.size == cur.size:
            return cur
        cur = prods


def _is_normal_set(g: Group, members: np.ndarray) -> bool:
    mask = np.zeros(g.order, dtype=bool)
    mask[members] = True
    for h in members:
        conj = g.mul[g.mul[:, h], g.inv]
        if not mask[conj].all():
            return False
    return True


def _normality_witness(g: Group, members: np.ndarray):
    mask = np.zeros(g.order, dtype=bool)
    mask[members] = True
    for h in members:
        conj = g.mul[g.mul[:, h], g.inv]
        bad = np.flatnonzero(~mask[conj])
        if bad.size:
            x = int(bad[0])
            return (x, int(h), int(conj[x]))
    return None


def subgroup(g: Group, members, normal: bool | None = None) -> Subgroup:
    """Wrap a member set as a Subgroup, computing the normality flag if unknown."""
    members = np.unique(np.asarray(list(members), dtype=np.int64))
    if normal is None:
        normal = _is_normal_set(g, members)
    return Subgroup(g, tuple(int(x) for x in members), bool(normal), _mask_of(members))


def trivial_subgroup(g: Group) -> Subgroup:
    return Subgroup(g, (0,), True, 1)


def full_subgroup(g: Group) -> Subgroup:
    members = tuple(range(g.order))
    return Subgroup(g, members, True, (1 << g.order) - 1)


def subgroup_generated(g: Group, seed) -> Subgroup:
    """The smallest subgroup containing the seed elements."""
    members = _closure_members(g, seed)
    return subgroup(g, members)


def normal_closure(g: Group, seed) -> Subgroup:
    """The smallest normal subgroup containing the seed elements."""
    seed = np.asarray(list(seed), dtype=np.int64)
    if seed.size == 0:
        return trivial_subgroup(g)
    conj = np.unique(g.mul[g.mul[:, seed].T.reshape(-1), np.tile(g.inv, seed.size)])
    members = _closure_members(g, conj)
    # closure of a conjugation-stable set under products stays stable
    return Subgroup(g, tuple(int(x) for x in members), True, _mask_of(members))


def is_abelian(g: Group) -> bool:
    if g._abelian is None:
        g._abelian = bool(np.array_equal(g.mul, g.mul.T))
    return g._abelian


def center(g: Group) -> Subgroup:
    """Elements commuting with everything; always normal."""
    if g._center is None:
        members = np.flatnonzero((g.mul == g.mul.T).all(axis=1))
        g._center = Subgroup(g, tuple(int(x) for x in members), True, _mask_of(members))
    return g._center


def commutator(g: Group, a: Subgroup, b: Subgroup) -> Subgroup:
    """Subgroup generated by the commutators [x, y] for x in A, y in B."""
    if a.parent is not g or b.parent is not g:
        raise ValueError("subgroups belong to a different parent group")
    bm = b.member_array()
    seeds: list[np.ndarray] = []
    for x in a.members:
        t1 = g.mul[g.inv[x], g.inv[bm]]
        t2 = g.mul[t1, x]
        seeds.append(g.mul[t2, bm])
    members = _closure_members(g, np.unique(np.concatenate(seeds)))
    flag = True if (a.normal and b.normal) else None
    return subgroup(g, members, normal=flag)


def derived_subgroup(g: Group) -> Subgroup:
    if g._derived is None:
        g._derived = commutator(g, full_subgroup(g), full_subgroup(g))
    return g._derived


def conjugacy_classes(g: Group) -> ConjClasses:
    """Conjugacy classes in canonical order (identity, then size, then least index)."""
    if g._classes is not None:
        return g._classes
    n = g.order
    class_of = np.full(n, -1, dtype=np.int64)
    raw: list[np.ndarray] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        orbit = np.unique(g.mul[g.mul[:, x], g.inv])
        class_of[orbit] = len(raw)
        raw.append(orbit)
    order = sorted(range(len(raw)), key=lambda i: (int(raw[i][0]) != 0, len(raw[i]), int(raw[i][0])))
    remap = np.empty(len(raw), dtype=np.int64)
    for new, old in enumerate(order):
        remap[old] = new
    class_of = remap[class_of]
    classes = [raw[old] for old in order]
    result = ConjClasses(
        class_of=class_of.astype(np.int32),
        reps=tuple(int(c[0]) for c in classes),
        sizes=tuple(len(c) for c in classes),
        count=len(classes),
    )
    result.class_of.flags.writeable = False
    g._classes = result
    return result


def power_map(g: Group, classes: ConjClasses, j: int) -> tuple[int, ...]:
    """Per-class index of the class of rep**j (a class function of the class)."""
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    return tuple(int(classes.class_of[g.power(r, j)]) for r in classes.reps)


def exponent(g: Group) -> int:
    """lcm of the element orders; the root-of-unity order for character values."""
    if g._exponent is None:
        out = 1
        for o in set(int(x) for x in g.element_orders()):
            out = out * o // gcd(out, o)
        g._exponent = out
    return g._exponent


def quotient(g: Group, n_sub: Subgroup) -> tuple[Group, Projection]:
    """The quotient G/N on left cosets, with the canonical surjection.

    The coset of the identity is element 0 of the quotient; coset
    representatives are the least elements of their cosets.
    """
    if not n_sub.normal:
        witness = _normality_witness(g, n_sub.member_array())
        raise NormalityError(
            f"subgroup of order {n_sub.order} is not normal", witness=witness
        )
    n = g.order
    nm = n_sub.member_array()
    cos_index = np.full(n, -1, dtype=np.int64)
    reps: list[int] = []
    for x in range(n):
        if cos_index[x] >= 0:
            continue
        coset = g.mul[x, nm]
        cos_index[coset] = len(reps)
        reps.append(x)
    reps_arr = np.array(reps, dtype=np.int64)
    mul = cos_index[g.mul[np.ix_(reps_arr, reps_arr)]]
    labels = tuple(g.labels[r] for r in reps)
    q = _validated_group(mul, labels, f"{g.provenance}/N{n_sub.order}")
    proj = Projection(source=g, target=q, map=cos_index.astype(np.int32))
    proj.map.flags.writeable = False
    return q, proj


def subgroup_as_group(g: Group, m: Subgroup) -> tuple[Group, tuple[int, ...]]:
    """M with the inherited multiplication as a standalone group, plus the embedding."""
    mm = m.member_array()
    local = np.full(g.order, -1, dtype=np.int64)
    local[mm] = np.arange(mm.size)
    mul = local[g.mul[np.ix_(mm, mm)]]
    if (mul < 0).any():
        i, j = np.argwhere(mul < 0)[0]
        raise StructuralInputError(
            "closure", (int(mm[i]), int(mm[j])), "member set is not closed under multiplication"
        )
    labels = tuple(g.labels[x] for x in m.members)
    grp = _validated_group(mul, labels, f"{g.provenance}|sub{m.order}")
    return grp, m.members


# -- structural predicates -------------------------------------------------


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class StructureProfile:
    trivial: bool
    abelian: bool
    p_group_prime: int | None
    elementary_abelian: bool
    elementary_abelian_prime: int | None
    primes: tuple[int, ...]


def structure_profile(s: Subgroup) -> StructureProfile:
    """Flags for a subgroup: trivial / abelian / p-group / elementary abelian."""
    g = s.parent
    mm = s.member_array()
    trivial = s.order == 1
    sub = g.mul[np.ix_(mm, mm)]
    abelian = bool(np.array_equal(sub, sub.T))
    primes = _prime_factors(s.order)
    p_group_prime = primes[0] if len(primes) == 1 else None
    orders = g.element_orders()[mm]
    if trivial:
        elem, elem_p = True, None
    elif abelian and p_group_prime is not None and bool((orders[orders > 1] == p_group_prime).all()):
        elem, elem_p = True, p_group_prime
    else:
        elem, elem_p = False, None
    return StructureProfile(trivial, abelian, p_group_prime, elem, elem_p, primes)


@dataclass(frozen=True)
class CentralDecomposition:
    """G = P x Q with P the p-part and Q the central p'-part."""

    prime: int
    p_part: Subgroup
    p_prime_part: Subgroup
    holds: bool


def central_decomposition(g: Group) -> CentralDecomposition | None:
    """Split G as P x Q when G/Z(G) is a p-group.

    Returns None when no prime works (non-nilpotent-over-center groups).
    For the trivial central quotient (abelian G) the smallest prime
    divisor of |G| is used.
    """
    n = g.order
    if n == 1:
        return None
    z = center(g)
    q_order = n // z.order
    if q_order == 1:
        p = _prime_factors(n)[0]
    else:
        primes = _prime_factors(q_order)
        if len(primes) != 1:
            return None
        p = primes[0]
    orders = g.element_orders()
    p_elems = np.flatnonzero(np.array([_only_prime(int(o), p) for o in orders]))
    p_sub = subgroup_generated(g, p_elems)
    if p_sub.order != p_elems.size:
        return None  # p-elements do not close up; no direct decomposition
    q_elems = [x for x in z.members if gcd(int(orders[x]), p) == 1]
    q_sub = subgroup(g, q_elems, normal=True)
    holds = (
        p_sub.mask & q_sub.mask == 1
        and p_sub.order * q_sub.order == n
        and bool(
            np.array_equal(
                g.mul[np.ix_(p_sub.member_array(), q_sub.member_array())],
                g.mul[np.ix_(q_sub.member_array(), p_sub.member_array())].T,
            )
        )
    )
    return CentralDecomposition(p, p_sub, q_sub, holds)


def _only_prime(order: int, p: int) -> bool:
    while order % p == 0:
        order //= p
    return order == 1
