"""Executable property suite: the toolkit's statements as named machine checks.

Every algebraic statement the toolkit relies on is registered here as a
property with a short name, a human-readable statement, and a checker
that produces exactly one verdict: pass, fail (with a serializable
witness), or not-applicable (with a reason).  Properties quantified over
normal-subgroup pairs run exhaustively for lattices of at most
PAIR_SAMPLE_CAP members and over a seeded 200-pair sample above that.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from . import cyclotomic as cyc
from .chartable import CharacterTable, character_table, induce, inner_product
from .errors import SizeLimitError
from .groups import (
    Group,
    Subgroup,
    _prime_factors,
    center,
    central_decomposition,
    commutator,
    derived_subgroup,
    full_subgroup,
    is_abelian,
    quotient,
    structure_profile,
    subgroup,
    subgroup_as_group,
    subgroup_generated,
    trivial_subgroup,
)
from .series import (
    CentralChain,
    Classification,
    center_kernel_criterion,
    classify,
    epsilon_series,
    upsilon_series,
)
from .vanishing import (
    NormalLattice,
    irr_above,
    normal_lattice,
    product_subgroup,
    u_rel,
    u_rel_product,
    v_of_char,
    v_rel,
)

PAIR_SAMPLE_CAP = 200
PAIR_SAMPLE_SIZE = 200
CAMINA_MAX_ORDER = 64


@dataclass
class PropertyVerdict:
    name: str
    statement: str
    verdict: str  # "pass" | "fail" | "not-applicable"
    witness: dict | None = None
    notes: str | None = None
    instances: int = 0
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "verdict": self.verdict,
            "witness": self.witness,
            "notes": self.notes,
            "instances": self.instances,
        }


@dataclass
class PropertyReport:
    group: str
    order: int
    provenance: str
    seed: int
    sampled: bool
    lattice_members: int
    pair_count: int
    verdicts: tuple[PropertyVerdict, ...]

    @property
    def failures(self) -> int:
        return sum(1 for v in self.verdicts if v.verdict == "fail")

    def to_dict(self, with_timings: bool = False) -> dict:
        out = {
            "schema": "gvzkit/verify-report/v1",
            "group": {
                "descriptor": self.group,
                "order": self.order,
                "provenance": self.provenance,
            },
            "seed": self.seed,
            "sampled": self.sampled,
            "lattice_members": self.lattice_members,
            "pair_count": self.pair_count,
            "properties": [v.to_dict() for v in self.verdicts],
            "failures": self.failures,
            "timings": {v.name: round(v.seconds, 6) for v in self.verdicts}
            if with_timings
            else None,
        }
        return out


def _describe_subgroup(s: Subgroup) -> dict:
    return {"order": s.order, "members": [s.parent.labels[g] for g in s.members]}


class SuiteContext:
    """Shared state for one suite run: table, lattice, pair selection, caches."""

    def __init__(
        self,
        g: Group,
        table: CharacterTable | None = None,
        lattice: NormalLattice | None = None,
        seed: int = 0,
        camina_max_order: int = CAMINA_MAX_ORDER,
    ):
        self.g = g
        self.table = table if table is not None else character_table(g)
        self.lattice = lattice if lattice is not None else normal_lattice(g, self.table)
        self.seed = seed
        self.camina_max_order = camina_max_order
        self.full = full_subgroup(g)
        self.trivial = trivial_subgroup(g)
        self.z = center(g)
        self.derived = derived_subgroup(g)
        self.abelian = is_abelian(g)
        size = len(self.lattice)
        if size <= PAIR_SAMPLE_CAP:
            self.sampled = False
            self.pairs = [(i, j) for i in range(size) for j in range(size)]
        else:
            self.sampled = True
            rng = random.Random(seed)
            chosen = rng.sample(range(size * size), PAIR_SAMPLE_SIZE)
            self.pairs = sorted((c // size, c % size) for c in chosen)
        self._v: dict[int, Subgroup] = {}
        self._u: dict[int, Subgroup] = {}
        self._quotients: dict[int, tuple] = {}
        self._sub_tables: dict[int, tuple] = {}
        self._camina: dict[tuple[int, int], dict] = {}
        self._supports: list[np.ndarray] | None = None
        self._classification: Classification | None = None
        self._upsilon: CentralChain | None = None
        self._epsilon: CentralChain | None = None
        self._u_global: Subgroup | None = None
        self._v_global: Subgroup | None = None

    # -- cached operators --------------------------------------------------

    def v_of(self, s: Subgroup) -> Subgroup:
        got = self._v.get(s.mask)
        if got is None:
            got = self._v[s.mask] = v_rel(self.g, s, self.table)
        return got

    def u_of(self, s: Subgroup) -> Subgroup:
        got = self._u.get(s.mask)
        if got is None:
            got = self._u[s.mask] = u_rel(self.g, s, self.table)
        return got

    @property
    def v_global(self) -> Subgroup:
        if self._v_global is None:
            self._v_global = self.v_of(self.derived)
        return self._v_global

    @property
    def u_global(self) -> Subgroup:
        if self._u_global is None:
            self._u_global = self.u_of(self.z)
        return self._u_global

    def quotient_data(self, n_sub: Subgroup):
        """(Q, projection, table of Q), cached; the trivial quotient reuses G."""
        got = self._quotients.get(n_sub.mask)
        if got is None:
            if n_sub.order == 1:
                ident = np.arange(self.g.order, dtype=np.int32)
                from .groups import Projection

                got = (self.g, Projection(self.g, self.g, ident), self.table)
            else:
                q, proj = quotient(self.g, n_sub)
                got = (q, proj, character_table(q))
            self._quotients[n_sub.mask] = got
        return got

    def subgroup_table(self, m_sub: Subgroup):
        """(M as a group, embedding, table of M), cached; M = G reuses G."""
        got = self._sub_tables.get(m_sub.mask)
        if got is None:
            if m_sub.order == self.g.order:
                got = (self.g, tuple(range(self.g.order)), self.table)
            else:
                m_group, embed = subgroup_as_group(self.g, m_sub)
                got = (m_group, embed, character_table(m_group))
            self._sub_tables[m_sub.mask] = got
        return got

    @property
    def classification(self) -> Classification:
        if self._classification is None:
            self._classification = classify(self.g, self.table)
        return self._classification

    @property
    def upsilon(self) -> CentralChain:
        if self._upsilon is None:
            self._upsilon = upsilon_series(self.g, table=self.table, quotient_data=self.quotient_data)
        return self._upsilon

    @property
    def epsilon(self) -> CentralChain:
        if self._epsilon is None:
            self._epsilon = epsilon_series(self.g, self.table)
        return self._epsilon

    def members(self):
        return self.lattice.members

    def pair_subgroups(self):
        for i, j in self.pairs:
            yield self.lattice.members[i], self.lattice.members[j]

    def char_supports(self) -> list[np.ndarray]:
        """Per-character arrays of the elements where the character is nonzero."""
        if self._supports is None:
            table = self.table
            self._supports = [
                np.concatenate(
                    [
                        table.classes.members(c)
                        for c in range(table.classes.count)
                        if not ch.values[c].is_zero
                    ]
                )
                for ch in table.chars
            ]
        return self._supports


def _pair_witness(h: Subgroup, n: Subgroup, detail: str | None = None) -> dict:
    w = {"H": _describe_subgroup(h), "N": _describe_subgroup(n)}
    if detail:
        w["detail"] = detail
    return w


# -- individual property checks ------------------------------------------------
# Each checker returns (verdict, witness, notes, instances).


def _chk_v_contains(ctx: SuiteContext):
    count = 0
    for n in ctx.members():
        if n.order == 1:
            continue
        count += 1
        if not n.is_subset_of(ctx.v_of(n)):
            return "fail", _pair_witness(n, ctx.v_of(n)), None, count
    return "pass", None, None, count


def _chk_v_join_additive(ctx: SuiteContext):
    count = 0
    for h, n in ctx.pair_subgroups():
        count += 1
        hn = product_subgroup(ctx.g, h, n)
        lhs = ctx.v_of(hn)
        rhs = product_subgroup(ctx.g, ctx.v_of(h), ctx.v_of(n))
        if lhs.mask != rhs.mask:
            return "fail", _pair_witness(h, n, "V(G|HN) != V(G|H)V(G|N)"), None, count
    return "pass", None, None, count


def _chk_v_monotone(ctx: SuiteContext):
    count = 0
    for h, n in ctx.pair_subgroups():
        if not n.is_subset_of(h):
            continue
        count += 1
        if not ctx.v_of(n).is_subset_of(ctx.v_of(h)):
            return "fail", _pair_witness(h, n), None, count
    return "pass", None, None, count


def _chk_v_quotient(ctx: SuiteContext):
    count = 0
    for h, n in ctx.pair_subgroups():
        if not n.is_subset_of(h):
            continue
        count += 1
        q, proj, table_q = ctx.quotient_data(n)
        h_q = proj.image_subgroup(h)
        lhs = product_subgroup(q, v_rel(q, h_q, table_q), proj.image_subgroup(ctx.v_of(n)))
        rhs = proj.image_subgroup(ctx.v_of(h))
        if lhs.mask != rhs.mask:
            return "fail", _pair_witness(h, n, "V(G/N|H/N) V(G|N)N/N != V(G|H)/N"), None, count
    return "pass", None, None, count


def _chk_v_support_join(ctx: SuiteContext):
    count = 0
    supports = ctx.char_supports()
    for n in ctx.members():
        count += 1
        selected = irr_above(ctx.table, n)
        pieces = [np.array([0])] + [supports[i] for i in selected]
        oracle = subgroup_generated(ctx.g, np.concatenate(pieces))
        if oracle.mask != ctx.v_of(n).mask:
            return "fail", _pair_witness(n, oracle, "support join differs"), None, count
    return "pass", None, None, count


def _chk_galois_adjunction(ctx: SuiteContext):
    count = 0
    for h, n in ctx.pair_subgroups():
        count += 1
        lhs = h.is_subset_of(ctx.u_of(n))
        rhs = ctx.v_of(h).is_subset_of(n)
        if lhs != rhs:
            return "fail", _pair_witness(h, n, f"H<=U(G|N) is {lhs}, V(G|H)<=N is {rhs}"), None, count
    return "pass", None, None, count


def _chk_galois_unit(ctx: SuiteContext):
    count = 0
    for n in ctx.members():
        count += 1
        if not n.is_subset_of(ctx.u_of(ctx.v_of(n))):
            return "fail", _pair_witness(n, ctx.v_of(n)), None, count
    return "pass", None, None, count


def _chk_galois_counit(ctx: SuiteContext):
    count = 0
    for n in ctx.members():
        count += 1
        if not ctx.v_of(ctx.u_of(n)).is_subset_of(n):
            return "fail", _pair_witness(n, ctx.u_of(n)), None, count
    return "pass", None, None, count


def _chk_u_monotone(ctx: SuiteContext):
    count = 0
    for h, n in ctx.pair_subgroups():
        if not n.is_subset_of(h):
            continue
        count += 1
        if not ctx.u_of(n).is_subset_of(ctx.u_of(h)):
            return "fail", _pair_witness(h, n), None, count
    return "pass", None, None, count


def _chk_u_meet(ctx: SuiteContext):
    count = 0
    for h, n in ctx.pair_subgroups():
        count += 1
        meet_idx = ctx.lattice.index_of_mask(h.mask & n.mask)
        meet = ctx.lattice.members[meet_idx]
        if ctx.u_of(meet).mask != ctx.u_of(h).mask & ctx.u_of(n).mask:
            return "fail", _pair_witness(h, n, "U(G|H^N) != U(G|H) ^ U(G|N)"), None, count
    return "pass", None, None, count


def _chk_vuv(ctx: SuiteContext):
    count = 0
    for n in ctx.members():
        count += 1
        if ctx.v_of(ctx.u_of(ctx.v_of(n))).mask != ctx.v_of(n).mask:
            return "fail", _pair_witness(n, ctx.v_of(n)), None, count
    return "pass", None, None, count


def _chk_uvu(ctx: SuiteContext):
    count = 0
    for n in ctx.members():
        count += 1
        if ctx.u_of(ctx.v_of(ctx.u_of(n))).mask != ctx.u_of(n).mask:
            return "fail", _pair_witness(n, ctx.u_of(n)), None, count
    return "pass", None, None, count


def _chk_v_as_intersection(ctx: SuiteContext):
    count = 0
    full_mask = (1 << ctx.g.order) - 1
    for n in ctx.members():
        count += 1
        inter = full_mask
        for h in ctx.members():
            if n.is_subset_of(ctx.u_of(h)):
                inter &= h.mask
        if inter != ctx.v_of(n).mask:
            return "fail", _pair_witness(n, ctx.v_of(n)), None, count
    return "pass", None, None, count


def _chk_u_maximality(ctx: SuiteContext):
    if ctx.abelian:
        return "not-applicable", None, "stated for nonabelian groups", 0
    count = 0
    for h, n in ctx.pair_subgroups():
        if h.is_subset_of(ctx.u_of(n)):
            continue
        count += 1
        found = False
        for i in irr_above(ctx.table, h):
            if v_of_char(ctx.table, i).mask & ~n.mask:
                found = True
                break
        if not found:
            return "fail", _pair_witness(h, n, "no character above H escapes N"), None, count
    return "pass", None, None, count


def _chk_u_elementwise_product(ctx: SuiteContext):
    count = 0
    for n in ctx.members():
        count += 1
        prod = u_rel_product(ctx.g, n, ctx.table, ctx.lattice, v_cache=ctx.v_of)
        if prod.mask != ctx.u_of(n).mask:
            return "fail", _pair_witness(n, prod, "kernel test != lattice product"), None, count
    return "pass", None, None, count


def _chk_u_bounded(ctx: SuiteContext):
    # The bound needs N < G: U(G|G) is all of G, since every character
    # vacuously vanishes on the empty set G \ G.
    if ctx.abelian:
        return "not-applicable", None, "stated for nonabelian groups", 0
    count = 0
    for n in ctx.members():
        if n.order == ctx.g.order:
            continue
        count += 1
        if ctx.u_of(n).mask & ~(n.mask & ctx.derived.mask):
            return "fail", _pair_witness(n, ctx.u_of(n)), None, count
    return "pass", None, "proper N only; U(G|G) = G is the degenerate case", count


def _chk_u_inner_invariance(ctx: SuiteContext):
    if ctx.abelian:
        return "not-applicable", None, "full automorphism groups are out of scope; abelian case skipped", 0
    count = 0
    for n in ctx.members():
        count += 1
        if not ctx.u_of(n).normal:
            return "fail", _pair_witness(n, ctx.u_of(n)), None, count
    return (
        "pass",
        None,
        "partially checked: invariance under inner automorphisms (normality) only",
        count,
    )


def _chk_u_quotient(ctx: SuiteContext):
    count = 0
    for h, n in ctx.pair_subgroups():
        if not ctx.v_of(n).is_subset_of(h):
            continue
        count += 1
        q, proj, table_q = ctx.quotient_data(n)
        lhs = u_rel(q, proj.image_subgroup(h), table_q)
        rhs = proj.image_subgroup(ctx.u_of(h))
        if lhs.mask != rhs.mask:
            return "fail", _pair_witness(h, n, "U(G/N|H/N) != U(G|H)/N"), None, count
    return "pass", None, None, count


def _chk_u_elementary_abelian(ctx: SuiteContext):
    if ctx.abelian:
        return "not-applicable", None, "stated for nonabelian groups", 0
    profile = structure_profile(ctx.u_global)
    if not profile.elementary_abelian:
        return "fail", {"U": _describe_subgroup(ctx.u_global)}, None, 1
    return "pass", None, None, 1


def _chk_u_abelian_full(ctx: SuiteContext):
    if not ctx.abelian:
        return "not-applicable", None, "stated for abelian groups", 0
    if ctx.u_global.order != ctx.g.order:
        return "fail", {"U": _describe_subgroup(ctx.u_global)}, None, 1
    return "pass", None, None, 1


# -- Camina machinery -----------------------------------------------------------


def check_camina(
    ctx_or_group,
    m_sub: Subgroup,
    n_sub: Subgroup,
    table: CharacterTable | None = None,
    lattice: NormalLattice | None = None,
) -> dict:
    """Evaluate one triple (G, M, N) with 1 < N <= M, both normal.

    Side A decomposes every induced character from Irr(M|N) into
    irreducible constituents; side B is the vanishing criterion
    V(G|N) <= M.  The result records both sides, their agreement, and
    the center-intersection consequence when the quotient by M is not a
    prime-power group.
    """
    ctx = ctx_or_group if isinstance(ctx_or_group, SuiteContext) else SuiteContext(
        ctx_or_group, table, lattice
    )
    if not (n_sub.order > 1 and n_sub.is_subset_of(m_sub)):
        raise ValueError("check_camina requires 1 < N <= M")
    cached = ctx._camina.get((m_sub.mask, n_sub.mask))
    if cached is not None:
        return cached
    g = ctx.g
    m_group, embed, m_table = ctx.subgroup_table(m_sub)
    local_of = {gidx: i for i, gidx in enumerate(embed)}
    n_local = subgroup(m_group, [local_of[x] for x in n_sub.members])
    homogeneous = True
    witness_theta = None
    for ti in irr_above(m_table, n_local):
        theta = m_table.chars[ti]
        induced = induce(ctx.table, embed, m_table, theta.values)
        mults = [inner_product(ctx.table, induced, ch) for ch in ctx.table.chars]
        total = sum(m * ch.degree for m, ch in zip(mults, ctx.table.chars))
        if total != (g.order // m_sub.order) * theta.degree:
            raise ValueError("induced character decomposition lost degree")
        constituents = sum(1 for m in mults if m)
        if constituents != 1:
            homogeneous = False
            witness_theta = ti
            break
    side_b = ctx.v_of(n_sub).is_subset_of(m_sub)
    quotient_primes = _prime_factors(g.order // m_sub.order)
    nm2_applicable = homogeneous and len(quotient_primes) >= 2
    nm2_holds = (n_sub.mask & ctx.z.mask) == 1 if nm2_applicable else None
    result = {
        "homogeneous_induction": homogeneous,
        "vanishing_criterion": side_b,
        "equivalent": homogeneous == side_b,
        "witness_theta": witness_theta,
        "nm2_applicable": nm2_applicable,
        "nm2_holds": nm2_holds,
    }
    ctx._camina[(m_sub.mask, n_sub.mask)] = result
    return result


def _camina_pairs(ctx: SuiteContext):
    # Respects the suite-wide pair sampling on oversized lattices.
    for m, n in ctx.pair_subgroups():
        if n.order > 1 and n.is_subset_of(m):
            yield m, n


def _chk_camina_equivalence(ctx: SuiteContext):
    if ctx.g.order > ctx.camina_max_order:
        return (
            "not-applicable",
            None,
            f"induction oracle capped at order {ctx.camina_max_order}",
            0,
        )
    count = 0
    for m, n in _camina_pairs(ctx):
        count += 1
        res = check_camina(ctx, m, n)
        if not res["equivalent"]:
            return "fail", _pair_witness(m, n, f"sides disagree: {res}"), None, count
    return "pass", None, None, count


def _chk_camina_center(ctx: SuiteContext):
    if ctx.g.order > ctx.camina_max_order:
        return (
            "not-applicable",
            None,
            f"induction oracle capped at order {ctx.camina_max_order}",
            0,
        )
    count = 0
    for m, n in _camina_pairs(ctx):
        res = check_camina(ctx, m, n)
        if res["nm2_applicable"]:
            count += 1
            if not res["nm2_holds"]:
                return "fail", _pair_witness(m, n, "N meets the center"), None, count
    if count == 0:
        return "not-applicable", None, "hypothesis never fires on this lattice", 0
    return "pass", None, None, count


# -- theorem-level checks ---------------------------------------------------------


def _chk_vz_iff_u_derived(ctx: SuiteContext):
    lhs = ctx.v_global.mask == ctx.z.mask
    rhs = ctx.u_global.mask == ctx.derived.mask
    if lhs != rhs:
        return (
            "fail",
            {
                "V(G)": _describe_subgroup(ctx.v_global),
                "U(G)": _describe_subgroup(ctx.u_global),
            },
            None,
            1,
        )
    return "pass", None, f"both sides {lhs}", 1


def _chk_u_positive_decomposition(ctx: SuiteContext):
    if ctx.u_global.order == 1:
        return "pass", None, "vacuous: U(G) = 1", 1
    decomp = central_decomposition(ctx.g)
    if decomp is None or not decomp.holds:
        return "fail", {"U": _describe_subgroup(ctx.u_global)}, None, 1
    if ctx.abelian:
        return (
            "pass",
            None,
            "decomposition only; the U(G) = U(P) clause is stated for nonabelian groups",
            1,
        )
    p_group, embed, p_table = ctx.subgroup_table(decomp.p_part)
    u_p = u_rel(p_group, center(p_group), p_table)
    embedded_mask = 0
    for x in u_p.members:
        embedded_mask |= 1 << embed[x]
    if embedded_mask != ctx.u_global.mask:
        return (
            "fail",
            {
                "U(G)": _describe_subgroup(ctx.u_global),
                "U(P) order": u_p.order,
            },
            None,
            1,
        )
    return "pass", None, f"p = {decomp.prime}", 1


def _chk_u_positive_sylow(ctx: SuiteContext):
    lhs = ctx.u_global.order > 1
    decomp = central_decomposition(ctx.g)
    if decomp is None or not decomp.holds:
        rhs = False
    else:
        p_group, _, p_table = ctx.subgroup_table(decomp.p_part)
        rhs = u_rel(p_group, center(p_group), p_table).order > 1
    if lhs != rhs:
        return "fail", {"U(G) order": ctx.u_global.order, "sylow side": rhs}, None, 1
    return "pass", None, f"both sides {lhs}", 1


def _is_prime_power(n: int) -> bool:
    return len(_prime_factors(n)) <= 1


def _chk_series_equivalence(ctx: SuiteContext):
    if not _is_prime_power(ctx.g.order):
        return "not-applicable", None, "stated for p-groups", 0
    flags = (ctx.classification.nested_gvz, ctx.upsilon.reached, ctx.epsilon.reached)
    if len(set(flags)) != 1:
        return (
            "fail",
            {"nested_gvz": flags[0], "ascending_reached": flags[1], "descending_reached": flags[2]},
            None,
            1,
        )
    return "pass", None, f"all three {flags[0]}", 1


def _chk_series_identities(ctx: SuiteContext):
    if not _is_prime_power(ctx.g.order) or ctx.g.order == 1:
        return "not-applicable", None, "stated for nontrivial p-groups", 0
    if not ctx.classification.nested_gvz:
        return "not-applicable", None, "group is not nested GVZ", 0
    chain = ctx.classification.chain_of_centers
    n_len = len(chain) - 1
    expected_ups = [commutator(ctx.g, chain[n_len - i], ctx.full) for i in range(n_len + 1)]
    expected_ups.append(ctx.full)
    ups = ctx.upsilon.terms
    if len(ups) != len(expected_ups) or any(
        a.mask != b.mask for a, b in zip(ups, expected_ups)
    ):
        return (
            "fail",
            {"ascending": [s.order for s in ups], "expected": [s.order for s in expected_ups]},
            None,
            1,
        )
    expected_eps = list(chain) + [ctx.trivial]
    eps = ctx.epsilon.terms
    if len(eps) != len(expected_eps) or any(
        a.mask != b.mask for a, b in zip(eps, expected_eps)
    ):
        return (
            "fail",
            {"descending": [s.order for s in eps], "expected": [s.order for s in expected_eps]},
            None,
            1,
        )
    cd = ctx.classification.cd
    if len(cd) != n_len + 1:
        return "fail", {"cd": list(cd), "chain_length": n_len}, None, 1
    expected_cd = sorted(isqrt(ctx.g.order // x.order) for x in chain)
    if list(cd) != expected_cd:
        return "fail", {"cd": list(cd), "expected": expected_cd}, None, 1
    return "pass", None, f"chain length {n_len}", 1


def _chk_u_of_nested_chain(ctx: SuiteContext):
    if not _is_prime_power(ctx.g.order) or ctx.abelian:
        return "not-applicable", None, "stated for nonabelian p-groups", 0
    if not ctx.classification.nested_gvz:
        return "not-applicable", None, "group is not nested GVZ", 0
    chain = ctx.classification.chain_of_centers
    expected = commutator(ctx.g, chain[-2], ctx.full)
    if ctx.u_global.mask != expected.mask:
        return (
            "fail",
            {"U(G)": _describe_subgroup(ctx.u_global), "expected": _describe_subgroup(expected)},
            None,
            1,
        )
    return "pass", None, None, 1


def _chk_quotient_reduction(ctx: SuiteContext):
    if ctx.u_global.order == 1:
        return "not-applicable", None, "U(G) = 1 makes the quotient G itself", 0
    q, _, table_q = ctx.quotient_data(ctx.u_global)
    lhs = ctx.classification.nested_gvz
    rhs = classify(q, table_q).nested_gvz
    if lhs != rhs:
        return "fail", {"group": lhs, "quotient": rhs}, None, 1
    return "pass", None, f"both {lhs}", 1


def _chk_center_kernel_test(ctx: SuiteContext):
    if not ctx.classification.nested:
        return "not-applicable", None, "group is not nested", 0
    verdicts = center_kernel_criterion(ctx.g, ctx.table, ctx.classification.chain_of_centers)
    for i, ok in enumerate(verdicts):
        if not ok:
            return "fail", {"char_index": i, "degree": ctx.table.chars[i].degree}, None, len(verdicts)
    return "pass", None, None, len(verdicts)


# -- series structure checks ------------------------------------------------------


def _chk_ascending_quotients(ctx: SuiteContext):
    # Centrality holds at every step.  Elementary-abelian quotients are an
    # ascending exponent-p series for [G,G]: once the ambient quotient
    # turns abelian the step is the full abelianization and the claim
    # no longer applies.
    count = 0
    terms = ctx.upsilon.terms
    for cur, nxt in zip(terms, terms[1:]):
        count += 1
        q, proj, _ = ctx.quotient_data(cur)
        img = proj.image_subgroup(nxt)
        if not img.is_subset_of(center(q)):
            return "fail", {"step": count, "quotient_order": img.order}, None, count
        if is_abelian(q):
            continue
        if not structure_profile(img).elementary_abelian:
            return "fail", {"step": count, "quotient_order": img.order}, None, count
    return "pass", None, "elementary-abelian clause applies below the derived subgroup", count


def _chk_descending_bounds(ctx: SuiteContext):
    count = 0
    terms = ctx.epsilon.terms
    for cur, nxt in zip(terms, terms[1:]):
        count += 1
        if nxt.mask & ~cur.mask:
            return "fail", {"step": count}, None, count
        strictly_above_z = ctx.z.is_subset_of(cur) and cur.order > ctx.z.order
        if strictly_above_z and not ctx.z.is_subset_of(nxt):
            return "fail", {"step": count, "detail": "term passed below the center"}, None, count
    return "pass", None, None, count


def _chk_nested_descending_quotients(ctx: SuiteContext):
    # A descending exponent-p series for G/Z(G): the claim covers the
    # steps above the center; the final drop from Z(G) to 1 is exempt.
    if not ctx.classification.nested:
        return "not-applicable", None, "group is not nested", 0
    count = 0
    terms = ctx.epsilon.terms
    for cur, nxt in zip(terms, terms[1:]):
        if not ctx.z.is_subset_of(nxt):
            continue
        count += 1
        _, proj, _ = ctx.quotient_data(nxt)
        img = proj.image_subgroup(cur)
        if not structure_profile(img).elementary_abelian:
            return "fail", {"step": count, "quotient_order": img.order}, None, count
    if count == 0:
        return "not-applicable", None, "no descending step stays above the center", 0
    return "pass", None, "steps above the center; the drop below Z(G) is exempt", count


def _chk_descending_quotient_bound(ctx: SuiteContext):
    terms = ctx.epsilon.terms
    ell = None
    for i, t in enumerate(terms):
        if t.mask == ctx.z.mask:
            ell = i  # term index i corresponds to epsilon_{i+1}
            break
    if ell is None:
        return "not-applicable", None, "no descending term equals the center", 0
    count = 0
    for n in ctx.members():
        if not ctx.v_of(n).is_subset_of(ctx.z):
            continue
        count += 1
        q, _, table_q = ctx.quotient_data(n)
        chain_q = epsilon_series(q, table_q).terms
        term_q = chain_q[min(ell, len(chain_q) - 1)]
        if not term_q.is_subset_of(center(q)):
            return "fail", _pair_witness(n, term_q), None, count
    return "pass", None, None, count


def _chk_commutator_pullback_witness(ctx: SuiteContext):
    found = None
    for n in ctx.members():
        if not ctx.z.is_subset_of(n):
            continue
        comm = commutator(ctx.g, n, ctx.full)
        v = ctx.v_of(comm) if ctx.lattice.index_of_mask(comm.mask) is not None else v_rel(
            ctx.g, comm, ctx.table
        )
        if v.mask & ~n.mask:
            found = n
            break
    note = (
        f"witness found: N of order {found.order}" if found is not None else "no witness in this lattice"
    )
    return "pass", None, note, sum(1 for n in ctx.members() if ctx.z.is_subset_of(n))


# -- registry and the suite runner --------------------------------------------------


@dataclass(frozen=True)
class PropertySpec:
    suite: str
    name: str
    statement: str
    checker: object = field(compare=False)


REGISTRY: tuple[PropertySpec, ...] = (
    PropertySpec("vprops", "v_rel_contains_argument", "N <= V(G|N) for every normal N > 1", _chk_v_contains),
    PropertySpec("vprops", "v_rel_join_additive", "V(G|HN) = V(G|H) V(G|N)", _chk_v_join_additive),
    PropertySpec("vprops", "v_rel_monotone", "N <= H implies V(G|N) <= V(G|H)", _chk_v_monotone),
    PropertySpec(
        "vprops",
        "v_rel_quotient_compatible",
        "V(G/N|H/N) (V(G|N)N/N) = V(G|H)/N for N <= H",
        _chk_v_quotient,
    ),
    PropertySpec(
        "vprops",
        "v_rel_equals_support_join",
        "V(G|N) is generated by the supports of the characters above N",
        _chk_v_support_join,
    ),
    PropertySpec("galois", "galois_adjunction", "H <= U(G|N) iff V(G|H) <= N", _chk_galois_adjunction),
    PropertySpec("galois", "galois_unit", "N <= U(G|V(G|N))", _chk_galois_unit),
    PropertySpec("galois", "galois_counit", "V(G|U(G|N)) <= N", _chk_galois_counit),
    PropertySpec("galois", "u_rel_monotone", "N <= H implies U(G|N) <= U(G|H)", _chk_u_monotone),
    PropertySpec(
        "galois", "u_rel_meet_distributive", "U(G|H^N) = U(G|H) ^ U(G|N)", _chk_u_meet
    ),
    PropertySpec("galois", "vuv_identity", "V(G|U(G|V(G|N))) = V(G|N)", _chk_vuv),
    PropertySpec("galois", "uvu_identity", "U(G|V(G|U(G|N))) = U(G|N)", _chk_uvu),
    PropertySpec(
        "galois",
        "v_rel_as_intersection",
        "V(G|N) is the intersection of all normal H with N <= U(G|H)",
        _chk_v_as_intersection,
    ),
    PropertySpec(
        "ulemmas",
        "u_rel_maximality",
        "every normal H escaping U(G|N) has a character above H not vanishing off N",
        _chk_u_maximality,
    ),
    PropertySpec(
        "ulemmas",
        "u_rel_elementwise_matches_product",
        "the elementwise kernel test for U(G|N) equals the lattice-product definition",
        _chk_u_elementwise_product,
    ),
    PropertySpec("ulemmas", "u_rel_bounded_by_derived", "U(G|N) <= N ^ [G,G]", _chk_u_bounded),
    PropertySpec(
        "ulemmas",
        "u_rel_inner_invariance",
        "U(G|N) is invariant under inner automorphisms",
        _chk_u_inner_invariance,
    ),
    PropertySpec(
        "ulemmas",
        "u_rel_quotient_compatible",
        "U(G/N|H/N) = U(G|H)/N whenever V(G|N) <= H",
        _chk_u_quotient,
    ),
    PropertySpec(
        "ulemmas", "u_global_elementary_abelian", "U(G) is elementary abelian", _chk_u_elementary_abelian
    ),
    PropertySpec("ulemmas", "u_global_abelian_full", "U(G) = G for abelian G", _chk_u_abelian_full),
    PropertySpec(
        "camina",
        "camina_induction_criterion",
        "homogeneous induction from Irr(M|N) is equivalent to V(G|N) <= M",
        _chk_camina_equivalence,
    ),
    PropertySpec(
        "camina",
        "camina_center_avoidance",
        "homogeneous pairs with a non-prime-power quotient force N ^ Z(G) = 1",
        _chk_camina_center,
    ),
    PropertySpec(
        "theorems", "vz_iff_u_is_derived", "V(G) = Z(G) iff U(G) = [G,G]", _chk_vz_iff_u_derived
    ),
    PropertySpec(
        "theorems",
        "u_positive_central_decomposition",
        "U(G) > 1 forces G = P x Q with abelian coprime Q, and U(G) = U(P)",
        _chk_u_positive_decomposition,
    ),
    PropertySpec(
        "theorems",
        "u_positive_sylow_criterion",
        "U(G) > 1 iff G over its center is a p-group whose p-part P has U(P) > 1",
        _chk_u_positive_sylow,
    ),
    PropertySpec(
        "theorems",
        "nested_gvz_series_equivalence",
        "nested GVZ, ascending series reaching G, descending series reaching 1 agree",
        _chk_series_equivalence,
    ),
    PropertySpec(
        "theorems",
        "nested_gvz_series_identities",
        "series terms equal the chain commutators and centers; |cd| = chain length + 1",
        _chk_series_identities,
    ),
    PropertySpec(
        "theorems",
        "u_global_of_nested_chain",
        "U(G) = [X_{n-1}, G] for nonabelian nested GVZ p-groups",
        _chk_u_of_nested_chain,
    ),
    PropertySpec(
        "theorems",
        "nested_gvz_quotient_reduction",
        "G is nested GVZ iff G/U(G) is, when U(G) > 1",
        _chk_quotient_reduction,
    ),
    PropertySpec(
        "theorems",
        "center_membership_kernel_test",
        "Z(chi) = X_i iff [X_i,G] <= ker(chi) and [X_{i-1},G] escapes ker(chi)",
        _chk_center_kernel_test,
    ),
    PropertySpec(
        "series",
        "ascending_quotients_central_elementary",
        "ascending-series quotients are central and elementary abelian",
        _chk_ascending_quotients,
    ),
    PropertySpec(
        "series",
        "descending_series_bounds",
        "descending terms decrease and stay above the center until it is reached",
        _chk_descending_bounds,
    ),
    PropertySpec(
        "series",
        "nested_descending_quotients_elementary",
        "descending-series quotients of nested groups are elementary abelian",
        _chk_nested_descending_quotients,
    ),
    PropertySpec(
        "series",
        "descending_quotient_bound",
        "if a descending term equals Z(G) and V(G|N) <= Z(G), the same term of G/N sits in Z(G/N)",
        _chk_descending_quotient_bound,
    ),
    PropertySpec(
        "series",
        "commutator_pullback_witness",
        "search for normal N >= Z(G) with V(G|[N,G]) escaping N (informational)",
        _chk_commutator_pullback_witness,
    ),
)

SUITE_NAMES = tuple(dict.fromkeys(spec.suite for spec in REGISTRY))


def _select(selection) -> list[PropertySpec]:
    if selection in (None, "all", {"all"}):
        return list(REGISTRY)
    if isinstance(selection, str):
        tokens = {t.strip() for t in selection.split(",") if t.strip()}
    else:
        tokens = set(selection)
    if "all" in tokens:
        return list(REGISTRY)
    known = {s.suite for s in REGISTRY} | {s.name for s in REGISTRY}
    unknown = tokens - known
    if unknown:
        raise ValueError(f"unknown suite or property names: {sorted(unknown)}")
    return [s for s in REGISTRY if s.suite in tokens or s.name in tokens]


def run_suite(
    g: Group,
    selection="all",
    *,
    table: CharacterTable | None = None,
    lattice: NormalLattice | None = None,
    seed: int = 0,
    camina_max_order: int = CAMINA_MAX_ORDER,
    ctx: SuiteContext | None = None,
) -> PropertyReport:
    """Run the selected properties over one group and collect a report."""
    specs = _select(selection)
    if ctx is None:
        ctx = SuiteContext(g, table, lattice, seed=seed, camina_max_order=camina_max_order)
    verdicts = []
    for spec in specs:
        t0 = time.perf_counter()
        verdict, witness, notes, instances = spec.checker(ctx)
        verdicts.append(
            PropertyVerdict(
                name=spec.name,
                statement=spec.statement,
                verdict=verdict,
                witness=witness,
                notes=notes,
                instances=instances,
                seconds=time.perf_counter() - t0,
            )
        )
    return PropertyReport(
        group=g.descriptor,
        order=g.order,
        provenance=g.provenance,
        seed=seed,
        sampled=ctx.sampled,
        lattice_members=len(ctx.lattice),
        pair_count=len(ctx.pairs),
        verdicts=tuple(verdicts),
    )


# -- spec-surface wrappers -----------------------------------------------------------


def check_vprops(g, table, lattice, seed: int = 0) -> list[PropertyVerdict]:
    return list(run_suite(g, "vprops", table=table, lattice=lattice, seed=seed).verdicts)


def check_galois(g, table, lattice, seed: int = 0) -> list[PropertyVerdict]:
    return list(run_suite(g, "galois", table=table, lattice=lattice, seed=seed).verdicts)


def check_u_lemmas(g, table, lattice, seed: int = 0) -> list[PropertyVerdict]:
    return list(run_suite(g, "ulemmas", table=table, lattice=lattice, seed=seed).verdicts)


def check_theorems(g, table, lattice=None, seed: int = 0) -> list[PropertyVerdict]:
    return list(run_suite(g, "theorems", table=table, lattice=lattice, seed=seed).verdicts)
