"""Exact irreducible character tables via the class-algebra method.

Pipeline: class-algebra structure constants -> simultaneous eigenvector
splitting of the class matrices over a suitable prime field -> exact
degrees -> discrete-Fourier multiplicity lift of each character value to
a cyclotomic integer.  The finite-field stage is scaffolding only; every
published value is an exact element of Z[zeta_e].

Tables are validated eagerly: character count, sum of squared degrees,
and both orthogonality relations are checked with exact arithmetic
before a table is returned.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import cyclotomic as cyc
from .cyclotomic import CycInt, conjugate, from_multiplicities, recognize
from .errors import InternalCheckError, SizeLimitError
from .groups import (
    ConjClasses,
    Group,
    Subgroup,
    conjugacy_classes,
    exponent,
    subgroup,
)

MAX_CLASS_COUNT = 256
PRIME_SEARCH_LIMIT = 10**6


@dataclass(frozen=True)
class ClassConstants:
    """Class-algebra structure constants a[i][j][t].

    a[i][j][t] counts pairs (x, y) in C_i x C_j with xy = z for one fixed
    z in C_t; the count is independent of the chosen z.
    """

    a: np.ndarray  # (k, k, k) int64

    @property
    def count(self) -> int:
        return self.a.shape[0]

    def matrix(self, i: int) -> np.ndarray:
        """The class matrix M_i with (M_i)[j][t] = a[i][j][t]."""
        return self.a[i]


def class_constants(g: Group, classes: ConjClasses) -> ClassConstants:
    k = classes.count
    if k > MAX_CLASS_COUNT:
        raise SizeLimitError(
            f"{k} conjugacy classes exceed the dense class-constants limit {MAX_CLASS_COUNT}", k
        )
    n = g.order
    a = np.zeros((k, k, k), dtype=np.int64)
    xs = np.arange(n)
    ci = classes.class_of[xs]
    for t, z in enumerate(classes.reps):
        ys = g.mul[g.inv[xs], z]
        np.add.at(a[:, :, t], (ci, classes.class_of[ys]), 1)
    return ClassConstants(a)


def choose_dixon_prime(g: Group) -> int:
    """Smallest prime p with p = 1 (mod exp(G)) and p > 2*sqrt(|G|)."""
    e = exponent(g)
    bound = 2 * math.isqrt(4 * g.order)  # floor(2*sqrt(n)) up to integer fuzz
    p = e + 1 if e > 1 else 2
    while p <= PRIME_SEARCH_LIMIT:
        if p * p > 4 * g.order and (e == 1 or p % e == 1) and _is_prime(p):
            return p
        p += e if e > 1 else 1
    raise InternalCheckError(f"no usable prime below {PRIME_SEARCH_LIMIT} (exponent {e}, bound {bound})")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- F_p linear algebra -------------------------------------------------------


def _minv(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def _rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = mat.copy() % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for rr in range(r, rows):
            if m[rr, c] % p:
                piv = rr
                break
        if piv is None:
            continue
        if piv != r:
            m[[piv, r]] = m[[r, piv]]
        m[r] = m[r] * _minv(m[r, c], p) % p
        for rr in range(rows):
            if rr != r and m[rr, c]:
                m[rr] = (m[rr] - m[rr, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m[: len(pivots)], pivots


def _nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Row basis of {x : mat @ x = 0 (mod p)}."""
    rref, pivots = _rref(mat, p)
    cols = mat.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-rref[r, fc]) % p
    return basis


def _charpoly(mat: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial over F_p, ascending coefficients, monic.

    Reduces to upper Hessenberg form by similarity, then applies the
    standard leading-minor recurrence.
    """
    h = mat.copy() % p
    n = h.shape[0]
    for j in range(n - 2):
        piv = None
        for r in range(j + 1, n):
            if h[r, j] % p:
                piv = r
                break
        if piv is None:
            continue
        if piv != j + 1:
            h[[piv, j + 1]] = h[[j + 1, piv]]
            h[:, [piv, j + 1]] = h[:, [j + 1, piv]]
        inv = _minv(h[j + 1, j], p)
        for r in range(j + 2, n):
            f = h[r, j] * inv % p
            if f:
                h[r] = (h[r] - f * h[j + 1]) % p
                h[:, j + 1] = (h[:, j + 1] + f * h[:, r]) % p
    polys: list[list[int]] = [[1]]  # p_0 = 1
    for m in range(1, n + 1):
        d = int(h[m - 1, m - 1])
        prev = polys[m - 1]
        cur = [(-d * c) % p for c in prev] + [0]
        for i in range(1, m):
            cur[i] = (cur[i] + prev[i - 1]) % p
        cur[m] = prev[m - 1] % p
        run = 1
        for i in range(m - 1, 0, -1):
            run = run * int(h[i, i - 1]) % p
            coef = int(h[i - 1, m - 1]) * run % p
            if coef:
                pi = polys[i - 1]
                for t, c in enumerate(pi):
                    cur[t] = (cur[t] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _poly_eval(coeffs: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def split_eigenspaces(constants: ClassConstants, p: int) -> list[np.ndarray]:
    """Simultaneous one-dimensional eigenvectors of the class matrices over F_p.

    Maintains a list of invariant subspaces (row bases in reduced echelon
    form); each class matrix splits every still-reducible subspace into
    eigenspaces, eigenvalues found by exhaustive root search of the
    characteristic polynomial.  Ends with k one-dimensional spaces whose
    normalized spanning vectors are the central characters mod p.
    """
    k = constants.count
    spaces: list[tuple[np.ndarray, list[int]]] = [_rref(np.eye(k, dtype=np.int64), p)]
    mats = [constants.matrix(i) % p for i in range(k)]
    for i in range(1, k):
        if all(b.shape[0] == 1 for b, _ in spaces):
            break
        mt = mats[i].T % p
        new_spaces: list[tuple[np.ndarray, list[int]]] = []
        for basis, pivots in spaces:
            if basis.shape[0] == 1:
                new_spaces.append((basis, pivots))
                continue
            images = basis @ mt % p  # row b -> M_i b, as rows
            restr = images[:, pivots] % p
            if not np.array_equal(restr @ basis % p, images):
                raise InternalCheckError("class matrix does not preserve an invariant subspace")
            cp = _charpoly(restr, p)
            roots = [x for x in range(p) if _poly_eval(cp, x, p) == 0]
            dim_sum = 0
            for lam in roots:
                coords = _nullspace((restr.T - lam * np.eye(restr.shape[0], dtype=np.int64)) % p, p)
                if coords.shape[0] == 0:
                    continue
                vectors = coords @ basis % p
                new_spaces.append(_rref(vectors, p))
                dim_sum += coords.shape[0]
            if dim_sum != basis.shape[0]:
                raise InternalCheckError("eigenspace dimensions do not fill an invariant subspace")
        spaces = new_spaces
    if any(b.shape[0] != 1 for b, _ in spaces):
        raise InternalCheckError("eigenspace splitting stalled above dimension one")
    vectors = []
    for basis, _ in spaces:
        w = basis[0] % p
        if w[0] % p == 0:
            raise InternalCheckError("central character with zero identity coordinate")
        vectors.append(w * _minv(w[0], p) % p)
    if len({tuple(int(x) for x in w) for w in vectors}) != k:
        raise InternalCheckError("central characters are not pairwise distinct")
    return vectors


def _inverse_classes(g: Group, classes: ConjClasses) -> tuple[int, ...]:
    return tuple(int(classes.class_of[g.inv[r]]) for r in classes.reps)


def degrees_mod_p(eigenvectors, g: Group, classes: ConjClasses, p: int) -> list[int]:
    """Exact character degrees from the central characters mod p."""
    n = g.order
    inv_cls = _inverse_classes(g, classes)
    inv_sizes = [_minv(s, p) for s in classes.sizes]
    # least square roots mod p
    sqrt_of = {}
    for x in range((p - 1) // 2, 0, -1):
        sqrt_of[x * x % p] = x
    degrees = []
    for w in eigenvectors:
        s = 0
        for i in range(classes.count):
            s = (s + int(w[i]) * int(w[inv_cls[i]]) % p * inv_sizes[i]) % p
        d2 = n % p * _minv(s, p) % p
        d = sqrt_of.get(d2)
        if d is None:
            raise InternalCheckError("degree has no square root mod p")
        if d * d > n:
            raise InternalCheckError(f"degree candidate {d} exceeds sqrt(|G|)")
        degrees.append(d)
    if sum(d * d for d in degrees) != n:
        raise InternalCheckError("degree squares do not sum to the group order")
    return degrees


def _least_primitive_root_of_unity(e: int, p: int) -> int:
    if e == 1:
        return 1
    prime_divs = set()
    m = e
    q = 2
    while q * q <= m:
        if m % q == 0:
            prime_divs.add(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        prime_divs.add(m)
    for z in range(2, p):
        if pow(z, e, p) == 1 and all(pow(z, e // q, p) != 1 for q in prime_divs):
            return z
    raise InternalCheckError(f"no primitive {e}-th root of unity mod {p}")


def lift_values(
    eigenvector, degree: int, g: Group, classes: ConjClasses, p: int, e: int, z: int | None = None
) -> tuple[CycInt, ...]:
    """Lift one character's values to exact cyclotomic integers.

    For each class representative the mod-p values on its power chain
    determine, via a length-e discrete Fourier sum, the multiplicity of
    each e-th root of unity among the representing matrix's eigenvalues.
    Multiplicities are bounded by the degree, hence below p, hence exact.
    """
    if z is None:
        z = _least_primitive_root_of_unity(e, p)
    inv_e = _minv(e % p, p)
    theta = [degree * int(eigenvector[c]) % p * _minv(classes.sizes[c], p) % p for c in range(classes.count)]
    zpow = [pow(z, t, p) for t in range(e)]
    zinv = [zpow[(-t) % e] for t in range(e)]
    values = []
    for c in range(classes.count):
        rep = classes.reps[c]
        chain = []
        cur = 0
        for _ in range(e):
            chain.append(theta[classes.class_of[cur]])
            cur = int(g.mul[cur, rep])
        mult = []
        for kk in range(e):
            s = 0
            for j in range(e):
                s = (s + chain[j] * zinv[j * kk % e]) % p
            m = s * inv_e % p
            if m > degree:
                raise InternalCheckError(
                    f"lifted multiplicity {m} exceeds degree {degree} (class {c})"
                )
            mult.append(m)
        if sum(mult) != degree:
            raise InternalCheckError("eigenvalue multiplicities do not sum to the degree")
        values.append(from_multiplicities(e, mult))
    return tuple(values)


# -- characters and tables ----------------------------------------------------


@dataclass(eq=False)
class Character:
    """One irreducible character: exact per-class values plus cached subgroups."""

    group: Group
    degree: int
    values: tuple[CycInt, ...]
    kernel: Subgroup
    center: Subgroup
    vanishing_off: Subgroup | None = field(default=None, compare=False)

    def value_at_class(self, c: int) -> CycInt:
        return self.values[c]

    def sort_key(self):
        return (self.degree, tuple(v.coeffs for v in self.values))


@dataclass(eq=False)
class ClassFunction:
    """A (generally reducible) class function, e.g. an induced character."""

    group: Group
    values: tuple[CycInt, ...]

    @property
    def degree_value(self) -> CycInt:
        return self.values[0]


@dataclass(eq=False)
class CharacterTable:
    group: Group
    classes: ConjClasses
    e: int
    p: int
    chars: tuple[Character, ...]

    @property
    def count(self) -> int:
        return len(self.chars)

    def centralizer_size(self, c: int) -> int:
        return self.group.order // self.classes.sizes[c]

    def degrees(self) -> tuple[int, ...]:
        return tuple(ch.degree for ch in self.chars)


def kernel_of(g: Group, classes: ConjClasses, degree: int, values) -> Subgroup:
    """{g : chi(g) = chi(1)}; normal since it is a union of classes."""
    members = [np.array([0])]
    for c in range(classes.count):
        if c and recognize(values[c]) == degree:
            members.append(classes.members(c))
    keep = np.unique(np.concatenate(members))
    return Subgroup(
        g, tuple(int(x) for x in keep), True, _mask_from_array(keep)
    )


def center_of(g: Group, classes: ConjClasses, degree: int, values) -> Subgroup:
    """{g : |chi(g)| = chi(1)}, via exact |chi(g)|^2 = chi(1)^2."""
    target = degree * degree
    members = []
    for c in range(classes.count):
        if recognize(cyc.abs_square(values[c])) == target:
            members.append(classes.members(c))
    keep = np.unique(np.concatenate(members))
    return Subgroup(g, tuple(int(x) for x in keep), True, _mask_from_array(keep))


def _mask_from_array(arr) -> int:
    m = 0
    for x in arr:
        m |= 1 << int(x)
    return m


def verify_table_invariants(table: CharacterTable) -> None:
    """Exact validity checks; raises InternalCheckError on any violation."""
    g, classes = table.group, table.classes
    n, k = g.order, classes.count
    if len(table.chars) != k:
        raise InternalCheckError(f"{len(table.chars)} characters for {k} classes")
    if sum(ch.degree * ch.degree for ch in table.chars) != n:
        raise InternalCheckError("sum of squared degrees differs from the group order")
    conj_values = [tuple(conjugate(v) for v in ch.values) for ch in table.chars]
    for a in range(k):
        for b in range(a, k):
            s = cyc.zero(table.e)
            for c in range(k):
                s = s + classes.sizes[c] * (table.chars[a].values[c] * conj_values[b][c])
            expected = n if a == b else 0
            if recognize(s) != expected:
                raise InternalCheckError(f"row orthogonality fails for characters ({a}, {b})")
    for ca in range(k):
        for cb in range(ca, k):
            s = cyc.zero(table.e)
            for ch, cv in zip(table.chars, conj_values):
                s = s + ch.values[ca] * cv[cb]
            expected = table.centralizer_size(ca) if ca == cb else 0
            if recognize(s) != expected:
                raise InternalCheckError(f"column orthogonality fails for classes ({ca}, {cb})")


def character_table(g: Group, classes: ConjClasses | None = None) -> CharacterTable:
    """The exact irreducible character table, eagerly validated.

    Characters are ordered by degree, then lexicographically on their
    serialized values, so tables are byte-stable.
    """
    if g.order > 2000:
        raise SizeLimitError(f"character tables limited to order 2000, got {g.order}", g.order)
    if classes is None:
        classes = conjugacy_classes(g)
    e = exponent(g)
    p = choose_dixon_prime(g)
    constants = class_constants(g, classes)
    vectors = split_eigenspaces(constants, p)
    degrees = degrees_mod_p(vectors, g, classes, p)
    z = _least_primitive_root_of_unity(e, p)
    raw = []
    for w, d in zip(vectors, degrees):
        values = lift_values(w, d, g, classes, p, e, z)
        raw.append((d, values))
    raw.sort(key=lambda item: (item[0], tuple(v.coeffs for v in item[1])))
    chars = []
    for d, values in raw:
        if recognize(values[0]) != d:
            raise InternalCheckError("value at the identity class differs from the degree")
        ker = kernel_of(g, classes, d, values)
        cen = center_of(g, classes, d, values)
        if ker.mask & ~cen.mask:
            raise InternalCheckError("character kernel not contained in its center")
        chars.append(Character(g, d, values, ker, cen))
    table = CharacterTable(g, classes, e, p, tuple(chars))
    verify_table_invariants(table)
    return table


# -- induction and inner products ----------------------------------------------


def induce(
    g_table: CharacterTable,
    m_embedding: tuple[int, ...],
    m_table: CharacterTable,
    theta_values,
) -> ClassFunction:
    """Induce a class function from a subgroup M (given via its embedding) to G.

    theta_values are per-M-class values; the result has the target
    group's cyclotomic order.  The defining sum over G is divided by |M|
    exactly, coefficientwise; a non-exact division is an internal error.
    """
    g = g_table.group
    n = g.order
    m_order = len(m_embedding)
    rev = np.full(n, -1, dtype=np.int64)
    rev[list(m_embedding)] = np.arange(m_order)
    embedded = [cyc.embed(v, g_table.e) for v in theta_values]
    xs = np.arange(n)
    out = []
    for c in range(g_table.classes.count):
        rep = g_table.classes.reps[c]
        conj = g.mul[g.mul[xs, rep], g.inv[xs]]
        local = rev[conj]
        inside = local >= 0
        total = cyc.zero(g_table.e)
        if inside.any():
            mcls = m_table.classes.class_of[local[inside]]
            counts = np.bincount(mcls, minlength=m_table.classes.count)
            for mc, cnt in enumerate(counts):
                if cnt:
                    total = total + int(cnt) * embedded[mc]
        coeffs = []
        for coef in total.coeffs:
            if coef % m_order:
                raise InternalCheckError("induced value is not divisible by the subgroup order")
            coeffs.append(coef // m_order)
        out.append(CycInt(g_table.e, tuple(coeffs)))
    return ClassFunction(g, tuple(out))


def inner_product(table: CharacterTable, alpha, beta) -> int:
    """(1/|G|) sum over G of alpha * conj(beta), computed classwise.

    Raises InternalCheckError if the result is not a rational integer
    divisible by |G| (impossible for genuine characters).
    """
    a_vals = alpha.values if hasattr(alpha, "values") else tuple(alpha)
    b_vals = beta.values if hasattr(beta, "values") else tuple(beta)
    s = cyc.zero(table.e)
    for c in range(table.classes.count):
        s = s + table.classes.sizes[c] * (a_vals[c] * conjugate(b_vals[c]))
    r = recognize(s)
    if r is None or r % table.group.order:
        raise InternalCheckError("inner product of characters is not a rational integer")
    return r // table.group.order
