"""Group constructors: builtin families, permutation closures, and file loaders.

The builtin families cover the groups the analysis layer cares about:
cyclic and general abelian groups, dihedral and generalized quaternion
groups, small symmetric/alternating groups, extraspecial p-groups of both
exponent types, and the modular group of order 16.
"""
from __future__ import annotations

import re
from itertools import product as iproduct
from pathlib import Path

import numpy as np

from .errors import SizeLimitError, StructuralInputError
from .groups import MAX_GROUP_ORDER, Group, _validated_group, build_from_cayley, direct_product

MAX_PERM_CLOSURE = 2000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- permutation groups ------------------------------------------------------


def format_cycles(perm: tuple[int, ...]) -> str:
    """Cycle notation with 1-based points; the identity prints as ``()``."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        out.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(out) if out else "()"


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation like ``(1 2 3)(4 5)`` into a 0-based image tuple."""
    body = text.strip()
    if not re.fullmatch(r"(\(\s*[\d\s,]*\))*", body):
        raise StructuralInputError("permutation", text, f"cannot parse cycle notation: {text!r}")
    cycles = []
    for chunk in re.findall(r"\(([^()]*)\)", body):
        points = [int(t) for t in re.split(r"[\s,]+", chunk.strip()) if t]
        if any(p < 1 for p in points):
            raise StructuralInputError("permutation", text, "cycle points are 1-based positive integers")
        if len(set(points)) != len(points):
            raise StructuralInputError("permutation", text, f"repeated point in cycle ({chunk})")
        cycles.append(points)
    top = max((p for c in cycles for p in c), default=0)
    if degree is None:
        degree = top
    elif top > degree:
        raise StructuralInputError("permutation", text, f"point {top} exceeds degree {degree}")
    images = list(range(degree))
    for cyc in cycles:
        for i, p in enumerate(cyc):
            images[p - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(images)


def build_from_permutations(generators, max_order: int = MAX_PERM_CLOSURE) -> Group:
    """Breadth-first closure of permutation generators under composition.

    Composition is (a*b)(x) = a(b(x)).  Element 0 is the identity and
    labels are cycle notation.
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    degree = max((len(g) for g in gens), default=1)
    gens = [g + tuple(range(len(g), degree)) for g in gens]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise StructuralInputError("permutation", g, "generator is not a bijection")
    ident = tuple(range(degree))
    elems: list[tuple[int, ...]] = [ident]
    index = {ident: 0}
    pos = 0
    while pos < len(elems):
        a = elems[pos]
        pos += 1
        for g in gens:
            prod = tuple(a[g[x]] for x in range(degree))
            if prod not in index:
                if len(elems) >= max_order:
                    raise SizeLimitError(
                        f"permutation closure exceeds {max_order} elements "
                        f"(partial count {len(elems)})",
                        len(elems),
                    )
                index[prod] = len(elems)
                elems.append(prod)
    n = len(elems)
    arr = np.array(elems, dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    lookup = {row.tobytes(): i for i, row in enumerate(arr)}
    for a in range(n):
        comp = arr[a][arr]  # comp[b] = elems[a] o elems[b]
        mul[a] = [lookup[row.tobytes()] for row in comp]
    labels = tuple(format_cycles(e) for e in elems)
    return _validated_group(mul, labels, f"perm-closure({len(gens)} gens, degree {degree})")


# -- builtin families --------------------------------------------------------


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    if n > MAX_GROUP_ORDER:
        raise SizeLimitError(f"order {n} exceeds limit {MAX_GROUP_ORDER}", n)
    idx = np.arange(n)
    mul = (idx[:, None] + idx[None, :]) % n
    return _validated_group(mul, tuple(str(k) for k in range(n)), f"cyclic({n})")


def abelian(invariants) -> Group:
    ns = [int(x) for x in invariants]
    if not ns or any(x < 1 for x in ns):
        raise ValueError("abelian invariants must be positive integers")
    n = 1
    for x in ns:
        n *= x
    if n > MAX_GROUP_ORDER:
        raise SizeLimitError(f"order {n} exceeds limit {MAX_GROUP_ORDER}", n)
    tuples = list(iproduct(*[range(x) for x in ns]))
    index = {t: i for i, t in enumerate(tuples)}
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(tuples):
        for j, b in enumerate(tuples):
            mul[i, j] = index[tuple((x + y) % m for x, y, m in zip(a, b, ns))]
    labels = tuple("(" + ",".join(str(x) for x in t) + ")" for t in tuples)
    return _validated_group(mul, labels, f"abelian({':'.join(str(x) for x in ns)})")


def _rs_label(i: int, j: int) -> str:
    r = "" if i == 0 else ("r" if i == 1 else f"r{i}")
    s = "s" if j else ""
    return (r + s) or "1"


def dihedral(order: int) -> Group:
    """Dihedral group of the given (even) order: <r, s | r^n, s^2, srs=r^-1>."""
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be an even integer >= 2")
    if order > MAX_GROUP_ORDER:
        raise SizeLimitError(f"order {order} exceeds limit {MAX_GROUP_ORDER}", order)
    n = order // 2
    mul = np.empty((order, order), dtype=np.int64)
    for i, j in iproduct(range(n), range(2)):
        for k, l in iproduct(range(n), range(2)):
            ii = (i + (k if j == 0 else -k)) % n
            mul[i + n * j, k + n * l] = ii + n * ((j + l) % 2)
    labels = tuple(_rs_label(i, j) for j in range(2) for i in range(n))
    return _validated_group(mul, labels, f"dihedral({order})")


def generalized_quaternion(order: int) -> Group:
    """Generalized quaternion group: <r, s | r^(2n), s^2 = r^n, s^-1 r s = r^-1>."""
    if order < 8 or order % 4:
        raise ValueError("generalized quaternion order must be a multiple of 4, at least 8")
    if order > MAX_GROUP_ORDER:
        raise SizeLimitError(f"order {order} exceeds limit {MAX_GROUP_ORDER}", order)
    n = order // 4
    m = 2 * n
    mul = np.empty((order, order), dtype=np.int64)
    for i, j in iproduct(range(m), range(2)):
        for k, l in iproduct(range(m), range(2)):
            ii = (i + (k if j == 0 else -k) + (n if j and l else 0)) % m
            mul[i + m * j, k + m * l] = ii + m * ((j + l) % 2)
    labels = tuple(_rs_label(i, j) for j in range(2) for i in range(m))
    return _validated_group(mul, labels, f"generalized_quaternion({order})")


def symmetric(n: int) -> Group:
    if not 1 <= n <= 6:
        raise ValueError("symmetric degree must be between 1 and 6")
    if n == 1:
        return cyclic(1)
    gens = [parse_cycles("(1 2)", n)]
    if n > 2:
        gens.append(parse_cycles("(" + " ".join(str(i) for i in range(1, n + 1)) + ")", n))
    g = build_from_permutations(gens)
    g.provenance = f"symmetric({n})"
    return g


def alternating(n: int) -> Group:
    if not 1 <= n <= 6:
        raise ValueError("alternating degree must be between 1 and 6")
    if n <= 2:
        return cyclic(1)
    gens = [parse_cycles(f"({i} {i + 1} {i + 2})", n) for i in range(1, n - 1)]
    g = build_from_permutations(gens)
    g.provenance = f"alternating({n})"
    return g


def extraspecial(p: int, n: int, kind: str = "p") -> Group:
    """Extraspecial group of order p^(1+2n).

    kind "p": the symplectic-cocycle construction on F_p^n x F_p^n x F_p
    with product (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a.b'); exponent p
    for odd p.  kind "p2": only for n = 1, the exponent-p^2 group
    <a, b | a^(p^2) = 1, b^p = 1, b a b^-1 = a^(1+p)> as a Cayley table.
    """
    if not _is_prime(p):
        raise ValueError(f"extraspecial parameter p={p} is not prime")
    if n < 1:
        raise ValueError("extraspecial parameter n must be >= 1")
    order = p ** (1 + 2 * n)
    if order > MAX_GROUP_ORDER:
        raise SizeLimitError(f"order {order} exceeds limit {MAX_GROUP_ORDER}", order)
    if kind == "p":
        vecs = list(iproduct(range(p), repeat=n))
        elems = [(a, b, c) for a in vecs for b in vecs for c in range(p)]
        index = {t: i for i, t in enumerate(elems)}
        mul = np.empty((order, order), dtype=np.int64)
        for i, (a, b, c) in enumerate(elems):
            for j, (a2, b2, c2) in enumerate(elems):
                dot = sum(x * y for x, y in zip(a, b2)) % p
                key = (
                    tuple((x + y) % p for x, y in zip(a, a2)),
                    tuple((x + y) % p for x, y in zip(b, b2)),
                    (c + c2 + dot) % p,
                )
                mul[i, j] = index[key]
        labels = tuple(
            "(" + ",".join(map(str, a)) + "|" + ",".join(map(str, b)) + f"|{c})"
            for (a, b, c) in elems
        )
        return _validated_group(mul, labels, f"extraspecial({p},{n},p)")
    if kind in ("p2", "p^2"):
        if n != 1:
            raise ValueError("exponent-p^2 extraspecial groups are provided only at order p^3")
        return _twisted_product(p * p, p, 1 + p, f"extraspecial({p},1,p2)")
    raise ValueError(f"unknown extraspecial kind {kind!r} (expected 'p' or 'p2')")


def _twisted_product(na: int, nb: int, twist: int, provenance: str) -> Group:
    """<a, b | a^na = b^nb = 1, b a b^-1 = a^twist> with elements a^i b^j."""
    order = na * nb
    mul = np.empty((order, order), dtype=np.int64)
    twist_pow = [pow(twist, j, na) for j in range(nb)]
    for i, j in iproduct(range(na), range(nb)):
        for k, l in iproduct(range(na), range(nb)):
            ii = (i + k * twist_pow[j]) % na
            mul[i * nb + j, k * nb + l] = ii * nb + (j + l) % nb
    labels = []
    for i, j in iproduct(range(na), range(nb)):
        a = "" if i == 0 else ("a" if i == 1 else f"a{i}")
        b = "" if j == 0 else ("b" if j == 1 else f"b{j}")
        labels.append((a + b) or "1")
    return _validated_group(mul, tuple(labels), provenance)


def modular_16() -> Group:
    """The modular group of order 16: <a, b | a^8 = b^2 = 1, b a b^-1 = a^5>."""
    return _twisted_product(8, 2, 5, "modular_16")


_FAMILIES = {
    "cyclic": lambda params: cyclic(_one_int(params, "cyclic")),
    "abelian": lambda params: abelian([_as_int(x) for x in params]),
    "dihedral": lambda params: dihedral(_one_int(params, "dihedral")),
    "generalized_quaternion": lambda params: generalized_quaternion(
        _one_int(params, "generalized_quaternion")
    ),
    "symmetric": lambda params: symmetric(_one_int(params, "symmetric")),
    "alternating": lambda params: alternating(_one_int(params, "alternating")),
    "extraspecial": lambda params: _extraspecial_from(params),
    "modular_16": lambda params: _modular16_from(params),
}


def _as_int(tok) -> int:
    try:
        return int(tok)
    except (TypeError, ValueError):
        raise ValueError(f"expected an integer parameter, got {tok!r}") from None


def _one_int(params, family: str) -> int:
    if len(params) != 1:
        raise ValueError(f"family {family!r} takes exactly one integer parameter")
    return _as_int(params[0])


def _extraspecial_from(params) -> Group:
    if len(params) not in (2, 3):
        raise ValueError("family 'extraspecial' takes parameters p:n[:type]")
    p, n = _as_int(params[0]), _as_int(params[1])
    kind = str(params[2]) if len(params) == 3 else "p"
    return extraspecial(p, n, kind)


def _modular16_from(params) -> Group:
    if params:
        raise ValueError("family 'modular_16' takes no parameters")
    return modular_16()


def build_builtin(family: str, params=()) -> Group:
    """Construct a builtin family member; raises ValueError on unknown families."""
    try:
        ctor = _FAMILIES[family]
    except KeyError:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {family!r} (known: {known})") from None
    return ctor(list(params))


# -- file loaders ------------------------------------------------------------


def _content_lines(path) -> list[str]:
    lines = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def load_cayley_file(path) -> Group:
    """Read ``order n`` followed by n rows of n zero-based indices."""
    lines = _content_lines(path)
    if not lines or not lines[0].lower().startswith("order"):
        raise StructuralInputError("format", str(path), "first line must be 'order n'")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise StructuralInputError("format", str(path), "first line must be 'order n'") from None
    rows = []
    for line in lines[1:]:
        rows.extend(int(t) for t in line.split())
    if len(rows) != n * n:
        raise StructuralInputError(
            "format", str(path), f"expected {n * n} table entries, found {len(rows)}"
        )
    table = np.array(rows, dtype=np.int64).reshape(n, n)
    return build_from_cayley(table, provenance=f"cayley-file({Path(path).name})")


def load_permutation_file(path, max_order: int = MAX_PERM_CLOSURE) -> Group:
    """Read one generator per line in cycle notation."""
    lines = _content_lines(path)
    if not lines:
        raise StructuralInputError("format", str(path), "no generators in file")
    raw = [parse_cycles(line) for line in lines]
    degree = max(len(r) for r in raw)
    gens = [r + tuple(range(len(r), degree)) for r in raw]
    g = build_from_permutations(gens, max_order=max_order)
    g.provenance = f"perm-file({Path(path).name})"
    return g
