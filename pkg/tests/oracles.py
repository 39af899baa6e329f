"""Naive, independent re-implementations used as test oracles.

Everything here works on plain Python data structures with definition-level
algorithms (no numpy vectorization, no shared code paths with the package),
so agreement with the library is evidence, not tautology.
"""
from __future__ import annotations

from itertools import product
from math import gcd


def naive_center(mul) -> set[int]:
    n = len(mul)
    return {g for g in range(n) if all(mul[g][x] == mul[x][g] for x in range(n))}


def naive_closure(mul, seed) -> set[int]:
    members = {0} | set(int(s) for s in seed)
    while True:
        new = {mul[a][b] for a in members for b in members} - members
        if not new:
            return members
        members |= new


def naive_commutator(mul, inv, a_members, b_members) -> set[int]:
    comms = {
        mul[mul[inv[a]][inv[b]]][mul[a][b]] for a in a_members for b in b_members
    }
    return naive_closure(mul, comms)


def naive_conj_classes(mul, inv) -> list[frozenset[int]]:
    n = len(mul)
    seen = set()
    classes = []
    for g in range(n):
        if g in seen:
            continue
        orbit = frozenset(mul[mul[x][g]][inv[x]] for x in range(n))
        seen |= orbit
        classes.append(orbit)
    return classes


def naive_element_order(mul, g) -> int:
    k, x = 1, g
    while x != 0:
        x = mul[x][g]
        k += 1
    return k


def naive_exponent(mul) -> int:
    out = 1
    for g in range(len(mul)):
        o = naive_element_order(mul, g)
        out = out * o // gcd(out, o)
    return out


def naive_is_normal(mul, inv, members) -> bool:
    mset = set(members)
    return all(mul[mul[x][h]][inv[x]] in mset for h in members for x in range(len(mul)))


def naive_normal_closure(mul, inv, seed) -> set[int]:
    conjugates = {mul[mul[x][s]][inv[x]] for s in seed for x in range(len(mul))}
    return naive_closure(mul, conjugates)


def compose_perms(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a*b)(x) = a(b(x)), matching the package's convention."""
    return tuple(a[b[x]] for x in range(len(a)))


def perm_closure_bruteforce(generators) -> set[tuple[int, ...]]:
    degree = len(generators[0])
    identity = tuple(range(degree))
    members = {identity} | {tuple(g) for g in generators}
    while True:
        new = {compose_perms(a, b) for a, b in product(members, members)} - members
        if not new:
            return members
        members |= new


def naive_dixon_prime(order: int, exponent: int) -> int:
    """Direct search for the least prime p = 1 mod e with p^2 > 4|G|."""

    def is_prime(n):
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))

    p = 2
    while True:
        if is_prime(p) and p * p > 4 * order and (exponent == 1 or p % exponent == 1):
            return p
        p += 1


def naive_power_class(mul, classes_list, rep: int, j: int) -> int:
    x = 0
    for _ in range(j):
        x = mul[x][rep]
    for idx, cls in enumerate(classes_list):
        if x in cls:
            return idx
    raise AssertionError("element escaped its class list")
