#!/usr/bin/env python3
"""Brute-force reference values for the 16 integral octonion orders.

Independent of the Rust crates: field arithmetic, the sign rule, orbit
enumeration, lattice bases (sympy HNF), Gram determinants and unit counts
are all recomputed here from scratch. Output is written as JSON and frozen
into crates/core/tests/data/oracle_orders.json.

    python3 scripts/oracle.py > crates/core/tests/data/oracle_orders.json
"""
import itertools
import json
from fractions import Fraction

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form


def f8_mul(a, b):
    # carry-less product then reduce by t^3 + t + 1
    p = 0
    for i in range(3):
        if (b >> i) & 1:
            p ^= a << i
    for deg in (4, 3):
        if (p >> deg) & 1:
            p ^= 0b1011 << (deg - 3)
    return p


def f8_pow(a, n):
    r = 1
    for _ in range(n):
        r = f8_mul(r, a)
    return r


def tr(x):
    v = x ^ f8_pow(x, 2) ^ f8_pow(x, 4)
    assert v in (0, 1)
    return v


def sign(x, y):
    return -1 if tr(f8_mul(y, f8_pow(x, 6))) else 1


def omul(a, b):
    out = [Fraction(0)] * 8
    for x in range(8):
        for y in range(8):
            out[x ^ y] += sign(x, y) * a[x] * b[y]
    return out


def conj(a):
    return [a[0]] + [-c for c in a[1:]]


def pairing(a, b):
    # <a, b> = tr(a b*) = 2 Re(a b*)
    return 2 * omul(a, conj(b))[0]


def popcount(m):
    return bin(m).count("1")


def translate(mask, z):
    return sum(1 << (x ^ z) for x in range(8) if (mask >> x) & 1)


H = [m for m in range(256) if popcount(m) in (0, 4, 8)]
assert len(H) == 72

orbits = []
seen = set()
for m in H:
    if m in seen:
        continue
    orb = sorted({translate(m, z) for z in range(8)})
    seen.update(orb)
    orbits.append(orb)
assert len(orbits) == 16


def span(members):
    words = {0}
    changed = True
    while changed:
        changed = False
        for w in list(words):
            for m in members:
                if w ^ m not in words:
                    words.add(w ^ m)
                    changed = True
    return words


rows = []
for orb in orbits:
    code = span(orb)
    gens = []
    for x in range(8):
        v = [0] * 8
        v[x] = 2
        gens.append(v)
    for m in orb:
        gens.append([1 if (m >> x) & 1 else 0 for x in range(8)])
    # sympy HNF works on columns
    hnf = hermite_normal_form(Matrix(gens).T)
    assert hnf.shape == (8, 8)
    basis = [[Fraction(int(hnf[i, j]), 2) for i in range(8)] for j in range(8)]
    gram = Matrix(8, 8, lambda i, j: pairing(basis[i], basis[j]))
    assert all(g.denominator == 1 for g in gram)
    det = int(gram.det())
    even = all(int(gram[i, i]) % 2 == 0 for i in range(8))
    # norm-one vectors in 1/2 Z^8: either one entry +-1 or four entries +-1/2
    units = 0
    for x in range(8):
        units += 2
    for m in (w for w in code if popcount(w) == 4):
        units += 16
    # cross-check the unit count by testing lattice membership directly
    B = Matrix([[2 * c for c in b] for b in basis]).T
    direct = 0
    for m in range(256):
        if popcount(m) != 4:
            continue
        for signs in itertools.product((1, -1), repeat=4):
            v = [0] * 8
            for s, x in zip(signs, [x for x in range(8) if (m >> x) & 1]):
                v[x] = s
            sol = B.LUsolve(Matrix(v))
            if all(c.is_integer for c in sol):
                direct += 1
    assert direct + 16 == units, (orb, direct, units)
    if len(orb) == 1 and orb[0] == 0:
        kind = "empty"
    elif len(orb) == 1:
        kind = "full"
    elif len(orb) == 2:
        kind = "line-pair"
    else:
        kind = "outer"
    rows.append(
        {
            "members": [f"{m:02x}" for m in orb],
            "kind": kind,
            "span_size": len(code),
            "determinant": det,
            "even": even,
            "unit_count": units,
        }
    )

rows.sort(key=lambda r: r["members"])
print(json.dumps({"orders": rows}, indent=2))
