#!/usr/bin/env python3
"""Regenerates the operation tables under algebras/.

Tables are flat and row-major with the first argument most significant,
i.e. the entry for (a1, ..., ak) sits at index a1*n^(k-1) + ... + ak.
Run from this directory: python3 generate.py
"""

import itertools
import json
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parent / "algebras"


def table(n, arity, f):
    return [f(*args) for args in itertools.product(range(n), repeat=arity)]


def write(name, labels, ops):
    """ops: list of (symbol, arity, function on indices)."""
    n = len(labels)
    doc = {
        "name": name,
        "size": n,
        "element_labels": labels,
        "signature": [{"name": s, "arity": k} for s, k, _ in ops],
        "operations": {s: table(n, k, f) for s, k, f in ops},
    }
    lines = [
        "{",
        f'  "name": {json.dumps(name)},',
        f'  "size": {n},',
        f'  "element_labels": {json.dumps(labels, ensure_ascii=False)},',
        f'  "signature": {json.dumps(doc["signature"])},',
        '  "operations": {',
    ]
    entries = [f"    {json.dumps(s)}: {json.dumps(t)}" for s, t in doc["operations"].items()]
    lines.append(",\n".join(entries))
    lines += ["  }", "}", ""]
    (OUT / f"{name}.json").write_text("\n".join(lines), encoding="utf-8")


def chain_ops(n):
    """Meet and join on the chain 0 < 1 < ... < n-1."""
    return [("and", 2, min), ("or", 2, max)]


def wk3(with_constants):
    # labels 0, 1, ½; ∨ is the join of the chain 0 < 1 < ½
    neg = [1, 0, 2]
    join = max
    meet = lambda x, y: neg[join(neg[x], neg[y])]
    ops = [("neg", 1, lambda x: neg[x]), ("or", 2, join), ("and", 2, meet)]
    if with_constants:
        ops += [("zero", 0, lambda: 0), ("one", 0, lambda: 1), ("half", 0, lambda: 2)]
    write("WK3c" if with_constants else "WK3", ["0", "1", "½"], ops)


def k3():
    write(
        "K3",
        ["0", "½", "1"],
        chain_ops(3)
        + [("neg", 1, lambda x: 2 - x), ("zero", 0, lambda: 0), ("one", 0, lambda: 2)],
    )


def dm4():
    # 0 < a, b < 1 with ¬a = a, ¬b = b
    leq = {(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 3), (2, 2), (2, 3), (3, 3)}
    write("DM4", ["0", "a", "b", "1"], lattice_ops(4, leq) + [
        ("neg", 1, lambda x: [3, 1, 2, 0][x]),
        ("zero", 0, lambda: 0),
        ("one", 0, lambda: 3),
    ])


def lattice_ops(n, leq):
    def join(x, y):
        ubs = [z for z in range(n) if (x, z) in leq and (y, z) in leq]
        return next(z for z in ubs if all((z, u) in leq for u in ubs))

    def meet(x, y):
        lbs = [z for z in range(n) if (z, x) in leq and (z, y) in leq]
        return next(z for z in lbs if all((l, z) in leq for l in lbs))

    return [("and", 2, meet), ("or", 2, join)]


def bounded_lattice(name, labels, atoms):
    """0, the listed atoms (pairwise incomparable), 1."""
    n = len(labels)
    top = n - 1
    leq = {(x, x) for x in range(n)} | {(0, x) for x in range(n)} | {(x, top) for x in range(n)}
    assert atoms == list(range(1, top))
    write(name, labels, lattice_ops(n, leq) + [("zero", 0, lambda: 0), ("one", 0, lambda: top)])


def mv_chain(m):
    """Łukasiewicz chain with m elements 0, 1/(m-1), ..., 1."""
    d = m - 1
    labels = [label_fraction(Fraction(i, d)) for i in range(m)]
    ops = chain_ops(m) + [
        ("fus", 2, lambda x, y: max(0, x + y - d)),
        ("imp", 2, lambda x, y: min(d, d - x + y)),
        ("neg", 1, lambda x: d - x),
        ("zero", 0, lambda: 0),
        ("one", 0, lambda: d),
    ]
    write(f"L{m}", labels, ops)


VULGAR = {
    Fraction(1, 2): "½", Fraction(1, 3): "⅓", Fraction(2, 3): "⅔",
    Fraction(1, 4): "¼", Fraction(3, 4): "¾",
}


def label_fraction(q):
    if q.denominator == 1:
        return str(q.numerator)
    return VULGAR.get(q, f"{q.numerator}/{q.denominator}")


def modal_chain(m):
    """Complex algebra of the frame 0 → 1 → … → m-1 (R = successor).

    Element i is the set of worlds whose bits are set in i; □S holds at w
    when every successor of w lies in S.
    """
    full = (1 << m) - 1

    def box(s):
        out = 0
        for w in range(m):
            if w == m - 1 or s >> (w + 1) & 1:
                out |= 1 << w
        return out

    def label(s):
        ws = [str(w) for w in range(m) if s >> w & 1]
        return "{" + ",".join(ws) + "}" if ws else "∅"

    write(
        f"modal-chain{m}",
        [label(s) for s in range(full + 1)],
        [
            ("and", 2, lambda x, y: x & y),
            ("or", 2, lambda x, y: x | y),
            ("neg", 1, lambda x: full ^ x),
            ("zero", 0, lambda: 0),
            ("one", 0, lambda: full),
            ("box", 1, box),
        ],
    )


def box5():
    # □_n(x1, …, xn, y) = 1 if y ∈ {x1, …, xn}, else 0
    one = 1
    write(
        "box5",
        ["0", "1", "a1", "a2", "b"],
        [
            ("one", 0, lambda: one),
            ("box1", 2, lambda x, y: one if y == x else 0),
            ("box2", 3, lambda x1, x2, y: one if y in (x1, x2) else 0),
        ],
    )


def fepfail3():
    # {0, 1} is a subalgebra; the rule (s y) ⊢ (d y) reaches 0 from 1
    # through y = 2 on the whole algebra but not on the subalgebra.
    write(
        "fepfail3",
        ["0", "1", "2"],
        [("s", 1, lambda x: [0, 1, 1][x]), ("d", 1, lambda x: [0, 1, 0][x])],
    )


def main():
    OUT.mkdir(exist_ok=True)
    wk3(False)
    wk3(True)
    k3()
    dm4()
    bounded_lattice("M3", ["0", "a", "b", "c", "1"], [1, 2, 3])
    bounded_lattice("B4", ["0", "a", "b", "1"], [1, 2])
    for m in range(2, 6):
        mv_chain(m)
    for m in range(1, 6):
        modal_chain(m)
    box5()
    fepfail3()


if __name__ == "__main__":
    main()
