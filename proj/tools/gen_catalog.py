#!/usr/bin/env python3
"""Regenerate data/catalog.json.

The tables are computed here independently of the C++ library so that the
frozen catalog doubles as an external reference for the tests.

Permutations act on {1,2,3}; the product p*q applies q first, then p.
"""
import itertools
import json
import pathlib

CONVENTION = ("sym3 elements are indexed id,(12),(13),(23),(123),(132); "
              "the product p*q of permutations applies q first, then p")


def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def klein4():
    return [[a ^ b for b in range(4)] for a in range(4)]


def perm_from_cycles(cycles):
    p = {1: 1, 2: 2, 3: 3}
    for cyc in cycles:
        for i, x in enumerate(cyc):
            p[x] = cyc[(i + 1) % len(cyc)]
    return (p[1], p[2], p[3])


SYM3 = [
    perm_from_cycles([]),
    perm_from_cycles([(1, 2)]),
    perm_from_cycles([(1, 3)]),
    perm_from_cycles([(2, 3)]),
    perm_from_cycles([(1, 2, 3)]),
    perm_from_cycles([(1, 3, 2)]),
]


def sym3():
    def prod(p, q):  # apply q first
        return tuple(p[q[x] - 1] for x in range(3))
    return [[SYM3.index(prod(p, q)) for q in SYM3] for p in SYM3]


def group(op):
    return {"kind": "group", "order": len(op), "op": op}


def brace(add, mul):
    return {"kind": "skew_brace", "order": len(add), "add": add, "mul": mul}


def trivial(op):
    return brace(op, op)


def chain(n):
    # index 0 is the top element
    return [[max(a, b) for b in range(n)] for a in range(n)]


def v3():
    # 0 and 1 incomparable, 2 is the bottom
    return [[0, 2, 2], [2, 1, 2], [2, 2, 2]]


def semilattice(meet):
    return {"kind": "semilattice", "size": len(meet), "meet": meet}


def dwb(add, mul):
    return {"kind": "dual_weak_brace", "order": len(add), "add": add, "mul": mul}


def spec(meet, braces, homs):
    return {
        "kind": "strong_semilattice",
        "semilattice": semilattice(meet),
        "braces": {str(i): b for i, b in enumerate(braces)},
        "homs": homs,
    }


def main():
    groups = {
        "c1": cyclic(1),
        "c2": cyclic(2),
        "c3": cyclic(3),
        "c4": cyclic(4),
        "c6": cyclic(6),
        "sym3": sym3(),
        "klein4": klein4(),
    }
    entries = []

    def add(name, structure, provenance):
        entries.append({"name": name, "provenance": provenance, "structure": structure})

    for name, op in groups.items():
        add(name, group(op), "standard group")
    for name, op in groups.items():
        add("trivial_" + name, trivial(op), "trivial skew brace a+b = a*b")
    s3 = sym3()
    add("almost_trivial_sym3",
        brace([[s3[b][a] for b in range(6)] for a in range(6)], s3),
        "almost trivial skew brace a+b = b*a")
    z6_mul = [[(a + (-1) ** a * b) % 6 for b in range(6)] for a in range(6)]
    add("z6_exotic", brace(cyclic(6), z6_mul), "brace on Z6 with a*b = a + (-1)^a b")

    add("y_chain2", semilattice(chain(2)), "two-element chain")
    add("y_chain3", semilattice(chain(3)), "three-element chain")
    add("y_v3", semilattice(v3()), "two incomparable elements above a bottom")
    add("sl2_trivial", dwb(chain(2), chain(2)), "trivial weak brace on a 2-element semilattice")
    add("sl3_trivial", dwb(chain(3), chain(3)), "trivial weak brace on a 3-element chain")
    add("sl3_v_trivial", dwb(v3(), v3()), "trivial weak brace on a 3-element V semilattice")

    add("c3_sym3",
        spec(chain(2), [trivial(cyclic(3)), trivial(s3)], {"0>1": [0, 4, 5]}),
        "chain of trivial braces on C3 and Sym3, 1 -> (123)")
    add("c3_sym3_trivial_hom",
        spec(chain(2), [trivial(cyclic(3)), trivial(s3)], {"0>1": [0, 0, 0]}),
        "chain of trivial braces on C3 and Sym3 with the trivial connecting map")
    add("c2_c4_braces",
        spec(chain(2), [trivial(cyclic(2)), trivial(cyclic(4))], {"0>1": [0, 2]}),
        "chain of trivial braces on C2 and C4, 1 -> 2")
    add("chain3_c4_c2_c1",
        spec(chain(3), [trivial(cyclic(4)), trivial(cyclic(2)), trivial(cyclic(1))],
             {"0>1": [0, 1, 0, 1], "0>2": [0, 0, 0, 0], "1>2": [0, 0]}),
        "three-element chain of trivial braces C4 > C2 > C1")
    add("v3_c2_c3_c6",
        spec(v3(), [trivial(cyclic(2)), trivial(cyclic(3)), trivial(cyclic(6))],
             {"0>2": [0, 3], "1>2": [0, 2, 4]}),
        "trivial braces C2, C3 over C6 on a V semilattice")
    add("z6_over_c2",
        spec(chain(2), [brace(cyclic(6), z6_mul), trivial(cyclic(2))],
             {"0>1": [a % 2 for a in range(6)]}),
        "the Z6 brace over the trivial C2 brace by reduction mod 2")

    add("flip3",
        {"kind": "solution", "order": 3,
         "map": [[[b, a] for b in range(3)] for a in range(3)]},
        "flip map on three points")

    doc = {"convention": CONVENTION, "entries": entries}
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "catalog.json"
    out.write_text(json.dumps(doc, indent=1) + "\n")


if __name__ == "__main__":
    main()
