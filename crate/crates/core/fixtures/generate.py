"""Writes the graph fixtures (edge lists) and their automorphism groups
(group JSON) shipped with the crate. Run from this directory:

    python3 generate.py

Group orders are checked by brute-force closure, arc-transitivity by
orbit counting. The Tutte-Coxeter duality is found with networkx VF2.
"""

import itertools
import json

import networkx as nx


def compose(g, h):
    """Apply g then h."""
    return tuple(h[g[i]] for i in range(len(g)))


def closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def check(name, n, edges, gens, order):
    es = {frozenset(e) for e in edges}
    for g in gens:
        assert {frozenset((g[u], g[v])) for u, v in edges} == es, name
    elems = closure(gens)
    assert len(elems) == order, (name, len(elems))
    arcs = {(u, v) for u, v in edges} | {(v, u) for u, v in edges}
    u, v = next(iter(sorted(arcs)))
    assert len({(g[u], g[v]) for g in elems}) == len(arcs), name
    g = nx.Graph(list(edges))
    assert g.number_of_nodes() == n and nx.is_connected(g)


def relabel(n, edges, gens):
    """Swaps 1 with the smallest neighbour of 0, so that {0, 1} is an edge."""
    nb = min(v if u == 0 else u for u, v in edges if 0 in (u, v))
    sigma = list(range(n))
    sigma[1], sigma[nb] = nb, 1
    edges = [(sigma[u], sigma[v]) for u, v in edges]
    gens = [tuple(sigma[g[sigma[i]]] for i in range(n)) for g in gens]
    return edges, gens


def write(name, n, edges, gens, order, note):
    edges, gens = relabel(n, edges, gens)
    check(name, n, edges, gens, order)
    with open(f"{name}.edges", "w") as f:
        f.write(f"# {note}\n# vertices {n}\n")
        for u, v in sorted(tuple(sorted(e)) for e in edges):
            f.write(f"{u} {v}\n")
    with open(f"{name}.json", "w") as f:
        json.dump({"name": name, "degree": n, "generators": [list(g) for g in gens]}, f,
                  separators=(",", ":"))
        f.write("\n")


def heawood():
    # points 0..6 and lines 7..13 are the nonzero vectors of F_2^3
    vecs = list(range(1, 8))
    dot = lambda a, b: bin(a & b).count("1") % 2
    edges = [(i, 7 + j) for i, a in enumerate(vecs) for j, b in enumerate(vecs) if dot(a, b) == 0]

    def mat_apply(m, v):  # row vector times matrix, rows of m as bitmasks
        out = 0
        for i in range(3):
            if v >> i & 1:
                out ^= m[i]
        return out

    def transpose_inverse(m):
        for cand in itertools.product(range(1, 8), repeat=3):
            # want dot(vA, w B) = dot(v, w) for all v, w
            if all(dot(mat_apply(m, v), mat_apply(cand, w)) == dot(v, w) for v in vecs for w in vecs):
                return cand
        raise ValueError

    def perm_of(m):
        mt = transpose_inverse(m)
        p = [0] * 14
        for i, v in enumerate(vecs):
            p[i] = vecs.index(mat_apply(m, v))
            p[7 + i] = 7 + vecs.index(mat_apply(mt, v))
        return tuple(p)

    a = (0b010, 0b100, 0b001)  # cyclic shift of coordinates
    b = (0b011, 0b010, 0b100)  # e0 -> e0 + e1
    duality = tuple(list(range(7, 14)) + list(range(7)))
    gens = [perm_of(a), perm_of(b), duality]
    write("heawood", 14, edges, gens, 336, "Fano incidence graph; GL(3,2) with point-line duality")


def tutte_coxeter():
    duads = list(itertools.combinations(range(6), 2))
    synthemes = sorted({tuple(sorted(m)) for m in (
        (tuple(sorted(p[0:2])), tuple(sorted(p[2:4])), tuple(sorted(p[4:6])))
        for p in itertools.permutations(range(6)))})
    assert len(synthemes) == 15
    verts = duads + synthemes
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[d], index[s]) for s in synthemes for d in s]

    def induced(sigma):
        p = []
        for v in verts:
            if v in duads:
                p.append(index[tuple(sorted(sigma[x] for x in v))])
            else:
                p.append(index[tuple(sorted(tuple(sorted(sigma[x] for x in d)) for d in v))])
        return tuple(p)

    s6 = [induced((1, 0, 2, 3, 4, 5)), induced((1, 2, 3, 4, 5, 0))]
    g = nx.Graph(edges)
    outer = None
    for m in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter():
        if m[0] >= 15:
            outer = tuple(m[i] for i in range(30))
            break
    write("tutte_coxeter", 30, edges, s6 + [outer], 1440,
          "duads and synthemes of {0..5}; S6 with a duality found by VF2")


def cayley_f16_quintic():
    poly = 0b10011  # x^4 + x + 1

    def mul(a, b):
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & 0b10000:
                a ^= poly
        return r

    w = 0b10
    powers = [1]
    for _ in range(14):
        powers.append(mul(powers[-1], w))
    assert len(set(powers)) == 15
    conn = {powers[3 * i] for i in range(5)}
    edges = [(u, v) for u in range(16) for v in range(u + 1, 16) if u ^ v in conn]
    translations = [tuple(x ^ (1 << i) for x in range(16)) for i in range(4)]
    mult = tuple(mul(x, powers[3]) for x in range(16))
    frob = tuple(mul(x, x) for x in range(16))
    write("cayley_f16_quintic", 16, edges, translations + [mult, frob], 320,
          "Cayley graph of F16 (x^4+x+1) on the order-5 multiplicative subgroup")


def petersen():
    verts = list(itertools.combinations(range(5), 2))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[a], index[b]) for a, b in itertools.combinations(verts, 2) if not set(a) & set(b)]

    def induced(sigma):
        return tuple(index[tuple(sorted(sigma[x] for x in v))] for v in verts)

    gens = [induced((1, 0, 2, 3, 4)), induced((1, 2, 3, 4, 0))]
    write("petersen", 10, edges, gens, 120, "Kneser graph K(5,2); S5 on 2-subsets")


if __name__ == "__main__":
    heawood()
    tutte_coxeter()
    cayley_f16_quintic()
    petersen()
