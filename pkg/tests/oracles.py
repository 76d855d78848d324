"""Independent brute-force references. Nothing here imports the code under test's algorithms."""
from collections import deque
from fractions import Fraction
from itertools import product


def bfs(adj, x):
    dist = {x: 0}
    todo = deque([x])
    while todo:
        u = todo.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                todo.append(w)
    return dist


def adjacency_lists(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def profile(n, edges, x):
    dist = bfs(adjacency_lists(n, edges), x)
    out = [0] * (max(dist.values()) + 1)
    for d in dist.values():
        out[d] += 1
    return out


def intersection_array(n, edges):
    """Brute-force b_i, c_i over every ordered pair, or None if not constant."""
    adj = adjacency_lists(n, edges)
    dist = [bfs(adj, u) for u in range(n)]
    b, c = {}, {}
    for u in range(n):
        for v in range(n):
            i = dist[u][v]
            bi = sum(1 for w in adj[v] if dist[u][w] == i + 1)
            ci = sum(1 for w in adj[v] if dist[u][w] == i - 1)
            if b.setdefault(i, bi) != bi or c.setdefault(i, ci) != ci:
                return None
    d = max(b)
    return [b[i] for i in range(d)], [c[i] for i in range(1, d + 1)]


def convolve(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def weight_histogram_prime(rows, p):
    """All codewords of a code over the prime field GF(p) by message enumeration."""
    k, n = len(rows), len(rows[0])
    hist = [0] * (n + 1)
    for msg in product(range(p), repeat=k):
        cw = [sum(m * r[t] for m, r in zip(msg, rows)) % p for t in range(n)]
        hist[sum(1 for x in cw if x)] += 1
    return hist


def cosets_prime(rows, p):
    """Group GF(p)^n into cosets of the row span; returns sorted (min weight, distribution) per coset."""
    k, n = len(rows), len(rows[0])
    code = set()
    for msg in product(range(p), repeat=k):
        code.add(tuple(sum(m * r[t] for m, r in zip(msg, rows)) % p for t in range(n)))
    seen = set()
    out = []
    for v in product(range(p), repeat=n):
        if v in seen:
            continue
        coset = {tuple((a + b) % p for a, b in zip(v, c)) for c in code}
        seen |= coset
        dist = [0] * (n + 1)
        for w in coset:
            dist[sum(1 for x in w if x)] += 1
        out.append((min(i for i, c in enumerate(dist) if c), tuple(dist)))
    return sorted(out)


def is_lc(seq):
    s = [Fraction(x) for x in seq]
    return all(s[i] * s[i] >= s[i - 1] * s[i + 1] for i in range(1, len(s) - 1))
