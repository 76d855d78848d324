import numpy as np
from numba import njit

# Graphs arrive in CSR form: neighbours of v are indices[indptr[v]:indptr[v+1]].
# Field arithmetic arrives as dense q x q tables of element codes.


@njit(cache=True)
def bfs_distances(indptr, indices, src):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for p in range(indptr[v], indptr[v + 1]):
            w = indices[p]
            if dist[w] < 0:
                dist[w] = dv
                queue[tail] = w
                tail += 1
    return dist


@njit(cache=True)
def all_pairs_distances(indptr, indices):
    n = indptr.shape[0] - 1
    out = np.empty((n, n), dtype=np.int32)
    for u in range(n):
        out[u, :] = bfs_distances(indptr, indices, u)
    return out


@njit(cache=True)
def intersection_counts(dist, indptr, indices, diam):
    """Per-distance b/c counts; the first pair (row-major) that disagrees is reported."""
    n = dist.shape[0]
    b = np.full(diam + 1, -1, dtype=np.int64)
    c = np.full(diam + 1, -1, dtype=np.int64)
    for u in range(n):
        for v in range(n):
            i = dist[u, v]
            nb = 0
            nc = 0
            for p in range(indptr[v], indptr[v + 1]):
                dw = dist[u, indices[p]]
                if dw == i + 1:
                    nb += 1
                elif dw == i - 1:
                    nc += 1
            if b[i] < 0:
                b[i] = nb
                c[i] = nc
            elif b[i] != nb or c[i] != nc:
                return False, b, c, u, v
    return True, b, c, -1, -1


@njit(cache=True)
def span_weight_histogram(gen, add, sub, mul, q):
    """Weight counts of every codeword sum_j m_j * gen[j], m ranging over GF(q)^k."""
    k, n = gen.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    digits = np.zeros(k, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int64)
    total = q ** k
    for step in range(total):
        w = 0
        for t in range(n):
            if cw[t] != 0:
                w += 1
        hist[w] += 1
        if step == total - 1:
            break
        j = 0
        while digits[j] == q - 1:
            for t in range(n):
                cw[t] = sub[cw[t], mul[q - 1, gen[j, t]]]
            digits[j] = 0
            j += 1
        a = digits[j]
        for t in range(n):
            cw[t] = add[sub[cw[t], mul[a, gen[j, t]]], mul[a + 1, gen[j, t]]]
        digits[j] = a + 1
    return hist


@njit(cache=True)
def coset_tables(hmat, add, sub, mul, q):
    """Enumerate GF(q)^n by syndrome: min weight and weight histogram per coset."""
    r, n = hmat.shape
    ncos = q ** r
    minw = np.full(ncos, n + 1, dtype=np.int64)
    hist = np.zeros((ncos, n + 1), dtype=np.int64)
    digits = np.zeros(n, dtype=np.int64)
    syn = np.zeros(r, dtype=np.int64)
    total = q ** n
    w = 0
    for step in range(total):
        sid = 0
        for s in range(r - 1, -1, -1):
            sid = sid * q + syn[s]
        hist[sid, w] += 1
        if w < minw[sid]:
            minw[sid] = w
        if step == total - 1:
            break
        j = 0
        while digits[j] == q - 1:
            for s in range(r):
                syn[s] = sub[syn[s], mul[q - 1, hmat[s, j]]]
            digits[j] = 0
            w -= 1
            j += 1
        a = digits[j]
        for s in range(r):
            syn[s] = add[sub[syn[s], mul[a, hmat[s, j]]], mul[a + 1, hmat[s, j]]]
        if a == 0:
            w += 1
        digits[j] = a + 1
    return minw, hist
