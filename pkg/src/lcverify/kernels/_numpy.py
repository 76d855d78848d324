import numpy as np

_CHUNK = 1 << 16


def _neighbours_of(indptr, indices, frontier):
    starts = indptr[frontier]
    lengths = indptr[frontier + 1] - starts
    total = int(lengths.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype)
    offsets = np.repeat(starts - np.cumsum(lengths) + lengths, lengths)
    return indices[offsets + np.arange(total)]


def bfs_distances(indptr, indices, src):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int32)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        nb = _neighbours_of(indptr, indices, frontier)
        nb = np.unique(nb[dist[nb] < 0])
        dist[nb] = level
        frontier = nb
    return dist


def all_pairs_distances(indptr, indices):
    n = indptr.shape[0] - 1
    out = np.empty((n, n), dtype=np.int32)
    for u in range(n):
        out[u] = bfs_distances(indptr, indices, u)
    return out


def intersection_counts(dist, indptr, indices, diam):
    n = dist.shape[0]
    adj = np.zeros((n, n), dtype=np.float64)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1.0
    # layer[i][u, v] = #neighbours of v at distance i from u
    layer = [((dist == i).astype(np.float64) @ adj).astype(np.int64) for i in range(diam + 1)]
    zero = np.zeros((n, n), dtype=np.int64)
    bcount = np.empty((n, n), dtype=np.int64)
    ccount = np.empty((n, n), dtype=np.int64)
    for i in range(diam + 1):
        mask = dist == i
        bcount[mask] = (layer[i + 1] if i < diam else zero)[mask]
        ccount[mask] = (layer[i - 1] if i > 0 else zero)[mask]
    flat = dist.ravel()
    # first row-major pair realising each distance sets the reference value
    vals, first_idx = np.unique(flat, return_index=True)
    first = np.full(diam + 1, flat.size, dtype=np.int64)
    first[vals] = first_idx
    b = bcount.ravel()[first]
    c = ccount.ravel()[first]
    bad = (bcount.ravel() != b[flat]) | (ccount.ravel() != c[flat])
    if bad.any():
        pos = int(np.argmax(bad))
        u, v = divmod(pos, n)
        # report only the reference values fixed before the failure, like a scan would
        seen = first <= pos
        return False, np.where(seen, b, -1), np.where(seen, c, -1), u, v
    return True, b, c, -1, -1


def _message_digits(idx, q, k):
    return (idx[:, None] // (q ** np.arange(k, dtype=np.int64))[None, :]) % q


def span_weight_histogram(gen, add, sub, mul, q):
    k, n = gen.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    total = q ** k
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        digits = _message_digits(idx, q, k)
        cw = np.zeros((idx.size, n), dtype=np.int64)
        for j in range(k):
            cw = add[cw, mul[digits[:, j][:, None], gen[j][None, :]]]
        hist += np.bincount((cw != 0).sum(axis=1), minlength=n + 1)
    return hist


def coset_tables(hmat, add, sub, mul, q):
    r, n = hmat.shape
    ncos = q ** r
    minw = np.full(ncos, n + 1, dtype=np.int64)
    hist = np.zeros((ncos, n + 1), dtype=np.int64)
    total = q ** n
    place = q ** np.arange(r, dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        vec = _message_digits(idx, q, n)
        syn = np.zeros((idx.size, r), dtype=np.int64)
        for j in range(n):
            syn = add[syn, mul[vec[:, j][:, None], hmat[:, j][None, :]]]
        sid = syn @ place if r else np.zeros(idx.size, dtype=np.int64)
        w = (vec != 0).sum(axis=1)
        np.minimum.at(minw, sid, w)
        np.add.at(hist, (sid, w), 1)
    return minw, hist
