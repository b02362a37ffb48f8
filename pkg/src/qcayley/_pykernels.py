"""Pure-Python implementations of the hot kernels.

These are the fallback for :mod:`qcayley._speedups` and must return results
identical to it, including search order. Reachable sets are kept as Python
integers used as bitsets over Z_n.
"""


def _rotate(bits, shift, n, full):
    # cyclic left rotation of an n-bit set: element x -> x + shift (mod n)
    if shift == 0:
        return bits
    return ((bits << shift) | (bits >> (n - shift))) & full


def _mask_to_bits(mask):
    return int("".join("1" if f else "0" for f in reversed(mask)) or "0", 2)


def _bits_to_mask(bits, n):
    text = format(bits, "b").zfill(n)[::-1]
    return bytearray(1 if c == "1" else 0 for c in text[:n])


def sumset(n, mask, steps):
    """Return the 0/1 mask of {a + s : mask[a], s in steps} over Z_n."""
    full = (1 << n) - 1
    src = _mask_to_bits(mask)
    steps = sorted({s % n for s in steps})
    if not src or not steps:
        return bytearray(n)
    members = [i for i in range(n) if mask[i]]
    out = 0
    if len(members) < len(steps):
        step_bits = sum(1 << s for s in steps)
        for a in members:
            out |= _rotate(step_bits, a, n, full)
    else:
        for s in steps:
            out |= _rotate(src, s, n, full)
    return _bits_to_mask(out, n)


def bfs_distances(n, steps):
    """Distances from 0 in Cay(Z_n, steps); -1 marks unreachable vertices."""
    steps = sorted({s % n for s in steps} - {0})
    dist = [-1] * n
    dist[0] = 0
    frontier = [0]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for v in frontier:
            for s in steps:
                w = v + s
                if w >= n:
                    w -= n
                if dist[w] < 0:
                    dist[w] = level
                    nxt.append(w)
        frontier = nxt
    return dist


def pair_counts(n, q):
    """Ordered-pair counts over q x q: (s[r], d[r]) for x + y = r and x - y = r."""
    s = [0] * n
    d = [0] * n
    q = list(q)
    for x in q:
        for y in q:
            s[(x + y) % n] += 1
            d[(x - y) % n] += 1
    return s, d


def find_induced_odd_cycle(n, adj, max_len, second=-1):
    """Shortest odd hole through vertex 0 of a circulant graph, or None.

    ``adj[k]`` is truthy when vertices differing by k are adjacent (the mask
    must be symmetric). Lengths 5, 7, ..., max_len are tried in order. With
    ``second >= 0`` the hole is required to start with the edge 0 - second.
    """
    adj = bytes(1 if a else 0 for a in adj)
    nbrs = [k for k in range(1, n) if adj[k]]
    for length in range(5, max_len + 1, 2):
        path = [0]
        on_path = bytearray(n)
        on_path[0] = 1
        if second >= 0:
            if not adj[second % n]:
                return None
            path.append(second % n)
            on_path[second % n] = 1
        found = _extend(n, adj, nbrs, length, path, on_path, second < 0)
        if found is not None:
            return found
    return None


def _extend(n, adj, nbrs, length, path, on_path, break_symmetry):
    depth = len(path)
    last = path[-1]
    closing = depth == length - 1
    for x in sorted((last + k) % n for k in nbrs):
        if on_path[x]:
            continue
        if depth >= 2:
            if adj[x] != (1 if closing else 0):
                continue
            ok = True
            for i in range(1, depth - 1):
                if adj[(x - path[i]) % n]:
                    ok = False
                    break
            if not ok:
                continue
            if closing:
                if break_symmetry and not path[1] < x:
                    continue
                return path + [x]
        path.append(x)
        on_path[x] = 1
        found = _extend(n, adj, nbrs, length, path, on_path, break_symmetry)
        path.pop()
        on_path[x] = 0
        if found is not None:
            return found
    return None
