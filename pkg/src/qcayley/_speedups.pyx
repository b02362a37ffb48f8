# cython: language_level=3
"""Compiled kernels; same contracts and search order as ``_pykernels``."""

from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memset


cdef int* _int_array(object seq, Py_ssize_t* size) except NULL:
    cdef list items = list(seq)
    cdef Py_ssize_t i, k = len(items)
    cdef int* out = <int*>malloc((k if k > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for i in range(k):
        out[i] = items[i]
    size[0] = k
    return out


def sumset(int n, mask, steps):
    cdef list st = sorted({v % n for v in steps})
    cdef Py_ssize_t k = 0, i
    cdef int* s = _int_array(st, &k)
    cdef bytearray out = bytearray(n)
    cdef unsigned char[:] o = out
    cdef bytes src = bytes(mask)
    cdef const unsigned char* m = src
    cdef int a, w
    try:
        for a in range(n):
            if m[a]:
                for i in range(k):
                    w = a + s[i]
                    if w >= n:
                        w -= n
                    o[w] = 1
    finally:
        free(s)
    return out


def bfs_distances(int n, steps):
    cdef list st = sorted({v % n for v in steps} - {0})
    cdef Py_ssize_t k = 0, i
    cdef int* s = _int_array(st, &k)
    cdef int* dist = <int*>malloc(n * sizeof(int))
    cdef int* queue = <int*>malloc(n * sizeof(int))
    cdef int head = 0, tail = 0, v, w
    if dist == NULL or queue == NULL:
        free(s); free(dist); free(queue)
        raise MemoryError()
    try:
        for v in range(n):
            dist[v] = -1
        dist[0] = 0
        queue[tail] = 0
        tail += 1
        while head < tail:
            v = queue[head]
            head += 1
            for i in range(k):
                w = v + s[i]
                if w >= n:
                    w -= n
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1
        return [dist[v] for v in range(n)]
    finally:
        free(s); free(dist); free(queue)


def pair_counts(int n, q):
    cdef Py_ssize_t k = 0, i, j
    cdef int* e = _int_array(q, &k)
    cdef long* sc = <long*>calloc(n, sizeof(long))
    cdef long* dc = <long*>calloc(n, sizeof(long))
    cdef int x, t
    if sc == NULL or dc == NULL:
        free(e); free(sc); free(dc)
        raise MemoryError()
    try:
        for i in range(k):
            x = e[i]
            for j in range(k):
                t = x + e[j]
                if t >= n:
                    t -= n
                sc[t] += 1
                t = x - e[j]
                if t < 0:
                    t += n
                dc[t] += 1
        return [sc[t] for t in range(n)], [dc[t] for t in range(n)]
    finally:
        free(e); free(sc); free(dc)


cdef int _extend(int n, const unsigned char* adj, int length,
                 int* path, int depth, unsigned char* on_path, bint brk):
    cdef int last = path[depth - 1]
    cdef bint closing = depth == length - 1
    cdef int x, i, d, r
    # neighbours of `last` in increasing order: scan residues
    for x in range(n):
        d = x - last
        if d < 0:
            d += n
        if not adj[d] or on_path[x]:
            continue
        if depth >= 2:
            if (adj[x] != 0) != closing:
                continue
            r = 1
            for i in range(1, depth - 1):
                d = x - path[i]
                if d < 0:
                    d += n
                if adj[d]:
                    r = 0
                    break
            if not r:
                continue
            if closing:
                if brk and not path[1] < x:
                    continue
                path[depth] = x
                return 1
        path[depth] = x
        on_path[x] = 1
        if _extend(n, adj, length, path, depth + 1, on_path, brk):
            return 1
        on_path[x] = 0
    return 0


def find_induced_odd_cycle(int n, adj, int max_len, int second=-1):
    cdef bytes a = bytes(1 if v else 0 for v in adj)
    cdef const unsigned char* ap = a
    cdef int* path = <int*>malloc((max_len + 1) * sizeof(int))
    cdef unsigned char* on_path = <unsigned char*>malloc(n)
    cdef int length, depth
    if path == NULL or on_path == NULL:
        free(path); free(on_path)
        raise MemoryError()
    try:
        length = 5
        while length <= max_len:
            memset(on_path, 0, n)
            path[0] = 0
            on_path[0] = 1
            depth = 1
            if second >= 0:
                if not ap[second % n]:
                    return None
                path[1] = second % n
                on_path[second % n] = 1
                depth = 2
            if _extend(n, ap, length, path, depth, on_path, second < 0):
                return [path[i] for i in range(length)]
            length += 2
        return None
    finally:
        free(path); free(on_path)
