from math import gcd

import pytest


def brute_quadratic_units(n):
    return {x * x % n for x in range(n) if gcd(x, n) == 1}


def brute_distances(n, steps):
    dist = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for s in steps:
                w = (v + s) % n
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


@pytest.fixture
def bq():
    return brute_quadratic_units
