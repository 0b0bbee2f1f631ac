"""Shared test helpers: named small graphs, seeded random instances, and the
definition-literal 2-SDS oracle.

The oracle is deliberately independent of the package internals: plain sets,
an unpruned ordered-pair scan, and its own domination check.
"""

import random

from secdom import build_graph


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


K1 = complete(1)
K2 = complete(2)
K3 = complete(3)


def random_connected(n, p, rng):
    """Rejection-sampled G(n,p) conditioned on connectivity."""
    while True:
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        G = build_graph(n, edges)
        if G.is_connected():
            return G


def seeded_connected_instances(count, max_n, seed, min_n=2):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.uniform(0.25, 0.8) if n > 2 else 1.0
        out.append(random_connected(n, p, rng))
    return out


def oracle_dominating(G, S):
    S = set(S)
    return all(v in S or any(w in S for w in G.adj[v]) for v in range(G.n))


def oracle_is_2sds(G, S):
    """Literal reading of the definition, ordered-pair scan, no pruning."""
    S = set(S)
    if not oracle_dominating(G, S):
        return False
    for u1 in range(G.n):
        for u2 in range(G.n):
            if u1 == u2:
                continue
            closed1 = set(G.adj[u1]) | {u1}
            closed2 = set(G.adj[u2]) | {u2}
            defended = False
            for v1 in sorted(closed1 & S):
                for v2 in sorted(closed2 & S):
                    if v1 == v2:
                        continue
                    if oracle_dominating(G, (S - {v1, v2}) | {u1, u2}):
                        defended = True
            if not defended:
                return False
    return True
