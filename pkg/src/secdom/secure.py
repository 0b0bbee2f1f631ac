"""2-secure domination: certificate verifier, exact solver, and the two
approximation pipelines (the greedy 2-SDS algorithm and the derived
dominating-set approximation with its patch rules)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import kernel
from .domination import (
    BudgetExceededError,
    DOMINATING,
    SolveReport,
    exact_minimum,
    greedy_2dominating,
    greedy_dominating,
    is_dominating,
)
from .graphs import Graph, check_vertex_set, induced_subgraph

DEFAULT_2SDS_BUDGET = 16


class DisconnectedGraphError(ValueError):
    """Solver entry points require connected input."""


class PatchInsufficientError(RuntimeError):
    """The two patch rules of the dominating-set approximation did not
    restore domination; carries the instance and the gadget solution."""

    def __init__(self, G: Graph, gadget_set: tuple[int, ...]):
        super().__init__(
            "patch rules left the returned set non-dominating; "
            f"instance n={G.n} m={G.m}, gadget set {gadget_set}"
        )
        self.G = G
        self.gadget_set = gadget_set


@dataclass(frozen=True)
class DefenseCertificate:
    """Per attack pair {u1,u2}, the defender pair (v1,v2) witnessing the
    2-secure condition.  Entries cover all C(n,2) unordered pairs."""

    entries: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def replay(self, G: Graph, S: tuple[int, ...]) -> bool:
        """Re-check every stored swap from scratch; certificates are
        self-validating."""
        sset = set(S)
        pairs = {
            (u1, u2) for u1 in range(G.n) for u2 in range(u1 + 1, G.n)
        }
        if set(self.entries) != pairs:
            return False
        for (u1, u2), (v1, v2) in self.entries.items():
            if v1 == v2 or v1 not in sset or v2 not in sset:
                return False
            if v1 not in G.closed_neighborhood(u1):
                return False
            if v2 not in G.closed_neighborhood(u2):
                return False
            swapped = (sset - {v1, v2}) | {u1, u2}
            if not is_dominating(G, swapped):
                return False
        return True


def find_defenders(
    G: Graph, S, u1: int, u2: int
) -> Optional[tuple[int, int]]:
    """Lexicographically least ordered defender pair for the attack (u1,u2).

    Requires v1 in N[u1] and v2 in N[u2], both in S, v1 != v2, and the
    swapped set (S - {v1,v2}) + {u1,u2} dominating.  None if no pair works.
    """
    if u1 == u2:
        raise ValueError("attack vertices must be distinct")
    S = check_vertex_set(G, S)
    sset = set(S)
    masks = G.closed_masks()
    full = (1 << G.n) - 1
    smask = 0
    for v in S:
        smask |= 1 << v
    attack = (1 << u1) | (1 << u2)
    cand1 = [v for v in G.closed_neighborhood(u1) if v in sset]
    cand2 = [v for v in G.closed_neighborhood(u2) if v in sset]
    for v1 in cand1:
        for v2 in cand2:
            if v1 == v2:
                continue
            swapped = (smask & ~((1 << v1) | (1 << v2))) | attack
            covered = 0
            m = swapped
            while m:
                low = m & -m
                covered |= masks[low.bit_length() - 1]
                m ^= low
            if covered == full:
                return (v1, v2)
    return None


def _scan_2sds(G: Graph, S, build_certificate: bool):
    """Shared verifier core: returns (certificate|None, failure description).

    Failure is None on success, otherwise one of
    ("too-small", size), ("undominated", vertex), ("pair", (u1, u2)).
    """
    if G.n < 2:
        raise ValueError("2-SDS verification needs at least 2 vertices")
    S = check_vertex_set(G, S)
    if len(S) < 2:
        return None, ("too-small", len(S))
    if not is_dominating(G, S):
        covered = set()
        for v in S:
            covered.update(G.closed_neighborhood(v))
        bad = min(set(range(G.n)) - covered)
        return None, ("undominated", bad)
    entries: dict[tuple[int, int], tuple[int, int]] = {}
    for u1 in range(G.n):
        for u2 in range(u1 + 1, G.n):
            defenders = find_defenders(G, S, u1, u2)
            if defenders is None:
                return None, ("pair", (u1, u2))
            if build_certificate:
                entries[(u1, u2)] = defenders
    return DefenseCertificate(entries=entries), None


def verify_2sds(G: Graph, S) -> Optional[DefenseCertificate]:
    """Full certificate if S is a 2-SDS of G, else None.

    Rejects |S| < 2 outright (two distinct defenders are required) and
    non-dominating sets before any pair work.
    """
    cert, _ = _scan_2sds(G, S, build_certificate=True)
    return cert


def first_failure(G: Graph, S):
    """None if S is a 2-SDS; otherwise the first failure, one of
    ("too-small", size), ("undominated", vertex), ("pair", (u1, u2))."""
    _, failure = _scan_2sds(G, S, build_certificate=False)
    return failure


def exact_gamma_2s(G: Graph, budget: int = DEFAULT_2SDS_BUDGET) -> SolveReport:
    """Minimum 2-SDS by size-increasing enumeration.

    Starts at the lower bound max(2, gamma(G)); candidates are pruned to
    dominating sets before the pair check.  Always terminates: V itself is a
    2-SDS of a connected graph.  The witness is the lexicographically least
    minimum set and ships with its defense certificate.
    """
    if G.n < 2:
        raise ValueError("exact_gamma_2s needs at least 2 vertices")
    if not G.is_connected():
        raise DisconnectedGraphError("exact_gamma_2s requires a connected graph")
    if G.n > budget:
        raise BudgetExceededError(G.n, budget)
    gamma = exact_minimum(G, DOMINATING, budget=max(budget, G.n)).value
    masks = list(G.closed_masks())
    examined = 0
    for k in range(max(2, gamma), G.n + 1):
        witness, count = kernel.solve_level(masks, k)
        examined += count
        if witness is not None:
            cert, _ = _scan_2sds(G, witness, build_certificate=True)
            assert cert is not None
            return SolveReport(
                problem="2sds",
                value=k,
                witness=witness,
                certificate=cert,
                subsets_examined=examined,
            )
    raise AssertionError("V is always a 2-SDS of a connected graph")  # pragma: no cover


def approx_2sds(G: Graph) -> tuple[int, ...]:
    """Greedy 2-SDS: a greedy 2-dominating set, then a greedy dominating set
    of the remaining induced subgraph, mapped back and unioned.

    The output always passes the verifier, within Delta(G)+1 times the
    optimum.
    """
    if G.n < 2:
        raise ValueError("approx_2sds needs at least 2 vertices")
    if not G.is_connected():
        raise DisconnectedGraphError("approx_2sds requires a connected graph")
    d2 = greedy_2dominating(G)
    rest = [v for v in range(G.n) if v not in set(d2)]
    if not rest:
        return d2
    H, old_to_new = induced_subgraph(G, rest)
    new_to_old = {new: old for old, new in old_to_new.items()}
    dprime = [new_to_old[v] for v in greedy_dominating(H)]
    return tuple(sorted(set(d2) | set(dprime)))


def dom_set_approx(
    G: Graph,
    k: int,
    budget: int = 24,
) -> tuple[int, ...]:
    """Dominating-set approximation built on the 2-SDS pipeline.

    If an exact dominating set of size at most k exists, return it.
    Otherwise run the greedy 2-SDS algorithm on the inapproximability gadget,
    intersect with the original vertices, and apply the two patch rules (each
    adds at most the least-id uncovered vertex).  A final domination
    assertion guards soundness; its failure raises PatchInsufficientError.
    """
    from .gadgets import inapprox_gadget  # local import: gadgets uses secure-free deps

    if G.n < 1:
        raise ValueError("dom_set_approx needs at least one vertex")
    if not G.is_connected():
        raise DisconnectedGraphError("dom_set_approx requires a connected graph")
    if k < 1:
        raise ValueError("k must be a positive integer")
    report = exact_minimum(G, DOMINATING, budget=budget)
    if report.value <= k:
        return report.witness
    result = inapprox_gadget(G)
    n = G.n
    w1, w2, z1 = n, n + 1, n + 2
    s = set(approx_2sds(result.graph))
    d = sorted(v for v in s if v < n)

    def uncovered() -> list[int]:
        masks = G.closed_masks()
        covered = 0
        for v in d:
            covered |= masks[v]
        return [v for v in range(n) if not (covered >> v) & 1]

    if w2 in s:
        missing = uncovered()
        if missing:
            d = sorted(d + [missing[0]])
    if w1 in s and z1 in s:
        missing = uncovered()
        if missing:
            d = sorted(d + [missing[0]])
    if not is_dominating(G, d):
        raise PatchInsufficientError(G, tuple(sorted(s)))
    return tuple(d)
