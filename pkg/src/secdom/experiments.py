"""Experiment harness: structural-identity replays and approximation-ratio
tables over generated instances."""

from __future__ import annotations

import csv
import sys
import time
from typing import Optional, TextIO

from .domination import DOMINATING, exact_minimum
from .enumgraphs import connected_graphs
from .gadgets import apx_gadget, generate, gs_graph, inapprox_gadget
from .graphs import Graph, build_graph
from .secure import approx_2sds, exact_gamma_2s, verify_2sds

EXACT_2SDS_CAP = 16
EXACT_DOM_CAP = 24


def _report(out: TextIO, ok: bool, check: str, label: str, detail: str) -> bool:
    status = "PASS" if ok else "FAIL"
    out.write(f"{status} {check} graph={label} {detail}\n")
    return ok


def run_identities(
    max_n: int = 4, out: Optional[TextIO] = None, corrupt: bool = False
) -> tuple[int, int]:
    """Replay the gadget identities on all connected graphs up to
    isomorphism with at most max_n vertices.

    Prints one PASS/FAIL line per instance check and a summary; returns
    (passed, failed).  `corrupt` is a harness sanity hook: it perturbs the
    first gadget so that a detectable FAIL must be produced.
    """
    if out is None:
        out = sys.stdout
    passed = failed = 0

    def tally(ok: bool) -> None:
        nonlocal passed, failed
        if ok:
            passed += 1
        else:
            failed += 1

    first = True
    for n in range(1, max_n + 1):
        for idx, G in enumerate(connected_graphs(n, up_to_iso=True)):
            label = f"n{n}#{idx}"
            gamma = exact_minimum(G, DOMINATING).value

            # w1/w2 gadget: vertex count, size bound, explicit witness
            result = inapprox_gadget(G)
            gadget = result.graph
            if corrupt and first:
                # graft a stray vertex onto w1 to break the vertex count
                gadget = build_graph(
                    gadget.n + 1, list(gadget.edges) + [(G.n, gadget.n)]
                )
                first = False
            tally(
                _report(
                    out,
                    gadget.n == G.n + 5,
                    "inapprox-vertex-count",
                    label,
                    f"value={gadget.n} expected={G.n + 5}",
                )
            )
            if gadget.n <= EXACT_2SDS_CAP:
                g2s = exact_gamma_2s(gadget).value
                tally(
                    _report(
                        out,
                        g2s <= gamma + 3,
                        "inapprox-bound",
                        label,
                        f"gamma2s={g2s} bound={gamma + 3}",
                    )
                )
            dstar = exact_minimum(G, DOMINATING).witness
            witness = tuple(sorted(set(dstar) | {G.n, G.n + 1, G.n + 3}))
            tally(
                _report(
                    out,
                    verify_2sds(gadget, witness) is not None,
                    "inapprox-witness",
                    label,
                    f"witness_size={len(witness)}",
                )
            )

            # pendant-path gadget identity (stated for max degree <= 3)
            if G.max_degree() <= 3:
                result = apx_gadget(G)
                ceil_half = (G.n + 1) // 2
                tally(
                    _report(
                        out,
                        result.graph.max_degree() <= 4,
                        "apx-max-degree",
                        label,
                        f"delta={result.graph.max_degree()}",
                    )
                )
                if result.graph.n <= EXACT_2SDS_CAP:
                    g2s = exact_gamma_2s(result.graph).value
                    expected = gamma + 2 * ceil_half
                    tally(
                        _report(
                            out,
                            g2s == expected,
                            "apx-identity",
                            label,
                            f"gamma2s={g2s} expected={expected}",
                        )
                    )

            # star-attachment construction; the 3n identity and its witness
            # need n >= 2 (the pair (v_i, a_i) is only defendable when v_i
            # has a neighbor inside G)
            result = gs_graph(G)
            gs = result.graph
            if G.n >= 2 and gs.n <= EXACT_2SDS_CAP:
                g2s = exact_gamma_2s(gs).value
                tally(
                    _report(
                        out,
                        g2s == 3 * G.n,
                        "gs-identity",
                        label,
                        f"gamma2s={g2s} expected={3 * G.n}",
                    )
                )
            if gs.n <= EXACT_DOM_CAP:
                gs_gamma = exact_minimum(gs, DOMINATING).value
                tally(
                    _report(
                        out,
                        gs_gamma == gamma + G.n,
                        "gs-domination",
                        label,
                        f"gamma={gs_gamma} expected={gamma + G.n}",
                    )
                )
            if G.n >= 2:
                witness = tuple(range(G.n)) + tuple(
                    G.n + 4 * i + j for i in range(G.n) for j in (1, 2)
                )
                tally(
                    _report(
                        out,
                        verify_2sds(gs, witness) is not None,
                        "gs-witness",
                        label,
                        f"witness_size={len(witness)}",
                    )
                )
    out.write(f"passed={passed} failed={failed}\n")
    return passed, failed


def run_ratios(
    family: str,
    n: int,
    trials: int,
    seed: int,
    p: float = 0.4,
    csv_out: Optional[TextIO] = None,
    out: Optional[TextIO] = None,
    exact_cap: int = 9,
) -> tuple[int, int]:
    """Tabulate the greedy 2-SDS size against the exact optimum.

    Random families draw `trials` seeded samples at size n; deterministic
    families emit one row per size up to n.  Returns (rows, violations)
    where a violation is a ratio above Delta+1.
    """
    if out is None:
        out = sys.stdout
    writer = csv.writer(csv_out) if csv_out is not None else None
    header = [
        "family", "n", "m", "delta", "gamma", "gamma2s",
        "approx_size", "ratio", "elapsed_ms",
    ]
    if writer:
        writer.writerow(header)
    rows = violations = 0
    instances: list[Graph] = []
    if family in ("random-connected", "random-split"):
        for t in range(trials):
            instances.append(generate(family, (n, p), seed=seed + t))
    else:
        low = 3 if family == "cycle" else 2
        for size in range(low, n + 1):
            instances.append(generate(family, (size,)))
    for G in instances:
        start = time.perf_counter()
        approx = approx_2sds(G)
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        delta = G.max_degree()
        gamma = gamma2s = None
        if G.n <= exact_cap:
            gamma = exact_minimum(G, DOMINATING).value
            gamma2s = exact_gamma_2s(G).value
        ratio = len(approx) / gamma2s if gamma2s else None
        row = [
            family, G.n, G.m, delta,
            gamma if gamma is not None else "",
            gamma2s if gamma2s is not None else "",
            len(approx),
            f"{ratio:.4f}" if ratio is not None else "",
            f"{elapsed_ms:.3f}",
        ]
        if writer:
            writer.writerow(row)
        rows += 1
        if ratio is not None and ratio > delta + 1:
            violations += 1
            out.write(
                f"FAIL ratio graph=n{G.n} ratio={ratio:.4f} bound={delta + 1}\n"
            )
    out.write(f"rows={rows} violations={violations}\n")
    return rows, violations
