"""Independent ground truth: exhaustive searches and algebraic decodability.

Nothing here reuses the closed forms or the code construction; results
are minima and memberships computed directly from definitions, so the
rest of the package can be checked against them.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import codec, gf2
from .snc import SideInfoGraph

MAIS_CAP = 20
MINRANK_CAP = 26


class TooLargeError(ValueError):
    """The enumeration would exceed the configured cap."""


def brute_mais(graph: SideInfoGraph, cap: int = MAIS_CAP) -> tuple[int, tuple[int, ...]]:
    """Largest vertex set inducing an acyclic subgraph, with one witness.

    Subsets are scanned as bitmasks in increasing order; a set is acyclic
    iff it has a sink (a vertex with no edges into the rest of the set)
    whose removal leaves an acyclic set, since no cycle passes through a
    sink.
    """
    k = graph.k
    if k > cap:
        raise TooLargeError(f"K={k} exceeds the 2^K subset cap of {cap}")
    out_mask = [0] * k
    for v in range(k):
        for w in graph.known[v]:
            out_mask[v] |= 1 << w
    acyclic = bytearray(1 << k)
    acyclic[0] = 1
    best, best_mask = 0, 0
    for mask in range(1, 1 << k):
        rest = mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if out_mask[v] & mask & ~(1 << v) == 0:
                acyclic[mask] = acyclic[mask ^ (1 << v)]
                break
        if acyclic[mask]:
            size = mask.bit_count()
            if size > best:
                best, best_mask = size, mask
    witness = tuple(v for v in range(k) if best_mask >> v & 1)
    return best, witness


def _row_candidates(graph: SideInfoGraph) -> list[list[int]]:
    # every fitting row for k: 1 on the diagonal plus any subset of the known set
    cands = []
    for k in range(graph.k):
        adj = graph.known[k]
        row_base = 1 << k
        options = []
        for pick in range(1 << len(adj)):
            v = row_base
            for i, j in enumerate(adj):
                if pick >> i & 1:
                    v |= 1 << j
            options.append(v)
        options.sort(key=lambda v: (-v.bit_count(), v))
        cands.append(options)
    return cands


def _exists_rank_at_most(cands: list[list[int]], r: int, first: list[int] | None = None) -> bool:
    k = len(cands)
    pivots: dict[int, int] = {}

    def reduce(v: int) -> int:
        while v:
            p = v.bit_length()
            w = pivots.get(p)
            if w is None:
                return v
            v ^= w
        return 0

    def go(i: int, rank: int) -> bool:
        if i == k:
            return True
        options = first if (i == 0 and first is not None) else cands[i]
        seen = set()
        reduced = []
        for cand in options:
            red = reduce(cand)
            if red in seen:
                continue
            seen.add(red)
            reduced.append(red)
        reduced.sort(key=lambda v: v != 0)
        for red in reduced:
            if red == 0:
                if go(i + 1, rank):
                    return True
            elif rank < r:
                p = red.bit_length()
                pivots[p] = red
                if go(i + 1, rank + 1):
                    return True
                del pivots[p]
        return False

    return go(0, 0)


def _minrank_worker(args) -> bool:
    cands, r, chunk = args
    return _exists_rank_at_most(cands, r, first=chunk)


def brute_minrank2(
    graph: SideInfoGraph,
    early_stop: int | None = None,
    cap: int = MINRANK_CAP,
    jobs: int = 1,
) -> int:
    """Minimum GF(2) rank over all fitting matrices of the graph.

    A fitting matrix has 1s on the diagonal and support inside the side
    information otherwise. The search deepens a target rank r upward and
    backtracks over per-row choices, pruning any prefix whose rank
    already exceeds r; the first r admitting a complete assignment is the
    minimum. Passing early_stop starts at that target, which is exact
    whenever early_stop is a valid lower bound.
    """
    free_bits = sum(len(a) for a in graph.known)
    if free_bits > cap:
        raise TooLargeError(
            f"{free_bits} free positions exceed the 2^bits cap of {cap}"
        )
    cands = _row_candidates(graph)
    start = max(1, early_stop) if early_stop is not None else 1
    for r in range(start, graph.k + 1):
        if jobs > 1 and len(cands[0]) > 1:
            chunks = [cands[0][i::jobs] for i in range(jobs) if cands[0][i::jobs]]
            with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
                if any(pool.map(_minrank_worker, [(cands, r, ch) for ch in chunks])):
                    return r
        elif _exists_rank_at_most(cands, r):
            return r
    raise AssertionError("identity always fits, so rank K must succeed")


def check_decodable(graph: SideInfoGraph, a) -> np.ndarray:
    """Per-receiver test that e_k lies in span(columns of a) + span(side info)."""
    mat = gf2.as_bits(a, ndim=2)
    k = graph.k
    if mat.shape[0] != k:
        raise ValueError("matrix must have one row per message")
    base: dict[int, int] = {}
    for col in gf2._pack_rows(np.ascontiguousarray(mat.T)):
        while col:
            p = col.bit_length()
            if p in base:
                col ^= base[p]
            else:
                base[p] = col
                break
    out = np.zeros(k, dtype=bool)
    for rec in range(k):
        pivots = dict(base)
        for j in graph.known[rec]:
            v = 1 << (k - 1 - j)
            while v:
                p = v.bit_length()
                if p in pivots:
                    v ^= pivots[p]
                else:
                    pivots[p] = v
                    break
        e = 1 << (k - 1 - rec)
        while e:
            p = e.bit_length()
            if p not in pivots:
                break
            e ^= pivots[p]
        out[rec] = e == 0
    return out


@dataclass(frozen=True)
class SimReport:
    """Outcome of a seeded encode/decode round-trip run."""

    trials: int
    seed: int
    decodes: int
    failures: int
    first_failure: tuple[int, int, str] | None

    @property
    def passed(self) -> bool:
        return self.failures == 0


def roundtrip_sim(spec: codec.CodeSpec, trials: int, seed: int) -> SimReport:
    """Encode seeded random messages and decode at every receiver."""
    k = spec.inst.k
    rng = np.random.default_rng(seed)
    known = spec.graph.known
    failures = 0
    first = None
    decodes = 0
    for t in range(trials):
        x = rng.integers(0, 2, size=k, dtype=np.uint8)
        c = codec.encode(spec, x)
        for rec in range(k):
            side = {j: int(x[j]) for j in known[rec]}
            decodes += 1
            try:
                got = codec.decode(spec, rec, c, side)
                ok = got == int(x[rec])
                detail = "" if ok else f"expected {int(x[rec])}, got {got}"
            except (codec.SystemSingularError, gf2.NotUniqueError, gf2.NoSolutionError) as exc:
                ok, detail = False, f"decode error: {exc}"
            if not ok:
                failures += 1
                if first is None:
                    first = (t, rec, detail)
    return SimReport(trials, seed, decodes, failures, first)
