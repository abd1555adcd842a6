"""Single-unicast index coding with symmetric neighboring consecutive side info.

An instance is a triple (K, D, U): K messages and K receivers, receiver k
wanting message k while already holding the U messages cyclically before
it and the D messages cyclically after it. This module carries the
instance model, its circulant side-information graph, and every closed
form: broadcast rate, capacity, the maximum acyclic induced subgraph
order, the achievable scalar code length, and the minrank bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class FullSideInfo(Exception):
    """U + D = K - 1: every receiver knows all other messages.

    The general code-length formula does not apply; a single parity of all
    K messages is used instead (see codec.single_sum_code).
    """


@dataclass(frozen=True)
class SncInstance:
    """Validated (K, D, U) triple."""

    k: int
    d: int
    u: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"K must be at least 2 (got K={self.k})")
        if not 0 <= self.u <= self.d:
            raise ValueError(f"need 0 <= U <= D (got U={self.u}, D={self.d})")
        if self.u + self.d > self.k - 1:
            raise ValueError(
                f"need U + D <= K - 1 (got U+D={self.u + self.d}, K={self.k})"
            )

    @property
    def full_side_info(self) -> bool:
        return self.u + self.d == self.k - 1


@dataclass(frozen=True)
class SideInfoGraph:
    """Directed graph with an edge k -> j iff receiver k knows message j."""

    k: int
    known: tuple[tuple[int, ...], ...]
    known_sets: tuple[frozenset[int], ...]


def build_graph(inst: SncInstance) -> SideInfoGraph:
    """Circulant adjacency: backward indices ascending, then forward ascending."""
    k, d, u = inst.k, inst.d, inst.u
    known = tuple(
        tuple((v + j) % k for j in range(-u, 0)) + tuple((v + j) % k for j in range(1, d + 1))
        for v in range(k)
    )
    return SideInfoGraph(k, known, tuple(frozenset(row) for row in known))


def induced_acyclic(graph: SideInfoGraph, vertices) -> bool:
    """Kahn's algorithm on the subgraph induced by the given vertices."""
    vs = set(vertices)
    indeg = {v: 0 for v in vs}
    for v in vs:
        for w in graph.known[v]:
            if w in vs:
                indeg[w] += 1
    queue = [v for v, deg in indeg.items() if deg == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in graph.known[v]:
            if w in vs:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return seen == len(vs)


def broadcast_rate(inst: SncInstance) -> Fraction:
    """Minimum code symbols per message symbol, as an exact rational."""
    if inst.full_side_info:
        return Fraction(1)
    return Fraction(inst.k - inst.d + inst.u, inst.u + 1)


def capacity(inst: SncInstance) -> Fraction:
    return 1 / broadcast_rate(inst)


def mais(inst: SncInstance) -> int:
    """Order of the maximum acyclic induced subgraph."""
    return (inst.k - inst.d + inst.u) // (inst.u + 1)


def mais_witness(inst: SncInstance) -> tuple[int, ...]:
    """A maximum acyclic vertex set: every (U+1)-th vertex, starting at 0."""
    t = mais(inst)
    witness = tuple(i * (inst.u + 1) for i in range(t))
    if not induced_acyclic(build_graph(inst), witness):
        raise RuntimeError("witness set is not acyclic; construction bug")
    return witness


def code_length(inst: SncInstance) -> int:
    """Length ceil(K/(U+1)) - floor((D-U)/(U+1)) of the constructed scalar code."""
    if inst.full_side_info:
        raise FullSideInfo("U + D = K - 1 is served by the single-sum code")
    k, d, u = inst.k, inst.d, inst.u
    return -(-k // (u + 1)) - (d - u) // (u + 1)


def optimality_condition(inst: SncInstance) -> bool:
    """True when the constructed length is provably the minrank.

    Requires the broadcast rate to be non-integer and the two division
    remainders to fit inside K mod (U+1).
    """
    k, d, u = inst.k, inst.d, inst.u
    m = u + 1
    if (k - d + u) % m == 0:
        return False
    return (d - u) % m + (k - d + u) % m <= k % m


@dataclass(frozen=True)
class MinrankStatus:
    """Known range for the minrank; exact when the bounds coincide."""

    lo: int
    hi: int

    @property
    def exact(self) -> int | None:
        return self.lo if self.lo == self.hi else None

    def __str__(self) -> str:
        return str(self.lo) if self.lo == self.hi else f"{self.lo}..{self.hi}"


def minrank_status(inst: SncInstance) -> MinrankStatus:
    """Exact minrank where provable, otherwise the best known bounds.

    The upper bound takes the better of the two constructions; it is never
    asserted to be tight outside the proven cases.
    """
    if inst.full_side_info:
        return MinrankStatus(1, 1)
    beta = broadcast_rate(inst)
    gamma = code_length(inst)
    if optimality_condition(inst):
        if gamma != math.ceil(beta):
            raise RuntimeError("optimality condition held but gamma != ceil(beta)")
        return MinrankStatus(gamma, gamma)
    lo = math.ceil(beta)
    hi = min(gamma, inst.k - inst.d - inst.u)
    return MinrankStatus(lo, hi)


def length_slack(inst: SncInstance) -> Fraction:
    """Gap between the constructed length and the broadcast rate; always < 2."""
    slack = code_length(inst) - broadcast_rate(inst)
    assert slack < 2, f"length slack {slack} >= 2 for {inst}"
    return slack


def partial_clique_kappa(inst: SncInstance) -> int:
    """The graph is a kappa-partial clique with kappa = K - D - U - 1."""
    return inst.k - inst.d - inst.u - 1


def mds_code_length(inst: SncInstance) -> int:
    """Symbols used by the partial-clique MDS scheme: K - D - U."""
    return inst.k - inst.d - inst.u


def conjecture_value(inst: SncInstance) -> int:
    """min(constructed length, MDS length), the conjectured minrank."""
    gamma = 1 if inst.full_side_info else code_length(inst)
    return min(gamma, mds_code_length(inst))


@dataclass(frozen=True)
class AnalysisReport:
    """Every closed-form quantity for one instance."""

    inst: SncInstance
    beta: Fraction
    capacity: Fraction
    mais: int
    gamma: int
    optimality: bool
    minrank: MinrankStatus
    kappa: int
    mds_length: int
    conjecture_value: int


def analyze(inst: SncInstance) -> AnalysisReport:
    gamma = 1 if inst.full_side_info else code_length(inst)
    return AnalysisReport(
        inst=inst,
        beta=broadcast_rate(inst),
        capacity=capacity(inst),
        mais=mais(inst),
        gamma=gamma,
        optimality=optimality_condition(inst),
        minrank=minrank_status(inst),
        kappa=partial_clique_kappa(inst),
        mds_length=mds_code_length(inst),
        conjecture_value=conjecture_value(inst),
    )
