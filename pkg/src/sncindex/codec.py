"""Scalar linear encoder and decoder built on the stacked-identity matrices.

Messages are grouped into consecutive runs of U+1 (the last group may be
shorter); each group's parity is an extended symbol, and the extended
vector is multiplied by a K1 x N matrix whose cyclic windows are all
invertible. Every receiver recovers its message by cancelling the
extended symbols it can compute from side information and solving the
remaining window.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from . import gf2
from .air import AirMatrix, build_air
from .snc import FullSideInfo, SideInfoGraph, SncInstance, build_graph


class LengthMismatchError(ValueError):
    """Input vector length does not match the instance."""


class SideInfoMismatchError(ValueError):
    """The supplied side information does not cover exactly the known set."""


class SystemSingularError(RuntimeError):
    """The decoding window was singular; indicates a construction bug."""


class PlanNotFoundError(RuntimeError):
    """No code-symbol combination isolates the wanted group; must not happen."""


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """Everything a transmitter and its receivers need for one instance.

    groups[j] lists the message indices whose parity is extended symbol j;
    expanded replicates row group_of[k] of the encoding matrix so that the
    codeword is also a direct product with the raw message vector.
    """

    inst: SncInstance
    k1: int
    d1: int
    n: int
    groups: tuple[tuple[int, ...], ...]
    group_of: tuple[int, ...]
    air: AirMatrix
    expanded: np.ndarray
    graph: SideInfoGraph
    _solvers: dict = field(default_factory=dict, repr=False)


def build_code(inst: SncInstance) -> CodeSpec:
    """The general construction; length equals the code_length formula."""
    if inst.full_side_info:
        raise FullSideInfo("use single_sum_code when U + D = K - 1")
    k, d, u = inst.k, inst.d, inst.u
    k1 = -(-k // (u + 1))
    d1 = (d - u) // (u + 1)
    n = k1 - d1
    groups = tuple(
        tuple(range(j * (u + 1), min((j + 1) * (u + 1), k))) for j in range(k1)
    )
    group_of = tuple(x // (u + 1) for x in range(k))
    mat = build_air(k1, n)
    expanded = mat.matrix[np.array(group_of)]
    expanded.flags.writeable = False
    return CodeSpec(inst, k1, d1, n, groups, group_of, mat, expanded, build_graph(inst))


def single_sum_code(inst: SncInstance) -> CodeSpec:
    """One code symbol, the parity of all K messages (U + D = K - 1 only)."""
    if not inst.full_side_info:
        raise ValueError("single_sum_code requires U + D = K - 1")
    k = inst.k
    expanded = np.ones((k, 1), dtype=np.uint8)
    expanded.flags.writeable = False
    return CodeSpec(
        inst,
        k1=1,
        d1=0,
        n=1,
        groups=(tuple(range(k)),),
        group_of=(0,) * k,
        air=build_air(1, 1),
        expanded=expanded,
        graph=build_graph(inst),
    )


def code_for(inst: SncInstance) -> CodeSpec:
    """Whichever of the two constructions applies to the instance."""
    return single_sum_code(inst) if inst.full_side_info else build_code(inst)


def extend(spec: CodeSpec, x) -> np.ndarray:
    """Fold the K message bits into the K1 group parities."""
    xx = gf2.as_bits(x, ndim=1)
    if xx.shape[0] != spec.inst.k:
        raise LengthMismatchError(f"expected {spec.inst.k} bits, got {xx.shape[0]}")
    starts = np.array([g[0] for g in spec.groups])
    return np.bitwise_xor.reduceat(xx, starts)


def encode(spec: CodeSpec, x) -> np.ndarray:
    """Codeword of length N: extended vector times the encoding matrix."""
    return gf2.vec_mat(extend(spec, x), spec.air.matrix)


def _solver_vector(spec: CodeSpec, j: int) -> np.ndarray:
    # column of the inverted window that recovers group j's parity
    w = spec._solvers.get(j)
    if w is None:
        order = [(j + spec.d1 + i) % spec.k1 for i in range(1, spec.n + 1)]
        try:
            inv = gf2.invert(spec.air.matrix[order])
        except gf2.NotUniqueError as exc:
            raise SystemSingularError(f"window starting after group {j} is singular") from exc
        w = np.ascontiguousarray(inv[:, spec.n - 1])
        spec._solvers[j] = w
    return w


def decode(spec: CodeSpec, k: int, c, side: Mapping[int, int]) -> int:
    """Recover message k from the codeword and the receiver's side information.

    The receiver first computes the group parities it fully knows (the d1
    groups after its own), subtracts their rows from the codeword, solves
    the remaining cyclic window (always invertible), and finally strips
    the other messages of its own group.
    """
    if not 0 <= k < spec.inst.k:
        raise ValueError(f"receiver index {k} out of range")
    cc = gf2.as_bits(c, ndim=1)
    if cc.shape[0] != spec.n:
        raise LengthMismatchError(f"expected a codeword of {spec.n} bits")
    if side.keys() != spec.graph.known_sets[k]:
        raise SideInfoMismatchError(
            f"side information must cover exactly the known set of receiver {k}"
        )
    if any(v not in (0, 1) for v in side.values()):
        raise ValueError("side information values must be bits")
    j = spec.group_of[k]
    c2 = cc.copy()
    for i in range(1, spec.d1 + 1):
        g = (j + i) % spec.k1
        parity = 0
        for msg in spec.groups[g]:
            parity ^= side[msg]
        if parity:
            c2 ^= spec.air.matrix[g]
    w = _solver_vector(spec, j)
    y_j = int((c2 & w).sum() & 1)
    for msg in spec.groups[j]:
        if msg != k:
            y_j ^= side[msg]
    return y_j


@dataclass(frozen=True)
class ReceiverPlan:
    """Code symbols to add, and the group parities cancelled afterwards."""

    receiver: int
    symbols: tuple[int, ...]
    cancelled: tuple[int, ...]


@dataclass(frozen=True)
class DecodePlan:
    entries: tuple[ReceiverPlan, ...]

    def table_rows(self) -> list[tuple[int, int, tuple[int, ...]]]:
        """Maximal runs of consecutive receivers sharing a symbol set."""
        rows = []
        for e in self.entries:
            if rows and rows[-1][2] == e.symbols:
                rows[-1] = (rows[-1][0], e.receiver, e.symbols)
            else:
                rows.append((e.receiver, e.receiver, e.symbols))
        return rows


def extract_plan(spec: CodeSpec) -> DecodePlan:
    """Minimal add-only decoding schedules, one per message group.

    For each group j, the usable cancellations are the groups fully known
    to every receiver of group j. The smallest set of code symbols whose
    column sum hits group j plus only such groups is found by exhaustive
    search over subsets, ordered by size and then lexicographically, so
    all receivers of a group share one schedule.
    """
    k1, n = spec.k1, spec.n
    cols = gf2._pack_rows(spec.air.matrix.T)
    group_sets = [frozenset(g) for g in spec.groups]

    fully_known: list[set[int]] = []
    for j in range(k1):
        shared = None
        for k in spec.groups[j]:
            known = spec.graph.known_sets[k]
            mine = {i for i in range(k1) if i != j and group_sets[i] <= known}
            shared = mine if shared is None else shared & mine
        fully_known.append(shared or set())

    group_plans: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for j in range(k1):
        target = 1 << (k1 - 1 - j)
        allowed = 0
        for i in fully_known[j]:
            allowed |= 1 << (k1 - 1 - i)
        found = None
        for size in range(1, n + 1):
            for combo in itertools.combinations(range(n), size):
                t = 0
                for idx in combo:
                    t ^= cols[idx]
                if t & target and (t ^ target) & ~allowed == 0:
                    rest = t ^ target
                    cancelled = tuple(
                        i for i in range(k1) if rest >> (k1 - 1 - i) & 1
                    )
                    found = (combo, cancelled)
                    break
            if found:
                break
        if found is None:
            raise PlanNotFoundError(f"no combination isolates group {j}")
        group_plans.append(found)

    entries = tuple(
        ReceiverPlan(k, *group_plans[spec.group_of[k]]) for k in range(spec.inst.k)
    )
    return DecodePlan(entries)
