"""Shifted energy on ``B (x) B`` by propagation over the tensor crystal graph.

Starting from ``F(phi (x) phi) = 0``, each ``f_i`` move on the tensor product
changes ``F`` by exactly -1 (when ``f_i`` acts on the first factor) or +1
(second factor).  Edges are walked in both directions, so vertices reachable
only through ``e_i`` moves are still covered.  Any disagreement between two
paths aborts.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .crystal import Crystal, CrystalElement, build_crystal
from .rootsystem import AffineType


class ConsistencyError(RuntimeError):
    """Two propagation paths assign different values to one vertex."""


class CoverageError(RuntimeError):
    """The traversal did not reach every vertex of ``B (x) B``."""


class IntegrityError(ValueError):
    """A stored value violates an exactness or range constraint."""


FIRST, SECOND = 0, 1


@dataclass(frozen=True)
class TensorGraph:
    """Arrows of ``B (x) B``; vertex ``(b1, b2)`` is encoded as ``b1 * |B| + b2``.

    ``head[v, i]`` is the target of ``f_i`` from ``v`` (or -1) and
    ``factor[v, i]`` says which tensor factor it acted on.
    """

    size: int
    head: np.ndarray
    factor: np.ndarray

    def vertex(self, b1: int, b2: int) -> int:
        return b1 * self.size + b2

    def split(self, v: int) -> tuple[int, int]:
        return divmod(v, self.size)

    @property
    def n_vertices(self) -> int:
        return self.size * self.size

    def edges(self):
        """Iterate ``(tail, head, i, factor)`` over every arrow."""
        tails, nodes = np.nonzero(self.head >= 0)
        for v, i in zip(tails.tolist(), nodes.tolist()):
            yield v, int(self.head[v, i]), i, int(self.factor[v, i])


def build_tensor_arrows(crystal: Crystal) -> TensorGraph:
    nb = len(crystal)
    phi = crystal.phi_table()
    eps = crystal.epsilon_table()
    f = np.asarray(crystal.f)
    nn = crystal.n_nodes
    head = np.full((nb * nb, nn), -1, dtype=np.int64)
    factor = np.full((nb * nb, nn), -1, dtype=np.int8)
    b1 = np.repeat(np.arange(nb), nb)
    b2 = np.tile(np.arange(nb), nb)
    for i in range(nn):
        on_first = phi[b1, i] > eps[b2, i]
        # on_first implies phi_i(b1) > 0, so f_i(b1) exists there
        t1 = f[b1, i]
        t2 = f[b2, i]
        first_ok = on_first & (t1 >= 0)
        second_ok = ~on_first & (t2 >= 0)
        head[first_ok, i] = t1[first_ok] * nb + b2[first_ok]
        factor[first_ok, i] = FIRST
        head[second_ok, i] = b1[second_ok] * nb + t2[second_ok]
        factor[second_ok, i] = SECOND
    head.flags.writeable = False
    factor.flags.writeable = False
    return TensorGraph(nb, head, factor)


def _undirected(graph: TensorGraph) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(graph.n_vertices)]
    for tail, head, _i, fac in graph.edges():
        delta = -1 if fac == FIRST else 1
        adj[tail].append((head, delta))
        adj[head].append((tail, -delta))
    return adj


def compute_F(crystal: Crystal, seed: int | None = None) -> np.ndarray:
    """Values of the shifted energy as an ``(|B|, |B|)`` array ``F[b1, b2]``.

    With ``seed`` the frontier is processed in a random order and neighbour
    lists are shuffled; the result must not depend on it.
    """
    graph = build_tensor_arrows(crystal)
    adj = _undirected(graph)
    rng = random.Random(seed) if seed is not None else None
    start = graph.vertex(crystal.ground, crystal.ground)
    value = np.full(graph.n_vertices, np.iinfo(np.int64).min, dtype=np.int64)
    unset = value[0]
    value[start] = 0
    if rng is None:
        queue = deque([start])
        pop = queue.popleft
        push = queue.append
    else:
        pool = [start]

        def pop() -> int:
            k = rng.randrange(len(pool))
            pool[k], pool[-1] = pool[-1], pool[k]
            return pool.pop()

        push = pool.append
        queue = pool
    while queue:
        v = pop()
        nbrs = adj[v]
        if rng is not None:
            nbrs = nbrs[:]
            rng.shuffle(nbrs)
        fv = value[v]
        for w, delta in nbrs:
            if value[w] == unset:
                value[w] = fv + delta
                push(w)
            elif value[w] != fv + delta:
                b1, b2 = graph.split(w)
                raise ConsistencyError(
                    f"F({crystal.elements[b1]} (x) {crystal.elements[b2]}) is both "
                    f"{value[w]} and {fv + delta}")
    missing = np.flatnonzero(value == unset)
    if missing.size:
        b1, b2 = graph.split(int(missing[0]))
        raise CoverageError(
            f"{missing.size} vertices unreached, e.g. "
            f"{crystal.elements[b1]} (x) {crystal.elements[b2]}")
    return value.reshape(graph.size, graph.size)


@dataclass(frozen=True, eq=False)
class DifferenceMatrix:
    type: AffineType
    order: tuple[CrystalElement, ...]
    entries: np.ndarray  # entries[b1, b2] = F(b1 (x) b2)

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.order]

    def __getitem__(self, key: tuple[CrystalElement | str, CrystalElement | str]) -> int:
        crystal = build_crystal(self.type)
        b1, b2 = key
        return int(self.entries[crystal.index(b1), crystal.index(b2)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferenceMatrix):
            return NotImplemented
        return (self.type == other.type and self.order == other.order
                and np.array_equal(self.entries, other.entries))

    __hash__ = None


@lru_cache(maxsize=None)
def difference_matrix(type: AffineType | str) -> DifferenceMatrix:
    crystal = build_crystal(type)
    entries = compute_F(crystal)
    entries.flags.writeable = False
    return DifferenceMatrix(crystal.type, crystal.elements, entries)


def recover_H(matrix: DifferenceMatrix, b1: CrystalElement | str,
              b2: CrystalElement | str) -> int:
    """Energy ``H(b1 (x) b2)`` recovered from ``F``; must be 0, 1 or 2."""
    crystal = build_crystal(matrix.type)
    i, j = crystal.index(b1), crystal.index(b2)
    return _recover(matrix.entries[i, j], crystal.elements[i].ht_wt,
                    crystal.elements[j].ht_wt, crystal.config.ht_delta)


def _recover(f: int, h1: int, h2: int, ht_delta: int) -> int:
    num = int(f) - h1 + h2
    q, r = divmod(num, ht_delta)
    if r or q not in (0, 1, 2):
        raise IntegrityError(f"F={f} gives H={num}/{ht_delta}, expected 0, 1 or 2")
    return q


def energy_matrix(matrix: DifferenceMatrix) -> np.ndarray:
    """All recovered ``H`` values; raises IntegrityError on any bad cell."""
    crystal = build_crystal(matrix.type)
    ht = crystal.ht_wt
    num = matrix.entries - ht[:, None] + ht[None, :]
    hd = crystal.config.ht_delta
    if np.any(num % hd) or np.any((num < 0) | (num > 2 * hd)):
        bad = np.argwhere((num % hd != 0) | (num < 0) | (num > 2 * hd))[0]
        raise IntegrityError(
            f"cell ({crystal.elements[bad[0]]}, {crystal.elements[bad[1]]}) "
            f"has non-integral or out-of-range energy")
    return num // hd
