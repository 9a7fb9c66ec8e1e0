"""Ground truth on small pieces of the Cayley graph.

Exact word metric by breadth-first search over canonical PL maps, exact
shortest covering closed walks for small point sets (subset DP over the
metric closure, with brute force as a second opinion), and the doubled
spanning-tree tour.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .plmap import IDENTITY, PLMap, pl_compose, pl_invert
from .words import Alphabet, GroupWord, pl_from_word

DEFAULT_BALL_CAP = 14
DEFAULT_TOUR_CAP = 18
PERMUTATION_CAP = 8


class CapExceeded(ValueError):
    def __init__(self, cap: str, limit: int, requested: int):
        super().__init__(f"{cap} cap exceeded: requested {requested}, limit {limit}")
        self.cap, self.limit, self.requested = cap, limit, requested


class DistanceNotFound(LookupError):
    pass


class DisconnectedError(ValueError):
    def __init__(self, components: list[list[int]]):
        sizes = ", ".join(str(len(c)) for c in components)
        super().__init__(f"induced subgraph has {len(components)} components (sizes {sizes})")
        self.components = components


def _step_maps(alphabet: Alphabet) -> list[PLMap]:
    return [alphabet.letter_map(i, s) for i, s in alphabet.signed_letters()]


@dataclass
class CayleyBall:
    alphabet: Alphabet
    radius: int
    elements: list  # dense id -> PLMap; id 0 is the identity
    index: dict  # PLMap -> id
    distance: list  # id -> |g|
    adjacency: list  # id -> [neighbour id or None] per signed letter

    def __len__(self) -> int:
        return len(self.elements)

    def sphere_sizes(self) -> list[int]:
        sizes = [0] * (self.radius + 1)
        for d in self.distance:
            sizes[d] += 1
        return sizes


def cayley_ball(alphabet: Alphabet, radius: int, cap: int = DEFAULT_BALL_CAP) -> CayleyBall:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if radius > cap:
        raise CapExceeded("ball radius", cap, radius)
    steps = _step_maps(alphabet)
    elements, index, distance = [IDENTITY], {IDENTITY: 0}, [0]
    adjacency = []
    frontier = [0]
    for d in range(radius + 1):
        nxt = []
        for gid in frontier:
            g = elements[gid]
            row = []
            for s in steps:
                h = pl_compose(g, s)
                hid = index.get(h)
                if hid is None and d < radius:
                    hid = len(elements)
                    elements.append(h)
                    index[h] = hid
                    distance.append(d + 1)
                    nxt.append(hid)
                row.append(hid)
            adjacency.append(row)
        frontier = nxt
    return CayleyBall(alphabet, radius, elements, index, distance, adjacency)


def graph_distance(a: PLMap, b: PLMap, alphabet: Alphabet, max_radius: int = 24) -> int:
    """``|a^-1 b|`` in the word metric, by bidirectional BFS."""
    target = pl_compose(pl_invert(a), b)
    if target == IDENTITY:
        return 0
    steps = _step_maps(alphabet)
    seen = ({IDENTITY: 0}, {target: 0})
    frontiers = ([IDENTITY], [target])
    depth = [0, 0]
    while depth[0] + depth[1] < max_radius:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = seen[side], seen[1 - side]
        depth[side] += 1
        best = None
        nxt = []
        for g in frontiers[side]:
            for s in steps:
                h = pl_compose(g, s)
                if h in mine:
                    continue
                mine[h] = depth[side]
                nxt.append(h)
                if h in other:
                    total = depth[side] + other[h]
                    if best is None or total < best:
                        best = total
        if best is not None:
            if best > max_radius:
                break
            return best
        if not nxt:
            break
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
    raise DistanceNotFound(f"distance exceeds max_radius = {max_radius}")


@dataclass
class TourInstance:
    points: list  # distinct PLMaps
    metric: list  # symmetric integer matrix
    alphabet: Optional[Alphabet] = None
    words: Optional[list] = None  # GroupWords naming the points, when known

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        doc = {"metric": self.metric}
        if self.alphabet is not None:
            doc["alphabet"] = self.alphabet.name
        if self.words is not None:
            doc["points"] = [str(w) for w in self.words]
        else:
            doc["points_pl"] = [p.to_json() for p in self.points]
        return doc


def tour_instance(points: Sequence[PLMap], alphabet: Alphabet, max_radius: int = 24,
                  words: Optional[list] = None) -> TourInstance:
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("tour points must be distinct")
    k = len(pts)
    metric = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            metric[i][j] = metric[j][i] = graph_distance(pts[i], pts[j], alphabet, max_radius)
    return TourInstance(pts, metric, alphabet, words)


def instance_from_json(doc, alphabet: Alphabet, max_radius: int = 24) -> TourInstance:
    """Load ``{"points": [words], "metric": optional matrix}``; a missing matrix is computed."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    ws = [GroupWord.parse(t, alphabet) for t in doc["points"]]
    pts = [pl_from_word(w) for w in ws]
    if doc.get("metric") is None:
        return tour_instance(pts, alphabet, max_radius, ws)
    metric = [list(map(int, row)) for row in doc["metric"]]
    if len(metric) != len(pts) or any(len(r) != len(pts) for r in metric):
        raise ValueError("metric matrix does not match the number of points")
    return TourInstance(pts, metric, alphabet, ws)


def metric_axioms(metric: Sequence[Sequence[int]]) -> dict[str, bool]:
    k = len(metric)
    return {
        "zero_diagonal": all(metric[i][i] == 0 for i in range(k)),
        "positive": all(metric[i][j] > 0 for i in range(k) for j in range(k) if i != j),
        "symmetric": all(metric[i][j] == metric[j][i] for i in range(k) for j in range(k)),
        "triangle": all(
            metric[i][j] <= metric[i][m] + metric[m][j]
            for i in range(k) for j in range(k) for m in range(k)
        ),
    }


def _cycle_length(metric, order) -> int:
    return sum(metric[a][b] for a, b in zip(order, order[1:] + order[:1]))


def exact_tour(inst: TourInstance, cap: int = DEFAULT_TOUR_CAP) -> tuple[list[int], int]:
    """Shortest closed walk through every point, via Held-Karp over the metric.

    Returns the visiting order (starting at point 0) and its length.
    """
    k = len(inst)
    if k == 0:
        raise ValueError("empty instance")
    if k > cap:
        raise CapExceeded("tour size", cap, k)
    if k <= 2:
        order = list(range(k))
        return order, _cycle_length(inst.metric, order)
    D = np.asarray(inst.metric, dtype=np.int64)
    m = k - 1
    full = 1 << m
    inf = np.int64(1) << 40
    dp = np.full((full, m), inf, dtype=np.int64)
    parent = np.full((full, m), -1, dtype=np.int8)
    for j in range(m):
        dp[1 << j, j] = D[0, j + 1]
    masks = np.arange(full, dtype=np.int64)
    popcount = np.zeros(full, dtype=np.int8)
    for j in range(m):
        popcount += ((masks >> j) & 1).astype(np.int8)
    into = D[1:, 1:]  # into[a, j]: leg from node a+1 to node j+1
    for size in range(2, m + 1):
        layer = masks[popcount == size]
        for j in range(m):
            sel = layer[(layer >> j) & 1 == 1]
            cand = dp[sel ^ (1 << j)] + into[:, j]
            best = cand.argmin(axis=1)
            dp[sel, j] = cand[np.arange(len(sel)), best]
            parent[sel, j] = best
    closing = dp[full - 1] + D[1:, 0]
    last = int(closing.argmin())
    length = int(closing[last])
    order, mask, j = [], full - 1, last
    while j >= 0:
        order.append(j + 1)
        prev = int(parent[mask, j])
        mask ^= 1 << j
        j = prev
    order.append(0)
    order.reverse()
    return order, length


@lru_cache(maxsize=None)
def _cyclic_orders(k: int) -> np.ndarray:
    # every order that starts at point 0, closed back to 0: shape (k-1)! x (k+1)
    rest = np.array(list(itertools.permutations(range(1, k))), dtype=np.intp).reshape(-1, k - 1)
    zeros = np.zeros((len(rest), 1), dtype=np.intp)
    return np.hstack([zeros, rest, zeros])


def permutation_tour(inst: TourInstance, cap: int = PERMUTATION_CAP) -> tuple[list[int], int]:
    """Brute force over all cyclic orders; an independent check on :func:`exact_tour`."""
    k = len(inst)
    if k == 0:
        raise ValueError("empty instance")
    if k > cap:
        raise CapExceeded("permutation size", cap, k)
    if k == 1:
        return [0], 0
    D = np.asarray(inst.metric, dtype=np.int64)
    orders = _cyclic_orders(k)
    lengths = D[orders[:, :-1], orders[:, 1:]].sum(axis=1)
    best = int(lengths.argmin())
    return [int(i) for i in orders[best, :-1]], int(lengths[best])


def tau(length: int, card: int) -> Fraction:
    return Fraction(length, card)


def induced_adjacency(points: Sequence[PLMap], alphabet: Alphabet) -> list[list[int]]:
    index = {p: i for i, p in enumerate(points)}
    steps = _step_maps(alphabet)
    adj = []
    for p in points:
        nbrs = {index[h] for h in (pl_compose(p, s) for s in steps) if h in index}
        nbrs.discard(index[p])
        adj.append(sorted(nbrs))
    return adj


def components(adj: Sequence[Sequence[int]]) -> list[list[int]]:
    seen, out = set(), []
    for root in range(len(adj)):
        if root in seen:
            continue
        comp, stack = [], [root]
        seen.add(root)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in adj[a]:
                if b not in seen:
                    seen.add(b)
                    stack.append(b)
        out.append(sorted(comp))
    return out


def spanning_tree_tour(points: Sequence[PLMap], alphabet: Alphabet,
                       adjacency: Optional[Sequence[Sequence[int]]] = None) -> tuple[list[int], int]:
    """Walk around a depth-first spanning tree of the induced subgraph.

    Every tree edge is traversed twice, so the closed walk has exactly
    ``2 (Card - 1)`` edges.  Returns the vertex sequence (first == last)
    and that edge count.
    """
    if not points:
        raise ValueError("empty point set")
    adj = induced_adjacency(points, alphabet) if adjacency is None else adjacency
    comps = components(adj)
    if len(comps) > 1:
        raise DisconnectedError(comps)
    walk = [0]
    visited = {0}
    stack = [(0, iter(adj[0]))]
    while stack:
        node, it = stack[-1]
        for nb in it:
            if nb not in visited:
                visited.add(nb)
                walk.append(nb)
                stack.append((nb, iter(adj[nb])))
                break
        else:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
    return walk, len(walk) - 1


def is_xi_related(elements: Iterable[PLMap], xi: PLMap) -> bool:
    """Every ``g`` has ``g xi`` or ``g xi^-1`` in the set."""
    s = set(elements)
    if not s:
        raise ValueError("a xi-related set must be nonempty")
    xi_inv = pl_invert(xi)
    return all(pl_compose(g, xi) in s or pl_compose(g, xi_inv) in s for g in s)
