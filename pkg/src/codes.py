"""
Chebyshev distance on permutations and desk-scale permutation-code search
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from .errors import CapacityError, DomainError

logger = logging.getLogger(__name__)

BALL_MAX_N = 9
GREEDY_MAX_N = 8
EXACT_MAX_N = 5
ORDERS = ("lex", "reverse", "random")


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n} stored as its image array"""

    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise DomainError(f"{image} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.image)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.image)


@dataclass
class Code:
    """Permutations of one length with pairwise Chebyshev distance >= min_distance"""

    n: int
    min_distance: int
    words: List[Permutation] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.words)

    def is_valid(self) -> bool:
        if len(set(self.words)) != len(self.words):
            return False
        if any(len(w) != self.n for w in self.words):
            return False
        return all(
            chebyshev_distance(p, q) >= self.min_distance
            for p, q in itertools.combinations(self.words, 2)
        )


def chebyshev_distance(p: Permutation, q: Permutation) -> int:
    """max_j |p_j - q_j|"""
    if len(p) != len(q):
        raise DomainError(f"permutations have different lengths {len(p)} and {len(q)}")
    return max((abs(a - b) for a, b in zip(p.image, q.image)), default=0)


def _all_permutations(n: int) -> np.ndarray:
    """S_n as an (n!, n) array in lexicographic order"""
    return np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64).reshape(-1, n)


def _require_n(n: int, limit: int, what: str):
    if n < 1:
        raise DomainError(f"{what} needs n >= 1, got n={n}")
    if n > limit:
        raise CapacityError(f"{what} enumerates S_n and is limited to n <= {limit}, got n={n}")


def ball_members(d: int, n: int, center: Optional[Permutation] = None) -> List[Permutation]:
    """Every q in S_n with chebyshev_distance(center, q) <= d"""
    _require_n(n, BALL_MAX_N, "ball enumeration")
    if d < 0:
        raise DomainError(f"ball radius must be >= 0, got d={d}")
    center = center or Permutation.identity(n)
    if len(center) != n:
        raise DomainError(f"center has length {len(center)}, expected {n}")
    perms = _all_permutations(n)
    distances = np.abs(perms - np.asarray(center.image)).max(axis=1)
    return [Permutation(tuple(row)) for row in perms[distances <= d].tolist()]


def _ordered(perms: np.ndarray, order: str, seed: int) -> np.ndarray:
    if order == "lex":
        return perms
    if order == "reverse":
        return perms[::-1]
    if order == "random":
        return perms[np.random.default_rng(seed).permutation(len(perms))]
    raise DomainError(f"Unknown order '{order}' (expected one of {', '.join(ORDERS)})")


def greedy_code(n: int, dist: int, order: str = "lex", seed: int = 0) -> Code:
    """Admit each permutation, in the given order, that keeps distance >= dist to all admitted words.

    The result is a maximal code, so its size reaches the GV floor.
    """
    _require_n(n, GREEDY_MAX_N, "greedy code search")
    if dist < 1:
        raise DomainError(f"minimum distance must be >= 1, got {dist}")
    perms = _ordered(_all_permutations(n), order, seed)
    if dist == 1:
        admitted = perms
    else:
        admitted = np.empty_like(perms)
        size = 0
        for row in perms:
            if size and np.abs(admitted[:size] - row).max(axis=1).min() < dist:
                continue
            admitted[size] = row
            size += 1
        admitted = admitted[:size]
    logger.info(f"greedy code n={n} D={dist} order={order}: size {admitted.shape[0]}")
    return Code(n, dist, [Permutation(tuple(row)) for row in admitted.tolist()])


def _compatibility_graph(perms: np.ndarray, dist: int) -> nx.Graph:
    """Vertices are row indices; edges join permutations at distance >= dist"""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(perms)))
    for i in range(len(perms)):
        far = np.abs(perms[i + 1:] - perms[i]).max(axis=1) >= dist
        graph.add_edges_from((i, i + 1 + int(j)) for j in np.nonzero(far)[0])
    return graph


def _color_bound(candidates: List[int], adjacency: Dict[int, int]) -> List[Tuple[int, int]]:
    """Greedy sequential colouring; returns (vertex, colour) sorted by colour.

    Vertices sharing a colour are pairwise non-adjacent, so colour + 1 bounds
    the clique size reachable from that vertex onward.
    """
    classes: List[int] = []
    colored: List[Tuple[int, int]] = []
    for v in candidates:
        for c, members in enumerate(classes):
            if not adjacency[v] & members:
                classes[c] |= 1 << v
                colored.append((v, c))
                break
        else:
            classes.append(1 << v)
            colored.append((v, len(classes) - 1))
    colored.sort(key=lambda item: item[1])
    return colored


def _max_clique(graph: nx.Graph, seed_clique: List[int], anchor: Optional[int] = None) -> List[int]:
    """Branch and bound over bitset candidate sets with a colouring bound.

    Vertices are tried in degeneracy order (highest core number first). The
    search only covers cliques through anchor, which loses nothing when the
    graph is vertex-transitive.
    """
    adjacency = {v: sum(1 << u for u in graph.neighbors(v)) for v in graph.nodes}
    core = nx.core_number(graph)
    order = sorted(graph.nodes, key=lambda v: (-core[v], -graph.degree[v], v))
    best: List[int] = list(seed_clique)

    def expand(current: List[int], candidates: List[int]):
        nonlocal best
        colored = _color_bound(candidates, adjacency)
        for index in range(len(colored) - 1, -1, -1):
            v, color = colored[index]
            if len(current) + color + 1 <= len(best):
                return
            current.append(v)
            remaining = [u for u, _ in colored[:index] if adjacency[v] >> u & 1]
            if remaining:
                expand(current, remaining)
            elif len(current) > len(best):
                best = list(current)
                logger.debug(f"clique of size {len(best)}")
            current.pop()

    if anchor is None:
        expand([], order)
    else:
        expand([anchor], [v for v in order if adjacency[anchor] >> v & 1])
    return best


def exact_max_code(n: int, dist: int) -> Code:
    """A maximum-size code, by exhaustive clique search on the distance->=D graph"""
    _require_n(n, EXACT_MAX_N, "exact code search")
    if dist < 1:
        raise DomainError(f"minimum distance must be >= 1, got {dist}")
    perms = _all_permutations(n)
    if dist == 1:
        return Code(n, dist, [Permutation(tuple(row)) for row in perms.tolist()])
    graph = _compatibility_graph(perms, dist)
    greedy = greedy_code(n, dist)
    index = {tuple(row): i for i, row in enumerate(perms.tolist())}
    seed = [index[w.image] for w in greedy.words]
    # q -> q∘g preserves the distance, so some maximum code contains the identity (row 0)
    clique = sorted(_max_clique(graph, seed, anchor=0))
    logger.info(f"exact code n={n} D={dist}: size {len(clique)} (greedy gave {greedy.size})")
    return Code(n, dist, [Permutation(tuple(perms[i].tolist())) for i in clique])


def words_as_lists(code: Code) -> List[List[int]]:
    return [list(w.image) for w in code.words]
