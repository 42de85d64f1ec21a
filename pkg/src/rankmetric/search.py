"""Brute-force maximum-code search.

Candidates are every matrix supported on the problem's cells (the full
``m x n`` box, or the dots of a Ferrers diagram), enumerated in value order:
the support entries, read row-major, are the base-q digits of the index with
the first cell most significant.  Two candidates are compatible when their
rank distance is at least ``d``; a code is a clique of the compatibility graph.

Exact mode solves maximum clique either as a 0/1 integer program (HiGHS via
scipy) or with a bitset branch and bound.  The candidate set is an additive
group and rank distance is translation invariant, so some maximum clique
contains the zero matrix; both methods are rooted there.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import _kernels
from .codes import RankMetricCode, rank_singleton_bound
from .errors import BadParams, TooLarge
from .fdcodes import FerrersCode, ferrers_singleton_bound
from .ferrers import FerrersDiagram
from .gf import GF, FieldSpec
from .matfq import MatrixFq

EXACT_LIMIT = 1 << 20
GREEDY_SAMPLES = 4096


@dataclass(frozen=True)
class SearchProblem:
    target: Union[tuple, FerrersDiagram]  # (m, n) shape or a diagram
    q: int
    d: int
    mode: str = "exact"
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("exact", "greedy"):
            raise BadParams(f"mode must be 'exact' or 'greedy', got {self.mode!r}")
        if self.d < 1:
            raise BadParams(f"d must be positive, got {self.d}")
        if not isinstance(self.target, FerrersDiagram):
            m, n = self.target
            if m < 1 or n < 1:
                raise BadParams(f"bad shape {self.target}")
            object.__setattr__(self, "target", (int(m), int(n)))

    @property
    def field(self) -> FieldSpec:
        return GF(self.q)

    @property
    def shape(self) -> tuple[int, int]:
        if isinstance(self.target, FerrersDiagram):
            return self.target.box
        return self.target

    @property
    def cells(self) -> list[tuple[int, int]]:
        if isinstance(self.target, FerrersDiagram):
            return sorted(self.target.dots)
        m, n = self.target
        return [(r, c) for r in range(m) for c in range(n)]

    @property
    def n_candidates(self) -> int:
        return self.q ** len(self.cells)

    def bound(self) -> int:
        if isinstance(self.target, FerrersDiagram):
            return ferrers_singleton_bound(self.target, self.d, self.q)
        m, n = self.target
        return rank_singleton_bound(m, n, self.d, self.q)


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: Union[RankMetricCode, FerrersCode]
    bound: int
    mode: str

    @property
    def tight(self) -> bool:
        return self.size == self.bound

    def report(self) -> str:
        return f"size={self.size}, bound={self.bound}, tight={'yes' if self.tight else 'no'}"


def candidates(P: SearchProblem, indices=None) -> np.ndarray:
    """Candidate matrices as an ``(N, m, n)`` array, in value order."""
    cells = P.cells
    m, n = P.shape
    if indices is None:
        indices = np.arange(P.n_candidates, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    out = np.zeros((len(indices), m, n), dtype=np.int64)
    rest = indices.copy()
    for r, c in reversed(cells):
        out[:, r, c] = rest % P.q
        rest //= P.q
    return out


def _wrap(P: SearchProblem, arr: np.ndarray):
    F = P.field
    words = [MatrixFq(F, w) for w in arr]
    code = RankMetricCode(words, field=F, shape=P.shape)
    if isinstance(P.target, FerrersDiagram):
        return FerrersCode(P.target, code, declared_d=P.d)
    return code


def _bits(mask_row: np.ndarray) -> int:
    # bool row -> python int bitset, bit k set iff mask_row[k]
    packed = np.packbits(mask_row.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _color_bound(P: int, adj: list[int]) -> int:
    """Number of colours used by greedy colouring of the vertex set ``P``."""
    colors = 0
    uncolored = P
    while uncolored:
        colors += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            uncolored &= ~(1 << v)
            avail &= ~(1 << v) & ~adj[v]
    return colors


def max_clique(adj: list[int], root: int | None = None) -> list[int]:
    """Lexicographically smallest maximum clique of the graph given by bitset rows.

    Branches on vertices in increasing order, so the first clique reaching a
    new maximum size is the lexicographically smallest of that size.
    """
    N = len(adj)
    best: list[int] = []
    full = (1 << N) - 1

    def is_clique(S: int) -> bool:
        T = S
        while T:
            v = (T & -T).bit_length() - 1
            T &= T - 1
            if (adj[v] | (1 << v)) & S != S:
                return False
        return True

    def expand(clique: list[int], P: int):
        nonlocal best
        if not P:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + P.bit_count() <= len(best):
            return
        if is_clique(P):
            if len(clique) + P.bit_count() > len(best):
                rest = []
                T = P
                while T:
                    rest.append((T & -T).bit_length() - 1)
                    T &= T - 1
                best = clique + rest
            return
        if len(clique) + _color_bound(P, adj) <= len(best):
            return
        T = P
        while T:
            v = (T & -T).bit_length() - 1
            T &= T - 1
            if len(clique) + 1 + T.bit_count() <= len(best):
                return
            clique.append(v)
            # only later vertices, keeps branching lexicographic
            expand(clique, adj[v] & T)
            clique.pop()

    if root is None:
        expand([], full)
    else:
        expand([root], adj[root] & ~((1 << (root + 1)) - 1))
    return best


def _greedy_cliques(conf: np.ndarray) -> list[np.ndarray]:
    """Two greedy maximal cliques of ``conf`` through every vertex
    (ascending and descending scan), deduplicated."""
    N = len(conf)
    seen = set()
    out = []
    for v in range(N):
        for pick in (np.argmax, lambda m: len(m) - 1 - np.argmax(m[::-1])):
            members = [v]
            cand = conf[v].copy()
            while cand.any():
                u = int(pick(cand))
                members.append(u)
                cand &= conf[u]
            key = tuple(sorted(members))
            if len(key) > 1 and key not in seen:
                seen.add(key)
                out.append(np.array(key))
    return out


def max_clique_milp(adj: np.ndarray) -> list[int]:
    """Maximum clique as a 0/1 program solved by HiGHS.

    Every pair of non-adjacent vertices may not both be chosen; pairs are
    grouped into greedy cliques of the complement graph, which tightens the
    relaxation, and leftover pairs become plain edge constraints.
    """
    from scipy.optimize import Bounds, LinearConstraint, milp
    from scipy.sparse import coo_matrix

    N = len(adj)
    if N == 0:
        return []
    conf = ~adj.astype(bool)
    np.fill_diagonal(conf, False)
    if not conf.any():
        return list(range(N))
    groups = _greedy_cliques(conf)
    covered = np.zeros_like(conf)
    for g in groups:
        covered[np.ix_(g, g)] = True
    leftover = np.argwhere(np.triu(conf & ~covered, 1))
    groups.extend(leftover)
    rows = np.concatenate([np.full(len(g), k) for k, g in enumerate(groups)])
    cols = np.concatenate(groups)
    A = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(groups), N)).tocsr()
    res = milp(-np.ones(N), constraints=LinearConstraint(A, -np.inf, 1),
               integrality=np.ones(N), bounds=Bounds(0, 1), options={"mip_rel_gap": 0})
    if res.status != 0:
        raise RuntimeError(f"MILP solver failed: {res.message}")
    return [int(i) for i in np.flatnonzero(res.x > 0.5)]


def max_code_exact(P: SearchProblem, method: str = "milp") -> SearchResult:
    """Largest code with minimum rank distance >= d among the candidates.

    ``method`` is ``"milp"`` (integer program, default) or ``"bnb"`` (bitset
    branch and bound; returns the lexicographically smallest maximum code but
    only practical for small instances).
    """
    N = P.n_candidates
    if N > EXACT_LIMIT:
        raise TooLarge(f"{N} candidate matrices exceed the exact-search limit {EXACT_LIMIT}")
    F = P.field
    W = candidates(P)
    adj_mat = _kernels.distance_adjacency(W, P.d, *F.kernel_args())
    if method == "bnb":
        clique = max_clique([_bits(row) for row in adj_mat], root=0)
    elif method == "milp":
        nbrs = np.flatnonzero(adj_mat[0])
        sub = max_clique_milp(adj_mat[np.ix_(nbrs, nbrs)])
        clique = [0] + sorted(int(nbrs[k]) for k in sub)
    else:
        raise BadParams(f"unknown exact method {method!r}")
    witness = _wrap(P, W[clique])
    return SearchResult(len(clique), witness, P.bound(), "exact")


def max_code_greedy(P: SearchProblem) -> SearchResult:
    F = P.field
    rng = np.random.default_rng(P.seed)
    N = P.n_candidates
    if N <= EXACT_LIMIT:
        order = rng.permutation(N)
    else:
        order = np.unique(rng.integers(0, N, size=GREEDY_SAMPLES))
        rng.shuffle(order)
    W = candidates(P, order)
    args = F.kernel_args()
    p, e = F.p, F.e
    admitted = np.zeros((0,) + P.shape, dtype=np.int64)
    for w in W:
        if len(admitted):
            diffs = _kernels.vsub(admitted, w[None, :, :], p, e)
            if _kernels.batch_rank(diffs, *args).min() < P.d:
                continue
        admitted = np.concatenate([admitted, w[None]])
    witness = _wrap(P, admitted)
    return SearchResult(len(admitted), witness, P.bound(), "greedy")


def max_code(P: SearchProblem) -> SearchResult:
    return max_code_exact(P) if P.mode == "exact" else max_code_greedy(P)
