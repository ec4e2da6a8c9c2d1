"""Exact graph invariants with certificates.

Everything here is exact: shortcuts are taken only when they are proofs
(bipartite 2-coloring, verified explicit 3-coloring, clique through a fixed
vertex under vertex-transitivity, alpha additivity over components). Searches
are branch-and-bound over bitmask adjacency and apply only to small components;
resource limits raise CapExceeded rather than degrade to estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .cayley import CayleyGraph, Graph, regular_degree
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, DomainError
from .planarity import lr_is_planar
from .polyring import PolyRing
from .rings import factorize

_CHROMATIC_SEARCH_BUDGET = 2_000_000


# -- components ----------------------------------------------------------------


@dataclass(frozen=True)
class Components:
    labels: np.ndarray
    count: int
    sizes: np.ndarray  # size of component c at index c


def connected_components(g: Graph) -> Components:
    labels, count = kernels.component_labels(g.indptr, g.indices)
    sizes = np.bincount(labels, minlength=count)
    return Components(labels, count, sizes)


def _component_vertices(comps: Components, label: int) -> np.ndarray:
    return np.nonzero(comps.labels == label)[0]


def _local_adjacency(g: Graph, verts: np.ndarray) -> list[list[int]]:
    """Adjacency of the induced subgraph on verts (must be component-closed)."""
    pos = {int(v): i for i, v in enumerate(verts)}
    return [[pos[int(w)] for w in g.neighbors(int(v))] for v in verts]


# -- bipartiteness ---------------------------------------------------------------


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    sides: np.ndarray | None  # 0/1 per vertex when bipartite
    odd_cycle: list[int] | None  # vertex sequence of an odd cycle otherwise


def _odd_cycle_from_parents(parent: list[int], u: int, w: int) -> list[int]:
    au = [u]
    x = u
    while parent[x] >= 0:
        x = parent[x]
        au.append(x)
    aw = [w]
    x = w
    while parent[x] >= 0:
        x = parent[x]
        aw.append(x)
    on_u_path = {v: i for i, v in enumerate(au)}
    iw = 0
    while aw[iw] not in on_u_path:
        iw += 1
    iu = on_u_path[aw[iw]]
    return au[: iu + 1] + list(reversed(aw[:iw]))


def is_bipartite(g: Graph) -> BipartiteResult:
    """BFS 2-coloring from the lowest uncolored index; odd cycle on failure."""
    nv = g.n_vertices
    color = np.full(nv, -1, dtype=np.int8)
    parent = [-1] * nv
    for start in range(nv):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in map(int, g.neighbors(v)):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return BipartiteResult(False, None, _odd_cycle_from_parents(parent, v, w))
    return BipartiteResult(True, color, None)


def constant_parity_bipartition(ring: PolyRing) -> tuple[np.ndarray, np.ndarray]:
    """Split vertices by the parity class of the constant coefficient (even n).

    Every involution has an odd constant coefficient when n is even, so each
    edge crosses the parity classes.
    """
    if ring.n % 2 != 0:
        raise DomainError(f"parity bipartition needs even modulus, got {ring.n}")
    idx = np.arange(ring.size, dtype=np.int64)
    even = (idx % ring.n) % 2 == 0
    return idx[even], idx[~even]


def is_proper_bipartition(g: Graph, part_a: np.ndarray) -> bool:
    in_a = np.zeros(g.n_vertices, dtype=bool)
    in_a[part_a] = True
    tail = np.repeat(in_a, np.diff(g.indptr))
    return bool((tail != in_a[g.indices]).all())


# -- girth -----------------------------------------------------------------------


def girth(g: Graph, *, transitive: bool | None = None) -> int | float:
    """Exact girth; math.inf when acyclic.

    BFS from one vertex is exact on vertex-transitive graphs (some automorphism
    moves a shortest cycle onto the root's component through the root's
    candidate edges); otherwise BFS runs from every vertex.
    """
    if g.n_vertices == 0:
        return math.inf
    if transitive is None:
        transitive = g.vertex_transitive
    if transitive:
        best = kernels.girth_from_root(g.indptr, g.indices, 0)
        return best if best else math.inf
    best = 0
    for root in range(g.n_vertices):
        cand = kernels.girth_from_root(g.indptr, g.indices, root)
        if cand and (best == 0 or cand < best):
            best = cand
            if best == 3:
                break
    return best if best else math.inf


# -- clique number -----------------------------------------------------------------


def _adjacency_masks(adj: list[list[int]]) -> list[int]:
    masks = [0] * len(adj)
    for v, row in enumerate(adj):
        m = 0
        for w in row:
            m |= 1 << w
        masks[v] = m
    return masks


def _max_clique_masks(masks: list[int]) -> int:
    n = len(masks)
    if n == 0:
        return 0
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            # pivot with most candidates among its neighbors
            m = cand
            pivot, pbest = -1, -1
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                c = (masks[v] & cand).bit_count()
                if c > pbest:
                    pbest, pivot = c, v
            ext = cand & ~masks[pivot]
            b = ext & -ext
            v = b.bit_length() - 1
            if size + 1 > best:
                best = size + 1
            expand(size + 1, cand & masks[v])
            cand ^= b

    expand(0, (1 << n) - 1)
    return best


def clique_number(g: Graph) -> int:
    if g.n_vertices == 0:
        return 0
    if g.n_edges == 0:
        return 1
    if g.vertex_transitive:
        # a maximum clique can be translated onto vertex 0
        nbrs = g.neighbors(0)
        pos = {int(v): i for i, v in enumerate(nbrs)}
        local = [
            [pos[int(w)] for w in g.neighbors(int(v)) if int(w) in pos] for v in nbrs
        ]
        return 1 + _max_clique_masks(_adjacency_masks(local))
    comps = connected_components(g)
    best = 1
    for c in range(comps.count):
        verts = _component_vertices(comps, c)
        best = max(best, _max_clique_masks(_adjacency_masks(_local_adjacency(g, verts))))
    return best


# -- chromatic number ----------------------------------------------------------------


def odd_modulus_three_coloring(ring: PolyRing) -> np.ndarray:
    """Proper 3-coloring for odd n, any size.

    Pick an odd prime-power factor q of n. Every involution is ±1 mod q and is
    constant mod q in the higher coefficients, so reducing the constant
    coefficient mod q maps each edge to a step of the q-cycle; any proper
    3-coloring of that cycle lifts.
    """
    fact = factorize(ring.n)
    if ring.n % 2 == 0 or not fact.odd_parts:
        raise DomainError(f"odd modulus required, got {ring.n}")
    p, r = fact.odd_parts[0]
    q = p**r
    residue = np.arange(ring.size, dtype=np.int64) % ring.n % q
    colors = (residue % 2).astype(np.int64)
    colors[residue == q - 1] = 2
    return colors


def is_proper_coloring(g: Graph, colors: np.ndarray) -> bool:
    tail = np.repeat(colors, np.diff(g.indptr))
    return bool((tail != colors[g.indices]).all())


def _dsatur_greedy(adj: list[list[int]]) -> int:
    n = len(adj)
    colors = [-1] * n
    used = 0
    for _ in range(n):
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[w] for w in adj[v] if colors[w] >= 0})
            key = (sat, len(adj[v]))
            if key > best_key:
                best_key, best_v = key, v
        taken = {colors[w] for w in adj[best_v]}
        c = 0
        while c in taken:
            c += 1
        colors[best_v] = c
        used = max(used, c + 1)
    return used


def _k_colorable(adj: list[list[int]], k: int, budget: int = _CHROMATIC_SEARCH_BUDGET) -> bool:
    """Iterative backtracking k-coloring with a step budget (CapExceeded beyond)."""
    n = len(adj)
    colors = [-1] * n

    def select() -> int:
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[w] for w in adj[v] if colors[w] >= 0})
            key = (sat, len(adj[v]))
            if key > best_key:
                best_key, best_v = key, v
        return best_v

    steps = 0
    stack: list[tuple[int, int]] = []  # (vertex, color it holds)
    v = select()
    next_color = 0
    while True:
        steps += 1
        if steps > budget:
            raise CapExceeded(f"coloring search exceeded {budget} steps")
        placed = False
        taken = {colors[w] for w in adj[v]}
        cap = min(k - 1, (max((c for _, c in stack), default=-1)) + 1)
        for c in range(next_color, cap + 1):
            if c not in taken:
                colors[v] = c
                stack.append((v, c))
                placed = True
                break
        if placed:
            if len(stack) == n:
                return True
            v = select()
            next_color = 0
        else:
            if not stack:
                return False
            v, c = stack.pop()
            colors[v] = -1
            next_color = c + 1


def chromatic_number(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> int:
    if g.n_vertices == 0:
        return 0
    if g.n_edges == 0:
        return 1
    bip = is_bipartite(g)
    if bip.bipartite:
        return 2
    if isinstance(g, CayleyGraph) and g.ring.n % 2 == 1:
        colors = odd_modulus_three_coloring(g.ring)
        if is_proper_coloring(g, colors):
            return 3
    comps = connected_components(g)
    labels_to_solve = [0] if g.vertex_transitive else list(range(comps.count))
    best = 2
    for c in labels_to_solve:
        verts = _component_vertices(comps, c)
        adj = _local_adjacency(g, verts)
        if not any(adj):
            best = max(best, 1)
            continue
        if _two_colorable(adj):
            best = max(best, 2)
            continue
        lb = max(3, _max_clique_masks(_adjacency_masks(adj)))
        ub = _dsatur_greedy(adj)
        value = ub
        for k in range(lb, ub):
            if _k_colorable(adj, k):
                value = k
                break
        best = max(best, value)
    return best


def _two_colorable(adj: list[list[int]]) -> bool:
    n = len(adj)
    color = [-1] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


# -- independence number ----------------------------------------------------------


def _bipartite_alpha(adj: list[list[int]], side: list[int]) -> int:
    """König: alpha = vertices - maximum matching, via augmenting paths."""
    n = len(adj)
    match_of = [-1] * n

    def augment(v: int, visited: list[bool]) -> bool:
        for w in adj[v]:
            if not visited[w]:
                visited[w] = True
                if match_of[w] == -1 or augment(match_of[w], visited):
                    match_of[w] = v
                    return True
        return False

    matching = 0
    for v in range(n):
        if side[v] == 0:
            if augment(v, [False] * n):
                matching += 1
    return n - matching


def _mis_masks(masks: list[int]) -> int:
    n = len(masks)
    best = 0

    def rec(avail: int, size: int) -> None:
        nonlocal best
        # take vertices of available-degree <= 1 greedily (always safe)
        changed = True
        while changed:
            changed = False
            m = avail
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                if (masks[v] & avail).bit_count() <= 1:
                    avail &= ~((1 << v) | masks[v])
                    size += 1
                    changed = True
                    break
        if avail == 0:
            if size > best:
                best = size
            return
        if size + avail.bit_count() <= best:
            return
        m = avail
        bv, bd = -1, -1
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            dv = (masks[v] & avail).bit_count()
            if dv > bd:
                bd, bv = dv, v
        bit = 1 << bv
        rec(avail & ~(bit | masks[bv]), size + 1)
        rec(avail & ~bit, size)

    rec((1 << n) - 1, 0)
    return best


def _component_alpha(g: Graph, verts: np.ndarray, caps: Caps) -> int:
    if len(verts) > caps.exact_solver:
        raise CapExceeded(
            f"component of {len(verts)} vertices exceeds exact-solver cap {caps.exact_solver}"
        )
    adj = _local_adjacency(g, verts)
    n = len(adj)
    color = [-1] * n
    bipartite = True
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        head = 0
        while head < len(queue) and bipartite:
            v = queue[head]
            head += 1
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    bipartite = False
                    break
        if not bipartite:
            break
    if bipartite:
        return _bipartite_alpha(adj, color)
    return _mis_masks(_adjacency_masks(adj))


def independence_number(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> int:
    """Exact alpha; additive over components, one solve when all are identical."""
    if g.n_vertices == 0:
        return 0
    comps = connected_components(g)
    if g.vertex_transitive:
        verts = _component_vertices(comps, int(comps.labels[0]))
        return comps.count * _component_alpha(g, verts, caps)
    return sum(
        _component_alpha(g, _component_vertices(comps, c), caps)
        for c in range(comps.count)
    )


def monomial_independent_check(ring: PolyRing) -> bool:
    """True when {1, x, ..., x^d} is pairwise non-adjacent (needs d >= 1)."""
    if ring.d < 1:
        raise DomainError("monomial set needs degree bound >= 1")
    members = [ring.one()] + [ring.x_power(i) for i in range(1, ring.d + 1)]
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if ring.is_involution(ring.sub(members[i], members[j])):
                return False
    return True


# -- complement, isomorphism, self-complementarity ------------------------------------


def complement(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> Graph:
    n = g.n_vertices
    comp_edges = n * (n - 1) // 2 - g.n_edges
    if comp_edges > caps.edge:
        raise CapExceeded(f"complement would have {comp_edges} edges, cap {caps.edge}")
    rows = []
    for v in range(n):
        nb = set(map(int, g.neighbors(v)))
        nb.add(v)
        rows.append([w for w in range(n) if w not in nb])
    return Graph.from_adjacency(rows)


def _refined_colors(adj: list[list[int]]) -> list[int]:
    colors = [len(row) for row in adj]
    for _ in range(len(adj)):
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        relabel = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def find_isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """Color refinement plus backtracking; returns a vertex mapping or None."""
    n = g1.n_vertices
    if n != g2.n_vertices or g1.n_edges != g2.n_edges:
        return None
    adj1 = [list(map(int, g1.neighbors(v))) for v in range(n)]
    adj2 = [list(map(int, g2.neighbors(v))) for v in range(n)]
    col1 = _refined_colors(adj1)
    col2 = _refined_colors(adj2)
    if sorted(col1) != sorted(col2):
        return None
    by_color: dict[int, list[int]] = {}
    for u, c in enumerate(col2):
        by_color.setdefault(c, []).append(u)
    class_size = {c: len(v) for c, v in by_color.items()}
    order = sorted(range(n), key=lambda v: (class_size[col1[v]], col1[v], v))
    mapping = [-1] * n
    used = [False] * n
    sets2 = [set(r) for r in adj2]

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for u in by_color[col1[v]]:
            if used[u]:
                continue
            ok = True
            for w in adj1[v]:
                mw = mapping[w]
                if mw >= 0 and mw not in sets2[u]:
                    ok = False
                    break
            if ok:
                # degree counts match within refined colors, but confirm
                # non-edges too: mapped neighbors of u must be neighbors of v
                back = {mapping[w] for w in adj1[v] if mapping[w] >= 0}
                seen_mapped = sets2[u] & {m for m in mapping if m >= 0}
                if seen_mapped != back:
                    continue
                mapping[v] = u
                used[u] = True
                if backtrack(i + 1):
                    return True
                mapping[v] = -1
                used[u] = False
        return False

    return mapping if backtrack(0) else None


def is_self_complementary(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> bool:
    if g.n_vertices > caps.self_complement:
        raise CapExceeded(
            f"{g.n_vertices} vertices exceeds self-complementarity cap {caps.self_complement}"
        )
    if g.n_vertices * (g.n_vertices - 1) // 2 != 2 * g.n_edges:
        return False
    return find_isomorphism(g, complement(g, caps=caps)) is not None


def self_complementary_status(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> tuple[bool | None, str]:
    """(decision, method); decision None when no affordable route exists.

    Route 1: exact isomorphism on tiny graphs. Route 2: a self-complementary
    graph has equal clique and independence numbers, so alpha != omega refutes.
    """
    if g.n_vertices <= caps.self_complement:
        return is_self_complementary(g, caps=caps), "isomorphism"
    try:
        alpha = independence_number(g, caps=caps)
    except CapExceeded:
        return None, "skipped: independence number beyond exact-solver cap"
    omega = clique_number(g)
    if alpha != omega:
        return False, "alpha-omega-mismatch"
    return None, "skipped: alpha equals omega and graph too large for isomorphism"


# -- K_{3,3} witness for the modulus-4 window --------------------------------------


def k33_witness_mod4(ring: PolyRing) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Vertex triples ({0, 2, 2x}, {1, 3, 1+2x}) inducing K_{3,3} when n=4, d>=1.

    Verified on the spot: all nine cross pairs adjacent, no edge inside either
    triple. Independent of the planarity tester and of the graph builder.
    """
    if ring.n != 4 or ring.d < 1:
        raise DomainError("witness exists in the modulus-4 window with d >= 1")
    two_x = tuple(2 if i == 1 else 0 for i in range(ring.width))
    one_plus_2x = tuple(1 if i == 0 else 2 if i == 1 else 0 for i in range(ring.width))
    part_a = [ring.zero(), tuple(2 if i == 0 else 0 for i in range(ring.width)), two_x]
    part_b = [ring.one(), tuple(3 if i == 0 else 0 for i in range(ring.width)), one_plus_2x]
    for f in part_a:
        for h in part_b:
            if not ring.is_involution(ring.sub(f, h)):
                raise DomainError("witness failed adjacency verification")
    for part in (part_a, part_b):
        for i in range(3):
            for j in range(i + 1, 3):
                if ring.is_involution(ring.sub(part[i], part[j])):
                    raise DomainError("witness triples are not independent")
    a_idx = tuple(sorted(ring.index_of(f) for f in part_a))
    b_idx = tuple(sorted(ring.index_of(f) for f in part_b))
    return a_idx, b_idx  # type: ignore[return-value]


# -- planarity wrapper -----------------------------------------------------------


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    method: str


def planarity_test(g: Graph, *, caps: Caps = DEFAULT_CAPS) -> PlanarityResult:
    """Pre-filters (always run) then the left-right criterion (capped)."""
    v, e = g.n_vertices, g.n_edges
    if v == 0 or e == 0:
        return PlanarityResult(True, "trivial")
    if int(g.degrees().max()) <= 2:
        return PlanarityResult(True, "max-degree<=2")
    if v >= 3 and e > 3 * v - 6:
        return PlanarityResult(False, "edge-bound")
    if v >= 3 and e > 2 * v - 4 and is_bipartite(g).bipartite:
        return PlanarityResult(False, "bipartite-edge-bound")
    if e > caps.planarity_edges:
        raise CapExceeded(f"{e} edges exceeds planarity cap {caps.planarity_edges}")
    adj = [list(map(int, g.neighbors(u))) for u in range(v)]
    return PlanarityResult(lr_is_planar(adj), "left-right")


# -- the report --------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    spec: dict | None
    vertex_count: int
    regular_degree: int
    component_count: int
    component_sizes: list[list[int]]  # [size, multiplicity], ascending size
    bipartite: bool
    bipartite_certificate: dict
    girth: int | float
    clique_number: int
    chromatic_number: int
    independence_number: int | None
    planar: bool | None
    planar_method: str | None
    self_complementary: bool | None
    self_complementary_method: str | None


def _size_multiset(sizes: np.ndarray) -> list[list[int]]:
    uniq, counts = np.unique(sizes, return_counts=True)
    return [[int(s), int(c)] for s, c in zip(uniq, counts)]


def compute_invariants(
    g: Graph, *, caps: Caps = DEFAULT_CAPS, power_series: bool = False
) -> InvariantReport:
    from .cayley import spec_meta

    comps = connected_components(g)
    bip = is_bipartite(g)
    if bip.bipartite:
        part_a = np.nonzero(bip.sides == 0)[0]
        part_b = np.nonzero(bip.sides == 1)[0]
        bip_cert = {"parts": [part_a.tolist(), part_b.tolist()]}
    else:
        bip_cert = {"odd_cycle": bip.odd_cycle}
    try:
        alpha = independence_number(g, caps=caps)
    except CapExceeded:
        alpha = None
    try:
        pl = planarity_test(g, caps=caps)
        planar, planar_method = pl.planar, pl.method
    except CapExceeded:
        planar, planar_method = None, None
    sc, sc_method = self_complementary_status(g, caps=caps)
    return InvariantReport(
        spec=spec_meta(g.ring, power_series=power_series) if isinstance(g, CayleyGraph) else None,
        vertex_count=g.n_vertices,
        regular_degree=regular_degree(g),
        component_count=comps.count,
        component_sizes=_size_multiset(comps.sizes),
        bipartite=bip.bipartite,
        bipartite_certificate=bip_cert,
        girth=girth(g),
        clique_number=clique_number(g),
        chromatic_number=chromatic_number(g, caps=caps),
        independence_number=alpha,
        planar=planar,
        planar_method=planar_method,
        self_complementary=sc,
        self_complementary_method=sc_method,
    )


def girth_to_json(value: int | float):
    return "infinity" if value == math.inf else int(value)


def report_to_json_obj(rep: InvariantReport) -> dict:
    return {
        "spec": rep.spec,
        "vertex_count": rep.vertex_count,
        "regular_degree": rep.regular_degree,
        "component_count": rep.component_count,
        "component_sizes": rep.component_sizes,
        "bipartite": rep.bipartite,
        "bipartite_certificate": rep.bipartite_certificate,
        "girth": girth_to_json(rep.girth),
        "clique_number": rep.clique_number,
        "chromatic_number": rep.chromatic_number,
        "independence_number": rep.independence_number,
        "planar": rep.planar,
        "planar_method": rep.planar_method,
        "self_complementary": rep.self_complementary,
        "self_complementary_method": rep.self_complementary_method,
    }
