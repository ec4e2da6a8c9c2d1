"""Cayley graph construction, tensor products, CRT decomposition, exports.

The graph on a coefficient window has an edge a ~ b exactly when (a - b)
squares to 1 in Z_n[x]; equivalently it is the Cayley graph of the additive
group with the involution set as connection set, so it is vertex-transitive and
|inv|-regular. Graphs are stored as CSR-style sorted adjacency (int64).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, DomainError
from .polyring import PolyRing, involution_indices


class Graph:
    """Undirected simple graph; neighbors of each vertex sorted ascending."""

    __slots__ = ("indptr", "indices", "vertex_transitive")

    def __init__(self, indptr, indices, *, vertex_transitive: bool = False):
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.vertex_transitive = vertex_transitive

    @property
    def n_vertices(self) -> int:
        return len(self.indptr) - 1

    @property
    def n_edges(self) -> int:
        return len(self.indices) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        pos = np.searchsorted(row, v)
        return pos < len(row) and row[pos] == v

    def edges(self):
        """Yield (i, j) with i < j, lexicographic order."""
        for v in range(self.n_vertices):
            for w in self.neighbors(v):
                if v < w:
                    yield v, int(w)

    @classmethod
    def from_adjacency(cls, lists, *, vertex_transitive: bool = False) -> "Graph":
        indptr = np.zeros(len(lists) + 1, dtype=np.int64)
        rows = []
        for i, row in enumerate(lists):
            srow = sorted(int(w) for w in row)
            indptr[i + 1] = indptr[i] + len(srow)
            rows.extend(srow)
        return cls(indptr, np.array(rows, dtype=np.int64), vertex_transitive=vertex_transitive)

    @classmethod
    def from_edges(cls, n_vertices: int, edge_list) -> "Graph":
        lists: list[list[int]] = [[] for _ in range(n_vertices)]
        for u, v in edge_list:
            if u == v:
                raise DomainError(f"self loop at vertex {u}")
            lists[u].append(v)
            lists[v].append(u)
        return cls.from_adjacency(lists)


class CayleyGraph(Graph):
    """Graph of a coefficient window plus the ring data that produced it."""

    __slots__ = ("ring", "involutions")

    def __init__(self, indptr, indices, ring: PolyRing, involutions: np.ndarray):
        super().__init__(indptr, indices, vertex_transitive=True)
        self.ring = ring
        self.involutions = involutions


def build_cayley_graph(ring: PolyRing, *, caps: Caps = DEFAULT_CAPS) -> CayleyGraph:
    """Assemble the graph by translating the connection set: O(N * |inv|)."""
    size = ring.size
    if size > caps.vertex:
        raise CapExceeded(f"{size} vertices exceeds cap {caps.vertex}")
    inv_idx = involution_indices(ring)
    k = len(inv_idx)
    if size * k // 2 > caps.edge:
        raise CapExceeded(f"{size * k // 2} edges exceeds cap {caps.edge}")
    flat = kernels.build_adjacency(ring.n, ring.d, inv_idx)
    indptr = np.arange(size + 1, dtype=np.int64) * k
    return CayleyGraph(indptr, flat, ring, inv_idx)


def build_zn_graph(n: int, *, caps: Caps = DEFAULT_CAPS) -> CayleyGraph:
    return build_cayley_graph(PolyRing(n, 0), caps=caps)


def regular_degree(g: Graph) -> int:
    """Common degree; raises if the graph is not regular (construction bug)."""
    degs = g.degrees()
    if g.n_vertices == 0:
        raise DomainError("empty graph has no degree")
    lo, hi = int(degs.min()), int(degs.max())
    if lo != hi:
        raise DomainError(f"graph is not regular: degrees range {lo}..{hi}")
    return lo


def tensor_product(g1: Graph, g2: Graph, *, caps: Caps = DEFAULT_CAPS) -> Graph:
    """Tensor (categorical) product: (u1,u2) ~ (v1,v2) iff u1~v1 and u2~v2.

    Vertex (u1, u2) gets index u1 * n2 + u2.
    """
    n1, n2 = g1.n_vertices, g2.n_vertices
    size = n1 * n2
    if size > caps.vertex:
        raise CapExceeded(f"{size} vertices exceeds cap {caps.vertex}")
    n_edges = 2 * g1.n_edges * g2.n_edges
    if n_edges > caps.edge:
        raise CapExceeded(f"{n_edges} edges exceeds cap {caps.edge}")
    indptr = np.zeros(size + 1, dtype=np.int64)
    chunks = []
    for u1 in range(n1):
        row1 = g1.neighbors(u1)
        for u2 in range(n2):
            row2 = g2.neighbors(u2)
            # row1 and row2 ascending, so the outer-sum block is already sorted
            block = (row1[:, None] * n2 + row2[None, :]).reshape(-1)
            v = u1 * n2 + u2
            indptr[v + 1] = indptr[v] + len(block)
            chunks.append(block)
    indices = (
        np.concatenate(chunks) if chunks else np.empty(0, dtype=np.int64)
    )
    return Graph(
        indptr,
        indices,
        vertex_transitive=g1.vertex_transitive and g2.vertex_transitive,
    )


@dataclass(frozen=True)
class CrtIsomorphism:
    """Outcome of checking G(window mod n) against the product of its factors."""

    ok: bool
    factor_moduli: tuple[int, ...]
    mapping: np.ndarray  # vertex i of the full graph -> vertex of the product


def crt_isomorphism_check(ring: PolyRing, *, caps: Caps = DEFAULT_CAPS) -> CrtIsomorphism:
    """Verify G(n, d) ≅ tensor product of G(q, d) over prime-power factors q.

    The candidate map sends f to its coefficientwise residues; the check
    confirms it is a bijection matching neighborhoods exactly on every vertex,
    which proves edge preservation in both directions.
    """
    from .rings import factorize

    fact = factorize(ring.n)
    moduli = fact.prime_power_moduli()
    g = build_cayley_graph(ring, caps=caps)
    if len(moduli) == 1:
        identity = np.arange(ring.size, dtype=np.int64)
        return CrtIsomorphism(True, moduli, identity)

    factor_rings = [PolyRing(q, ring.d) for q in moduli]
    factor_graphs = [build_cayley_graph(r, caps=caps) for r in factor_rings]
    prod: Graph = factor_graphs[0]
    for h in factor_graphs[1:]:
        prod = tensor_product(prod, h, caps=caps)

    sizes = [r.size for r in factor_rings]
    mapping = np.empty(ring.size, dtype=np.int64)
    for v in range(ring.size):
        coeffs = ring.element_of(v)
        m = 0
        for q, qsize, r in zip(moduli, sizes, factor_rings):
            res = tuple(a % q for a in coeffs)
            m = m * qsize + r.index_of(res)
        mapping[v] = m

    ok = len(np.unique(mapping)) == ring.size and g.n_edges == prod.n_edges
    if ok:
        for v in range(ring.size):
            image = np.sort(mapping[g.neighbors(v)])
            if not np.array_equal(image, prod.neighbors(int(mapping[v]))):
                ok = False
                break
    return CrtIsomorphism(ok, moduli, mapping)


# -- exports ------------------------------------------------------------------


def _vertex_labels(g: Graph) -> list[str]:
    if isinstance(g, CayleyGraph):
        ring = g.ring
        return [ring.render(ring.element_of(v)) for v in range(g.n_vertices)]
    return [str(v) for v in range(g.n_vertices)]


def to_dot(g: Graph) -> str:
    """DOT text: vertices ascending with labels, edges i -- j with i < j."""
    lines = ["graph G {"]
    for v, label in enumerate(_vertex_labels(g)):
        lines.append(f'  {v} [label="{label}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def spec_meta(ring: PolyRing, *, power_series: bool = False) -> dict:
    meta = {
        "n": ring.n,
        "d": ring.d,
        "family": "power-series" if power_series else "poly",
        "ring": ring.label(power_series=power_series),
    }
    if power_series:
        meta["note"] = (
            "power-series window: identical element set and adjacency as the "
            "polynomial window at the same degree bound"
        )
    return meta


def to_json_obj(g: Graph, *, power_series: bool = False) -> dict:
    obj: dict = {}
    if isinstance(g, CayleyGraph):
        obj["spec"] = spec_meta(g.ring, power_series=power_series)
    obj["vertex_count"] = g.n_vertices
    obj["degree"] = regular_degree(g)
    obj["edges"] = [[i, j] for i, j in g.edges()]
    return obj


def to_graphml(g: Graph) -> str:
    """Minimal GraphML with a string label attribute per node."""
    from xml.sax.saxutils import escape

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
        '  <graph id="G" edgedefault="undirected">',
    ]
    for v, label in enumerate(_vertex_labels(g)):
        lines.append(f'    <node id="n{v}"><data key="label">{escape(label)}</data></node>')
    for i, j in g.edges():
        lines.append(f'    <edge source="n{i}" target="n{j}"/>')
    lines.append("  </graph>")
    lines.append("</graphml>")
    return "\n".join(lines) + "\n"
