"""Planarity decision via the left-right criterion.

Works on plain adjacency lists and returns only the decision. Both DFS passes
are iterative with explicit stacks; recursion depth is therefore independent of
the tree depth. Oriented edges are (tail, head) tuples; the first pass orients
the graph, computes lowpt/lowpt2/nesting depth, the second maintains the stack
of conflict pairs and fails exactly when two return intervals cannot be split
into a left and a right side.
"""

from __future__ import annotations


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None


class _ConflictPair:
    __slots__ = ("L", "R")

    def __init__(self, left=None, right=None):
        self.L = left if left is not None else _Interval()
        self.R = right if right is not None else _Interval()

    def swap(self) -> None:
        self.L, self.R = self.R, self.L


class _LRTest:
    def __init__(self, adj: list[list[int]]):
        self.adj = adj
        n = len(adj)
        self.height: list[int | None] = [None] * n
        self.parent_edge: list[tuple[int, int] | None] = [None] * n
        self.oriented_adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.ordered_adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.edge_done: set[tuple[int, int]] = set()
        self.lowpt: dict = {}
        self.lowpt2: dict = {}
        self.nesting_depth: dict = {}
        self.ref: dict = {}
        self.side: dict = {}
        self.lowpt_edge: dict = {}
        self.stack_bottom: dict = {}
        self.S: list[_ConflictPair] = []

    def run(self) -> bool:
        n = len(self.adj)
        m = sum(len(a) for a in self.adj) // 2
        if m <= 8 or n <= 4:
            return True
        if m > 3 * n - 6:
            return False
        roots = []
        for v in range(n):
            if self.height[v] is None:
                roots.append(v)
                self._orient_from(v)
        for v in range(n):
            self.ordered_adj[v] = sorted(
                self.oriented_adj[v], key=self.nesting_depth.__getitem__
            )
        for root in roots:
            if not self._test_from(root):
                return False
        return True

    # -- pass 1: orientation, lowpt, nesting depth ---------------------------

    def _finish_edge(self, e: tuple[int, int]) -> None:
        v = e[0]
        chordal = 1 if self.lowpt2[e] < self.height[v] else 0
        self.nesting_depth[e] = 2 * self.lowpt[e] + chordal
        pe = self.parent_edge[v]
        if pe is None:
            return
        if self.lowpt[e] < self.lowpt[pe]:
            self.lowpt2[pe] = min(self.lowpt[pe], self.lowpt2[e])
            self.lowpt[pe] = self.lowpt[e]
        elif self.lowpt[e] > self.lowpt[pe]:
            self.lowpt2[pe] = min(self.lowpt2[pe], self.lowpt[e])
        else:
            self.lowpt2[pe] = min(self.lowpt2[pe], self.lowpt2[e])

    def _orient_from(self, root: int) -> None:
        self.height[root] = 0
        stack = [(root, 0)]
        while stack:
            v, i = stack.pop()
            adj = self.adj[v]
            descended = False
            while i < len(adj):
                w = adj[i]
                i += 1
                key = (v, w) if v < w else (w, v)
                if key in self.edge_done:
                    continue
                self.edge_done.add(key)
                e = (v, w)
                self.lowpt[e] = self.height[v]
                self.lowpt2[e] = self.height[v]
                self.oriented_adj[v].append(e)
                if self.height[w] is None:
                    self.parent_edge[w] = e
                    self.height[w] = self.height[v] + 1
                    stack.append((v, i))
                    stack.append((w, 0))
                    descended = True
                    break
                self.lowpt[e] = self.height[w]
                self._finish_edge(e)
            if not descended:
                pe = self.parent_edge[v]
                if pe is not None:
                    self._finish_edge(pe)

    # -- pass 2: conflict pairs ----------------------------------------------

    def _conflicting(self, interval: _Interval, b: tuple[int, int]) -> bool:
        return not interval.empty() and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, pair: _ConflictPair) -> int:
        if pair.L.low is None:
            return self.lowpt[pair.R.low]
        if pair.R.low is None:
            return self.lowpt[pair.L.low]
        return min(self.lowpt[pair.L.low], self.lowpt[pair.R.low])

    def _add_constraints(self, ei: tuple[int, int], e: tuple[int, int]) -> bool:
        pair = _ConflictPair()
        # merge return edges of ei into pair.R
        while True:
            q = self.S.pop()
            if not q.L.empty():
                q.swap()
            if not q.L.empty():
                return False
            if self.lowpt[q.R.low] > self.lowpt[e]:
                if pair.R.empty():
                    pair.R.high = q.R.high
                else:
                    self.ref[pair.R.low] = q.R.high
                pair.R.low = q.R.low
            else:
                self.ref[q.R.low] = self.lowpt_edge[e]
            if len(self.S) == self.stack_bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into pair.L
        while self.S and (
            self._conflicting(self.S[-1].L, ei) or self._conflicting(self.S[-1].R, ei)
        ):
            q = self.S.pop()
            if self._conflicting(q.R, ei):
                q.swap()
            if self._conflicting(q.R, ei):
                return False
            self.ref[pair.R.low] = q.R.high
            if q.R.low is not None:
                pair.R.low = q.R.low
            if pair.L.empty():
                pair.L.high = q.L.high
            else:
                self.ref[pair.L.low] = q.L.high
            pair.L.low = q.L.low
        if not (pair.L.empty() and pair.R.empty()):
            self.S.append(pair)
        return True

    def _trim_back_edges(self, u: int) -> None:
        hu = self.height[u]
        while self.S and self._lowest(self.S[-1]) == hu:
            pair = self.S.pop()
            if pair.L.low is not None:
                self.side[pair.L.low] = -1
        if self.S:
            pair = self.S.pop()
            while pair.L.high is not None and pair.L.high[1] == u:
                pair.L.high = self.ref.get(pair.L.high)
            if pair.L.high is None and pair.L.low is not None:
                self.ref[pair.L.low] = pair.R.low
                self.side[pair.L.low] = -1
                pair.L.low = None
            while pair.R.high is not None and pair.R.high[1] == u:
                pair.R.high = self.ref.get(pair.R.high)
            if pair.R.high is None and pair.R.low is not None:
                self.ref[pair.R.low] = pair.L.low
                self.side[pair.R.low] = -1
                pair.R.low = None
            self.S.append(pair)

    def _test_from(self, root: int) -> bool:
        self.S = []
        stack = [(root, 0)]
        while stack:
            v, i = stack.pop()
            adj = self.ordered_adj[v]
            e = self.parent_edge[v]
            if i > 0:
                # just returned from the subtree hanging off adj[i - 1]
                ei = adj[i - 1]
                if self.lowpt[ei] < self.height[v]:
                    if i - 1 == 0:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
            descended = False
            while i < len(adj):
                ei = adj[i]
                self.stack_bottom[ei] = len(self.S)
                if ei == self.parent_edge[ei[1]]:
                    stack.append((v, i + 1))
                    stack.append((ei[1], 0))
                    descended = True
                    break
                self.lowpt_edge[ei] = ei
                self.S.append(_ConflictPair(right=_Interval(ei, ei)))
                if self.lowpt[ei] < self.height[v]:
                    if i == 0:
                        self.lowpt_edge[e] = self.lowpt_edge[ei]
                    elif not self._add_constraints(ei, e):
                        return False
                i += 1
            if descended:
                continue
            if e is not None:
                u = e[0]
                self._trim_back_edges(u)
                if self.lowpt[e] < self.height[u]:
                    top = self.S[-1]
                    hl, hr = top.L.high, top.R.high
                    if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                        self.ref[e] = hl
                    else:
                        self.ref[e] = hr
        return True


def lr_is_planar(adj: list[list[int]]) -> bool:
    """Left-right planarity decision on adjacency lists (simple graph)."""
    return _LRTest(adj).run()
