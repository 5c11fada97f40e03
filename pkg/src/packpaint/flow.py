"""Dinic max-flow over integer capacities (Python ints, so no overflow)."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        if cap < 0:
            raise ValueError("negative capacity")
        idx = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.head[u].append(idx)
        self.head[v].append(idx + 1)
        return idx

    def _levels(self, s: int, t: int):
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in self.head[x]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[x] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            # iterative blocking-flow DFS
            while True:
                path: list[int] = []
                x = s
                while x != t:
                    edges = head[x]
                    while it[x] < len(edges):
                        e = edges[it[x]]
                        if cap[e] > 0 and level[to[e]] == level[x] + 1:
                            break
                        it[x] += 1
                    else:
                        if x == s:
                            break
                        level[x] = -1
                        e = path.pop()
                        x = to[e ^ 1]
                        it[x] += 1
                        continue
                    path.append(edges[it[x]])
                    x = to[edges[it[x]]]
                if x != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                total += push

    def source_side(self, s: int) -> set[int]:
        """Vertices reachable from ``s`` in the residual graph (after max_flow)."""
        seen = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in self.head[x]:
                y = self.to[e]
                if self.cap[e] > 0 and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen
