"""Tarjan's strongly connected components on an adjacency matrix (iterative)."""

from __future__ import annotations


def strongly_connected(adj) -> list:
    """Return the SCCs of the digraph ``adj`` (n x n truthy matrix) as sorted lists.

    Components come out in reverse topological order, as Tarjan emits them.
    """
    n = len(adj)
    succ = [[w for w in range(n) if w != v and adj[v][w]] for v in range(n)]
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    out = []
    counter = 0
    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] is None:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
    return out
