"""Contact graph of all sites in a window, shared by the search routines."""

from __future__ import annotations

from functools import lru_cache

from ..hexlattice import POINT_GROUP, HexCoord, Window, enum_window, neighbors, to_cartesian


class SiteGraph:
    """Window sites indexed in ``(k, j, i)`` order with neighbour lists and bitmasks."""

    def __init__(self, window: Window):
        self.window = window
        self.sites: list[HexCoord] = enum_window(window)
        self.index: dict[HexCoord, int] = {p: v for v, p in enumerate(self.sites)}
        self.nbrs: list[tuple[int, ...]] = [
            tuple(self.index[q] for q in neighbors(p) if q in self.index) for p in self.sites
        ]
        self.adj: list[int] = [sum(1 << u for u in nb) for nb in self.nbrs]
        self.cart = [to_cartesian(p) for p in self.sites]

    def __len__(self) -> int:
        return len(self.sites)

    def edges_within(self, vertices) -> int:
        mask = 0
        total = 0
        for v in vertices:
            total += (self.adj[v] & mask).bit_count()
            mask |= 1 << v
        return total

    def center_site(self) -> int:
        """Index of the site closest to the Cartesian centroid (lowest index on ties)."""
        m = len(self.cart)
        cx = sum(c.x for c in self.cart) / m
        cy = sum(c.y for c in self.cart) / m
        cz = sum(c.z for c in self.cart) / m
        return min(
            range(m),
            key=lambda v: (
                round((self.cart[v].x - cx) ** 2 + (self.cart[v].y - cy) ** 2 + (self.cart[v].z - cz) ** 2, 9),
                v,
            ),
        )

    def stabilizer(self) -> list[tuple[int, ...]]:
        """Site permutations induced by lattice symmetries mapping the window onto itself."""
        return _stabilizer(self.window)


def _stabilizer(window: Window) -> list[tuple[int, ...]]:
    graph = site_graph(window)
    sites = graph.sites
    anchor = sites[0].sort_key()
    perms = []
    for op in POINT_GROUP:
        image = [op(p) for p in sites]
        low = min(q.sort_key() for q in image)
        dk, dj, di = (anchor[a] - low[a] for a in range(3))
        if dk % 2:
            continue
        perm = []
        for q in image:
            v = graph.index.get(HexCoord(q.i + di, q.j + dj, q.k + dk))
            if v is None:
                break
            perm.append(v)
        else:
            perms.append(tuple(perm))
    return sorted(set(perms))


@lru_cache(maxsize=64)
def site_graph(window: Window) -> SiteGraph:
    return SiteGraph(window)
