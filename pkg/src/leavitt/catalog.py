"""Standard small graphs whose Leavitt path algebras are classical algebras."""
from __future__ import annotations

from .graph import Graph


def line_graph(n: int, name: str = "") -> Graph:
    """v1 -> v2 -> ... -> vn; realizes the n x n matrices."""
    if n < 1:
        raise ValueError("a line graph needs at least one vertex")
    return Graph(
        [f"v{i}" for i in range(1, n + 1)],
        [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)],
        name=name or f"line{n}",
    )


def rose(n: int, name: str = "") -> Graph:
    """One vertex with n loops; realizes the Leavitt algebra L(1, n)."""
    if n < 1:
        raise ValueError("a rose needs at least one petal")
    return Graph(["v"], [(f"e{i}", "v", "v") for i in range(1, n + 1)], name=name or f"rose{n}")


def single_loop(name: str = "loop") -> Graph:
    """Realizes the Laurent polynomials K[x, x^-1]."""
    return Graph(["v"], [("e", "v", "v")], name=name)


def toeplitz(name: str = "T") -> Graph:
    """A loop at v plus an exit v -> w; the algebraic Toeplitz algebra."""
    return Graph(["v", "w"], [("l", "v", "v"), ("x", "v", "w")], name=name)


def line_into_rose(n: int, m: int, name: str = "") -> Graph:
    """A line of n vertices whose last vertex carries m loops: M_n(L(1, m))."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 vertices and m >= 1 loops")
    edges = [(f"e{i}", f"v{i}", f"v{i + 1}") for i in range(1, n)]
    edges += [(f"f{j}", f"v{n}", f"v{n}") for j in range(1, m + 1)]
    return Graph([f"v{i}" for i in range(1, n + 1)], edges, name=name or f"line{n}rose{m}")


def fork(name: str = "fork") -> Graph:
    """v1 -> v2 and v1 -> v3; realizes M_2(K) + M_2(K)."""
    return Graph(["v1", "v2", "v3"], [("e1", "v1", "v2"), ("e2", "v1", "v3")], name=name)
