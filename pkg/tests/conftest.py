"""Shared builders for the small graph zoo used across the test modules."""

from __future__ import annotations

from artemis_color import new_graph


def path_graph(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def prism_graph():
    return new_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                         (0, 3), (1, 4), (2, 5)])


def k3_plus_k2():
    return new_graph(5, [(0, 1), (1, 2), (0, 2), (3, 4)])
