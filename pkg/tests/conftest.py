"""Session-scoped caches for the expensive objects the suite shares."""

from __future__ import annotations

import pytest

from pgroups.catalog import Catalog, enumerate_groups
from pgroups.idtree import build_tree


@pytest.fixture(scope="session")
def catalog_entries():
    """Factory returning the (cached) catalog entries for one order."""
    memo = {}

    def get(p: int, n: int):
        if (p, n) not in memo:
            memo[(p, n)] = enumerate_groups(p, n)
        return memo[(p, n)]

    return get


@pytest.fixture(scope="session")
def catalog_of(catalog_entries):
    """Factory returning a Catalog object covering one order."""
    memo = {}

    def get(p: int, n: int):
        if (p, n) not in memo:
            memo[(p, n)] = Catalog(catalog_entries(p, n))
        return memo[(p, n)]

    return get


@pytest.fixture(scope="session")
def tree_of(catalog_entries):
    """Factory returning the (cached) identification tree for one order."""
    memo = {}

    def get(p: int, n: int):
        if (p, n) not in memo:
            memo[(p, n)] = build_tree(catalog_entries(p, n))
        return memo[(p, n)]

    return get


@pytest.fixture(scope="session")
def report(request):
    """Write a line to the terminal even with output capture active."""
    tr = request.config.pluginmanager.get_plugin("terminalreporter")

    def emit(line: str):
        if tr is not None:
            tr.write_line(line)

    return emit
