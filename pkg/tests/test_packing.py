from __future__ import annotations

import random

import pytest

from listpacking import (
    ABSENT,
    FOUND,
    ListAssignment,
    PackRequest,
    SolverContractError,
    UnsupportedRegimeError,
    complete_bipartite,
    complete_graph,
    is_proper_packing,
    pack_complete,
    pack_via_product,
    solve_list_coloring,
    solve_packing,
)
from listpacking.packing import _product_coloring
from listpacking.galvin import list_edge_color
from listpacking import product_id
from .helpers import path_graph


def exhaustive_solver(h, lifted):
    result = solve_list_coloring(h, lifted)
    assert result.status in (FOUND, ABSENT)
    return result.witness if result.status == FOUND else None


def test_pack_single_vertex():
    ell = ListAssignment({1: frozenset({3, 8})})
    packing = pack_complete(PackRequest(1, ell, 2))
    assert sorted(row[1] for row in packing.rows) == [3, 8]


def test_pack_k2_identical_lists():
    k2 = complete_graph(2)
    ell = ListAssignment({1: frozenset({1, 2}), 2: frozenset({1, 2})})
    packing = pack_complete(PackRequest(2, ell, 2))
    assert is_proper_packing(k2, ell, packing).ok
    assert set(map(tuple, (sorted(r.items()) for r in packing.rows))) == {
        ((1, 1), (2, 2)),
        ((1, 2), (2, 1)),
    }


def is_latin_square(rows, n):
    array = [[row[i] for i in range(1, n + 1)] for row in rows]
    symbols = set(range(1, n + 1))
    return all(set(r) == symbols for r in array) and all(
        {array[j][i] for j in range(n)} == symbols for i in range(n)
    )


def test_pack_k4_identical_lists_is_a_latin_square():
    ell = ListAssignment({v: frozenset({1, 2, 3, 4}) for v in range(1, 5)})
    packing = pack_complete(PackRequest(4, ell, 4))
    assert is_latin_square(packing.rows, 4)


def test_pack_rejects_small_m():
    ell = ListAssignment({v: frozenset({1, 2}) for v in range(1, 4)})
    with pytest.raises(UnsupportedRegimeError):
        pack_complete(PackRequest(3, ell, 2))


def test_pack_rejects_non_uniform_lists():
    ell = ListAssignment({1: frozenset({1, 2}), 2: frozenset({1, 2, 3})})
    with pytest.raises(ValueError):
        pack_complete(PackRequest(2, ell, 2))


def test_pack_random_assignments_verify():
    rng = random.Random(1)
    for n in range(2, 5):
        for m in range(n, n + 3):
            for _ in range(10):
                ell = ListAssignment(
                    {
                        v: frozenset(rng.sample(range(1, 3 * m + 1), m))
                        for v in range(1, n + 1)
                    }
                )
                packing = pack_complete(PackRequest(n, ell, m))
                assert packing.size == m
                assert is_proper_packing(complete_graph(n), ell, packing).ok


def test_pullback_is_bit_exact():
    # The relabeling (i, j) <-> x_i y_j composed with the pullback moves color
    # values around untouched.
    n = m = 3
    ell = ListAssignment({v: frozenset({2, 4, 6}) for v in range(1, n + 1)})
    knm, bip = complete_bipartite(n, m)
    edge_lists = {(i, n + j): ell[i] for i in range(1, n + 1) for j in range(1, m + 1)}
    ec = list_edge_color(knm, bip, edge_lists)
    f_h = _product_coloring(n, m, ec)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            assert f_h[product_id(i, j, m)] == ec.colors[(i, n + j)]


def test_pack_monotone_regime_with_truncated_lists():
    rng = random.Random(4)
    for n in (2, 3):
        m = n + 2
        full = {v: sorted(rng.sample(range(1, 3 * m + 1), m)) for v in range(1, n + 1)}
        for m_prime in range(n, m + 1):
            ell = ListAssignment(
                {v: frozenset(full[v][:m_prime]) for v in range(1, n + 1)}
            )
            packing = pack_complete(PackRequest(n, ell, m_prime))
            assert is_proper_packing(complete_graph(n), ell, packing).ok
            assert solve_packing(complete_graph(n), ell, m_prime).status == FOUND


def test_pack_via_product_present_and_absent():
    k2 = complete_graph(2)
    ell = ListAssignment({1: frozenset({1, 2}), 2: frozenset({1, 2})})
    packing = pack_via_product(k2, ell, 2, exhaustive_solver)
    assert packing is not None and is_proper_packing(k2, ell, packing).ok

    k3 = complete_graph(3)
    ell3 = ListAssignment({v: frozenset({1, 2}) for v in range(1, 4)})
    assert pack_via_product(k3, ell3, 2, exhaustive_solver) is None


def test_pack_via_product_agrees_with_direct_search():
    rng = random.Random(12)
    p3 = path_graph(3)
    for _ in range(30):
        ell = ListAssignment(
            {v: frozenset(rng.sample(range(1, 5), 2)) for v in p3.vertices()}
        )
        via = pack_via_product(p3, ell, 2, exhaustive_solver)
        direct = solve_packing(p3, ell, 2)
        assert (via is not None) == (direct.status == FOUND)


def test_pack_via_product_surfaces_solver_lies():
    k2 = complete_graph(2)
    ell = ListAssignment({1: frozenset({1, 2}), 2: frozenset({1, 2})})

    def lying_solver(h, lifted):
        return {v: 1 for v in h.vertices()}

    with pytest.raises(SolverContractError):
        pack_via_product(k2, ell, 2, lying_solver)


def test_pack_via_product_requires_wide_lists():
    k2 = complete_graph(2)
    ell = ListAssignment({1: frozenset({1}), 2: frozenset({1, 2})})
    with pytest.raises(ValueError):
        pack_via_product(k2, ell, 2, exhaustive_solver)
