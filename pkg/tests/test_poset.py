import re

import pytest

from abelian_ideals import compute_omega, hasse_to_dot, sum_not_preceding_theta
from abelian_ideals.root_system import all_types, precedes

from conftest import rs_of


def roots_of(*labels):
    return {tuple(int(c) for c in label) for label in labels}


EXCEPTIONAL_OMEGA = {
    "G2": roots_of("12", "13", "23"),
    "F4": roots_of(
        "1220", "0122", "1221", "1122", "1231", "1222", "1232", "1242", "1342", "2342"
    ),
    "E6": roots_of(
        "100000", "000010", "110000", "000110", "111000", "001110", "111001", "111100",
        "011110", "001111", "111101", "111110", "011111", "012101", "112101", "111111",
        "012111", "122101", "112111", "012211", "122111", "112211", "122211", "123211",
        "123212",
    ),
    "E7": roots_of(
        "0000010", "0000110", "0001110", "0011110", "0111110", "0011111", "1111110",
        "0111111", "1111111", "0121111", "0122101", "1221001", "1121111", "0122111",
        "1122101", "1221101", "0122211", "1122111", "1221111", "1222101", "1122211",
        "1222111", "1232101", "1222211", "1232111", "1232102", "1232211", "1232112",
        "1233211", "1232212", "1233212", "1243212", "1343212", "2343212",
    ),
    "E8": roots_of(
        "01222211", "12321002", "11222211", "12321102", "12222211", "12332101", "12321112",
        "12322102", "12322211", "12332111", "12322112", "12332102", "12332211", "12322212",
        "12332112", "12432102", "12333211", "12332212", "12432112", "13432102", "12333212",
        "12432212", "13432112", "23432102", "12433212", "13432212", "23432112", "12443212",
        "13433212", "23432212", "13443212", "23433212", "13543212", "23443212", "13543213",
        "23543212", "23543213", "24543212", "24543213", "24643213", "24653213", "24654213",
        "24654313", "24654323",
    ),
}


@pytest.mark.parametrize("name", sorted(EXCEPTIONAL_OMEGA))
def test_exceptional_omega_nodes(name):
    assert set(compute_omega(rs_of(name)).elements) == EXCEPTIONAL_OMEGA[name]


def test_g2_chain():
    om = compute_omega(rs_of("G2"))
    assert om.elements == ((1, 2), (1, 3), (2, 3))
    assert om.covers == ((0, 1), (1, 2))


@pytest.mark.parametrize("r", range(1, 9))
def test_type_a_omega_is_everything(r):
    rs = rs_of(f"A{r}")
    assert compute_omega(rs).elements == rs.positive_roots


@pytest.mark.parametrize("r", range(2, 9))
def test_classical_omega_sizes(r):
    assert len(compute_omega(rs_of(f"C{r}"))) == r * (r + 1) // 2
    assert len(compute_omega(rs_of(f"B{r}"))) == r * (r - 1) // 2 + r
    if r >= 3:
        assert len(compute_omega(rs_of(f"D{r}"))) == r * (r - 1) // 2 + 2 * r - 3


@pytest.mark.parametrize("r", range(2, 8))
def test_type_c_omega_epsilon_set(r):
    rs = rs_of(f"C{r}")
    pairs = set()
    for a in compute_omega(rs).elements:
        v = rs.epsilon(a)
        idx = [k + 1 for k, c in enumerate(v) for _ in range(int(c))]
        assert all(c >= 0 for c in v) and len(idx) == 2
        pairs.add(tuple(idx))
    assert pairs == {(i, j) for i in range(1, r + 1) for j in range(i, r + 1)}


@pytest.mark.parametrize("r", range(2, 8))
def test_type_c_omega_is_triangular_grid(r):
    rs = rs_of(f"C{r}")
    elements = compute_omega(rs).elements

    def ij(a):
        v = rs.epsilon(a)
        idx = [k + 1 for k, c in enumerate(v) for _ in range(int(c))]
        return idx[0], idx[1]

    for a in elements:
        for b in elements:
            (i1, j1), (i2, j2) = ij(a), ij(b)
            # larger indices sit lower in the dominance order
            assert precedes(a, b) == (i1 >= i2 and j1 >= j2)
            # relabelled (i, j) -> (r+1-j, r+1-i) the order is componentwise <=
            assert precedes(a, b) == (r + 1 - j1 <= r + 1 - j2 and r + 1 - i1 <= r + 1 - i2)


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_covers_generate_order(t):
    rs = rs_of(str(t))
    om = compute_omega(rs)
    n = len(om)
    reach = [{i} for i in range(n)]
    ups = {i: om.upper_covers(i) for i in range(n)}
    for i in reversed(range(n)):  # canonical order is a linear extension
        for u in ups[i]:
            assert u > i
            reach[i] |= reach[u]
    for i in range(n):
        assert reach[i] == {j for j in range(n) if precedes(om.elements[i], om.elements[j])}
    for lo, up in om.covers:
        # no element strictly between
        assert not any(
            k not in (lo, up)
            and precedes(om.elements[lo], om.elements[k])
            and precedes(om.elements[k], om.elements[up])
            for k in range(n)
        )
    top = om.elements.index(rs.highest_root)
    assert om.maximal() == [top]


def test_sum_not_preceding_theta_examples():
    rs = rs_of("A2")
    assert not sum_not_preceding_theta((1, 0), (0, 1), rs)
    for name in ("A3", "B3", "G2", "E8"):
        rs = rs_of(name)
        assert sum_not_preceding_theta(rs.highest_root, rs.highest_root, rs)


@pytest.mark.parametrize("r", range(2, 8))
def test_type_c_omega_pairs_always_admissible(r):
    rs = rs_of(f"C{r}")
    om = compute_omega(rs).elements
    assert all(sum_not_preceding_theta(a, b, rs) for a in om for b in om)


def _dot_counts(text):
    nodes = re.findall(r"^\s*n\d+ \[label=", text, re.M)
    edges = re.findall(r"^\s*n\d+ -> n\d+;", text, re.M)
    return len(nodes), len(edges)


@pytest.mark.parametrize("name, nodes, edges", [("G2", 3, 2), ("C2", 3, 2), ("F4", 10, None), ("C4", 10, None)])
def test_dot_counts(name, nodes, edges):
    text = hasse_to_dot(compute_omega(rs_of(name)))
    n, e = _dot_counts(text)
    assert n == nodes
    if edges is not None:
        assert e == edges


def test_dot_layout():
    text = hasse_to_dot(compute_omega(rs_of("E7")))
    assert text.startswith('digraph "Omega_E7" {\n')
    assert '[label="1232111"]' in text
    assert text.endswith("}\n")
    # edges run lower -> upper, so the maximum is drawn last (at the bottom)
    om = compute_omega(rs_of("E7"))
    top = len(om.elements) - 1
    assert f"n{top} ->" not in text
