"""Session fixtures: the bundled genus-4 data set, loaded and derived once."""

from __future__ import annotations

from fractions import Fraction

import pytest

from jacdec import jsonio
from jacdec.cyclofield import CyclotomicField
from jacdec.grouprep import generate_group


@pytest.fixture(scope="session")
def group_data():
    return jsonio.group_from_json(jsonio.load_fixture("group_genus4.json"))


@pytest.fixture(scope="session")
def assignments(group_data):
    return group_data.assignments()


@pytest.fixture(scope="session")
def group40(group_data):
    return generate_group(group_data.generators)


@pytest.fixture(scope="session")
def field5():
    return CyclotomicField(5)


@pytest.fixture(scope="session")
def z_paper():
    Z, k = jsonio.riemann_from_json(jsonio.load_fixture("fixed_point_Z.json"))
    assert k == 1
    return Z


@pytest.fixture(scope="session")
def b1():
    return jsonio.lattice_from_json(jsonio.load_fixture("lattice_B1.json"))


@pytest.fixture(scope="session")
def b2():
    return jsonio.lattice_from_json(jsonio.load_fixture("lattice_B2.json"))


@pytest.fixture(scope="session")
def z1_half():
    Z1 = jsonio.matrix_from_json(jsonio.load_fixture("theorem_Z1.json"))
    return Z1 * Fraction(1, 2)


@pytest.fixture(scope="session")
def z2_half():
    Z2 = jsonio.matrix_from_json(jsonio.load_fixture("theorem_Z2.json"))
    return Z2 * Fraction(1, 2)


@pytest.fixture(scope="session")
def rho_phi():
    return jsonio.int_matrix_from_json(jsonio.load_fixture("rho_phi.json")["matrix"])
