import pytest

from circlet import generators as gen

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def d5():
    return gen.simplex_skeleton(5)


@pytest.fixture(scope="session")
def fig2():
    return gen.figure2_complex()


@pytest.fixture(scope="session")
def two_tetra():
    return gen.two_tetra_shared_edge()


@pytest.fixture(scope="session")
def octa():
    return gen.octahedron()


@pytest.fixture(scope="session")
def tetra():
    return gen.tetrahedron()


SMALL_EVEN = {
    "tetrahedron": gen.tetrahedron,
    "cube": gen.cube,
    "octahedron": gen.octahedron,
    "pinched_sphere": gen.pinched_sphere,
    "two_tetra": gen.two_tetra_shared_edge,
    "simplex3": lambda: gen.simplex_skeleton(3),
    "crosspoly3": lambda: gen.cross_polytope_skeleton(3),
}

EVEN_INSTANCES = {
    **SMALL_EVEN,
    "simplex5": lambda: gen.simplex_skeleton(5),
    "crosspoly4": lambda: gen.cross_polytope_skeleton(4),
    "hypercube5": lambda: gen.hypercube_skeleton(5),
    "figure2": gen.figure2_complex,
}
