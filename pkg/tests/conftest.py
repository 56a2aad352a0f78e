import pytest

from chainforms import fixtures as fx


@pytest.fixture(scope="session")
def circle():
    return fx.circle_complex(3)


@pytest.fixture(scope="session")
def sphere2():
    return fx.sphere_complex(2)


@pytest.fixture(scope="session")
def sphere3():
    return fx.sphere_complex(3)


@pytest.fixture(scope="session")
def sphere5():
    return fx.sphere_complex(5)


@pytest.fixture(scope="session")
def rp2():
    return fx.rp2()


@pytest.fixture(scope="session")
def rp3():
    return fx.rp3()


@pytest.fixture(scope="session")
def cp2():
    return fx.cp2()


@pytest.fixture(scope="session")
def torus():
    return fx.torus()


@pytest.fixture(scope="session")
def lens31():
    return fx.lens_space(3, 1)


@pytest.fixture(scope="session")
def lens41():
    return fx.lens_space(4, 1)


@pytest.fixture(scope="session")
def wu_cex():
    return fx.wu_counterexample()


@pytest.fixture(scope="session")
def small_manifolds(circle, sphere2, sphere3, rp2, torus):
    return [circle, sphere2, sphere3, rp2, torus]


@pytest.fixture(scope="session")
def all_fixtures(circle, sphere2, sphere3, sphere5, rp2, rp3, cp2, torus,
                 lens31, lens41, wu_cex):
    return [circle, sphere2, sphere3, sphere5, rp2, rp3, cp2, torus,
            lens31, lens41, wu_cex]
