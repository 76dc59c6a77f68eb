import pytest
from hypothesis import settings

from bundlecensus import abelian
from bundlecensus.abelian import FGAbelianGroup, IntMatrix
from bundlecensus.cohomology import (
    CohomologyClass,
    GradedGroupMod2,
    GradedGroupZ,
    ManifoldData,
)
from bundlecensus.fixtures import builtin

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(autouse=True, scope="session")
def _verify_snf_postconditions():
    # re-check U*A*V == D, unimodularity and the divisibility chain on
    # every Smith normal form computed anywhere in the suite
    abelian.VERIFY_POSTCONDITIONS = True
    yield
    abelian.VERIFY_POSTCONDITIONS = False


@pytest.fixture(scope="session")
def cp4():
    return builtin("cp4")


@pytest.fixture(scope="session")
def s8():
    return builtin("s8")


@pytest.fixture(scope="session")
def hp2():
    return builtin("hp2")


@pytest.fixture(scope="session")
def cp2xcp2():
    return builtin("cp2xcp2")


@pytest.fixture(scope="session")
def cp1xcp3():
    return builtin("cp1xcp3")


@pytest.fixture(scope="session")
def torsion_demo():
    return builtin("torsion-demo")


def graded_pair(zmap, mmap):
    """Build (GradedGroupZ, GradedGroupMod2) from sparse degree maps."""
    groups, znames, dims, mnames = [], [], [], []
    for n in range(9):
        factors, names = zmap.get(n, ((), ()))
        groups.append(FGAbelianGroup(factors))
        znames.append(tuple(names))
        basis = mmap.get(n, ())
        dims.append(len(basis))
        mnames.append(tuple(basis))
    return GradedGroupZ(tuple(groups), tuple(znames)), GradedGroupMod2(
        tuple(dims), tuple(mnames)
    )


def make_h7_demo() -> ManifoldData:
    """Synthetic data with H^7 = Z and one odd quadruple (0, 0, 0, 2w)."""
    integral, mod2 = graded_pair(
        {0: ((0,), ("1",)), 7: ((0,), ("w",)), 8: ((0,), ("v",))},
        {0: ("1",), 7: ("w",), 8: ("v",)},
    )
    return ManifoldData(
        name="h7-demo",
        integral=integral,
        mod2=mod2,
        cup_z={},
        rho2={n: IntMatrix.identity(1) for n in (0, 7, 8)},
        beta={7: IntMatrix.zeros(1, 1)},
        sq2={},
        pairing=(1,),
        p1=CohomologyClass(4, "Z", ()),
        spinc_class=CohomologyClass(2, "Z", ()),
        odd_generators=(
            (
                CohomologyClass(1, "Z", ()),
                CohomologyClass(3, "Z", ()),
                CohomologyClass(5, "Z", ()),
                CohomologyClass(7, "Z", (2,)),
            ),
        ),
    )


@pytest.fixture(scope="session")
def h7_demo():
    return make_h7_demo()
