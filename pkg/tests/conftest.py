import functools
import pathlib

import pytest

from hopfkit.examples import ExampleSpec, build

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data" / "presentations"


@functools.lru_cache(maxsize=None)
def built(spec: ExampleSpec):
    return build(spec)


@pytest.fixture(scope="session")
def build_cached():
    return built


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def uq_borel_c3():
    return built(ExampleSpec.uq_borel_cyclotomic(3))


@pytest.fixture(scope="session")
def uq_borel_c5():
    return built(ExampleSpec.uq_borel_cyclotomic(5))


@pytest.fixture(scope="session")
def uq_borel_generic():
    return built(ExampleSpec.uq_borel_generic())


@pytest.fixture(scope="session")
def taft_wilson_p3():
    return built(ExampleSpec.taft_wilson(3))


@pytest.fixture(scope="session")
def taft_wilson_p5():
    return built(ExampleSpec.taft_wilson(5))


@pytest.fixture(scope="session")
def group_cyclic_4():
    return built(ExampleSpec.group_cyclic(4))


@pytest.fixture(scope="session")
def group_laurent():
    return built(ExampleSpec.group_laurent())
