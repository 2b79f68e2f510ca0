import pytest

from jmfit import builtin_dataset, run_experiment


@pytest.fixture(scope="session")
def ntds():
    return builtin_dataset("ntds")


@pytest.fixture(scope="session")
def musa1():
    return builtin_dataset("musa1")


@pytest.fixture(scope="session")
def musa2():
    return builtin_dataset("musa2")


@pytest.fixture(scope="session")
def musa3():
    return builtin_dataset("musa3")


@pytest.fixture(scope="session")
def exp1_report():
    return run_experiment("exp1")


@pytest.fixture(scope="session")
def exp2_report():
    return run_experiment("exp2")


@pytest.fixture(scope="session")
def exp3_report():
    return run_experiment("exp3")
