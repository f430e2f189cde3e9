import pytest

from revbcd.designs import build_dec_csk, build_dec_rca, build_pdfa


@pytest.fixture(scope="session")
def pdfa():
    return build_pdfa()


@pytest.fixture(scope="session")
def dec_rca8():
    return build_dec_rca(8)


@pytest.fixture(scope="session")
def dec_csk8():
    return build_dec_csk(8)
