import pytest
from hypothesis import HealthCheck, settings, strategies as st

from vknot.gauss.codec import parse_diagram
from vknot.gauss.generate import random_diagram

settings.register_profile("vknot", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("vknot")

VT = "O1+ O2+ U1+ U2+"
VT_CANONICAL = "O1+ !+ O2+ U1+ !- U2+ !- !+"
# mod 2 numberable, no integer numbering
D3 = "O1+ O2+ O3+ U1+ U2+ U3+"
# valid marks with component shifts (-2, +2)
SHIFTED = "O1+ !+ O2+ !+\nU1+ !- U2+ !-"

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def diagrams(max_crossings: int = 4, max_components: int = 2):
    return st.builds(
        random_diagram,
        n=st.integers(min_value=0, max_value=max_crossings),
        components=st.integers(min_value=1, max_value=max_components),
        seed=seeds,
    )


def knots(max_crossings: int = 5):
    return st.builds(random_diagram, n=st.integers(min_value=1, max_value=max_crossings), components=st.just(1), seed=seeds)


@pytest.fixture
def vt():
    return parse_diagram(VT)[0]


@pytest.fixture
def gauss_file(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text + "\n", encoding="utf-8")
        return str(path)

    return write
