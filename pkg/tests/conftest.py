import os
import random
import sys

import pytest
from hypothesis import strategies as st

current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
code_dir = os.path.join(project_root, "code")
if code_dir not in sys.path:
    sys.path.append(code_dir)

from positive import Positive, encode_string  # noqa: E402
from registry import TRIES  # noqa: E402
from settings import load_settings  # noqa: E402

positives = st.one_of(
    st.integers(min_value=1, max_value=2**11).map(Positive),
    st.binary(min_size=1, max_size=8).map(encode_string),
)
values = st.integers(min_value=0, max_value=1000)
binding_lists = st.lists(st.tuples(positives, values), max_size=40)


@pytest.fixture(scope="session")
def settings():
    return load_settings()


@pytest.fixture
def rng():
    return random.Random(24657)


@pytest.fixture(params=TRIES, ids=lambda impl: impl.name)
def impl(request):
    return request.param
