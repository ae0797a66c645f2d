import random
import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nsg.explorer import tree_children  # noqa: E402
from nsg.kernels import available_backends  # noqa: E402
from nsg.semigroup import NATURALS  # noqa: E402


def random_semigroup(rng, max_conductor=30):
    """Random walk down the semigroup tree, staying under max_conductor."""
    H = NATURALS
    depth = rng.randint(0, max_conductor)
    for _ in range(depth):
        kids = [k for k in tree_children(H) if k.conductor <= max_conductor]
        if not kids:
            break
        H = rng.choice(kids)
    return H


def brute_force_gap_sets(genus):
    """All gap sets of size genus whose complement is additively closed."""
    if genus == 0:
        return [()]
    out = []
    # gaps of a genus-g semigroup lie in [1, 2g - 1]
    for gaps in combinations(range(1, 2 * genus), genus):
        gs = set(gaps)
        members = [x for x in range(1, 2 * genus) if x not in gs]
        if all(a + b not in gs for a in members for b in members):
            out.append(gaps)
    return out


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=sorted(available_backends()))
def backend(request):
    return available_backends()[request.param]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.VERDICTS):
        terminalreporter.write_line(mod.VERDICTS[n])
