import random

import pytest

from crautomata import _pykernels, kernels
from crautomata.enumeration import pack

BACKENDS = sorted(kernels.BACKENDS)


def random_table(rng, n, m):
    return [[rng.randrange(n) for _ in range(n)] for _ in range(m)]


def test_backend_selected_at_import():
    assert kernels.backend_name() in kernels.BACKENDS
    assert "python" in kernels.BACKENDS


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.parametrize("name", BACKENDS)
def test_step_matches_definition(name):
    k = kernels.get(name)
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 12)
        row = [rng.randrange(n) for _ in range(n)]
        cv = [rng.randrange(3) for _ in range(n)]
        acc = [0] * n
        for q, c in enumerate(cv):
            acc[row[q]] += c
        expected = pack([min(2, v) for v in acc])
        assert k.cv_step(pack(cv), row, n) == expected
        assert k.cv_defect(pack(cv), n) == cv.count(0)


@pytest.mark.parametrize("name", BACKENDS)
def test_image_mask(name):
    k = kernels.get(name)
    row = [2, 2, 0, 5, 1, 1]
    assert k.image_mask(0b000011, row) == 0b000100
    assert k.image_mask(0b111111, row) == 0b100111


def test_backends_agree_on_exploration():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    rng = random.Random(11)
    for _ in range(40):
        n, m = rng.randint(2, 7), rng.randint(1, 4)
        table = random_table(rng, n, m)
        results = []
        for name in BACKENDS:
            k = kernels.get(name)
            ident = k.cv_identity(n)
            parent = {ident: (-1, -1)}
            first = k.explore(table, n, [ident], parent, 1)
            results.append((first, dict(parent)))
        assert results[0] == results[1]


def test_backends_agree_on_subset_closure():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    rng = random.Random(12)
    for _ in range(40):
        n, m = rng.randint(1, 11), rng.randint(1, 4)
        table = random_table(rng, n, m)
        full = (1 << n) - 1
        got = [kernels.get(name).subset_closure(table, n, full) for name in BACKENDS]
        assert got[0] == got[1]


def test_byte_tables_cover_wide_automata():
    rng = random.Random(3)
    n = 19
    row = [rng.randrange(n) for _ in range(n)]
    parent = _pykernels.subset_closure([row], n, (1 << n) - 1)
    for mask in parent:
        prev, _ = parent[mask]
        if prev >= 0:
            assert _pykernels.image_mask(prev, row) == mask


def test_pure_python_fallback_when_extension_missing():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['crautomata._ckernels'] = None\n"
        "from crautomata import kernels, families, decide\n"
        "assert kernels.backend_name() == 'python', kernels.backend_name()\n"
        "assert decide(families.e5()).k == 3\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)
