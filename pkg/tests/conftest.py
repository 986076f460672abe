"""
Shared fixtures.
"""

import json

import pytest

from algebra.cyclo import make_field
from braided.braiding import MonomialBraiding
from families.k_family import KParams

# sigma_i(j) = f(j), tau_j(i) = g(i) with f, g non-commuting: fails the braid
# equation already at the basis triple (1, 1, 1)
SWAP_01 = [1, 0, 2]
SWAP_12 = [0, 2, 1]


@pytest.fixture
def corrupted_braiding() -> MonomialBraiding:
    field = make_field(1)
    return MonomialBraiding.from_rule(3, field, lambda i, j: (1, SWAP_01[j], SWAP_12[i]))


@pytest.fixture
def corrupted_doc() -> dict:
    return {
        "dim": 3,
        "order": 1,
        "entries": [
            {"i": i + 1, "j": j + 1, "si": SWAP_01[j] + 1, "tj": SWAP_12[i] + 1, "coeff": "1"}
            for i in range(3) for j in range(3)
        ],
    }


@pytest.fixture
def corrupted_file(tmp_path, corrupted_doc):
    path = tmp_path / "corrupted.json"
    path.write_text(json.dumps(corrupted_doc), encoding="utf-8")
    return path


@pytest.fixture
def k64() -> KParams:
    """q = -1, lam = 1, n = 2: the 64-dimensional member."""
    return KParams(N=1, n=2, j=2, k=0, p=1, s=1)


@pytest.fixture
def no_run_log(monkeypatch):
    from services import job_service
    monkeypatch.setattr(job_service, "NICHOLS_RUN_LOG", False)
