"""
Verification sweeps for the family constructions.
Each target checks one family of claims over a parameter sweep and stops
recording counterexamples after the first one.
"""

import random
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from braided.braiding import MonomialBraiding, braid_violation, cocycle_check, twist_conjugate
from config import DEFAULT_SAMPLES, SAMPLE_SEED
from families.cases import ParameterError
from families.i_family import i_family
from families.k_family import all_k_params, k_braiding, k_closed_form, k_rack_shape, k_twist
from families.l_family import FamilySolution, l_family
from families.n_family import all_n_params, n_braiding, n_closed_form, n_rack_shape, n_twist
from utils.literals import format_literal


# Verification targets
TARGETS = ["k-lemmas", "n-lemmas", "l-rack", "i-rack", "cocycle", "braid"]

SWEEPS = ["all", "sample"]


@dataclass
class VerifyReport:
    target: str
    cases: int = 0
    failures: int = 0
    first_counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, counterexample: dict) -> None:
        self.failures += 1
        if self.first_counterexample is None:
            self.first_counterexample = counterexample

    def as_dict(self) -> dict:
        out = {
            "target": self.target,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
        }
        if self.first_counterexample is not None:
            out["first_counterexample"] = self.first_counterexample
        if self.details:
            out["details"] = self.details
        return out


def _log(msg: str) -> None:
    print(f"[Verify] {msg}", file=sys.stderr)


def first_difference(expected: MonomialBraiding, got: MonomialBraiding) -> Optional[dict]:
    """First 1-based pair where two braidings of the same dim disagree."""
    for (i, j, si, tj, v), (_, _, si2, tj2, v2) in zip(expected.entries(), got.entries()):
        if (si, tj) != (si2, tj2) or v != v2:
            return {
                "pair": [i + 1, j + 1],
                "expected": {"out": [si + 1, tj + 1], "coeff": format_literal(v)},
                "got": {"out": [si2 + 1, tj2 + 1], "coeff": format_literal(v2)},
            }
    return None


# ---------------------------------------------------------------------------
# Parameter sweeps
# ---------------------------------------------------------------------------

def parameter_sweep(enumerate_params: Callable[[int, int], Iterable], n: int,
                    N: Optional[int] = None, sweep: str = "all",
                    samples: int = DEFAULT_SAMPLES, seed: int = SAMPLE_SEED) -> list:
    """
    "all": every valid tuple for (N, n). "sample": `samples` tuples drawn with a
    seeded generator, N drawn from [1, 3] unless given.
    """
    if sweep not in SWEEPS:
        raise ParameterError(f"sweep must be one of {SWEEPS}, got {sweep!r}")
    if sweep == "all":
        if N is None:
            raise ParameterError("sweep 'all' needs N")
        return list(enumerate_params(N, n))
    rng = random.Random(seed)
    pools = {}
    out = []
    for _ in range(samples):
        size = N if N is not None else rng.randint(1, 3)
        if size not in pools:
            pools[size] = list(enumerate_params(size, n))
        out.append(rng.choice(pools[size]))
    return out


def _check_lemmas(report: VerifyReport, params, braiding, twist, closed_form, rack_shape, rack_variant) -> None:
    c = braiding(params)
    result = twist_conjugate(c, twist(params))
    conjugated = {"tilde": result.tilde, "bar": result.bar}
    problems = []
    if not result.equal:
        problems.append({"check": "tilde = bar", "difference": first_difference(result.tilde, result.bar)})
    for variant, actual in conjugated.items():
        diff = first_difference(closed_form(params, variant), actual)
        if diff:
            problems.append({"check": f"{variant} closed form", "difference": diff})
    if not rack_shape(params, conjugated[rack_variant]):
        problems.append({"check": f"{rack_variant} rack shape"})
    report.cases += 1
    if problems:
        report.fail({"params": params.as_dict(), "problems": problems})


def verify_k_lemmas(n: int, N: Optional[int] = None, sweep: str = "all",
                    samples: int = DEFAULT_SAMPLES) -> VerifyReport:
    """
    For each parameter tuple: tilde = bar, both conjugated tables equal their
    closed forms entrywise, and bar has dihedral rack shape.
    """
    report = VerifyReport("k-lemmas", details={"n": n, "N": N, "sweep": sweep})
    sweep_params = parameter_sweep(all_k_params, n, N, sweep, samples)
    _log(f"k-lemmas: n = {n}, {len(sweep_params)} parameter tuples")
    for params in sweep_params:
        _check_lemmas(report, params, k_braiding, k_twist, k_closed_form, k_rack_shape, "bar")
    _log(f"k-lemmas: {report.cases - report.failures}/{report.cases} passed")
    return report


def verify_n_lemmas(n: int, N: Optional[int] = None, sweep: str = "all",
                    samples: int = DEFAULT_SAMPLES) -> VerifyReport:
    """As verify_k_lemmas; the rack shape is checked on tilde (D_2n+1)."""
    report = VerifyReport("n-lemmas", details={"n": n, "N": N, "sweep": sweep})
    sweep_params = parameter_sweep(all_n_params, n, N, sweep, samples)
    _log(f"n-lemmas: n = {n}, {len(sweep_params)} parameter tuples")
    for params in sweep_params:
        _check_lemmas(report, params, n_braiding, n_twist, n_closed_form, n_rack_shape, "tilde")
    _log(f"n-lemmas: {report.cases - report.failures}/{report.cases} passed")
    return report


def _verify_rack(target: str, family: FamilySolution, n: int) -> VerifyReport:
    report = VerifyReport(target, details={
        "n": n,
        "modulus": family.modulus,
        "f": [v + 1 for v in family.f],
    })
    failures = family.congruence_failures()
    report.cases = family.solution.size ** 2
    for pair in failures:
        report.fail({"pair": list(pair), "check": "g = 2a - b and second output a"})
    if not failures and not family.is_dihedral():
        report.fail({"check": f"relabelled solution equals D_{family.modulus}"})
    _log(f"{target}: n = {n}, D_{family.modulus}, {report.failures} failures")
    return report


def verify_l_rack(n: int) -> VerifyReport:
    return _verify_rack("l-rack", l_family(n), n)


def verify_i_rack(n: int) -> VerifyReport:
    return _verify_rack("i-rack", i_family(n), n)


def verify_braid(c: MonomialBraiding, target: str = "braid") -> VerifyReport:
    """Braid equation on every basis triple; the first failing (i, j, k) is reported 1-based."""
    report = VerifyReport(target, cases=c.dim ** 3)
    triple = braid_violation(c)
    if triple is not None:
        report.fail({"triple": [t + 1 for t in triple]})
    return report


def verify_cocycle(c: MonomialBraiding) -> VerifyReport:
    """The coefficient condition on top of the set-theoretic braid equation."""
    report = verify_braid(c, "cocycle")
    if not cocycle_check(c.solution, c.R):
        report.fail({"check": "coefficient cocycle condition"})
    return report


def family_braidings(tag: str, n: int, N: Optional[int] = None, sweep: str = "sample",
                     samples: int = DEFAULT_SAMPLES) -> list[tuple[dict, MonomialBraiding]]:
    """(params, braiding) pairs for the K or N family over a sweep."""
    if tag == "K":
        params = parameter_sweep(all_k_params, n, N, sweep, samples)
        return [(p.as_dict(), k_braiding(p)) for p in params]
    if tag == "N":
        params = parameter_sweep(all_n_params, n, N, sweep, samples)
        return [(p.as_dict(), n_braiding(p)) for p in params]
    raise ParameterError(f"family sweeps cover K and N, got {tag!r}")


def verify_family_cocycles(tag: str, n: int, N: Optional[int] = None, sweep: str = "sample",
                           samples: int = DEFAULT_SAMPLES) -> VerifyReport:
    report = VerifyReport("cocycle", details={"family": tag, "n": n, "N": N, "sweep": sweep})
    for params, c in family_braidings(tag, n, N, sweep, samples):
        single = verify_cocycle(c)
        report.cases += 1
        if not single.passed:
            report.fail({"params": params, **single.first_counterexample})
    _log(f"cocycle: {tag} n = {n}, {report.cases - report.failures}/{report.cases} passed")
    return report
