"""Inequality verifiers, closed-form evaluators, and conjecture scanners.

Each check produces a BiasReport describing, per weight n, the difference
between two hook-count sequences, split into outright violations, confirmed
expected exceptions, and below-threshold observations that the claim does not
cover.  A report passes exactly when no violation was found; missing or
wrong-valued expected exceptions count as violations.
"""

import json
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .genfun import (
    gf_hook_gap,
    gf_regular2_gap,
    gf_regular3_gap,
    gf_regular_hooks,
)
from .partitions import (
    TWO_REGULAR_ENUMERATION_GUARD,
    OracleGuardError,
    hook_length_census,
)

__all__ = [
    "Finding",
    "BiasReport",
    "verify_ordinary_bias",
    "verify_2regular_12",
    "verify_2regular_23",
    "diagonal_values_2regular",
    "diagonal_values_regular",
    "scan_conjecture_2regular",
    "scan_conjecture_3regular",
]


@dataclass(frozen=True)
class Finding:
    """One recorded data point: the difference value at weight n (and k)."""

    n: int
    value: int
    k: Optional[int] = None

    def to_dict(self) -> dict:
        return {"n": self.n, "value": self.value, "k": self.k}

    @classmethod
    def from_dict(cls, d: Mapping) -> "Finding":
        return cls(n=int(d["n"]), value=int(d["value"]),
                   k=None if d.get("k") is None else int(d["k"]))


@dataclass(frozen=True)
class BiasReport:
    """Outcome of one verification or scan.

    differences maps a label ("k=3" for parametrized checks, "diff"
    otherwise) to the per-n difference sequence starting at n = 0.  The
    verdict is "pass" iff violations is empty; every expected exception that
    is absent or has the wrong value is recorded as a violation by the check
    that builds the report.
    """

    check_id: str
    params: Mapping[str, int]
    differences: Mapping[str, tuple[int, ...]]
    violations: tuple[Finding, ...] = ()
    exceptions_confirmed: tuple[Finding, ...] = ()
    observations: tuple[Finding, ...] = ()
    verdict: str = field(default="pass")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": dict(self.params),
            "verdict": self.verdict,
            "differences": {label: list(seq) for label, seq in self.differences.items()},
            "violations": [f.to_dict() for f in self.violations],
            "exceptions_confirmed": [f.to_dict() for f in self.exceptions_confirmed],
            "observations": [f.to_dict() for f in self.observations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: Mapping) -> "BiasReport":
        return cls(
            check_id=d["check_id"],
            params={k: int(v) for k, v in d["params"].items()},
            differences={
                label: tuple(int(c) for c in seq)
                for label, seq in d["differences"].items()
            },
            violations=tuple(Finding.from_dict(f) for f in d["violations"]),
            exceptions_confirmed=tuple(
                Finding.from_dict(f) for f in d["exceptions_confirmed"]
            ),
            observations=tuple(Finding.from_dict(f) for f in d["observations"]),
            verdict=d["verdict"],
        )

    @classmethod
    def from_json(cls, text: str) -> "BiasReport":
        return cls.from_dict(json.loads(text))


def _finish(check_id, params, differences, violations, exceptions, observations):
    return BiasReport(
        check_id=check_id,
        params=params,
        differences=differences,
        violations=tuple(violations),
        exceptions_confirmed=tuple(exceptions),
        observations=tuple(observations),
        verdict="pass" if not violations else "fail",
    )


def verify_ordinary_bias(k_max: int, n_max: int) -> BiasReport:
    """Check that k-hooks outnumber (k+1)-hooks in all partitions of n.

    For each 1 <= k <= k_max the difference sequence must be non-negative at
    every n <= n_max, except that for k >= 2 the single weight n = k + 1 must
    give exactly -1.
    """
    if k_max < 1 or n_max < 0:
        raise ValueError("need k_max >= 1 and n_max >= 0")
    differences: dict[str, tuple[int, ...]] = {}
    violations: list[Finding] = []
    exceptions: list[Finding] = []
    for k in range(1, k_max + 1):
        diff = gf_hook_gap(k, n_max)
        differences[f"k={k}"] = diff.coeffs
        for n, d in enumerate(diff.coeffs):
            if k >= 2 and n == k + 1:
                if d == -1:
                    exceptions.append(Finding(n=n, value=d, k=k))
                else:
                    violations.append(Finding(n=n, value=d, k=k))
            elif d < 0:
                violations.append(Finding(n=n, value=d, k=k))
    return _finish(
        "thm-1.1",
        {"kmax": k_max, "nmax": n_max},
        differences,
        violations,
        exceptions,
        [],
    )


def verify_2regular_12(n_max: int) -> BiasReport:
    """Check that 2-hooks outnumber 1-hooks in odd-part partitions for n > 4.

    Weights n <= 4 sit outside the claim; their differences are recorded as
    observations, not violations.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    diff = gf_regular_hooks(2, 2, n_max) - gf_regular_hooks(2, 1, n_max)
    violations: list[Finding] = []
    observations: list[Finding] = []
    for n, d in enumerate(diff.coeffs):
        if n <= 4:
            observations.append(Finding(n=n, value=d))
        elif d < 0:
            violations.append(Finding(n=n, value=d))
    return _finish(
        "thm-1.4",
        {"nmax": n_max},
        {"diff": diff.coeffs},
        violations,
        [],
        observations,
    )


def verify_2regular_23(n_max: int) -> BiasReport:
    """Check that 2-hooks outnumber 3-hooks in odd-part partitions for every n."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    diff = gf_regular2_gap(n_max)
    violations = [
        Finding(n=n, value=d) for n, d in enumerate(diff.coeffs) if d < 0
    ]
    return _finish(
        "thm-1.5",
        {"nmax": n_max},
        {"diff": diff.coeffs},
        violations,
        [],
        [],
    )


def diagonal_values_2regular(k: int) -> tuple[int, int, int]:
    """Closed forms for 2-regular k-hook counts at the edge weights.

    Returns (count at n = k, count at n = k + 1, and the difference between
    the k-hook and (k+1)-hook counts at n = k + 1).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k % 2:
        return (k + 1) // 2, 1, -((k - 1) // 2)
    return k // 2, 2, -((k - 2) // 2)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def diagonal_values_regular(t: int, k: int) -> tuple[int, int]:
    """Closed forms for t-regular k-hook counts at n = k and n = k + 1, t >= 3.

    The n = k count is ((t-1)k + r)/t with r = k mod t for every k; the
    n = k + 1 count follows a three-way residue split for k >= 4, with the
    small cases k <= 3 pinned to their known exact values.
    """
    if not isinstance(t, int) or t < 3:
        raise ValueError("t must be an integer >= 3 (use diagonal_values_2regular for t=2)")
    if k < 1:
        raise ValueError("k must be a positive integer")
    r = k % t
    at_k = _exact_div((t - 1) * k + r, t)
    if k == 1:
        at_next = 2
    elif k == 2:
        at_next = 1 if t == 3 else 2
    elif k == 3:
        # pinned small-case values; the t = 3 cell is 3, not 2: the four
        # 3-regular partitions of weight 4 carry exactly three 3-hooks
        at_next = 2 if t == 4 else 3
    elif r == 0:
        at_next = _exact_div((t - 1) * k + t, t)
    elif r <= t - 2:
        at_next = _exact_div((t - 1) * k + r, t)
    else:
        at_next = _exact_div((t - 1) * k - 1, t)
    return at_k, at_next


def scan_conjecture_2regular(k_max: int, n_max: int = 80) -> BiasReport:
    """Exhaustive oracle scan: 2-regular k-hooks vs (k+1)-hooks for k >= 3.

    The claim asserts non-negative differences at every n except n = k + 1;
    there the difference must equal the closed-form edge value, and a match
    is recorded as a confirmed exception.  Runs on the enumeration oracle
    alone, so n_max is capped by the 2-regular guard.
    """
    if k_max < 3:
        raise ValueError("the scan starts at k = 3")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if n_max > TWO_REGULAR_ENUMERATION_GUARD:
        raise OracleGuardError(
            f"n_max={n_max} exceeds the 2-regular enumeration guard "
            f"{TWO_REGULAR_ENUMERATION_GUARD}"
        )
    per_k: dict[int, list[int]] = {k: [] for k in range(3, k_max + 1)}
    violations: list[Finding] = []
    exceptions: list[Finding] = []
    for n in range(n_max + 1):
        _, counts = hook_length_census(n, t=2)
        for k in range(3, k_max + 1):
            d = counts.get(k, 0) - counts.get(k + 1, 0)
            per_k[k].append(d)
            if n == k + 1:
                expected = diagonal_values_2regular(k)[2]
                if d == expected:
                    exceptions.append(Finding(n=n, value=d, k=k))
                else:
                    violations.append(Finding(n=n, value=d, k=k))
            elif d < 0:
                violations.append(Finding(n=n, value=d, k=k))
    differences = {f"k={k}": tuple(seq) for k, seq in per_k.items()}
    return _finish(
        "conj-1",
        {"kmax": k_max, "nmax": n_max},
        differences,
        violations,
        exceptions,
        [],
    )


# Reference expansion of the 3-regular gap series (2-hook count minus 1-hook
# count) through q^70.  Every entry has been verified by exhaustive
# enumeration of 3-regular partitions; the test suite repeats that
# cross-check.  Exponents missing from the map have coefficient zero.
_REFERENCE_3REGULAR_GAP: dict[int, int] = {
    1: -1, 3: -2, 5: -3, 6: -1, 7: -4, 8: -2, 9: -6, 10: -3, 11: -9,
    12: -4, 13: -12, 14: -6, 15: -15, 16: -8, 17: -19, 18: -9, 19: -22,
    20: -9, 21: -24, 22: -7, 23: -23, 25: -17, 26: 14, 27: -2, 28: 40,
    29: 27, 30: 84, 31: 77, 32: 156, 33: 159, 34: 267, 35: 289, 36: 435,
    37: 486, 38: 685, 39: 778, 40: 1049, 41: 1202, 42: 1570, 43: 1809,
    44: 2307, 45: 2665, 46: 3335, 47: 3859, 48: 4756, 49: 5504, 50: 6701,
    51: 7750, 52: 9341, 53: 10791, 54: 12895, 55: 14877, 56: 17646,
    57: 20326, 58: 23956, 59: 27547, 60: 32286, 61: 37057, 62: 43218,
    63: 49514, 64: 57491, 65: 65743, 66: 76031, 67: 86785, 68: 100004,
    69: 113940, 70: 130864,
}
_REFERENCE_RANGE = 70
_CONJ_3REGULAR_THRESHOLD = 28


def scan_conjecture_3regular(n_max: int) -> BiasReport:
    """Scan the 3-regular gap series: 2-hook minus 1-hook counts.

    The coefficients must be non-negative from n = 28 on.  Below 28 the
    negative values are expected; they are recorded as observations.  Every
    coefficient with n <= 70 is additionally validated against the frozen,
    enumeration-verified reference expansion, and any mismatch is a
    violation.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    diff = gf_regular3_gap(n_max)
    violations: list[Finding] = []
    observations: list[Finding] = []
    for n, d in enumerate(diff.coeffs):
        if n <= _REFERENCE_RANGE and d != _REFERENCE_3REGULAR_GAP.get(n, 0):
            violations.append(Finding(n=n, value=d))
            continue
        if n >= _CONJ_3REGULAR_THRESHOLD:
            if d < 0:
                violations.append(Finding(n=n, value=d))
        elif d < 0:
            observations.append(Finding(n=n, value=d))
    return _finish(
        "conj-2",
        {"nmax": n_max},
        {"diff": diff.coeffs},
        violations,
        [],
        observations,
    )
