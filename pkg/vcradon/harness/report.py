r"""
Bound checks on a single concept class.

Every class satisfies Assouad's bounds :math:`\lfloor \log vc \rfloor \leq vc^\star \leq 2^{vc+1} - 1`,
Pajor's inequality, :math:`vc^\star \leq r` and :math:`\lfloor \log(2 vc + 2) \rfloor \leq r`.
Extremal classes also satisfy :math:`vc^\star \leq 2 vc + 1`, :math:`r \leq 2 vc + 1` and
:math:`r \leq 2^{vc^\star + 2} - 1`, and maximum classes other than the full cube satisfy :math:`vc + 1 \leq r`.
A failed check is a refutation of a proven statement, hence a bug, and is logged loudly.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from vcradon.classes import (
    ConceptClass,
    dual_shattered_witness,
    is_extremal,
    is_maximum,
    shattered_sets,
    vc,
    vc_star,
)
from vcradon.classes.util import floor_log2, to_string
from vcradon.convex import radon_number
from vcradon.cubes import strongly_shattered_sets
from vcradon.errors import EmptyClassError

logger = logging.getLogger(__name__)


class CheckResult(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NA = "n/a"
    INDETERMINATE = "indeterminate"

    def __str__(self):
        return self.value


CHECKS = (
    "assouad_lower",
    "assouad_upper",
    "thm_b_upper",
    "thm_c_upper",
    "thm_c_log_lower",
    "thm_c_maximum_lower",
    "thm_d_vcstar_le_r",
    "thm_d_extremal_upper",
    "pajor",
    "strong_shattering",
)


def _holds(ok: bool) -> CheckResult:
    return CheckResult.PASS if ok else CheckResult.FAIL


def _upper(r: int, exact: bool, bound: int) -> CheckResult:
    r"""
    r <= bound, where r is only a lower bound on the Radon number when not exact.
    """
    if exact:
        return _holds(r <= bound)
    return CheckResult.FAIL if r > bound else CheckResult.INDETERMINATE


def _lower(r: int, exact: bool, bound: int) -> CheckResult:
    if exact or r >= bound:
        return _holds(r >= bound)
    return CheckResult.INDETERMINATE


@dataclass
class Report:
    r"""
    Metrics and bound checks of one class.

    Attributes:
        source: where the class came from (generator and parameters, file, or enumeration index)
        n: domain size
        size: number of concepts
        vc: VC dimension
        vc_star: dual VC dimension
        radon: Radon number, or a lower bound when radon_exact is False
        radon_exact: whether the Radon search finished below its limit
        extremal: extremal status
        maximum: maximum status
        checks: check name -> CheckResult, every name of CHECKS present
        witness: a Radon-independent set of size radon, as 0/1 strings
        dual_certificate: a vc_star-set of concepts shattered by the dual class, as 0/1 strings
    """

    source: str
    n: int
    size: int
    vc: int
    vc_star: int
    radon: int
    radon_exact: bool
    extremal: bool
    maximum: bool
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    witness: Optional[Tuple[str, ...]] = None
    dual_certificate: Optional[Tuple[str, ...]] = None

    @property
    def refutations(self) -> List[str]:
        return [k for k in CHECKS if self.checks.get(k) == CheckResult.FAIL]

    @property
    def passed(self) -> bool:
        return not self.refutations

    def to_record(self) -> dict:
        r"""
        A JSON-ready dict using the field names above.
        """
        record = asdict(self)
        record["checks"] = {k: str(self.checks[k]) for k in CHECKS}
        for key in ("witness", "dual_certificate"):
            if record[key] is not None:
                record[key] = list(record[key])
        return record

    def format_table(self) -> str:
        radon = str(self.radon) if self.radon_exact else f">= {self.radon}"
        rows = [
            ("source", self.source),
            ("n", self.n),
            ("size", self.size),
            ("vc", self.vc),
            ("vc*", self.vc_star),
            ("r", radon),
            ("extremal", self.extremal),
            ("maximum", self.maximum),
        ]
        if self.witness is not None:
            rows.append(("radon witness", " ".join(self.witness)))
        if self.dual_certificate is not None:
            rows.append(("dual certificate", " ".join(self.dual_certificate)))
        rows.extend((name, str(self.checks[name])) for name in CHECKS)
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows) + "\n"


def default_radon_limit(C: ConceptClass) -> int | None:
    r"""
    For extremal classes the search stops one above the proven bound 2 vc + 1, which is enough to detect
    a violation. Other classes are searched without a limit.
    """
    if is_extremal(C):
        return 2 * vc(C) + 2
    return None


def check_bounds(C: ConceptClass, source: str = "", radon_limit: int | None = None) -> Report:
    r"""
    Compute all metrics of C and evaluate every bound check.

    Args:
        C: nonempty concept class
        source: description stored in the report
        radon_limit: limit for the Radon search, see :func:`default_radon_limit` for the default

    Returns:
        Report
    """
    if C.is_empty:
        raise EmptyClassError("check_bounds")
    d = vc(C)
    ds = vc_star(C)
    ext = is_extremal(C)
    mx = is_maximum(C)
    if radon_limit is None:
        radon_limit = default_radon_limit(C)
    res = radon_number(C, limit=radon_limit)
    r, exact = res.value, res.exact
    shattered = shattered_sets(C)
    strong = strongly_shattered_sets(C)

    checks = {
        "assouad_lower": _holds(floor_log2(d) <= ds),
        "assouad_upper": _holds(ds <= 2 ** (d + 1) - 1),
        "thm_b_upper": _holds(ds <= 2 * d + 1) if ext else CheckResult.NA,
        "thm_c_upper": _upper(r, exact, 2 * d + 1) if ext else CheckResult.NA,
        "thm_c_log_lower": _lower(r, exact, floor_log2(2 * d + 2)),
        "thm_c_maximum_lower": (
            _lower(r, exact, d + 1) if mx and not C.is_full_cube else CheckResult.NA
        ),
        "thm_d_vcstar_le_r": _lower(r, exact, ds),
        "thm_d_extremal_upper": _upper(r, exact, 2 ** (ds + 2) - 1) if ext else CheckResult.NA,
        "pajor": _holds(len(C) <= len(shattered)),
        "strong_shattering": _holds(
            set(strong) <= set(shattered)
            and len(strong) <= len(C)
            and (strong == shattered) == ext
        ),
    }
    report = Report(
        source=source,
        n=C.n,
        size=len(C),
        vc=d,
        vc_star=ds,
        radon=r,
        radon_exact=exact,
        extremal=ext,
        maximum=mx,
        checks=checks,
        witness=tuple(to_string(c, C.n) for c in res.witness.concepts),
        dual_certificate=tuple(to_string(c, C.n) for c in dual_shattered_witness(C)),
    )
    if report.refutations:
        logger.error(
            "refutation of %s on %s: %s", ", ".join(report.refutations), source or repr(C), " ".join(C.to_strings())
        )
    return report
