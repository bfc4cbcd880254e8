"""Aggregated theory numbers for one degree law."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .. import __version__ as _version
from ..degseq import DegreeDistribution
from ..errors import SubcriticalError
from .bounds import bound_er, bound_m, bound_regular, signed_length_integral
from .fixedpoint import alpha_c, xi
from .pgf import GenFn


@dataclass
class TheoryReport:
    distribution: str
    rho: float
    xi: float
    alpha_c: float
    L: float
    L_signed: float
    L_m: dict[int, float] = field(default_factory=dict)
    closed_form: dict[str, float] = field(default_factory=dict)
    tolerances: dict[str, float] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "version": _version,
            "distribution": self.distribution,
            "rho": self.rho,
            "xi": self.xi,
            "alpha_c": self.alpha_c,
            "L": self.L,
            "L_signed_raw": self.L_signed,
            "L_m": {str(m): v for m, v in sorted(self.L_m.items())},
            "closed_form": dict(sorted(self.closed_form.items())),
            "tolerances": dict(sorted(self.tolerances.items())),
            "sign_convention": "alpha decreases along the rho parametrization; "
                               "L reports the positive length |L_signed_raw|",
        }

    def dump(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=1)


def build_theory_report(dist: DegreeDistribution, m_values=(2,),
                        tolerances: dict | None = None) -> TheoryReport:
    """Compute every fixed point and bound for `dist`; raises SubcriticalError
    when there is no giant component."""
    f = GenFn.from_distribution(dist)
    f.require_supercritical()
    rho = f.survival_root()
    signed = signed_length_integral(f, 1)
    report = TheoryReport(
        distribution=dist.label(),
        rho=rho,
        xi=xi(f, rho),
        alpha_c=alpha_c(f),
        L=abs(signed),
        L_signed=signed,
        tolerances=dict(tolerances or {}),
    )
    report.L_m[1] = report.L
    for m in m_values:
        if m != 1:
            report.L_m[int(m)] = bound_m(f, int(m))
    if dist.kind == "regular" and dist.param and dist.param >= 3:
        report.closed_form["regular"] = bound_regular(int(dist.param))
    if dist.kind == "poisson" and dist.param and dist.param > 1:
        try:
            report.closed_form["erdos_renyi"] = bound_er(float(dist.param))
        except SubcriticalError:
            pass
    return report
