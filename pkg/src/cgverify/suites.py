"""Named verification suites shared by the CLI and the consolidated report."""

from __future__ import annotations

from dataclasses import dataclass

from . import quantum, rational, trig
from .mutations import MUTATIONS, run_mutation
from .operators import CheckReport, all_pass, box_window, laurent_box
from .rings import PolyC, QSLaurent


@dataclass
class RunConfig:
    """Window sizes and sweep bounds for the verification suites.

    Defaults follow the desk-scale policy: laurent-box(3) for 2-variable
    identities, laurent-box(2) for 3-variable identities, box(4)/box(3)
    for the polynomial-subspace identities, jet order 2, and n-sweeps to 6
    (closed formula) and 8 (nilpotency, proof identities).
    """

    radius2: int = 3
    radius3: int = 2
    box2: int = 4
    box3: int = 3
    jet_order: int = 2
    n_single: int | None = None
    proof_n_max: int = 8
    gg_n_max: int = 8
    closed_n_max: int = 6
    cg_ns: tuple[int, ...] = (2, 3)
    lam_polyc: PolyC | None = None
    lam_qs: QSLaurent | None = None

    def window2(self):
        return laurent_box(self.radius2, 2)

    def window3(self):
        return laurent_box(self.radius3, 3)

    def boxwin2(self):
        return box_window(self.box2, 2)

    def boxwin3(self):
        return box_window(self.box3, 3)


def _suite_daha(cfg: RunConfig) -> list[CheckReport]:
    return quantum.verify_daha_relations(cfg.window2())


def _suite_trig(cfg: RunConfig) -> list[CheckReport]:
    return trig.verify_trig_relations(cfg.window2())


def _suite_rational(cfg: RunConfig) -> list[CheckReport]:
    return rational.verify_rational_relations(cfg.boxwin2())


def _suite_suzuki(cfg: RunConfig) -> list[CheckReport]:
    return rational.verify_suzuki(cfg.window2())


def _suite_twist(cfg: RunConfig) -> list[CheckReport]:
    return quantum.verify_twist(cfg.window2(), cfg.window3())


def _suite_semiclassical(cfg: RunConfig) -> list[CheckReport]:
    return trig.semiclassical_check(cfg.jet_order, cfg.window2())


def _suite_mqybe(cfg: RunConfig) -> list[CheckReport]:
    reports = [quantum.verify_unitarity(cfg.window2())]
    reports.append(
        quantum.mqybe_residual(lam=cfg.lam_qs, window=cfg.window3())
    )
    reports.append(quantum.r13_convention_check(cfg.window3()))
    return reports


def _suite_mcybe(cfg: RunConfig) -> list[CheckReport]:
    return trig.r_properties_suite(cfg.window2(), cfg.window3(), lam=cfg.lam_polyc)


def _suite_flow(cfg: RunConfig) -> list[CheckReport]:
    return rational.jordanian_flow_check(
        cfg.boxwin2(), cfg.boxwin3()
    ) + rational.jordanian_suite(cfg.boxwin2(), cfg.boxwin3())


def _suite_proof_identities(cfg: RunConfig) -> list[CheckReport]:
    ns = [cfg.n_single] if cfg.n_single else range(1, cfg.proof_n_max + 1)
    reports = []
    for n in ns:
        reports.extend(rational.proof_identities_check(n))
    return reports


def _suite_closed_formula(cfg: RunConfig) -> list[CheckReport]:
    return trig.closed_formula_suite(cfg.closed_n_max)


def _suite_cg_structure(cfg: RunConfig) -> list[CheckReport]:
    return trig.cg_structure_suite(cfg.cg_ns)


def _suite_non_nilpotency(cfg: RunConfig) -> list[CheckReport]:
    return trig.non_nilpotency_probe()


def _suite_nilpotency_theorem(cfg: RunConfig) -> list[CheckReport]:
    return rational.verify_gg_theorem(cfg.gg_n_max)


#: Suites reachable through `verify <target>`.
VERIFY_TARGETS = {
    "daha": _suite_daha,
    "trig": _suite_trig,
    "rational": _suite_rational,
    "suzuki": _suite_suzuki,
    "twist": _suite_twist,
    "semiclassical": _suite_semiclassical,
    "mqybe": _suite_mqybe,
    "mcybe": _suite_mcybe,
    "flow": _suite_flow,
    "proof-identities": _suite_proof_identities,
}

#: Additional suites included in the consolidated report.
EXTRA_SUITES = {
    "closed-formula": _suite_closed_formula,
    "cg-structure": _suite_cg_structure,
    "non-nilpotency": _suite_non_nilpotency,
    "nilpotency-theorem": _suite_nilpotency_theorem,
}

ALL_SUITES = {**VERIFY_TARGETS, **EXTRA_SUITES}


def run_verify(target: str, cfg: RunConfig) -> list[CheckReport]:
    return VERIFY_TARGETS[target](cfg)


def run_report_all(cfg: RunConfig, mutate: str | None = None) -> dict:
    """Run every suite; optionally corrupt one suite via a named mutation.

    Returns {"suites": [{"name", "pass", "reports"}...], "pass": bool},
    deterministic given the configuration.
    """
    if mutate is not None and mutate not in MUTATIONS:
        raise ValueError(f"unknown mutation {mutate!r}")
    suites = []
    overall = True
    for name, fn in ALL_SUITES.items():
        if mutate is not None and MUTATIONS[mutate].target == name:
            reports = run_mutation(mutate, size=2)
        else:
            reports = fn(cfg)
        ok = all_pass(reports)
        overall = overall and ok
        suites.append(
            {"name": name, "pass": ok, "reports": [r.to_json() for r in reports]}
        )
    return {"suites": suites, "pass": overall}
