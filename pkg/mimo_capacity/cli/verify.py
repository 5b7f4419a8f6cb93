"""Self-verification suites.

Each check compares a closed form with an independent oracle (quadrature,
perturbation limits, Monte Carlo with fixed seeds, structural relations of
the network figures) and records the measured error next to its limit. The
report text depends only on ``(depth, seed, mc_samples, config)``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from mimo_capacity.capacity.closed_form import capacity_su, jensen_upper_bound
from mimo_capacity.capacity.identity import det_integral_identity
from mimo_capacity.capacity.links import receive_side, transmit_side
from mimo_capacity.capacity.montecarlo import monte_carlo_jensen, monte_carlo_su
from mimo_capacity.capacity.multiuser import capacity_gaussian_approx, capacity_mu
from mimo_capacity.capacity.sweep import symmetric_network_ordered
from mimo_capacity.cli.figures import (
    FIG2_DELTAS,
    FIG4_INTERFERER_ANTENNAS,
    FIG5_DESIRED_ANTENNAS,
    fig2_link,
    fig3_link,
    fig4_scenario,
    fig5_scenario,
    floor_capacity_bits,
)
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.covariance.spec import CovarianceSpec, from_groups
from mimo_capacity.eigpdf.density import EigenPdf, distinct_joint_pdf, joint_pdf
from mimo_capacity.eigpdf.normalization import normalization_check, ordered_domain_integral
from mimo_capacity.hypfun.argument import EigenArgument
from mimo_capacity.hypfun.functions import hyp0F0, hyp1F0, hyp_pFq
from mimo_capacity.specfun.gamma import scaled_gamma_quadrature, scaled_upper_incomplete_gamma
from mimo_capacity.specfun.moments import log_moment_integral, log_moment_quadrature

logger = logging.getLogger(__name__)

Depth = Literal["quick", "full"]
DEPTHS: tuple[Depth, ...] = ("quick", "full")

DEFAULT_MC_SAMPLES: dict[str, int] = {"quick": 100_000, "full": 1_000_000}

# (n, p, groups) covering n, p in {1, 2, 3, 4, 6} with distinct, equal and mixed patterns.
CAPACITY_GRID: tuple[tuple[int, int, tuple[tuple[float, int], ...]], ...] = (
    (1, 1, ((1.0, 1),)),
    (2, 2, ((1.0, 2),)),
    (2, 3, ((2.0, 1), (0.5, 1))),
    (3, 2, ((1.0, 2), (0.5, 1))),
    (2, 4, ((1.5, 2),)),
    (4, 2, ((2.0, 2), (0.5, 2))),
    (3, 3, ((3.0, 1), (1.0, 1), (0.3, 1))),
    (4, 4, ((5.0, 1), (1.0, 3))),
    (4, 6, ((5.0, 1), (1.0, 3))),
    (6, 3, ((2.5, 3), (0.8, 3))),
    (6, 4, ((4.0, 2), (1.0, 2), (0.25, 2))),
    (6, 6, ((10.0 / 6.0, 6),)),
)

NORMALIZATION_CASES: tuple[tuple[int, tuple[tuple[float, int], ...]], ...] = (
    (1, ((1.0, 1),)),
    (2, ((1.0, 1), (0.5, 1))),
    (2, ((1.0, 2), (0.5, 1))),
    (1, ((2.0, 2),)),
    (3, ((1.0, 3),)),
    (3, ((1.0, 2), (0.5, 2))),
)


@dataclass(frozen=True, slots=True)
class CheckOutcome:
    """One line of the report.

    Attributes:
        suite: Module the check exercises
        name: What was compared
        measured: Observed error or margin
        limit: Largest acceptable ``measured``
        passed: Whether ``measured <= limit``
        detail: Extra context (failure reason, values)
    """

    suite: str
    name: str
    measured: float
    limit: float
    passed: bool
    detail: str = ""

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite}/{self.name}: measured={self.measured:.3e} limit={self.limit:.3e}"
        return f"{line} {self.detail}" if self.detail else line


@dataclass(frozen=True, slots=True)
class VerifyReport:
    depth: Depth
    seed: int
    mc_samples: int
    checks: tuple[CheckOutcome, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckOutcome]:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        lines = [f"verify depth={self.depth} seed={self.seed} mc_samples={self.mc_samples}"]
        lines.extend(c.render() for c in self.checks)
        failed = len(self.failures)
        lines.append(f"summary: {len(self.checks) - failed} passed, {failed} failed")
        return "\n".join(lines) + "\n"


def _outcome(suite: str, name: str, measured: float, limit: float, detail: str = "") -> CheckOutcome:
    passed = math.isfinite(measured) and measured <= limit
    return CheckOutcome(suite, name, measured, limit, passed, detail)


def _rel(value: float, reference: float) -> float:
    return abs(value - reference) / max(abs(reference), 1e-300)


@dataclass(frozen=True, slots=True)
class _Context:
    depth: Depth
    seed: int
    mc_samples: int
    config: NumericsConfig

    @property
    def full(self) -> bool:
        return self.depth == "full"


Check = Callable[[_Context], Iterator[CheckOutcome]]


def _specfun(ctx: _Context) -> Iterator[CheckOutcome]:
    orders = np.arange(-10.0, 1.01, 0.25) if ctx.full else np.array([-3.5, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0])
    worst = 0.0
    for a in orders:
        for x in (0.01, 0.1, 1.0, 10.0):
            value = scaled_upper_incomplete_gamma(float(a), x, ctx.config)
            worst = max(worst, _rel(value, scaled_gamma_quadrature(float(a), x, ctx.config)))
    yield _outcome("specfun", f"incomplete gamma vs quadrature ({len(orders)} orders)", worst, 1e-8)

    powers = range(11) if ctx.full else (0, 1, 2, 4)
    rates = (0.05, 0.2, 1.0, 5.0, 50.0) if ctx.full else (0.05, 1.0, 50.0)
    worst = max(
        _rel(log_moment_integral(m, mu, ctx.config), log_moment_quadrature(m, mu, ctx.config))
        for m in powers
        for mu in rates
    )
    yield _outcome("specfun", "log moment vs quadrature", worst, 1e-9)


def _richardson(f: Callable[[float], float], eps: tuple[float, float] = (1e-2, 1e-3)) -> float:
    """Limit at 0 of an even function of ``eps`` from two evaluations."""
    e1, e2 = eps
    return (e1**2 * f(e2) - e2**2 * f(e1)) / (e1**2 - e2**2)


def _perturbed(w0: float, mult: int, rest: Sequence[float], eps: float) -> EigenArgument:
    if mult == 2:
        values = [w0 * (1 + eps), w0 * (1 - eps)]
    else:
        values = [w0 * (1 + eps), w0, w0 * (1 - eps)]
    return EigenArgument.distinct([*values, *rest])


def _hypfun(ctx: _Context) -> Iterator[CheckOutcome]:
    rng = np.random.default_rng(ctx.seed)
    count = 20 if ctx.full else 5
    evaluators: dict[str, Callable[[EigenArgument, EigenArgument], float]] = {
        "0F0": lambda lam, w: hyp0F0(lam, w, ctx.config).to_float(),
        "1F0": lambda lam, w: hyp1F0(2.5, lam, w, ctx.config).to_float(),
        "1F1": lambda lam, w: hyp_pFq([2.5], [3.7], lam, w, ctx.config).to_float(),
    }
    for label, evaluate in evaluators.items():
        for mult in (2, 3):
            worst = 0.0
            for _ in range(count):
                lam = EigenArgument.distinct(sorted(rng.uniform(0.2, 1.5, size=3).tolist(), reverse=True))
                w0 = float(rng.uniform(0.05, 0.45))
                rest = [] if mult == 3 else [float(rng.uniform(0.05, 0.45))]
                if rest and abs(rest[0] - w0) < 0.05:
                    rest = [w0 + 0.1]
                confluent = EigenArgument(((w0, mult), *((v, 1) for v in rest)))
                exact = evaluate(lam, confluent)
                limit = _richardson(lambda e, l=lam, a=w0, m=mult, r=rest: evaluate(l, _perturbed(a, m, r, e)))
                worst = max(worst, _rel(exact, limit))
            yield _outcome("hypfun", f"{label} multiplicity {mult} vs distinct limit", worst, 1e-6)

    lam = EigenArgument.distinct([1.2, 0.7, 0.3])
    w = EigenArgument(((0.4, 3),))
    yield _outcome(
        "hypfun",
        "0F0 at scalar W equals exp(w tr Lambda)",
        _rel(hyp0F0(lam, w, ctx.config).to_float(), math.exp(0.4 * 2.2)),
        1e-10,
    )
    yield _outcome(
        "hypfun",
        "1F0 at scalar W equals det(I - w Lambda)^-r",
        _rel(hyp1F0(2.5, lam, w, ctx.config).to_float(), (0.52 * 0.72 * 0.88) ** -2.5),
        1e-10,
    )


def _eigpdf(ctx: _Context) -> Iterator[CheckOutcome]:
    cases = NORMALIZATION_CASES if ctx.full else NORMALIZATION_CASES[:3]
    for p, groups in cases:
        pdf = EigenPdf.build(from_groups(groups), p)
        total = normalization_check(pdf)
        yield _outcome("eigpdf", f"normalization n={pdf.n} p={p} groups={groups}", abs(total - 1.0), 1e-4)

    rng = np.random.default_rng(ctx.seed + 1)
    wishart = EigenPdf.build(CovarianceSpec.scaled_identity(1.0, 2), 2)
    worst = 0.0
    for _ in range(10):
        x1, x2 = sorted(rng.uniform(0.05, 6.0, size=2).tolist(), reverse=True)
        worst = max(worst, _rel(joint_pdf(wishart, [x1, x2]), (x1 - x2) ** 2 * math.exp(-x1 - x2)))
    yield _outcome("eigpdf", "n=p=2 identity matches (x1-x2)^2 exp(-x1-x2)", worst, 1e-10)

    spec = from_groups([(2.0, 1), (1.0, 1), (0.4, 1)])
    distinct = EigenPdf.build(spec, 4)
    worst = 0.0
    for _ in range(10):
        x = sorted(rng.uniform(0.05, 8.0, size=3).tolist(), reverse=True)
        worst = max(worst, _rel(joint_pdf(distinct, x), distinct_joint_pdf(spec, 4, x)))
    yield _outcome("eigpdf", "distinct-eigenvalue reduction n=3 p=4", worst, 1e-10)


def _capacity(ctx: _Context) -> Iterator[CheckOutcome]:
    grid = CAPACITY_GRID if ctx.full else tuple(c for c in CAPACITY_GRID if min(c[0], c[1]) <= 2)
    for index, (n, p, groups) in enumerate(grid):
        spec = from_groups(groups)
        closed = capacity_su(spec, p, ctx.config).value_nats
        estimate = monte_carlo_su(spec, p, ctx.mc_samples, ctx.seed + index, ctx.config)
        yield _outcome(
            "capacity",
            f"closed form vs Monte Carlo n={n} p={p} groups={groups}",
            estimate.deviation(closed),
            3.0,
            f"closed={closed:.8f} mc={estimate.mean:.8f}",
        )

    spec = from_groups([(2.0, 2), (0.5, 2)])
    estimate = monte_carlo_jensen(spec, 3, ctx.mc_samples, ctx.seed, ctx.config)
    exact = jensen_upper_bound(spec, 3).value_nats
    yield _outcome("capacity", "Jensen bound from E[H Phi H^H] = tr(Phi) I", _rel(estimate.mean, exact), 1e-2)

    one = lambda x: 1.0  # noqa: E731
    exact = det_integral_identity([one], [one], lambda x: math.exp(-x), one, config=ctx.config)
    yield _outcome("capacity", "identity p=n=1 exponential weight", abs(exact - 1.0), 1e-10)
    for n, limit in ((2, 1e-6), (3, 1e-4)):
        value, reference = _identity_pair(n, ctx.config)
        yield _outcome("capacity", f"identity p=2 n={n} vs nested quadrature", _rel(value, reference), limit)


def _identity_pair(n: int, config: NumericsConfig) -> tuple[float, float]:
    rates = (1.0, 2.0, 3.0)[:n]
    constants = np.array([[1.0], [0.5], [2.0]])[:n, : n - 2]
    phi = [lambda x: 1.0, lambda x: x]
    psi = [lambda x, r=r: math.exp(-r * x) for r in rates]
    xi = lambda x: math.exp(-0.5 * x)  # noqa: E731
    xi_tilde = math.log1p
    value = det_integral_identity(
        phi, psi, xi, xi_tilde, psi_constants=constants if n > 2 else None, config=config
    )

    def integrand(x: Sequence[float]) -> float:
        big_phi = np.array([[f(v) for v in x] for f in phi])
        big_psi = np.hstack([np.array([[g(v) for v in x] for g in psi]), constants])
        weight = xi(x[0]) * xi(x[1]) * (xi_tilde(x[0]) + xi_tilde(x[1]))
        return float(np.linalg.det(big_phi) * np.linalg.det(big_psi) * weight)

    reference, _ = ordered_domain_integral(integrand, 2, epsrel=1e-10)
    return value, reference


def _network(ctx: _Context) -> Iterator[CheckOutcome]:
    cfg = ctx.config
    single = floor_capacity_bits(6, 6, cfg)
    antennas = FIG4_INTERFERER_ANTENNAS if ctx.full else (1, 2, 6)
    for nt1 in antennas:
        high = capacity_mu(fig4_scenario(nt1).with_sir_db(40.0), cfg).value_bits
        yield _outcome("network", f"fig4 NT1={nt1} SIR=+40 dB vs single-user MIMO-(6,6)", abs(high - single), 0.05)
        low = capacity_mu(fig4_scenario(nt1).with_sir_db(-40.0), cfg).value_bits
        if nt1 < 6:
            floor = floor_capacity_bits(6, 6 - nt1, cfg)
            yield _outcome("network", f"fig4 NT1={nt1} SIR=-40 dB vs MIMO-(6,{6 - nt1}) floor", abs(low - floor), 0.05)
        else:
            yield _outcome("network", f"fig4 NT1={nt1} SIR=-40 dB vanishes", low, 0.05)

    margins = []
    for sir_db in (-20.0, 0.0, 20.0) if not ctx.full else (-40.0, -20.0, -10.0, 0.0, 10.0, 20.0, 40.0):
        scenario = fig4_scenario(2).with_sir_db(sir_db)
        margins.append(capacity_mu(scenario, cfg).value_nats - capacity_gaussian_approx(scenario, cfg).value_nats)
    yield _outcome("network", "Gaussian approximation below exact (-min margin)", -min(margins), 0.0)

    for snr_db in (0.0, 10.0, 20.0) if ctx.full else (10.0,):
        values = [fig2_link(snr_db, d, cfg).capacity(cfg).value_nats for d in FIG2_DELTAS]
        steps = [a - b for a, b in zip(values, values[1:], strict=False)]
        yield _outcome("network", f"fig2 decreasing in delta at SNR={snr_db:g} dB (-min step)", -min(steps), 0.0)
        equal = transmit_side([1.0] * 3, [10 ** (snr_db / 10) / 3] * 3, 3, config=cfg).capacity(cfg).value_nats
        yield _outcome("network", f"fig2 delta=1 equals 3 equal-power antennas at SNR={snr_db:g} dB", _rel(values[-1], equal), 1e-8)

    gaps = []
    for snr_db in np.arange(0.0, 30.1, 2.0) if ctx.full else (0.0, 10.0, 20.0, 30.0):
        link = fig3_link(float(snr_db), cfg)
        gaps.append(link.relay_bound(cfg).value_nats - link.jensen_bound().value_nats)
    yield _outcome("network", "fig3 exact relay bound below Jensen (max excess)", max(gaps), 0.0)

    tx = transmit_side([1.0] * 3, [4.0 / 3] * 3, 5, config=cfg).capacity(cfg).value_nats
    rx = receive_side([1.0] * 5, 3, 4.0, config=cfg).capacity(cfg).value_nats
    yield _outcome("network", "duality of transmit- and receive-side cases MIMO-(3,5)", _rel(tx, rx), 1e-10)

    sizes = (1, 2, 3, 4) if ctx.full else (1, 2, 3)
    for snr_db in (0.0, 20.0) if ctx.full else (10.0,):
        for sir_db in (-20.0, 0.0, 20.0) if ctx.full else (-10.0, 10.0):
            ordered, values = symmetric_network_ordered(sizes, 1, snr_db, sir_db, cfg)
            yield CheckOutcome(
                "network",
                f"symmetric MIMO-(n,n) grows with n at SNR={snr_db:g} SIR={sir_db:g} dB",
                0.0 if ordered else 1.0,
                0.0,
                ordered,
                "bits=" + ",".join(f"{v:.4f}" for v in values),
            )

    for sir_db, best in ((-20.0, min(FIG5_DESIRED_ANTENNAS)), (30.0, max(FIG5_DESIRED_ANTENNAS))):
        values = {nt0: capacity_mu(fig5_scenario(nt0, 1).with_sir_db(sir_db), cfg).value_bits for nt0 in FIG5_DESIRED_ANTENNAS}
        winner = max(values, key=values.__getitem__)
        yield CheckOutcome(
            "network",
            f"fig5 best NT0 at SIR={sir_db:g} dB is {best}",
            0.0 if winner == best else 1.0,
            0.0,
            winner == best,
            f"winner={winner}",
        )


SUITES: tuple[tuple[str, Check], ...] = (
    ("specfun", _specfun),
    ("hypfun", _hypfun),
    ("eigpdf", _eigpdf),
    ("capacity", _capacity),
    ("network", _network),
)


def run_verify(
    depth: Depth = "quick",
    seed: int = 0,
    mc_samples: int | None = None,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> VerifyReport:
    """Run every suite at ``depth``; a crashing suite becomes one failed line.

    Args:
        depth: ``quick`` (nmin <= 2 cases) or ``full`` (whole Monte Carlo grid)
        seed: Base seed of every Monte Carlo and randomized check
        mc_samples: Monte Carlo sample count (default by depth)
        config: Numerical tolerances
    """
    if depth not in DEPTHS:
        raise ValueError(f"unknown depth {depth!r}; expected one of {DEPTHS}")
    samples = mc_samples or DEFAULT_MC_SAMPLES[depth]
    ctx = _Context(depth, seed, samples, config)
    checks: list[CheckOutcome] = []
    for name, suite in SUITES:
        try:
            checks.extend(suite(ctx))
        except Exception as exc:  # noqa: BLE001 - reported as a failed check
            logger.error("verify suite %s crashed: %s", name, exc)
            checks.append(CheckOutcome(name, "suite crashed", math.inf, 0.0, False, f"{type(exc).__name__}: {exc}"))
    return VerifyReport(depth, seed, samples, tuple(checks))


__all__ = [
    "Depth",
    "DEPTHS",
    "DEFAULT_MC_SAMPLES",
    "CAPACITY_GRID",
    "NORMALIZATION_CASES",
    "CheckOutcome",
    "VerifyReport",
    "run_verify",
]
