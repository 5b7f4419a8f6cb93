"""Multiuser network scenarios and their interference matrices.

User 0 is the desired link; users 1.. are co-channel interferers seen by the
same ``nr``-antenna receiver. Each user's per-antenna received power and the
noise variance give ``rho_i = P_i / (NT_i * sigma2)``, and the interference
covariances are the direct sums

    Psi       = rho_1 I_{NT_1} (+) ... (+) rho_NI I_{NT_NI}
    Psi_tilde = rho_0 I_{NT_0} (+) Psi
"""

from __future__ import annotations

import hashlib
import math
from collections.abc import Sequence
from dataclasses import dataclass, replace

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.covariance.spec import CovarianceSpec, canonicalize
from mimo_capacity.outcome import Issue, Validation


def db_to_linear(value_db: float) -> float:
    return float(10.0 ** (value_db / 10.0))


def linear_to_db(value: float) -> float:
    if not value > 0:
        raise DomainError(f"dB conversion needs a positive value, got {value}")
    return 10.0 * math.log10(value)


@dataclass(frozen=True, slots=True)
class UserLink:
    """One transmitter as seen by the receiver.

    Attributes:
        nt: Transmit antenna count
        power: Mean received power per receive antenna, P_i, linear scale
    """

    nt: int
    power: float


@dataclass(frozen=True, slots=True)
class NetworkScenario:
    """Desired user plus interferers at a common receiver.

    Attributes:
        nr: Receive antenna count
        users: User 0 is the desired link, the rest interfere
        sigma2: Noise variance

    Raises:
        DomainError: If any count or power is out of range (use
            ``NetworkScenario.validate`` to collect every problem instead)
    """

    nr: int
    users: tuple[UserLink, ...]
    sigma2: float = 1.0

    def __post_init__(self) -> None:
        issues = _scenario_issues(self.nr, self.users, self.sigma2)
        if issues:
            raise DomainError("; ".join(str(i) for i in issues))

    @staticmethod
    def validate(
        nr: int, users: Sequence[tuple[int, float]] | Sequence[UserLink], sigma2: float = 1.0
    ) -> Validation[NetworkScenario]:
        """Build a scenario, reporting every invalid field at once.

        Example:
            >>> NetworkScenario.validate(0, [(2, -1.0)]).unwrap_errors()[0].field
            'nr'
        """
        links = tuple(u if isinstance(u, UserLink) else UserLink(int(u[0]), float(u[1])) for u in users)
        issues = _scenario_issues(nr, links, sigma2)
        if issues:
            return Validation.invalid(issues)
        return Validation.valid(NetworkScenario(nr, links, sigma2))

    @staticmethod
    def single_user(nt: int, nr: int, snr: float) -> NetworkScenario:
        """Interference-free link with ``P_0 / sigma2 = snr``."""
        return NetworkScenario(nr, (UserLink(nt, snr),), 1.0)

    @property
    def desired(self) -> UserLink:
        return self.users[0]

    @property
    def interferers(self) -> tuple[UserLink, ...]:
        return self.users[1:]

    @property
    def rho(self) -> tuple[float, ...]:
        """Per-antenna ``P_i / (NT_i * sigma2)`` for every user."""
        return tuple(u.power / (u.nt * self.sigma2) for u in self.users)

    @property
    def interference_power(self) -> float:
        return math.fsum(u.power for u in self.interferers)

    @property
    def snr(self) -> float:
        return self.desired.power / self.sigma2

    @property
    def sir(self) -> float:
        """``P_0 / sum P_i``; infinite without interferers."""
        total = self.interference_power
        return math.inf if total == 0 else self.desired.power / total

    @property
    def sinr(self) -> float:
        """``(1/SNR + 1/SIR)^-1``."""
        return self.desired.power / (self.sigma2 + self.interference_power)

    def with_sir_db(self, sir_db: float) -> NetworkScenario:
        """Scale every interferer by a common factor so that SIR hits ``sir_db``."""
        if not self.interferers:
            raise DomainError("an SIR sweep needs at least one interferer")
        factor = self.desired.power / (db_to_linear(sir_db) * self.interference_power)
        return replace(
            self,
            users=(self.desired, *(UserLink(u.nt, u.power * factor) for u in self.interferers)),
        )

    def with_snr_db(self, snr_db: float) -> NetworkScenario:
        """Scale every user by a common factor so that SNR hits ``snr_db``; SIR is unchanged."""
        factor = db_to_linear(snr_db) * self.sigma2 / self.desired.power
        return replace(self, users=tuple(UserLink(u.nt, u.power * factor) for u in self.users))

    def desired_only(self, noise: float | None = None) -> NetworkScenario:
        """The desired link alone, optionally with a different noise power."""
        return NetworkScenario(self.nr, (self.desired,), self.sigma2 if noise is None else noise)

    def describe(self) -> str:
        """Canonical one-line text used for the digest."""
        users = ";".join(f"{u.nt}:{u.power!r}" for u in self.users)
        return f"nr={self.nr};sigma2={self.sigma2!r};users={users}"

    def digest(self) -> str:
        """Short stable fingerprint of the scenario."""
        return hashlib.sha256(self.describe().encode("ascii")).hexdigest()[:12]


def _scenario_issues(nr: int, users: Sequence[UserLink], sigma2: float) -> list[Issue]:
    issues: list[Issue] = []
    if int(nr) != nr or nr < 1:
        issues.append(Issue("nr", f"must be a positive integer, got {nr!r}"))
    if not (sigma2 > 0 and math.isfinite(sigma2)):
        issues.append(Issue("sigma2", f"must be positive, got {sigma2!r}"))
    if not users:
        issues.append(Issue("users", "the desired user 0 is missing"))
    for k, user in enumerate(users):
        if int(user.nt) != user.nt or user.nt < 1:
            issues.append(Issue(f"user.{k}.nt", f"must be a positive integer, got {user.nt!r}"))
        if not (user.power > 0 and math.isfinite(user.power)):
            issues.append(Issue(f"user.{k}.p", f"must be positive, got {user.power!r}"))
    return issues


def build_interference_matrices(
    scenario: NetworkScenario, config: NumericsConfig = DEFAULT_NUMERICS
) -> tuple[CovarianceSpec, CovarianceSpec]:
    """Return ``(Psi, Psi_tilde)`` for ``scenario``.

    ``Psi`` covers the interferers only and is zero-dimensional when there
    are none; ``Psi_tilde`` adds the desired user. Equal ``rho`` values merge
    into one group per ``canonicalize``.

    Example:
        >>> s = NetworkScenario(6, (UserLink(3, 1.0), UserLink(2, 0.5), UserLink(1, 0.25)))
        >>> build_interference_matrices(s)[1].groups
        ((0.3333333333333333, 3), (0.25, 3))
    """
    rho = scenario.rho
    interferer_values = [r for r, u in zip(rho[1:], scenario.interferers, strict=True) for _ in range(u.nt)]
    psi = canonicalize(interferer_values, config.merge_tolerance, allow_empty=True)
    psi_tilde = canonicalize(
        [rho[0]] * scenario.desired.nt + interferer_values, config.merge_tolerance
    )
    return psi, psi_tilde


__all__ = [
    "UserLink",
    "NetworkScenario",
    "build_interference_matrices",
    "db_to_linear",
    "linear_to_db",
]
