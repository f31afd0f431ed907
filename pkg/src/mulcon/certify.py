"""Randomised certification of generic maximal rank.

Rank is lower semicontinuous, so one form whose contraction matrix reaches
``min(rows, cols)`` over F_p proves that a Zariski-general form does too,
over F_p and over any field of characteristic zero.  A failed trial proves
nothing; after ``max_trials`` failures the verdict is ``inconclusive``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable

from .basis import dimension
from .exceptions import DomainError
from .fields import ESCALATION_PRIME, FieldDescriptor
from .forms import BiForm, build_mulcon_matrix, random_biform
from .linalg import rank

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Certificate:
    a: int
    b: int
    r: int
    t: int
    m: int
    n: int
    field: FieldDescriptor
    seeds_tried: tuple[int, ...]
    achieved_rank: int
    target_rank: int
    verdict: str
    witness_seed: int | None = None
    escalated: bool = False
    trial_ranks: tuple[int, ...] = field(default=(), repr=False)

    def __post_init__(self):
        assert self.achieved_rank <= self.target_rank
        assert (self.verdict == CERTIFIED) == (self.achieved_rank == self.target_rank)

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    @property
    def params(self) -> dict[str, int]:
        return dict(a=self.a, b=self.b, r=self.r, t=self.t, m=self.m, n=self.n)

    def to_json(self) -> dict:
        d = asdict(self)
        d["field"] = self.field.to_json()
        d["seeds_tried"] = list(self.seeds_tried)
        d["trial_ranks"] = list(self.trial_ranks)
        return d


Sampler = Callable[[int, int, FieldDescriptor, int, tuple[int, int]], BiForm]


def target_rank(a: int, b: int, r: int, t: int, m: int = 1, n: int = 1) -> int:
    return min(dimension(m, n, r, t), dimension(m, n, r + a, t - b))


def generic_rank_certificate(
    a: int,
    b: int,
    r: int,
    t: int,
    m: int = 1,
    n: int = 1,
    field: FieldDescriptor | None = None,
    max_trials: int = 3,
    base_seed: int = 0,
    escalate: bool = True,
    sampler: Sampler = random_biform,
) -> Certificate:
    """Try forms from ``sampler`` with seeds base_seed, base_seed + 1, ...

    Stops at the first form of maximal rank.  If all ``max_trials`` fail
    and ``escalate`` is set, the same seeds are retried over F_(2^31 - 1)
    before giving up.
    """
    if min(a, b, m, n) < 0 or r < 0 or t < b:
        raise DomainError(f"need r >= 0 and t >= b, got (a,b,r,t) = ({a},{b},{r},{t})")
    if max_trials < 1:
        raise DomainError("max_trials must be positive")
    field = field or FieldDescriptor.default()
    target = target_rank(a, b, r, t, m, n)
    fields = [field]
    if escalate and field.p is not None and field.p != ESCALATION_PRIME:
        fields.append(FieldDescriptor.prime(ESCALATION_PRIME))

    seeds: list[int] = []
    ranks: list[int] = []
    for fld in fields:
        for seed in range(base_seed, base_seed + max_trials):
            sigma = sampler(a, b, fld, seed, (m, n))
            rk = rank(build_mulcon_matrix(sigma, r, t))
            seeds.append(seed)
            ranks.append(rk)
            if rk == target:
                return Certificate(
                    a, b, r, t, m, n, fld, tuple(seeds), rk, target, CERTIFIED,
                    witness_seed=seed, escalated=fld is not field, trial_ranks=tuple(ranks),
                )
    return Certificate(
        a, b, r, t, m, n, fields[-1], tuple(seeds), max(ranks), target, INCONCLUSIVE,
        escalated=len(fields) > 1, trial_ranks=tuple(ranks),
    )


def replay(cert: Certificate, sampler: Sampler = random_biform) -> int:
    """Rank reached by the witness (or last) seed of ``cert``."""
    seed = cert.witness_seed if cert.witness_seed is not None else cert.seeds_tried[-1]
    sigma = sampler(cert.a, cert.b, cert.field, seed, (cert.m, cert.n))
    return rank(build_mulcon_matrix(sigma, cert.r, cert.t))
