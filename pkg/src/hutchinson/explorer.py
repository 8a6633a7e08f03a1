"""Parameter sweeps over quotient segments ``[alpha, beta]``.

Each cell draws quotient sequences inside the segment, builds the
polynomial, and asks the Sturm oracle whether it is real-rooted.  Region
flags say whether the interval criterion or the older fixed segment
covers the cell, so the empirical tallies can be set against the
theory.
"""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .criteria import THEOREM_C_LOW, _theorem_c_upper_ok
from .errors import InvalidInput
from .lemma import beta_bound, threshold_check
from .poly import as_rational, format_rational, from_quotients
from .sturm import is_hyperbolic

SAMPLERS = ("constant", "alternating", "uniform_random", "endpoint_extremal")
CSV_HEADER = ("alpha", "beta", "degree", "sampler", "n_samples", "n_hyperbolic", "inside_t1", "inside_tc")
DEFAULT_DENOMINATOR = 10 ** 6
MAX_DEGREE = 40


@dataclass(frozen=True)
class SweepConfig:
    alpha_grid: tuple
    beta_grid: tuple
    degrees: tuple
    samples_per_cell: int = 10
    sampler: str = "uniform_random"
    seed: Optional[int] = 0
    denominator: int = DEFAULT_DENOMINATOR
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "alpha_grid", tuple(as_rational(a) for a in self.alpha_grid))
        object.__setattr__(self, "beta_grid", tuple(as_rational(b) for b in self.beta_grid))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.alpha_grid or not self.beta_grid or not self.degrees:
            raise InvalidInput("sweep grids must be nonempty")
        if self.samples_per_cell < 1:
            raise InvalidInput("samples_per_cell must be at least 1")
        if self.sampler not in SAMPLERS:
            raise InvalidInput(f"unknown sampler {self.sampler!r}; choose from {', '.join(SAMPLERS)}")
        if self.sampler == "uniform_random" and self.seed is None:
            raise InvalidInput("the random sampler needs a seed")
        for d in self.degrees:
            if not 2 <= d <= MAX_DEGREE:
                raise InvalidInput(f"degree {d} outside 2..{MAX_DEGREE}")
        if any(a <= 1 for a in self.alpha_grid):
            raise InvalidInput("alpha values must exceed 1")

    def to_json(self) -> dict:
        return {
            "alpha_grid": [format_rational(a) for a in self.alpha_grid],
            "beta_grid": [format_rational(b) for b in self.beta_grid],
            "degrees": list(self.degrees),
            "samples_per_cell": self.samples_per_cell,
            "sampler": self.sampler,
            "seed": self.seed,
            "denominator": self.denominator,
        }


@dataclass(frozen=True, order=True)
class SweepRow:
    alpha: Fraction
    beta: Fraction
    degree: int
    sampler: str
    n_samples: int
    n_hyperbolic: int
    inside_theorem1_region: bool
    inside_theoremC_region: bool

    def as_csv(self) -> list:
        return [format_rational(self.alpha), format_rational(self.beta), self.degree, self.sampler,
                self.n_samples, self.n_hyperbolic, int(self.inside_theorem1_region),
                int(self.inside_theoremC_region)]


@dataclass(frozen=True)
class SweepReport:
    rows: tuple
    config: Optional[SweepConfig] = field(default=None, compare=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow(r.as_csv())
        return buf.getvalue()


def inside_theorem1(alpha, beta) -> bool:
    alpha, beta = as_rational(alpha), as_rational(beta)
    return threshold_check(alpha) and beta <= beta_bound(alpha)


def inside_theorem_c(alpha, beta) -> bool:
    alpha, beta = as_rational(alpha), as_rational(beta)
    return THEOREM_C_LOW <= alpha <= 4 and _theorem_c_upper_ok(beta, alpha)


def _draw(rng: random.Random, lo: Fraction, hi: Fraction, den: int) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randint(0, den), den)


def sample_quotients(sampler: str, alpha, beta, degree: int, index: int, rng: random.Random,
                     denominator: int = DEFAULT_DENOMINATOR) -> list[Fraction]:
    """One quotient sequence ``q2..q_degree`` in ``[alpha, beta]``.

    ``constant`` and ``uniform_random`` draw from the grid with the given
    denominator; ``alternating`` swaps phase with ``index``; and
    ``endpoint_extremal`` cycles through constant-alpha, constant-beta and
    both alternating phases.
    """
    a, b = as_rational(alpha), as_rational(beta)
    m = degree - 1
    if sampler == "constant":
        return [_draw(rng, a, b, denominator)] * m
    if sampler == "uniform_random":
        return [_draw(rng, a, b, denominator) for _ in range(m)]
    if sampler == "alternating":
        first, second = (a, b) if index % 2 == 0 else (b, a)
        return [first if k % 2 == 0 else second for k in range(m)]
    if sampler == "endpoint_extremal":
        kind = index % 4
        if kind == 0:
            return [a] * m
        if kind == 1:
            return [b] * m
        first, second = (a, b) if kind == 2 else (b, a)
        return [first if k % 2 == 0 else second for k in range(m)]
    raise InvalidInput(f"unknown sampler {sampler!r}")


def _cell_rng(seed, alpha, beta, degree, sampler) -> random.Random:
    return random.Random(f"{seed}|{alpha}|{beta}|{degree}|{sampler}")


def _run_cell(args) -> SweepRow:
    alpha, beta, degree, sampler, samples, seed, den = args
    rng = _cell_rng(seed, alpha, beta, degree, sampler)
    hits = 0
    for i in range(samples):
        q = sample_quotients(sampler, alpha, beta, degree, i, rng, den)
        if is_hyperbolic(from_quotients(q)):
            hits += 1
    return SweepRow(alpha, beta, degree, sampler, samples, hits,
                    inside_theorem1(alpha, beta), inside_theorem_c(alpha, beta))


def sweep(config: SweepConfig) -> SweepReport:
    """Tally hyperbolic samples per ``(alpha, beta, degree)`` cell; cells with beta < alpha are skipped."""
    cells = [
        (a, b, d, config.sampler, config.samples_per_cell, config.seed, config.denominator)
        for a in config.alpha_grid for b in config.beta_grid if b >= a for d in config.degrees
    ]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = list(pool.map(_run_cell, cells))
    else:
        rows = [_run_cell(c) for c in cells]
    return SweepReport(tuple(sorted(rows)), config)


class BetaScan(NamedTuple):
    beta: Optional[Fraction]
    capped: bool


def empirical_beta(alpha, degree: int, resolution, sampler: str = "endpoint_extremal", seed: int = 0,
                   samples: int = 8, beta_max=None, denominator: int = DEFAULT_DENOMINATOR) -> BetaScan:
    """Largest grid value ``beta`` for which every sampled sequence in ``[alpha, beta]`` is real-rooted.

    Scans ``alpha, alpha + resolution, ...`` upward and stops at the first
    failing ``beta``.  ``beta`` is None when even the degenerate segment
    ``[alpha, alpha]`` fails.  The scan stops at ``beta_max`` (default
    ``alpha + 400 * resolution``) with ``capped=True``.
    """
    alpha = as_rational(alpha)
    res = as_rational(resolution)
    if res <= 0:
        raise InvalidInput("resolution must be positive")
    if sampler not in SAMPLERS:
        raise InvalidInput(f"unknown sampler {sampler!r}")
    cap = alpha + 400 * res if beta_max is None else as_rational(beta_max)
    best = None
    beta = alpha
    while beta <= cap:
        rng = _cell_rng(seed, alpha, beta, degree, sampler)
        for i in range(samples):
            q = sample_quotients(sampler, alpha, beta, degree, i, rng, denominator)
            if not is_hyperbolic(from_quotients(q)):
                return BetaScan(best, False)
        best = beta
        beta += res
    return BetaScan(best, True)
