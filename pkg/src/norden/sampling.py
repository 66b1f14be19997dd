"""Seeded exact sampling of the 4-parameter family.

Parameters are drawn with :class:`random.Random` (Mersenne Twister): each
coordinate is ``randrange(lo*D, hi*D + 1) / D`` with ``D = 1000``, so a seed
fixes every point exactly. Each point is computed from scratch: connection,
F, Nijenhuis tensor, curvature, then the three invariants.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .analysis import Geometry, family_manifold

DENOMINATOR = 1000


@dataclass(frozen=True)
class SamplePoint:
    lams: tuple[Fraction, ...]
    tau: Fraction
    norm_nabla_J: Fraction
    norm_N: Fraction

    @property
    def isotropic(self) -> bool:
        return self.norm_nabla_J == 0


@dataclass
class SampleSummary:
    seed: int
    low: Fraction
    high: Fraction
    points: list[SamplePoint] = field(default_factory=list)

    @property
    def isotropic_count(self) -> int:
        return sum(p.isotropic for p in self.points)

    def to_dict(self, include_points: bool = False) -> dict:
        taus = [p.tau for p in self.points]
        d = {
            "schema": 1,
            "seed": self.seed,
            "range": [str(self.low), str(self.high)],
            "count": len(self.points),
            "isotropic_count": self.isotropic_count,
            "tau_min": str(min(taus)),
            "tau_max": str(max(taus)),
            "tau_min_float": float(min(taus)),
            "tau_max_float": float(max(taus)),
        }
        if include_points:
            d["points"] = [
                {
                    "lambda": [str(x) for x in p.lams],
                    "tau": str(p.tau),
                    "norm_nabla_J": str(p.norm_nabla_J),
                    "norm_N": str(p.norm_N),
                    "isotropic": p.isotropic,
                }
                for p in self.points
            ]
        return d

    def to_text(self, include_points: bool = False) -> str:
        d = self.to_dict(include_points)
        lines = [
            f"seed: {d['seed']}",
            f"range: [{d['range'][0]}, {d['range'][1]}]",
            f"points: {d['count']}",
            f"isotropic points: {d['isotropic_count']}",
            f"tau min: {d['tau_min']} ({d['tau_min_float']:.6g})",
            f"tau max: {d['tau_max']} ({d['tau_max_float']:.6g})",
        ]
        for p in d.get("points", []):
            lines.append(
                f"  l=({', '.join(p['lambda'])}) tau={p['tau']} "
                f"||nabla J||={p['norm_nabla_J']} ||N||={p['norm_N']} isotropic={p['isotropic']}"
            )
        return "\n".join(lines) + "\n"


def draw_points(count: int, seed: int, low: Fraction, high: Fraction) -> list[tuple[Fraction, ...]]:
    if high < low:
        raise ValueError(f"invalid range: {low} > {high}")
    rng = random.Random(seed)
    lo, hi = int(low * DENOMINATOR), int(high * DENOMINATOR)
    if Fraction(lo, DENOMINATOR) != low or Fraction(hi, DENOMINATOR) != high:
        raise ValueError(f"range endpoints must be multiples of 1/{DENOMINATOR}")
    return [
        tuple(Fraction(rng.randrange(lo, hi + 1), DENOMINATOR) for _ in range(4))
        for _ in range(count)
    ]


def evaluate_point(lams: Sequence[Fraction]) -> SamplePoint:
    geo = Geometry(family_manifold(list(lams)))
    direct, via_F = geo.norm_nabla_J
    if direct != via_F:
        raise ArithmeticError(f"||nabla J|| computations disagree at {lams}")
    return SamplePoint(
        lams=tuple(lams),
        tau=geo.tau.constant_value(),
        norm_nabla_J=direct.constant_value(),
        norm_N=geo.norm_N.constant_value(),
    )


def sample(
    count: int,
    seed: int,
    low: Fraction,
    high: Fraction,
    include: Sequence[Sequence[Fraction]] = (),
    workers: int = 1,
) -> SampleSummary:
    """Evaluate ``count`` points; forced points in ``include`` come first."""
    if count <= 0:
        raise ValueError("count must be positive")
    if len(include) > count:
        raise ValueError("more forced points than the requested count")
    for p in include:
        if len(p) != 4:
            raise ValueError("forced points need four coordinates")
    points = [tuple(Fraction(x) for x in p) for p in include]
    points += draw_points(count - len(points), seed, low, high)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            evaluated = list(pool.map(evaluate_point, points, chunksize=8))
    else:
        evaluated = [evaluate_point(p) for p in points]
    return SampleSummary(seed=seed, low=Fraction(low), high=Fraction(high), points=evaluated)
