"""
Campaign data models for the UECSM toolkit.
"""
from collections import Counter
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from models.tolerances import Tolerances
from models.verdict import Branch, Status, Verdict
from utils.errors import ConfigError, RankOutOfRange

# Log-spaced |margin| bin edges; the first bin catches exact zeros, the last everything above 10
MARGIN_BINS = [0.0] + [10.0 ** k for k in range(-16, 2)] + [float("inf")]


class EnsembleType(Enum):
    """Random matrix ensembles a campaign can draw from."""
    PARTIAL_ISOMETRY = "partial_isometry"
    GINIBRE = "ginibre"
    UNITARY = "unitary"


class CampaignConfig:
    """
    Parameters of a Monte Carlo campaign.
    """

    def __init__(
        self,
        n: int = 4,
        rank: int = 2,
        trials: int = 10000,
        seed: int = 1,
        tolerances: Optional[Tolerances] = None,
        ensemble: EnsembleType = EnsembleType.PARTIAL_ISOMETRY
    ):
        """
        Initialize the campaign configuration.

        Args:
            n: Matrix dimension
            rank: Partial-isometry rank k, 0 <= k <= n
            trials: Number of sampled matrices
            seed: Root seed of the per-trial streams
            tolerances: Tolerances handed to the pipeline
            ensemble: Ensemble to sample from
        """
        if isinstance(ensemble, str):
            ensemble = EnsembleType(ensemble)
        if n < 1:
            raise ConfigError(f"Campaign dimension must be positive, got {n}")
        if trials < 1:
            raise ConfigError(f"Campaign needs at least one trial, got {trials}")
        if seed < 0:
            raise ConfigError(f"Campaign seed must be non-negative, got {seed}")
        if not 0 <= rank <= n:
            raise RankOutOfRange(f"Rank {rank} outside 0..{n}")
        self.n = int(n)
        self.rank = int(rank)
        self.trials = int(trials)
        self.seed = int(seed)
        self.tolerances = tolerances or Tolerances()
        self.ensemble = ensemble

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> 'CampaignConfig':
        """
        Create a campaign configuration from the application configuration.

        Args:
            config: Full configuration dictionary (``campaign`` and ``tolerances`` sections)

        Returns:
            CampaignConfig: The campaign configuration
        """
        section = config.get("campaign", {})
        try:
            ensemble = EnsembleType(section.get("ensemble", EnsembleType.PARTIAL_ISOMETRY.value))
        except ValueError:
            raise ConfigError(f"Unknown ensemble '{section.get('ensemble')}'")
        return cls(
            n=section.get("n", 4),
            rank=section.get("rank", 2),
            trials=section.get("trials", 10000),
            seed=section.get("seed", 1),
            tolerances=Tolerances.from_config(config.get("tolerances", {})),
            ensemble=ensemble
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert the configuration to a dictionary."""
        return {
            "n": self.n,
            "rank": self.rank,
            "trials": self.trials,
            "seed": self.seed,
            "ensemble": self.ensemble.value,
            "tolerances": self.tolerances.to_dict()
        }

    def __str__(self) -> str:
        """String representation of the configuration."""
        rank = f", rank={self.rank}" if self.ensemble == EnsembleType.PARTIAL_ISOMETRY else ""
        return f"Campaign({self.ensemble.value}, n={self.n}{rank}, trials={self.trials}, seed={self.seed})"

    def __repr__(self) -> str:
        """Representation of the configuration."""
        return self.__str__()


class CampaignStats:
    """
    Aggregated outcome of a campaign.

    Stats from disjoint trial ranges combine with ``merge``; the order of
    merging does not change the result.
    """

    def __init__(self):
        """Initialize empty statistics."""
        self.status_counts: Counter = Counter({status.value: 0 for status in Status})
        self.branch_counts: Counter = Counter()
        self.margin_histogram: List[int] = [0] * (len(MARGIN_BINS) - 1)
        self.borderline = 0
        self.inconclusive_reasons: Counter = Counter()
        self.elapsed = 0.0

    @property
    def trials(self) -> int:
        """Number of recorded trials."""
        return sum(self.status_counts.values())

    def count(self, status: Status) -> int:
        """Number of trials with the given status."""
        return self.status_counts[status.value]

    def record(self, verdict: Verdict) -> None:
        """
        Add one trial outcome.

        Args:
            verdict: The trial verdict
        """
        self.status_counts[verdict.status.value] += 1
        self.branch_counts[verdict.branch.value] += 1
        if verdict.margin is not None:
            index = int(np.searchsorted(MARGIN_BINS, abs(verdict.margin), side="right")) - 1
            self.margin_histogram[min(index, len(self.margin_histogram) - 1)] += 1
        if verdict.borderline:
            self.borderline += 1
        if verdict.status == Status.INCONCLUSIVE:
            self.inconclusive_reasons[verdict.reason or "unspecified"] += 1

    def record_failure(self, reason: str) -> None:
        """Record a trial whose pipeline run raised as Inconclusive."""
        self.status_counts[Status.INCONCLUSIVE.value] += 1
        self.branch_counts["Error"] += 1
        self.inconclusive_reasons[reason] += 1

    def merge(self, other: 'CampaignStats') -> 'CampaignStats':
        """
        Combine two sets of statistics.

        Args:
            other: Statistics of a disjoint set of trials

        Returns:
            CampaignStats: New statistics covering both; elapsed times add
        """
        merged = CampaignStats()
        merged.status_counts = self.status_counts + other.status_counts
        for status in Status:
            merged.status_counts.setdefault(status.value, 0)
        merged.branch_counts = self.branch_counts + other.branch_counts
        merged.margin_histogram = [a + b for a, b in zip(self.margin_histogram, other.margin_histogram)]
        merged.borderline = self.borderline + other.borderline
        merged.inconclusive_reasons = self.inconclusive_reasons + other.inconclusive_reasons
        merged.elapsed = self.elapsed + other.elapsed
        return merged

    def to_dict(self) -> Dict[str, Any]:
        """Convert the statistics to a dictionary."""
        return {
            "trials": self.trials,
            "status_counts": dict(self.status_counts),
            "branch_counts": dict(sorted(self.branch_counts.items())),
            "margin_bins": [edge if np.isfinite(edge) else None for edge in MARGIN_BINS],
            "margin_histogram": list(self.margin_histogram),
            "borderline": self.borderline,
            "inconclusive_reasons": dict(sorted(self.inconclusive_reasons.items())),
            "elapsed": self.elapsed
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CampaignStats':
        """Create statistics from a dictionary."""
        stats = cls()
        stats.status_counts.update(data.get("status_counts", {}))
        stats.branch_counts.update(data.get("branch_counts", {}))
        stats.margin_histogram = list(data.get("margin_histogram", stats.margin_histogram))
        stats.borderline = int(data.get("borderline", 0))
        stats.inconclusive_reasons.update(data.get("inconclusive_reasons", {}))
        stats.elapsed = float(data.get("elapsed", 0.0))
        return stats

    def same_outcome(self, other: 'CampaignStats') -> bool:
        """True if both record the same counts and histogram, ignoring elapsed time."""
        mine, theirs = self.to_dict(), other.to_dict()
        mine.pop("elapsed")
        theirs.pop("elapsed")
        return mine == theirs

    def to_frame(self) -> pd.DataFrame:
        """
        Tabulate status and branch counts.

        Returns:
            pd.DataFrame: One row per (kind, name) with its count and share of the trials
        """
        rows = [("status", name, count) for name, count in self.status_counts.items()]
        rows += [("branch", name, count) for name, count in sorted(self.branch_counts.items())]
        frame = pd.DataFrame(rows, columns=["kind", "name", "count"])
        frame["share"] = frame["count"] / max(1, self.trials)
        return frame

    def histogram_frame(self) -> pd.DataFrame:
        """Tabulate the |margin| histogram with its bin edges."""
        return pd.DataFrame({
            "lower": MARGIN_BINS[:-1],
            "upper": MARGIN_BINS[1:],
            "count": self.margin_histogram
        })

    def __str__(self) -> str:
        """String representation of the statistics."""
        counts = ", ".join(f"{name}={count}" for name, count in self.status_counts.items())
        return f"CampaignStats(trials={self.trials}, {counts}, borderline={self.borderline})"

    def __repr__(self) -> str:
        """Representation of the statistics."""
        return self.__str__()
