"""
Monte Carlo campaign runner.

Trial t always draws from ``trial_rng(seed, t)``, so the aggregated statistics
do not depend on how the trials are split across worker processes.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

from ensembles.ensemble_factory import EnsembleFactory
from ensembles.samplers import trial_rng
from models.campaign import CampaignConfig, CampaignStats
from uecsm.pipeline import test_generic
from utils.errors import UECSMError

logger = logging.getLogger("UECSM.Campaign")


def run_trials(cfg: CampaignConfig, start: int, stop: int) -> CampaignStats:
    """
    Run the trials with indices start..stop-1.

    Args:
        cfg: Campaign configuration
        start: First trial index
        stop: One past the last trial index

    Returns:
        CampaignStats: Statistics of this range; elapsed time excluded
    """
    ensemble = EnsembleFactory.create_ensemble(cfg.ensemble, cfg.n, cfg.rank)
    stats = CampaignStats()
    for trial in range(start, stop):
        matrix = ensemble.sample(trial_rng(cfg.seed, trial))
        try:
            stats.record(test_generic(matrix, cfg.tolerances))
        except UECSMError as e:
            logger.warning(f"Trial {trial} raised {e.__class__.__name__}: {e}")
            stats.record_failure(f"{e.__class__.__name__}: {e}")
    return stats


def _chunks(trials: int, workers: int) -> List[Tuple[int, int]]:
    size = -(-trials // (workers * 4))
    return [(start, min(start + size, trials)) for start in range(0, trials, size)]


def run_campaign(cfg: CampaignConfig, workers: int = 1) -> CampaignStats:
    """
    Sample ``cfg.trials`` matrices, test each one and aggregate the verdicts.

    Args:
        cfg: Campaign configuration
        workers: Worker processes; 1 runs in-process

    Returns:
        CampaignStats: Aggregated statistics with the wall time of the campaign
    """
    logger.info(f"Starting {cfg} with {workers} worker(s)")
    started = time.perf_counter()

    if workers <= 1:
        stats = run_trials(cfg, 0, cfg.trials)
    else:
        stats = CampaignStats()
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(run_trials, cfg, start, stop) for start, stop in _chunks(cfg.trials, workers)]
            for future in futures:
                stats = stats.merge(future.result())

    stats.elapsed = time.perf_counter() - started
    logger.info(f"Finished in {stats.elapsed:.2f} s: {stats}")
    return stats
