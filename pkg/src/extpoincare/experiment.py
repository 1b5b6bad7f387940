"""Monte Carlo of the single-photon correlation interferometer.

The prepared state is (|+>|H> + e^{i phi} |->|V>)/sqrt(2): a superposition of
counterpropagating modes tagged by orthogonal polarizations.  The analyzer
chain measures X on both qubits: a 50:50 beam splitter recombines the two
directions (Hadamard on the direction qubit), a half-wave plate at 45 degrees
followed by a polarizing beam splitter resolves the X polarization basis in
each output port, and four detectors record the joint outcome.

Detector dictionary (transmitted PBS port = +):

    D1 -> (+,+)   D2 -> (+,-)   D3 -> (-,+)   D4 -> (-,-)

Imperfections: visibility v mixes the pure state with its sector-basis
dephased counterpart; phase noise adds Gaussian jitter to phi per trial;
detector efficiency drops the photon click with probability 1-eta; dark
counts fire each detector independently per trial.  Coincidence policy:
trials with exactly one click are kept (the clicked detector fixes both
outcomes), everything else is discarded.  No recovery heuristics.

Reproducibility: trials are processed in fixed chunks of 65536; chunk c draws
from numpy's PCG64 seeded with SeedSequence([seed, c]), with draw order
(phase jitter, outcome, efficiency, dark).  Worker partitioning assigns whole
chunks, so tallies merge to the same result for any worker count.  Sweep
point j runs with seed XOR j.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from typing import Iterable, Sequence

import numpy as np

from .qubit import TwoQubitState

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
ANALYZER = np.kron(HADAMARD, HADAMARD)

OUTCOMES = ((1, 1), (1, -1), (-1, 1), (-1, -1))
DETECTORS = {"D1": (1, 1), "D2": (1, -1), "D3": (-1, 1), "D4": (-1, -1)}

TRIALS_PER_STREAM = 1 << 16

CSV_COLUMNS = ("phi_rad", "trials", "kept", "discarded",
               "n_pp", "n_pm", "n_mp", "n_mm", "e_xx", "stderr", "expected")

STREAM_RULE = ("trials run in chunks of 65536; chunk c uses "
               "numpy default_rng(SeedSequence([seed, c])) drawing phase jitter, "
               "outcome, efficiency, dark in that order; sweep point j uses seed XOR j")


@dataclass(frozen=True)
class ExperimentConfig:
    """Interferometer run parameters.

    phi: preparation phase (rad).  visibility: contrast in [0, 1].
    eta: detector efficiency in [0, 1], uniform over the four detectors.
    dark: per-detector dark click probability per trial, in [0, 1).
    sigma: phase jitter standard deviation (rad).  trials: positive count.
    seed: 64-bit stream seed.
    """

    phi: float
    visibility: float = 1.0
    eta: float = 1.0
    dark: float = 0.0
    sigma: float = 0.0
    trials: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if not math.isfinite(self.phi):
            raise ValueError(f"phi must be finite, got {self.phi}")
        if not 0.0 <= self.visibility <= 1.0:
            raise ValueError(f"visibility must be in [0, 1], got {self.visibility}")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must be in [0, 1], got {self.eta}")
        if not 0.0 <= self.dark < 1.0:
            raise ValueError(f"dark must be in [0, 1), got {self.dark}")
        if self.sigma < 0.0:
            raise ValueError(f"sigma must be nonnegative, got {self.sigma}")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not -(2 ** 63) <= self.seed < 2 ** 64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")


@dataclass
class TrialTally:
    """Joint click counts per (x_dir, x_pol) outcome plus discarded trials."""

    counts: dict[tuple[int, int], int] = field(
        default_factory=lambda: {o: 0 for o in OUTCOMES})
    discarded: int = 0

    @property
    def kept(self) -> int:
        return sum(self.counts.values())

    @property
    def trials(self) -> int:
        return self.kept + self.discarded

    def merge(self, other: "TrialTally") -> "TrialTally":
        merged = {o: self.counts[o] + other.counts[o] for o in OUTCOMES}
        return TrialTally(merged, self.discarded + other.discarded)


def prepare_state(phi: float, visibility: float = 1.0):
    """State after the preparation stage.

    Unit visibility gives the pure state with amplitudes
    (1, 0, 0, e^{i phi})/sqrt(2).  Below unit visibility the return value is a
    4x4 density matrix, the convex mix of that state with its dephased-in-
    sector-basis counterpart diag(1/2, 0, 0, 1/2).
    """
    if not 0.0 <= visibility <= 1.0:
        raise ValueError(f"visibility must be in [0, 1], got {visibility}")
    amps = np.array([1.0, 0.0, 0.0, np.exp(1j * phi)]) / math.sqrt(2.0)
    if visibility == 1.0:
        return TwoQubitState(amps)
    pure = np.outer(amps, amps.conj())
    dephased = np.diag(np.diag(pure))
    return visibility * pure + (1.0 - visibility) * dephased


def _as_density(state) -> np.ndarray:
    if isinstance(state, TwoQubitState):
        return state.density()
    rho = np.asarray(state, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a TwoQubitState or 4x4 density matrix, got shape {rho.shape}")
    return rho


def born_probabilities(state) -> dict[tuple[int, int], float]:
    """Joint X x X outcome probabilities through the analyzer chain.

    The chain applies the direction Hadamard (the recombining beam splitter)
    and the polarization Hadamard (half-wave plate), then reads the
    computational split of the polarizing beam splitters.
    """
    rho = _as_density(state)
    tr = float(np.real(np.trace(rho)))
    if abs(tr - 1.0) > 1e-9:
        raise ValueError(f"state trace deviates from 1 by {abs(tr - 1.0):.3e}")
    diag = np.real(np.diag(ANALYZER @ rho @ ANALYZER.conj().T))
    return {outcome: float(diag[i]) for i, outcome in enumerate(OUTCOMES)}


def correlation_from_probabilities(probs: dict[tuple[int, int], float]) -> float:
    return float(sum(xd * xp * p for (xd, xp), p in probs.items()))


def expected_correlation(phi: float, visibility: float = 1.0, sigma: float = 0.0) -> float:
    """Analytic prediction v * exp(-sigma^2/2) * cos(phi) the sampler converges to."""
    if not 0.0 <= visibility <= 1.0:
        raise ValueError(f"visibility must be in [0, 1], got {visibility}")
    if sigma < 0.0:
        raise ValueError(f"sigma must be nonnegative, got {sigma}")
    return float(visibility * math.exp(-0.5 * sigma * sigma) * math.cos(phi))


def _dephased_chain_probs() -> np.ndarray:
    rho = np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)
    return np.real(np.diag(ANALYZER @ rho @ ANALYZER.conj().T))


def _run_chunk(config: ExperimentConfig, chunk: int, n: int) -> TrialTally:
    rng = np.random.default_rng(np.random.SeedSequence([config.seed & (2 ** 64 - 1), chunk]))
    phis = config.phi + config.sigma * rng.standard_normal(n)

    # per-trial pure amplitudes through the analyzer, one matmul for the chunk
    amps = np.zeros((n, 4), dtype=complex)
    amps[:, 0] = 1.0 / math.sqrt(2.0)
    amps[:, 3] = np.exp(1j * phis) / math.sqrt(2.0)
    pure = np.abs(amps @ ANALYZER.T) ** 2
    probs = config.visibility * pure + (1.0 - config.visibility) * _dephased_chain_probs()

    cumulative = np.cumsum(probs, axis=1)
    u = rng.random(n)
    outcome = (u[:, None] > cumulative).sum(axis=1)
    outcome = np.minimum(outcome, 3)  # guard rounding at the top of the cdf

    detected = rng.random(n) < config.eta
    clicks = rng.random((n, 4)) < config.dark
    clicks[np.arange(n), outcome] |= detected

    n_clicks = clicks.sum(axis=1)
    single = n_clicks == 1
    fired = np.argmax(clicks[single], axis=1)
    per_outcome = np.bincount(fired, minlength=4)
    counts = {o: int(per_outcome[i]) for i, o in enumerate(OUTCOMES)}
    return TrialTally(counts, discarded=int(n - single.sum()))


def run_trials(config: ExperimentConfig, workers: int = 1) -> TrialTally:
    """Sample the configured number of trials; deterministic for a fixed config.

    ``workers`` only distributes whole RNG chunks over threads; the merged
    tally is identical for any worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    sizes = []
    remaining = config.trials
    while remaining > 0:
        sizes.append(min(TRIALS_PER_STREAM, remaining))
        remaining -= sizes[-1]
    if workers == 1:
        tallies = [_run_chunk(config, c, n) for c, n in enumerate(sizes)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tallies = list(pool.map(lambda cn: _run_chunk(config, *cn), enumerate(sizes)))
    total = TrialTally()
    for t in tallies:
        total = total.merge(t)
    return total


def estimate_exx(tally: TrialTally) -> tuple[float, float]:
    """Correlation estimate sum(x_d x_p n)/sum(n) and its binomial standard error."""
    kept = tally.kept
    if kept == 0:
        raise ValueError(
            f"cannot estimate a correlation from an all-discarded tally "
            f"({tally.discarded} trials discarded, 0 kept)")
    e = sum(xd * xp * n for (xd, xp), n in tally.counts.items()) / kept
    stderr = math.sqrt(max(1.0 - e * e, 0.0) / kept)
    return float(e), float(stderr)


def sweep_seed(seed: int, index: int) -> int:
    """Per-point stream seed for sweeps: master seed XOR point index."""
    return (seed & (2 ** 64 - 1)) ^ index


@dataclass(frozen=True)
class SweepRow:
    phi: float
    tally: TrialTally
    e_xx: float | None
    stderr: float | None
    expected: float


def sweep_phase(phis: Sequence[float], config: ExperimentConfig,
                workers: int = 1) -> list[SweepRow]:
    """Run one tally per phase with derived per-point seeds."""
    if len(phis) == 0:
        raise ValueError("phase sweep needs at least one point")
    rows = []
    for j, phi in enumerate(phis):
        cfg = replace(config, phi=float(phi), seed=sweep_seed(config.seed, j))
        tally = run_trials(cfg, workers=workers)
        if tally.kept > 0:
            e, stderr = estimate_exx(tally)
        else:
            e, stderr = None, None
        rows.append(SweepRow(float(phi), tally, e, stderr,
                             expected_correlation(phi, config.visibility, config.sigma)))
    return rows


def sweep_csv_text(rows: Iterable[SweepRow]) -> str:
    """CSV with the fixed column contract; floats use repr so parsing round-trips."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        t = row.tally
        writer.writerow([
            repr(row.phi), t.trials, t.kept, t.discarded,
            t.counts[(1, 1)], t.counts[(1, -1)], t.counts[(-1, 1)], t.counts[(-1, -1)],
            "" if row.e_xx is None else repr(row.e_xx),
            "" if row.stderr is None else repr(row.stderr),
            repr(row.expected),
        ])
    return buf.getvalue()


def write_sweep_csv(rows: Iterable[SweepRow], path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(sweep_csv_text(rows))


def run_manifest(command: str, config: ExperimentConfig, workers: int,
                 version: str) -> dict:
    """Audit record accompanying every output file; rerunning it reproduces the CSV."""
    return {
        "command": command,
        "config": {
            "phi": config.phi,
            "visibility": config.visibility,
            "eta": config.eta,
            "dark": config.dark,
            "sigma": config.sigma,
            "trials": config.trials,
            "seed": config.seed,
        },
        "workers": workers,
        "stream_rule": STREAM_RULE,
        "version": version,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def write_manifest(manifest: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
