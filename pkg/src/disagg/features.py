"""Baseline feature transforms: Fryze decomposition, PAA, distance matrix, FIT-PS."""

from dataclasses import dataclass

import numpy as np

from .waveform import Waveform, find_abscissa_crossings


@dataclass(frozen=True)
class FryzeComponents:
    """Orthogonal split of a current into active and non-active parts.

    i_a is collinear with the voltage and carries all average power p_a;
    i_f = i - i_a is orthogonal to the voltage over the cycle.
    """

    i_a: np.ndarray
    i_f: np.ndarray
    p_a: float
    v_rms: float


@dataclass(frozen=True)
class PeriodMatrix:
    """Current samples rearranged as one fundamental period per row,
    aligned at the voltage negative-to-positive zero crossings."""

    values: np.ndarray

    @property
    def n_l(self) -> int:
        return self.values.shape[0]

    @property
    def n_k(self) -> int:
        return self.values.shape[1]


def fryze_decompose(v: np.ndarray, i: np.ndarray, T_s: int | None = None) -> FryzeComponents:
    """Decompose one cycle of current against its voltage.

    p_a   = (1/T_s) * sum(v * i)
    v_rms = sqrt((1/T_s) * sum(v^2))
    i_a   = (p_a / v_rms^2) * v
    i_f   = i - i_a
    """
    v = np.asarray(v, dtype=np.float64)
    i = np.asarray(i, dtype=np.float64)
    if v.shape != i.shape or v.ndim != 1 or len(v) == 0:
        raise ValueError("v and i must be 1-D arrays of equal nonzero length")
    if T_s is not None and T_s != len(v):
        raise ValueError(f"T_s={T_s} does not match signal length {len(v)}")
    n = len(v)
    p_a = float(np.dot(v, i) / n)
    v_rms = float(np.sqrt(np.dot(v, v) / n))
    if v_rms == 0.0:
        raise ValueError("v_rms is zero: active current is undefined for a dead voltage")
    i_a = (p_a / v_rms**2) * v
    return FryzeComponents(i_a=i_a, i_f=i - i_a, p_a=p_a, v_rms=v_rms)


def paa(x: np.ndarray, m: int) -> np.ndarray:
    """Piecewise aggregate approximation: segment means over m segments.

    Segments partition [0, n) as evenly as possible, with the remainder
    spread over the leading segments.
    """
    x = np.asarray(x, dtype=np.float64)
    n = len(x)
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > n:
        raise ValueError(f"m={m} exceeds signal length n={n}")
    base, rem = divmod(n, m)
    sizes = np.full(m, base)
    sizes[:rem] += 1
    offsets = np.concatenate([[0], np.cumsum(sizes)[:-1]])
    return np.add.reduceat(x, offsets) / sizes


def distance_matrix(x: np.ndarray) -> np.ndarray:
    """Pairwise 1-D Euclidean distances D[i, j] = |x[i] - x[j]|."""
    x = np.asarray(x, dtype=np.float64)
    return np.abs(x[:, None] - x[None, :])


def fitps(w: Waveform) -> PeriodMatrix:
    """Period-synchronous representation of the current.

    Each consecutive pair of voltage abscissa crossings (c_l, c_{l+1})
    yields one row: the current linearly interpolated at the n_k evenly
    spaced positions c_l + j*(c_{l+1}-c_l)/n_k, with n_k = round(fs/f0).
    """
    crossings = find_abscissa_crossings(w.voltage)
    if len(crossings) < 2:
        raise ValueError(
            f"need at least 2 voltage zero crossings for FIT-PS, found {len(crossings)}"
        )
    n_k = w.period_samples
    starts = crossings[:-1, None]
    spans = np.diff(crossings)[:, None]
    positions = starts + spans * (np.arange(n_k)[None, :] / n_k)
    rows = np.interp(positions.ravel(), np.arange(w.n_samples), w.current)
    return PeriodMatrix(values=rows.reshape(len(crossings) - 1, n_k))


def fryze_distance_features(v: np.ndarray, i: np.ndarray, m: int) -> np.ndarray:
    """Two-channel distance-matrix feature of one cycle, shape (2, m, m).

    Channel 0 is built from the PAA-reduced active current, channel 1
    from the non-active current (PAA first, then distances).
    """
    comp = fryze_decompose(v, i)
    return np.stack([distance_matrix(paa(comp.i_a, m)), distance_matrix(paa(comp.i_f, m))])
