"""Independent reference implementations used to check the package.

Everything here is deliberately naive (nested loops, direct definitions,
textbook estimators) and shares no code with the implementations under test.
"""

import numpy as np
from scipy.signal import welch


def octave_band_slope_db(x, fs=16000, fmin=20.0, fmax=6000.0):
    """Spectral slope in dB/octave: least-squares fit of band power (dB)
    against log2 frequency over third-octave-averaged Welch periodograms."""
    f, pxx = welch(x, fs=fs, nperseg=4096, noverlap=2048)
    edges = fmin * 2.0 ** np.arange(0, np.log2(fmax / fmin) + 1e-9, 1.0 / 3.0)
    centers, powers = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        m = (f >= lo) & (f < hi)
        if m.any():
            centers.append(np.log2(np.sqrt(lo * hi)))
            powers.append(10.0 * np.log10(pxx[m].mean()))
    a = np.vstack([centers, np.ones(len(centers))]).T
    slope, _ = np.linalg.lstsq(a, np.asarray(powers), rcond=None)[0]
    return float(slope)


def band_power(x, lo, hi, fs=16000):
    """Total power inside [lo, hi) Hz from a Welch periodogram."""
    f, pxx = welch(x, fs=fs, nperseg=8192)
    m = (f >= lo) & (f < hi)
    return float(pxx[m].sum() * (f[1] - f[0]))


def component_snr_db(mixture, clean, noise):
    """Recover the component SNR of `mixture` given the original clean and
    noise waveforms, by exact least-squares projection onto span{clean, noise}.

    Independent of how the mixture was scaled internally: solves the 2x2
    normal equations for mixture = alpha*clean + beta*noise.
    """
    c = np.asarray(clean, dtype=np.float64)
    n = np.asarray(noise, dtype=np.float64)
    m = np.asarray(mixture, dtype=np.float64)
    gram = np.array([[c @ c, c @ n], [n @ c, n @ n]])
    rhs = np.array([m @ c, m @ n])
    alpha, beta = np.linalg.solve(gram, rhs)
    p_clean = alpha**2 * np.mean(c * c)
    p_noise = beta**2 * np.mean(n * n)
    return 10.0 * np.log10(p_clean / p_noise)


def naive_conv1d(x, w, stride=1, groups=1):
    """Direct nested-loop grouped cross-correlation with 'same'-style zero
    padding and T_out = ceil(T / stride). x: [N,Cin,T], w: [Cout,Cin/g,K]."""
    n, c_in, t = x.shape
    c_out, c_in_g, k = w.shape
    assert c_in % groups == 0 and c_out % groups == 0
    assert c_in_g == c_in // groups
    t_out = -(-t // stride)
    pad_total = max((t_out - 1) * stride + k - t, 0)
    pad_left = pad_total // 2
    xp = np.zeros((n, c_in, t + pad_total))
    xp[:, :, pad_left : pad_left + t] = x
    out = np.zeros((n, c_out, t_out))
    out_per_group = c_out // groups
    for b in range(n):
        for o in range(c_out):
            g = o // out_per_group
            for ti in range(t_out):
                acc = 0.0
                for ci in range(c_in_g):
                    for ki in range(k):
                        acc += xp[b, g * c_in_g + ci, ti * stride + ki] * w[o, ci, ki]
                out[b, o, ti] = acc
    return out


def naive_avg_pool(x, window, stride):
    """Ceil-mode average pooling; partial tail windows average only the
    elements actually present."""
    n, c, t = x.shape
    t_out = max(0, -(-(t - window) // stride)) + 1
    out = np.zeros((n, c, t_out))
    for ti in range(t_out):
        lo = ti * stride
        hi = min(lo + window, t)
        out[:, :, ti] = x[:, :, lo:hi].mean(axis=2)
    return out


def central_difference(f, theta, indices, step=1e-5):
    """Central finite-difference gradient of scalar f w.r.t. theta[i] for the
    requested flat indices."""
    grads = np.zeros(len(indices))
    for j, i in enumerate(indices):
        orig = theta[i]
        theta[i] = orig + step
        hi = f(theta)
        theta[i] = orig - step
        lo = f(theta)
        theta[i] = orig
        grads[j] = (hi - lo) / (2.0 * step)
    return grads


def relative_error(analytic, numeric, floor=1e-4):
    """max |a - n| / max(|a|, |n|, floor) over paired gradient samples."""
    a = np.asarray(analytic, dtype=np.float64)
    b = np.asarray(numeric, dtype=np.float64)
    denom = np.maximum(np.maximum(np.abs(a), np.abs(b)), floor)
    return float(np.max(np.abs(a - b) / denom))
