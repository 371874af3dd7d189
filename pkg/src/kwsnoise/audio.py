"""Audio buffers, calibrated noise generation, and SNR-exact mixing.

All amplitudes are dimensionless floats with nominal range [-1, 1].
Noise generators are pure functions of (length, seed); the pink generator
uses Voss-McCartney multi-rate summation so no filter warm-up is needed.
"""

from __future__ import annotations

import wave
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    DegenerateInputError,
    EmptyBufferError,
    InsufficientNoiseError,
    ShapeError,
)

DEFAULT_SAMPLE_RATE = 16000

# SNR in dB; plain float at call sites, range-checked by experiment configs.
SnrDb = float

NOISE_RMS = 0.1  # generator output RMS; mixing rescales to the target power ratio
PINK_ROWS = 12   # dyadic rows; lowest knee 16000/2**12 ~ 3.9 Hz, below the 20 Hz fit band


@dataclass
class AudioClip:
    """Fixed-length mono waveform."""

    samples: np.ndarray
    sample_rate: int = DEFAULT_SAMPLE_RATE
    label: int | None = None

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if self.samples.ndim != 1:
            raise ShapeError(f"expected mono 1-D samples, got shape {self.samples.shape}")

    def __len__(self):
        return self.samples.shape[0]

    @property
    def duration(self) -> float:
        return len(self) / self.sample_rate


@dataclass
class NoiseProfile:
    """A source of 1-second noise chunks.

    kind is one of 'white', 'pink', 'file_backed'; file_backed profiles carry
    their source clips (each at least as long as the chunks drawn from them).
    """

    kind: str
    source_clips: list[AudioClip] = field(default_factory=list)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("white", "pink", "file_backed"):
            raise ValueError(f"unknown noise kind {self.kind!r}")
        if self.kind == "file_backed" and not self.source_clips:
            raise ValueError("file_backed profile needs at least one source clip")


def canonicalize(clip: AudioClip, duration_s: float = 1.0) -> AudioClip:
    """Return a copy padded (or truncated) to exactly duration_s seconds.

    Shorter clips are zero-padded at the tail; longer ones keep their head.
    """
    target = int(round(clip.sample_rate * duration_s))
    x = clip.samples
    if len(x) < target:
        x = np.concatenate([x, np.zeros(target - len(x))])
    elif len(x) > target:
        x = x[:target].copy()
    else:
        x = x.copy()
    return replace(clip, samples=x)


def signal_power(clip: AudioClip) -> float:
    """Mean-square power (1/N) * sum(s_i^2)."""
    x = clip.samples
    if x.size == 0:
        raise EmptyBufferError("cannot compute power of an empty clip")
    return float(np.mean(x * x))


def _rms_normalize(x: np.ndarray, rms: float) -> np.ndarray:
    p = np.sqrt(np.mean(x * x))
    if p == 0.0:
        raise DegenerateInputError("generated buffer has zero power")
    return x * (rms / p)


def generate_white(length: int, seed: int, sample_rate: int = DEFAULT_SAMPLE_RATE) -> AudioClip:
    """Gaussian white noise rescaled to RMS 0.1; deterministic for a seed."""
    if length <= 0:
        raise EmptyBufferError("noise length must be positive")
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(0,)))
    x = rng.standard_normal(length)
    return AudioClip(_rms_normalize(x, NOISE_RMS), sample_rate)


def generate_pink(length: int, seed: int, sample_rate: int = DEFAULT_SAMPLE_RATE) -> AudioClip:
    """1/f noise via Voss-McCartney row summation, RMS 0.1, seed-deterministic.

    Row k is white noise sample-held for 2**k samples; the equal-variance sum
    has power spectral density ~1/f between fs/2**PINK_ROWS and the Nyquist
    rolloff, covering the 20 Hz - 6 kHz validation band at 16 kHz.
    """
    if length <= 0:
        raise EmptyBufferError("noise length must be positive")
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(1,)))
    total = np.zeros(length)
    for k in range(PINK_ROWS):
        hold = 1 << k
        draws = rng.standard_normal((length + hold - 1) // hold)
        total += np.repeat(draws, hold)[:length]
    return AudioClip(_rms_normalize(total, NOISE_RMS), sample_rate)


def sample_noise_chunk(profile: NoiseProfile, length: int, rng: np.random.Generator) -> AudioClip:
    """Draw a noise chunk: fresh generation for white/pink, a uniformly random
    contiguous slice of a uniformly chosen source clip for file_backed.
    """
    if profile.kind == "white":
        return generate_white(length, int(rng.integers(0, 2**63 - 1)))
    if profile.kind == "pink":
        return generate_pink(length, int(rng.integers(0, 2**63 - 1)))
    idx = int(rng.integers(0, len(profile.source_clips)))
    clip = profile.source_clips[idx]
    if len(clip) < length:
        raise InsufficientNoiseError(
            f"source clip of {len(clip)} samples cannot supply {length}-sample chunk"
        )
    offset = int(rng.integers(0, len(clip) - length + 1))
    return AudioClip(clip.samples[offset : offset + length].copy(), clip.sample_rate)


def _component_scales(clean: AudioClip, noise: AudioClip, snr_db: float):
    if len(clean) != len(noise):
        raise ShapeError(f"length mismatch: clean {len(clean)} vs noise {len(noise)}")
    if clean.sample_rate != noise.sample_rate:
        raise ShapeError("sample-rate mismatch between clean and noise clips")
    if not np.isfinite(snr_db):
        raise DegenerateInputError("snr must be finite; use evaluate()'s clean path instead")
    p_clean = signal_power(clean)
    p_noise = signal_power(noise)
    if p_clean == 0.0 or p_noise == 0.0:
        raise DegenerateInputError("zero-power clean or noise input")
    a = np.sqrt(p_clean / (p_noise * 10.0 ** (snr_db / 10.0)))
    mix = clean.samples + a * noise.samples
    peak = np.max(np.abs(mix))
    g = min(1.0, 1.0 / peak) if peak > 0 else 1.0
    return a, g


def mix_components(clean: AudioClip, noise: AudioClip, snr_db: float):
    """Return (mixture, scaled_clean, scaled_noise) at exactly snr_db.

    The noise is scaled by a = sqrt(P_clean / (P_noise * 10^(snr/10))) and a
    single shared gain g = min(1, 1/max|mix|) is applied to the sum, so the
    clean-to-noise power ratio is preserved while no sample exceeds 1.0.
    """
    a, g = _component_scales(clean, noise, snr_db)
    scaled_clean = g * clean.samples
    scaled_noise = (g * a) * noise.samples
    # scale the sum, then clamp: g*(c + a*n) can overshoot 1.0 by one ulp
    out = np.clip(g * (clean.samples + a * noise.samples), -1.0, 1.0)
    mixed = AudioClip(out, clean.sample_rate, clean.label)
    return mixed, scaled_clean, scaled_noise


def mix_at_snr(clean: AudioClip, noise: AudioClip, snr_db: float) -> AudioClip:
    """Mix noise into clean at exactly snr_db (dB), never clipping."""
    mixed, _, _ = mix_components(clean, noise, snr_db)
    return mixed


def measured_snr_db(scaled_clean: np.ndarray, scaled_noise: np.ndarray) -> float:
    """Component SNR of an already-mixed pair, in dB."""
    pc = float(np.mean(scaled_clean**2))
    pn = float(np.mean(scaled_noise**2))
    return 10.0 * np.log10(pc / pn)


def read_wav(path) -> AudioClip:
    """Read a RIFF/WAVE file: 16-bit signed PCM, mono, 16 kHz only.

    Integer samples map to floats as s / 32768.
    """
    with wave.open(str(path), "rb") as w:
        channels = w.getnchannels()
        width = w.getsampwidth()
        rate = w.getframerate()
        n = w.getnframes()
        if channels != 1:
            raise ValueError(f"{path}: expected mono, got {channels} channels")
        if width != 2:
            raise ValueError(f"{path}: expected 16-bit PCM, got {8 * width}-bit")
        if rate != DEFAULT_SAMPLE_RATE:
            raise ValueError(f"{path}: expected {DEFAULT_SAMPLE_RATE} Hz, got {rate} (no resampling)")
        raw = w.readframes(n)
    ints = np.frombuffer(raw, dtype="<i2")
    return AudioClip(ints.astype(np.float64) / 32768.0, rate)


def write_wav(path, clip: AudioClip) -> None:
    """Write a 16-bit PCM mono WAV; samples are clipped to [-1, 1] first."""
    x = np.clip(clip.samples, -1.0, 1.0)
    ints = np.round(x * 32767.0).astype("<i2")
    with wave.open(str(path), "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(clip.sample_rate)
        w.writeframes(ints.tobytes())


