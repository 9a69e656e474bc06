import numpy as np
import pytest


def rel_err(a, b, floor=1e-300):
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    denom = np.maximum(np.maximum(np.abs(a), np.abs(b)), floor)
    return float(np.max(np.abs(a - b) / denom))


@pytest.fixture
def rng():
    return np.random.default_rng(1729)


def disk_samples(rng, n, radius=0.95):
    pts = []
    while len(pts) < n:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) < radius:
            pts.append(z)
    return np.array(pts)
