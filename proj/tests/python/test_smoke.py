import math

import numpy as np
import pytest

import spinpaint


def scene(n=64, seed=3):
    rng = np.random.default_rng(seed)
    r, c = np.mgrid[0:n, 0:n]
    return 128 + 60 * np.sin(0.15 * r) * np.cos(0.1 * c) + rng.uniform(0, 20, (n, n))


def test_side_information_recovery():
    sparse, pattern = spinpaint.sparsify(scene(), "dct", 0.9)
    assert pattern.zero_count == int(0.9 * 64 * 64)
    mask = np.ones((64, 64), dtype=bool)
    mask[28:36, 20:28] = False
    out = spinpaint.inpaint(spinpaint.apply_mask(sparse, mask), mask, pattern, iterations=1000)
    assert spinpaint.psnr(out, sparse) >= 50
    np.testing.assert_array_equal(out[mask], sparse[mask])


def test_projections_are_idempotent():
    img = scene(32)
    pattern = spinpaint.derive_pattern(img, "fft", 0.8)
    once = spinpaint.project_sparse(img, pattern)
    np.testing.assert_allclose(spinpaint.project_sparse(once, pattern), once, atol=1e-9)


def test_blind_and_tv():
    img = scene(48)
    mask = spinpaint.block_mask(48, 48, count=3, block_size=6, seed=2) & spinpaint.stroke_mask(48, 48, 4)
    corrupted = spinpaint.apply_mask(img, mask)
    tv = spinpaint.tv_reconstruct(corrupted, mask)
    blind = spinpaint.inpaint_blind(corrupted, mask, "dct", 0.9, 50)
    np.testing.assert_array_equal(blind[mask], img[mask])
    assert math.isfinite(spinpaint.psnr(tv, img))
    est = spinpaint.estimate_pattern(corrupted, mask, "dct", 0.9)
    miss, fa = spinpaint.pattern_error(est, spinpaint.derive_pattern(img, "dct", 0.9))
    assert miss == fa


def test_file_round_trips(tmp_path):
    img = np.arange(35, dtype=float).reshape(5, 7) * 7
    spinpaint.write_pgm(img, str(tmp_path / "a.pgm"))
    np.testing.assert_array_equal(spinpaint.read_pgm(str(tmp_path / "a.pgm")), img)
    _, pattern = spinpaint.sparsify(scene(16), "fft", 0.7)
    assert spinpaint.Pattern.from_bytes(pattern.to_bytes()) == pattern
    spinpaint.write_pattern(pattern, str(tmp_path / "p.spin"))
    assert spinpaint.read_pattern(str(tmp_path / "p.spin")) == pattern


def test_errors_map_to_python():
    with pytest.raises(spinpaint.FormatError):
        spinpaint.Pattern.from_bytes(b"SPIN")
    with pytest.raises(spinpaint.SupportError):
        spinpaint.tv_reconstruct(np.zeros((4, 4)), np.zeros((4, 4), dtype=bool))
    with pytest.raises(ValueError):
        spinpaint.sparsify(scene(8), "wavelet", 0.5)
    assert spinpaint.psnr(np.zeros((2, 2)), np.zeros((2, 2))) == math.inf
