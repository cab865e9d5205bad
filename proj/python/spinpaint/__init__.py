"""Sparsity-based image inpainting by alternating projections."""

from ._spinpaint import (
    DimensionError,
    FormatError,
    Pattern,
    PlacementError,
    SpinpaintError,
    SupportError,
    SymmetryError,
    apply_mask,
    block_mask,
    derive_pattern,
    estimate_pattern,
    inpaint,
    inpaint_blind,
    pattern_error,
    project_data,
    project_sparse,
    psnr,
    read_mask,
    read_pattern,
    read_pgm,
    sparsify,
    stroke_mask,
    tv_reconstruct,
    write_mask,
    write_pattern,
    write_pgm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
