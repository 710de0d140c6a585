"""Exact discrete Clifford function theory on rational lattices."""

try:
    from ._dcl import apply, claim_ids, decompose, eval, kernel_dimension, verify
except ImportError:  # build-tree layout: the extension sits next to the package
    from _dcl import apply, claim_ids, decompose, eval, kernel_dimension, verify

__all__ = ["apply", "claim_ids", "decompose", "eval", "kernel_dimension", "verify"]
