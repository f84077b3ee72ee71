"""Exact-arithmetic engine for Heisenberg-Weil representations of finite
unitary groups, the (Sp_2n, O_2^-) Howe correspondence, and twisted
Lefschetz point-count verification."""

__version__ = "0.1.0"
