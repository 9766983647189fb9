"""Kernel selection: compiled extension when available, pure Python otherwise."""

try:
    from pracnum import _core as _impl
except ImportError:  # extension not built on this install
    from pracnum import _core_py as _impl

BACKEND = _impl.BACKEND
build_spf = _impl.build_spf
scan_f_sigma = _impl.scan_f_sigma
