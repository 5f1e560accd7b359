"""Kernel selection: compiled speedups when available, pure Python otherwise.

Set ``ALEXMOD_PURE=1`` to force the pure kernel (used by the parity tests
and the benchmark).
"""

import os

if os.environ.get("ALEXMOD_PURE"):
    from alexmod import _purekernel as _impl
else:
    try:
        from alexmod import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from alexmod import _purekernel as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pmul = _impl.pmul
pscale = _impl.pscale
pconj = _impl.pconj
padd_mod = _impl.padd_mod
pmul_mod = _impl.pmul_mod
pscale_mod = _impl.pscale_mod
vadd_scaled = _impl.vadd_scaled
vscale = _impl.vscale
