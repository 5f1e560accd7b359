"""Exact first Alexander Z[Z]-module toolkit.

Computes module invariants of virtual-link diagrams and presentation
matrices over Z[t,t^-1], and realizes suitable presentations back as
Wirtinger groups and disk-arc presented ribbon surface-links.
"""

__version__ = "0.1.0"
