"""Exact series engine for twisted quantum D-modules of projective space.

Reproduces the anticanonical-twist package for P^n at truncated-series
level: descendant data from the closed-form J-function, twisted
I-functions and mirror maps, second structure connections with their
metric and difference morphisms, truncated Laplace-transform solutions,
the quintic differential operators, Gamma-class/Riemann-Roch pairings
and the Hodge filtrations.  All arithmetic is exact (rational, or
polynomial in a formal pi*sqrt(-1) symbol) except the numeric
Gamma-class mode.
"""

__version__ = "0.1.0"
