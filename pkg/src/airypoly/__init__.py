"""Polynomials in the higher derivatives of the Airy functions.

``d^n Ai/dz^n = P_n(z) Ai(z) + Q_n(z) Ai'(z)`` with integer polynomials
``P_n``, ``Q_n``.  :mod:`airypoly.abrapoly` builds them exactly by several
independent routes; :mod:`airypoly.airynum` checks the Bessel-function
identities behind them numerically.
"""

__version__ = "0.1.0"
