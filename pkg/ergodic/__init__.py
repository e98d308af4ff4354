"""
Ergodic Computer Toolkit

Simulator and verification suite for the autonomous ergodic quantum computer:
lattice Hamiltonians, the free-fermion clock walk, holonomic gate families,
effective-Hamiltonian certificates, circuit layouts and the classical
chessboard walk.
"""

from ergodic.exceptions import ErgodicError
from ergodic.settings import DEFAULT_LIMITS, Limits

__version__ = '0.1.1'

__all__ = [
	'DEFAULT_LIMITS',
	'ErgodicError',
	'Limits',
	'__version__',
]
