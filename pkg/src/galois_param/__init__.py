"""Decide, certify or empirically support non-parametricity of regular
Galois extensions of Q(T).

Modules: ``algebra`` (exact polynomials), ``groups`` (permutation groups and
class arithmetic), ``numbertheory`` (prime divisors, ternary forms, conics),
``extensions`` (descriptors, builders, specialization), ``criteria``
(criterion evaluators and case studies) and ``cli``.
"""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
