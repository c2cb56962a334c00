"""Exact solver and lemma checker for D1*x^2 + D2^m = 2^(n+2)."""

from rnkit.classifier import Classification, Instance, Solution, brute_force, classify, scan
from rnkit.qforms import LeastSolution, QFInstance, QFSolution, least_solution

__all__ = [
    "Classification",
    "Instance",
    "LeastSolution",
    "QFInstance",
    "QFSolution",
    "Solution",
    "brute_force",
    "classify",
    "least_solution",
    "scan",
]

__version__ = "0.1.0"
