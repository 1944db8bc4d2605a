"""Eulerian polynomials over the Weyl groups A, B, D and their signed refinements."""
from .closed_forms import Family, eulerian_a, eulerian_b, eulerian_d, polynomial, signed_gf
from .enumeration import DistTable, brute_distribution, iter_group, iter_subset
from .group import GroupId, SignClass, SignedPermutation, StatKind, parse_window, sign_of, statistic
from .poly import BiPoly, UniPoly

__all__ = [
    "BiPoly", "DistTable", "Family", "GroupId", "SignClass", "SignedPermutation", "StatKind",
    "UniPoly", "brute_distribution", "eulerian_a", "eulerian_b", "eulerian_d", "iter_group",
    "iter_subset", "parse_window", "polynomial", "sign_of", "signed_gf", "statistic",
]
