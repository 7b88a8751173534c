"""Descent statistics of signed permutations.

Thin wrapper over the C++ core: signed permutations, descent/idescent
statistics under the natural and r orders, grid insertions, path and
insertion-type counts, the recurrence builders, and round-trip verification
of the marked bijections.
"""

from ._signedperm import (
    BijectionFamily,
    BijectionReport,
    Order,
    PermClass,
    ResourceLimitError,
    SignedPermutation,
    classify,
    count_insertion_types,
    count_paths,
    delete_square,
    des,
    descent_set,
    descent_vector,
    enumerate_family,
    enumeration_limit,
    eulerian_vector,
    family_size,
    fpf_by_recurrence,
    ides,
    insert_square,
    insertion_type,
    involution_by_recurrence,
    render_board,
    series_identity_holds,
    trace_path,
    two_sided_by_recurrence,
    two_sided_triangle,
    verify_bijection,
)

__all__ = [
    "BijectionFamily",
    "BijectionReport",
    "Order",
    "PermClass",
    "ResourceLimitError",
    "SignedPermutation",
    "classify",
    "count_insertion_types",
    "count_paths",
    "delete_square",
    "des",
    "descent_set",
    "descent_vector",
    "enumerate_family",
    "enumeration_limit",
    "eulerian_vector",
    "family_size",
    "fpf_by_recurrence",
    "ides",
    "insert_square",
    "insertion_type",
    "involution_by_recurrence",
    "render_board",
    "series_identity_holds",
    "trace_path",
    "two_sided_by_recurrence",
    "two_sided_triangle",
    "verify_bijection",
]
