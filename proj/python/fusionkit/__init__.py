"""Python access to the fusionkit checks."""

from ._core import (
    FusionkitError,
    check_ids,
    exit_code,
    first_cohomology,
    fusion_report,
    group_order,
    higman_check,
    hom_set_sizes,
    negative_controls,
    run_checks,
    sylow_summary,
    wreath_report,
)

__all__ = [
    "FusionkitError",
    "check_ids",
    "exit_code",
    "first_cohomology",
    "fusion_report",
    "group_order",
    "higman_check",
    "hom_set_sizes",
    "negative_controls",
    "run_checks",
    "sylow_summary",
    "wreath_report",
]
