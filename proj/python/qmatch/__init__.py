"""Exact q-series expansion and matching-coefficient verification.

Thin wrapper over the compiled _qmatch module. In an installed wheel the
extension lives inside this package; in a plain CMake build tree it sits
on sys.path as a top-level module, so fall back to that.
"""

try:
    from ._qmatch import (  # type: ignore[attr-defined]
        InsufficientOrderError,
        NonUnitLeadingError,
        OrderExceededError,
        QParseError,
        catalog_json,
        expand,
        list_catalog,
        scan,
        verify,
        verify_relation,
    )
except ImportError:  # pragma: no cover - build-tree layout
    from _qmatch import (  # type: ignore[no-redef]
        InsufficientOrderError,
        NonUnitLeadingError,
        OrderExceededError,
        QParseError,
        catalog_json,
        expand,
        list_catalog,
        scan,
        verify,
        verify_relation,
    )

__all__ = [
    "expand",
    "verify",
    "verify_relation",
    "scan",
    "list_catalog",
    "catalog_json",
    "QParseError",
    "NonUnitLeadingError",
    "InsufficientOrderError",
    "OrderExceededError",
]

__version__ = "1.0.0"
