import logging

from .report import CheckResult, CHECKS, Report, check_bounds, default_radon_limit
from .scan import (
    Scan,
    ScanSummary,
    enumerate_classes,
    class_from_index,
    index_of_class,
    FILTERS,
)
from .search import GOALS, Annealer, SearchState, stochastic_search, search_many
from .examples import LineItem, verify_examples, format_items

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

__all__ = [
    "CheckResult",
    "CHECKS",
    "Report",
    "check_bounds",
    "default_radon_limit",
    "Scan",
    "ScanSummary",
    "enumerate_classes",
    "class_from_index",
    "index_of_class",
    "FILTERS",
    "GOALS",
    "Annealer",
    "SearchState",
    "stochastic_search",
    "search_many",
    "LineItem",
    "verify_examples",
    "format_items",
]
