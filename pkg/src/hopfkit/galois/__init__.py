"""Hopf-Galois checks: coinvariants, the canonical map, smash products and torsor charts."""

from .finite import (
    CanonicalMapReport, Coinvariants, FPCoinvariants, SmashProduct, Verdict, balanced_tensor,
    can_image, canonical_map, coinvariants, smash_product,
)
from .torsor import (
    CHARTS, Chart, ChartReport, TorsorReport, chart_report, cover_certificate,
    local_triviality_report, span_contains,
)

__all__ = [
    "CHARTS", "CanonicalMapReport", "Chart", "ChartReport", "Coinvariants", "FPCoinvariants",
    "SmashProduct", "TorsorReport", "Verdict", "balanced_tensor", "can_image", "canonical_map",
    "chart_report", "coinvariants", "cover_certificate", "local_triviality_report",
    "smash_product", "span_contains",
]
