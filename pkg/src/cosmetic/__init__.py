"""Obstructions to purely cosmetic surgery from genus, braid index and braid words."""

from .braid import BraidWord, Pattern, parse_braid
from .bennequin import BandWord, parse_bands
from .jones import bracket_state_sum, bracket_tl, jones, jones_span
from .obstruction import KnotProfile, gate

__all__ = [
    "BraidWord",
    "BandWord",
    "Pattern",
    "parse_braid",
    "parse_bands",
    "bracket_state_sum",
    "bracket_tl",
    "jones",
    "jones_span",
    "KnotProfile",
    "gate",
]

__version__ = "0.1.0"
