"""Quotients module - Motore dei quozienti, annotazioni standard e famiglie con nome."""

from singstar.quotients.engine import (
    ChainSpec,
    CurveAction,
    CurveSpec,
    FixedPointSpec,
    InvolutionType,
    IsolatedPoint,
    QuotientResult,
    blow_down,
    chain_quotient_involution,
    chain_quotient_order3,
    curve_image_weight,
    quotient_plumbing,
    star_quotient,
)
from singstar.quotients.actions import InvolutionKind, involution_action, rotation_action

__all__ = [
    "ChainSpec",
    "CurveAction",
    "CurveSpec",
    "FixedPointSpec",
    "InvolutionType",
    "IsolatedPoint",
    "QuotientResult",
    "blow_down",
    "chain_quotient_involution",
    "chain_quotient_order3",
    "curve_image_weight",
    "quotient_plumbing",
    "star_quotient",
    "InvolutionKind",
    "involution_action",
    "rotation_action",
]
