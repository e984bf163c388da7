from supercount._core import (
    affine_count,
    charpoly,
    count,
    decompose_prime,
    hasse_witt,
    jacobian,
    jacobian_order_g2,
    parse,
    smooth_count,
    sqrt_mod,
    validate,
)

__all__ = [
    "affine_count",
    "charpoly",
    "count",
    "decompose_prime",
    "hasse_witt",
    "jacobian",
    "jacobian_order_g2",
    "parse",
    "smooth_count",
    "sqrt_mod",
    "validate",
]
