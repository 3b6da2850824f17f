"""p-adic dynamics, elliptic curve arithmetic and streamline matching."""

import json

from ._core import (
    Padic,
    PadynError,
    embed,
    formal_expansion,
    invariants,
    iterate,
    l_coefficients,
    recover,
    run,
    same_side_of_zero,
    series_to_curve,
    tate_parameter,
    tate_reduce,
)


def cli(*args):
    """Run a subcommand and return its parsed JSON; raises PadynError on failure."""
    code, out, err = run([str(a) for a in args])
    if code != 0:
        try:
            payload = json.loads(out)
        except ValueError:
            raise PadynError("UsageError", err.strip()) from None
        raise PadynError(payload["error"], payload["message"])
    return json.loads(out)


__all__ = [
    "Padic",
    "PadynError",
    "cli",
    "embed",
    "formal_expansion",
    "invariants",
    "iterate",
    "l_coefficients",
    "recover",
    "run",
    "same_side_of_zero",
    "series_to_curve",
    "tate_parameter",
    "tate_reduce",
]
