"""Schnyder-type 5c-structures on triangulations of the pentagon.

Thin convenience wrapper around the compiled `_fivec` extension: instance
loading/generation, the construction pipeline, validators and the
5c-barycentric drawing, exchanging the same JSON documents as the CLI.
"""

try:
    from ._fivec import (  # noqa: F401
        FivecError,
        Instance,
        construct,
        d5,
        d5_prime,
        draw,
        generate,
        is_5c,
        load,
    )
except ImportError:  # running from a build tree with the module on sys.path
    from _fivec import (  # noqa: F401
        FivecError,
        Instance,
        construct,
        d5,
        d5_prime,
        draw,
        generate,
        is_5c,
        load,
    )

__all__ = [
    "FivecError",
    "Instance",
    "construct",
    "d5",
    "d5_prime",
    "draw",
    "generate",
    "is_5c",
    "load",
]
