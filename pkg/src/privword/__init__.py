__version__ = "0.1.0"

from . import bounds, engines, exceptions, harness, verify, words  # noqa: E402

__all__ = ["words", "engines", "bounds", "harness", "verify", "exceptions"]
