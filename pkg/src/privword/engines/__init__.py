from .base import CountRow, CountTable

__all__ = ["CountRow", "CountTable"]
