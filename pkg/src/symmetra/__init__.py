from symmetra.cli import main

__all__ = ["main"]
