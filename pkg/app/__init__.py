"""app package for the Mahonian identity verifier."""

__all__ = ["main", "cli", "routes", "application", "domain", "infrastructure", "core"]
