"""Decision procedures for consecutive-factor orders on paths, words, and permutations."""

from factorder.decision import Decision, ResourceCapError

__all__ = ["Decision", "ResourceCapError"]
__version__ = "0.1.0"
