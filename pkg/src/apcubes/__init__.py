"""Products of arithmetic progressions with one term removed that are perfect cubes."""

__version__ = "0.1.0"
