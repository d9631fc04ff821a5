"""Gamified zero-waste recommender.

Country plastic-waste standings, difficulty-rated task recommendations with
a point system, and case-aware word statistics (chi-squared independence
test) for comment corpora. Served over HTTP or driven from the CLI.
"""

__version__ = "0.1.0"
