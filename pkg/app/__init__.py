"""hedet: Groebner-basis and graph-oracle checks of Hedetniemi-conjecture instances."""

__version__ = "1.0.0"
