# basic.py

from fractions import Fraction


def eulerian_indicator(g):
    """1 when every node has even degree (multiplicities counted), else 0."""
    return Fraction(int(all(deg % 2 == 0 for deg in g.degrees())))


def simple_support_param(g):
    """2 ** -(number of parallel classes)."""
    return Fraction(1, 2 ** len(g.edges))
