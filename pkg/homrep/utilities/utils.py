# utils.py

import os
from fractions import Fraction
from math import lcm

import numpy as np
from tqdm import tqdm

from homrep.utilities.errors import ContractViolation


def get_root_directory():
    # Get the current file's directory
    current_file_directory = os.path.dirname(os.path.abspath(__file__))

    # Find the first occurrence of "homrep" from the right
    homrep_index = current_file_directory.rfind("homrep")

    if homrep_index != -1:
        return current_file_directory[:homrep_index + len("homrep")]
    else:
        raise ValueError("The 'homrep' directory was not found in the path.")


def parse_rational(text):
    """Parse `p/q`, an integer, or a decimal string into an exact Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, (int, float)):
        # floats convert exactly; callers wanting a short rational snap later
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ContractViolation(f"not a rational number: {text!r}") from e


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value):
    return f"{float(value):.12g}"


def integer_row(row):
    """Scale a row of Fractions by the lcm of its denominators."""
    scale = 1
    for x in row:
        scale = lcm(scale, Fraction(x).denominator)
    return [int(Fraction(x) * scale) for x in row]


def make_rng(seed):
    return np.random.default_rng(seed)


def pbar(iterable, desc=None, total=None, verbose=False):
    if not verbose:
        return iterable
    return tqdm(iterable, desc=desc, total=total, leave=False)
