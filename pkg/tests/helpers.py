import os

from permutolattice.core.perm import parse_permutation

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def P(text):
    return parse_permutation(text)


def data_path(name):
    return os.path.join(DATA_DIR, name)
