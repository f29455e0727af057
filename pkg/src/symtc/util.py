"""Canonical ordering helpers.

Every iteration order in the package derives from ``ckey`` so that searches,
certificates and serialized documents come out byte-identical across runs.
Labels may be ints, strings, or arbitrarily nested tuples of those (product
vertices are tuples, subdivision vertices are tuples of tuples, and so on).
"""


def ckey(x):
    """Total order key for heterogeneous, possibly nested labels."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, float):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, (tuple, list, frozenset, set)):
        if isinstance(x, (frozenset, set)):
            inner = sorted((ckey(m) for m in x))
        else:
            inner = [ckey(m) for m in x]
        return (2, tuple(inner))
    raise TypeError(f"label of unsupported type {type(x)!r}: {x!r}")


def csorted(items):
    """Sort labels canonically."""
    return sorted(items, key=ckey)


def name_of(members):
    """Canonical name of a finite set of labels: the ckey-sorted tuple."""
    return tuple(csorted(members))


def freeze(x):
    """Recursively turn lists (e.g. parsed JSON labels) into tuples."""
    if isinstance(x, list):
        return tuple(freeze(m) for m in x)
    return x


def thaw(x):
    """Recursively turn tuples back into lists for JSON output."""
    if isinstance(x, tuple):
        return [thaw(m) for m in x]
    return x
