# utils/table_export.py
import os

import pandas as pd


def multiplication_frame(algebra):
    """Basis-by-basis product table; row is the left factor."""
    basis = algebra.basis_elements()
    rows = [[str(x * y) for y in basis] for x in basis]
    return pd.DataFrame(rows, index=list(algebra.basis), columns=list(algebra.basis))


def coefficient_frame(algebra):
    """Same table holding coefficient vectors, so tables with different basis names compare."""
    basis = algebra.basis_elements()
    rows = [[tuple(str(c) for c in (x * y).to_vector()) for y in basis] for x in basis]
    return pd.DataFrame(rows, index=range(algebra.dim), columns=range(algebra.dim))


def export_csv(algebra, path):
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    multiplication_frame(algebra).to_csv(path)
    return path


def diff_tables(first, second):
    """Cells (by basis position) where two equal-size tables differ, labelled with first's names."""
    if first.dim != second.dim:
        raise ValueError(f"tables have different sizes {first.dim} and {second.dim}")
    a = coefficient_frame(first).stack()
    b = coefficient_frame(second).stack()
    mask = a != b
    shown_a = multiplication_frame(first).stack().values
    shown_b = multiplication_frame(second).stack().values
    frame = pd.DataFrame({
        "left": [first.basis[i] for i, _ in a.index],
        "right": [first.basis[j] for _, j in a.index],
        "first": shown_a,
        "second": shown_b,
    })
    return frame[mask.values].reset_index(drop=True)
