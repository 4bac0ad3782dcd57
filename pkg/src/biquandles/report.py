"""Rendering of verification matrices: delimited cells plus overview figures.

``write_report`` drops three files into the report directory:

* ``cells.csv``    one row per matrix cell,
* ``matrix.png``   a pass/fail heatmap, algebras by (diagram, check) columns,
* ``summary.txt``  the one-line totals.

matplotlib is imported lazily (Agg backend) so the library itself never needs
a display.
"""

from __future__ import annotations

import csv
import json
import os

from .verify import VerificationMatrix


def write_cells_csv(matrix: VerificationMatrix, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["algebra", "diagram", "check", "passed", "detail"])
        for cell in matrix.cells:
            writer.writerow(
                [
                    cell.algebra,
                    cell.diagram,
                    cell.check,
                    "1" if cell.passed else "0",
                    json.dumps(cell.detail) if cell.detail else "",
                ]
            )


def write_heatmap(matrix: VerificationMatrix, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    algebras = sorted({c.algebra for c in matrix.cells})
    columns = sorted({(c.diagram, c.check) for c in matrix.cells})
    col_index = {c: i for i, c in enumerate(columns)}
    row_index = {a: i for i, a in enumerate(algebras)}
    grid = [[1.0] * len(columns) for _ in algebras]
    for cell in matrix.cells:
        grid[row_index[cell.algebra]][col_index[(cell.diagram, cell.check)]] = (
            1.0 if cell.passed else 0.0
        )
    height = max(2.5, 0.18 * len(algebras) + 1.5)
    width = max(4.0, 0.25 * len(columns) + 2.0)
    fig, ax = plt.subplots(figsize=(width, height))
    ax.imshow(grid, aspect="auto", cmap="RdYlGn", vmin=0.0, vmax=1.0)
    ax.set_yticks(range(len(algebras)))
    ax.set_yticklabels(algebras, fontsize=5)
    ax.set_xticks(range(len(columns)))
    ax.set_xticklabels([f"{d}:{chk}" for d, chk in columns], rotation=90, fontsize=5)
    status = "all passed" if matrix.passed else f"{len(matrix.failures())} FAILED"
    ax.set_title(f"suite {matrix.suite} (seed {matrix.seed}): {status}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(matrix: VerificationMatrix, directory: str) -> dict:
    os.makedirs(directory, exist_ok=True)
    csv_path = os.path.join(directory, "cells.csv")
    png_path = os.path.join(directory, "matrix.png")
    txt_path = os.path.join(directory, "summary.txt")
    write_cells_csv(matrix, csv_path)
    write_heatmap(matrix, png_path)
    with open(txt_path, "w") as fh:
        fh.write(
            f"suite={matrix.suite} seed={matrix.seed} cells={len(matrix.cells)} "
            f"failures={len(matrix.failures())} elapsed={matrix.elapsed:.2f}s\n"
        )
    return {"cells_csv": csv_path, "matrix_png": png_path, "summary": txt_path}
