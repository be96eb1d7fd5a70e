"""2-D person maps via classical (Torgerson) multidimensional scaling.

Similarities become distances through d = sqrt(2 * (1 - s)), the Euclidean
distance between standardized vectors when s is a correlation — a proper
metric, unlike 1 - s. Classical MDS is deterministic: double-center the
squared distances, take the top eigenpairs, and fix each axis sign so its
largest-magnitude coordinate is positive. No iteration, no initialization.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .similarity import SimilarityMatrix


@dataclass(frozen=True)
class DistanceMatrix:
    persons: tuple[str, ...]
    d: np.ndarray
    imputed: tuple[tuple[int, int], ...] = ()

    def imputed_pairs(self) -> list[tuple[str, str]]:
        return [(self.persons[i], self.persons[j]) for i, j in self.imputed]


@dataclass(frozen=True)
class Embedding2D:
    persons: tuple[str, ...]
    coords: tuple[tuple[float, ...], ...]
    stress: float
    eigenvalues: tuple[float, ...] = ()

    def diagnostics(self, distance: DistanceMatrix | None = None) -> dict:
        return {
            "stress": self.stress,
            "eigenvalues": list(self.eigenvalues),
            "imputed_cells": (
                [list(pair) for pair in distance.imputed_pairs()] if distance else []
            ),
        }


def to_distance(matrix: SimilarityMatrix) -> DistanceMatrix:
    """d[i][j] = sqrt(2 * (1 - s[i][j])), s clamped to [-1, 1].

    UNDEFINED similarities are imputed as s = 0 and flagged; the diagonal
    is always distance 0, never imputed.
    """
    k = len(matrix.persons)
    d = np.zeros((k, k))
    imputed: list[tuple[int, int]] = []
    for i in range(k):
        for j in range(i + 1, k):
            s = matrix.values[i][j]
            if s is None:
                s = 0.0
                imputed.append((i, j))
            s = min(1.0, max(-1.0, s))
            d[i, j] = d[j, i] = np.sqrt(2.0 * (1.0 - s))
    return DistanceMatrix(
        persons=matrix.persons, d=d, imputed=tuple(imputed)
    )


def _fix_signs(coords: np.ndarray) -> np.ndarray:
    # Per-axis reflection is the only eigendecomposition ambiguity left;
    # pin it by making each axis' largest-|value| entry positive.
    out = coords.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        i = int(np.argmax(np.abs(col)))
        if col[i] < 0:
            out[:, j] = -col
    return out


def classical_mds(distance: DistanceMatrix, dim: int = 2) -> Embedding2D:
    """Torgerson MDS of a symmetric distance matrix into `dim` axes.

    Negative eigenvalues (non-Euclidean residue, e.g. after imputation) are
    clamped to 0. Stress is the normalized RMS discrepancy between the
    input and embedded pairwise distances; all-zero input embeds every
    point at the origin with stress 0.
    """
    d = np.asarray(distance.d, dtype=float)
    k = d.shape[0]
    if k == 0:
        raise ValueError("empty distance matrix")
    if k == 1:
        return Embedding2D(
            persons=distance.persons,
            coords=((0.0,) * dim,),
            stress=0.0,
            eigenvalues=(0.0,),
        )

    j = np.eye(k) - np.full((k, k), 1.0 / k)
    b = -0.5 * j @ (d * d) @ j
    evals, evecs = np.linalg.eigh(b)
    order = np.argsort(evals)[::-1]
    evals = evals[order]
    evecs = evecs[:, order]

    top = np.clip(evals[:dim], 0.0, None)
    coords = evecs[:, :dim] * np.sqrt(top)
    if dim > k:
        coords = np.pad(coords, ((0, 0), (0, dim - k)))
    # exact eigenvectors are already centered; this only removes fp noise
    # (and the ones-direction leak when the top-dim includes a ~0 eigenvalue)
    coords = coords - coords.mean(axis=0)
    coords = _fix_signs(coords)

    diff = coords[:, None, :] - coords[None, :, :]
    embedded = np.sqrt((diff**2).sum(axis=2))
    iu = np.triu_indices(k, 1)
    denom = float((d[iu] ** 2).sum())
    if denom == 0.0:
        stress = 0.0
    else:
        stress = float(np.sqrt(((d[iu] - embedded[iu]) ** 2).sum() / denom))

    return Embedding2D(
        persons=distance.persons,
        coords=tuple(tuple(float(v) for v in row) for row in coords),
        stress=stress,
        eigenvalues=tuple(float(v) for v in evals),
    )


def write_embedding_csv(embedding: Embedding2D, fp: TextIO) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["person", "x", "y"])
    for person, xy in zip(embedding.persons, embedding.coords):
        writer.writerow([person, *(repr(v) for v in xy)])
