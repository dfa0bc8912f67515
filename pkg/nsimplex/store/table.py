# -*- coding=utf-8 -*-
import enum
import logging
import os

import numpy as np

from nsimplex.dataset.error import DatasetError
from nsimplex.dataset.vecs import load_double_vecs, write_double_vecs
from nsimplex.definition.schema import table_validator
from nsimplex.htree.tree import HTree, build_tree
from nsimplex.metric.spec import MetricSpec
from nsimplex.simplex.base import build_base
from nsimplex.table.apex_table import ApexTable
from nsimplex.table.laesa import LaesaTable

from .error import ChecksumMismatchError, StoreError
from .pivots import pivots_from_sidecar, pivots_sidecar
from .sidecar import read_sidecar, write_sidecar

logger = logging.getLogger(__name__)

__all__ = ["TableKind", "save_table", "load_table", "rows_path"]


class TableKind(enum.Enum):
    LAESA = "laesa"
    APEX = "apex"
    TREE = "tree"


def rows_path(path):
    return os.path.splitext(str(path))[0] + ".dvecs"


def save_table(path, table, metric: MetricSpec):
    """
    Writes a YAML sidecar to `path`. LAESA and apex rows go to a float64 binary vector file next to it, trees
    are stored by their build parameters and shape only.
    """
    if isinstance(table, HTree):
        sidecar = {
            "kind": TableKind.TREE.value,
            "metric": metric.name,
            "count": len(table.points),
            "leaf-capacity": table.leaf_capacity,
            "tree-stats": dict(table.stats()._asdict()),
        }
    else:
        sidecar = {
            "kind": (TableKind.APEX if isinstance(table, ApexTable) else TableKind.LAESA).value,
            "metric": metric.name,
            "count": len(table.rows),
            "rows": os.path.basename(rows_path(path)),
            **pivots_sidecar(table.pivots),
        }
        if isinstance(table, ApexTable):
            sidecar["base-checksum"] = table.base.checksum

        if len(table.rows):
            write_double_vecs(rows_path(path), table.rows)
        else:
            open(rows_path(path), "wb").close()

    write_sidecar(path, sidecar)
    logger.info("Saved %s table to %s", sidecar["kind"], path)


def load_table(path, data: np.ndarray, metric: MetricSpec):
    """
    Loads a table saved by `save_table` for `data` (prepared for `metric`). Apex tables get their base rebuilt
    from the stored pivots and compared with the stored checksum.
    """
    sidecar = read_sidecar(path, table_validator)
    kind = TableKind(sidecar["kind"])

    if sidecar["metric"] != metric.name:
        raise StoreError(path, f"table was built for {sidecar['metric']}, not {metric.name}")
    if sidecar["count"] != len(data):
        raise StoreError(path, f"table holds {sidecar['count']} objects, dataset has {len(data)}")

    if kind == TableKind.TREE:
        if "leaf-capacity" not in sidecar or "tree-stats" not in sidecar:
            raise StoreError(path, "'leaf-capacity' and 'tree-stats' are required for trees")

        tree = build_tree(data, metric, sidecar["leaf-capacity"])
        if dict(tree.stats()._asdict()) != sidecar["tree-stats"]:
            raise StoreError(path, f"rebuilt tree {tree.stats()!r} differs from stored {sidecar['tree-stats']!r}")
        return tree

    for key in ["rows", "dims", "pivot-strategy", "pivot-points"]:
        if key not in sidecar:
            raise StoreError(path, f"{key!r} is required for {kind.value} tables")

    pivots = pivots_from_sidecar(path, sidecar, data.shape[1])

    try:
        rows = load_double_vecs(os.path.join(os.path.dirname(str(path)), sidecar["rows"])).values
    except DatasetError as e:
        raise StoreError(path, f"unable to load rows: {e!s}") from None

    if len(rows) != sidecar["count"] or (len(rows) and rows.shape[1] != sidecar["dims"]):
        raise StoreError(path, f"rows have shape {rows.shape}, expected {sidecar['count']} x {sidecar['dims']}")
    if not len(rows):
        rows = np.empty((0, sidecar["dims"]))
    object_ids = np.arange(len(rows))

    if kind == TableKind.LAESA:
        return LaesaTable(pivots, rows, object_ids)

    if "base-checksum" not in sidecar:
        raise StoreError(path, "'base-checksum' is required for apex tables")
    base = build_base(metric.distance_matrix(pivots.points))
    if base.checksum != sidecar["base-checksum"]:
        raise ChecksumMismatchError(path, sidecar["base-checksum"], base.checksum)

    return ApexTable(base, pivots, rows, object_ids)
