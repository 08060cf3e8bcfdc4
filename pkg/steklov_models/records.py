"""
Emission backends for result records.

A command produces a list of flat records (dicts with a fixed field order)
plus optional metadata, then hands them to one or more backends::

    emit("warp", rows, out, backends=[JSONBackend(), LogBackend()],
         meta={"first_zero": w.first_zero})

All backends write floats with their shortest round-tripping representation,
so identical inputs give byte-identical output.
"""

import csv
import json
import logging
import math

logger = logging.getLogger("steklov_models.records")


class BackendError(Exception):
    """
    Exception raised for records a backend cannot write.
    """
    pass


def _plain(value):
    if isinstance(value, float) and not math.isfinite(value):
        raise BackendError(f"Cannot emit non-finite value {value}.")
    if hasattr(value, "item"):
        return value.item()
    return value


class Backend:
    """
    Base class for record emission.
    """

    def emit(self, name, records, out, meta=None):
        """
        Write the records.

        Args:
            name (str): Name of the command that produced them.
            records (list[dict]): Rows with identical keys.
            out: Text stream to write to.
            meta (dict, optional): Run-level values such as a first zero.
        """
        raise NotImplementedError("Subclasses must implement this method.")


class JSONBackend(Backend):
    """
    Writes one JSON document ``{"command": name, **meta, "records": [...]}``.
    """

    def emit(self, name, records, out, meta=None):
        document = {"command": name}
        document.update({k: _plain(v) for k, v in (meta or {}).items()})
        document["records"] = [{k: _plain(v) for k, v in r.items()} for r in records]
        out.write(json.dumps(document, indent=2) + "\n")


class CSVBackend(Backend):
    """
    Writes a header row followed by one row per record. Metadata is not part
    of the table and is logged instead.
    """

    def emit(self, name, records, out, meta=None):
        if not records:
            return
        writer = csv.DictWriter(out, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow({k: _plain(v) for k, v in record.items()})
        if meta:
            logger.info(f"{name}: {meta}")


class PlotDataBackend(Backend):
    """
    Whitespace-separated numeric columns for external plotting tools, with
    the column names and metadata as ``#`` comment lines. Non-numeric fields
    are dropped.
    """

    def emit(self, name, records, out, meta=None):
        out.write(f"# {name}\n")
        for key, value in (meta or {}).items():
            out.write(f"# {key} = {_plain(value)}\n")
        if not records:
            return
        columns = [
            k
            for k, v in records[0].items()
            if isinstance(_plain(v), (int, float)) and not isinstance(v, bool)
        ]
        out.write("# " + " ".join(columns) + "\n")
        for record in records:
            out.write(" ".join(repr(float(_plain(record[k]))) for k in columns) + "\n")


class LogBackend(Backend):
    """
    Backend that logs records. This is mainly useful for debugging.
    """

    def emit(self, name, records, out, meta=None):
        for record in records:
            logger.debug(f"{name}: {record}")
        logger.info(f"{name}: emitted {len(records)} records.")


BACKENDS = {
    "json": JSONBackend,
    "csv": CSVBackend,
    "plot-data": PlotDataBackend,
}


def backend_for(fmt: str) -> Backend:
    try:
        return BACKENDS[fmt]()
    except KeyError:
        raise BackendError(f"No backend for format {fmt!r}.") from None


def emit(name, records, out, backends, meta=None):
    """Hands the records to every backend in turn."""
    for backend in backends:
        backend.emit(name, records, out, meta)
