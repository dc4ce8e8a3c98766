"""Parsing, validation and views of the annotated connectome graph.

The on-disk layout is a pair of CSV files:

* ``neurons.csv`` with header ``id,class`` where class is one of
  ``sensor``, ``inter``, ``motor`` (case-insensitive);
* ``synapses.csv`` with header ``src,dst,kind[,weight]`` where kind is
  ``chem`` (directed) or ``elec`` (undirected), weight defaults to 1.0.

Lines starting with ``#`` are comments; a ``# provenance: ...`` comment in
``neurons.csv`` round-trips into :attr:`ConnectomeGraph.provenance`.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import NamedTuple

from .errors import DanglingEdge, MalformedRow, UnknownNeuronClass
from .graphs import DiGraph


class NeuronClass(Enum):
    SENSOR = "sensor"
    INTER = "inter"
    MOTOR = "motor"


class SynapseKind(Enum):
    CHEMICAL = "chem"
    ELECTRICAL = "elec"


class ElectricalPolicy(Enum):
    """How undirected electrical synapses enter a directed view."""

    SYMMETRIZE = "sym"
    DROP = "drop"

    # alias kept for callers thinking in terms of "chemical only"
    CHEMICAL_ONLY = "drop"


@dataclass(frozen=True)
class NeuronRecord:
    id: str
    neuron_class: NeuronClass
    index: int


@dataclass(frozen=True)
class SynapseRecord:
    src: str
    dst: str
    kind: SynapseKind
    weight: float = 1.0


@dataclass(frozen=True)
class ConnectomeGraph:
    """Validated, immutable connectome: neurons plus canonicalized synapses.

    Neuron ``index`` equals the record's position, a bijection onto 0..n-1.
    Electrical synapses are stored with ``src < dst``; duplicate
    (src, dst, kind) rows have already been merged by summing weights.
    """

    neurons: tuple[NeuronRecord, ...]
    synapses: tuple[SynapseRecord, ...]
    provenance: str = ""
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index: dict[str, int] = {}
        for i, rec in enumerate(self.neurons):
            if rec.id in index:
                raise MalformedRow(f"duplicate neuron id {rec.id!r}")
            if rec.index != i:
                raise MalformedRow(f"neuron {rec.id!r} has index {rec.index}, expected {i}")
            index[rec.id] = i
        for syn in self.synapses:
            for endpoint in (syn.src, syn.dst):
                if endpoint not in index:
                    raise DanglingEdge(f"synapse references undeclared neuron {endpoint!r}")
            if syn.kind is SynapseKind.ELECTRICAL:
                if syn.src == syn.dst:
                    raise MalformedRow(f"electrical self-loop on {syn.src!r}")
                if syn.src > syn.dst:
                    raise MalformedRow(f"electrical synapse {syn.src!r}->{syn.dst!r} not canonical")
            if not (math.isfinite(syn.weight) and syn.weight >= 0):
                raise MalformedRow(f"synapse {syn.src!r}->{syn.dst!r} has invalid weight {syn.weight}")
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.neurons)

    def index_of(self, neuron_id: str) -> int:
        return self._index[neuron_id]

    def neurons_of_class(self, cls: NeuronClass) -> list[NeuronRecord]:
        return [rec for rec in self.neurons if rec.neuron_class is cls]


class DirectedView(NamedTuple):
    graph: DiGraph
    dropped_self_loops: int


def _read_rows(source) -> list[tuple[int, list[str]]]:
    """Decode a CSV source into (line_number, cells) rows, skipping comments."""
    if isinstance(source, (str, Path)) and "\n" not in str(source):
        text = Path(source).read_text(encoding="utf-8")
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    elif hasattr(source, "read"):
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    else:
        text = str(source)
    rows = []
    reader = csv.reader(io.StringIO(text))
    for cells in reader:
        line = reader.line_num
        if not cells or not any(c.strip() for c in cells):
            continue
        if cells[0].lstrip().startswith("#"):
            rows.append((line, cells))  # comments kept so provenance can be read
            continue
        rows.append((line, [c.strip() for c in cells]))
    return rows


def _canonical_synapse(src: str, dst: str, kind: SynapseKind) -> tuple[str, str]:
    if kind is SynapseKind.ELECTRICAL and src > dst:
        return dst, src
    return src, dst


def parse_connectome(neurons_source, synapses_source, provenance: str | None = None) -> ConnectomeGraph:
    """Parse the two-file CSV layout into a validated :class:`ConnectomeGraph`.

    Sources may be paths, bytes, text, or binary file objects. Duplicate
    (src, dst, kind) rows merge by summing their weights. Errors carry the
    offending physical line number.
    """
    neurons: list[NeuronRecord] = []
    seen_ids: dict[str, int] = {}
    file_provenance = ""

    header_seen = False
    for line, cells in _read_rows(neurons_source):
        if cells[0].lstrip().startswith("#"):
            comment = ",".join(cells).lstrip("# ").strip()
            if comment.lower().startswith("provenance:"):
                file_provenance = comment.split(":", 1)[1].strip()
            continue
        if not header_seen:
            if [c.lower() for c in cells] != ["id", "class"]:
                raise MalformedRow("expected header 'id,class'", line)
            header_seen = True
            continue
        if len(cells) != 2:
            raise MalformedRow(f"expected 2 columns, got {len(cells)}", line)
        nid, cls_text = cells
        if not nid:
            raise MalformedRow("empty neuron id", line)
        if nid in seen_ids:
            raise MalformedRow(f"duplicate neuron id {nid!r}", line)
        try:
            cls = NeuronClass(cls_text.lower())
        except ValueError:
            raise UnknownNeuronClass(f"unknown neuron class {cls_text!r}", line) from None
        seen_ids[nid] = len(neurons)
        neurons.append(NeuronRecord(nid, cls, len(neurons)))
    if not header_seen:
        raise MalformedRow("neurons file has no header row")

    merged: dict[tuple[str, str, SynapseKind], float] = {}
    header_seen = False
    for line, cells in _read_rows(synapses_source):
        if cells[0].lstrip().startswith("#"):
            continue
        if not header_seen:
            lowered = [c.lower() for c in cells]
            if lowered not in (["src", "dst", "kind", "weight"], ["src", "dst", "kind"]):
                raise MalformedRow("expected header 'src,dst,kind[,weight]'", line)
            header_seen = True
            continue
        if len(cells) not in (3, 4):
            raise MalformedRow(f"expected 3 or 4 columns, got {len(cells)}", line)
        src, dst, kind_text = cells[0], cells[1], cells[2]
        try:
            kind = SynapseKind(kind_text.lower())
        except ValueError:
            raise MalformedRow(f"unknown synapse kind {kind_text!r}", line) from None
        weight = 1.0
        if len(cells) == 4 and cells[3] != "":
            try:
                weight = float(cells[3])
            except ValueError:
                raise MalformedRow(f"non-numeric weight {cells[3]!r}", line) from None
        if not (math.isfinite(weight) and weight >= 0):
            raise MalformedRow(f"weight must be finite and nonnegative, got {weight}", line)
        for endpoint in (src, dst):
            if endpoint not in seen_ids:
                raise DanglingEdge(f"edge references undeclared neuron {endpoint!r}", line)
        if kind is SynapseKind.ELECTRICAL and src == dst:
            raise MalformedRow(f"electrical self-loop on {src!r}", line)
        src, dst = _canonical_synapse(src, dst, kind)
        key = (src, dst, kind)
        merged[key] = merged.get(key, 0.0) + weight
    if not header_seen:
        raise MalformedRow("synapses file has no header row")

    synapses = tuple(
        SynapseRecord(src, dst, kind, weight)
        for (src, dst, kind), weight in sorted(merged.items(), key=lambda kv: (kv[0][2].value, kv[0][0], kv[0][1]))
    )
    return ConnectomeGraph(
        neurons=tuple(neurons),
        synapses=synapses,
        provenance=provenance if provenance is not None else file_provenance,
    )


def serialize_connectome(g: ConnectomeGraph) -> tuple[str, str]:
    """Render (neurons_csv, synapses_csv) in canonical form.

    ``parse_connectome(*serialize_connectome(g)) == g`` for every valid graph.
    """
    neuron_lines = []
    if g.provenance:
        neuron_lines.append(f"# provenance: {g.provenance}")
    neuron_lines.append("id,class")
    neuron_lines.extend(f"{rec.id},{rec.neuron_class.value}" for rec in g.neurons)

    synapse_lines = ["src,dst,kind,weight"]
    ordered = sorted(g.synapses, key=lambda s: (s.kind.value, s.src, s.dst))
    synapse_lines.extend(f"{s.src},{s.dst},{s.kind.value},{s.weight!r}" for s in ordered)
    return "\n".join(neuron_lines) + "\n", "\n".join(synapse_lines) + "\n"


def write_connectome(g: ConnectomeGraph, directory) -> tuple[Path, Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    neurons_csv, synapses_csv = serialize_connectome(g)
    neurons_path = directory / "neurons.csv"
    synapses_path = directory / "synapses.csv"
    neurons_path.write_text(neurons_csv, encoding="utf-8")
    synapses_path.write_text(synapses_csv, encoding="utf-8")
    return neurons_path, synapses_path


def read_connectome(directory, provenance: str | None = None) -> ConnectomeGraph:
    directory = Path(directory)
    return parse_connectome(directory / "neurons.csv", directory / "synapses.csv", provenance)


def neuron_class_counts(g: ConnectomeGraph) -> dict[NeuronClass, int]:
    counts = {cls: 0 for cls in NeuronClass}
    for rec in g.neurons:
        counts[rec.neuron_class] += 1
    return counts


def directed_view(g: ConnectomeGraph, policy: ElectricalPolicy = ElectricalPolicy.SYMMETRIZE) -> DirectedView:
    """Lower the connectome to a simple digraph over neuron indices.

    Chemical synapses become directed edges; electrical ones are either
    emitted in both directions or dropped, per ``policy``. Parallel edges
    collapse with summed weight and self-loops are removed (counted).
    """
    graph = DiGraph(g.n)
    dropped_self_loops = 0
    for syn in g.synapses:
        u, v = g.index_of(syn.src), g.index_of(syn.dst)
        if syn.kind is SynapseKind.CHEMICAL:
            if u == v:
                dropped_self_loops += 1
                continue
            graph.add_edge(u, v, syn.weight)
        elif policy is ElectricalPolicy.SYMMETRIZE:
            graph.add_edge(u, v, syn.weight)
            graph.add_edge(v, u, syn.weight)
    return DirectedView(graph, dropped_self_loops)
