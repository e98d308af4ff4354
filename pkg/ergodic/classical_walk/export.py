"""Text and CSV exports of configuration graphs and distributions."""

import csv
import io

import numpy as np

from ergodic.classical_walk.board import ConfigGraph
from ergodic.exceptions import PreconditionError
from ergodic.hamiltonian import format_number


def edge_list_text(graph: ConfigGraph) -> str:
	"""One ``u v`` line per edge, node ids ascending."""
	return ''.join(f'{u} {v}\n' for u, v in graph.edges())


def _csv(header: list[str], rows: list[list[str]]) -> str:
	buffer = io.StringIO()
	writer = csv.writer(buffer, lineterminator='\n')
	writer.writerow(header)
	writer.writerows(rows)
	return buffer.getvalue()


def node_table_csv(graph: ConfigGraph) -> str:
	"""``node-id,columns`` with the columns of each row space separated."""
	return _csv(['node-id', 'columns'], [[str(i), str(node)] for i, node in enumerate(graph.nodes)])


def distribution_csv(graph: ConfigGraph, probabilities: np.ndarray) -> str:
	"""``node-id,probability`` with 17 significant digits."""
	if len(probabilities) != len(graph):
		raise PreconditionError('one probability per node', f'{len(probabilities)} values for {len(graph)} nodes')
	return _csv(['node-id', 'probability'], [[str(i), format_number(p)] for i, p in enumerate(probabilities)])
