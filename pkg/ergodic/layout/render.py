"""Text-art stripe maps."""

from ergodic.layout.stripes import CircuitLayout, StripeKind, StripeSpec

EMPTY = '.'


def _glyph(stripe: StripeSpec) -> str:
	if stripe.kind == StripeKind.ONE_QUBIT:
		return stripe.axis or '?'
	if stripe.kind == StripeKind.TWO_QUBIT:
		return 'c'
	return (stripe.block or '?')[0].upper()


def render_text(layout: CircuitLayout) -> str:
	"""
	Draw one line per layout row and one character per column of the region.

	Rows holding logical qubits are labelled ``q<i>``; the header marks every
	tenth column.
	"""
	width = max([layout.spec.k] + [stripe.c_end for stripe in layout.stripes])
	if layout.qubits:
		rows = list(range(1, 2 * layout.qubits + 1))
	elif layout.stripes:
		rows = list(range(min(min(s.rows) for s in layout.stripes), max(max(s.rows) for s in layout.stripes) + 1))
	else:
		rows = []

	grid = {row: [EMPTY] * width for row in rows}
	for stripe in layout.stripes:
		for row in stripe.rows:
			if row not in grid:
				continue
			for column in range(max(stripe.c_start, 1), min(stripe.c_end, width) + 1):
				grid[row][column - 1] = _glyph(stripe)

	header = ''.join('|' if column % 10 == 0 else ' ' for column in range(1, width + 1))
	lines = [f'{"":>8} {header}']
	for row in rows:
		label = f'q{(row + 1) // 2}' if layout.qubits else ''
		lines.append(f'{label:>3} {layout.chain_row(row):>4} {"".join(grid[row])}')
	return '\n'.join(lines) + '\n'
