"""
Box notation for the terminal.

Every box is a frame with its label in the top edge, a header row with its discourse referents and one line per
condition. Complex conditions draw their boxes inside the frame, segmented boxes draw their members side by side
followed by the discourse relations. The main box comes first, the presuppositions follow in label order.
"""
from collections import namedtuple

from pydrs.conf import settings
from pydrs.core import models
from pydrs.referee.structure import build_box_structure

Charset = namedtuple('Charset', [
	'top_left', 'top_right', 'bottom_left', 'bottom_right', 'horizontal', 'vertical', 'tee_left', 'tee_right',
	'symbols',
])

UNICODE = Charset('┌', '┐', '└', '┘', '─', '│', '├', '┤', {
	models.NOT: '¬', models.POS: '◇', models.NEC: '□', models.IMP: '⇒',
	'EQU': '=', 'NEQ': '≠', 'APX': '≈', 'LES': '<', 'LEQ': '≤', 'TPR': '<',
})

ASCII = Charset('+', '+', '+', '+', '-', '|', '+', '+', {
	models.NOT: 'NOT', models.POS: '<>', models.NEC: '[]', models.IMP: '=>',
	'EQU': '=', 'NEQ': '!=', 'APX': '~', 'LES': '<', 'LEQ': '<=', 'TPR': '<',
})


def _width(block):
	return max((len(line) for line in block), default=0)


class BoxRenderer:
	"""
	Renders one box structure. A box reached a second time is shown by its label only.

	:param structure: Box structure of a valid form.
	:param width: Maximum line width. Parts drawn side by side are stacked when they do not fit.
	:param ascii: Use ASCII characters only.
	"""

	def __init__(self, structure, width=None, ascii=False):
		self.structure = structure
		self.width = width
		self.charset = ASCII if ascii else UNICODE
		self.drawn = set()

	def render(self):
		blocks = [self.box(self.structure.main, 0)]
		blocks.extend(self.box(label, 0) for label in self.structure.presuppositions)
		return '\n\n'.join('\n'.join(line.rstrip() for line in block) for block in blocks) + '\n'

	def box(self, label, depth):
		if label in self.drawn:
			return [label]
		self.drawn.add(label)

		box = self.structure[label]
		if box.is_segmented:
			body = self.beside([self.box(member, depth + 1) for member in box.members], depth)
			body.extend(self.condition(relation, depth)[0] for relation in box.relations)
			return self.frame(label, None, body)

		body = list()
		for clause in box.conditions:
			body.extend(self.condition(clause, depth))
		return self.frame(label, ' '.join(box.referents), body)

	def frame(self, label, header, body):
		chars = self.charset
		inner = max(len(header or ''), _width(body), len(label) + 2)
		lines = [
			chars.top_left + chars.horizontal + ' {} '.format(label) +
			chars.horizontal * (inner - len(label) - 1) + chars.top_right
		]
		if header is not None:
			lines.append('{0} {1} {0}'.format(chars.vertical, header.ljust(inner)))
			lines.append(chars.tee_left + chars.horizontal * (inner + 2) + chars.tee_right)
		lines.extend('{0} {1} {0}'.format(chars.vertical, line.ljust(inner)) for line in body)
		lines.append(chars.bottom_left + chars.horizontal * (inner + 2) + chars.bottom_right)
		return lines

	def beside(self, blocks, depth):
		"""
		Put blocks next to each other, top aligned. Single line blocks (connectors) are centered vertically. The
		blocks are stacked instead when the result would be wider than the available width.
		"""
		if not blocks:
			return list()
		height = max(len(block) for block in blocks)
		columns = list()
		for block in blocks:
			width = _width(block)
			if len(block) == 1 and height > 1:
				top = (height - 1) // 2
				block = [''] * top + block + [''] * (height - top - 1)
			else:
				block = block + [''] * (height - len(block))
			columns.append([line.ljust(width) for line in block])
		lines = [' '.join(row) for row in zip(*columns)]

		if self.width is not None and _width(lines) > self.width - 4 * (depth + 1):
			return [line for block in blocks for line in block]
		return lines

	def term(self, term):
		return term.value

	def condition(self, clause, depth):
		"""
		Lines of one condition.

		:rtype: list
		"""
		symbols = self.charset.symbols
		kind = clause.kind
		args = clause.args

		if kind == models.CONCEPT:
			return ['{}({})'.format(clause.operator.synset, self.term(args[1]))]
		if kind == models.COMPARISON and clause.operator.name in symbols:
			return ['{} {} {}'.format(self.term(args[0]), symbols[clause.operator.name], self.term(args[1]))]
		if kind in (models.ROLE, models.COMPARISON, models.RELATION):
			return ['{}({},{})'.format(clause.operator.name, self.term(args[0]), self.term(args[1]))]
		if kind in (models.NOT, models.POS, models.NEC):
			return self.beside([[symbols[kind]], self.box(args[0].value, depth + 1)], depth)
		if kind == models.IMP:
			return self.beside([
				self.box(args[0].value, depth + 1), [symbols[kind]], self.box(args[1].value, depth + 1)
			], depth)
		if kind == models.PRP:
			return self.beside([['{}:'.format(self.term(args[0]))], self.box(args[1].value, depth + 1)], depth)
		return ['{} {}'.format(clause.operator.name, ' '.join(self.term(arg) for arg in args))]


def render_boxes(structure, width=None, ascii=None):
	"""
	Render a box structure in box notation.

	:param structure: Box structure of a valid form.
	:param width: Maximum line width, defaults to the ``RENDER_WIDTH`` setting.
	:param ascii: ASCII only output, defaults to the ``RENDER_ASCII`` setting.
	:rtype: str
	"""
	width = settings.RENDER_WIDTH if width is None else width
	ascii = settings.RENDER_ASCII if ascii is None else ascii
	return BoxRenderer(structure, width, ascii).render()


def render_form(form, width=None, ascii=None):
	"""
	Build the box structure of a form and render it.

	:raise: pydrs.core.exceptions.StructureError
	"""
	return render_boxes(build_box_structure(form), width, ascii)
