"""
Reconstruction of the recursive box structure from a clausal form.

Every box label gets a box. Boxes with ``DRS`` membership or discourse relation clauses are segmented, all other
boxes are simple. Complex conditions (negation, modalities, implication and propositions) and segmented membership
subordinate boxes to the box they occur in. The boxes that are subordinate to nothing are the top-level boxes: one of
them is the main box, the others are presuppositions.
"""
import logging
import re
from collections import OrderedDict

from pydrs.core import models
from pydrs.core.exceptions import AmbiguousMainBox, CyclicSubordination, DanglingDiscourseRelation, MixedBox, \
	NoMainBox
from pydrs.referee.variables import argument_kinds, infer_variable_types, REFERENT
from pydrs.utils.toposort import toposort

logger = logging.getLogger(__name__)

SIMPLE = 'simple'
SEGMENTED = 'segmented'

SEGMENT_OPERATORS = (models.DRS, models.RELATION)


def natural_key(label):
	"""
	Sort key that orders ``b2`` before ``b10``.
	"""
	return [int(part) if part.isdigit() else part for part in re.split(r'(\d+)', label)]


def box_targets(clause):
	"""
	Labels of the boxes subordinated by a clause: arguments of complex conditions and segmented membership.
	"""
	if clause.kind in (models.NOT, models.POS, models.NEC, models.DRS, models.IMP):
		terms = clause.args
	elif clause.kind == models.PRP:
		terms = clause.args[1:]
	else:
		return []
	return [term.value for term in terms if term.is_variable]


class Box:
	"""
	One labelled box with the clauses that carry its label, in clause order.
	"""

	def __init__(self, label, clauses=None):
		self.label = label
		self.clauses = list(clauses or list())

	def __repr__(self):
		return '<Box {} ({}, {} clauses)>'.format(self.label, self.kind, len(self.clauses))

	@property
	def kind(self):
		if any(clause.kind in SEGMENT_OPERATORS for clause in self.clauses):
			return SEGMENTED
		return SIMPLE

	@property
	def is_segmented(self):
		return self.kind == SEGMENTED

	@property
	def is_mixed(self):
		kinds = set(clause.kind for clause in self.clauses)
		return bool(kinds & set(SEGMENT_OPERATORS)) and bool(kinds - set(SEGMENT_OPERATORS))

	@property
	def referents(self):
		"""
		Referent names introduced by ``REF`` clauses, in order of the first ``REF``.
		"""
		names = OrderedDict()
		for clause in self.clauses:
			if clause.kind == models.REF and clause.args[0].is_variable:
				names.setdefault(clause.args[0].value, None)
		return list(names)

	@property
	def conditions(self):
		return [clause for clause in self.clauses if clause.kind not in (models.REF, models.DRS, models.RELATION)]

	@property
	def members(self):
		names = OrderedDict()
		for clause in self.clauses:
			if clause.kind == models.DRS and clause.args[0].is_variable:
				names.setdefault(clause.args[0].value, None)
		return list(names)

	@property
	def relations(self):
		return [clause for clause in self.clauses if clause.kind == models.RELATION]


class BoxStructure:
	"""
	The box structure of a clausal form.

	:ivar boxes: Ordered dictionary from label to :class:`Box`, in order of first occurrence.
	:ivar edges: Dictionary from label to the labels it directly subordinates.
	:ivar top_level: Labels of the boxes that are not subordinate to another box.
	:ivar main: Label of the main box.
	:ivar presuppositions: The other top-level labels in natural label order.
	"""

	def __init__(self, boxes, edges, top_level, main=None, presuppositions=None):
		self.boxes = boxes
		self.edges = edges
		self.top_level = top_level
		self.main = main
		self.presuppositions = presuppositions or list()

	def __getitem__(self, label):
		return self.boxes[label]

	def __contains__(self, label):
		return label in self.boxes

	def subtree(self, label):
		"""
		Labels reachable from ``label`` (itself included).

		:rtype: set
		"""
		seen = set()
		stack = [label]
		while stack:
			current = stack.pop()
			if current in seen:
				continue
			seen.add(current)
			stack.extend(self.edges.get(current, list()))
		return seen

	def to_clauses(self):
		"""
		All clauses held by the structure, box by box.

		:rtype: list
		"""
		return [clause for box in self.boxes.values() for clause in box.clauses]


def collect_boxes(form):
	"""
	Group the clauses by box label and compute the subordination edges.

	:return: Tuple of boxes (ordered dict) and edges (dict of lists).
	"""
	boxes = OrderedDict()
	edges = OrderedDict()
	for clause in form.clauses:
		label = clause.box.value
		boxes.setdefault(label, Box(label)).clauses.append(clause)
		edges.setdefault(label, list())
		for target in box_targets(clause):
			boxes.setdefault(target, Box(target))
			edges.setdefault(target, list())
			if target not in edges[label]:
				edges[label].append(target)
	return boxes, edges


def check_segments(boxes):
	"""
	Check the segmented boxes: no simple conditions mixed in, discourse relations only over members.

	:return: List of structure errors.
	"""
	errors = list()
	for box in boxes.values():
		if box.is_mixed:
			errors.append(MixedBox(
				'box {} has both simple conditions and segmented membership clauses'.format(box.label), obj=box.label
			))
		if not box.is_segmented:
			continue
		members = set(box.members)
		for relation in box.relations:
			for term in relation.args:
				if term.is_variable and term.value not in members:
					errors.append(DanglingDiscourseRelation(
						'{} in box {} relates {} which is not a member of the box'.format(
							relation.operator.name, box.label, term.value
						), obj=box.label
					))
	return errors


def select_main_box(structure, top_level):
	"""
	Split the top-level boxes in the main box and the presuppositions. A top-level box is a presupposition when a
	referent introduced in its subtree is used by a box outside of that subtree. Exactly one box must remain.

	:return: Tuple of main label and the sorted presupposition labels.
	:raise: pydrs.core.exceptions.NoMainBox
	:raise: pydrs.core.exceptions.AmbiguousMainBox
	"""
	if not top_level:
		raise NoMainBox('there is no top-level box')

	candidates = list()
	for label in top_level:
		subtree = structure.subtree(label)
		introduced = set(
			name for member in subtree if member in structure.boxes for name in structure[member].referents
		)
		used_outside = set()
		for box in structure.boxes.values():
			if box.label in subtree:
				continue
			for clause in box.clauses:
				if clause.kind == models.REF:
					continue
				used_outside.update(term.value for term, kind in argument_kinds(clause) if kind == REFERENT)
		if not introduced & used_outside:
			candidates.append(label)

	if len(candidates) != 1:
		raise AmbiguousMainBox(
			'{} of the top-level boxes {} qualify as main box'.format(len(candidates), ', '.join(top_level)),
			obj=', '.join(candidates) or None
		)
	main = candidates[0]
	presuppositions = sorted((label for label in top_level if label != main), key=natural_key)
	return main, presuppositions


def assemble(form):
	"""
	Build the box structure, collecting every structure error instead of raising the first.

	:return: Tuple of the structure (``None`` when no structure could be built) and a list of structure errors.
	"""
	boxes, edges = collect_boxes(form)
	errors = check_segments(boxes)

	try:
		toposort(edges)
	except CyclicSubordination as e:
		errors.append(e)
		return None, errors

	embedded = set(target for targets in edges.values() for target in targets)
	top_level = [label for label in boxes if label not in embedded]
	structure = BoxStructure(boxes, edges, top_level)

	try:
		structure.main, structure.presuppositions = select_main_box(structure, top_level)
	except (NoMainBox, AmbiguousMainBox) as e:
		errors.append(e)
		return None, errors

	logger.debug('Main box {}, presuppositions {}'.format(structure.main, structure.presuppositions))
	return structure, errors


def build_box_structure(form, typing=None):
	"""
	Build the box structure of a clausal form.

	:param form: Clausal form.
	:param typing: Typing of the variables, inferred when not given.
	:return: Box structure.
	:rtype: pydrs.referee.structure.BoxStructure
	:raise: pydrs.core.exceptions.StructureError
	"""
	if typing is None:
		infer_variable_types(form)
	structure, errors = assemble(form)
	if errors:
		raise errors[0]
	return structure
