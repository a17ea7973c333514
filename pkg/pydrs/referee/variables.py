"""
Variable typing. Every variable of a clausal form is either a box label or a discourse referent, which is decided by
the positions it occurs in.
"""
from pydrs.core import models
from pydrs.core.exceptions import TypeConflict

BOX_LABEL = 'box'
REFERENT = 'referent'
ANY = 'any'

SIGNATURES = {
	models.REF: (REFERENT,),
	models.NOT: (BOX_LABEL,),
	models.POS: (BOX_LABEL,),
	models.NEC: (BOX_LABEL,),
	models.DRS: (BOX_LABEL,),
	models.IMP: (BOX_LABEL, BOX_LABEL),
	models.PRP: (REFERENT, BOX_LABEL),
	models.RELATION: (BOX_LABEL, BOX_LABEL),
	models.CONCEPT: (None, REFERENT),
	models.ROLE: (ANY, ANY),
	models.COMPARISON: (ANY, ANY),
}
"""
Expected argument per position. A box label or referent position requires a variable, ``ANY`` accepts a constant as
well (a variable found there is a referent), ``None`` marks the sense string of a concept.
"""


class VariableTyping(dict):
	"""
	Association from variable name to its kind, ``BOX_LABEL`` or ``REFERENT``.
	"""

	def box_labels(self):
		return [name for name, kind in self.items() if kind == BOX_LABEL]

	def referents(self):
		return [name for name, kind in self.items() if kind == REFERENT]

	def is_box_label(self, name):
		return self.get(name) == BOX_LABEL

	def is_referent(self, name):
		return self.get(name) == REFERENT


def argument_kinds(clause):
	"""
	Yield ``(term, kind)`` for every variable of the clause whose kind follows from its position, box label first.
	Constants in variable positions are skipped, they are reported by the shape rule.
	"""
	yield clause.box, BOX_LABEL
	for term, expected in zip(clause.args, SIGNATURES[clause.kind]):
		if expected is None or not term.is_variable:
			continue
		yield term, REFERENT if expected == ANY else expected


def collect_types(form):
	"""
	Type all variables, collecting conflicts instead of raising.

	:return: Tuple of the typing (first kind seen wins for conflicting variables) and a list of conflicting names.
	"""
	typing = VariableTyping()
	conflicts = list()
	for clause in form.clauses:
		for term, kind in argument_kinds(clause):
			known = typing.setdefault(term.value, kind)
			if known != kind and term.value not in conflicts:
				conflicts.append(term.value)
	return typing, conflicts


def infer_variable_types(form):
	"""
	Infer the kind of every variable of the form.

	:param form: Clausal form.
	:return: Variable typing.
	:rtype: pydrs.referee.variables.VariableTyping
	:raise: pydrs.core.exceptions.TypeConflict when a variable is used both as box label and as referent.
	"""
	typing, conflicts = collect_types(form)
	if conflicts:
		raise TypeConflict(
			'variable {} is used both as box label and as discourse referent'.format(conflicts[0]), obj=conflicts[0]
		)
	return typing
