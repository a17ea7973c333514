"""
Well-formedness validation. The registered rules run in order (shape, typing, binding, structure) on a shared
context and all their violations are aggregated in one report.
"""
import logging
from collections import Counter

from pydrs.core import models
from pydrs.referee.messages import Violation
from pydrs.referee.registry import register, run_rules
from pydrs.referee.structure import assemble
from pydrs.referee.variables import BOX_LABEL, collect_types, REFERENT, SIGNATURES

logger = logging.getLogger(__name__)


class ValidationContext:
	def __init__(self, form):
		self.form = form
		self.typing = None
		self.conflicts = list()
		self.structure = None


class ValidationReport:
	"""
	Result of validating one clausal form.

	:ivar violations: List of :class:`pydrs.referee.messages.Violation`.
	:ivar structure: The box structure when it could be built, else ``None``.
	"""

	def __init__(self, violations, structure=None, doc_id=None):
		self.violations = list(violations)
		self.structure = structure
		self.doc_id = doc_id

	@property
	def valid(self):
		return not self.violations

	def __bool__(self):
		return self.valid

	def __repr__(self):
		return '<ValidationReport valid={} violations={}>'.format(self.valid, len(self.violations))

	def rules(self):
		return [violation.rule for violation in self.violations]


@register(name='shape')
def check_clause_shape(context):
	"""
	Variables are required in every position that holds a box label or introduces a referent.
	"""
	violations = list()
	for index, clause in enumerate(context.form.clauses):
		for position, (term, expected) in enumerate(zip(clause.args, SIGNATURES[clause.kind])):
			if expected in (BOX_LABEL, REFERENT) and not term.is_variable:
				violations.append(Violation(
					'ClauseShape',
					'argument {} of {} must be a variable, got {}'.format(position + 1, clause.operator, term),
					obj=index,
				))
	return violations


@register(name='typing')
def check_typing(context):
	context.typing, context.conflicts = collect_types(context.form)
	return [
		Violation(
			'TypeConflict', 'variable {} is used both as box label and as discourse referent'.format(name), obj=name,
		) for name in context.conflicts
	]


@register(name='binding')
def check_binding(context):
	"""
	Every referent used in a condition is introduced by a ``REF`` clause somewhere, and at most once per box.
	"""
	typing = context.typing if context.typing is not None else collect_types(context.form)[0]
	violations = list()
	introduced = Counter()
	used = list()
	for clause in context.form.clauses:
		if clause.kind == models.REF:
			if clause.args[0].is_variable:
				introduced[(clause.box.value, clause.args[0].value)] += 1
			continue
		for term, expected in zip(clause.args, SIGNATURES[clause.kind]):
			if term.is_variable and expected is not None and typing.get(term.value) == REFERENT:
				if term.value not in used:
					used.append(term.value)

	bound = set(name for _, name in introduced)
	for name in used:
		if name not in bound:
			violations.append(Violation(
				'UnboundReferent', 'referent {} is not introduced by a REF clause'.format(name), obj=name,
				hint='Add a clause "<box> REF {}".'.format(name),
			))
	for (box, name), count in introduced.items():
		if count > 1:
			violations.append(Violation(
				'DuplicateReferent', 'referent {} is introduced {} times in box {}'.format(name, count, box), obj=box,
			))
	return violations


@register(name='structure')
def check_structure(context):
	if context.conflicts:
		return []
	context.structure, errors = assemble(context.form)
	return [Violation.from_exception(error) for error in errors]


def validate(form, rules=None):
	"""
	Validate a clausal form. Never raises on ill-formed input, every problem becomes a violation.

	:param form: Clausal form.
	:param rules: Names of the rules to run, all by default.
	:rtype: pydrs.referee.validator.ValidationReport
	"""
	if not form.clauses:
		return ValidationReport([Violation('EmptyDocument', 'document has no clauses')], doc_id=form.doc_id)

	context = ValidationContext(form)
	violations = run_rules(context, rules)
	for violation in violations:
		logger.debug('Document {}: {}'.format(form.doc_id, violation))
	structure = context.structure if not violations else None
	return ValidationReport(violations, structure, doc_id=form.doc_id)


def validate_corpus(forms):
	"""
	Validate every document of a corpus.

	:return: List of reports in document order.
	"""
	return [validate(form) for form in forms]
