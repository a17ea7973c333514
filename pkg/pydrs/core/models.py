"""
Domain types of the clausal form.

All types are immutable tuples, which makes them safe to share between processes and threads and usable as
dictionary keys. Variants are told apart by their ``kind`` field, so a variable and a constant with the same text
never compare equal.
"""
from collections import namedtuple

from cached_property import cached_property

from pydrs.core.exceptions import MalformedClause

VARIABLE = 'variable'
CONSTANT = 'constant'

REF = 'REF'
NOT = 'NOT'
POS = 'POS'
NEC = 'NEC'
IMP = 'IMP'
PRP = 'PRP'
DRS = 'DRS'
CONCEPT = 'concept'
ROLE = 'role'
COMPARISON = 'comparison'
RELATION = 'relation'

FIXED_OPERATORS = (REF, NOT, POS, NEC, IMP, PRP, DRS)
"""
Operators recognised by their exact token.
"""

ARITY = {
	REF: 1, NOT: 1, POS: 1, NEC: 1, DRS: 1,
	IMP: 2, PRP: 2, CONCEPT: 2, ROLE: 2, COMPARISON: 2, RELATION: 2,
}

SCOPE_OPERATORS = (NOT, POS, NEC, IMP, PRP)
"""
Operators whose box arguments are subordinate to the box of the clause.
"""


class Term(namedtuple('Term', ['kind', 'value'])):
	"""
	Argument of a clause: either a variable (discourse referent or box label) or a constant. The value of a constant
	is stored without the surrounding double quotes.
	"""
	__slots__ = ()

	@property
	def is_variable(self):
		return self.kind == VARIABLE

	@property
	def is_constant(self):
		return self.kind == CONSTANT

	def __str__(self):
		if self.kind == CONSTANT:
			return '"{}"'.format(self.value)
		return self.value


def Variable(name):
	"""
	Create a variable term.

	:param name: Non-empty token without whitespace and double quotes.
	:type name: str
	:rtype: pydrs.core.models.Term
	"""
	if not name or any(c.isspace() or c == '"' for c in name):
		raise MalformedClause('invalid variable name {!r}'.format(name))
	return Term(VARIABLE, name)


def Constant(text):
	"""
	Create a constant term, ``text`` without the quotes.

	:rtype: pydrs.core.models.Term
	"""
	return Term(CONSTANT, text)


class Operator(namedtuple('Operator', ['kind', 'name', 'pos', 'sense'])):
	"""
	Operator tag of a clause. ``name`` holds the lemma of a concept, the name of a role, comparison or discourse
	relation and the token itself for the fixed operators. ``pos`` and ``sense`` are only set for concepts.
	"""
	__slots__ = ()

	@property
	def arity(self):
		return ARITY[self.kind]

	@property
	def token(self):
		return self.name

	@property
	def synset(self):
		if self.kind != CONCEPT:
			return None
		return '{}.{}.{}'.format(self.name, self.pos, self.sense)

	@property
	def sense_string(self):
		return '{}.{}'.format(self.pos, self.sense)

	def __str__(self):
		if self.kind == CONCEPT:
			return self.synset
		return self.name


def FixedOperator(kind):
	return Operator(kind, kind, None, None)


def Concept(lemma, pos, sense):
	return Operator(CONCEPT, lemma, pos, sense)


def Role(name):
	return Operator(ROLE, name, None, None)


def Comparison(name):
	return Operator(COMPARISON, name, None, None)


def DiscourseRelation(name):
	return Operator(RELATION, name, None, None)


Alignment = namedtuple('Alignment', ['token', 'start', 'end'])
"""
Token aligned to a clause, with its character offsets in the raw text.
"""


class Clause(namedtuple('Clause', ['box', 'operator', 'args', 'alignment'])):
	"""
	One line of clausal form.

	:ivar box: Box label (variable term).
	:ivar operator: Operator tag.
	:ivar args: Tuple of argument terms. A concept keeps its quoted ``pos.sense`` as first argument.
	:ivar alignment: Tuple of :class:`Alignment` or ``None``.
	"""
	__slots__ = ()

	def __new__(cls, box, operator, args, alignment=None):
		if alignment is not None:
			alignment = tuple(alignment)
		return super().__new__(cls, box, operator, tuple(args), alignment)

	@classmethod
	def concept(cls, box, lemma, pos, sense, referent, alignment=None):
		"""
		Build a concept clause, keeping the operator and the sense argument in sync.
		"""
		operator = Concept(lemma, pos, sense)
		return cls(box, operator, (Constant(operator.sense_string), referent), alignment)

	@property
	def kind(self):
		return self.operator.kind

	@property
	def key(self):
		"""
		The clause without its alignment, the part that takes part in matching and validation.
		"""
		return self.box, self.operator, self.args

	@property
	def variables(self):
		"""
		Variables of the clause in order of appearance (box label first).
		"""
		return tuple(term for term in (self.box,) + self.args if term.is_variable)

	@property
	def referent(self):
		"""
		The discourse referent introduced (REF) or described (concept) by the clause, ``None`` for other clauses.
		"""
		if self.kind in (REF, CONCEPT):
			return self.args[-1]
		return None

	def with_operator(self, operator):
		"""
		Copy of the clause with a new operator. For concepts the sense argument follows the operator.
		"""
		args = self.args
		if operator.kind == CONCEPT:
			args = (Constant(operator.sense_string),) + args[1:]
		return self._replace(operator=operator, args=args)

	def without_alignment(self):
		return self._replace(alignment=None)


class ClausalForm(namedtuple('ClausalForm', ['doc_id', 'raw_text', 'clauses'])):
	"""
	The clausal form of one document together with its raw text.
	"""

	def __new__(cls, doc_id=None, raw_text='', clauses=()):
		return super().__new__(cls, doc_id, raw_text or '', tuple(clauses))

	@cached_property
	def variables(self):
		"""
		All variables of the form in order of first occurrence.

		:rtype: tuple
		"""
		seen = dict()
		for clause in self.clauses:
			for term in clause.variables:
				seen.setdefault(term.value, None)
		return tuple(seen)

	def with_clauses(self, clauses):
		return ClausalForm(self.doc_id, self.raw_text, clauses)

	def with_doc_id(self, doc_id):
		return ClausalForm(doc_id, self.raw_text, self.clauses)
