"""
Reading and writing of the line-based clause format.

A clause line holds 3 or 4 whitespace separated tokens (box label, operator tag, one or two arguments) optionally
followed by a ``%`` comment. A comment of the form ``token [start...end]`` is kept as the alignment of the clause,
other comments are discarded. Constants are wrapped in double quotes.
"""
import logging
import re

from pydrs.conf import settings
from pydrs.core import models
from pydrs.core.exceptions import ClauseError, EmptyDocument, LengthMismatch, MalformedClause, UnknownArity, \
	UnknownOperator

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r'"[^"]*"|[^\s"]+')
SENSE_RE = re.compile(r'^([nvar])\.(\d{2})$')
ALIGNMENT_RE = re.compile(r'(\S+)\s*\[(\d+)\.\.\.(\d+)\]')
ALIGNMENT_LINE_RE = re.compile(r'^(?:\s*\S+\s*\[\d+\.\.\.\d+\])+\s*$')
HEADER_RE = re.compile(r'^%%%\s*id:\s*(\S+)\s*$')


def split_comment(line):
	"""
	Split a line at the first ``%`` that is not inside a quoted constant.

	:param line: Clause line.
	:return: Tuple of body and comment (``None`` without comment).
	:raise: pydrs.core.exceptions.MalformedClause on an unterminated quote.
	"""
	in_quotes = False
	for index, char in enumerate(line):
		if char == '"':
			in_quotes = not in_quotes
		elif char == '%' and not in_quotes:
			return line[:index], line[index + 1:]
	if in_quotes:
		raise MalformedClause('unterminated quote')
	return line, None


def parse_alignment(comment):
	"""
	Parse an alignment comment into a tuple of alignments. Returns ``None`` for empty or free text comments.
	"""
	if comment is None or not ALIGNMENT_LINE_RE.match(comment):
		return None
	return tuple(
		models.Alignment(token, int(start), int(end)) for token, start, end in ALIGNMENT_RE.findall(comment)
	)


def parse_term(token):
	if token.startswith('"'):
		return models.Constant(token[1:-1])
	return models.Variable(token)


def classify_operator(token, arity, args, comparison_operators=None):
	"""
	Determine the operator of a clause from its token, its arity and its raw argument tokens.

	:param token: Operator token.
	:param arity: Number of arguments on the line.
	:param args: Raw argument tokens (constants still quoted).
	:param comparison_operators: Inventory of comparison operators, defaults to the ``COMPARISON_OPERATORS`` setting.
	:return: Operator instance.
	:rtype: pydrs.core.models.Operator
	:raise: pydrs.core.exceptions.UnknownArity
	:raise: pydrs.core.exceptions.UnknownOperator
	"""
	if comparison_operators is None:
		comparison_operators = settings.COMPARISON_OPERATORS

	if token in models.FIXED_OPERATORS:
		operator = models.FixedOperator(token)
	elif token.isupper() and token in comparison_operators:
		operator = models.Comparison(token)
	elif token.isupper() and len(token) >= 3:
		operator = models.DiscourseRelation(token)
	elif token[0].isupper() and any(c.islower() for c in token[1:]):
		operator = models.Role(token)
	elif token == token.lower() and not token.startswith('"'):
		if arity != 2:
			raise UnknownArity('concept {} takes 2 arguments, got {}'.format(token, arity))
		match = SENSE_RE.match(args[0][1:-1]) if args[0].startswith('"') else None
		if not match:
			raise UnknownOperator('concept {} needs a quoted sense string, got {}'.format(token, args[0]))
		return models.Concept(token, match.group(1), match.group(2))
	else:
		raise UnknownOperator('unknown operator {}'.format(token))

	if operator.arity != arity:
		raise UnknownArity('{} takes {} argument(s), got {}'.format(token, operator.arity, arity))
	return operator


def parse_clause(line, comparison_operators=None):
	"""
	Parse a single clause line.

	:param line: The line, without trailing newline.
	:param comparison_operators: Comparison operator inventory.
	:return: Clause instance.
	:rtype: pydrs.core.models.Clause
	:raise: pydrs.core.exceptions.ClauseError
	"""
	body, comment = split_comment(line)
	tokens = TOKEN_RE.findall(body)
	if len(tokens) not in (3, 4):
		raise MalformedClause('expected 3 or 4 tokens, got {}'.format(len(tokens)))

	box_token, op_token, arg_tokens = tokens[0], tokens[1], tokens[2:]
	if box_token.startswith('"'):
		raise MalformedClause('box label must be a variable, got {}'.format(box_token))
	if op_token.startswith('"'):
		raise MalformedClause('operator can not be quoted, got {}'.format(op_token))
	if op_token == op_token.lower() and SENSE_RE.match(arg_tokens[0]):
		raise MalformedClause('sense string {} must be quoted'.format(arg_tokens[0]))

	operator = classify_operator(op_token, len(arg_tokens), arg_tokens, comparison_operators)
	box = parse_term(box_token)
	args = tuple(parse_term(token) for token in arg_tokens)
	return models.Clause(box, operator, args, parse_alignment(comment))


def is_clause_line(line, comparison_operators=None):
	try:
		parse_clause(line, comparison_operators)
	except ClauseError:
		return False
	return True


def serialize_clause(clause, with_alignment=True):
	"""
	Serialize a clause to its line representation.

	:param clause: Clause instance.
	:param with_alignment: Write the alignment comment when present.
	:rtype: str
	"""
	line = ' '.join(str(term) for term in (clause.box, clause.operator.name) + clause.args)
	if with_alignment and clause.alignment:
		line += ' % ' + ' '.join('{} [{}...{}]'.format(*a) for a in clause.alignment)
	return line


def serialize_document(form, with_id=True, with_alignment=True):
	"""
	Serialize a clausal form: optional id header, raw text, a blank line and the clauses.

	:type form: pydrs.core.models.ClausalForm
	:rtype: str
	"""
	lines = list()
	if with_id and form.doc_id is not None:
		lines.append('%%% id: {}'.format(form.doc_id))
	if form.raw_text:
		lines.append(form.raw_text)
	lines.append('')
	lines.extend(serialize_clause(clause, with_alignment) for clause in form.clauses)
	return '\n'.join(lines) + '\n'


def _parse_clause_lines(numbered_lines, document, comparison_operators):
	clauses = list()
	for number, line in numbered_lines:
		try:
			clauses.append(parse_clause(line, comparison_operators))
		except ClauseError as e:
			e.line = number
			e.document = document
			raise
	return clauses


def _header_id(line):
	match = HEADER_RE.match(line.strip())
	return match.group(1) if match else None


def parse_document(block, doc_id=None, comparison_operators=None):
	"""
	Parse one document block. The block starts with raw text lines (optional) followed by the clause lines. Lines
	starting with ``%`` are comments, a ``%%% id: <id>`` comment sets the document id.

	When a blank line separates two parts of the block, everything before the first blank line is raw text. A block
	without separator is all clauses when its first line parses as a clause, else all raw text.

	:param block: Text of the block.
	:param doc_id: Document id, overridden by an id header.
	:param comparison_operators: Comparison operator inventory.
	:return: Clausal form.
	:rtype: pydrs.core.models.ClausalForm
	:raise: pydrs.core.exceptions.EmptyDocument
	:raise: pydrs.core.exceptions.ClauseError
	"""
	parts = [list()]
	for number, line in enumerate(block.splitlines(), start=1):
		stripped = line.strip()
		if stripped.startswith('%'):
			header = _header_id(stripped)
			if header is not None:
				doc_id = header
			continue
		if not stripped:
			if parts[-1]:
				parts.append(list())
			continue
		parts[-1].append((number, stripped))
	parts = [part for part in parts if part]

	if len(parts) > 1:
		raw_lines = [line for _, line in parts[0]]
		clause_lines = [numbered for part in parts[1:] for numbered in part]
	elif parts and is_clause_line(parts[0][0][1], comparison_operators):
		raw_lines, clause_lines = list(), parts[0]
	else:
		raw_lines, clause_lines = [line for part in parts for _, line in part], list()

	clauses = _parse_clause_lines(clause_lines, None, comparison_operators)
	if not clauses:
		raise EmptyDocument('document has no clauses')
	return models.ClausalForm(doc_id, ' '.join(raw_lines), clauses)


class _PendingDocument:
	def __init__(self, index, raw_text='', doc_id=None):
		self.index = index
		self.raw_text = raw_text
		self.doc_id = doc_id
		self.clauses = list()


def _chunks(lines):
	"""
	Group numbered lines into blank line separated chunks.
	"""
	chunk = list()
	for number, line in enumerate(lines, start=1):
		stripped = line.strip()
		if not stripped:
			if chunk:
				yield chunk
				chunk = list()
			continue
		chunk.append((number, stripped))
	if chunk:
		yield chunk


def _is_raw_text(content, clause_like, position):
	"""
	A chunk is raw text when its first line is no clause. A single line that also parses as a clause is raw text
	when a clause chunk follows and it does not start with a lowercase box label, like ``Tom Jackson is dead.``
	"""
	if not clause_like[position]:
		return True
	followed_by_clauses = position + 1 < len(clause_like) and clause_like[position + 1]
	return len(content) == 1 and followed_by_clauses and not content[0][1][0].islower()


def read_corpus(stream, ids=None, comparison_operators=None):
	"""
	Read a corpus of documents. Documents are separated by blank lines, each consisting of an optional raw text
	chunk and one chunk of clause lines. A clause chunk directly following another clause chunk starts a new
	document without raw text.

	:param stream: Iterable of lines (an open file or a list of strings).
	:param ids: Optional list of document ids, overriding the positional ids.
	:param comparison_operators: Comparison operator inventory.
	:return: List of clausal forms.
	:raise: pydrs.core.exceptions.ClauseError
	:raise: pydrs.core.exceptions.LengthMismatch when the id list does not fit the corpus.
	"""
	if comparison_operators is None:
		comparison_operators = settings.COMPARISON_OPERATORS

	documents = list()
	current = None
	pending_id = None

	def close(document):
		if document is None:
			return
		if not document.clauses:
			raise EmptyDocument('document has no clauses', document=document.index)
		doc_id = document.doc_id if document.doc_id is not None else str(document.index)
		documents.append(models.ClausalForm(doc_id, document.raw_text, document.clauses))

	items = list()
	for chunk in _chunks(stream):
		header = pending_id
		content = list()
		for number, line in chunk:
			if line.startswith('%'):
				header = _header_id(line) or header
			else:
				content.append((number, line))

		if not content:
			pending_id = header
			continue
		pending_id = None
		items.append((header, content))

	clause_like = [is_clause_line(content[0][1], comparison_operators) for _, content in items]
	for position, (header, content) in enumerate(items):
		if _is_raw_text(content, clause_like, position):
			close(current)
			current = _PendingDocument(len(documents), ' '.join(line for _, line in content), header)
			continue

		if current is None or current.clauses:
			close(current)
			current = _PendingDocument(len(documents), doc_id=header)
		elif header is not None:
			current.doc_id = header
		current.clauses.extend(_parse_clause_lines(content, current.index, comparison_operators))

	close(current)

	if ids is not None:
		ids = list(ids)
		if len(ids) != len(documents):
			raise LengthMismatch('{} ids given for {} documents'.format(len(ids), len(documents)))
		documents = [form.with_doc_id(doc_id) for form, doc_id in zip(documents, ids)]

	logger.debug('Read corpus of {} documents'.format(len(documents)))
	return documents


def read_id_list(stream):
	"""
	Read a sidecar id list, one id per line. Blank lines are ignored.
	"""
	return [line.strip() for line in stream if line.strip()]


def write_corpus(forms, stream, with_alignment=True):
	"""
	Write a corpus so that :func:`read_corpus` reads it back. An id header is only written when the id of a
	document differs from its position.

	:param forms: Iterable of clausal forms.
	:param stream: Writable text stream.
	"""
	for index, form in enumerate(forms):
		if index:
			stream.write('\n')
		with_id = form.doc_id is not None and form.doc_id != str(index)
		stream.write(serialize_document(form, with_id=with_id, with_alignment=with_alignment))
