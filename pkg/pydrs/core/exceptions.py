
class ImproperlyConfigured(Exception):
	"""The configuration is not given or is invalid."""
	pass


class DrsError(Exception):
	"""Base exception of the toolkit."""


class ClauseError(DrsError):
	"""
	A clause line or document could not be read.

	:ivar line: One-based line number (relative to the block or stream that was parsed), if known.
	:ivar document: Zero-based document index in the corpus, if known.
	"""

	def __init__(self, message, line=None, document=None):
		super().__init__(message)
		self.message = message
		self.line = line
		self.document = document

	def __str__(self):
		prefix = ''
		if self.document is not None:
			prefix += 'document {}: '.format(self.document)
		if self.line is not None:
			prefix += 'line {}: '.format(self.line)
		return prefix + self.message


class MalformedClause(ClauseError):
	"""Wrong token count, unquoted sense string or empty variable name."""


class UnknownArity(ClauseError):
	"""The operator token can not be classified at the observed number of arguments."""


class UnknownOperator(ClauseError):
	"""The operator token matches none of the classification rules."""


class EmptyDocument(ClauseError):
	"""A document without any clause."""


class CorpusError(DrsError):
	"""Two corpora can not be paired."""


class LengthMismatch(CorpusError):
	"""The corpora differ in number of documents."""


class UnpairedDocument(CorpusError):
	"""A document id of one corpus does not exist in the other."""


class StructureError(DrsError):
	"""
	The box structure can not be built.

	:ivar obj: Offending variable or box label.
	"""

	def __init__(self, message, obj=None):
		super().__init__(message)
		self.obj = obj


class TypeConflict(StructureError):
	"""A variable is used both as box label and as discourse referent."""


class CyclicSubordination(StructureError):
	"""The subordination graph of the boxes contains a loop."""


class MixedBox(StructureError):
	"""A box has both simple conditions and segmented membership clauses."""


class DanglingDiscourseRelation(StructureError):
	"""A discourse relation over a label that is not a member of the segmented box."""


class NoMainBox(StructureError):
	"""There is no top-level box."""


class AmbiguousMainBox(StructureError):
	"""Zero or several top-level boxes qualify as main box."""


class SearchError(DrsError):
	"""The variable mapping search can not be performed."""


class SearchSpaceTooLarge(SearchError):
	"""Exhaustive search requested on an instance over the configured bound."""


class BaselineError(DrsError):
	"""A baseline can not be trained or applied."""


class EmptyTraining(BaselineError):
	"""The training corpus is empty."""


class SignificanceError(DrsError):
	"""The significance test got invalid parameters."""
