"""
Sense normalization. A synset map sends word senses (``lemma.pos.sense``) to a canonical sense, so that two senses
sharing a synset compare equal while matching.
"""
import logging

from pydrs.core import models
from pydrs.core.exceptions import MalformedClause

logger = logging.getLogger(__name__)


def split_synset(text):
	"""
	Split ``lemma.pos.sense`` into its parts. The lemma itself may contain dots.

	:rtype: tuple
	"""
	parts = text.strip().rsplit('.', 2)
	if len(parts) != 3 or not all(parts):
		raise MalformedClause('invalid synset {!r}'.format(text))
	return tuple(parts)


class SynsetMap:
	"""
	Association from ``(lemma, pos, sense)`` to its canonical ``(lemma, pos, sense)``. Chains are resolved on
	construction so that normalizing twice equals normalizing once. Absent keys normalize to themselves.
	"""

	def __init__(self, mapping=None):
		self._mapping = dict()
		mapping = dict(mapping or dict())
		for key in mapping:
			self._mapping[key] = self._resolve(key, mapping)

	@staticmethod
	def _resolve(key, mapping):
		seen = {key}
		value = mapping[key]
		while value in mapping and value not in seen:
			seen.add(value)
			value = mapping[value]
		return value

	def __len__(self):
		return len(self._mapping)

	def __contains__(self, item):
		return item in self._mapping

	def __getitem__(self, item):
		return self._mapping.get(item, item)

	def canonical(self, lemma, pos, sense):
		return self[(lemma, pos, sense)]


def load_synset_map(stream):
	"""
	Read a synset map file: one ``lemma.pos.sense<TAB>lemma.pos.sense`` record per line.

	:param stream: Iterable of lines.
	:rtype: pydrs.core.synsets.SynsetMap
	"""
	mapping = dict()
	for number, line in enumerate(stream, start=1):
		if not line.strip() or line.startswith('#'):
			continue
		fields = line.rstrip('\n').split('\t')
		if len(fields) != 2:
			raise MalformedClause('expected two tab separated synsets', line=number)
		try:
			mapping[split_synset(fields[0])] = split_synset(fields[1])
		except MalformedClause as e:
			e.line = number
			raise
	logger.debug('Loaded synset map with {} entries'.format(len(mapping)))
	return SynsetMap(mapping)


def normalize_senses(form, synset_map):
	"""
	Replace the sense of every concept clause by its canonical sense.

	:param form: Clausal form.
	:param synset_map: Synset map.
	:rtype: pydrs.core.models.ClausalForm
	"""
	if not synset_map:
		return form

	clauses = list()
	for clause in form.clauses:
		if clause.kind == models.CONCEPT:
			operator = clause.operator
			lemma, pos, sense = synset_map.canonical(operator.name, operator.pos, operator.sense)
			if (lemma, pos, sense) != (operator.name, operator.pos, operator.sense):
				clause = clause.with_operator(models.Concept(lemma, pos, sense))
		clauses.append(clause)
	return form.with_clauses(clauses)
