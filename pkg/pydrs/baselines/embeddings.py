import logging

import numpy as np

from pydrs.core.exceptions import BaselineError

logger = logging.getLogger(__name__)


class EmbeddingTable:
	"""
	Word vectors by lowercased token. All vectors share one dimension.
	"""

	def __init__(self, vectors=None, dimension=None):
		self.vectors = dict()
		self.dimension = dimension
		for token, vector in (vectors or dict()).items():
			self.add(token, vector)

	def __len__(self):
		return len(self.vectors)

	def __contains__(self, token):
		return token.lower() in self.vectors

	def add(self, token, vector):
		vector = np.asarray(vector, dtype=float)
		if self.dimension is None:
			self.dimension = len(vector)
		if vector.shape != (self.dimension,):
			raise BaselineError('vector of {} has dimension {}, expected {}'.format(token, len(vector), self.dimension))
		self.vectors[token.lower()] = vector

	def get(self, token):
		return self.vectors.get(token.lower())

	def zeros(self):
		return np.zeros(self.dimension or 0)

	@classmethod
	def load(cls, stream):
		"""
		Read a table with one token per line followed by its vector components, single space separated. A leading
		``<count> <dimension>`` header line is skipped.

		:rtype: pydrs.baselines.embeddings.EmbeddingTable
		"""
		table = cls()
		for number, line in enumerate(stream):
			fields = line.rstrip('\n').split(' ')
			if not line.strip():
				continue
			if number == 0 and len(fields) == 2 and all(field.isdigit() for field in fields):
				continue
			try:
				table.add(fields[0], [float(value) for value in fields[1:]])
			except ValueError as e:
				raise BaselineError('line {}: {}'.format(number + 1, e))
		logger.debug('Loaded {} embeddings of dimension {}'.format(len(table), table.dimension))
		return table


def embed_sentence(tokens, table):
	"""
	Mean vector of the tokens that are in the table. Without any known token the zero vector is returned.

	:param tokens: List of tokens.
	:param table: Embedding table.
	:rtype: numpy.ndarray
	"""
	vectors = [vector for vector in (table.get(token) for token in tokens) if vector is not None]
	if not vectors:
		return table.zeros()
	return np.mean(vectors, axis=0)
