"""
Nearest neighbour baseline: predict the DRS of the training sentence whose mean word vector is closest (cosine) to
the mean word vector of the input sentence.
"""
import logging

import numpy as np

from pydrs.baselines.embeddings import embed_sentence
from pydrs.core.exceptions import EmptyTraining
from pydrs.core.models import ClausalForm
from pydrs.core.text import sentence_tokens

logger = logging.getLogger(__name__)


def cosine_similarities(vector, matrix):
	"""
	Cosine similarity of ``vector`` with every row of ``matrix``. A zero vector on either side has similarity -1.

	:rtype: numpy.ndarray
	"""
	norms = np.linalg.norm(matrix, axis=1) * np.linalg.norm(vector)
	similarities = np.full(len(matrix), -1.0)
	nonzero = norms > 0
	similarities[nonzero] = matrix[nonzero] @ vector / norms[nonzero]
	return similarities


def sim_spar_predict(inputs, training, table):
	"""
	Predict a form for every input sentence.

	:param inputs: List of raw sentences.
	:param training: List of ``(sentence, form)`` pairs or of forms (their raw text is the sentence).
	:param table: Embedding table.
	:return: One training form per input, with sequential document ids.
	:raise: pydrs.core.exceptions.EmptyTraining
	"""
	training = [(item.raw_text, item) if isinstance(item, ClausalForm) else tuple(item) for item in training]
	if not training:
		raise EmptyTraining('the training corpus is empty')

	matrix = np.array([embed_sentence(sentence_tokens(sentence), table) for sentence, _ in training])
	matrix = matrix.reshape(len(training), table.dimension or 0)

	predictions = list()
	for index, sentence in enumerate(inputs):
		similarities = cosine_similarities(embed_sentence(sentence_tokens(sentence), table), matrix)
		best = int(np.argmax(similarities))
		logger.debug('Input {}: training document {} (cosine {:.4f})'.format(index, best, similarities[best]))
		predictions.append(training[best][1].with_doc_id(str(index)))
	return predictions
