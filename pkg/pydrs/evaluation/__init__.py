from pydrs.evaluation.categories import fine_grained, fine_grained_corpus
from pydrs.evaluation.comparison import ensemble_oracle, hardest_documents, pairwise_matrix, winner_counts
from pydrs.evaluation.corpus import CorpusScore, DocumentScore, ill_formed_only, score_corpus
from pydrs.evaluation.length import length_breakdown
from pydrs.evaluation.oracles import oracle_scores, oracle_transform
from pydrs.evaluation.significance import SignificanceResult, approx_randomization

__all__ = [
	'fine_grained', 'fine_grained_corpus', 'ensemble_oracle', 'hardest_documents', 'pairwise_matrix',
	'winner_counts', 'CorpusScore', 'DocumentScore', 'ill_formed_only', 'score_corpus', 'length_breakdown',
	'oracle_scores', 'oracle_transform', 'SignificanceResult', 'approx_randomization',
]
