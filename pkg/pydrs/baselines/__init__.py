from pydrs.baselines.embeddings import EmbeddingTable, embed_sentence
from pydrs.baselines.simspar import sim_spar_predict
from pydrs.baselines.spar import spar_predict, spar_select

__all__ = ['EmbeddingTable', 'embed_sentence', 'sim_spar_predict', 'spar_predict', 'spar_select']
