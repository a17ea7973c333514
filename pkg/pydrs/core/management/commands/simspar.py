from pydrs.baselines import EmbeddingTable, sim_spar_predict
from pydrs.core.management.base import CorpusCommand


class Command(CorpusCommand):
	help = 'SIM-SPAR baseline: predict the DRS of the training sentence closest to every input sentence.'

	def add_arguments(self, parser):
		parser.add_argument('--train', required=True, help='Training corpus file, the raw texts are the sentences.')
		parser.add_argument('--embeddings', required=True, help='Embeddings file, one token and its vector per line.')
		parser.add_argument('--input', required=True, help='Sentences file, one raw sentence per line.')
		parser.add_argument('--output', help='Write the predicted corpus to this file instead of stdout.')

	def handle(self, *args, **options):
		training = self.load_corpus(options['train'])
		with self.open_file(options['embeddings']) as handle:
			table = EmbeddingTable.load(handle)
		with self.open_file(options['input']) as handle:
			sentences = [line.rstrip('\n') for line in handle if line.strip()]

		return self.write_corpus(sim_spar_predict(sentences, training, table), options.get('output'))
