from pydrs.baselines import spar_predict, spar_select
from pydrs.core.management.base import CorpusCommand, UsageError


class Command(CorpusCommand):
	help = 'SPAR baseline: predict the most typical training DRS for every document.'

	def add_arguments(self, parser):
		parser.add_argument('--train', required=True, help='Training corpus file.')
		parser.add_argument('--n', type=int, required=True, help='Number of documents to predict.')
		parser.add_argument(
			'--sample', type=int, help='Compare every training form with a random sample of this size (default SPAR_SAMPLE).'
		)
		parser.add_argument('--output', help='Write the predicted corpus to this file instead of stdout.')
		self.add_match_arguments(parser)

	def handle(self, *args, **options):
		if options['n'] < 0:
			raise UsageError('--n must not be negative')
		if options.get('sample') is not None and options['sample'] < 2:
			raise UsageError('--sample must be at least 2, got {}'.format(options['sample']))
		config = self.get_match_config(options)
		training = self.load_corpus(options['train'])
		medoid = spar_select(training, config, sample=options.get('sample'), seed=config.seed)
		return self.write_corpus(spar_predict(options['n'], medoid), options.get('output'))
