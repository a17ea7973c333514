from pydrs.conf import settings
from pydrs.core.exceptions import StructureError
from pydrs.core.management.base import CorpusCommand
from pydrs.render import render_form


class Command(CorpusCommand):
	help = 'Draw the documents of a corpus in box notation.'

	def add_arguments(self, parser):
		parser.add_argument('file', help='Corpus file, - for stdin.')
		parser.add_argument('--ids', help='File with one document id per line.')
		parser.add_argument('--ascii', action='store_true', help='Only use ASCII characters.')
		parser.add_argument('--width', type=int, help='Maximum line width (default RENDER_WIDTH).')

	def handle(self, *args, **options):
		forms = self.load_corpus(options['file'], options.get('ids'))
		ascii = True if options.get('ascii') else settings.RENDER_ASCII

		blocks = list()
		for index, form in enumerate(forms):
			try:
				drawing = render_form(form, width=options.get('width'), ascii=ascii)
			except StructureError as e:
				self.stderr.write('DOC{}\t{}\t{}'.format(index, e.__class__.__name__, e))
				self.exit_status = 1
				continue
			blocks.append('%%% id: {}\n{}'.format(form.doc_id, drawing))
		return '\n\n'.join(blocks)
