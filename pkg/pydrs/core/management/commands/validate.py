import json

from pydrs.core.management.base import CorpusCommand
from pydrs.referee import validate_corpus


class Command(CorpusCommand):
	help = 'Check the well-formedness of every document of a corpus. Exits with 1 when a document is ill-formed.'

	def add_arguments(self, parser):
		parser.add_argument('file', help='Corpus file, - for stdin.')
		parser.add_argument('--ids', help='File with one document id per line.')
		parser.add_argument('--json', action='store_true', help='Output the report as JSON.')

	def handle(self, *args, **options):
		forms = self.load_corpus(options['file'], options.get('ids'))
		reports = validate_corpus(forms)
		invalid = [report for report in reports if not report.valid]
		if invalid:
			self.exit_status = 1

		if options.get('json'):
			return json.dumps(dict(
				documents=len(reports),
				invalid=len(invalid),
				reports=[
					dict(doc_id=report.doc_id, valid=report.valid, violations=[v.as_dict() for v in report.violations])
					for report in reports
				],
			), indent=2)

		lines = list()
		for index, report in enumerate(reports):
			for violation in report.violations:
				lines.append('DOC{}\t{}\t{}'.format(index, violation.rule, violation.msg))

		if options.get('verbosity', 1) >= 1:
			summary = '{} of {} documents are well-formed'.format(len(reports) - len(invalid), len(reports))
			self.stderr.write(summary, self.style.WARNING if invalid else self.style.SUCCESS)
		return '\n'.join(lines)
