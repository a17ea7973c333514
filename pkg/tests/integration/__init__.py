import io
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from pydrs.core.management import run
from pydrs.core.parser import write_corpus


class CommandTestCase(unittest.TestCase):

	def setUp(self):
		self.directory = tempfile.mkdtemp(prefix='pydrs-')

	def tearDown(self):
		shutil.rmtree(self.directory, ignore_errors=True)

	def write_fixture(self, name, forms):
		path = os.path.join(self.directory, name)
		with open(path, 'w', encoding='utf-8') as handle:
			write_corpus(forms, handle)
		return path

	def run_command(self, *argv):
		"""
		Run the command line and return the exit status, stdout and stderr.
		"""
		stdout, stderr = io.StringIO(), io.StringIO()
		with redirect_stdout(stdout), redirect_stderr(stderr):
			status = run([str(arg) for arg in argv])
		return status, stdout.getvalue(), stderr.getvalue()
