import io
import os
import sys

from argparse import ArgumentParser

from pydrs import __version__ as version
from pydrs.conf import settings
from pydrs.core.exceptions import DrsError, ImproperlyConfigured
from pydrs.core.management.color import no_style, color_style
from pydrs.core.parser import read_corpus, read_id_list, write_corpus
from pydrs.core.synsets import load_synset_map
from pydrs.counter import EXHAUSTIVE, HILL_CLIMB, MatchConfig
from pydrs.utils.log import initiate_logger


class CommandError(Exception):
	"""
	Exception class indicating a problem while executing a management command.

	If this exception is raised during the execution of a management command, it will be caught and turned into a
	nicely-printed error message on stderr and exit status 1.
	"""
	pass


class UsageError(CommandError):
	"""
	The command line arguments could not be parsed. Exit status 2.
	"""
	pass


class CommandParser(ArgumentParser):
	def __init__(self, cmd, **kwargs):
		self.cmd = cmd
		super().__init__(**kwargs)

	def error(self, message):
		if self.cmd is not None and self.cmd._called_from_command_line:
			super().error(message)
		else:
			raise UsageError('Error: {}'.format(message))


def handle_default_options(options):
	"""
	Include any default options that all commands should accept here so that ManagementUtility can handle them
	before searching for user commands.
	"""
	changed = False
	if getattr(options, 'settings', None):
		os.environ['PYDRS_SETTINGS_MODULE'] = options.settings
		changed = True
	if getattr(options, 'pythonpath', None):
		sys.path.insert(0, options.pythonpath)
		changed = True
	if changed and settings.configured:
		settings.reset()


class BaseCommand:
	"""
	The base class from which all management commands derive.

	1. ``pydrs`` loads the command class and calls its ``run_from_argv()`` method.

	2. ``run_from_argv()`` calls ``create_parser()`` to get an ``ArgumentParser`` for the arguments, parses them,
	   performs any environment changes requested by options like ``pythonpath`` and then calls ``execute()``.

	3. ``execute()`` sets up logging and calls ``handle()``. Any output returned by ``handle()`` is printed to
	   stdout. Domain errors are turned into a ``CommandError``.

	4. ``run_from_argv()`` prints a ``CommandError`` on stderr and returns the exit status: 0 on success, 1 when
	   the command failed or set ``exit_status``, 2 for usage errors.

	``help``
		A short description of the command, which will be printed in help messages.
	"""
	help = ''

	_called_from_command_line = False

	def __init__(self, stdout=None, stderr=None, no_color=False):
		self.stdout = OutputWrapper(stdout or sys.stdout)
		self.stderr = OutputWrapper(stderr or sys.stderr)
		self.exit_status = 0
		if no_color:
			self.style = no_style()
		else:
			self.style = color_style()
			self.stderr.style_func = self.style.ERROR

	def get_version(self):
		return version

	def create_parser(self, prog_name, subcommand):
		"""
		Create and return the ``ArgumentParser`` which will be used to parse the arguments to this command.
		"""
		parser = CommandParser(
			self, prog='{} {}'.format(os.path.basename(prog_name), subcommand),
			description=self.help or None,
		)
		parser.add_argument('--version', action='version', version=self.get_version())
		parser.add_argument(
			'-v', '--verbosity', action='store', dest='verbosity', default=1,
			type=int, choices=[0, 1, 2, 3],
			help='Verbosity level; 0=minimal output, 1=normal output, 2=verbose output, 3=very verbose output',
		)
		parser.add_argument(
			'--settings',
			help=(
				'The Python path to a settings module, e.g. "myproject.settings". If this isn\'t provided, the '
				'PYDRS_SETTINGS_MODULE environment variable will be used.'
			),
		)
		parser.add_argument(
			'--pythonpath',
			help='A directory to add to the Python path, e.g. "/home/user/myproject".',
		)
		parser.add_argument('--traceback', action='store_true', help='Raise on CommandError exceptions')
		parser.add_argument(
			'--no-color', action='store_true', dest='no_color',
			help='Don\'t colorize the command output.',
		)
		self.add_arguments(parser)
		return parser

	def add_arguments(self, parser):
		"""
		Entry point for subclassed commands to add custom arguments.

		:param parser: Parser instance
		:type parser: argparse.ArgumentParser
		"""
		pass

	def print_help(self, prog_name, subcommand):
		parser = self.create_parser(prog_name, subcommand)
		parser.print_help()

	def run_from_argv(self, argv):
		"""
		Set up any environment changes requested (e.g., Python path and settings), then run this command. If the
		command raises a ``CommandError``, intercept it and print it sensibly to stderr. If the ``--traceback``
		option is present or the raised ``Exception`` is not ``CommandError``, raise it.

		:return: Exit status.
		:rtype: int
		"""
		self._called_from_command_line = True
		parser = self.create_parser(argv[0], argv[1])

		try:
			options = parser.parse_args(argv[2:])
		except SystemExit as e:
			return e.code if isinstance(e.code, int) else 2

		cmd_options = vars(options)
		args = cmd_options.pop('args', ())
		handle_default_options(options)
		try:
			self.execute(*args, **cmd_options)
		except Exception as e:
			if options.traceback or not isinstance(e, CommandError):
				raise
			self.stderr.write('{}: {}'.format(e.__class__.__name__, e))
			return 2 if isinstance(e, UsageError) else 1
		return self.exit_status

	def execute(self, *args, **options):
		"""
		Try to execute this command. Logging is set up according to the verbosity.
		"""
		if options.get('no_color'):
			self.style = no_style()
			self.stderr.style_func = None
		if options.get('stdout'):
			self.stdout = OutputWrapper(options['stdout'])
		if options.get('stderr'):
			self.stderr = OutputWrapper(options['stderr'], self.stderr.style_func)

		if options.get('verbosity', 1) >= 2:
			settings.DEBUG = True
		if self._called_from_command_line:
			initiate_logger()

		self.exit_status = 0
		try:
			output = self.handle(*args, **options)
		except (DrsError, ImproperlyConfigured) as e:
			raise CommandError(str(e)) from e
		if output:
			self.stdout.write(output)
		return output

	def handle(self, *args, **options):
		"""
		The actual logic of the command. Subclasses must implement this method.
		"""
		raise NotImplementedError('subclasses of BaseCommand must provide a handle() method')


class CorpusCommand(BaseCommand):
	"""
	A management command that reads and writes corpus files. Provides the options of the variable mapping search
	through ``add_match_arguments()`` and ``get_match_config()``.
	"""

	def open_file(self, path, mode='r'):
		"""
		Open a UTF-8 text file, ``-`` is stdin or stdout.
		"""
		if path == '-':
			return io.TextIOWrapper(sys.stdin.buffer, encoding='utf-8') if 'r' in mode else self.stdout
		try:
			return open(path, mode, encoding='utf-8')
		except OSError as e:
			raise CommandError('Can\'t open \'{}\': {}'.format(path, e.strerror or e)) from e

	def load_corpus(self, path, ids=None):
		"""
		Read a corpus file, optionally with a file holding one document id per line.

		:rtype: list
		"""
		if ids:
			with self.open_file(ids) as handle:
				ids = read_id_list(handle)
		with self.open_file(path) as handle:
			return read_corpus(handle, ids=ids, comparison_operators=settings.COMPARISON_OPERATORS)

	def load_synset_map(self, path):
		if not path:
			return None
		with self.open_file(path) as handle:
			return load_synset_map(handle)

	def write_corpus(self, forms, path=None):
		if not path or path == '-':
			buffer = io.StringIO()
			write_corpus(forms, buffer)
			return buffer.getvalue()
		with self.open_file(path, 'w') as handle:
			write_corpus(forms, handle)

	def add_match_arguments(self, parser):
		parser.add_argument('--restarts', type=int, help='Hill-climbing restarts (default MATCH_RESTARTS).')
		parser.add_argument('--seed', type=int, help='Seed of the restarts (default MATCH_SEED).')
		parser.add_argument(
			'--exhaustive', action='store_true', help='Use the exhaustive search, optimal but slow on large forms.'
		)
		parser.add_argument('--include-ref', action='store_true', help='Keep the redundant REF clauses.')

	def get_match_config(self, options):
		try:
			return MatchConfig.from_settings(
				restarts=options.get('restarts'),
				seed=options.get('seed'),
				search=EXHAUSTIVE if options.get('exhaustive') else HILL_CLIMB,
				include_ref=True if options.get('include_ref') else None,
			)
		except ValueError as e:
			raise UsageError(str(e)) from e


class OutputWrapper(io.TextIOBase):
	"""
	Wrapper around stdout/stderr
	"""
	@property
	def style_func(self):
		return self._style_func

	@style_func.setter
	def style_func(self, style_func):
		if style_func and self.isatty():
			self._style_func = style_func
		else:
			self._style_func = lambda x: x

	def __init__(self, out, style_func=None, ending='\n'):
		self._out = out
		self.style_func = style_func
		self.ending = ending

	def __getattr__(self, name):
		return getattr(self._out, name)

	def isatty(self):
		return hasattr(self._out, 'isatty') and self._out.isatty()

	def write(self, msg, style_func=None, ending=None):
		ending = self.ending if ending is None else ending
		if ending and not msg.endswith(ending):
			msg += ending
		style_func = style_func or self.style_func
		self._out.write(style_func(msg))
