import functools
import os
import pkgutil
import sys

from importlib import import_module

from pydrs import __version__ as version
from pydrs.core.management.base import BaseCommand, CommandError, CommandParser, handle_default_options
from pydrs.core.management.color import color_style


def find_commands(management_dir):
	command_dir = os.path.join(management_dir, 'commands')
	return [name for _, name, is_pkg in pkgutil.iter_modules([command_dir]) if not is_pkg and not name.startswith('_')]


@functools.lru_cache(maxsize=None)
def get_commands():
	"""
	Return a dictionary mapping command names to the package that holds them. Commands are the modules in the
	``pydrs.core.management.commands`` package.

	The dictionary is cached on the first call and reused on subsequent calls.
	"""
	return {name: 'pydrs.core' for name in find_commands(__path__[0])}


def load_command_class(app_name, name):
	"""
	Given a command name and an application name, return the Command class instance. Allow all errors raised by
	the import process (ImportError, AttributeError) to propagate.
	"""
	module = import_module('{}.management.commands.{}'.format(app_name, name))
	return module.Command()


class ManagementUtility:
	def __init__(self, argv=None):
		self.argv = argv or sys.argv[:]
		self.prog_name = os.path.basename(self.argv[0])
		self.version = version

	def fetch_command(self, subcommand):
		"""
		Try to fetch the given subcommand.

		:return: Command instance or None when it doesn't exist.
		"""
		commands = get_commands()
		try:
			app_name = commands[subcommand]
		except KeyError:
			sys.stderr.write(
				'Unknown command: {}\nType \'{} help\' for usage.\n'.format(subcommand, self.prog_name)
			)
			return None
		if isinstance(app_name, BaseCommand):
			return app_name
		return load_command_class(app_name, subcommand)

	def execute(self):
		"""
		Run the subcommand given in the arguments.

		:return: Exit status.
		:rtype: int
		"""
		try:
			subcommand = self.argv[1]
		except IndexError:
			subcommand = 'help'

		parser = CommandParser(None, usage='%(prog)s subcommand [options] [args]', add_help=False)
		parser.add_argument('--settings')
		parser.add_argument('--pythonpath')
		parser.add_argument('args', nargs='*')
		try:
			options, args = parser.parse_known_args(self.argv[2:])
			handle_default_options(options)
		except CommandError:
			options, args = None, []

		if subcommand == 'help':
			if '--commands' in args:
				sys.stdout.write(self.main_help_text(commands_only=True) + '\n')
			elif options is None or len(options.args) < 1:
				sys.stdout.write(self.main_help_text() + '\n')
			else:
				command = self.fetch_command(options.args[0])
				if command is None:
					return 2
				command.print_help(self.prog_name, options.args[0])
			return 0
		elif subcommand == 'version' or self.argv[1:] == ['--version']:
			sys.stdout.write(self.version + '\n')
			return 0
		elif self.argv[1:] in (['--help'], ['-h']):
			sys.stdout.write(self.main_help_text() + '\n')
			return 0

		command = self.fetch_command(subcommand)
		if command is None:
			return 2
		return command.run_from_argv(self.argv)

	def main_help_text(self, commands_only=False):
		"""Return the script's main help text, as a string."""
		if commands_only:
			return '\n'.join(sorted(get_commands().keys()))

		style = color_style()
		usage = [
			'',
			'Type \'{} help <subcommand>\' for help on a specific subcommand.'.format(self.prog_name),
			'',
			'Available subcommands:',
			'',
			style.NOTICE('[pydrs]'),
		]
		for name in sorted(get_commands()):
			usage.append('    {}'.format(name))
		return '\n'.join(usage)


def run(argv):
	"""
	Run the command line with the given arguments (without the program name).

	:param argv: List of arguments, the first one being the subcommand.
	:return: Exit status.
	:rtype: int
	"""
	return ManagementUtility(['pydrs'] + list(argv)).execute()


def call_command(command_name, *args, **options):
	"""
	Call the given command, with the given options and args/kwargs. This is the primary API you should use for
	calling specific commands from code.

	:return: The output of the command.
	"""
	if isinstance(command_name, BaseCommand):
		command = command_name
		command_name = command.__class__.__module__.split('.')[-1]
	else:
		try:
			app_name = get_commands()[command_name]
		except KeyError:
			raise CommandError('Unknown command: {!r}'.format(command_name))
		command = load_command_class(app_name, command_name)

	parser = command.create_parser('', command_name)
	opt_mapping = {
		min(s_opt.option_strings).lstrip('-').replace('-', '_'): s_opt.dest
		for s_opt in parser._actions if s_opt.option_strings
	}
	arg_options = {opt_mapping.get(key, key): value for key, value in options.items()}
	defaults = parser.parse_args(args=[str(a) for a in args])
	defaults = dict(defaults._get_kwargs(), **arg_options)
	args = defaults.pop('args', ())
	return command.execute(*args, **defaults)


def execute_from_command_line(argv=None):
	"""Run a ManagementUtility."""
	utility = ManagementUtility(argv)
	sys.exit(utility.execute())
