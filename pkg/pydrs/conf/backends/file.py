import os

from pydrs.conf.backends.base import ConfigBackend
from pydrs.core.exceptions import ImproperlyConfigured


class FileConfigBackend(ConfigBackend):
	name = None
	file_name = None

	def __init__(self, **options):
		super().__init__(**options)

		self.directory = None
		self.path = None

	def load(self):
		# Make sure we load the defaults first.
		super().load()

		self.directory = os.environ.get('PYDRS_SETTINGS_DIRECTORY')
		if not self.directory:
			raise ImproperlyConfigured(
				'Settings directory is not defined! Please define PYDRS_SETTINGS_DIRECTORY in your environment.'
			)
		self.directory = os.path.join(os.getcwd(), self.directory)

		if not os.path.isdir(self.directory):
			raise ImproperlyConfigured(
				'Settings directory does not exist or is not a directory! Please define the right '
				'PYDRS_SETTINGS_DIRECTORY in your environment.'
			)

		self.path = os.path.join(self.directory, self.file_name)
		if not os.path.isfile(self.path):
			raise ImproperlyConfigured(
				'The configuration file doesn\'t exist in the directory: file: {}'.format(self.file_name)
			)

		self.settings['SETTINGS_DIRECTORY'] = self.directory

	def store(self, parsed_settings):
		"""
		Put the parsed mapping into the local settings (+ uppercase keys).

		:param parsed_settings: Mapping read from the file.
		:type parsed_settings: dict
		"""
		if not isinstance(parsed_settings, dict):
			raise ImproperlyConfigured(
				'The configuration file {} should contain a mapping at the top level!'.format(self.file_name)
			)
		for key, value in parsed_settings.items():
			self.settings[key.upper()] = value
