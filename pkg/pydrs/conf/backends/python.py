import importlib
import os

from pydrs.conf.backends.base import ConfigBackend
from pydrs.core.exceptions import ImproperlyConfigured


class PythonConfigBackend(ConfigBackend):
	name = 'python'

	def __init__(self, **options):
		super().__init__(**options)

		self.module = None

	def load(self):
		# Make sure we load the defaults first.
		super().load()

		# An explicitly named module has to exist, the implicit 'settings' module is optional.
		explicit = os.environ.get('PYDRS_SETTINGS_MODULE')
		self.module = explicit or 'settings'
		self.settings['SETTINGS_MODULE'] = self.module

		try:
			module = importlib.import_module(self.module)
		except ImportError as e:
			if explicit:
				raise ImproperlyConfigured(
					'The settings module can not be imported! Please make sure your settings module exists. '
					'Your module: {}'.format(self.module)
				) from e
			return

		for setting in dir(module):
			if setting.isupper():
				self.settings[setting] = getattr(module, setting)
