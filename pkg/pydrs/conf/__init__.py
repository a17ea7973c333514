"""
Settings for the PyDRS toolkit.

Values will dynamically read from the settings module or directory provided by your setup. All default values will be
overwritten. Default values are retrieved from `default_settings.py`.
"""
import logging
import os

from pydrs.conf.backends.json import JsonConfigBackend
from pydrs.conf.backends.python import PythonConfigBackend
from pydrs.conf.backends.yaml import YamlConfigBackend
from pydrs.core.exceptions import ImproperlyConfigured

logger = logging.getLogger(__name__)


class LazySettings:
	"""
	The lazy settings class will cache and merge settings that the settings module provided and the defaults
	of the toolkit.
	"""
	BACKEND = {
		'python': PythonConfigBackend,
		'json': JsonConfigBackend,
		'yaml': YamlConfigBackend,
	}

	def __init__(self):
		self._settings = None

	def _setup(self):
		"""
		Setup will create the wrapped settings and load the settings module or files.
		"""
		settings_method = os.environ.get('PYDRS_SETTINGS_METHOD', 'python') or 'python'
		try:
			backend_class = self.BACKEND[settings_method]
		except KeyError:
			raise ImproperlyConfigured(
				'The provided settings method \'{}\' does not exist! '
				'The possible methods: \'python\', \'json\', \'yaml\'.'.format(settings_method)
			)

		# Initiate the backend class and load the contents.
		backend = backend_class()
		backend.load()
		self._settings = backend
		logger.debug('Loaded settings with the {} backend'.format(settings_method))

	def __getattr__(self, item):
		"""
		Get value from local or wrapped settings.
		"""
		if item.startswith('_'):
			raise AttributeError(item)
		if self._settings is None:
			self._setup()
		val = self._settings.get(item)
		self.__dict__[item] = val
		return val

	def __setattr__(self, key, value):
		"""
		Set and clear cached settings.
		"""
		if key == '_settings':
			self.__dict__.clear()
		else:
			self.__dict__.pop(key, None)
		super().__setattr__(key, value)

	def __delattr__(self, item):
		"""
		Delete cached settings.
		"""
		super().__delattr__(item)
		self.__dict__.pop(item, None)

	@property
	def configured(self):
		"""
		Return True if the settings have already been configured.
		"""
		return self._settings is not None

	def reset(self):
		"""
		Clear the current wrapped settings. Useful when reloaded or in tests.
		"""
		self._settings = None


settings = LazySettings()
