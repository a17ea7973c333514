#!/usr/bin/env python3
"""
Bootstrap script of the PyDRS toolkit.
"""
import os

if __name__ == '__main__':
	# Set the settings options.
	os.environ.setdefault('PYDRS_SETTINGS_METHOD', 'python')

	# Use YAML for configuration (comment other options and uncomment the following two lines).
	# os.environ.setdefault('PYDRS_SETTINGS_METHOD', 'yaml')
	# os.environ.setdefault('PYDRS_SETTINGS_DIRECTORY', 'settings')
	# Will search for the file base.yaml in the directory.

	# Use JSON for configuration (comment other options and uncomment the following two lines).
	# os.environ.setdefault('PYDRS_SETTINGS_METHOD', 'json')
	# os.environ.setdefault('PYDRS_SETTINGS_DIRECTORY', 'settings')
	# Will search for the file base.json in the directory.

	from pydrs.core.management import execute_from_command_line
	execute_from_command_line()
