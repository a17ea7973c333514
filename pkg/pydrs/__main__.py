"""
PyDRS python module (when running python -m pydrs). Will start the CLI.
"""
from pydrs.core import management

if __name__ == '__main__':
	management.execute_from_command_line()
