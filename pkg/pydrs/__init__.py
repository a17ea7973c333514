"""
PyDRS, a toolkit for Discourse Representation Structures in clausal form for Python 3.6+.
Please see LICENSE file in root of project.
"""
__version__ = '0.1.0'
__author__ = 'PyDRS contributors'
