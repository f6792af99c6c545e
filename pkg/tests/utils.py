"""
Test utilities and helper functions for consistent testing
"""
import json
import os
import shutil
import subprocess
import sys
import tempfile
from io import StringIO

import numpy as np
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from matcore.arrays import as_array, dagger


class MatrixAssertionsMixin:
    """Numeric assertions on complex arrays and typed carriers"""

    def assertMatrixAlmostEqual(self, actual, expected, atol=1e-10, msg=None):
        actual = as_array(actual)
        expected = as_array(expected)
        self.assertEqual(actual.shape, expected.shape, msg)
        error = float(np.max(np.abs(actual - expected))) if actual.size else 0.0
        self.assertLessEqual(error, atol, msg or f"max entry error {error:.3g} exceeds {atol:.3g}")

    def assertComplexAlmostEqual(self, actual, expected, atol=1e-10, msg=None):
        error = abs(complex(actual) - complex(expected))
        self.assertLessEqual(error, atol, msg or f"{actual} differs from {expected} by {error:.3g}")

    def assertUnitary(self, matrix, atol=1e-9):
        matrix = as_array(matrix)
        self.assertMatrixAlmostEqual(dagger(matrix) @ matrix, np.eye(matrix.shape[0]), atol)

    def assertHermitian(self, matrix, atol=1e-10):
        matrix = as_array(matrix)
        self.assertMatrixAlmostEqual(matrix, dagger(matrix), atol)


class DocumentFilesMixin:
    """Writes interchange documents to a per-test temporary directory"""

    def setUp(self):
        super().setUp()
        self.temp_dir = tempfile.mkdtemp(prefix='realism-toolkit-')

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)
        super().tearDown()

    def write_document(self, data, name='state.json'):
        path = os.path.join(self.temp_dir, name)
        with open(path, 'w', encoding='utf-8') as handle:
            if isinstance(data, str):
                handle.write(data)
            else:
                json.dump(data, handle)
        return path


def matrix_document(matrix, dims=None):
    """Interchange document for a plain nested list / array."""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.complex128))
    document = {'matrix': [[[float(z.real), float(z.imag)] for z in row] for row in matrix]}
    if dims is not None:
        document['dims'] = list(dims)
    return document


def ket_document(amplitudes, dims=None):
    column = np.asarray(amplitudes, dtype=np.complex128).reshape(-1, 1)
    return matrix_document(column, dims)


def run_command(name, *args, **options):
    """
    Run a management command and capture stdout.

    Returns ``(exit_code, stdout)``; a ``CommandError`` is turned into its
    ``returncode`` the way ``manage.py`` does.
    """
    stdout = StringIO()
    stderr = StringIO()
    try:
        call_command(name, *args, stdout=stdout, stderr=stderr, **options)
    except CommandError as exc:
        return exc.returncode, stdout.getvalue()
    return 0, stdout.getvalue()


def run_manage(*argv):
    """
    Run ``manage.py`` in a child process the way a shell would.

    Returns the ``subprocess.CompletedProcess`` with text stdout/stderr.
    """
    return subprocess.run(
        [sys.executable, str(settings.BASE_DIR / 'manage.py'), *argv],
        cwd=settings.BASE_DIR,
        env={**os.environ, 'DJANGO_SETTINGS_MODULE': 'realism_toolkit.settings'},
        capture_output=True,
        text=True,
        timeout=120,
    )
