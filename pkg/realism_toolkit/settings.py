"""
Django settings for the realism_toolkit project.

The toolkit has no database and no HTTP surface; Django provides the
settings layer, logging configuration and the management-command CLI.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Only used by Django internals; nothing is signed or served.
SECRET_KEY = os.environ.get('REALISM_TOOLKIT_SECRET_KEY', 'realism-toolkit-local-only')

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'matcore',
    'realism',
    'locality',
    'schemes',
    'sampler',
    'console',
]

# No persistence: every value is computed from the input documents.
DATABASES = {}


# Internationalization
# https://docs.djangoproject.com/en/5.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Django REST Framework settings (serializers, parsers and renderers only)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'STRICT_JSON': True,
}

# Toolkit defaults; every operation and command flag falls back to these.
REALISM_TOOLKIT = {
    'VALIDATION_TOL': 1e-10,
    'WITNESS_TOL': 1e-9,
    'SCHMIDT_TOL': 1e-8,
    'PRODUCT_TOL': 1e-9,
    'SEARCH_TOL': 1e-8,
    'SEARCH_GRID': 48,
    'REFINE_ITERATIONS': 40,
    'TIE_TOL': 1e-12,
    'NULL_OUTCOME_PROB': 1e-12,
    'EIGEN_MERGE_TOL': 1e-9,
    'HJW_TOL': 1e-8,
    'SHOTS': 100000,
    'SEED': 0,
    'JOBS': 1,
}

LOG_LEVEL = os.environ.get('REALISM_TOOLKIT_LOG_LEVEL', 'WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        app: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app in ('matcore', 'realism', 'locality', 'schemes', 'sampler', 'console')
    },
}
