"""
Django settings for the kappa project.

The project has no web surface and no models; Django supplies settings, logging configuration,
management commands and the test runner. Local overrides come from env.yaml (see env.template.yaml).
"""

import os
import yaml
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = 'dummy'

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    'rest_framework',

    'algebra',
    'groups',
    'commuting',
    'spectra',
    'treecount',
    'partitions',
    'formulas',
    'api',
    'cli',
]

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    },
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

USE_TZ = True
TIME_ZONE = 'UTC'

TEST_RUNNER = 'kappa.test_runner.PytestTestRunner'


# Group construction

# Closure aborts once this many elements are discovered
GROUP_ORDER_CAP = 8192
# Associativity is checked on every triple up to this order, on sampled triples above it
ASSOCIATIVITY_EXHAUSTIVE_MAX = 128
ASSOCIATIVITY_SAMPLE_FACTOR = 10
ASSOCIATIVITY_SEED = 0

FIELD_MAX_ORDER = 2 ** 16
FIELD_MAX_PRIME = 251


# Graph engines

INDEPENDENCE_EXACT_CAP = 600
MATRIX_TREE_EXACT_CAP = 1000
AC_CROSS_CHECK_MAX_ORDER = 200
MODULAR_PRIME_BITS = 62
MODULAR_WORKERS = 1


# Partitions and ledger

PARTITION_EXACT_CAP = 24
LEDGER_WORKERS = 1


LOG_LEVEL = 'INFO'
LOG_DIR = BASE_DIR / 'logs'

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '[%(asctime)s] %(levelname)s [%(name)s:%(lineno)s] %(message)s',
            'datefmt': '%d/%b/%Y %H:%M:%S',
        },
        'colored': {
            '()': 'colorlog.ColoredFormatter',
            'datefmt': '%d/%b/%Y %H:%M:%S',
            'format': '%(purple)s[%(asctime)s] %(cyan)s[%(name)s:%(lineno)s] %(log_color)s%(levelname)-4s%(reset)s %(white)s%(message)s',
        }
    },
    'handlers': {
        # stdout carries command output only
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'colored',
        },
        'logfile': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': str(LOG_DIR / 'kappa.log'),
            'maxBytes': 1024 * 1024 * 64,  # 64mb
            'backupCount': 5,
            'formatter': 'standard',
            'delay': True,
        },
        'null': {
            'class': 'logging.NullHandler',
        },
    },
    'loggers': {
        '': {
            'handlers': ['console', 'logfile'],
            'level': LOG_LEVEL,
            'propagate': True,
        },
        'django.db.backends': {
            'level': 'WARN',
            'handlers': ['null'],
            'propagate': False,
        },
    },
}


# Local overrides from env.yaml
env_path = os.path.join(BASE_DIR, 'env.yaml')
if os.path.exists(env_path):
    with open(env_path) as f:
        local_settings = yaml.load(f, Loader=yaml.FullLoader)
    globals().update(local_settings or {})

LOGGING['loggers']['']['level'] = LOG_LEVEL

os.makedirs(LOG_DIR, exist_ok=True)
