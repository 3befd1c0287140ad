import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'delrecon-insecure-development-key')

DEBUG = False

ALLOWED_HOSTS = os.getenv('ALLOWED_HOSTS', '').split(', ')

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    'rest_framework',

    'sequences',
    'search',
    'reconstruct',
    'api',
]

"""Реляционное хранилище не используется: отчёты поиска кэшируются в JSON."""
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

REST_FRAMEWORK = {
    'UNICODE_JSON': True,
    'COMPACT_JSON': True,
    'UNAUTHENTICATED_USER': None,
}

DELRECON_CACHE_DIR = Path(
    os.getenv('DELRECON_CACHE_DIR', BASE_DIR / 'search_cache')
)

# Поиск за пределами n=16 не поддерживается даже с флагами.
DELRECON_HARD_MAX_N = 16

DELRECON_MAX_SEARCH_N = min(
    int(os.getenv('DELRECON_MAX_SEARCH_N', 13)), DELRECON_HARD_MAX_N
)

DELRECON_THREADS = int(os.getenv('DELRECON_THREADS', 1))

DELRECON_BLOCK_ROWS = int(os.getenv('DELRECON_BLOCK_ROWS', 256))

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'delrecon': {
            'handlers': ['console'],
            'level': os.getenv('DELRECON_LOG_LEVEL', 'WARNING'),
        },
        'sequences': {
            'handlers': ['console'],
            'level': os.getenv('DELRECON_LOG_LEVEL', 'WARNING'),
        },
        'search': {
            'handlers': ['console'],
            'level': os.getenv('DELRECON_LOG_LEVEL', 'WARNING'),
        },
        'reconstruct': {
            'handlers': ['console'],
            'level': os.getenv('DELRECON_LOG_LEVEL', 'WARNING'),
        },
    },
}
