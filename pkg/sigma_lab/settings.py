import logging
from pathlib import Path

from environs import Env

BASE_DIR = Path(__file__).resolve().parent.parent


env = Env()
env.read_env(BASE_DIR / "env.env")


DEBUG = env.bool("DEBUG", False)
SECRET_KEY = env.str("SECRET_KEY", "sigma-lab-local-development-key")

if DEBUG:
    logging.basicConfig(level=logging.DEBUG)

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    "rest_framework",
    "group_core.apps.GroupCoreConfig",
    "lie_orders.apps.LieOrdersConfig",
    "independence.apps.IndependenceConfig",
    "jordan.apps.JordanConfig",
    "cli.apps.CliConfig",
]

# Everything is computed in memory; there is nothing to persist.
DATABASES = {}

LOG_LEVEL = env.str("LOG_LEVEL", "INFO").upper()
LOG_FILE = env.path("LOG_FILE", BASE_DIR / "sigma_lab.log")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {"format": "%(levelname)s %(asctime)s %(module)s %(message)s"},
        "simple": {"format": "%(levelname)s %(message)s"},
    },
    "handlers": {
        "file": {
            "level": "DEBUG",
            "class": "logging.FileHandler",
            "filename": LOG_FILE,
            "formatter": "verbose",
        },
        "console": {
            "level": LOG_LEVEL,
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {"handlers": ["console", "file"], "level": "WARNING"},
    "loggers": {
        "django": {
            "handlers": ["console", "file"],
            "level": "INFO",
            "propagate": False,
        },
        "project": {
            "handlers": ["console", "file"],
            "level": "DEBUG",
            "propagate": False,
        },
    },
}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [],
    "DEFAULT_RENDERER_CLASSES": ["rest_framework.renderers.JSONRenderer"],
}

# Group theory settings
GROUP_ORDER_CAP = env.int("GROUP_ORDER_CAP", 10**6)
CORPUS_SEED = env.int("CORPUS_SEED", 20110101)
OUTPUT_MODE = env.str("OUTPUT_MODE", "table")
BOUND_PRECISION_BITS = env.int("BOUND_PRECISION_BITS", 64)
CLI_WORKERS = env.int("CLI_WORKERS", 1)

# redis settings
REDIS_HOST = env.str("REDIS_HOST", "localhost")
REDIS_PORT = env.int("REDIS_PORT", 6379)

# celery settings
CELERY_BROKER_URL = f"redis://{REDIS_HOST}:{REDIS_PORT}/0"
CELERY_RESULT_BACKEND = f"redis://{REDIS_HOST}:{REDIS_PORT}/1"
CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", True)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_ENABLE_UTC = True
CELERY_TIMEZONE = TIME_ZONE
