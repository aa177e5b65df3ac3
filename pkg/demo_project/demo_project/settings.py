"""
Settings of the demo project hosting the peak_division apps, their
management commands and their tests.
"""
import os
import sys

from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent

# the apps live two levels up when running from a source checkout
sys.path.insert(0, str(BASE_DIR.parent))

SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", "demo-project-not-for-production")

DEBUG = True

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "peak_division.economy",
    "peak_division.rules",
    "peak_division.axioms",
    "peak_division.dominance",
    "peak_division.harness",
]

MIDDLEWARE = []

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {"context_processors": []},
    },
]

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# peak_division
PEAK_DIVISION_GRID_POINTS = 5
PEAK_DIVISION_WORKERS = int(os.environ.get("PEAK_DIVISION_WORKERS", "1"))
PEAK_DIVISION_REPORT_FORMAT = "json"
PEAK_DIVISION_REPORT_TIMINGS = False

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "default": {
            "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "default",
        },
    },
    "loggers": {
        "peak_division": {
            "handlers": ["console"],
            "level": os.environ.get("PEAK_DIVISION_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}
