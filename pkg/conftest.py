"""
Test wiring for pytest: the suite is written as Django TestCases meant to
run through ``demo_project/manage.py test``. Configure Django the same way
and create a throwaway test database for the session.
"""
import os
import sys

import django

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(HERE, "demo_project"))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "demo_project.settings")
django.setup()

_old_config = None


def pytest_sessionstart(session):
    global _old_config
    from django.test.utils import setup_databases, setup_test_environment

    setup_test_environment()
    _old_config = setup_databases(verbosity=0, interactive=False)


def pytest_sessionfinish(session, exitstatus):
    from django.test.utils import teardown_databases, teardown_test_environment

    if _old_config is not None:
        teardown_databases(_old_config, verbosity=0)
    teardown_test_environment()
