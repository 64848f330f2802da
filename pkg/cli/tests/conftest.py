import json
from io import StringIO

import pytest
from django.core.management import call_command


@pytest.fixture
def run():
    """
    Runs a subcommand and returns what it wrote to stdout.
    """

    def call(name: str, *args, **options) -> str:
        out = StringIO()
        call_command(name, *args, stdout=out, **options)
        return out.getvalue()

    return call


@pytest.fixture
def run_machine(run):
    def call(name: str, *args, **options) -> dict:
        return json.loads(run(name, *args, machine=True, **options))

    return call


@pytest.fixture
def write_file(tmp_path):
    """
    Writes a JSON payload (or raw text or bytes) under tmp_path and returns the path.
    """

    def write(name: str, payload) -> str:
        path = tmp_path / name
        if isinstance(payload, bytes):
            path.write_bytes(payload)
        else:
            path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
        return str(path)

    return write
