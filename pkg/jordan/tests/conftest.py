import pytest

from group_core.factory import GroupFactory


@pytest.fixture
def named_group():
    """
    Builds a named group, ``kind:params``.
    """
    return GroupFactory.build_named
