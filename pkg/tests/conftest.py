import pytest

from pallen.base_positions import nested_palindrome
from pallen.words import Word

Z3_TEXT = "#a#a#c#a#a#"


@pytest.fixture
def z3() -> Word:
    return Word(Z3_TEXT)


@pytest.fixture
def nested4() -> Word:
    return nested_palindrome(4)
