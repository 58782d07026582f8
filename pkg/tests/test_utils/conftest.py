import pytest


@pytest.fixture(scope='function', name='toml_document')
def toml_document():
    return (
        '[confsel.stability]\n'
        'window_width = 3\n'
        '\n'
        '[confsel.pipeline]\n'
        'alpha = 0.1\n'
        'draws = 500\n'
        '\n'
        '[confsel.ordering]\n'
        'pinned_high = ["age"]\n'
    )
