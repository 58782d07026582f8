import pytest


@pytest.fixture(scope='function', name='write_table')
def write_table(tmp_path):
    def _write(text, name='data.csv'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
