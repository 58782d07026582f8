import io
import json

import numpy as np
import pandas as pd
import pytest

from confsel.backend import (Writer, WriterManager, read_strata_csv, read_trajectory_csv,
                             study_frame)
from confsel.stability import trajectory_frame


def test_registered_writers():
    assert set(WriterManager.writers) >= {
        'trajectory_csv', 'ordering_csv', 'strata_csv', 'study_csv', 'replicates_csv',
        'ecdf_csv', 'report_json', 'manifest_json', 'report_txt', 'study_txt',
    }

def test_register_rejects():
    class NotWriter(object):
        NAME = 'not_a_writer'

    with pytest.raises(TypeError):
        WriterManager.register(NotWriter)

    class Duplicate(Writer):
        NAME = 'strata_csv'

        def render(self, obj):
            return ''

    with pytest.raises(ValueError):
        WriterManager.register(Duplicate)

def test_writer_needs_name():
    class Nameless(Writer):
        pass

    with pytest.raises(ValueError):
        Nameless()

def test_trajectory_round_trip(report):
    buffer = io.StringIO()
    WriterManager.get_writer('trajectory_csv')().write(report, buffer)
    frame = read_trajectory_csv(io.StringIO(buffer.getvalue()))
    expected = trajectory_frame(report.stability, report.ordering.ordered_labels)
    pd.testing.assert_frame_equal(frame, expected, check_dtype=False)

def test_strata_round_trip(report, tmp_path):
    path = str(tmp_path / 'strata.csv')
    match = report.selected.match
    WriterManager.get_writer('strata_csv')().write(match, path)
    again = read_strata_csv(path)
    assert [sorted(s) for s in again.strata] == [sorted(s) for s in match.strata]
    assert np.array_equal(again.stratum_of, match.stratum_of)

def test_report_json(report):
    document = json.loads(WriterManager.get_writer('report_json')().render(report))
    assert document['J'] == report.ordering.J
    assert document['selected_orbit'] == report.selected_orbit
    assert [row['name'] for row in document['rows']] == ['selected', 'empty', 'all']
    assert document['rows'][0]['p_value'] == report.selected.test.p_value
    assert len(document['trajectory']) == report.ordering.J
    assert document['trajectory'][-1]['std_diff'] is None

def test_report_json_deterministic(report):
    writer = WriterManager.get_writer('report_json')()
    assert writer.render(report) == writer.render(report)

def test_report_text(report):
    text = WriterManager.get_writer('report_txt')().render(report)
    assert '<- selected' in text
    assert 'selected covariates:' in text

def test_study_tables(study):
    frame = study_frame(study)
    assert frame['method'].tolist() == ['target_ps', 'empty_ps']
    columns = list(frame.columns)
    assert columns.index('size_q3') < columns.index('rejection_rate_0.01')
    assert columns.index('rejection_rate_0.1') < columns.index('mean_estimate')

    replicates = pd.read_csv(io.StringIO(WriterManager.get_writer('replicates_csv')().render(study)))
    assert replicates.shape[0] == 6
    assert replicates['subset_size'].tolist()[:2] == [0, 4]

    ecdf = pd.read_csv(io.StringIO(WriterManager.get_writer('ecdf_csv')().render(study)))
    assert list(ecdf.columns) == ['method', 'alpha', 'ecdf']
    assert ecdf.shape[0] == 2 * 101

def test_manifest(study):
    text = WriterManager.get_writer('manifest_json')({'confsel': {'simulate': {'n_replicates': 3}}}).render(study)
    document = json.loads(text)
    assert document['master_seed'] == 8
    assert document['n_replicates'] == 3
    assert document['scenario']['name'] == 'backend'
    assert document['config']['confsel']['simulate']['n_replicates'] == 3
    assert 'study backend' in WriterManager.get_writer('study_txt')().render(study)
