import json
import time

import pytest

from analysis import errors
from analysis.complex_format import read_complex, serialize_complex
from analysis_bridge import AnalysisBridge, run_query
from cli import main


@pytest.fixture
def out_dir(tmp_path):
    return tmp_path / 'out'


def write_doc(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBuild:

    def test_minimal_document(self, capsys, data_dir, out_dir):
        code, out, _ = run(capsys, 'build', data_dir / 'minimal.ses', '--out', out_dir)
        assert code == 0
        assert (out_dir / 'minimal.complex').read_text(encoding='utf-8') == (
            "dim=1 vertices=2\ns1\ns1 e1\ne1\n"
        )
        assert json.loads(out)['members'] == 3
        assert (out_dir / 'minimal.report.json').exists()

    def test_saigata_needs_single_kind_flag(self, capsys, data_dir, out_dir):
        code, _, err = run(capsys, 'build', data_dir / 'saigata.ses', '--out', out_dir)
        assert code == errors.EmptyUniverseError.exit_code
        assert 'error:' in err

    def test_saigata_document(self, capsys, data_dir, out_dir):
        code, out, _ = run(
            capsys, '--allow-single-kind', 'build', data_dir / 'saigata.ses', '--out', out_dir
        )
        assert code == 0
        assert len(read_complex(out_dir / 'saigata.complex')) == 31
        assert json.loads(out)['f_vector'] == [5, 10, 10, 5, 1]

    def test_duplicate_vertex_is_line_numbered(self, capsys, tmp_path, out_dir):
        path = write_doc(tmp_path, 'dup.ses', "[vertices]\ns1 social\ns1 social\ne1 ecological\n")
        code, _, err = run(capsys, 'build', path, '--out', out_dir)
        assert code == 3
        assert f"{path}:3:" in err

    def test_overlapping_kinds(self, capsys, tmp_path, out_dir):
        path = write_doc(tmp_path, 'overlap.ses', "[vertices]\ns1 social\ns1 ecological\n")
        code, _, _ = run(capsys, 'build', path, '--out', out_dir)
        assert code == 5

    def test_size_guard(self, capsys, data_dir, out_dir):
        code, _, _ = run(
            capsys, 'build', data_dir / 'saigata.ses',
            '--allow-single-kind', '--simplex-cap', '3', '--out', out_dir,
        )
        assert code == 8

    def test_required_subset_dependency(self, capsys, data_dir, out_dir):
        code, _, _ = run(
            capsys, 'build', data_dir / 'saigata.ses',
            '--allow-single-kind', '--require-subset-dependency', '--out', out_dir,
        )
        assert code == 4
        assert (out_dir / 'saigata.report.json').exists()

    def test_named_relation(self, capsys, data_dir, out_dir):
        code, out, _ = run(
            capsys, 'build', data_dir / 'rangeland.ses', '--relation', 'protection', '--out', out_dir
        )
        assert code == 0
        report = json.loads(out)
        assert report['relation'] == 'protection'
        assert report['dimension'] == 2

    def test_unknown_relation_is_usage_error(self, capsys, data_dir, out_dir):
        code, _, _ = run(
            capsys, 'build', data_dir / 'rangeland.ses', '--relation', 'fishing', '--out', out_dir
        )
        assert code == 2

    def test_config_file_and_flag_precedence(self, capsys, tmp_path, data_dir, out_dir):
        config = write_doc(tmp_path, 'run.json', json.dumps({'simplex-cap': 3, 'strict_kinds': False}))
        code, _, _ = run(capsys, 'build', data_dir / 'saigata.ses', '--config', config, '--out', out_dir)
        assert code == 8
        code, _, _ = run(
            capsys, 'build', data_dir / 'saigata.ses',
            '--config', config, '--simplex-cap', '5', '--out', out_dir,
        )
        assert code == 0

    def test_invalid_config(self, capsys, tmp_path, data_dir, out_dir):
        config = write_doc(tmp_path, 'bad.json', json.dumps({'witness_limit': 0}))
        code, _, _ = run(capsys, 'build', data_dir / 'minimal.ses', '--config', config)
        assert code == 14

    def test_fifteen_vertex_document(self, capsys, tmp_path, out_dir):
        ids = [f"x{i:02d}" for i in range(15)]
        doc = write_doc(
            tmp_path, 'full15.ses',
            "[vertices]\n"
            + "".join(f"{v} social\n" for v in ids)
            + "[interactions]\n" + " ".join(ids) + "\n",
        )
        started = time.perf_counter()
        code, out, _ = run(capsys, '--allow-single-kind', 'build', doc, '--out', out_dir)
        elapsed = time.perf_counter() - started
        assert code == 0
        assert elapsed < 5.0
        assert json.loads(out)['members'] == 32767

        path = out_dir / 'full15.complex'
        loaded = read_complex(path)
        assert len(loaded) == 32767
        assert serialize_complex(loaded).encode('utf-8') == path.read_bytes()

        code, out, _ = run(capsys, 'query', path, 'fvector')
        assert code == 0
        assert out.split()[:3] == ['15', '105', '455']

    def test_missing_document(self, capsys, tmp_path, out_dir):
        code, _, _ = run(capsys, 'build', tmp_path / 'absent.ses', '--out', out_dir)
        assert code == 1


class TestEvolve:

    def test_growth_artifacts(self, capsys, out_dir):
        started = time.perf_counter()
        code, out, _ = run(capsys, 'evolve', 5, 4, '--out', out_dir)
        assert time.perf_counter() - started < 1.0
        assert code == 0
        assert 'higher' in out
        for alpha in range(1, 5):
            assert (out_dir / f"step_{alpha}.complex").exists()
        manifest = json.loads((out_dir / 'manifest.json').read_text(encoding='utf-8'))
        assert manifest['time_index'] == [1, 2, 3, 4]
        assert manifest['static'] is False
        assert (out_dir / 'ledger.csv').read_text(encoding='utf-8').startswith('step,input,')

    def test_single_step_is_static(self, capsys, out_dir):
        code, _, _ = run(capsys, 'evolve', 5, 1, '--out', out_dir)
        assert code == 0
        manifest = json.loads((out_dir / 'manifest.json').read_text(encoding='utf-8'))
        assert manifest['static'] is True

    @pytest.mark.parametrize('n, last_step', [(5, 5), (5, 0), (1, 1), (0, 1), (-1, 1)])
    def test_range_errors(self, capsys, out_dir, n, last_step):
        code, _, _ = run(capsys, 'evolve', n, last_step, '--out', out_dir)
        assert code == 7

    def test_names(self, capsys, out_dir):
        code, _, _ = run(capsys, 'evolve', 3, 2, '--names', 'a', 'b', 'c', '--out', out_dir)
        assert code == 0
        assert read_complex(out_dir / 'step_2.complex').universe.ids == ('a', 'b', 'c')

    def test_names_count_mismatch(self, capsys, out_dir):
        code, _, _ = run(capsys, 'evolve', 3, 2, '--names', 'a', 'b', '--out', out_dir)
        assert code == 2

    def test_matches_build_of_clique_document(self, capsys, tmp_path, out_dir):
        run(capsys, 'evolve', 3, 2, '--out', out_dir / 'evolve')
        doc = write_doc(
            tmp_path, 'clique.ses',
            "[vertices]\nv0 social\nv1 social\nv2 social\n[interactions]\nv0 v1 v2\n",
        )
        code, _, _ = run(capsys, '--allow-single-kind', 'build', doc, '--out', out_dir / 'build')
        assert code == 0
        assert (out_dir / 'evolve' / 'step_2.complex').read_bytes() == (
            out_dir / 'build' / 'clique.complex'
        ).read_bytes()


class TestQueryAndCompare:

    @pytest.fixture
    def steps(self, capsys, out_dir):
        run(capsys, 'evolve', 5, 4, '--out', out_dir)
        return {alpha: out_dir / f"step_{alpha}.complex" for alpha in range(1, 5)}

    def test_fvector(self, capsys, steps):
        code, out, _ = run(capsys, 'query', steps[4], 'fvector')
        assert code == 0
        assert out == "5 10 10 5 1\n"

    def test_skeleton_then_fvector(self, capsys, tmp_path, steps):
        _, out, _ = run(capsys, 'query', steps[4], 'skeleton', 1)
        skeleton = write_doc(tmp_path, 'skeleton.complex', out)
        _, out, _ = run(capsys, 'query', skeleton, 'fvector')
        assert out == "5 10\n"

    def test_dimension_of_worked_example(self, capsys, tmp_path):
        path = write_doc(
            tmp_path, 'worked.complex',
            "dim=2 vertices=3\nv_i\nv_i v_j\nv_i v_j v_k\nv_i v_k\nv_j\nv_j v_k\nv_k\n",
        )
        _, out, _ = run(capsys, 'query', path, 'dimension')
        assert out == "2\n"

    def test_facets_are_labelled(self, capsys, steps):
        _, out, _ = run(capsys, 'query', steps[4], 'facets')
        lines = out.splitlines()
        assert lines[0].startswith('# facets: codimension-1')
        assert len(lines) == 6
        _, out, _ = run(capsys, 'query', steps[4], 'maximal')
        assert out.splitlines() == ['# facets: maximal', 'v0 v1 v2 v3 v4']

    def test_boundary(self, capsys, steps):
        _, out, _ = run(capsys, 'query', steps[4], 'boundary')
        assert len(out.splitlines()) == 30

    def test_unknown_query(self, capsys, steps):
        code, _, _ = run(capsys, 'query', steps[4], 'homology')
        assert code == 2

    def test_skeleton_requires_p(self, capsys, steps):
        code, _, _ = run(capsys, 'query', steps[4], 'skeleton')
        assert code == 2

    def test_malformed_file(self, capsys, tmp_path):
        path = write_doc(tmp_path, 'bad.complex', "dim=1 vertices=1\na\na b\n")
        code, _, err = run(capsys, 'query', path, 'dimension')
        assert code == 3
        assert ':3:' in err

    def test_compare_step_one_and_four(self, capsys, steps):
        code, out, _ = run(capsys, 'compare', steps[1], steps[4])
        assert code == 0
        payload = json.loads(out)
        assert payload['graphs_identical'] is True
        assert payload['skeleton_collision']['collision'] is True
        assert payload['skeleton_collision']['witness_dimension'] == 4

    def test_compare_table(self, capsys, steps):
        code, out, _ = run(capsys, 'compare', steps[1], steps[4], '--table')
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ['complex', 'dimension', 'total', 'surviving', 'lost', 'dimension_drop']
        assert lines[1].split() == ['a', '1', '15', '15', '0', '0']
        assert lines[2].split() == ['b', '4', '31', '15', '16', '3']

    def test_compare_with_itself(self, capsys, steps):
        code, out, _ = run(capsys, 'compare', steps[2], steps[2])
        assert code == 0
        assert json.loads(out)['skeleton_collision']['collision'] is False

    def test_compare_universe_mismatch(self, capsys, tmp_path, steps):
        other = write_doc(tmp_path, 'other.complex', "dim=1 vertices=2\na\na b\nb\n")
        code, _, _ = run(capsys, 'compare', steps[1], other)
        assert code == 9


def test_demo_saigata(capsys, out_dir):
    code, out, _ = run(capsys, 'demo-saigata', '--out', out_dir)
    assert code == 0
    findings = json.loads(out)['key_findings']
    assert findings['evolve']['final_members'] == 31
    assert findings['evolve']['final_dimension'] == 4
    assert findings['evolve']['step_outputs'] == [10, 10, 5, 1]
    assert findings['compare']['collision'] is True

    bundle = out_dir / 'saigata'
    assert (bundle / 'summary.json').exists()
    assert (bundle / 'comparison_step1_vs_step4.json').exists()
    table = (bundle / 'comparison_step1_vs_step4.txt').read_text(encoding='utf-8')
    assert table.splitlines()[0].split()[0] == 'complex'
    gml = (bundle / 'graphs' / 'step_1.gml').read_text(encoding='utf-8')
    assert gml.count('edge [') == 10


def test_run_query_without_cli(worked_complex):
    assert run_query(worked_complex, 'boundary').splitlines()[0] == 'v_i'
    with pytest.raises(ValueError):
        run_query(worked_complex, 'skeleton')


def test_bridge_summary_before_any_command():
    assert 'error' in AnalysisBridge().generate_summary_report()


def test_exit_codes_are_distinct():
    classes = [
        errors.ParseError, errors.ValidationFailure, errors.DisjointnessError,
        errors.EmptyUniverseError, errors.StepRangeError, errors.SimplexSizeError,
        errors.UniverseMismatchError, errors.SenDimensionError, errors.DuplicateVertexError,
        errors.UnknownVertexError, errors.EmptySimplexError, errors.ConfigError,
    ]
    codes = [cls.exit_code for cls in classes]
    assert len(set(codes)) == len(codes)
    assert errors.EXIT_USAGE not in codes
    assert errors.DocumentParseError.exit_code == errors.ComplexFormatError.exit_code == 3
