#-*- coding:utf8 -*-
import os
import sys
from functools import wraps

import attr
import click
from click.types import Choice
from toml import dumps

from confsel import __version__
from confsel.errors import ConfselError, ContractError
from confsel.utils import NArgsParam, parse_config

_DEFAULT_CONFIG = 'confsel_cli.toml'


def _strip_none(document):
  # toml has no null
  if isinstance(document, dict):
    return {k: _strip_none(v) for k, v in document.items() if v is not None}
  return document


def _report_errors(func):
  @wraps(func)
  def wrapped(*args, **kwargs):
    try:
      return func(*args, **kwargs)
    except ConfselError as err:
      click.secho('[{}] {}'.format(err.MODULE, err), fg='red', bold=True, err=True)
      sys.exit(1)
  return wrapped


def _data_options(func):
  func = click.option(
    '--outcome-kind', default='continuous', show_default=True,
    type=Choice(['continuous', 'binary']), help='type of the outcome column'
  )(func)
  func = click.option('--outcome', 'outcome_column', required=True, help='outcome column name')(func)
  func = click.option('--treatment', 'treatment_column', required=True, help='0/1 treatment column name')(func)
  func = click.argument('data_file', required=True, metavar='DATA.{csv,tsv}')(func)
  return func


def _pipeline_options(func):
  options = [
    click.option('--pin-high', type=NArgsParam(), metavar='COL,COL,...',
                 help='covariates forced to the front of the ordering'),
    click.option('--pin-low', type=NArgsParam(), metavar='COL,COL,...',
                 help='covariates forced to the back of the ordering'),
    click.option('--estimator', default=None,
                 type=Choice(['doubly_robust_standardization', 'ols_linear']),
                 help='per-orbit effect estimator'),
    click.option('--window-width', type=int, default=None, help='odd width of the stability window'),
    click.option('--benchmark-orbit', type=int, default=None, help='benchmark orbit, the last by default'),
    click.option('--draws', type=int, default=None, help='randomization draws'),
    click.option('--alpha', type=float, default=None, help='significance level'),
  ]
  for option in reversed(options):
    func = option(func)
  return func


def _load_data(data_file, treatment_column, outcome_column, outcome_kind, document):
  from confsel.frontend import FrontendSelector

  frontend_config = document.get('confsel', {}).get('frontend', {})
  try:
    return FrontendSelector.parse(
      data_file, treatment_column, outcome_column, outcome_kind, config=frontend_config
    )
  except ValueError as err:
    if isinstance(err, ConfselError):
      raise
    raise ContractError(str(err))


def _pipeline_config(document, seed=None, pin_high=None, pin_low=None, estimator=None,
                     window_width=None, benchmark_orbit=None, draws=None, alpha=None):
  from confsel.pipeline import PipelineConfig

  config = PipelineConfig.from_config(document, seed=seed, draws=draws, alpha=alpha)
  ordering = attr.evolve(
    config.ordering,
    **{k: v for k, v in [('pinned_high', pin_high), ('pinned_low', pin_low)] if v}
  )
  effect = config.effect
  if estimator is not None:
    effect = attr.evolve(effect, estimator_kind=estimator)
  stability = config.stability
  if window_width is not None:
    stability = attr.evolve(stability, window_width=window_width)
  if benchmark_orbit is not None:
    stability = attr.evolve(stability, benchmark_orbit=benchmark_orbit)
  return attr.evolve(config, ordering=ordering, effect=effect, stability=stability)


def _resolve_subset(data, covariates):
  return [data.column_index(label) for label in covariates or []]


def _emit(writer_name, obj, output):
  from confsel.backend import WriterManager

  writer = WriterManager.get_writer(writer_name)()
  if output is None:
    click.echo(writer.render(obj), nl=False)
  else:
    writer.write(obj, output)
    click.secho('{} written: {}'.format(writer_name, output), fg='white', bold=True)


@click.group(name='confsel-cli')
@click.help_option('-h', '--help')
@click.version_option(__version__,
                      '-V', '--version')
@click.option('--config', default=_DEFAULT_CONFIG, show_default=True,
              metavar='CONFIG.{toml,json}', help='configuration file, read when it exists')
@click.pass_context
def cli(ctx, config):
  if os.path.exists(config):
    document = parse_config(config)
  elif config != _DEFAULT_CONFIG:
    raise click.BadParameter('config file not found: {}'.format(config), param_hint='--config')
  else:
    document = {}
  ctx.obj = document


@cli.command(name='generate-config', help='generate config toml file')
@click.help_option('-h', '--help')
@click.option('-o', '--output', default=_DEFAULT_CONFIG, metavar='CONFIG.toml', help='the output config file name')
def generate_config(output):
  from confsel.pipeline import PipelineConfig
  from confsel.simulate import StudyConfig

  config = PipelineConfig().to_config()
  config['confsel'].update(StudyConfig().to_config()['confsel'])
  click.secho(
    'generating config file: {}'.format(output),
    fg='white',
    bold=True,
  )
  with open(output, 'w') as fid:
    fid.write(
      '# https://github.com/toml-lang/toml\n'
      '# confsel.<component>.<option>\n'
    )
    fid.write(dumps(_strip_none(config)))


@cli.command(name='order', help='order the covariates by double selection')
@click.help_option('-h', '--help')
@_data_options
@click.option('--pin-high', type=NArgsParam(), metavar='COL,COL,...')
@click.option('--pin-low', type=NArgsParam(), metavar='COL,COL,...')
@click.option('-o', '--output', default=None, metavar='ORDERING.csv', help='write here instead of stdout')
@click.pass_obj
@_report_errors
def order(document, data_file, treatment_column, outcome_column, outcome_kind,
          pin_high, pin_low, output):
  from confsel.ordering import order_covariates

  data = _load_data(data_file, treatment_column, outcome_column, outcome_kind, document)
  config = _pipeline_config(document, pin_high=pin_high, pin_low=pin_low)
  _emit('ordering_csv', order_covariates(data, config.ordering), output)


@cli.command(name='trace', help='per-orbit effect estimates, standardized differences and Q')
@click.help_option('-h', '--help')
@_data_options
@_pipeline_options
@click.option('-o', '--output', default=None, metavar='TRAJECTORY.csv', help='write here instead of stdout')
@click.pass_obj
@_report_errors
def trace(document, data_file, treatment_column, outcome_column, outcome_kind, output, **flags):
  from confsel.backend._csv import FLOAT_FORMAT
  from confsel.pipeline import select_adjustment_set
  from confsel.stability import trajectory_frame

  data = _load_data(data_file, treatment_column, outcome_column, outcome_kind, document)
  config = _pipeline_config(document, **flags)
  ordering, _, stability, _ = select_adjustment_set(data, config)
  if stability is None:
    raise ContractError('no covariates to trace')
  content = trajectory_frame(stability, ordering.ordered_labels).to_csv(
    output, index=False, float_format=FLOAT_FORMAT
  )
  if output is None:
    click.echo(content, nl=False)


@cli.command(name='select', help='select the stable adjustment set')
@click.help_option('-h', '--help')
@_data_options
@_pipeline_options
@click.pass_obj
@_report_errors
def select(document, data_file, treatment_column, outcome_column, outcome_kind, **flags):
  from confsel.pipeline import select_adjustment_set

  data = _load_data(data_file, treatment_column, outcome_column, outcome_kind, document)
  config = _pipeline_config(document, **flags)
  _, _, stability, subset = select_adjustment_set(data, config)
  orbit = stability.selected_orbit if stability is not None else 0
  click.secho('selected orbit: {}'.format(orbit), fg='white', bold=True)
  click.echo(','.join(data.labels_of(subset)))


@cli.command(name='match', help='optimal full matching on the propensity score of a covariate set')
@click.help_option('-h', '--help')
@_data_options
@click.option('--covariates', type=NArgsParam(), metavar='COL,COL,...', default='',
              help='propensity score covariates, none by default')
@click.option('--distance', type=Choice(['abs_logit_ps', 'abs_ps']), default=None,
              help='matching distance')
@click.option('-o', '--output', default=None, metavar='STRATA.csv', help='write here instead of stdout')
@click.pass_obj
@_report_errors
def match(document, data_file, treatment_column, outcome_column, outcome_kind,
          covariates, distance, output):
  from confsel.matching import MatchingConfig, full_match, ps_for_subset

  data = _load_data(data_file, treatment_column, outcome_column, outcome_kind, document)
  config = MatchingConfig.from_config(document, distance_kind=distance)
  ps = ps_for_subset(data, _resolve_subset(data, covariates))
  _emit('strata_csv', full_match(ps, data.treatment, config=config), output)


@cli.command(name='test', help='randomization test of the sharp null within full-matching strata')
@click.help_option('-h', '--help')
@_data_options
@click.option('--covariates', type=NArgsParam(), metavar='COL,COL,...', default='',
              help='propensity score covariates, none by default')
@click.option('--seed', type=int, required=True, help='seed of the randomization draws')
@click.option('--draws', type=int, default=None, help='randomization draws')
@click.option('--exact', is_flag=True, help='enumerate every assignment instead of drawing')
@click.pass_obj
@_report_errors
def test(document, data_file, treatment_column, outcome_column, outcome_kind,
         covariates, seed, draws, exact):
  from confsel.matching import MatchingConfig, full_match, ps_for_subset
  from confsel.randtest import RandTestConfig, exact_pvalue, randomization_pvalue

  data = _load_data(data_file, treatment_column, outcome_column, outcome_kind, document)
  ps = ps_for_subset(data, _resolve_subset(data, covariates))
  strata = full_match(ps, data.treatment, config=MatchingConfig.from_config(document))
  config = RandTestConfig.from_config(document, draws=draws)
  if exact:
    result = exact_pvalue(strata, data.treatment, data.outcome, config=config)
  else:
    result = randomization_pvalue(strata, data.treatment, data.outcome, seed=seed, config=config)
  click.echo('tau={:.17g} p_value={:.17g} draws={} exact={}'.format(
    result.observed_stat, result.p_value, result.draws, result.exact
  ))


@cli.command(name='pipeline', help='order, trace, select, match and test in one run')
@click.help_option('-h', '--help')
@_data_options
@_pipeline_options
@click.option('--seed', type=int, required=True, help='master seed of the randomization tests')
@click.option('--out-dir', default='.', show_default=True, help='directory of the report files')
@click.option('--no-comparisons', is_flag=True, help='skip the empty and full adjustment sets')
@click.pass_obj
@_report_errors
def pipeline(document, data_file, treatment_column, outcome_column, outcome_kind,
             seed, out_dir, no_comparisons, **flags):
  from confsel.backend import WriterManager
  from confsel.pipeline import run_pipeline

  data = _load_data(data_file, treatment_column, outcome_column, outcome_kind, document)
  config = _pipeline_config(document, seed=seed, **flags)
  if no_comparisons:
    config = attr.evolve(config, comparisons=False)
  report = run_pipeline(data, config)
  os.makedirs(out_dir, exist_ok=True)
  WriterManager.get_writer('report_json')().write(report, os.path.join(out_dir, 'report.json'))
  WriterManager.get_writer('trajectory_csv')().write(report, os.path.join(out_dir, 'trajectory.csv'))
  WriterManager.get_writer('strata_csv')().write(report.selected.match, os.path.join(out_dir, 'strata.csv'))
  click.echo(WriterManager.get_writer('report_txt')().render(report), nl=False)


@cli.command(name='simulate', help='replicate study on a registered scenario')
@click.help_option('-h', '--help')
@click.argument('scenario_name', required=True, metavar='SCENARIO')
@click.option('--replicates', type=int, default=None, help='number of replicates')
@click.option('--methods', type=NArgsParam(), default=None, metavar='METHOD,METHOD,...',
              help='study methods, all by default')
@click.option('--seed', type=int, required=True, help='master seed of the study')
@click.option('--out-dir', default='.', show_default=True, help='directory of the study files')
@click.pass_obj
@_report_errors
def simulate(document, scenario_name, replicates, methods, seed, out_dir):
  from confsel.backend import WriterManager
  from confsel.pipeline import PipelineConfig
  from confsel.simulate import StudyConfig, run_simulation

  study_config = StudyConfig.from_config(document, n_replicates=replicates, methods=methods)
  study, paths = run_simulation(
    scenario_name, study_config.n_replicates, seed, out_dir,
    config=study_config,
    pipeline_config=PipelineConfig.from_config(document, seed=seed),
  )
  for path in sorted(paths.values()):
    click.secho('written: {}'.format(path), fg='white', bold=True)
  click.echo(WriterManager.get_writer('study_txt')().render(study), nl=False)


@cli.command(name='list-scenarios', help='list all registered simulation scenarios')
@click.help_option('-h', '--help')
@click.option('--verbose', is_flag=True)
def list_scenarios(verbose):
  from confsel.simulate import ScenarioRegistry

  for name in ScenarioRegistry.names():
    click.secho(name, fg='white', bold=True)
    if verbose:
      click.secho(str(ScenarioRegistry.get(name).describe()), fg='yellow')
  return 0


if __name__ == '__main__':
  cli()
