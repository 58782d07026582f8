# -*- coding:utf8 -*-
"""
Optimal full matching as a min-cost flow

A full matching is a minimal edge cover of the complete bipartite
treated-control graph: every unit is covered and no chosen edge joins two
units of degree two or more, so the components are stars. The cover is
found as a flow in which

* every treated unit sends one unit of flow plus whatever it receives from
  the source ``S`` (extra controls),
* every control absorbs one unit plus whatever it forwards to the sink
  ``K`` (extra treated units),
* ``K -> S`` closes the circulation.

Treated-control arcs carry capacity 1 and the integer-scaled distance as
cost, so the support of an optimal integral flow is a minimum-cost cover.

Among equal-cost covers the one using the lexicographically earliest
(treated, control) pairs is returned.
"""
from collections import deque

import networkx as nx
import numpy as np
from scipy.special import logit

from confsel.errors import ContractError, MatchingError
from confsel.logger import logger

from .base import DISTANCE_KINDS, FullMatch, MatchingConfig

__all__ = ['distance_matrix', 'full_match']

_SOURCE = 'source'
_SINK = 'sink'
_ROOT = 'root'


def distance_matrix(ps, treatment, distance_kind='abs_logit_ps', clip=1e-6):
  """
  Treated x control distances

  :rtype: Tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]
  :return: the distances, the treated and the control unit indices
  """
  if distance_kind not in DISTANCE_KINDS:
    raise ContractError('unknown distance: {}, expecting one of {}'.format(distance_kind, DISTANCE_KINDS))
  ps = np.asarray(ps, dtype=float).ravel()
  treatment = np.asarray(treatment, dtype=float).ravel()
  if ps.shape != treatment.shape:
    raise ContractError('expecting {} propensity scores, get {}'.format(treatment.shape[0], ps.shape[0]))
  if not np.all(np.isfinite(ps)) or np.any((ps < 0.) | (ps > 1.)):
    raise ContractError('propensity scores must be finite probabilities')
  if not np.all(np.isin(treatment, (0., 1.))):
    raise ContractError('treatment must be coded 0/1')
  treated = np.flatnonzero(treatment == 1.)
  controls = np.flatnonzero(treatment == 0.)
  if treated.size == 0 or controls.size == 0:
    raise MatchingError(
      'full matching needs both classes, get {} treated and {} control'.format(treated.size, controls.size)
    )
  clipped = np.clip(ps, clip, 1. - clip)
  n_clipped = int(np.sum(clipped != ps))
  if n_clipped:
    logger.info('%s propensity score(s) clipped to [%g, %g] for matching', n_clipped, clip, 1. - clip)
  score = logit(clipped) if distance_kind == 'abs_logit_ps' else clipped
  distances = np.abs(score[treated][:, None] - score[controls][None, :])
  if not np.all(np.isfinite(distances)):
    raise MatchingError('non-finite matching distance')
  return distances, treated, controls


def _build_network(costs, max_controls, max_treated):
  n_treated, n_control = costs.shape
  graph = nx.DiGraph()
  graph.add_node(_SOURCE, demand=-max(n_control - n_treated, 0))
  for t in range(n_treated):
    graph.add_node(('t', t), demand=-1)
  for c in range(n_control):
    graph.add_node(('c', c), demand=1)
  graph.add_node(_SINK, demand=max(n_treated - n_control, 0))
  for t in range(n_treated):
    graph.add_edge(_SOURCE, ('t', t), capacity=max_controls - 1, weight=0)
  for t in range(n_treated):
    for c in range(n_control):
      graph.add_edge(('t', t), ('c', c), capacity=1, weight=int(costs[t, c]))
  for c in range(n_control):
    graph.add_edge(('c', c), _SINK, capacity=max_treated - 1, weight=0)
  graph.add_edge(_SINK, _SOURCE, capacity=n_treated * n_control, weight=0)
  return graph


def _pair(u, v):
  if isinstance(u, tuple) and isinstance(v, tuple) and u[0] == 't':
    return u[1], v[1]
  return None


def _residual_arcs(graph, flow, fixed=(), forbidden=()):
  """
  (tail, head, cost) of every arc with residual capacity; the flow on a
  ``fixed`` pair may not drop and a ``forbidden`` pair may not carry flow
  """
  arcs = []
  for u, v, data in graph.edges(data=True):
    pair = _pair(u, v)
    f = flow[u][v]
    if f < data['capacity'] and pair not in forbidden:
      arcs.append((u, v, data['weight']))
    if f > 0 and pair not in fixed:
      arcs.append((v, u, -data['weight']))
  return arcs


def _potentials(graph, flow):
  residual = nx.DiGraph()
  residual.add_weighted_edges_from(_residual_arcs(graph, flow))
  residual.add_weighted_edges_from((_ROOT, node, 0) for node in graph.nodes)
  return nx.single_source_bellman_ford_path_length(residual, _ROOT)


def _tight_path(arcs, potential, start, end):
  """path from ``start`` to ``end`` over arcs of zero reduced cost"""
  succ = {}
  for u, v, w in arcs:
    if w + potential[u] - potential[v] == 0:
      succ.setdefault(u, []).append(v)
  parent = {start: None}
  queue = deque([start])
  while queue:
    node = queue.popleft()
    if node == end:
      path = []
      while node is not None:
        path.append(node)
        node = parent[node]
      return path[::-1]
    for nxt in succ.get(node, ()):
      if nxt not in parent:
        parent[nxt] = node
        queue.append(nxt)
  return None


def _push_cycle(graph, flow, cycle):
  for u, v in zip(cycle[:-1], cycle[1:]):
    if graph.has_edge(u, v):
      flow[u][v] += 1
    else:
      flow[v][u] -= 1


def _earliest_optimum(graph, flow, n_treated, n_control):
  """
  Among the minimum-cost flows, the one keeping the earliest
  (treated, control) pairs

  Pairs are visited in lexicographic order. A pair already carrying flow is
  fixed; otherwise it is brought in through a zero reduced-cost cycle
  avoiding the fixed and forbidden pairs, or forbidden when no such cycle
  exists. Costs are integers so the reduced costs are exact.
  """
  potential = _potentials(graph, flow)
  fixed, forbidden = set(), set()
  for t in range(n_treated):
    for c in range(n_control):
      tail, head = ('t', t), ('c', c)
      if flow[tail][head] > 0:
        fixed.add((t, c))
        continue
      weight = graph[tail][head]['weight']
      path = None
      if weight + potential[tail] - potential[head] == 0:
        arcs = _residual_arcs(graph, flow, fixed, forbidden | {(t, c)})
        path = _tight_path(arcs, potential, head, tail)
      if path is None:
        forbidden.add((t, c))
        continue
      _push_cycle(graph, flow, [tail] + path)
      fixed.add((t, c))
  return flow


def _prune_to_stars(edges):
  degree = {}
  for t, c in edges:
    degree[('t', t)] = degree.get(('t', t), 0) + 1
    degree[('c', c)] = degree.get(('c', c), 0) + 1
  kept = []
  for t, c in sorted(edges):
    if degree[('t', t)] >= 2 and degree[('c', c)] >= 2:
      degree[('t', t)] -= 1
      degree[('c', c)] -= 1
      continue
    kept.append((t, c))
  return kept


def full_match(ps, treatment, distance_kind=None, config=None):
  """
  Optimal full matching on the propensity score

  :param ps: propensity scores, one per unit
  :param treatment: 0/1 treatment
  :param distance_kind: overrides ``config.distance_kind``
  :type config: :class:`.MatchingConfig`

  :rtype: :class:`.FullMatch`
  """
  config = config or MatchingConfig()
  distance_kind = distance_kind or config.distance_kind
  distances, treated, controls = distance_matrix(ps, treatment, distance_kind, config.clip)
  costs = np.rint(distances * config.cost_scale).astype(np.int64)
  max_controls = config.max_controls or controls.size
  max_treated = config.max_treated or treated.size
  if max_controls < 1 or max_treated < 1:
    raise ContractError('ratio limits must be at least 1')
  graph = _build_network(costs, max_controls, max_treated)
  try:
    flow = nx.min_cost_flow(graph)
  except nx.NetworkXUnfeasible as err:
    raise MatchingError(
      'no full matching with max_controls={} and max_treated={}: {}'.format(
        config.max_controls, config.max_treated, err
      )
    )
  flow = _earliest_optimum(graph, flow, treated.size, controls.size)
  edges = [
    (t, c)
    for t in range(treated.size)
    for c in range(controls.size)
    if flow[('t', t)].get(('c', c), 0) > 0
  ]
  edges = _prune_to_stars(edges)

  support = nx.Graph()
  support.add_nodes_from(range(treated.size + controls.size))
  support.add_edges_from((int(treated[t]), int(controls[c])) for t, c in edges)
  strata = sorted(
    (sorted(component) for component in nx.connected_components(support)),
    key=lambda stratum: stratum[0],
  )
  stratum_of = np.empty(treated.size + controls.size, dtype=int)
  for r, stratum in enumerate(strata):
    stratum_of[stratum] = r
  match = FullMatch(
    strata=strata,
    stratum_of=stratum_of,
    total_distance=float(sum(distances[t, c] for t, c in edges)),
    total_cost=int(sum(int(costs[t, c]) for t, c in edges)),
    distance_kind=distance_kind,
  )
  match.check_structure(treatment)
  logger.debug('full matching: %s strata, total distance %.6g', match.R, match.total_distance)
  return match
