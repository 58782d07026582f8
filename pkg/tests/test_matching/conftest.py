import numpy as np
import pytest


def _partitions(units):
    if not units:
        yield []
        return
    first, rest = units[0], units[1:]
    for partition in _partitions(rest):
        for k in range(len(partition)):
            yield partition[:k] + [[first] + partition[k]] + partition[k + 1:]
        yield [[first]] + partition


def brute_force_cost(costs, treatment):
    """smallest total cost over all full matchings, by enumeration"""
    treated = list(np.flatnonzero(treatment == 1))
    controls = list(np.flatnonzero(treatment == 0))
    t_pos = {u: i for i, u in enumerate(treated)}
    c_pos = {u: i for i, u in enumerate(controls)}
    best = None
    for partition in _partitions(list(range(treatment.shape[0]))):
        total = 0
        for stratum in partition:
            ts = [u for u in stratum if u in t_pos]
            cs = [u for u in stratum if u in c_pos]
            if not ts or not cs or (len(ts) >= 2 and len(cs) >= 2):
                total = None
                break
            total += sum(int(costs[t_pos[t], c_pos[c]]) for t in ts for c in cs)
        if total is not None and (best is None or total < best):
            best = total
    return best


@pytest.fixture(scope='session', name='random_instances')
def random_instances():
    rng = np.random.default_rng(12345)
    instances = []
    while len(instances) < 200:
        n = int(rng.integers(2, 9))
        treatment = (rng.random(n) < 0.5).astype(float)
        if treatment.min() == treatment.max():
            continue
        ps = rng.uniform(0.05, 0.95, n)
        instances.append((ps, treatment))
    return instances

@pytest.fixture(scope='session', name='brute_force')
def brute_force_fixture():
    return brute_force_cost
