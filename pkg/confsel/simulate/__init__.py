# -*- coding:utf8 -*-
from .scenario import Scenario, ScenarioRegistry, generate
from .study import (ReplicateResult, StudyConfig, StudyMethodRegistry,
                    StudyResult, aggregate, pvalue_ecdf, run_replicate,
                    run_simulation, run_study)
