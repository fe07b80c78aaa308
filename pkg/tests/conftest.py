import pytest

from curve_census import census, kernels

_REPORTS = {}


def _census(family, count_field):
    """Full census, computed once per session and shared between test modules."""
    key = (family, count_field)
    if key not in _REPORTS:
        cfg = census.CensusConfig(family=family, count_field=count_field, jobs=1, timing=False)
        _REPORTS[key] = census.run_census(cfg)
    return _REPORTS[key]


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return kernels.BACKENDS[request.param]


@pytest.fixture(scope="session")
def census_report():
    return _census
