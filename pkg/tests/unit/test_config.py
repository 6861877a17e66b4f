import pytest

from app.mds import Config, ConfigError, Phase2Rule, default_c, default_config, total_bound_factor
from shared.constants import PLANAR_APPROXIMATION_FACTOR


def test_default_c():
    assert default_c(0) == 3
    assert default_c(1) == 9
    assert default_c(2) == 15
    with pytest.raises(ConfigError):
        default_c(-1)


def test_planar_factor_is_199():
    assert total_bound_factor(3, 3) == PLANAR_APPROXIMATION_FACTOR == 199


@pytest.mark.parametrize(
    "kwargs",
    [{"c": 0}, {"c": 3, "g": -1}, {"c": 3, "t": 2}, {"c": True}, {"c": 3, "phase2_rule": "min"}],
)
def test_invalid_config(kwargs):
    with pytest.raises(ConfigError):
        Config(**kwargs)


def test_resolved_t():
    cfg = default_config(genus=1)

    assert cfg.resolved_t() == 7
    assert cfg.resolved_t(clean=True) == 3
    assert default_config(genus=1, t=5).resolved_t(clean=True) == 5


def test_derived_values():
    cfg = Config(c=3, phase2_rule="FO")

    assert cfg.phase2_rule is Phase2Rule.FIRST_ORDER_THRESHOLD
    assert cfg.coverage_limit == 6
    assert cfg.fo_threshold(3) == 24
    assert cfg.to_dict() == {"c": 3, "g": 0, "t": None, "phase2_rule": "fo"}
