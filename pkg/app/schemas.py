from apiflask import Schema
from apiflask.fields import Boolean, Dict, Float, Integer, List, Nested, String
from apiflask.validators import Length, OneOf, Range

from shared.constants import BOUND_CHECK_KEYS, FAMILY_VALUES, PHASE2_RULE_VALUES


class RoundTrace(Schema):
    phase_name = String(required=True)
    rounds_used = Integer(required=True, validate=Range(min=0))


class Config(Schema):
    c = Integer(required=True, validate=Range(min=1))
    g = Integer(load_default=0, validate=Range(min=0))
    t = Integer(load_default=None, allow_none=True, validate=Range(min=3))
    phase2_rule = String(load_default="max", validate=OneOf(PHASE2_RULE_VALUES))


class DsResult(Schema):
    d_phase1 = List(Integer(), required=True)
    d_preprocess = List(Integer(), required=True)
    d_phase2 = List(Integer(), required=True)
    dom_map = Dict(keys=String(), values=Integer(), required=True)
    trace = List(Nested(RoundTrace), required=True)
    config = Nested(Config, required=True)
    t = Integer(required=True, validate=Range(min=3))
    preprocess_clean = Boolean(load_default=False)
    chosen_witnesses = List(List(Integer()), load_default=list)
    dominating_set = List(Integer())
    total = Integer()
    rounds_used = Integer()
    is_dominating = Boolean()
    gamma = Integer(allow_none=True, load_default=None)


class OracleResult(Schema):
    gamma = Integer(required=True)
    witness = List(Integer(), required=True)
    explored_nodes = Integer(required=True)


class MinorReport(Schema):
    t = Integer(required=True, validate=Range(min=3))
    found = Boolean(required=True)
    locally_embeddable = Boolean(required=True)
    model = Dict(allow_none=True)


class ExperimentConfig(Schema):
    c = Integer(load_default=None, allow_none=True, validate=Range(min=1))
    genus = Integer(load_default=None, allow_none=True, validate=Range(min=0))
    t = Integer(load_default=None, allow_none=True, validate=Range(min=3))
    phase2_rule = String(load_default="max", validate=OneOf(PHASE2_RULE_VALUES))


class ManifestInstance(Schema):
    family = String(required=True, validate=OneOf(FAMILY_VALUES))
    params = Dict(keys=String(), values=Integer(), load_default=dict)
    seeds = List(Integer(), load_default=lambda: [0], validate=Length(min=1))
    shuffle_ids = Integer(load_default=None, allow_none=True)


class Manifest(Schema):
    name = String(load_default="experiment")
    config = Nested(ExperimentConfig, load_default=dict)
    instances = List(Nested(ManifestInstance), required=True)


class ExperimentRecord(Schema):
    family = String(required=True, validate=OneOf(FAMILY_VALUES))
    params = Dict(keys=String(), values=Integer(), required=True)
    seed = Integer(required=True)
    shuffle_ids = Integer(allow_none=True, load_default=None)
    n = Integer(allow_none=True)
    m = Integer(allow_none=True)
    certified_genus = Integer(allow_none=True)
    config = Nested(ExperimentConfig, required=True)
    c = Integer(allow_none=True)
    t = Integer(allow_none=True)
    g = Integer(allow_none=True)
    phase2_rule = String(allow_none=True)
    size_phase1 = Integer(allow_none=True)
    size_preprocess = Integer(allow_none=True)
    size_phase2 = Integer(allow_none=True)
    total = Integer(allow_none=True)
    gamma = Integer(allow_none=True)
    ratio = Float(allow_none=True)
    rounds_phase1 = Integer(allow_none=True)
    rounds_preprocess = Integer(allow_none=True)
    rounds_phase2 = Integer(allow_none=True)
    rounds_total = Integer(allow_none=True)
    is_dominating = Boolean(allow_none=True)
    bound_checks = Dict(
        keys=String(validate=OneOf(BOUND_CHECK_KEYS)),
        values=Boolean(allow_none=True),
        required=True,
    )
    error = String(allow_none=True)
