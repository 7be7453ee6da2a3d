"""Link-level Monte Carlo simulator for a two-hop MIMO smart-grid uplink
under a passive eavesdropper and an active jammer: artificial-noise
precoding, redundant-gateway selection, outage/secrecy statistics, and the
utility's demand-estimation-error cost."""

from .channel import ChannelDraw, crandn, draw_block_channels, substream
from .config import ScenarioConfig, ValidationError, default_scenario
from .cost import CostModel, CostReport, consumer_cost, consumer_cost_quadrature, expected_loss
from .linalg import (
    NotPositiveDefinite,
    NullSpaceEmpty,
    inv_sqrt_hpd,
    logdet_hpd,
    null_space_basis,
    svd_ordered,
)
from .outage import (
    OutageEstimate,
    block_sample,
    block_success,
    estimate_analytic_mode,
    estimate_selection_mode,
    select_gateway,
    unsecured_fraction_combiner,
)
from .precoding import LinkDesign, design_link, interference_covariance, jammer_precoder
from .rates import BlockSample, end_to_end_secrecy, eve_rate, legit_rate, secrecy_rate_block
from .sweep import (
    ParseError,
    SimulationReport,
    SweepPoint,
    SweepSpec,
    emit_csv,
    parse_config,
    run_sweep,
)

__all__ = [
    "BlockSample",
    "ChannelDraw",
    "CostModel",
    "CostReport",
    "LinkDesign",
    "NotPositiveDefinite",
    "NullSpaceEmpty",
    "OutageEstimate",
    "ParseError",
    "ScenarioConfig",
    "SimulationReport",
    "SweepPoint",
    "SweepSpec",
    "ValidationError",
    "block_sample",
    "block_success",
    "consumer_cost",
    "consumer_cost_quadrature",
    "crandn",
    "default_scenario",
    "design_link",
    "draw_block_channels",
    "emit_csv",
    "end_to_end_secrecy",
    "estimate_analytic_mode",
    "estimate_selection_mode",
    "eve_rate",
    "expected_loss",
    "interference_covariance",
    "inv_sqrt_hpd",
    "jammer_precoder",
    "legit_rate",
    "logdet_hpd",
    "null_space_basis",
    "parse_config",
    "run_sweep",
    "secrecy_rate_block",
    "select_gateway",
    "substream",
    "svd_ordered",
    "unsecured_fraction_combiner",
]

__version__ = "0.1.0"
