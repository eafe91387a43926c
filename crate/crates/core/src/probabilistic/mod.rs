//! Exact and sampled analysis of probabilistic machines.

mod exact;
mod expeq;
mod sampling;

pub use exact::{
    accept_prob, expected_rounds, lasvegas_success, outcome_dist, sweep_bound,
    trios_success_bound, OutcomeDistribution,
};
pub use expeq::{
    expeq_compose, expeq_compose_capped, expeq_compose_enclosure, expeq_params, expeq_problem,
    expeq_repetitions, ComposedEnclosure, ExpEqOrigin, RoundModel,
};
pub use sampling::{monte_carlo, MonteCarlo, MONTE_CARLO_CHUNK, MONTE_CARLO_RNG};
