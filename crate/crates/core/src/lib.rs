//! Estimation of classification AUC and a latent scale-invariant R² for
//! binary-outcome / continuous-predictor data under the semiparametric
//! Gaussian copula (SGC).
//!
//! The crate is organized around the estimation pipeline:
//!
//! * [`normal`] — high-accuracy univariate and bivariate standard normal
//!   distribution functions.
//! * [`bridge`] — the bridging functions `G_K`, `G_S`, `G_Q` linking rank
//!   statistics to the latent correlation, their monotone inverses, and the
//!   population identities between rank statistics, AUC and latent R².
//! * [`sample`] / [`estimators`] — survey-weighted (Horvitz–Thompson) rank
//!   statistics, the pairwise-weighted AUC, and the bundle of AUC / latent-R²
//!   estimates computed from a weighted sample.
//! * [`survey`] — a two-stage stratified cluster sampling simulator over
//!   latent SGC finite populations, with inclusion probabilities and latent
//!   outlier contamination.
//! * [`scenario`] — the informativeness × outlyingness scenario grid runner
//!   aggregating bias and MSE per estimator.
//! * [`bootstrap`] — replicate-weight bootstrap standard errors and
//!   percentile confidence intervals.

pub mod bootstrap;
pub mod bridge;
pub mod error;
pub mod estimators;
pub mod normal;
pub mod sample;
pub mod scenario;
pub mod seed;
pub mod survey;
pub mod textfmt;

pub use bootstrap::{bootstrap_summary, make_replicates, BootstrapSummary, ReplicateWeights};
pub use bridge::{
    auc_from_rank, auc_latent_curve, bridge_kendall, bridge_quadrant, bridge_spearman,
    invert_bridge, latent_from_auc, latent_r2, spearman_offset, Auc, BridgeContext, Correlation,
    LatentR2, RankStatKind,
};
pub use error::{Error, Result};
pub use estimators::{
    estimate_all, kendall_tau_hat, pairwise_weighted_auc, quadrant_hat, spearman_hat,
    weighted_ecdf, weighted_median, weighted_prevalence, wilcoxon_hat, EcdfSubset, EstimateBundle,
    EstimateOptions, WeightedEcdf,
};
pub use normal::{bivariate_normal_cdf, std_normal_cdf, std_normal_pdf, std_normal_quantile, Probability};
pub use sample::{PairWeightScheme, PairwiseWeights, WeightedRecord, WeightedSample};
pub use scenario::{run_grid, AucEstimator, GridCell, GridResult, RGrid, ScenarioConfig, ScenarioSpec};
pub use survey::{
    allocate_strata, build_population, contaminate_and_dichotomize, draw_sample, ContaminationSpec,
    FinitePopulation, Informativeness, PopulationSpec, SampleDraw, SamplingPlan,
};
