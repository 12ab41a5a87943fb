//! The expected-values manifest (`expected.toml`), embedded at build time.

use serde::Deserialize;

/// Manifest source text.
pub const EXPECTED_TOML: &str = include_str!("../expected.toml");

/// Expected basis size.
#[derive(Clone, Debug, Deserialize)]
pub struct BasisExpectation {
    /// Registry label.
    pub label: String,
    /// Number of generators (= rank).
    pub size: usize,
}

/// Time limit for basis verification.
#[derive(Clone, Debug, Deserialize)]
pub struct BasisLimits {
    /// Per-basis wall-clock limit.
    pub max_seconds: f64,
}

/// Exact counts.
#[derive(Clone, Debug, Deserialize)]
pub struct Counting {
    /// Weight-4 words of RM_4(2).
    pub rm_4_2: u64,
    /// Weight-8 words of RM_7(4).
    pub rm_7_4: u64,
    /// Weight-3 logicals of punctured QRM_4(1,1).
    pub punctured_qrm411_weight3: u64,
    /// Weight-7 logicals of punctured QRM_7(2,2).
    pub punctured_qrm722_weight7: u64,
    /// Weight-2 logicals of QRM_3(0,1).
    pub qrm301_weight2: u64,
    /// Weight-4 normalizer elements of the big unfolded code inside its stabilizer.
    pub big_unfolded_trivial: u64,
    /// Weight-4 nontrivial logicals of the big unfolded code.
    pub big_unfolded_nontrivial: u64,
    /// Weight-4 logicals of QRM_6(1,2).
    pub rubik_prefactor: u64,
    /// Time limit of the m = 7 affine enumeration.
    pub affine_m7_max_seconds: f64,
}

/// Brute-force oracle scope.
#[derive(Clone, Debug, Deserialize)]
pub struct Oracle {
    /// Largest code dimension enumerated.
    pub max_rank: usize,
}

/// Plotkin equivalence scope.
#[derive(Clone, Debug, Deserialize)]
pub struct Plotkin {
    /// Largest m.
    pub max_m: usize,
    /// Number of (m, r) cases.
    pub cases: usize,
    /// Time limit.
    pub max_seconds: f64,
}

/// Diagonal-space theorem scope.
#[derive(Clone, Debug, Deserialize)]
pub struct Diagonal {
    /// Cube dimensions.
    pub m: Vec<usize>,
    /// Random offset assignments per `f_max`.
    pub samples_per_fmax: u64,
}

/// Logical-action expectations.
#[derive(Clone, Debug, Deserialize)]
pub struct Logic {
    /// Tilde-S action on QRM_6(1,2) by subcube dimension 1..6.
    pub s_by_dim: Vec<String>,
    /// Tilde-T action on QRM_6(1,2) by subcube dimension 1..6.
    pub t_by_dim: Vec<String>,
    /// CCZ triples of transversal T on QRM_6(1,2).
    pub qrm612_ccz: Vec<[Vec<usize>; 3]>,
    /// CCZ triples of transversal T on the big unfolded code.
    pub big_unfolded_ccz: Vec<[Vec<usize>; 3]>,
}

/// A leading-order infidelity value.
#[derive(Clone, Debug, Deserialize)]
pub struct LeadingOrder {
    /// Registry label of the factory code.
    pub code: String,
    /// Number of minimum-weight logicals.
    pub prefactor: u64,
    /// Z distance.
    pub d: usize,
    /// Input error rate.
    pub p: f64,
    /// Published output infidelity.
    pub value: f64,
}

/// Factory tolerances.
#[derive(Clone, Debug, Deserialize)]
pub struct Factory {
    /// Relative tolerance of the leading-order arithmetic.
    pub leading_order_rel_tol: f64,
    /// Input error rate for the truncated check.
    pub p: f64,
    /// Relative tolerance of conditional infidelity vs prefactor·p^d.
    pub rel_tol: f64,
    /// Input error rate for the QRM_3(0,1) check.
    pub qrm301_p: f64,
    /// Relative tolerance for QRM_3(0,1).
    pub qrm301_rel_tol: f64,
    /// Time limit for n = 64, w_max = 5.
    pub max_seconds_n64: f64,
    /// Largest code size checked by enumeration.
    pub max_n: usize,
}

/// One appendix table entry.
#[derive(Clone, Debug, Deserialize)]
pub struct AppendixExpectation {
    /// Matrix name.
    pub matrix: String,
    /// `before` or `after`.
    pub stage: String,
    /// Row count.
    pub rows: usize,
    /// Rank.
    pub rank: usize,
}

/// Layout expectations.
#[derive(Clone, Debug, Deserialize)]
pub struct Layout {
    /// Product squares of the planar-6 basis.
    pub planar6_product_boxes: usize,
    /// Positions per axis of the 2×2 windows.
    pub planar6_grid_positions: usize,
    /// Appended squares of the planar-6 basis.
    pub planar6_appended: usize,
    /// 2×2×2 boxes of the rubik basis.
    pub rubik_boxes: usize,
}

/// Monte Carlo check parameters.
#[derive(Clone, Debug, Deserialize)]
pub struct MonteCarlo {
    /// Registry label.
    pub code: String,
    /// Input error rate.
    pub p: f64,
    /// Samples.
    pub samples: u64,
    /// Seed.
    pub seed: u64,
    /// Truncation weight of the exact reference.
    pub w_max: usize,
    /// Allowed deviation in standard errors.
    pub sigmas: f64,
    /// Shard sizes that must give identical reports.
    pub shard_sizes: Vec<u64>,
}

/// The whole manifest.
#[derive(Clone, Debug, Deserialize)]
pub struct Manifest {
    /// Basis sizes.
    pub basis: Vec<BasisExpectation>,
    /// Basis time limit.
    pub basis_limits: BasisLimits,
    /// Exact counts.
    pub counting: Counting,
    /// Oracle scope.
    pub oracle: Oracle,
    /// Plotkin scope.
    pub plotkin: Plotkin,
    /// Diagonal scope.
    pub diagonal: Diagonal,
    /// Logic expectations.
    pub logic: Logic,
    /// Leading-order values.
    pub leading_order: Vec<LeadingOrder>,
    /// Factory tolerances.
    pub factory: Factory,
    /// Appendix tables.
    pub appendix: Vec<AppendixExpectation>,
    /// Layout expectations.
    pub layout: Layout,
    /// Monte Carlo parameters.
    pub monte_carlo: MonteCarlo,
}

impl Manifest {
    /// Parses the embedded manifest.
    ///
    /// # Errors
    ///
    /// Returns a TOML error if the embedded file is malformed.
    pub fn load() -> Result<Self, toml::de::Error> {
        toml::from_str(EXPECTED_TOML)
    }
}
