//! The ten acceptance criteria, each recomputed from scratch and compared with
//! the manifest. Shared by `uqrm reproduce-paper` and the `acceptance` test
//! target so both report exactly the same verdicts.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;
use unfolded_qrm::appendix::{appendix_tables, Stage};
use unfolded_qrm::bases::{
    diagonal_space, diagonal_target, qrm611_appended_squares, qrm611_product_squares, BasisKind,
    DiagonalParams,
};
use unfolded_qrm::cube::{enumerate_all_subcubes, Subcube};
use unfolded_qrm::distance::{
    brute_force_census, brute_force_min_words, classify_big_unfolded_w4, is_affine_subspace_indicator,
    min_weight_words, punctured_min_logicals, qrm_min_logicals,
};
use unfolded_qrm::f2core::row_space_equal;
use unfolded_qrm::factory::{
    factory_catalog, leading_order, monte_carlo, monte_carlo_sharded, truncated_rates,
};
use unfolded_qrm::layout::{export_layout, footprint, ExportFormat, LayoutKind};
use unfolded_qrm::logic::{Action, DiagonalGateSpec, Level, LogicEngine};
use unfolded_qrm::qrm::{
    big_unfolded, plotkin_generators, puncture_code, qrm_code, rm_generators, QrmParams, RmParams,
};
use unfolded_qrm::registry;

use crate::manifest::Manifest;

/// Golden SVG of the small unfolded basis on the planar-4 layout.
pub const GOLDEN_PLANAR4: &[u8] =
    include_bytes!("../../core/tests/golden/small-unfolded-planar-4.svg");

/// Golden SVG of the QRM_6(1,1) basis on the planar-6 layout.
pub const GOLDEN_PLANAR6: &[u8] = include_bytes!("../../core/tests/golden/qrm611-planar-6.svg");

/// Verdict on one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// Criterion number, 1..=10.
    pub id: u8,
    /// Short name.
    pub name: &'static str,
    /// Whether every sub-check passed.
    pub pass: bool,
    /// What was compared, including failures.
    pub detail: String,
}

impl Check {
    /// One-line summary `PASS [n] name: detail`.
    #[must_use]
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {}: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

type Outcome = Result<(bool, String), unfolded_qrm::Error>;

fn finish(id: u8, name: &'static str, outcome: Outcome) -> Check {
    match outcome {
        Ok((pass, detail)) => Check {
            id,
            name,
            pass,
            detail,
        },
        Err(e) => Check {
            id,
            name,
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

/// Collects sub-check failures.
#[derive(Default)]
struct Tally {
    notes: Vec<String>,
    failures: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(what);
        } else {
            self.failures.push(what);
        }
    }

    fn into_outcome(self) -> Outcome {
        if self.failures.is_empty() {
            Ok((true, self.notes.join("; ")))
        } else {
            let mut detail = format!("failed: {}", self.failures.join("; "));
            if !self.notes.is_empty() {
                detail.push_str(&format!(" | passed: {}", self.notes.join("; ")));
            }
            Ok((false, detail))
        }
    }
}

/// 1. The five bases are free and span their codes' Z stabilizers.
#[must_use]
pub fn basis_verification(m: &Manifest) -> Check {
    finish(1, "basis verification", (|| {
        let mut t = Tally::default();
        for exp in &m.basis {
            let kind: BasisKind = exp.label.parse()?;
            let start = Instant::now();
            let report = kind.build()?.verify()?;
            let secs = start.elapsed().as_secs_f64();
            t.expect(
                report.ok() && report.generators == exp.size && report.rank == exp.size,
                format!("{} {}/{} rank {}", exp.label, report.generators, exp.size, report.rank),
            );
            t.expect(
                secs < m.basis_limits.max_seconds,
                format!("{} in {secs:.2}s", exp.label),
            );
        }
        t.into_outcome()
    })())
}

/// 2. Exact minimum-weight counts.
#[must_use]
pub fn counting_suite(m: &Manifest) -> Check {
    finish(2, "counting suite", (|| {
        let c = &m.counting;
        let mut t = Tally::default();
        let rm42 = min_weight_words(RmParams::new(4, 2)?)?;
        t.expect(rm42.count == c.rm_4_2, format!("RM_4(2) {}", rm42.count));
        let start = Instant::now();
        let rm74 = min_weight_words(RmParams::new(7, 4)?)?;
        let secs = start.elapsed().as_secs_f64();
        t.expect(rm74.count == c.rm_7_4, format!("RM_7(4) {}", rm74.count));
        t.expect(secs < c.affine_m7_max_seconds, format!("m=7 enumeration {secs:.2}s"));
        let small = punctured_min_logicals(&puncture_code(&qrm_code(QrmParams::new(4, 1, 1)?)?, 0)?)?;
        t.expect(
            small.d == Some(3) && small.count == c.punctured_qrm411_weight3,
            format!("punctured QRM_4(1,1) d={:?} {}", small.d, small.count),
        );
        let p722 = punctured_min_logicals(&puncture_code(&qrm_code(QrmParams::new(7, 2, 2)?)?, 0)?)?;
        t.expect(
            p722.d == Some(7) && p722.count == c.punctured_qrm722_weight7,
            format!("punctured QRM_7(2,2) d={:?} {}", p722.d, p722.count),
        );
        let q301 = qrm_min_logicals(QrmParams::new(3, 0, 1)?)?;
        t.expect(
            q301.d == Some(2) && q301.count == c.qrm301_weight2,
            format!("QRM_3(0,1) d={:?} {}", q301.d, q301.count),
        );
        let split = classify_big_unfolded_w4()?;
        t.expect(
            (split.trivial, split.nontrivial) == (c.big_unfolded_trivial, c.big_unfolded_nontrivial),
            format!("big unfolded ({}, {})", split.trivial, split.nontrivial),
        );
        let rubik = qrm_min_logicals(QrmParams::new(6, 1, 2)?)?;
        t.expect(
            rubik.d == Some(4) && rubik.count == c.rubik_prefactor,
            format!("rubik d={:?} {}", rubik.d, rubik.count),
        );
        t.into_outcome()
    })())
}

/// 3. Brute force agrees with affine enumeration for every small RM code.
#[must_use]
pub fn oracle_equivalence(m: &Manifest) -> Check {
    finish(3, "oracle equivalence", (|| {
        let mut t = Tally::default();
        let mut cases = 0;
        for mm in 1..=7 {
            for r in 0..=mm {
                let p = RmParams::new(mm, r)?;
                if p.dimension() > m.oracle.max_rank {
                    continue;
                }
                cases += 1;
                let gens = rm_generators(p)?;
                let brute = brute_force_census(&gens)?;
                let affine = min_weight_words(p)?;
                let words = brute_force_min_words(&gens)?;
                let all_affine = words.iter().all(is_affine_subspace_indicator);
                let ok = brute.d == Some(1 << (mm - r))
                    && brute.d == affine.d
                    && brute.count == affine.count
                    && words.len() as u64 == brute.count
                    && all_affine;
                if !ok {
                    t.expect(false, format!("RM_{mm}({r}) brute {:?}/{} affine {:?}/{}", brute.d, brute.count, affine.d, affine.count));
                }
            }
        }
        t.expect(true, format!("{cases} codes with rank <= {}", m.oracle.max_rank));
        t.into_outcome()
    })())
}

/// 4. Plotkin recursion and subcube generators span the same RM codes.
#[must_use]
pub fn plotkin_equivalence(m: &Manifest) -> Check {
    finish(4, "plotkin equivalence", (|| {
        let mut t = Tally::default();
        let start = Instant::now();
        let mut cases = 0;
        for mm in 0..=m.plotkin.max_m {
            for r in 0..=mm {
                let p = RmParams::new(mm, r)?;
                cases += 1;
                if !row_space_equal(&plotkin_generators(p)?, &rm_generators(p)?)? {
                    t.expect(false, format!("RM_{mm}({r})"));
                }
            }
        }
        let secs = start.elapsed().as_secs_f64();
        t.expect(cases == m.plotkin.cases, format!("{cases} cases"));
        t.expect(secs < m.plotkin.max_seconds, format!("{secs:.2}s"));
        t.into_outcome()
    })())
}

/// 5. Diagonal spaces are independent of their offsets.
#[must_use]
pub fn diagonal_theorem(m: &Manifest) -> Check {
    finish(5, "diagonal-space theorem", (|| {
        let mut t = Tally::default();
        let mut runs = 0;
        for &mm in &m.diagonal.m {
            for f_max in 1..=mm {
                let target = diagonal_target(mm, f_max)?;
                for s in 0..m.diagonal.samples_per_fmax {
                    let seed = (mm as u64) << 32 | (f_max as u64) << 16 | s;
                    let space = diagonal_space(&DiagonalParams::random(mm, f_max, seed)?)?;
                    runs += 1;
                    if !row_space_equal(&space, &target)? {
                        t.expect(false, format!("m={mm} f_max={f_max} seed={seed}"));
                    }
                }
            }
        }
        t.expect(true, format!("{runs} random offset assignments, zero failures"));
        t.into_outcome()
    })())
}

fn action_name(a: Action) -> &'static str {
    match a {
        Action::NotPreserving => "not-preserving",
        Action::TrivialAction => "trivial-action",
        Action::NontrivialAction => "nontrivial-action",
    }
}

/// 6. Exhaustive S/T classification and the CCZ circuits.
#[must_use]
pub fn logic_suite(m: &Manifest) -> Check {
    finish(6, "logic suite", (|| {
        let mut t = Tally::default();
        let code = qrm_code(QrmParams::new(6, 1, 2)?)?;
        let engine = LogicEngine::new(&code)?;
        let mut checked = 0;
        for s in enumerate_all_subcubes(6)?.into_iter().filter(|s| s.dim() >= 1) {
            for (level, table) in [(Level::S, &m.logic.s_by_dim), (Level::T, &m.logic.t_by_dim)] {
                for balanced in [true, false] {
                    let gate = DiagonalGateSpec::new(level, s, balanced)?;
                    let got = action_name(engine.action(&gate)?);
                    checked += 1;
                    if got != table[s.dim() - 1] {
                        t.expect(false, format!("{level:?} on {s} ({}) = {got}", if balanced { "tilde" } else { "plain" }));
                    }
                }
            }
        }
        t.expect(true, format!("{checked} gate/subcube classifications"));
        let ccz = engine.logical_action_t_full()?;
        let expected: BTreeSet<[Vec<usize>; 3]> = m.logic.qrm612_ccz.iter().cloned().collect();
        t.expect(ccz == expected, format!("QRM_6(1,2) {} CCZ triples", ccz.len()));
        let big = LogicEngine::new(&big_unfolded()?)?.logical_action_t_full()?;
        let expected: BTreeSet<[Vec<usize>; 3]> = m.logic.big_unfolded_ccz.iter().cloned().collect();
        t.expect(big == expected, format!("big unfolded {big:?}"));
        t.into_outcome()
    })())
}

/// 7. Leading-order arithmetic and truncated enumeration.
#[must_use]
pub fn factory_numbers(m: &Manifest) -> Check {
    finish(7, "factory numbers", (|| {
        let f = &m.factory;
        let mut t = Tally::default();
        let catalog = factory_catalog()?;
        for lo in &m.leading_order {
            let spec = catalog.iter().find(|s| s.code_label == lo.code);
            let recomputed = spec.map(|s| (s.prefactor, s.d_z));
            let v = leading_order(lo.prefactor, lo.d, lo.p);
            let rel = (v / lo.value - 1.0).abs();
            t.expect(
                rel < f.leading_order_rel_tol && recomputed == Some((lo.prefactor, lo.d)),
                format!("{} {v:e} (rel {rel:.1e})", lo.code),
            );
        }
        for spec in catalog.iter().filter(|s| s.code.n() <= f.max_n) {
            let p = if spec.code_label == "qrm301" { f.qrm301_p } else { f.p };
            let tol = if spec.code_label == "qrm301" { f.qrm301_rel_tol } else { f.rel_tol };
            let start = Instant::now();
            let r = truncated_rates(&spec.code, p, spec.d_z + 1)?;
            let secs = start.elapsed().as_secs_f64();
            let rel = (r.conditional_infidelity / spec.leading_order(p) - 1.0).abs();
            t.expect(rel < tol, format!("{} rel {rel:.4} at p={p}", spec.code_label));
            if spec.code.n() == 64 {
                t.expect(secs < f.max_seconds_n64, format!("{} w_max=5 in {secs:.2}s", spec.code_label));
            }
        }
        t.into_outcome()
    })())
}

/// 8. Appendix row/rank tables.
#[must_use]
pub fn appendix_check(m: &Manifest) -> Check {
    finish(8, "appendix tables", (|| {
        let mut t = Tally::default();
        let got = appendix_tables()?;
        let mut matched = 0;
        for exp in &m.appendix {
            let stage = if exp.stage == "before" { Stage::Before } else { Stage::After };
            match got.iter().find(|e| e.matrix == exp.matrix && e.stage == stage) {
                Some(e) if (e.rows, e.rank) == (exp.rows, exp.rank) => matched += 1,
                Some(e) => t.expect(false, format!("{} {}: ({}, {}) vs ({}, {})", exp.matrix, exp.stage, e.rows, e.rank, exp.rows, exp.rank)),
                None => t.expect(false, format!("{} {} missing", exp.matrix, exp.stage)),
            }
        }
        t.expect(matched == 16, format!("{matched}/16 (rows, rank) pairs"));
        t.into_outcome()
    })())
}

/// 9. Layout footprints and golden SVGs.
#[must_use]
pub fn layout_check(m: &Manifest) -> Check {
    finish(9, "layout", (|| {
        let l = &m.layout;
        let mut t = Tally::default();
        let planar6 = LayoutKind::Planar6.spec();
        let mut windows = BTreeSet::new();
        let products = qrm611_product_squares()?;
        for (i, g) in products.iter().enumerate() {
            let fp = footprint(&planar6, i, g)?;
            if fp.contiguous_box && fp.sides() == [2, 2] {
                windows.insert((fp.bbox[0].0, fp.bbox[1].0));
            }
        }
        let n = l.planar6_grid_positions;
        let tiles = windows.len() == l.planar6_product_boxes
            && products.len() == l.planar6_product_boxes
            && windows.iter().all(|&(x, y)| x < n && y < n);
        t.expect(tiles, format!("{} product 2x2 boxes tiling {n}x{n}", windows.len()));
        let appended = qrm611_appended_squares()?;
        let bad: Vec<String> = appended
            .iter()
            .enumerate()
            .map(|(i, g)| footprint(&planar6, i, g))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .filter(|fp| !fp.contiguous_box)
            .map(|fp| format!("{} spans {:?}", fp.generator, fp.sides()))
            .collect();
        t.expect(
            appended.len() == l.planar6_appended && bad.is_empty(),
            if bad.is_empty() {
                format!("{} appended footprints contiguous", appended.len())
            } else {
                format!("{}/{} appended footprints not contiguous ({})", bad.len(), appended.len(), bad.join(", "))
            },
        );
        let rubik = BasisKind::Rubik.build()?;
        let spec = LayoutKind::Rubik6.spec();
        let cubes = rubik
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| footprint(&spec, i, g))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .filter(|f| f.contiguous_box && f.sides() == [2, 2, 2])
            .count();
        t.expect(cubes == l.rubik_boxes, format!("rubik {cubes} 2x2x2 boxes"));
        let mut sizes_ok = true;
        for kind in BasisKind::ALL {
            let b = kind.build()?;
            let spec = LayoutKind::for_basis(kind).spec();
            for (i, g) in b.generators().iter().enumerate() {
                sizes_ok &= footprint(&spec, i, g)?.cells.len() == 1 << g.dim();
            }
        }
        t.expect(sizes_ok, "cell counts = 2^dim");
        let svg4 = export_layout(&LayoutKind::Planar4.spec(), &BasisKind::SmallUnfolded.build()?, ExportFormat::Svg)?;
        let svg6 = export_layout(&planar6, &BasisKind::Qrm611.build()?, ExportFormat::Svg)?;
        t.expect(svg4 == GOLDEN_PLANAR4, "planar-4 golden SVG");
        t.expect(svg6 == GOLDEN_PLANAR6, "planar-6 golden SVG");
        t.into_outcome()
    })())
}

/// 10. Monte Carlo determinism and agreement with exact enumeration.
#[must_use]
pub fn monte_carlo_check(m: &Manifest) -> Check {
    finish(10, "monte carlo", (|| {
        let mc = &m.monte_carlo;
        let mut t = Tally::default();
        let code = registry::lookup(&mc.code)?.code()?;
        let a = monte_carlo(&code, mc.p, mc.samples, mc.seed)?;
        let b = monte_carlo(&code, mc.p, mc.samples, mc.seed)?;
        t.expect(a == b, "identical reports across runs");
        let mut same = true;
        for &shard in &mc.shard_sizes {
            same &= monte_carlo_sharded(&code, mc.p, mc.samples, mc.seed, shard)? == a;
        }
        t.expect(same, format!("identical across shard sizes {:?}", mc.shard_sizes));
        let exact = truncated_rates(&code, mc.p, mc.w_max)?;
        let q = exact.conditional_infidelity;
        let accepted = a.accepted.unwrap_or(0) as f64;
        let sigma = (q * (1.0 - q) / accepted).sqrt();
        let z = (a.conditional_infidelity - q).abs() / sigma;
        t.expect(z <= mc.sigmas, format!("estimate {:.6} vs exact {q:.6} ({z:.2} sigma)", a.conditional_infidelity));
        t.into_outcome()
    })())
}

/// Runs all ten criteria in order.
#[must_use]
pub fn run_all(m: &Manifest) -> Vec<Check> {
    vec![
        basis_verification(m),
        counting_suite(m),
        oracle_equivalence(m),
        plotkin_equivalence(m),
        diagonal_theorem(m),
        logic_suite(m),
        factory_numbers(m),
        appendix_check(m),
        layout_check(m),
        monte_carlo_check(m),
    ]
}

/// Helper for tests: subcube from its display form.
///
/// # Errors
///
/// Returns a parse error for malformed input.
pub fn subcube(text: &str) -> Result<Subcube, unfolded_qrm::Error> {
    text.parse()
}
