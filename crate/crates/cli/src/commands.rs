//! One function per subcommand, each returning a [`CommandResult`].

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::{json, Value};
use unfolded_qrm::appendix::{appendix_tables, presentations_agree, Stage};
use unfolded_qrm::bases::BasisKind;
use unfolded_qrm::cube::Subcube;
use unfolded_qrm::factory::{factory_catalog, monte_carlo, truncated_rates, RateReport};
use unfolded_qrm::layout::{export_layout, file_name, ExportFormat, LayoutKind};
use unfolded_qrm::logic::{ccz_circuit, cz_circuit, LogicEngine};
use unfolded_qrm::qrm::{puncture_code, qrm_code, QrmParams};
use unfolded_qrm::registry::{self, census};

use crate::checks;
use crate::manifest::Manifest;

/// Command status; `Fail` makes the process exit nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Everything checked out.
    Ok,
    /// A check failed or the command could not run.
    Fail,
}

/// Outcome of a command: machine-readable payload plus a human summary.
#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    /// Overall status.
    pub status: Status,
    /// JSON payload.
    pub payload: Value,
    /// Text printed without `--json`.
    pub human_summary: String,
}

impl CommandResult {
    fn ok(payload: Value, human_summary: String) -> Self {
        Self {
            status: Status::Ok,
            payload,
            human_summary,
        }
    }

    fn with_status(pass: bool, payload: Value, human_summary: String) -> Self {
        Self {
            status: if pass { Status::Ok } else { Status::Fail },
            payload,
            human_summary,
        }
    }

    /// A failure carrying an error message.
    #[must_use]
    pub fn error(err: &anyhow::Error) -> Self {
        Self {
            status: Status::Fail,
            payload: json!({ "error": format!("{err:#}") }),
            human_summary: format!("error: {err:#}"),
        }
    }
}

fn basis_kind(label: &str) -> Result<BasisKind> {
    let entry = registry::lookup(label)?;
    entry
        .basis
        .with_context(|| format!("{label} has no layout basis"))
}

/// `verify-basis <name>`.
///
/// # Errors
///
/// Fails for an unknown label.
pub fn verify_basis(name: &str) -> Result<CommandResult> {
    let kind: BasisKind = name.parse()?;
    let report = kind.build()?.verify()?;
    let summary = format!(
        "{}: {} generators, rank {}, target rank {}, independent {}, spans {} ({} ms)",
        report.label,
        report.generators,
        report.rank,
        report.target_rank,
        report.independent,
        report.spans,
        report.runtime_ms
    );
    Ok(CommandResult::with_status(
        report.ok(),
        serde_json::to_value(&report)?,
        summary,
    ))
}

/// `census <code>`.
///
/// # Errors
///
/// Fails for an unknown label or a census error.
pub fn census_cmd(label: &str) -> Result<CommandResult> {
    let code = registry::lookup(label)?.code()?;
    let c = census(&code)?;
    let mut summary = format!(
        "{}: d = {}, {} minimum-weight elements ({:?}, {} ms)",
        c.code,
        c.d.map_or_else(|| "none".to_string(), |d| d.to_string()),
        c.count,
        c.method,
        c.runtime_ms
    );
    if let Some(s) = c.split {
        summary.push_str(&format!("; trivial {}, nontrivial {}", s.trivial, s.nontrivial));
    }
    Ok(CommandResult::ok(serde_json::to_value(&c)?, summary))
}

/// `logical-action <code> [--subcube S]`: CCZ circuit of transversal T, or the
/// CZ circuit of S on one subcube.
///
/// # Errors
///
/// Fails for unknown labels, codes without a subcube frame, or gates that do
/// not preserve the codespace.
pub fn logical_action(label: &str, subcube: Option<&str>) -> Result<CommandResult> {
    let code = registry::lookup(label)?.code()?;
    let engine = LogicEngine::new(&code)?;
    let qubits = engine.logical_qubits();
    let (gate, gates) = match subcube {
        Some(text) => {
            let s: Subcube = text.parse()?;
            ("S", cz_circuit(&engine.logical_action_s(&s)?))
        }
        None => ("T", ccz_circuit(&engine.logical_action_t_full()?)),
    };
    let summary = {
        let mut s = format!(
            "{}: k = {}, transversal {gate} gives {} gates",
            code.label(),
            qubits.len(),
            gates.len()
        );
        for g in &gates {
            s.push_str(&format!("\n  {} {:?}", g.gate, g.qubits));
        }
        s
    };
    Ok(CommandResult::ok(
        json!({ "code": code.label(), "logical_qubits": qubits, "gate": gate, "circuit": gates }),
        summary,
    ))
}

/// `appendix-tables`: recomputes the sixteen (rows, rank) entries and compares
/// them with the manifest.
///
/// # Errors
///
/// Fails if the manifest cannot be parsed.
pub fn appendix(manifest: &Manifest) -> Result<CommandResult> {
    let got = appendix_tables()?;
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut all = true;
    for e in &got {
        let stage = match e.stage {
            Stage::Before => "before",
            Stage::After => "after",
        };
        let exp = manifest
            .appendix
            .iter()
            .find(|x| x.matrix == e.matrix && x.stage == stage);
        let ok = exp.is_some_and(|x| (x.rows, x.rank) == (e.rows, e.rank));
        all &= ok;
        rows.push(json!({
            "matrix": e.matrix, "stage": stage, "rows": e.rows, "rank": e.rank,
            "expected": exp.map(|x| [x.rows, x.rank]), "match": ok,
        }));
        lines.push(format!(
            "{:<7} {:<15} rows {:>2} rank {:>2} {}",
            stage,
            e.matrix,
            e.rows,
            e.rank,
            if ok { "ok" } else { "MISMATCH" }
        ));
    }
    let agree = presentations_agree()?;
    lines.push(format!("standard and fixed presentations span equal row spaces: {agree}"));
    Ok(CommandResult::with_status(
        all && agree,
        json!({ "entries": rows, "presentations_agree": agree }),
        lines.join("\n"),
    ))
}

/// `export <code> <layout> <format> [out]`.
///
/// # Errors
///
/// Fails for unknown labels, 3D SVG requests, or I/O errors.
pub fn export(code: &str, layout: &str, format: &str, out: Option<&Path>) -> Result<CommandResult> {
    let kind = basis_kind(code)?;
    let layout: LayoutKind = layout.parse()?;
    let format: ExportFormat = format.parse()?;
    let basis = kind.build()?;
    let bytes = export_layout(&layout.spec(), &basis, format)?;
    let path: PathBuf = out.map_or_else(|| PathBuf::from(file_name(kind.label(), layout, format)), Path::to_path_buf);
    std::fs::write(&path, &bytes).with_context(|| format!("writing {}", path.display()))?;
    let count = basis.generators().len();
    Ok(CommandResult::ok(
        json!({ "path": path.display().to_string(), "bytes": bytes.len(), "stabilizer_count": count }),
        format!("wrote {} ({} bytes, {count} stabilizers)", path.display(), bytes.len()),
    ))
}

fn rate_summary(r: &RateReport) -> String {
    let mut s = format!(
        "{} at p = {}: p_accept = {:.6e}, p_undetected_logical = {:.6e}, conditional infidelity = {:.6e}",
        r.code, r.p, r.p_accept, r.p_undetected_logical, r.conditional_infidelity
    );
    if let (Some(w), Some(b)) = (r.w_max, r.truncation_bound) {
        s.push_str(&format!(" (w_max = {w}, omitted mass <= {b:.3e})"));
    }
    if let (Some(n), Some(seed), Some(ci)) = (r.samples, r.seed, r.conditional_infidelity_ci) {
        s.push_str(&format!(" ({n} samples, seed {seed}, 95% CI [{:.6e}, {:.6e}])", ci.lo, ci.hi));
    }
    s
}

/// `factory analyze --code --p --wmax`.
///
/// # Errors
///
/// Fails for unknown labels, bad probabilities, or budget refusals.
pub fn factory_analyze(code: &str, p: f64, w_max: usize) -> Result<CommandResult> {
    let c = registry::lookup(code)?.code()?;
    let r = truncated_rates(&c, p, w_max)?;
    Ok(CommandResult::ok(serde_json::to_value(&r)?, rate_summary(&r)))
}

/// `factory mc --code --p --samples --seed`.
///
/// # Errors
///
/// Fails for unknown labels or bad parameters.
pub fn factory_mc(code: &str, p: f64, samples: u64, seed: u64) -> Result<CommandResult> {
    let c = registry::lookup(code)?.code()?;
    let r = monte_carlo(&c, p, samples, seed)?;
    Ok(CommandResult::ok(serde_json::to_value(&r)?, rate_summary(&r)))
}

/// `factory catalog`.
///
/// # Errors
///
/// Propagates census errors.
pub fn factory_list() -> Result<CommandResult> {
    let cat = factory_catalog()?;
    let lines: Vec<String> = cat
        .iter()
        .map(|f| {
            format!(
                "{:<22} {:>6} -> {:<7} d_z = {}  p_out ~ {} p^{}",
                f.name, f.inputs, f.outputs, f.d_z, f.prefactor, f.d_z
            )
        })
        .collect();
    Ok(CommandResult::ok(serde_json::to_value(&cat)?, lines.join("\n")))
}

/// `qrm --m --q --r [--puncture pos] [--out file]`.
///
/// # Errors
///
/// Fails for invalid parameters or puncturing a code with logical qubits.
pub fn qrm(m: usize, q: usize, r: usize, puncture: Option<usize>, out: Option<&Path>) -> Result<CommandResult> {
    let mut code = qrm_code(QrmParams::new(m, q, r)?)?;
    if let Some(pos) = puncture {
        code = puncture_code(&code, pos)?;
    }
    let mut payload = json!({
        "label": code.label(), "n": code.n(), "k": code.k(),
        "rank_hx": code.hx().rank(), "rank_hz": code.hz().rank(),
    });
    let mut summary = format!(
        "{}: n = {}, k = {}, rank hx = {}, rank hz = {}",
        code.label(),
        code.n(),
        code.k(),
        code.hx().rank(),
        code.hz().rank()
    );
    if m <= 7 {
        if let Ok(c) = census(&code) {
            summary.push_str(&format!("; minimum weight {:?} x {}", c.d, c.count));
            payload["census"] = serde_json::to_value(&c)?;
        }
    }
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&code.to_json())?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
        payload["path"] = json!(path.display().to_string());
    }
    Ok(CommandResult::ok(payload, summary))
}

/// `reproduce-paper`: all ten acceptance criteria.
#[must_use]
pub fn reproduce(manifest: &Manifest) -> CommandResult {
    let results = checks::run_all(manifest);
    let pass = results.iter().all(|c| c.pass);
    let summary = results.iter().map(checks::Check::line).collect::<Vec<_>>().join("\n");
    CommandResult::with_status(
        pass,
        serde_json::to_value(&results).unwrap_or(Value::Null),
        summary,
    )
}
