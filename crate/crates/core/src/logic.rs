//! Transversal diagonal gates on subcubes: Z-vector classification, conjugation
//! of tilde/plain S and T subcube operators past X operators, codespace
//! preservation, and the induced logical CZ / CCZ circuits.
//!
//! Phases are not tracked symbolically. The tilde operators (`U` on the even-
//! weight vertices of the support, `U†` on the odd ones) cancel their phases
//! exactly when the support has as many even as odd vertices, which
//! [`balanced_ok`] checks by direct count. Plain operators are handled by the
//! same combinatorics but only accepted when every trivially-acting residual has
//! dimension at least 2 (S) or 3 (T); otherwise [`Error::UnverifiedPhase`] is
//! returned instead of a possibly wrong answer.
//!
//! The logical frame of a code is inferred from its subcube structure: X
//! stabilizer and X logical operators are the subcubes lying in `rowspace(hx)`
//! and `ker(hz) \ rowspace(hx)`, and logical qubits are indexed by typesets `I`
//! whose standard subcube `⟨I⟩` is a nontrivial Z logical while `⟨Ī⟩` is an X
//! logical. For the big unfolded code this reproduces the restriction of the
//! QRM_6(1,2) action to its three surviving qubits — an inference from the
//! projection argument, checked here by the counts `k` and the pairing
//! `⟨Z_I, X_J⟩ = δ_IJ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, PoisonError};

use serde::Serialize;

use crate::cube::{enumerate_all_subcubes, full_mask, mask_coords, submasks, Subcube};
use crate::error::{Error, Result};
use crate::f2core::{inner, BitVec, Echelon, F2Matrix};
use crate::qrm::CssCode;

/// Level of a diagonal gate in the Clifford hierarchy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Level {
    /// Pauli Z.
    Z = 1,
    /// Phase gate S.
    S = 2,
    /// T gate.
    T = 3,
}

impl Level {
    /// The level of the residual after conjugating past an X operator.
    #[must_use]
    pub fn lower(self) -> Option<Self> {
        match self {
            Self::Z => None,
            Self::S => Some(Self::Z),
            Self::T => Some(Self::S),
        }
    }
}

/// A diagonal gate supported on a subcube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DiagonalGateSpec {
    level: Level,
    support: Subcube,
    balanced: bool,
}

impl DiagonalGateSpec {
    /// Builds a gate; tilde (balanced) gates need a support of dimension ≥ 1.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] for a balanced gate on a single vertex.
    pub fn new(level: Level, support: Subcube, balanced: bool) -> Result<Self> {
        if balanced && support.dim() == 0 {
            return Err(Error::Validation(format!(
                "tilde gate needs a support of dimension >= 1, got {support}"
            )));
        }
        Ok(Self {
            level,
            support,
            balanced,
        })
    }

    /// Tilde form (U on even-weight vertices, U† on odd-weight ones).
    ///
    /// # Errors
    ///
    /// See [`DiagonalGateSpec::new`].
    pub fn tilde(level: Level, support: Subcube) -> Result<Self> {
        Self::new(level, support, true)
    }

    /// Plain form (U on every vertex).
    #[must_use]
    pub fn plain(level: Level, support: Subcube) -> Self {
        Self {
            level,
            support,
            balanced: false,
        }
    }

    /// Hierarchy level.
    #[must_use]
    pub fn level(&self) -> Level {
        self.level
    }

    /// Support subcube.
    #[must_use]
    pub fn support(&self) -> Subcube {
        self.support
    }

    /// Whether this is the tilde form.
    #[must_use]
    pub fn balanced(&self) -> bool {
        self.balanced
    }
}

/// Kind of a Z-type vector relative to a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZKind {
    /// In the row space of `hz`.
    Stabilizer,
    /// Commutes with every X stabilizer but is not a stabilizer.
    NontrivialLogical,
    /// Anticommutes with some X stabilizer.
    NotInNormalizer,
}

/// Classification of a Z vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZClass {
    /// Stabilizer / logical / outside the normalizer.
    pub kind: ZKind,
    /// For a logical equal to a single logical `Z_I` modulo stabilizers, the
    /// typeset `I` (coordinates, 1-based).
    pub logical_type: Option<Vec<usize>>,
}

/// Effect of a diagonal gate on the codespace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Action {
    /// Some stabilizer is mapped outside the stabilizer group.
    NotPreserving,
    /// Preserves the codespace and acts as the identity on it.
    TrivialAction,
    /// Preserves the codespace with a nontrivial logical action.
    NontrivialAction,
}

/// Unordered pair of logical qubits (typesets, sorted).
pub type CzPair = [Vec<usize>; 2];

/// Unordered triple of logical qubits (typesets, sorted).
pub type CczTriple = [Vec<usize>; 3];

/// One gate of an exported logical circuit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateRecord {
    /// `"CZ"` or `"CCZ"`.
    pub gate: &'static str,
    /// Logical qubits as typesets.
    pub qubits: Vec<Vec<usize>>,
}

/// Circuit records for a CZ set.
#[must_use]
pub fn cz_circuit(pairs: &BTreeSet<CzPair>) -> Vec<GateRecord> {
    pairs
        .iter()
        .map(|p| GateRecord {
            gate: "CZ",
            qubits: p.to_vec(),
        })
        .collect()
}

/// Circuit records for a CCZ set.
#[must_use]
pub fn ccz_circuit(triples: &BTreeSet<CczTriple>) -> Vec<GateRecord> {
    triples
        .iter()
        .map(|t| GateRecord {
            gate: "CCZ",
            qubits: t.to_vec(),
        })
        .collect()
}

/// Whether the support has equally many even- and odd-weight vertices (the
/// condition under which tilde-gate phases cancel). Counted directly.
#[must_use]
pub fn balanced_ok(a: &Subcube) -> bool {
    let (even, odd) = a.vertices().fold((0usize, 0usize), |(e, o), v| {
        if v.count_ones() % 2 == 0 {
            (e + 1, o)
        } else {
            (e, o + 1)
        }
    });
    even == odd
}

/// Residual diagonal factor of conjugating `gate` past `X_B`: the next-lower
/// gate on `A ∩ B` (Z for S, S for T), or `None` (identity) when `A ∩ B` is
/// empty or the gate is already Z. The residual keeps the tilde/plain form,
/// except that a single-vertex residual is plain.
///
/// # Errors
///
/// Returns [`Error::Dimension`] if the subcubes live in different cubes.
pub fn conjugate_once(gate: &DiagonalGateSpec, b: &Subcube) -> Result<Option<DiagonalGateSpec>> {
    let Some(level) = gate.level.lower() else {
        return Ok(None);
    };
    let Some(meet) = gate.support.intersect(b)? else {
        return Ok(None);
    };
    Ok(Some(DiagonalGateSpec {
        level,
        support: meet,
        balanced: gate.balanced && meet.dim() >= 1,
    }))
}

#[derive(Clone, Debug)]
struct Qubit {
    typeset: u32,
    z_vec: BitVec,
    x_rep: Subcube,
    x_vec: BitVec,
}

/// Classification engine for one code, with memoized gate actions.
#[derive(Debug)]
pub struct LogicEngine {
    code: CssCode,
    m: usize,
    hx_rows: F2Matrix,
    stab_z: Echelon,
    x_stabilizers: Vec<Subcube>,
    x_logicals: Vec<Subcube>,
    qubits: Vec<Qubit>,
    cache: Mutex<HashMap<DiagonalGateSpec, Action>>,
}

fn orthogonal_to_rows(v: &BitVec, rows: &F2Matrix) -> Result<bool> {
    for r in rows.rows() {
        if inner(v, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn typeset_key(mask: u32) -> Vec<usize> {
    mask_coords(mask)
}

impl LogicEngine {
    /// Infers the subcube frame and logical qubits of `code`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Unsupported`] if the code does not live on a cube, its
    /// X stabilizers/logicals are not spanned by subcubes, or no consistent set
    /// of `k` typeset-indexed logical qubits exists.
    pub fn new(code: &CssCode) -> Result<Self> {
        let m = code.cube_dim().ok_or_else(|| {
            Error::Unsupported(format!("{} does not live on a cube", code.label()))
        })?;
        let stab_x = code.hx().echelon();
        let stab_z = code.hz().echelon();
        let mut x_stabilizers = Vec::new();
        let mut x_logicals = Vec::new();
        for s in enumerate_all_subcubes(m)? {
            let v = s.indicator();
            if stab_x.contains(&v)? {
                x_stabilizers.push(s);
            } else if orthogonal_to_rows(&v, code.hz())? {
                x_logicals.push(s);
            }
        }
        let mut spanning = F2Matrix::empty(code.n());
        for s in x_stabilizers.iter().chain(&x_logicals) {
            spanning.push(s.indicator())?;
        }
        if spanning.rank() != code.n() - stab_z.rank() {
            return Err(Error::Unsupported(format!(
                "X operators of {} are not spanned by subcubes",
                code.label()
            )));
        }
        let stab_span = F2Matrix::from_rows(
            code.n(),
            x_stabilizers.iter().map(Subcube::indicator).collect(),
        )?;
        if stab_span.rank() != stab_x.rank() {
            return Err(Error::Unsupported(format!(
                "X stabilizers of {} are not spanned by subcubes",
                code.label()
            )));
        }

        let mut engine = Self {
            code: code.clone(),
            m,
            hx_rows: code.hx().clone(),
            stab_z,
            x_stabilizers,
            x_logicals,
            qubits: Vec::new(),
            cache: Mutex::new(HashMap::new()),
        };
        engine.qubits = engine.find_qubits()?;
        Ok(engine)
    }

    fn find_qubits(&self) -> Result<Vec<Qubit>> {
        let k = self.code.k();
        if k == 0 {
            return Ok(Vec::new());
        }
        let full = full_mask(self.m);
        let stab_x = self.code.hx().echelon();
        for dim in 0..=self.m {
            let mut qubits = Vec::new();
            for mask in submasks(full).filter(|t| t.count_ones() as usize == dim) {
                let z = Subcube::new(self.m, 0, mask)?;
                let z_vec = z.indicator();
                if self.z_kind(&z_vec)? != ZKind::NontrivialLogical {
                    continue;
                }
                let x_rep = Subcube::new(self.m, 0, full & !mask)?;
                let x_vec = x_rep.indicator();
                if orthogonal_to_rows(&x_vec, self.code.hz())? && !stab_x.contains(&x_vec)? {
                    qubits.push(Qubit {
                        typeset: mask,
                        z_vec,
                        x_rep,
                        x_vec,
                    });
                }
            }
            if qubits.is_empty() {
                continue;
            }
            if qubits.len() != k {
                return Err(Error::Unsupported(format!(
                    "{}: found {} typeset-indexed logical qubits of dimension {dim}, expected k = {k}",
                    self.code.label(),
                    qubits.len()
                )));
            }
            qubits.sort_by_key(|q| typeset_key(q.typeset));
            for a in &qubits {
                for b in &qubits {
                    if inner(&a.z_vec, &b.x_vec)? != (a.typeset == b.typeset) {
                        return Err(Error::Unsupported(format!(
                            "{}: logical representatives are not biorthogonal",
                            self.code.label()
                        )));
                    }
                }
            }
            return Ok(qubits);
        }
        Err(Error::Unsupported(format!(
            "{}: no subcube Z logical found",
            self.code.label()
        )))
    }

    /// The code this engine analyzes.
    #[must_use]
    pub fn code(&self) -> &CssCode {
        &self.code
    }

    /// Logical qubits as typesets, in sorted order.
    #[must_use]
    pub fn logical_qubits(&self) -> Vec<Vec<usize>> {
        self.qubits.iter().map(|q| typeset_key(q.typeset)).collect()
    }

    /// Subcubes that are X stabilizers.
    #[must_use]
    pub fn x_stabilizer_subcubes(&self) -> &[Subcube] {
        &self.x_stabilizers
    }

    /// Subcubes that are nontrivial X logicals.
    #[must_use]
    pub fn x_logical_subcubes(&self) -> &[Subcube] {
        &self.x_logicals
    }

    fn z_kind(&self, v: &BitVec) -> Result<ZKind> {
        if !orthogonal_to_rows(v, &self.hx_rows)? {
            Ok(ZKind::NotInNormalizer)
        } else if self.stab_z.contains(v)? {
            Ok(ZKind::Stabilizer)
        } else {
            Ok(ZKind::NontrivialLogical)
        }
    }

    /// Logical content of a Z-normalizer element: the qubits `J` with
    /// `⟨v, X_J⟩ = 1`, checked to reproduce `v` modulo stabilizers.
    fn decompose(&self, v: &BitVec) -> Result<Vec<usize>> {
        let mut rest = v.clone();
        let mut idx = Vec::new();
        for (j, q) in self.qubits.iter().enumerate() {
            if inner(v, &q.x_vec)? {
                idx.push(j);
                rest.try_xor_assign(&q.z_vec)?;
            }
        }
        if !self.stab_z.contains(&rest)? {
            return Err(Error::Internal(format!(
                "{}: Z logical is not a combination of the qubit frame",
                self.code.label()
            )));
        }
        Ok(idx)
    }

    /// Classifies a Z vector.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] on a length mismatch.
    pub fn classify_z(&self, v: &BitVec) -> Result<ZClass> {
        crate::error::check_len(self.code.n(), v.len())?;
        let kind = self.z_kind(v)?;
        let logical_type = if kind == ZKind::NontrivialLogical {
            match self.decompose(v)?.as_slice() {
                [j] => Some(typeset_key(self.qubits[*j].typeset)),
                _ => None,
            }
        } else {
            None
        };
        Ok(ZClass { kind, logical_type })
    }

    fn residual_action(&self, res: &DiagonalGateSpec) -> Result<Action> {
        match res.level {
            Level::Z => Ok(match self.z_kind(&res.support.indicator())? {
                ZKind::Stabilizer => Action::TrivialAction,
                ZKind::NontrivialLogical => Action::NontrivialAction,
                ZKind::NotInNormalizer => Action::NotPreserving,
            }),
            _ => self.action(res),
        }
    }

    fn phase_ok(gate: &DiagonalGateSpec, res: &DiagonalGateSpec) -> bool {
        if gate.balanced {
            balanced_ok(&res.support)
        } else {
            let need = match gate.level {
                Level::T => 3,
                _ => 2,
            };
            res.support.dim() >= need
        }
    }

    /// Effect of a diagonal gate on the codespace (memoized).
    ///
    /// # Errors
    ///
    /// Returns [`Error::UnverifiedPhase`] when a trivially-acting residual
    /// fails the phase condition, and [`Error::Dimension`] for a support from a
    /// different cube.
    pub fn action(&self, gate: &DiagonalGateSpec) -> Result<Action> {
        if gate.support.m() != self.m {
            return Err(Error::Dimension {
                expected: self.m,
                found: gate.support.m(),
            });
        }
        if let Some(a) = self
            .cache
            .lock()
            .unwrap_or_else(PoisonError::into_inner)
            .get(gate)
        {
            return Ok(*a);
        }
        let result = self.compute_action(gate)?;
        self.cache
            .lock()
            .unwrap_or_else(PoisonError::into_inner)
            .insert(*gate, result);
        Ok(result)
    }

    fn compute_action(&self, gate: &DiagonalGateSpec) -> Result<Action> {
        if gate.level == Level::Z {
            return Ok(match self.z_kind(&gate.support.indicator())? {
                ZKind::Stabilizer => Action::TrivialAction,
                ZKind::NontrivialLogical => Action::NontrivialAction,
                ZKind::NotInNormalizer => Action::NotPreserving,
            });
        }
        let mut trivial = Vec::new();
        for b in &self.x_stabilizers {
            if let Some(res) = conjugate_once(gate, b)? {
                if self.residual_action(&res)? != Action::TrivialAction {
                    return Ok(Action::NotPreserving);
                }
                trivial.push(res);
            }
        }
        let mut nontrivial = false;
        for b in &self.x_logicals {
            if let Some(res) = conjugate_once(gate, b)? {
                match self.residual_action(&res)? {
                    Action::TrivialAction => trivial.push(res),
                    Action::NontrivialAction => nontrivial = true,
                    Action::NotPreserving => {
                        return Err(Error::Internal(format!(
                            "residual of {gate:?} on X logical {b} leaves the codespace \
                             although every stabilizer residual is trivial"
                        )))
                    }
                }
            }
        }
        if let Some(bad) = trivial.iter().find(|r| !Self::phase_ok(gate, r)) {
            return Err(Error::UnverifiedPhase(format!(
                "residual {:?} on {} of {} gate on {} fails the phase condition",
                bad.level,
                bad.support,
                if gate.balanced { "tilde" } else { "plain" },
                gate.support
            )));
        }
        Ok(if nontrivial {
            Action::NontrivialAction
        } else {
            Action::TrivialAction
        })
    }

    /// Logical CZ pairs of a codespace-preserving tilde S gate on `a`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] if the gate does not preserve the codespace,
    /// and [`Error::Internal`] if the induced action is not a symmetric CZ set.
    pub fn logical_action_s(&self, a: &Subcube) -> Result<BTreeSet<CzPair>> {
        let gate = DiagonalGateSpec::tilde(Level::S, *a)?;
        if self.action(&gate)? == Action::NotPreserving {
            return Err(Error::Validation(format!(
                "S on {a} does not preserve the codespace of {}",
                self.code.label()
            )));
        }
        let mut directed = BTreeSet::new();
        for (i, q) in self.qubits.iter().enumerate() {
            let Some(res) = conjugate_once(&gate, &q.x_rep)? else {
                continue;
            };
            for j in self.decompose(&res.support.indicator())? {
                if i == j {
                    return Err(Error::Internal(format!(
                        "S on {a} acts as a logical S on qubit {}",
                        crate::cube::fmt_typeset(q.typeset)
                    )));
                }
                directed.insert((i, j));
            }
        }
        let mut pairs = BTreeSet::new();
        for &(i, j) in &directed {
            if !directed.contains(&(j, i)) {
                return Err(Error::Internal(format!(
                    "S on {a}: logical action is not symmetric"
                )));
            }
            let (x, y) = (typeset_key(self.qubits[i].typeset), typeset_key(self.qubits[j].typeset));
            pairs.insert(if x < y { [x, y] } else { [y, x] });
        }
        Ok(pairs)
    }

    /// Logical CCZ triples of the tilde T gate on the full cube.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Unsupported`] if that gate does not preserve the
    /// codespace, and [`Error::Internal`] if the triples are inconsistent.
    pub fn logical_action_t_full(&self) -> Result<BTreeSet<CczTriple>> {
        let full = Subcube::full(self.m)?;
        let gate = DiagonalGateSpec::tilde(Level::T, full)?;
        if self.action(&gate)? == Action::NotPreserving {
            return Err(Error::Unsupported(format!(
                "transversal T does not preserve the codespace of {}",
                self.code.label()
            )));
        }
        let mut seen: BTreeMap<CczTriple, usize> = BTreeMap::new();
        for q in &self.qubits {
            let i = typeset_key(q.typeset);
            for [j, k] in self.logical_action_s(&q.x_rep)? {
                let mut t = [i.clone(), j, k];
                t.sort();
                *seen.entry(t).or_default() += 1;
            }
        }
        if let Some((t, n)) = seen.iter().find(|(_, n)| **n != 3) {
            return Err(Error::Internal(format!(
                "CCZ {t:?} seen from {n} of its 3 qubits"
            )));
        }
        Ok(seen.into_keys().collect())
    }
}

/// Classifies `v` against `code` (builds a fresh [`LogicEngine`]).
///
/// # Errors
///
/// Propagates frame inference and length errors.
pub fn classify_z(code: &CssCode, v: &BitVec) -> Result<ZClass> {
    LogicEngine::new(code)?.classify_z(v)
}

/// Effect of the tilde gate of `level` on `a`.
///
/// # Errors
///
/// Propagates frame inference and phase errors.
pub fn preserves_codespace(code: &CssCode, level: Level, a: &Subcube) -> Result<Action> {
    LogicEngine::new(code)?.action(&DiagonalGateSpec::tilde(level, *a)?)
}

/// Logical CZ pairs of tilde S on `a`.
///
/// # Errors
///
/// See [`LogicEngine::logical_action_s`].
pub fn logical_action_s(code: &CssCode, a: &Subcube) -> Result<BTreeSet<CzPair>> {
    LogicEngine::new(code)?.logical_action_s(a)
}

/// Logical CCZ triples of transversal tilde T.
///
/// # Errors
///
/// See [`LogicEngine::logical_action_t_full`].
pub fn logical_action_t_full(code: &CssCode) -> Result<BTreeSet<CczTriple>> {
    LogicEngine::new(code)?.logical_action_t_full()
}
