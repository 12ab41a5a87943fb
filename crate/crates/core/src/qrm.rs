//! Classical Reed-Muller codes, quantum Reed-Muller CSS codes, the Plotkin
//! recursion, puncturing/shortening and the big unfolded code.

use serde::Serialize;

use crate::bases;
use crate::cube::{check_m, enumerate_subcubes};
use crate::error::{Error, Result};
use crate::f2core::{inner, kernel_basis, BitVec, F2Matrix};

/// Binomial coefficient as `u64`, saturating at `u64::MAX` when the exact
/// value does not fit (so budget checks on large codes refuse instead of
/// panicking).
#[must_use]
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n−i) is divisible by i+1 because acc = C(n, i).
        let Some(next) = acc.checked_mul(u128::from(n - i)) else {
            return u64::MAX;
        };
        acc = next / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}

/// Parameters of the classical code RM_m(r).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RmParams {
    /// Number of variables; length is `2^m`.
    pub m: usize,
    /// Maximal degree.
    pub r: usize,
}

impl RmParams {
    /// Validated constructor.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] unless `0 ≤ m ≤ 16` and `r ≤ m`. The
    /// `m = 0` code is the full code of length 1.
    pub fn new(m: usize, r: usize) -> Result<Self> {
        if m != 0 {
            check_m(m)?;
        }
        if r > m {
            return Err(Error::Validation(format!("RM degree {r} exceeds m = {m}")));
        }
        Ok(Self { m, r })
    }

    /// Code length `2^m`.
    #[must_use]
    pub fn n(&self) -> usize {
        1 << self.m
    }

    /// Dimension `Σ_{i≤r} C(m,i)`.
    #[must_use]
    pub fn dimension(&self) -> usize {
        (0..=self.r)
            .map(|i| binomial(self.m as u64, i as u64) as usize)
            .sum()
    }
}

/// Parameters of QRM_m(q,r): X stabilizers RM_m(q), Z stabilizers RM_m(m−r−1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QrmParams {
    /// Cube dimension.
    pub m: usize,
    /// Degree of the X-stabilizer code.
    pub q: usize,
    /// `m − r − 1` is the degree of the Z-stabilizer code.
    pub r: usize,
}

impl QrmParams {
    /// Validated constructor.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Validation`] unless `1 ≤ m ≤ 16` and `q ≤ r ≤ m`.
    pub fn new(m: usize, q: usize, r: usize) -> Result<Self> {
        check_m(m)?;
        if q > r || r > m {
            return Err(Error::Validation(format!(
                "QRM parameters need q <= r <= m, got m={m}, q={q}, r={r}"
            )));
        }
        Ok(Self { m, q, r })
    }

    /// Expected number of logical qubits `Σ_{i=q+1}^{r} C(m,i)`.
    #[must_use]
    pub fn expected_k(&self) -> usize {
        ((self.q + 1)..=self.r)
            .map(|i| binomial(self.m as u64, i as u64) as usize)
            .sum()
    }

    /// Conventional label, e.g. `QRM_6(1,2)`.
    #[must_use]
    pub fn label(&self) -> String {
        format!("QRM_{}({},{})", self.m, self.q, self.r)
    }
}

/// Where a code came from; used by operations that need the parent structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeOrigin {
    /// Built by [`qrm_code`].
    Qrm(QrmParams),
    /// Built by [`puncture_code`] from a quantum Reed-Muller code.
    Punctured {
        /// Parameters of the unpunctured code.
        parent: QrmParams,
        /// Deleted qubit (vertex index).
        pos: usize,
    },
    /// Built by [`big_unfolded`].
    BigUnfolded,
    /// Anything else.
    Custom,
}

/// A CSS code given by X- and Z-stabilizer generator matrices.
#[derive(Clone, Debug)]
pub struct CssCode {
    label: String,
    hx: F2Matrix,
    hz: F2Matrix,
    origin: CodeOrigin,
}

/// JSON form `{label, n, hx, hz, k}` with rows as bit strings.
#[derive(Serialize)]
struct CssCodeJson<'a> {
    label: &'a str,
    n: usize,
    hx: Vec<String>,
    hz: Vec<String>,
    k: usize,
}

impl CssCode {
    /// Builds a code after checking the CSS commutation condition.
    ///
    /// # Errors
    ///
    /// Returns [`Error::Dimension`] if the matrices have different widths and
    /// [`Error::Validation`] if some X row overlaps some Z row oddly.
    pub fn new(label: impl Into<String>, hx: F2Matrix, hz: F2Matrix) -> Result<Self> {
        Self::with_origin(label, hx, hz, CodeOrigin::Custom)
    }

    fn with_origin(
        label: impl Into<String>,
        hx: F2Matrix,
        hz: F2Matrix,
        origin: CodeOrigin,
    ) -> Result<Self> {
        crate::error::check_len(hx.ncols(), hz.ncols())?;
        for (i, x) in hx.rows().iter().enumerate() {
            for (j, z) in hz.rows().iter().enumerate() {
                if inner(x, z)? {
                    return Err(Error::Validation(format!(
                        "X row {i} and Z row {j} anticommute"
                    )));
                }
            }
        }
        Ok(Self {
            label: label.into(),
            hx,
            hz,
            origin,
        })
    }

    /// Human-readable label.
    #[must_use]
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of physical qubits.
    #[must_use]
    pub fn n(&self) -> usize {
        self.hx.ncols()
    }

    /// X-stabilizer generators.
    #[must_use]
    pub fn hx(&self) -> &F2Matrix {
        &self.hx
    }

    /// Z-stabilizer generators.
    #[must_use]
    pub fn hz(&self) -> &F2Matrix {
        &self.hz
    }

    /// Construction provenance.
    #[must_use]
    pub fn origin(&self) -> CodeOrigin {
        self.origin
    }

    /// Number of logical qubits, `n − rank(hx) − rank(hz)`, always computed from ranks.
    #[must_use]
    pub fn k(&self) -> usize {
        self.n() - self.hx.rank() - self.hz.rank()
    }

    /// Cube dimension when `n` is a power of two.
    #[must_use]
    pub fn cube_dim(&self) -> Option<usize> {
        let n = self.n();
        (n.is_power_of_two() && n > 1).then(|| n.trailing_zeros() as usize)
    }

    /// Serializes as `{label, n, hx, hz, k}`.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let rows = |m: &F2Matrix| m.rows().iter().map(BitVec::to_bitstring).collect();
        serde_json::to_value(CssCodeJson {
            label: &self.label,
            n: self.n(),
            hx: rows(&self.hx),
            hz: rows(&self.hz),
            k: self.k(),
        })
        .expect("code serializes")
    }
}

/// Generators of RM_m(r): indicators of all `(m−r)`-subcubes.
///
/// # Errors
///
/// Propagates subcube enumeration errors (invalid `m`).
pub fn rm_generators(p: RmParams) -> Result<F2Matrix> {
    if p.m == 0 {
        return F2Matrix::from_rows(1, vec![BitVec::ones(1)]);
    }
    let rows = enumerate_subcubes(p.m, p.m - p.r)?
        .iter()
        .map(|s| s.indicator())
        .collect();
    F2Matrix::from_rows(p.n(), rows)
}

/// Generators of RM_m(r) from the `(u, u+v)` recursion: rows `(u, u)` for `u`
/// generating RM_{m−1}(r) and `(0, v)` for `v` generating RM_{m−1}(r−1). The
/// first half of the coordinates has `x_m = 0`.
///
/// # Errors
///
/// Returns [`Error::Validation`] for invalid parameters.
pub fn plotkin_generators(p: RmParams) -> Result<F2Matrix> {
    let p = RmParams::new(p.m, p.r)?;
    Ok(plotkin_rec(p.m, p.r))
}

fn plotkin_rec(m: usize, r: usize) -> F2Matrix {
    let n = 1usize << m;
    if r >= m {
        return F2Matrix::identity(n);
    }
    if r == 0 {
        return F2Matrix::from_rows(n, vec![BitVec::ones(n)]).expect("row length n");
    }
    let half = n / 2;
    let mut rows = Vec::new();
    for u in plotkin_rec(m - 1, r).rows() {
        let idx: Vec<usize> = u.iter_ones().flat_map(|i| [i, i + half]).collect();
        rows.push(BitVec::from_indices(n, idx).expect("indices below n"));
    }
    for v in plotkin_rec(m - 1, r - 1).rows() {
        let idx: Vec<usize> = v.iter_ones().map(|i| i + half).collect();
        rows.push(BitVec::from_indices(n, idx).expect("indices below n"));
    }
    F2Matrix::from_rows(n, rows).expect("row length n")
}

/// QRM_m(q,r) with `hx = rm_generators(m,q)` and `hz = rm_generators(m, m−r−1)`
/// (no Z generators when `r = m`).
///
/// # Errors
///
/// Returns an error for invalid parameters.
pub fn qrm_code(p: QrmParams) -> Result<CssCode> {
    let p = QrmParams::new(p.m, p.q, p.r)?;
    let hx = rm_generators(RmParams::new(p.m, p.q)?)?;
    let hz = if p.r + 1 > p.m {
        F2Matrix::empty(1 << p.m)
    } else {
        rm_generators(RmParams::new(p.m, p.m - p.r - 1)?)?
    };
    CssCode::with_origin(p.label(), hx, hz, CodeOrigin::Qrm(p))
}

/// Keeps the rows that vanish at `pos` and deletes column `pos`.
///
/// # Errors
///
/// Returns [`Error::Validation`] if `pos` is out of range.
pub fn shorten(m: &F2Matrix, pos: usize) -> Result<F2Matrix> {
    check_pos(m, pos)?;
    let rows = m
        .rows()
        .iter()
        .filter(|r| !r.get(pos))
        .map(|r| r.delete(pos))
        .collect::<Result<_>>()?;
    F2Matrix::from_rows(m.ncols() - 1, rows)
}

/// Deletes column `pos`, keeping every row.
///
/// # Errors
///
/// Returns [`Error::Validation`] if `pos` is out of range.
pub fn puncture_matrix(m: &F2Matrix, pos: usize) -> Result<F2Matrix> {
    check_pos(m, pos)?;
    let rows = m
        .rows()
        .iter()
        .map(|r| r.delete(pos))
        .collect::<Result<_>>()?;
    F2Matrix::from_rows(m.ncols() - 1, rows)
}

fn check_pos(m: &F2Matrix, pos: usize) -> Result<()> {
    if pos < m.ncols() {
        Ok(())
    } else {
        Err(Error::Validation(format!(
            "position {pos} out of range for {} columns",
            m.ncols()
        )))
    }
}

/// Punctures a `k = 0` code at qubit `pos`, shortening both stabilizer matrices.
///
/// # Errors
///
/// Returns [`Error::PunctureNoLogical`] unless the code has `k = 0` and both
/// ranks drop by exactly one, and [`Error::Validation`] for a bad position.
pub fn puncture_code(c: &CssCode, pos: usize) -> Result<CssCode> {
    if c.k() != 0 {
        return Err(Error::PunctureNoLogical(format!(
            "{} already has k = {}",
            c.label(),
            c.k()
        )));
    }
    let hx = shorten(c.hx(), pos)?;
    let hz = shorten(c.hz(), pos)?;
    let (rx, rz) = (c.hx().rank(), c.hz().rank());
    if hx.rank() + 1 != rx || hz.rank() + 1 != rz {
        return Err(Error::PunctureNoLogical(format!(
            "ranks go from ({rx}, {rz}) to ({}, {})",
            hx.rank(),
            hz.rank()
        )));
    }
    let origin = match c.origin() {
        CodeOrigin::Qrm(parent) => CodeOrigin::Punctured { parent, pos },
        _ => CodeOrigin::Custom,
    };
    CssCode::with_origin(format!("{} punctured at {pos}", c.label()), hx, hz, origin)
}

/// The big unfolded code: X stabilizers RM_6(1), Z stabilizers the 54 named
/// squares of the big unfolded planar basis (stored verbatim, not reduced).
///
/// # Errors
///
/// Returns [`Error::Internal`] if the stored table does not have rank 54.
pub fn big_unfolded() -> Result<CssCode> {
    let hx = rm_generators(RmParams::new(6, 1)?)?;
    let gens = bases::big_unfolded_generators()?;
    let hz = F2Matrix::from_rows(64, gens.iter().map(|s| s.indicator()).collect())?;
    if hz.rank() != 54 {
        return Err(Error::Internal(format!(
            "big unfolded Z generators have rank {}",
            hz.rank()
        )));
    }
    CssCode::with_origin("big unfolded", hx, hz, CodeOrigin::BigUnfolded)
}

/// Basis of the Z-normalizer `{v : v ⊥ every row of hx}`; nontrivial Z logicals
/// are its members outside the row space of `hz`.
#[must_use]
pub fn z_logical_space(c: &CssCode) -> F2Matrix {
    kernel_basis(c.hx())
}

/// Basis of the X-normalizer `{v : v ⊥ every row of hz}`.
#[must_use]
pub fn x_logical_space(c: &CssCode) -> F2Matrix {
    kernel_basis(c.hz())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2core::row_space_equal;

    #[test]
    fn binomials() {
        assert_eq!(binomial(64, 5), 7_624_512);
        assert_eq!(binomial(6, 7), 0);
        assert_eq!(binomial(127, 7), 89_356_415_775);
        assert_eq!(binomial(126, 63), u64::MAX);
    }

    #[test]
    fn rm_ranks() {
        assert_eq!(rm_generators(RmParams::new(4, 2).unwrap()).unwrap().rank(), 11);
        assert_eq!(rm_generators(RmParams::new(6, 4).unwrap()).unwrap().rank(), 57);
        let r0 = rm_generators(RmParams::new(5, 0).unwrap()).unwrap();
        assert_eq!(r0.rank(), 1);
        assert_eq!(r0.rows()[0], BitVec::ones(32));
    }

    #[test]
    fn plotkin_small_cases() {
        let p = RmParams::new(4, 2).unwrap();
        assert!(row_space_equal(&plotkin_generators(p).unwrap(), &rm_generators(p).unwrap()).unwrap());
        assert_eq!(plotkin_generators(RmParams::new(1, 1).unwrap()).unwrap().rank(), 2);
        assert_eq!(plotkin_generators(RmParams::new(7, 4).unwrap()).unwrap().rank(), 99);
    }

    #[test]
    fn qrm_parameters() {
        let c = qrm_code(QrmParams::new(4, 1, 1).unwrap()).unwrap();
        assert_eq!((c.n(), c.k()), (16, 0));
        assert_eq!(qrm_code(QrmParams::new(6, 1, 2).unwrap()).unwrap().k(), 15);
        let c = qrm_code(QrmParams::new(7, 2, 2).unwrap()).unwrap();
        assert_eq!((c.k(), c.hz().rank()), (0, 99));
        assert!(QrmParams::new(4, 2, 1).is_err());
    }

    #[test]
    fn shorten_keeps_rows_avoiding_the_column() {
        let m = F2Matrix::from_text("0110\n0011\n0000").unwrap();
        let s = shorten(&m, 0).unwrap();
        assert_eq!(s.nrows(), 3);
        assert_eq!(s.ncols(), 3);
        assert!(shorten(&m, 4).is_err());
    }

    #[test]
    fn puncturing_creates_one_logical_qubit_once() {
        let c = qrm_code(QrmParams::new(4, 1, 1).unwrap()).unwrap();
        let p = puncture_code(&c, 0).unwrap();
        assert_eq!((p.n(), p.k()), (15, 1));
        assert!(matches!(puncture_code(&p, 0), Err(Error::PunctureNoLogical(_))));
    }

    #[test]
    fn commutation_is_enforced() {
        let hx = F2Matrix::from_text("10").unwrap();
        let hz = F2Matrix::from_text("11").unwrap();
        assert!(CssCode::new("bad", hx, hz).is_err());
    }

    #[test]
    fn json_shape() {
        let c = qrm_code(QrmParams::new(3, 0, 1).unwrap()).unwrap();
        let j = c.to_json();
        assert_eq!(j["n"], 8);
        assert_eq!(j["k"], 3);
        assert_eq!(j["hx"].as_array().unwrap().len(), 1);
    }
}
