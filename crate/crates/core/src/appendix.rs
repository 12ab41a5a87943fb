//! Row/rank tables of QRM_4(1,1) before and after puncturing qubit 0, in two
//! presentations.
//!
//! - *standard*: the monomial generators — `1, X_i` for `H_X` (RM_4(1)) and
//!   `1, X_i, X_iX_j` for `H_Z` (RM_4(2)); a monomial is the subcube with its
//!   variables fixed to 1 and all others free.
//! - *fixed*: every 3-subcube for `H_X` and every 2-subcube for `H_Z`.
//!
//! The code has `k = 0`, so before puncturing the logical matrices `L_X, L_Z`
//! equal the stabilizer matrices. Puncturing at vertex 0 shortens the
//! stabilizers (`H' = shorten(H, 0)`) and punctures the logicals
//! (`L' = puncture_matrix(L, 0)`). Only permutation-invariant data (row
//! counts, ranks, row-space equalities) is reported.

use serde::Serialize;

use crate::cube::{enumerate_subcubes, full_mask, submasks, Subcube};
use crate::error::Result;
use crate::f2core::{row_space_equal, F2Matrix};
use crate::qrm::{puncture_matrix, shorten};

/// Before or after puncturing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    /// QRM_4(1,1) itself.
    Before,
    /// After deleting qubit 0.
    After,
}

/// One cell of the summary tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixEntry {
    /// Matrix name, e.g. `"H_Z^fixed"`.
    pub matrix: String,
    /// Before or after puncturing.
    pub stage: Stage,
    /// Number of rows.
    pub rows: usize,
    /// Rank.
    pub rank: usize,
}

/// The eight appendix matrices at one stage.
#[derive(Clone, Debug)]
pub struct AppendixMatrices {
    /// `(name, matrix)` in table order.
    pub matrices: Vec<(String, F2Matrix)>,
}

const M: usize = 4;

fn monomials(max_degree: usize) -> Result<F2Matrix> {
    let full = full_mask(M);
    let mut masks: Vec<u32> = submasks(full)
        .filter(|s| s.count_ones() as usize <= max_degree)
        .collect();
    masks.sort_by_key(|s| (s.count_ones(), *s));
    let rows = masks
        .into_iter()
        .map(|s| Subcube::new(M, s, full & !s).map(|c| c.indicator()))
        .collect::<Result<_>>()?;
    F2Matrix::from_rows(1 << M, rows)
}

fn all_subcubes(dim: usize) -> Result<F2Matrix> {
    let rows = enumerate_subcubes(M, dim)?
        .iter()
        .map(Subcube::indicator)
        .collect();
    F2Matrix::from_rows(1 << M, rows)
}

/// Builds the eight matrices before and after puncturing.
///
/// # Errors
///
/// Propagates construction errors.
pub fn appendix_matrices() -> Result<(AppendixMatrices, AppendixMatrices)> {
    let hx_std = monomials(1)?;
    let hz_std = monomials(2)?;
    let hx_fix = all_subcubes(3)?;
    let hz_fix = all_subcubes(2)?;
    let mut before = Vec::new();
    let mut after = Vec::new();
    for (pres, hx, hz) in [("standard", &hx_std, &hz_std), ("fixed", &hx_fix, &hz_fix)] {
        before.push((format!("H_X^{pres}"), hx.clone()));
        before.push((format!("L_X^{pres}"), hx.clone()));
        before.push((format!("H_Z^{pres}"), hz.clone()));
        before.push((format!("L_Z^{pres}"), hz.clone()));
        after.push((format!("H_X'^{pres}"), shorten(hx, 0)?));
        after.push((format!("L_X'^{pres}"), puncture_matrix(hx, 0)?));
        after.push((format!("H_Z'^{pres}"), shorten(hz, 0)?));
        after.push((format!("L_Z'^{pres}"), puncture_matrix(hz, 0)?));
    }
    Ok((
        AppendixMatrices { matrices: before },
        AppendixMatrices { matrices: after },
    ))
}

/// The sixteen `(rows, rank)` entries.
///
/// # Errors
///
/// Propagates construction errors.
pub fn appendix_tables() -> Result<Vec<AppendixEntry>> {
    let (before, after) = appendix_matrices()?;
    let mut out = Vec::new();
    for (stage, set) in [(Stage::Before, before), (Stage::After, after)] {
        for (name, m) in set.matrices {
            out.push(AppendixEntry {
                matrix: name,
                stage,
                rows: m.nrows(),
                rank: m.rank(),
            });
        }
    }
    Ok(out)
}

/// Whether the standard and fixed presentations have equal row spaces for
/// each of the eight matrix roles (four before, four after puncturing).
///
/// # Errors
///
/// Propagates construction errors.
pub fn presentations_agree() -> Result<bool> {
    let (before, after) = appendix_matrices()?;
    for set in [before, after] {
        let (std, fixed) = set.matrices.split_at(4);
        for ((_, a), (_, b)) in std.iter().zip(fixed) {
            if !row_space_equal(a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_sizes() {
        assert_eq!(monomials(1).unwrap().nrows(), 5);
        assert_eq!(monomials(2).unwrap().nrows(), 11);
        assert_eq!(appendix_tables().unwrap().len(), 16);
        assert!(presentations_agree().unwrap());
    }
}
