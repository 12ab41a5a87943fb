//! The fixed table of code labels shared by the command line and the tests.
//!
//! | label              | code                          | basis / layout            |
//! |--------------------|-------------------------------|---------------------------|
//! | `small-unfolded`   | QRM_4(1,1) punctured at 0     | QRM_4(1,1) squares, planar-4 |
//! | `qrm611`           | QRM_6(1,1)                    | 57 squares, planar-6      |
//! | `big-unfolded`     | big unfolded code             | 54 squares, planar-6      |
//! | `rubik`, `qrm612`  | QRM_6(1,2)                    | 42 cubes, rubik-6         |
//! | `qrm722`           | QRM_7(2,2)                    | 99 cubes, cube-7          |
//! | `qrm722-punctured` | QRM_7(2,2) punctured at 0     | —                         |
//! | `qrm301`           | QRM_3(0,1)                    | —                         |
//!
//! Censuses follow the code's structure: for codes with logical qubits they
//! count minimum-weight nontrivial Z logicals; for `k = 0` codes (qrm611,
//! qrm722) there is no logical, and the census is that of the Z-stabilizer
//! space itself (the classical code RM_m(m−r−1)).

use crate::bases::BasisKind;
use crate::distance::{
    big_unfolded_census, brute_force_logical_census, min_weight_words, punctured_min_logicals,
    qrm_min_logicals, WeightCensus,
};
use crate::error::{Error, Result};
use crate::layout::LayoutKind;
use crate::qrm::{big_unfolded, puncture_code, qrm_code, CodeOrigin, CssCode, QrmParams, RmParams};

/// A registry entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeEntry {
    /// Canonical label.
    pub label: &'static str,
    /// One-line description.
    pub description: &'static str,
    /// Basis verified by `verify-basis` and drawn by `export`, if any.
    pub basis: Option<BasisKind>,
}

/// All registry entries (aliases excluded).
pub const CODES: [CodeEntry; 7] = [
    CodeEntry {
        label: "small-unfolded",
        description: "QRM_4(1,1) punctured at qubit 0 ([[15,1,3]])",
        basis: Some(BasisKind::SmallUnfolded),
    },
    CodeEntry {
        label: "qrm611",
        description: "QRM_6(1,1) ([[64,0]])",
        basis: Some(BasisKind::Qrm611),
    },
    CodeEntry {
        label: "big-unfolded",
        description: "big unfolded code ([[64,3,4]])",
        basis: Some(BasisKind::BigUnfolded),
    },
    CodeEntry {
        label: "rubik",
        description: "QRM_6(1,2) ([[64,15,4]])",
        basis: Some(BasisKind::Rubik),
    },
    CodeEntry {
        label: "qrm722",
        description: "QRM_7(2,2) ([[128,0]])",
        basis: Some(BasisKind::Qrm722),
    },
    CodeEntry {
        label: "qrm722-punctured",
        description: "QRM_7(2,2) punctured at qubit 0 ([[127,1,7]])",
        basis: None,
    },
    CodeEntry {
        label: "qrm301",
        description: "QRM_3(0,1) ([[8,3,2]])",
        basis: None,
    },
];

/// Resolves a label (or the alias `qrm612`).
///
/// # Errors
///
/// Returns [`Error::Validation`] for an unknown label.
pub fn lookup(label: &str) -> Result<CodeEntry> {
    let canonical = if label == "qrm612" { "rubik" } else { label };
    CODES
        .iter()
        .find(|e| e.label == canonical)
        .copied()
        .ok_or_else(|| {
            let known: Vec<&str> = CODES.iter().map(|e| e.label).collect();
            Error::Validation(format!(
                "unknown code label {label:?}; known: {}, qrm612",
                known.join(", ")
            ))
        })
}

impl CodeEntry {
    /// Builds the code.
    ///
    /// # Errors
    ///
    /// Propagates construction errors.
    pub fn code(&self) -> Result<CssCode> {
        match self.label {
            "small-unfolded" => puncture_code(&qrm_code(QrmParams::new(4, 1, 1)?)?, 0),
            "qrm611" => qrm_code(QrmParams::new(6, 1, 1)?),
            "big-unfolded" => big_unfolded(),
            "rubik" => qrm_code(QrmParams::new(6, 1, 2)?),
            "qrm722" => qrm_code(QrmParams::new(7, 2, 2)?),
            "qrm722-punctured" => puncture_code(&qrm_code(QrmParams::new(7, 2, 2)?)?, 0),
            "qrm301" => qrm_code(QrmParams::new(3, 0, 1)?),
            other => Err(Error::Internal(format!("registry entry {other} has no builder"))),
        }
    }

    /// Default layout of the entry's basis.
    #[must_use]
    pub fn layout(&self) -> Option<LayoutKind> {
        self.basis.map(LayoutKind::for_basis)
    }
}

/// Minimum-weight census appropriate to the code's construction (see the
/// module docs for `k = 0` codes).
///
/// # Errors
///
/// Propagates census errors; arbitrary codes fall back to brute force and may
/// exceed its budget.
pub fn census(code: &CssCode) -> Result<WeightCensus> {
    let mut c = match code.origin() {
        CodeOrigin::Qrm(p) if code.k() > 0 => qrm_min_logicals(p)?,
        CodeOrigin::Qrm(p) => {
            let r = p.m.checked_sub(p.r + 1).ok_or_else(|| {
                Error::Unsupported(format!("{} has no Z stabilizers", p.label()))
            })?;
            let mut c = min_weight_words(RmParams::new(p.m, r)?)?;
            c.code = format!("{} Z stabilizers ({})", p.label(), c.code);
            c
        }
        CodeOrigin::Punctured { .. } => punctured_min_logicals(code)?,
        CodeOrigin::BigUnfolded => big_unfolded_census()?,
        CodeOrigin::Custom => brute_force_logical_census(code)?,
    };
    if c.code.is_empty() {
        c.code = code.label().to_string();
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_resolve() {
        assert_eq!(lookup("qrm612").unwrap().label, "rubik");
        assert!(lookup("nosuch").is_err());
        for e in CODES {
            assert_eq!(lookup(e.label).unwrap(), e);
        }
    }
}
