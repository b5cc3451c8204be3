//! Named example algebras with validated structure constants and a table of
//! expected invariant values.
//!
//! The algebras are defined here in code; `data/catalog/` ships the same
//! algebras as interchange JSON plus `expected.json`, a table of known
//! invariants regenerated by the `gen_expected` binary. That script performs
//! only direct cochain-complex computations and literal classical facts, so
//! the table is an independent check on the classifier and structure code.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::rat_int;
use crate::liealg::LieAlgebra;

/// A catalog algebra plus its expected-values row, when one is recorded.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub expected: Option<ExpectedEntry>,
}

/// One expected value with a note on where it comes from.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExpectedValue<T> {
    pub provenance: String,
    pub value: T,
}

/// Known invariants of a catalog algebra. Every field is reproduced by the
/// corresponding library operation in the catalog tests.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExpectedEntry {
    pub dim: ExpectedValue<usize>,
    /// Dimensions of H^n(L, K) for n = 0 ..= dim L.
    pub h_trivial: ExpectedValue<Vec<usize>>,
    pub is_abelian: ExpectedValue<bool>,
    pub is_nilpotent: ExpectedValue<bool>,
    pub is_semisimple: ExpectedValue<bool>,
    pub is_solvable: ExpectedValue<bool>,
    /// Determinant of the Killing form matrix, as a rational string.
    pub killing_det: ExpectedValue<String>,
    /// Expected classifier outcome: "one_dimensional", "semisimple",
    /// "semisimple_plus_line" or "witness".
    pub verdict_case: ExpectedValue<String>,
}

const NAMES: &[&str] = &[
    "abelian1",
    "abelian2",
    "abelian3",
    "abelian4",
    "aff1",
    "heisenberg3",
    "n4",
    "sl2",
    "sl2_plus_line",
    "sl2_plus_sl2",
    "sl2_semidirect_natural",
    "so3",
    "solvable3",
];

/// Catalog names in listing order.
pub fn list() -> Vec<&'static str> {
    NAMES.to_vec()
}

/// Look up a catalog entry by name.
pub fn get(name: &str) -> Result<CatalogEntry> {
    let algebra = build(name).ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
    let expected = expected_table().get(name).cloned();
    Ok(CatalogEntry { name: name.to_string(), algebra, expected })
}

fn build(name: &str) -> Option<LieAlgebra> {
    let l = match name {
        "abelian1" => LieAlgebra::abelian("abelian1", 1),
        "abelian2" => LieAlgebra::abelian("abelian2", 2),
        "abelian3" => LieAlgebra::abelian("abelian3", 3),
        "abelian4" => LieAlgebra::abelian("abelian4", 4),
        // [x, y] = y
        "aff1" => LieAlgebra::from_brackets("aff1", &["x", "y"], &[(0, 1, 1, rat_int(1))])
            .expect("catalog data"),
        // [x, y] = z
        "heisenberg3" => {
            LieAlgebra::from_brackets("heisenberg3", &["x", "y", "z"], &[(0, 1, 2, rat_int(1))])
                .expect("catalog data")
        }
        // Filiform: [e0, e1] = e2, [e0, e2] = e3.
        "n4" => LieAlgebra::from_brackets(
            "n4",
            &["e0", "e1", "e2", "e3"],
            &[(0, 1, 2, rat_int(1)), (0, 2, 3, rat_int(1))],
        )
        .expect("catalog data"),
        // [e, h] = -2e, [e, f] = h, [h, f] = -2f.
        "sl2" => LieAlgebra::from_brackets(
            "sl2",
            &["e", "h", "f"],
            &[(0, 1, 0, rat_int(-2)), (0, 2, 1, rat_int(1)), (1, 2, 2, rat_int(-2))],
        )
        .expect("catalog data"),
        "sl2_plus_line" => LieAlgebra::from_brackets(
            "sl2_plus_line",
            &["e", "h", "f", "z"],
            &[(0, 1, 0, rat_int(-2)), (0, 2, 1, rat_int(1)), (1, 2, 2, rat_int(-2))],
        )
        .expect("catalog data"),
        "sl2_plus_sl2" => LieAlgebra::from_brackets(
            "sl2_plus_sl2",
            &["e1", "h1", "f1", "e2", "h2", "f2"],
            &[
                (0, 1, 0, rat_int(-2)),
                (0, 2, 1, rat_int(1)),
                (1, 2, 2, rat_int(-2)),
                (3, 4, 3, rat_int(-2)),
                (3, 5, 4, rat_int(1)),
                (4, 5, 5, rat_int(-2)),
            ],
        )
        .expect("catalog data"),
        // sl2 acting on its natural 2-dim module (v0, v1):
        // e.v1 = v0, h.v0 = v0, h.v1 = -v1, f.v0 = v1.
        "sl2_semidirect_natural" => LieAlgebra::from_brackets(
            "sl2_semidirect_natural",
            &["e", "h", "f", "v0", "v1"],
            &[
                (0, 1, 0, rat_int(-2)),
                (0, 2, 1, rat_int(1)),
                (1, 2, 2, rat_int(-2)),
                (0, 4, 3, rat_int(1)),
                (1, 3, 3, rat_int(1)),
                (1, 4, 4, rat_int(-1)),
                (2, 3, 4, rat_int(1)),
            ],
        )
        .expect("catalog data"),
        // Cyclic: [e1, e2] = e3, [e2, e3] = e1, [e3, e1] = e2.
        "so3" => LieAlgebra::from_brackets(
            "so3",
            &["e1", "e2", "e3"],
            &[(0, 1, 2, rat_int(1)), (1, 2, 0, rat_int(1)), (0, 2, 1, rat_int(-1))],
        )
        .expect("catalog data"),
        // Solvable, not nilpotent: [x, e1] = e1, [x, e2] = e2.
        "solvable3" => LieAlgebra::from_brackets(
            "solvable3",
            &["x", "e1", "e2"],
            &[(0, 1, 1, rat_int(1)), (0, 2, 2, rat_int(1))],
        )
        .expect("catalog data"),
        _ => return None,
    };
    Some(l)
}

fn expected_table() -> &'static BTreeMap<String, ExpectedEntry> {
    static TABLE: OnceLock<BTreeMap<String, ExpectedEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let raw = include_str!("../data/catalog/expected.json");
        serde_json::from_str(raw).expect("expected.json must parse")
    })
}
