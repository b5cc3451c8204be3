//! Lie algebras as structure-constant tables over the rationals.
//!
//! Structure constants are stored densely only for `i < j`; the `i > j` case
//! is derived by antisymmetry and `i = j` is forced to zero, so antisymmetry
//! cannot be violated by construction. The Jacobi identity is what
//! [`LieAlgebra::validate`] actually checks. Subspaces are kept in reduced
//! echelon form, which fixes every complement, quotient and coordinate choice
//! made downstream.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{
    add_scaled, is_zero_vec, quotient_basis, rat_from_string, rat_to_string, zero_vec, Matrix, Rat,
};
use num::Zero;

/// A finite-dimensional Lie algebra given by structure constants
/// `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    basis_names: Vec<String>,
    /// `pairs[pair_index(i, j)]` = coordinates of `[e_i, e_j]` for `i < j`.
    pairs: Vec<Vec<Rat>>,
}

/// First Jacobi violation found, as a report value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub coordinate: usize,
    pub value: Rat,
}

impl std::fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (i, j, l) = self.triple;
        write!(
            f,
            "Jacobi identity fails on basis triple ({i},{j},{l}) at coordinate {}: sum = {}",
            self.coordinate,
            rat_to_string(&self.value)
        )
    }
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    /// Zero-dimensional algebra; permitted everywhere as a recursion base.
    pub fn zero_dim(name: &str) -> Self {
        LieAlgebra { name: name.to_string(), dim: 0, basis_names: vec![], pairs: vec![] }
    }

    /// Abelian algebra of the given dimension.
    pub fn abelian(name: &str, dim: usize) -> Self {
        let basis_names = (0..dim).map(|i| format!("x{i}")).collect();
        let pairs = vec![zero_vec(dim); dim * dim.saturating_sub(1) / 2];
        LieAlgebra { name: name.to_string(), dim, basis_names, pairs }
    }

    /// Build from a sparse list of `(i, j, k, c)` meaning `[e_i, e_j]` has
    /// coefficient `c` at `e_k`; only `i < j` entries are accepted.
    pub fn from_brackets(
        name: &str,
        basis_names: &[&str],
        brackets: &[(usize, usize, usize, Rat)],
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut pairs = vec![zero_vec(dim); dim * dim.saturating_sub(1) / 2];
        for (i, j, k, c) in brackets {
            if *i >= *j || *j >= dim || *k >= dim {
                return Err(Error::Invalid(format!(
                    "bracket entry ({i},{j},{k}) out of range for dimension {dim} (need i < j)"
                )));
            }
            pairs[pair_index(dim, *i, *j)][*k] += c;
        }
        Ok(LieAlgebra {
            name: name.to_string(),
            dim,
            basis_names: basis_names.iter().map(|s| s.to_string()).collect(),
            pairs,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Equality of dimension and structure constants, ignoring names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.pairs == other.pairs
    }

    /// Coordinates of `[e_i, e_j]`, any `i`, `j`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        if i == j {
            return zero_vec(self.dim);
        }
        if i < j {
            self.pairs[pair_index(self.dim, i, j)].clone()
        } else {
            self.pairs[pair_index(self.dim, j, i)].iter().map(|c| -c).collect()
        }
    }

    /// Structure constant `c^k_{ij}`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rat {
        if i == j {
            return Rat::zero();
        }
        if i < j {
            self.pairs[pair_index(self.dim, i, j)][k].clone()
        } else {
            -self.pairs[pair_index(self.dim, j, i)][k].clone()
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.dim, "element does not live in this algebra");
        assert_eq!(y.len(), self.dim, "element does not live in this algebra");
        let mut out = zero_vec(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() && y[i].is_zero() {
                continue;
            }
            for j in (i + 1)..self.dim {
                let coeff = &x[i] * &y[j] - &x[j] * &y[i];
                if coeff.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &self.pairs[pair_index(self.dim, i, j)], &coeff);
            }
        }
        out
    }

    /// Check the Jacobi identity on all basis triples; antisymmetry holds by
    /// construction. Returns the first violating tuple as a report value.
    pub fn validate(&self) -> std::result::Result<(), JacobiViolation> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for l in (j + 1)..self.dim {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let el = self.basis_vector(l);
                    let mut sum = self.bracket(&self.bracket(&ei, &ej), &el);
                    let t2 = self.bracket(&self.bracket(&ej, &el), &ei);
                    let t3 = self.bracket(&self.bracket(&el, &ei), &ej);
                    for k in 0..self.dim {
                        sum[k] += &t2[k];
                        sum[k] += &t3[k];
                    }
                    if let Some(k) = sum.iter().position(|c| !c.is_zero()) {
                        return Err(JacobiViolation {
                            triple: (i, j, l),
                            coordinate: k,
                            value: sum[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        assert!(i < self.dim, "basis index out of range");
        let mut v = zero_vec(self.dim);
        v[i] = num::One::one();
        v
    }

    /// Span of all pairwise brackets of the two subspaces' basis vectors.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient_dim(), self.dim, "subspace from a different algebra");
        assert_eq!(b.ambient_dim(), self.dim, "subspace from a different algebra");
        let mut gens = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                gens.push(self.bracket(u, v));
            }
        }
        Subspace::span(self.dim, &gens)
    }

    /// `[L, L]`.
    pub fn derived_subspace(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.product_space(&full, &full)
    }

    /// True iff `[L, I] ⊆ I`.
    pub fn is_ideal(&self, i: &Subspace) -> bool {
        assert_eq!(i.ambient_dim(), self.dim, "subspace from a different algebra");
        for b in 0..self.dim {
            let eb = self.basis_vector(b);
            for v in i.basis() {
                if !i.contains(&self.bracket(&eb, v)) {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient by an ideal, on the complement coset representatives given by
    /// non-pivot standard basis vectors in ascending index order.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientMap> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal { i: 0, j: 0 });
        }
        let reps = quotient_basis(ideal.basis(), self.dim);
        let rep_indices: Vec<usize> =
            reps.iter().map(|r| r.iter().position(|c| !c.is_zero()).unwrap()).collect();
        let qdim = reps.len();

        // Projection: reduce against the ideal's echelon rows, then read the
        // coordinates at the representative indices.
        let project = |v: &[Rat]| -> Vec<Rat> {
            let rem = ideal.reduce(v);
            rep_indices.iter().map(|&c| rem[c].clone()).collect()
        };

        let mut projection = Matrix::zero(qdim, self.dim);
        for j in 0..self.dim {
            let col = project(&self.basis_vector(j));
            for (a, entry) in col.into_iter().enumerate() {
                projection[(a, j)] = entry;
            }
        }

        let mut pairs = vec![zero_vec(qdim); qdim * qdim.saturating_sub(1) / 2];
        for a in 0..qdim {
            for b in (a + 1)..qdim {
                let target = project(&self.bracket(&reps[a], &reps[b]));
                pairs[pair_index(qdim, a, b)] = target;
            }
        }
        let basis_names =
            rep_indices.iter().map(|&c| format!("{}~", self.basis_names[c])).collect();
        let algebra = LieAlgebra {
            name: format!("{}/<ideal dim {}>", self.name, ideal.dim()),
            dim: qdim,
            basis_names,
            pairs,
        };
        Ok(QuotientMap { algebra, projection, rep_indices })
    }

    /// Block-diagonal direct sum; cross brackets are zero.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut basis_names: Vec<String> = self.basis_names.clone();
        basis_names.extend(other.basis_names.iter().cloned());
        let mut pairs = vec![zero_vec(dim); dim * dim.saturating_sub(1) / 2];
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let src = &self.pairs[pair_index(self.dim, i, j)];
                let mut row = zero_vec(dim);
                row[..self.dim].clone_from_slice(src);
                pairs[pair_index(dim, i, j)] = row;
            }
        }
        for i in 0..other.dim {
            for j in (i + 1)..other.dim {
                let src = &other.pairs[pair_index(other.dim, i, j)];
                let mut row = zero_vec(dim);
                row[self.dim..].clone_from_slice(src);
                pairs[pair_index(dim, self.dim + i, self.dim + j)] = row;
            }
        }
        LieAlgebra {
            name: format!("{}+{}", self.name, other.name),
            dim,
            basis_names,
            pairs,
        }
    }

    /// Structure constants of a bracket-closed subspace in its echelon basis,
    /// plus the inclusion map into the ambient algebra.
    pub fn subalgebra_restrict(&self, sub: &Subspace) -> Result<SubalgebraMap> {
        assert_eq!(sub.ambient_dim(), self.dim, "subspace from a different algebra");
        let r = sub.dim();
        let mut pairs = vec![zero_vec(r); r * r.saturating_sub(1) / 2];
        for a in 0..r {
            for b in (a + 1)..r {
                let w = self.bracket(&sub.basis()[a], &sub.basis()[b]);
                let Some(coords) = sub.coords_of(&w) else {
                    return Err(Error::NotClosed { i: a, j: b });
                };
                pairs[pair_index(r, a, b)] = coords;
            }
        }
        let mut inclusion = Matrix::zero(self.dim, r);
        for (a, v) in sub.basis().iter().enumerate() {
            for i in 0..self.dim {
                inclusion[(i, a)] = v[i].clone();
            }
        }
        let basis_names = (0..r).map(|a| format!("{}[{a}]", self.name)).collect();
        let algebra = LieAlgebra {
            name: format!("{}<sub dim {r}>", self.name),
            dim: r,
            basis_names,
            pairs,
        };
        Ok(SubalgebraMap { algebra, inclusion })
    }
}

/// Quotient algebra together with the linear projection from the ambient
/// algebra and the indices of the standard-basis coset representatives.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub algebra: LieAlgebra,
    /// `qdim x dim` matrix of the projection.
    pub projection: Matrix,
    /// Ambient indices of the chosen coset representatives (ascending).
    pub rep_indices: Vec<usize>,
}

impl QuotientMap {
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        self.projection.mul_vec(v)
    }

    /// The linear section sending quotient basis vector `a` to the ambient
    /// standard basis vector at `rep_indices[a]`.
    pub fn section(&self, coords: &[Rat]) -> Vec<Rat> {
        assert_eq!(coords.len(), self.rep_indices.len(), "quotient coordinate mismatch");
        let mut v = zero_vec(self.projection.cols());
        for (a, &idx) in self.rep_indices.iter().enumerate() {
            v[idx] = coords[a].clone();
        }
        v
    }
}

/// Subalgebra in its own echelon basis plus the inclusion into the ambient.
#[derive(Clone, Debug)]
pub struct SubalgebraMap {
    pub algebra: LieAlgebra,
    /// `dim x r` matrix whose columns are the subspace basis vectors.
    pub inclusion: Matrix,
}

impl SubalgebraMap {
    pub fn include(&self, coords: &[Rat]) -> Vec<Rat> {
        self.inclusion.mul_vec(coords)
    }
}

/// A subspace of a fixed ambient coordinate space, stored as the nonzero rows
/// of a reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rat>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length mismatch");
        }
        let (r, pivots) = Matrix::from_rows(ambient_dim, vectors).rref();
        let rows = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Subspace { ambient_dim, rows, pivots }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, rows: vec![], pivots: vec![] }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows: Vec<Vec<Rat>> = (0..ambient_dim)
            .map(|i| {
                let mut v = zero_vec(ambient_dim);
                v[i] = num::One::one();
                v
            })
            .collect();
        Subspace { ambient_dim, rows, pivots: (0..ambient_dim).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating all pivot coordinates; zero iff the
    /// vector lies in the subspace.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut rem = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = rem[p].clone();
            if c.is_zero() {
                continue;
            }
            add_scaled(&mut rem, row, &(-c));
        }
        rem
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let mut gens = self.rows.clone();
        gens.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient_dim, &gens)
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
}

// --- JSON interchange -------------------------------------------------------
//
// Algebra files list only pairs with i < j and nonzero terms; an absent pair
// means the bracket is zero. Rationals travel as reduced "p/q" strings.

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub dim: usize,
    pub name: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermEntry {
    pub c: String,
    pub k: usize,
}

impl LieAlgebra {
    pub fn to_file(&self) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let coords = &self.pairs[pair_index(self.dim, i, j)];
                let terms: Vec<TermEntry> = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| TermEntry { c: rat_to_string(c), k })
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketEntry { i, j, terms });
                }
            }
        }
        AlgebraFile {
            basis: self.basis_names.clone(),
            brackets,
            dim: self.dim,
            name: self.name.clone(),
        }
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        if file.basis.len() != file.dim {
            return Err(Error::Invalid(format!(
                "basis has {} labels but dim is {}",
                file.basis.len(),
                file.dim
            )));
        }
        let dim = file.dim;
        let mut pairs = vec![zero_vec(dim); dim * dim.saturating_sub(1) / 2];
        for entry in &file.brackets {
            if entry.i >= entry.j || entry.j >= dim {
                return Err(Error::Invalid(format!(
                    "bracket pair ({}, {}) out of range (need i < j < {dim})",
                    entry.i, entry.j
                )));
            }
            for term in &entry.terms {
                if term.k >= dim {
                    return Err(Error::Invalid(format!("term index {} out of range", term.k)));
                }
                pairs[pair_index(dim, entry.i, entry.j)][term.k] += rat_from_string(&term.c)?;
            }
        }
        Ok(LieAlgebra { name: file.name.clone(), dim, basis_names: file.basis.clone(), pairs })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("algebra JSON: {e}")))?;
        LieAlgebra::from_file(&file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, rat_int};
    use proptest::prelude::*;

    pub(crate) fn aff1() -> LieAlgebra {
        // [x, y] = y
        LieAlgebra::from_brackets("aff1", &["x", "y"], &[(0, 1, 1, rat_int(1))]).unwrap()
    }

    pub(crate) fn sl2() -> LieAlgebra {
        // Basis (e, h, f): [e, h] = -2e, [e, f] = h, [h, f] = -2f.
        LieAlgebra::from_brackets(
            "sl2",
            &["e", "h", "f"],
            &[(0, 1, 0, rat_int(-2)), (0, 2, 1, rat_int(1)), (1, 2, 2, rat_int(-2))],
        )
        .unwrap()
    }

    fn heisenberg3() -> LieAlgebra {
        LieAlgebra::from_brackets("heisenberg3", &["x", "y", "z"], &[(0, 1, 2, rat_int(1))])
            .unwrap()
    }

    #[test]
    fn validate_abelian_and_sl2() {
        assert!(LieAlgebra::abelian("a3", 3).validate().is_ok());
        assert!(sl2().validate().is_ok());
    }

    #[test]
    fn validate_catches_perturbed_sl2() {
        let mut bad = sl2();
        // Setting [e, f] = h + e makes the Jacobi sum on (e, h, f) equal 2e.
        bad.pairs[pair_index(3, 0, 2)][0] += rat_int(1);
        let violation = bad.validate().unwrap_err();
        assert_eq!(violation.triple, (0, 1, 2));
        assert_eq!(violation.coordinate, 0);
        assert_eq!(violation.value, rat_int(2));
    }

    #[test]
    fn bracket_examples() {
        let a = LieAlgebra::abelian("a2", 2);
        assert!(is_zero_vec(&a.bracket(&a.basis_vector(0), &a.basis_vector(1))));

        let l = aff1();
        assert_eq!(l.bracket(&l.basis_vector(0), &l.basis_vector(1)), l.basis_vector(1));

        let s = sl2();
        // [e, f] = h
        assert_eq!(s.bracket(&s.basis_vector(0), &s.basis_vector(2)), s.basis_vector(1));
    }

    #[test]
    fn product_space_examples() {
        let a = LieAlgebra::abelian("a3", 3);
        assert!(a.derived_subspace().is_zero());

        let l = aff1();
        let d = l.derived_subspace();
        assert_eq!(d.dim(), 1);
        assert!(d.contains(&l.basis_vector(1)));

        assert_eq!(sl2().derived_subspace().dim(), 3);
    }

    #[test]
    fn is_ideal_examples() {
        let l = aff1();
        let span_y = Subspace::span(2, &[l.basis_vector(1)]);
        let span_x = Subspace::span(2, &[l.basis_vector(0)]);
        assert!(l.is_ideal(&span_y));
        assert!(!l.is_ideal(&span_x));
        assert!(l.is_ideal(&Subspace::full(2)));
        // [L, L] is always an ideal.
        assert!(sl2().is_ideal(&sl2().derived_subspace()));
    }

    #[test]
    fn quotient_examples() {
        let l = aff1();
        let span_y = Subspace::span(2, &[l.basis_vector(1)]);
        let q = l.quotient(&span_y).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert!(q.algebra.validate().is_ok());
        assert!(q.algebra.derived_subspace().is_zero());

        // L / 0 keeps the structure constants.
        let q0 = l.quotient(&Subspace::zero(2)).unwrap();
        assert_eq!(q0.algebra.bracket_basis(0, 1), l.bracket_basis(0, 1));

        // (sl2 + line) / line recovers sl2's constants.
        let sum = sl2().direct_sum(&LieAlgebra::abelian("line", 1));
        let line = Subspace::span(4, &[sum.basis_vector(3)]);
        let qs = sum.quotient(&line).unwrap();
        assert_eq!(qs.algebra.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(
                        qs.algebra.structure_constant(i, j, k),
                        sl2().structure_constant(i, j, k)
                    );
                }
            }
        }

        // Quotient by a non-ideal is rejected.
        let span_x = Subspace::span(2, &[l.basis_vector(0)]);
        assert!(matches!(l.quotient(&span_x), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn direct_sum_examples() {
        let a = LieAlgebra::abelian("a1", 1).direct_sum(&LieAlgebra::abelian("b1", 1));
        assert_eq!(a.dim(), 2);
        assert!(a.derived_subspace().is_zero());

        let z = sl2().direct_sum(&LieAlgebra::zero_dim("0"));
        assert_eq!(z.dim(), 3);
        assert_eq!(z.bracket_basis(0, 2), sl2().bracket_basis(0, 2));

        // Cross brackets vanish.
        let s = sl2().direct_sum(&heisenberg3());
        for i in 0..3 {
            for j in 3..6 {
                assert!(is_zero_vec(&s.bracket_basis(i, j)));
            }
        }
        assert!(s.validate().is_ok());
    }

    #[test]
    fn subalgebra_restrict_examples() {
        let l = aff1();
        let span_y = Subspace::span(2, &[l.basis_vector(1)]);
        let sub = l.subalgebra_restrict(&span_y).unwrap();
        assert_eq!(sub.algebra.dim(), 1);

        let s = sl2();
        let d = s.derived_subspace();
        let rs = s.subalgebra_restrict(&d).unwrap();
        assert_eq!(rs.algebra.dim(), 3);
        assert!(rs.algebra.validate().is_ok());
        // Inclusion of the echelon basis is the identity here.
        assert_eq!(rs.include(&[rat_int(1), rat_int(0), rat_int(0)]), s.basis_vector(0));

        let zero = l.subalgebra_restrict(&Subspace::zero(2)).unwrap();
        assert_eq!(zero.algebra.dim(), 0);

        // A subspace that is not closed is rejected: span{e, f} in sl2.
        let not_closed = Subspace::span(3, &[s.basis_vector(0), s.basis_vector(2)]);
        assert!(matches!(s.subalgebra_restrict(&not_closed), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn quotient_of_quotient_validates() {
        let s = sl2().direct_sum(&heisenberg3());
        let center = Subspace::span(6, &[s.basis_vector(5)]);
        let q = s.quotient(&center).unwrap();
        assert!(q.algebra.validate().is_ok());
        assert_eq!(q.algebra.dim(), 5);
    }

    #[test]
    fn algebra_json_round_trip() {
        let l = sl2();
        let text = l.to_json();
        let back = LieAlgebra::from_json(&text).unwrap();
        assert_eq!(back, l);
        // Absent pairs mean zero brackets.
        let sparse = r#"{"basis":["a","b"],"brackets":[],"dim":2,"name":"ab"}"#;
        let ab = LieAlgebra::from_json(sparse).unwrap();
        assert!(is_zero_vec(&ab.bracket_basis(0, 1)));
        // Fractions survive bit-exactly.
        let half = LieAlgebra::from_brackets("h", &["a", "b"], &[(0, 1, 0, rat(1, 2))]).unwrap();
        assert_eq!(LieAlgebra::from_json(&half.to_json()).unwrap(), half);
    }

    #[test]
    fn bad_files_are_rejected() {
        assert!(LieAlgebra::from_json("{").is_err());
        let bad_pair = r#"{"basis":["a","b"],"brackets":[{"i":1,"j":0,"terms":[]}],"dim":2,"name":"x"}"#;
        assert!(LieAlgebra::from_json(bad_pair).is_err());
        let bad_len = r#"{"basis":["a"],"brackets":[],"dim":2,"name":"x"}"#;
        assert!(LieAlgebra::from_json(bad_len).is_err());
    }

    fn small_coords() -> impl Strategy<Value = Vec<Rat>> {
        proptest::collection::vec(-4i64..5, 3).prop_map(|v| v.into_iter().map(rat_int).collect())
    }

    proptest! {
        #[test]
        fn bracket_is_antisymmetric_and_jacobi_holds_on_sl2(
            x in small_coords(), y in small_coords(), z in small_coords()
        ) {
            let l = sl2();
            let xy = l.bracket(&x, &y);
            let yx = l.bracket(&y, &x);
            for k in 0..3 {
                prop_assert_eq!(&xy[k], &(-yx[k].clone()));
            }
            let mut jac = l.bracket(&l.bracket(&x, &y), &z);
            let t2 = l.bracket(&l.bracket(&y, &z), &x);
            let t3 = l.bracket(&l.bracket(&z, &x), &y);
            for k in 0..3 {
                jac[k] += &t2[k];
                jac[k] += &t3[k];
            }
            prop_assert!(is_zero_vec(&jac));
        }
    }
}
