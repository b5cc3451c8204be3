//! Finite-dimensional modules over a Lie algebra and the constructions that
//! produce new modules from old: duals, tensor products, restriction to a
//! subalgebra and inflation along a quotient.
//!
//! A module is a list of action matrices, one per algebra basis element, in
//! the basis recorded by the matrices themselves. Module equality is matrix
//! equality in the given bases; no isomorphism testing happens anywhere.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{rat_from_string, rat_to_string, Matrix, Rat};
use crate::liealg::{LieAlgebra, QuotientMap, Subspace};
use num::Zero;

/// A representation of a Lie algebra on a rational vector space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim: usize,
    /// `action[i]` is the matrix of `e_i`; rho on brackets must match
    /// commutators, which is what `validate_rep` checks.
    action: Vec<Matrix>,
}

/// First broken commutator found by `validate_rep`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepViolation {
    pub pair: (usize, usize),
}

impl std::fmt::Display for RepViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (i, j) = self.pair;
        write!(f, "action violates the commutator relation on basis pair ({i},{j})")
    }
}

impl Representation {
    pub fn new(algebra: &LieAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Invalid(format!(
                "expected {} action matrices, got {}",
                algebra.dim(),
                action.len()
            )));
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Invalid(format!(
                    "action matrix is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { algebra: algebra.clone(), dim, action })
    }

    /// Every basis element acts as zero.
    pub fn trivial(algebra: &LieAlgebra, dim: usize) -> Self {
        let action = vec![Matrix::zero(dim, dim); algebra.dim()];
        Representation { algebra: algebra.clone(), dim, action }
    }

    /// `e_i` acts as `ad e_i` on the algebra itself.
    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let n = algebra.dim();
        let mut action = Vec::with_capacity(n);
        for i in 0..n {
            let mut m = Matrix::zero(n, n);
            for j in 0..n {
                let col = algebra.bracket_basis(i, j);
                for k in 0..n {
                    m[(k, j)] = col[k].clone();
                }
            }
            action.push(m);
        }
        Representation { algebra: algebra.clone(), dim: n, action }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of an arbitrary element, by linearity.
    pub fn act(&self, x: &[Rat]) -> Matrix {
        assert_eq!(x.len(), self.algebra.dim(), "element does not live in this algebra");
        let mut m = Matrix::zero(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.action[i].scale(c));
        }
        m
    }

    pub fn apply(&self, x: &[Rat], v: &[Rat]) -> Vec<Rat> {
        self.act(x).mul_vec(v)
    }

    /// Contragredient module: `x` acts by minus the transpose.
    pub fn dual(&self) -> Representation {
        let minus_one = crate::exactlin::rat_int(-1);
        let action = self.action.iter().map(|m| m.transpose().scale(&minus_one)).collect();
        Representation { algebra: self.algebra.clone(), dim: self.dim, action }
    }

    /// Tensor product with the Leibniz action; coordinates are row-major,
    /// `(a, b)` at index `a * other.dim + b`.
    pub fn tensor(&self, other: &Representation) -> Result<Representation> {
        if !self.algebra.same_structure(&other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let im = Matrix::identity(self.dim);
        let iw = Matrix::identity(other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.kronecker(&iw).add(&im.kronecker(b)))
            .collect();
        Ok(Representation { algebra: self.algebra.clone(), dim: self.dim * other.dim, action })
    }

    /// Restriction to a bracket-closed subspace, as a module over the
    /// subalgebra in its echelon basis.
    pub fn restrict(&self, sub: &Subspace) -> Result<Representation> {
        let map = self.algebra.subalgebra_restrict(sub)?;
        let action = sub.basis().iter().map(|v| self.act(v)).collect();
        Ok(Representation { algebra: map.algebra, dim: self.dim, action })
    }

    /// Pull a module over the quotient back to the ambient algebra; the ideal
    /// then acts by zero.
    pub fn inflate(v: &Representation, q: &QuotientMap, ambient: &LieAlgebra) -> Representation {
        assert!(
            v.algebra.same_structure(&q.algebra),
            "module is not over the given quotient algebra"
        );
        assert_eq!(q.projection.cols(), ambient.dim(), "quotient of a different algebra");
        let action = (0..ambient.dim())
            .map(|i| v.act(&q.project(&ambient.basis_vector(i))))
            .collect();
        Representation { algebra: ambient.clone(), dim: v.dim, action }
    }

    /// Joint kernel of the actions of a basis of `a`, as a subspace of V.
    pub fn invariants(&self, a: &Subspace) -> Subspace {
        assert_eq!(a.ambient_dim(), self.algebra.dim(), "subspace from a different algebra");
        if a.dim() == 0 {
            return Subspace::full(self.dim);
        }
        let mut stacked = self.act(&a.basis()[0]);
        for v in &a.basis()[1..] {
            stacked = stacked.vstack(&self.act(v));
        }
        Subspace::span(self.dim, &stacked.kernel_basis())
    }

    /// An ideal as a module over the whole algebra, acting by the bracket;
    /// coordinates are taken in the ideal's echelon basis.
    pub fn ideal_module(l: &LieAlgebra, i: &Subspace) -> Result<Representation> {
        if !l.is_ideal(i) {
            return Err(Error::NotAnIdeal { i: 0, j: 0 });
        }
        let idim = i.dim();
        let mut action = Vec::with_capacity(l.dim());
        for b in 0..l.dim() {
            let eb = l.basis_vector(b);
            let mut m = Matrix::zero(idim, idim);
            for (j, v) in i.basis().iter().enumerate() {
                let image = l.bracket(&eb, v);
                let coords = i.coords_of(&image).expect("bracket lands in the ideal");
                for k in 0..idim {
                    m[(k, j)] = coords[k].clone();
                }
            }
            action.push(m);
        }
        Representation::new(l, idim, action)
    }

    /// Outer tensor product over a direct sum: the left summand acts on the
    /// first factor, the right summand on the second; row-major indexing as
    /// in `tensor`.
    pub fn outer_tensor(
        left: &Representation,
        right: &Representation,
        sum: &LieAlgebra,
    ) -> Result<Representation> {
        if !sum.same_structure(&left.algebra.direct_sum(&right.algebra)) {
            return Err(Error::AlgebraMismatch);
        }
        let il = Matrix::identity(left.dim);
        let ir = Matrix::identity(right.dim);
        let mut action = Vec::with_capacity(sum.dim());
        for m in &left.action {
            action.push(m.kronecker(&ir));
        }
        for m in &right.action {
            action.push(il.kronecker(m));
        }
        Representation::new(sum, left.dim * right.dim, action)
    }

    /// Check the commutator relation on all basis pairs.
    pub fn validate_rep(&self) -> std::result::Result<(), RepViolation> {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = self.action[i].mul(&self.action[j]).sub(&self.action[j].mul(&self.action[i]));
                let rhs = self.act(&self.algebra.bracket_basis(i, j));
                if lhs != rhs {
                    return Err(RepViolation { pair: (i, j) });
                }
            }
        }
        Ok(())
    }
}

// --- JSON interchange -------------------------------------------------------
//
// A module file pairs with an algebra file; `action` lists one matrix, as
// rows of "p/q" strings, per algebra basis element.

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleFile {
    pub action: Vec<Vec<Vec<String>>>,
    pub dim: usize,
}

impl Representation {
    pub fn to_file(&self) -> ModuleFile {
        let action = self
            .action
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|i| m.row(i).iter().map(rat_to_string).collect())
                    .collect()
            })
            .collect();
        ModuleFile { action, dim: self.dim }
    }

    pub fn from_file(algebra: &LieAlgebra, file: &ModuleFile) -> Result<Self> {
        let mut action = Vec::with_capacity(file.action.len());
        for rows in &file.action {
            if rows.len() != file.dim {
                return Err(Error::Invalid(format!(
                    "action matrix has {} rows, expected {}",
                    rows.len(),
                    file.dim
                )));
            }
            let mut m = Matrix::zero(file.dim, file.dim);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != file.dim {
                    return Err(Error::Invalid(format!(
                        "action row has {} entries, expected {}",
                        row.len(),
                        file.dim
                    )));
                }
                for (j, s) in row.iter().enumerate() {
                    m[(i, j)] = rat_from_string(s)?;
                }
            }
            action.push(m);
        }
        Representation::new(algebra, file.dim, action)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("module serialization")
    }

    pub fn from_json(algebra: &LieAlgebra, text: &str) -> Result<Self> {
        let file: ModuleFile = serde_json::from_str(text)
            .map_err(|e| Error::Invalid(format!("module JSON: {e}")))?;
        Representation::from_file(algebra, &file)
    }
}
