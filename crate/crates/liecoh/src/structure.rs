//! Structure theory over the rationals: Killing form, solvable radical,
//! derived and lower central series, the standard flags, a deterministic Levi
//! decomposition and the codimension-1 ideal construction.
//!
//! The radical is the Killing-orthogonal complement of the derived algebra,
//! which is correct in characteristic zero; its solvability is re-checked at
//! runtime. The Levi subalgebra is made deterministic by fixing every section
//! through echelon complements; no canonicity beyond that is claimed.

use crate::cohomology::{differential_matrix, increasing_tuples};
use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, zero_vec, Matrix, Rat};
use crate::liealg::{LieAlgebra, QuotientMap, Subspace};
use crate::rep::Representation;
use num::Zero;

/// The symmetric bilinear form kappa(x, y) = trace(ad x . ad y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingForm {
    pub matrix: Matrix,
}

impl KillingForm {
    pub fn determinant(&self) -> Rat {
        self.matrix.determinant()
    }
}

pub fn killing(l: &LieAlgebra) -> KillingForm {
    let ad = Representation::adjoint(l);
    let n = l.dim();
    let mut m = Matrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let t = ad.action()[i].mul(&ad.action()[j]).trace();
            m[(i, j)] = t.clone();
            m[(j, i)] = t;
        }
    }
    KillingForm { matrix: m }
}

/// Derived series L, [L,L], [[L,L],[L,L]], ... until it stabilizes; the last
/// entry repeats nowhere.
pub fn derived_series(l: &LieAlgebra) -> Vec<Subspace> {
    let mut out = vec![Subspace::full(l.dim())];
    loop {
        let last = out.last().unwrap();
        let next = l.product_space(last, last);
        if next.dim() == last.dim() {
            return out;
        }
        out.push(next);
    }
}

/// Lower central series L, [L,L], [L,[L,L]], ... until it stabilizes.
pub fn lower_central_series(l: &LieAlgebra) -> Vec<Subspace> {
    let full = Subspace::full(l.dim());
    let mut out = vec![full.clone()];
    loop {
        let last = out.last().unwrap();
        let next = l.product_space(last, &full);
        if next.dim() == last.dim() {
            return out;
        }
        out.push(next);
    }
}

pub fn is_solvable(l: &LieAlgebra) -> bool {
    derived_series(l).last().unwrap().dim() == 0
}

pub fn is_nilpotent(l: &LieAlgebra) -> bool {
    lower_central_series(l).last().unwrap().dim() == 0
}

pub fn is_abelian(l: &LieAlgebra) -> bool {
    l.derived_subspace().dim() == 0
}

/// The solvable radical, computed as the Killing-orthogonal complement of
/// [L, L]; solvability of the result is re-checked.
pub fn radical(l: &LieAlgebra) -> Subspace {
    let kappa = killing(l).matrix;
    let derived = l.derived_subspace();
    let rows: Vec<Vec<Rat>> = derived.basis().iter().map(|d| kappa.mul_vec(d)).collect();
    let m = Matrix::from_rows(l.dim(), &rows);
    let rad = Subspace::span(l.dim(), &m.kernel_basis());
    let sub = l.subalgebra_restrict(&rad).expect("radical is closed under the bracket");
    assert!(is_solvable(&sub.algebra), "radical must be solvable");
    assert!(l.is_ideal(&rad), "radical must be an ideal");
    rad
}

/// Semisimplicity via the Killing determinant, cross-checked against the
/// radical; the two characterizations must agree.
pub fn is_semisimple(l: &LieAlgebra) -> bool {
    if l.dim() == 0 {
        // The zero algebra has trivial radical but is excluded by convention.
        return false;
    }
    let by_killing = !killing(l).determinant().is_zero();
    let by_radical = radical(l).dim() == 0;
    assert_eq!(by_killing, by_radical, "semisimplicity characterizations disagree");
    by_killing
}

/// A Levi decomposition L = S + R with S a semisimple subalgebra and R the
/// radical, plus the linear section sending the basis of L/R into S.
#[derive(Clone, Debug)]
pub struct LeviDecomposition {
    pub s: Subspace,
    pub r: Subspace,
    /// `dim x dim(L/R)` matrix; column a is the element of S projecting onto
    /// the a-th quotient basis vector.
    pub section: Matrix,
}

/// Deterministic Levi decomposition.
///
/// Algorithm: with R the radical, (a) R = 0 gives S = L; (b) abelian R
/// splits by solving d phi = omega for the defect cocycle of the echelon
/// section, solvable because H^2(L/R, R) vanishes for semisimple L/R;
/// (c) otherwise pass to L/[R,R], lift its Levi subalgebra and recurse on the
/// preimage, whose radical [R,R] has smaller derived length.
pub fn levi(l: &LieAlgebra) -> Result<LeviDecomposition> {
    let r = radical(l);
    let s = levi_complement(l, &r)?;

    if s.intersection_dim(&r) != 0 || s.dim() + r.dim() != l.dim() {
        return Err(Error::InternalAssertion(
            "Levi subalgebra must complement the radical".into(),
        ));
    }
    let sub = l
        .subalgebra_restrict(&s)
        .map_err(|_| Error::InternalAssertion("Levi subalgebra must be closed".into()))?;
    if s.dim() > 0 && !is_semisimple(&sub.algebra) {
        return Err(Error::InternalAssertion(
            "Levi subalgebra must have nondegenerate Killing form".into(),
        ));
    }

    let quo = l.quotient(&r)?;
    let section = section_into(l, &quo, &s)?;
    Ok(LeviDecomposition { s, r, section })
}

/// Invert the projection on S: column a solves for the S-element over the
/// a-th quotient basis vector.
fn section_into(l: &LieAlgebra, quo: &QuotientMap, s: &Subspace) -> Result<Matrix> {
    let qdim = quo.algebra.dim();
    let sdim = s.dim();
    // Projection composed with inclusion of S, in S's echelon basis.
    let mut m = Matrix::zero(qdim, sdim);
    for (k, v) in s.basis().iter().enumerate() {
        let image = quo.project(v);
        for a in 0..qdim {
            m[(a, k)] = image[a].clone();
        }
    }
    let mut section = Matrix::zero(l.dim(), qdim);
    for a in 0..qdim {
        let mut unit = zero_vec(qdim);
        unit[a] = num::One::one();
        let coords = m.solve(&unit).ok_or_else(|| {
            Error::InternalAssertion("projection must be invertible on the Levi subalgebra".into())
        })?;
        let mut ambient = zero_vec(l.dim());
        for (k, c) in coords.iter().enumerate() {
            add_scaled(&mut ambient, &s.basis()[k], c);
        }
        for i in 0..l.dim() {
            section[(i, a)] = ambient[i].clone();
        }
    }
    Ok(section)
}

fn levi_complement(l: &LieAlgebra, r: &Subspace) -> Result<Subspace> {
    if r.dim() == 0 {
        return Ok(Subspace::full(l.dim()));
    }
    let r2 = l.product_space(r, r);
    if r2.dim() == 0 {
        levi_split_abelian(l, r)
    } else {
        // Pass to L/[R,R]; the lifted Levi problem has a radical of smaller
        // derived length, so the recursion terminates.
        let quo2 = l.quotient(&r2)?;
        let s_bar = levi_complement(&quo2.algebra, &radical(&quo2.algebra))?;
        let mut gens: Vec<Vec<Rat>> =
            s_bar.basis().iter().map(|v| quo2.section(v)).collect();
        gens.extend(r2.basis().iter().cloned());
        let p = Subspace::span(l.dim(), &gens);
        let sub = l
            .subalgebra_restrict(&p)
            .map_err(|_| Error::InternalAssertion("preimage of a subalgebra must be closed".into()))?;
        let s_p = levi_complement(&sub.algebra, &radical(&sub.algebra))?;
        let lifted: Vec<Vec<Rat>> = s_p.basis().iter().map(|v| sub.include(v)).collect();
        Ok(Subspace::span(l.dim(), &lifted))
    }
}

/// Split off an abelian radical: correct the echelon section by a 1-cochain
/// whose differential is the defect cocycle.
fn levi_split_abelian(l: &LieAlgebra, r: &Subspace) -> Result<Subspace> {
    let quo = l.quotient(r)?;
    let qdim = quo.algebra.dim();
    if qdim == 0 {
        return Ok(Subspace::zero(l.dim()));
    }
    let rdim = r.dim();

    // R as a module over L/R; well defined because R is an abelian ideal.
    let mut action = Vec::with_capacity(qdim);
    for a in 0..qdim {
        let sigma_a = quo.section(&unit(qdim, a));
        let mut m = Matrix::zero(rdim, rdim);
        for (j, rv) in r.basis().iter().enumerate() {
            let image = l.bracket(&sigma_a, rv);
            let coords = r
                .coords_of(&image)
                .ok_or_else(|| Error::InternalAssertion("radical must be an ideal".into()))?;
            for i in 0..rdim {
                m[(i, j)] = coords[i].clone();
            }
        }
        action.push(m);
    }
    let r_mod = Representation::new(&quo.algebra, rdim, action)?;
    if r_mod.validate_rep().is_err() {
        return Err(Error::InternalAssertion(
            "abelian radical must be a module over the quotient".into(),
        ));
    }

    // Defect cocycle of the section in C^2(L/R, R).
    let pairs = increasing_tuples(qdim, 2);
    let mut omega = zero_vec(pairs.len() * rdim);
    for (ti, pair) in pairs.iter().enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let sigma_a = quo.section(&unit(qdim, a));
        let sigma_b = quo.section(&unit(qdim, b));
        let mut defect = l.bracket(&sigma_a, &sigma_b);
        let lifted = quo.section(&quo.algebra.bracket_basis(a, b));
        for (d, s) in defect.iter_mut().zip(&lifted) {
            *d -= s;
        }
        let coords = r
            .coords_of(&defect)
            .ok_or_else(|| Error::InternalAssertion("section defect must land in the radical".into()))?;
        for (k, c) in coords.into_iter().enumerate() {
            omega[ti * rdim + k] = c;
        }
    }

    // d phi = omega is solvable because H^2 of the semisimple quotient
    // vanishes; failure here means broken arithmetic, not bad input.
    let d1 = differential_matrix(&quo.algebra, &r_mod, 1)?;
    let phi = d1.solve(&omega).ok_or_else(|| {
        Error::InternalAssertion("defect cocycle must be a coboundary over a semisimple quotient".into())
    })?;

    let mut gens = Vec::with_capacity(qdim);
    for a in 0..qdim {
        let mut g = quo.section(&unit(qdim, a));
        for k in 0..rdim {
            let c = -phi[a * rdim + k].clone();
            add_scaled(&mut g, &r.basis()[k], &c);
        }
        gens.push(g);
    }
    Ok(Subspace::span(l.dim(), &gens))
}

fn unit(n: usize, a: usize) -> Vec<Rat> {
    let mut v = zero_vec(n);
    v[a] = num::One::one();
    v
}

/// The deterministic codimension-1 ideal containing [L, L], together with the
/// complementary basis element, or `None` when L is perfect.
///
/// The hyperplane spans [L, L] and all but the last echelon-complement
/// representative; any subspace containing the derived algebra is an ideal.
pub fn codim1_ideal_containing_derived(l: &LieAlgebra) -> Option<(Subspace, Vec<Rat>)> {
    let derived = l.derived_subspace();
    if derived.dim() == l.dim() {
        return None;
    }
    let complement: Vec<usize> = {
        let pivots: std::collections::HashSet<usize> = derived.pivots().iter().copied().collect();
        (0..l.dim()).filter(|i| !pivots.contains(i)).collect()
    };
    let mut gens: Vec<Vec<Rat>> = derived.basis().to_vec();
    for &c in &complement[..complement.len() - 1] {
        gens.push(l.basis_vector(c));
    }
    let ideal = Subspace::span(l.dim(), &gens);
    let x = l.basis_vector(*complement.last().unwrap());
    debug_assert!(l.is_ideal(&ideal));
    debug_assert_eq!(ideal.dim() + 1, l.dim());
    Some((ideal, x))
}
