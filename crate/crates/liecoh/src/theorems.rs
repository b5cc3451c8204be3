//! The classification of algebras with vanishing second cohomology, together
//! with independent verifiers for the dimension identities it rests on.
//!
//! `classify` places an algebra in one of the trivial families (dimension at
//! most one, semisimple, semisimple plus a one-dimensional center) or
//! constructs a finite-dimensional module and a 2-cocycle whose class is
//! nonzero. Witnesses ship as certificates that `verify_certificate`
//! re-checks from scratch; `classify` runs that re-check before returning.
//!
//! The verifiers (`verify_dixmier`, `verify_hs_degeneration`,
//! `verify_kunneth`, `check_nilpotent_h2`, `whitehead_battery`) compute both
//! sides of their identity independently and report what they found.

use serde::{Deserialize, Serialize};

use crate::cohomology::{
    cohomology, is_coboundary, is_cocycle, cohomology_as_quotient_module,
    invariant_cohomology_dim, Cochain, CochainSpace, CocycleFile, IdealCohomologyContext,
};
use crate::error::{Error, Result};
use crate::exactlin::{
    add_scaled, is_zero_vec, rat_int, rat_to_string, zero_vec, Matrix, Rat,
};
use crate::liealg::{LieAlgebra, Subspace};
use crate::rep::{ModuleFile, Representation};
use crate::structure::{
    codim1_ideal_containing_derived, is_abelian, is_nilpotent, is_semisimple, radical,
};

// --- verdicts and certificates ----------------------------------------------

/// Outcome cases of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictCase {
    ZeroDimensional,
    OneDimensional,
    Semisimple,
    SemisimplePlusLine,
    Witness,
}

impl VerdictCase {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictCase::ZeroDimensional => "zero_dimensional",
            VerdictCase::OneDimensional => "one_dimensional",
            VerdictCase::Semisimple => "semisimple",
            VerdictCase::SemisimplePlusLine => "semisimple_plus_line",
            VerdictCase::Witness => "witness",
        }
    }
}

/// Splitting data for the semisimple-plus-line case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub semisimple: Subspace,
    pub line: Subspace,
}

/// A module and a 2-cocycle whose class is nonzero, with enough data to
/// re-verify the claim from scratch. `provenance` names the construction:
/// `abelian-trivial-K`, `codim1-nonsplit`, `kunneth-lift` or `nilradical-dual`.
#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub module: Representation,
    pub cocycle: Cochain,
    pub h2_dim: usize,
    pub provenance: String,
}

/// Classification result. A witness is present exactly in the witness case;
/// decomposition data is present exactly in the semisimple-plus-line case.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub case: VerdictCase,
    pub decomposition: Option<Decomposition>,
    pub witness: Option<WitnessCertificate>,
}

const PROVENANCE_TAGS: [&str; 4] =
    ["abelian-trivial-K", "codim1-nonsplit", "kunneth-lift", "nilradical-dual"];

// --- JSON interchange --------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessFile {
    pub cocycle: CocycleFile,
    pub h2_dim: usize,
    pub module: ModuleFile,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub line: Vec<Vec<String>>,
    pub semisimple: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerdictFile {
    pub case: String,
    pub decomposition: Option<DecompositionFile>,
    pub witness: Option<WitnessFile>,
}

fn basis_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|row| row.iter().map(rat_to_string).collect()).collect()
}

impl Verdict {
    pub fn to_file(&self) -> VerdictFile {
        VerdictFile {
            case: self.case.as_str().to_string(),
            decomposition: self.decomposition.as_ref().map(|d| DecompositionFile {
                line: basis_strings(&d.line),
                semisimple: basis_strings(&d.semisimple),
            }),
            witness: self.witness.as_ref().map(|w| WitnessFile {
                cocycle: CocycleFile::from_cochain(w.module.algebra(), &w.module, &w.cocycle),
                h2_dim: w.h2_dim,
                module: w.module.to_file(),
                provenance: w.provenance.clone(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("verdict serializes")
    }
}

// --- classification ----------------------------------------------------------

/// dim H^n(L, V), with the convention that degrees above dim L are zero.
pub fn h_dim_or_zero(l: &LieAlgebra, v: &Representation, n: usize) -> Result<usize> {
    if n > l.dim() {
        return Ok(0);
    }
    Ok(cohomology(l, v, n)?.dim_h)
}

/// Classify L: either 2-trivial (every finite-dimensional module has zero
/// second cohomology) or a witness module with a verified nonzero class.
///
/// The emitted certificate is re-verified from scratch before this returns.
pub fn classify(l: &LieAlgebra) -> Result<Verdict> {
    if let Err(v) = l.validate() {
        return Err(Error::Invalid(format!("input is not a Lie algebra: {v}")));
    }
    let verdict = classify_valid(l)?;
    if let Some(w) = &verdict.witness {
        if let Err(reason) = verify_certificate(l, w) {
            return Err(Error::InternalAssertion(format!(
                "emitted witness failed re-verification: {reason}"
            )));
        }
    }
    Ok(verdict)
}

fn trivial_verdict(case: VerdictCase) -> Verdict {
    Verdict { case, decomposition: None, witness: None }
}

fn classify_valid(l: &LieAlgebra) -> Result<Verdict> {
    if l.dim() == 0 {
        return Ok(trivial_verdict(VerdictCase::ZeroDimensional));
    }
    if l.dim() == 1 {
        return Ok(trivial_verdict(VerdictCase::OneDimensional));
    }
    let rad = radical(l);
    if rad.is_zero() {
        return Ok(trivial_verdict(VerdictCase::Semisimple));
    }
    if l.derived_subspace().dim() == l.dim() {
        return perfect_witness(l, &rad);
    }
    codim1_descent(l)
}

/// Compute H^2(L, V), take the first canonical representative and package
/// the certificate. The caller's construction guarantees a nonzero class.
fn witness_verdict(l: &LieAlgebra, v: Representation, provenance: &str) -> Result<Verdict> {
    let h2 = cohomology(l, &v, 2)?;
    if h2.dim_h == 0 {
        return Err(Error::InternalAssertion(format!(
            "{provenance} construction must yield nonzero second cohomology"
        )));
    }
    let w = WitnessCertificate {
        module: v,
        cocycle: h2.representatives[0].clone(),
        h2_dim: h2.dim_h,
        provenance: provenance.to_string(),
    };
    Ok(Verdict { case: VerdictCase::Witness, decomposition: None, witness: Some(w) })
}

/// Perfect but not semisimple: the radical is nilpotent of dimension at
/// least 2, its H^2 with trivial coefficients is nonzero, and the dual of
/// that cohomology space (radical acting by zero) carries a nonzero class
/// over the whole algebra.
fn perfect_witness(l: &LieAlgebra, rad: &Subspace) -> Result<Verdict> {
    let sub = l.subalgebra_restrict(rad)?;
    if !is_nilpotent(&sub.algebra) || rad.dim() < 2 {
        return Err(Error::InternalAssertion(
            "radical of a perfect algebra must be nilpotent of dimension at least 2".into(),
        ));
    }
    let k = Representation::trivial(l, 1);
    let ctx = IdealCohomologyContext::new(l, rad, &k, 2)?;
    let wdim = ctx.result().dim_h;
    if wdim == 0 {
        return Err(Error::InternalAssertion(
            "nilpotent radical of dimension at least 2 must have nonzero H^2".into(),
        ));
    }
    let neg = rat_int(-1);
    let mut action = Vec::with_capacity(l.dim());
    for i in 0..l.dim() {
        let a = ctx.action_of(&l.basis_vector(i))?;
        action.push(a.transpose().scale(&neg));
    }
    let v = Representation::new(l, wdim, action)?;
    if v.validate_rep().is_err() {
        return Err(Error::InternalAssertion(
            "dual action on radical cohomology must satisfy the commutator relation".into(),
        ));
    }
    witness_verdict(l, v, "nilradical-dual")
}

/// Non-perfect case: split off a line over a codimension-1 ideal, or witness
/// the failure to split.
fn codim1_descent(l: &LieAlgebra) -> Result<Verdict> {
    let (ideal, x) = codim1_ideal_containing_derived(l).ok_or_else(|| {
        Error::InternalAssertion("non-perfect algebra must have a codimension-1 ideal".into())
    })?;
    let sub = l.subalgebra_restrict(&ideal)?;
    let ad_i = Representation::adjoint(&sub.algebra);
    let idim = ideal.dim();

    // ad x restricted to the ideal, as a 1-cochain with adjoint coefficients.
    let mut coords = zero_vec(idim * idim);
    for (j, b) in ideal.basis().iter().enumerate() {
        let image = l.bracket(&x, b);
        let c = ideal.coords_of(&image).ok_or_else(|| {
            Error::InternalAssertion("bracket with an ideal must land in the ideal".into())
        })?;
        for (k, ck) in c.into_iter().enumerate() {
            coords[j * idim + k] = ck;
        }
    }
    let adx = Cochain { degree: 1, coords };

    match is_coboundary(&sub.algebra, &ad_i, &adx)? {
        None => {
            // The line does not split off: the ideal itself, as a module
            // under the bracket, carries a nonzero class in degree 2.
            let v = Representation::ideal_module(l, &ideal)?;
            witness_verdict(l, v, "codim1-nonsplit")
        }
        Some(z) => {
            // Correct x by the coboundary witness; the corrected element
            // centralizes the ideal, so L splits as ideal plus central line.
            let mut xp = x.clone();
            for (k, b) in ideal.basis().iter().enumerate() {
                add_scaled(&mut xp, b, &z.coords[k]);
            }
            for b in ideal.basis() {
                if !is_zero_vec(&l.bracket(&xp, b)) {
                    return Err(Error::InternalAssertion(
                        "corrected line element must centralize the ideal".into(),
                    ));
                }
            }
            let inner = classify_valid(&sub.algebra)?;
            lift_through_split(l, &ideal, &xp, &sub.algebra, inner)
        }
    }
}

/// L = I + Kx' with x' central over I: translate the verdict on I into a
/// verdict on L.
fn lift_through_split(
    l: &LieAlgebra,
    ideal: &Subspace,
    xprime: &[Rat],
    inner_algebra: &LieAlgebra,
    inner: Verdict,
) -> Result<Verdict> {
    match inner.case {
        VerdictCase::ZeroDimensional => Err(Error::InternalAssertion(
            "codimension-1 ideal of an algebra of dimension at least 2 cannot be zero".into(),
        )),
        VerdictCase::OneDimensional => {
            // Two-dimensional with a centralized line on both sides: abelian,
            // and trivial coefficients already carry a class.
            if l.dim() != 2 || !is_abelian(l) {
                return Err(Error::InternalAssertion(
                    "split over a one-dimensional ideal forces a two-dimensional abelian algebra"
                        .into(),
                ));
            }
            witness_verdict(l, Representation::trivial(l, 1), "abelian-trivial-K")
        }
        VerdictCase::Semisimple => {
            let line = Subspace::span(l.dim(), &[xprime.to_vec()]);
            Ok(Verdict {
                case: VerdictCase::SemisimplePlusLine,
                decomposition: Some(Decomposition { semisimple: ideal.clone(), line }),
                witness: None,
            })
        }
        VerdictCase::SemisimplePlusLine => {
            // Semisimple plus a two-dimensional center: the abelian part
            // contributes a class with trivial coefficients.
            witness_verdict(l, Representation::trivial(l, 1), "abelian-trivial-K")
        }
        VerdictCase::Witness => {
            let w = inner.witness.expect("witness case carries a certificate");
            kunneth_lift(l, ideal, xprime, inner_algebra, &w)
        }
    }
}

/// Pull a witness on the ideal back along the projection that kills the
/// central line. The lift is closed because the projection is a homomorphism
/// and non-exact because restricting back to the ideal recovers the original
/// witness; both facts are re-checked on the computed data.
fn kunneth_lift(
    l: &LieAlgebra,
    ideal: &Subspace,
    xprime: &[Rat],
    inner_algebra: &LieAlgebra,
    w: &WitnessCertificate,
) -> Result<Verdict> {
    let dim = l.dim();
    let idim = ideal.dim();

    // Ideal component of each ambient basis vector, in the ideal's echelon
    // coordinates, from solving against the basis extended by x'.
    let mut cols: Vec<Vec<Rat>> = ideal.basis().to_vec();
    cols.push(xprime.to_vec());
    let m = Matrix::from_rows(dim, &cols).transpose();
    let mut ideal_part: Vec<Vec<Rat>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let c = m.solve(&l.basis_vector(j)).ok_or_else(|| {
            Error::InternalAssertion("ideal plus the corrected line must span".into())
        })?;
        ideal_part.push(c[..idim].to_vec());
    }

    let mdim = w.module.dim();
    let mut action = Vec::with_capacity(dim);
    for part in &ideal_part {
        action.push(w.module.act(part));
    }
    let v = Representation::new(l, mdim, action)?;
    if v.validate_rep().is_err() {
        return Err(Error::InternalAssertion(
            "module pulled back over a central split must satisfy the commutator relation".into(),
        ));
    }

    // Alternating bilinear extension of the witness cocycle through the
    // ideal components.
    let inner_space = CochainSpace::new(inner_algebra, &w.module, 2);
    let space = CochainSpace::new(l, &v, 2);
    let mut coords = zero_vec(space.dim());
    for (t_idx, t) in space.tuples().iter().enumerate() {
        let a = &ideal_part[t[0]];
        let b = &ideal_part[t[1]];
        for (s_idx, st) in inner_space.tuples().iter().enumerate() {
            let (s, u) = (st[0], st[1]);
            let coeff = &a[s] * &b[u] - &a[u] * &b[s];
            if coeff == rat_int(0) {
                continue;
            }
            for mc in 0..mdim {
                let term = &coeff * &w.cocycle.coords[inner_space.coord_index(s_idx, mc)];
                coords[space.coord_index(t_idx, mc)] += term;
            }
        }
    }
    let lifted = Cochain { degree: 2, coords };
    if !is_cocycle(l, &v, &lifted)? {
        return Err(Error::InternalAssertion("lifted witness cocycle must stay closed".into()));
    }
    if is_coboundary(l, &v, &lifted)?.is_some() {
        return Err(Error::InternalAssertion("lifted witness cocycle must stay non-exact".into()));
    }
    let h2 = cohomology(l, &v, 2)?;
    let cert = WitnessCertificate {
        module: v,
        cocycle: lifted,
        h2_dim: h2.dim_h,
        provenance: "kunneth-lift".to_string(),
    };
    Ok(Verdict { case: VerdictCase::Witness, decomposition: None, witness: Some(cert) })
}

// --- certificate verification -------------------------------------------------

/// Re-check a witness certificate from scratch. Failure is a value: the
/// returned string names the first check that broke. Nothing recorded in the
/// certificate is trusted; every claim is recomputed.
pub fn verify_certificate(l: &LieAlgebra, w: &WitnessCertificate) -> std::result::Result<(), String> {
    if !w.module.algebra().same_structure(l) {
        return Err("module is defined over a different algebra".into());
    }
    if w.module.validate_rep().is_err() {
        return Err("module action violates the commutator relation".into());
    }
    if w.cocycle.degree != 2 {
        return Err(format!("cocycle degree is {}, expected 2", w.cocycle.degree));
    }
    let space = CochainSpace::new(l, &w.module, 2);
    if w.cocycle.coords.len() != space.dim() {
        return Err("cocycle coordinates do not match the degree-2 cochain space".into());
    }
    if is_zero_vec(&w.cocycle.coords) {
        return Err("cocycle is identically zero".into());
    }
    match is_cocycle(l, &w.module, &w.cocycle) {
        Ok(true) => {}
        Ok(false) => return Err("claimed cocycle is not closed".into()),
        Err(e) => return Err(format!("cocycle check failed: {e}")),
    }
    match is_coboundary(l, &w.module, &w.cocycle) {
        Ok(None) => {}
        Ok(Some(_)) => return Err("claimed cocycle is a coboundary".into()),
        Err(e) => return Err(format!("coboundary check failed: {e}")),
    }
    match cohomology(l, &w.module, 2) {
        Ok(r) => {
            if r.dim_h == 0 {
                return Err("recomputed second cohomology is zero".into());
            }
            if r.dim_h != w.h2_dim {
                return Err(format!(
                    "recorded h2_dim {} disagrees with recomputed {}",
                    w.h2_dim, r.dim_h
                ));
            }
        }
        Err(e) => return Err(format!("cohomology recomputation failed: {e}")),
    }
    if !PROVENANCE_TAGS.contains(&w.provenance.as_str()) {
        return Err(format!("unknown provenance tag {:?}", w.provenance));
    }
    Ok(())
}

// --- identity verifiers --------------------------------------------------------

/// One labeled dimension in an identity report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportTerm {
    pub label: String,
    pub value: usize,
}

/// A dimension identity with both sides computed independently.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityReport {
    pub holds: bool,
    pub identity: String,
    pub lhs: usize,
    pub rhs: usize,
    pub terms: Vec<ReportTerm>,
}

fn invariant_dim_or_zero(
    l: &LieAlgebra,
    i: &Subspace,
    v: &Representation,
    n: usize,
    x: &[Rat],
) -> Result<usize> {
    if n > i.dim() {
        return Ok(0);
    }
    invariant_cohomology_dim(l, i, v, n, x)
}

/// dim H^n(L,V) = dim H^n(I,V)^x + dim H^{n-1}(I,V)^x for a codimension-1
/// ideal I and any x outside it, with H^{-1} = 0.
pub fn verify_dixmier(
    l: &LieAlgebra,
    i: &Subspace,
    x: &[Rat],
    v: &Representation,
    n: usize,
) -> Result<IdentityReport> {
    if !l.is_ideal(i) {
        return Err(Error::Invalid("subspace is not an ideal".into()));
    }
    if i.dim() + 1 != l.dim() {
        return Err(Error::Invalid("ideal must have codimension 1".into()));
    }
    if i.contains(x) {
        return Err(Error::Invalid("chosen element lies in the ideal".into()));
    }
    if !v.algebra().same_structure(l) {
        return Err(Error::AlgebraMismatch);
    }
    let lhs = h_dim_or_zero(l, v, n)?;
    let top = invariant_dim_or_zero(l, i, v, n, x)?;
    let low = if n == 0 { 0 } else { invariant_dim_or_zero(l, i, v, n - 1, x)? };
    let rhs = top + low;
    Ok(IdentityReport {
        holds: lhs == rhs,
        identity: format!(
            "dim H^{n}(L,V) = dim H^{n}(I,V)^x + dim H^{}(I,V)^x",
            n as i64 - 1
        ),
        lhs,
        rhs,
        terms: vec![
            ReportTerm { label: format!("dim H^{n}(L,V)"), value: lhs },
            ReportTerm { label: format!("dim H^{n}(I,V)^x"), value: top },
            ReportTerm { label: format!("dim H^{}(I,V)^x", n as i64 - 1), value: low },
        ],
    })
}

/// Degeneration of the two-step filtration in degree 2 for a split
/// extension: dim H^2(L,V) equals the sum of dim H^p(L/I, H^q(I,V)) over
/// p + q = 2. The complement S enters only through the splitting check.
pub fn verify_hs_degeneration(
    l: &LieAlgebra,
    s: &Subspace,
    i: &Subspace,
    v: &Representation,
) -> Result<IdentityReport> {
    if !l.is_ideal(i) {
        return Err(Error::Invalid("subspace is not an ideal".into()));
    }
    for a in s.basis() {
        for b in s.basis() {
            if !s.contains(&l.bracket(a, b)) {
                return Err(Error::Invalid("complement is not a subalgebra".into()));
            }
        }
    }
    if s.dim() + i.dim() != l.dim() || s.sum(i).dim() != l.dim() {
        return Err(Error::Invalid("complement and ideal do not split the algebra".into()));
    }
    if !v.algebra().same_structure(l) {
        return Err(Error::AlgebraMismatch);
    }
    let quo = l.quotient(i)?;
    let lhs = h_dim_or_zero(l, v, 2)?;
    let mut terms = vec![ReportTerm { label: "dim H^2(L,V)".to_string(), value: lhs }];
    let mut rhs = 0;
    for p in 0..=2usize {
        let q = 2 - p;
        let value = if q > i.dim() || p > quo.algebra.dim() {
            0
        } else {
            let hq = cohomology_as_quotient_module(l, i, v, q)?;
            cohomology(&quo.algebra, &hq, p)?.dim_h
        };
        terms.push(ReportTerm { label: format!("dim H^{p}(L/I, H^{q}(I,V))"), value });
        rhs += value;
    }
    Ok(IdentityReport {
        holds: lhs == rhs,
        identity: "dim H^2(L,V) = sum over p+q=2 of dim H^p(L/I, H^q(I,V))".to_string(),
        lhs,
        rhs,
        terms,
    })
}

/// Kunneth in degree n for a direct sum acting on an outer tensor product:
/// dim H^n(A+B, VA ox VB) = sum over p+q=n of dim H^p(A,VA) dim H^q(B,VB).
pub fn verify_kunneth(
    a: &LieAlgebra,
    b: &LieAlgebra,
    va: &Representation,
    vb: &Representation,
    n: usize,
) -> Result<IdentityReport> {
    if !va.algebra().same_structure(a) || !vb.algebra().same_structure(b) {
        return Err(Error::AlgebraMismatch);
    }
    let sum = a.direct_sum(b);
    let v = Representation::outer_tensor(va, vb, &sum)?;
    let lhs = h_dim_or_zero(&sum, &v, n)?;
    let mut terms = vec![ReportTerm { label: format!("dim H^{n}(A+B, VA ox VB)"), value: lhs }];
    let mut rhs = 0;
    for p in 0..=n {
        let q = n - p;
        let ha = h_dim_or_zero(a, va, p)?;
        let hb = h_dim_or_zero(b, vb, q)?;
        terms.push(ReportTerm {
            label: format!("dim H^{p}(A,VA) * dim H^{q}(B,VB)"),
            value: ha * hb,
        });
        rhs += ha * hb;
    }
    Ok(IdentityReport {
        holds: lhs == rhs,
        identity: format!(
            "dim H^{n}(A+B, VA ox VB) = sum over p+q={n} of dim H^p(A,VA) dim H^q(B,VB)"
        ),
        lhs,
        rhs,
        terms,
    })
}

/// Trivial-coefficient cohomology of a nilpotent algebra of dimension at
/// least 2: dim H^2 >= 1 is asserted; whether dim H^n reaches 2 in each
/// positive degree up to dim L is reported but never asserted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NilpotentH2Report {
    /// Whether dim H^n(L,K) >= 2, for n = 1..=dim L.
    pub bound_at_least_two: Vec<bool>,
    /// dim H^n(L,K) for n = 0..=dim L.
    pub h_dims: Vec<usize>,
    pub h2_dim: usize,
}

pub fn check_nilpotent_h2(l: &LieAlgebra) -> Result<NilpotentH2Report> {
    if !is_nilpotent(l) {
        return Err(Error::Invalid("input is not nilpotent".into()));
    }
    if l.dim() < 2 {
        return Err(Error::Invalid("bound needs dimension at least 2".into()));
    }
    let k = Representation::trivial(l, 1);
    let mut h_dims = Vec::with_capacity(l.dim() + 1);
    for n in 0..=l.dim() {
        h_dims.push(cohomology(l, &k, n)?.dim_h);
    }
    let h2_dim = h_dims[2];
    if h2_dim == 0 {
        return Err(Error::InternalAssertion(
            "nilpotent algebra of dimension at least 2 must have nonzero H^2 with trivial coefficients".into(),
        ));
    }
    let bound_at_least_two = (1..=l.dim()).map(|n| h_dims[n] >= 2).collect();
    Ok(NilpotentH2Report { bound_at_least_two, h_dims, h2_dim })
}

// --- Whitehead battery and probe ------------------------------------------------

fn battery_push(
    out: &mut Vec<(String, Representation)>,
    cap: usize,
    label: String,
    rep: Representation,
) -> bool {
    if rep.dim() == 0 || rep.dim() > cap {
        return false;
    }
    if out.iter().any(|(_, r)| r.dim() == rep.dim() && r.action() == rep.action()) {
        return false;
    }
    out.push((label, rep));
    true
}

/// Deterministic module battery: close {trivial line, adjoint} under duals
/// and tensor products, keeping dimensions at or below the cap and
/// deduplicating by action-matrix equality.
pub fn battery_modules(l: &LieAlgebra, max_module_dim: usize) -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    battery_push(&mut out, max_module_dim, "trivial".to_string(), Representation::trivial(l, 1));
    if l.dim() > 0 {
        battery_push(&mut out, max_module_dim, "adjoint".to_string(), Representation::adjoint(l));
    }
    loop {
        let mut added = false;
        let snapshot = out.clone();
        for (label, rep) in &snapshot {
            added |= battery_push(&mut out, max_module_dim, format!("dual({label})"), rep.dual());
        }
        for (la, ra) in &snapshot {
            for (lb, rb) in &snapshot {
                if ra.dim() * rb.dim() > max_module_dim {
                    continue;
                }
                let t = ra.tensor(rb).expect("battery members share the algebra");
                added |= battery_push(&mut out, max_module_dim, format!("tensor({la},{lb})"), t);
            }
        }
        if !added {
            break;
        }
    }
    out
}

/// One battery module with its first and second cohomology dimensions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BatteryRow {
    pub dim: usize,
    pub h1: usize,
    pub h2: usize,
    pub label: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BatteryReport {
    pub holds: bool,
    pub rows: Vec<BatteryRow>,
}

/// Both Whitehead lemmas over a semisimple algebra: H^1 and H^2 vanish for
/// every battery module. The zero algebra passes vacuously.
pub fn whitehead_battery(l: &LieAlgebra, max_module_dim: usize) -> Result<BatteryReport> {
    if l.dim() > 0 && !is_semisimple(l) {
        return Err(Error::Invalid("battery requires a semisimple algebra".into()));
    }
    let mut rows = Vec::new();
    let mut holds = true;
    for (label, rep) in battery_modules(l, max_module_dim) {
        let h1 = h_dim_or_zero(l, &rep, 1)?;
        let h2 = h_dim_or_zero(l, &rep, 2)?;
        holds &= h1 == 0 && h2 == 0;
        rows.push(BatteryRow { dim: rep.dim(), h1, h2, label });
    }
    Ok(BatteryReport { holds, rows })
}

/// Outcome of the search for a module with nonzero first cohomology.
#[derive(Clone, Debug)]
pub enum ProbeOutcome {
    Found { label: String, module: Representation, cocycle: Cochain, h1_dim: usize },
    NotFound { tried: Vec<String> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProbeFile {
    pub cocycle: Option<CocycleFile>,
    pub found: bool,
    pub h1_dim: Option<usize>,
    pub label: Option<String>,
    pub module: Option<ModuleFile>,
    pub tried: Option<Vec<String>>,
}

impl ProbeOutcome {
    pub fn to_file(&self) -> ProbeFile {
        match self {
            ProbeOutcome::Found { label, module, cocycle, h1_dim } => ProbeFile {
                cocycle: Some(CocycleFile::from_cochain(module.algebra(), module, cocycle)),
                found: true,
                h1_dim: Some(*h1_dim),
                label: Some(label.clone()),
                module: Some(module.to_file()),
                tried: None,
            },
            ProbeOutcome::NotFound { tried } => ProbeFile {
                cocycle: None,
                found: false,
                h1_dim: None,
                label: None,
                module: None,
                tried: Some(tried.clone()),
            },
        }
    }
}

/// Search a deterministic module list for nonzero first cohomology over a
/// non-semisimple algebra: the battery, then bracket modules on the radical
/// and derived ideals, their duals, inflated quotient adjoints and
/// hom-into-adjoint modules. The search is capped, so a NotFound is an
/// honest report of what was tried, not a vanishing claim.
pub fn first_whitehead_probe(l: &LieAlgebra, max_module_dim: usize) -> Result<ProbeOutcome> {
    if l.dim() == 0 || is_semisimple(l) {
        return Err(Error::Invalid("probe expects a nonzero non-semisimple algebra".into()));
    }
    let mut candidates = battery_modules(l, max_module_dim);
    let rad = radical(l);
    let der = l.derived_subspace();
    for (tag, ideal) in [("radical", &rad), ("derived", &der)] {
        if ideal.dim() == 0 {
            continue;
        }
        if ideal.dim() < l.dim() {
            let quo = l.quotient(ideal)?;
            let inflated =
                Representation::inflate(&Representation::adjoint(&quo.algebra), &quo, l);
            battery_push(
                &mut candidates,
                max_module_dim,
                format!("inflate(adjoint(L/{tag}))"),
                inflated,
            );
        }
        let im = Representation::ideal_module(l, ideal)?;
        battery_push(&mut candidates, max_module_dim, format!("bracket({tag})"), im.clone());
        battery_push(&mut candidates, max_module_dim, format!("dual(bracket({tag}))"), im.dual());
        let hom = im.dual().tensor(&Representation::adjoint(l))?;
        battery_push(&mut candidates, max_module_dim, format!("hom({tag},adjoint)"), hom);
    }
    let mut tried = Vec::new();
    for (label, rep) in &candidates {
        if h_dim_or_zero(l, rep, 1)? > 0 {
            let r = cohomology(l, rep, 1)?;
            return Ok(ProbeOutcome::Found {
                label: label.clone(),
                module: rep.clone(),
                cocycle: r.representatives[0].clone(),
                h1_dim: r.dim_h,
            });
        }
        tried.push(label.clone());
    }
    Ok(ProbeOutcome::NotFound { tried })
}
