//! Exact rational linear algebra.
//!
//! Dense matrices over `Q` with the handful of operations everything else in
//! the crate reduces to: reduced row echelon form, rank, kernel bases,
//! particular solutions, and complement (quotient) bases. Elimination is
//! fraction-free in the style of Bareiss — rows are scaled to integers up
//! front, forward elimination divides by the previous pivot (exact by the
//! Sylvester identity), and only the final normalization to reduced form
//! reintroduces fractions. Pivoting is deterministic: the first nonzero entry
//! in column order wins, so every basis produced downstream is reproducible.
//!
//! No floating point anywhere; `Rat` is an exact rational with unbounded
//! integer parts.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{Integer, One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `Ratio` keeps the denominator positive and the
/// fraction reduced, which is exactly the invariant the text form relies on.
pub type Rat = Ratio<BigInt>;

/// Rational from an integer pair; panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Ratio::from_integer(BigInt::from(num))
}

/// Render in the interchange text form: `p` for integers, `p/q` otherwise,
/// reduced, with `q > 0`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the text form `p` or `p/q`. Accepts unreduced input and a negative
/// denominator (both are canonicalized), rejects `q = 0` and malformed text.
pub fn rat_from_string(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Invalid(format!("bad rational `{s}`")))
    };
    match s.split_once('/') {
        None => Ok(Ratio::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Invalid(format!("zero denominator in `{s}`")));
            }
            Ok(Ratio::new(num, den))
        }
    }
}

/// Dense row-major matrix over `Rat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Build from rows; all rows must share a length (`cols` disambiguates
    /// the empty case).
    pub fn from_rows(cols: usize, rows: &[Vec<Rat>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            entries.extend(r.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, entries }
    }

    /// Integer convenience constructor for tests and structure constants.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data: Vec<Vec<Rat>> =
            rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect();
        Matrix::from_rows(cols, &data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let mut m = self.clone();
        for e in &mut m.entries {
            *e *= c;
        }
        m
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut m = self.clone();
        for (e, o) in m.entries.iter_mut().zip(&other.entries) {
            *e += o;
        }
        m
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let mut m = self.clone();
        for (e, o) in m.entries.iter_mut().zip(&other.entries) {
            *e -= o;
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let mut out = vec![Rat::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] += a * &v[j];
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Kronecker product; block `(i, j)` is `self[(i, j)] * other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out[(i * other.rows + p, j * other.cols + q)] = a * &other[(p, q)];
                    }
                }
            }
        }
        out
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Reduced row echelon form and the pivot columns, exact.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        // Scale each row to integers; row scaling changes neither the row
        // space nor the reduced form.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .filter(|e| !e.is_zero())
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect()
            })
            .collect();

        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for j in (r + 1)..self.rows {
                for k in (c + 1)..self.cols {
                    let num = &m[j][k] * &m[r][c] - &m[j][c] * &m[r][k];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    m[j][k] = q;
                }
                m[j][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }

        // Normalize to reduced form: unit pivots, zeros above.
        let mut out = Matrix::zero(self.rows, self.cols);
        for (i, &c) in pivots.iter().enumerate() {
            let piv = Rat::from_integer(m[i][c].clone());
            for k in c..self.cols {
                out[(i, k)] = Rat::from_integer(m[i][k].clone()) / &piv;
            }
        }
        for i in (0..pivots.len()).rev() {
            for j in (i + 1)..pivots.len() {
                let c = pivots[j];
                let f = out[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..self.cols {
                    let t = &out[(j, k)] * &f;
                    out[(i, k)] -= t;
                }
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space. Free columns are taken in ascending order and
    /// each basis vector has a single 1 in its free coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for c in 0..self.cols {
            if piv_iter.peek() == Some(&c) {
                piv_iter.next();
            } else {
                free_cols.push(c);
            }
        }
        for f in free_cols {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution of `self * x = b` with free variables set to 0,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        // A pivot in the augmented column means rank([m|b]) > rank(m).
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact determinant via fraction-free elimination.
    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let mut scale = Rat::one();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .filter(|e| !e.is_zero())
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                scale *= Rat::from_integer(lcm.clone());
                row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect()
            })
            .collect();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                m.swap(c, p);
                sign = -sign;
            }
            for j in (c + 1)..n {
                for k in (c + 1)..n {
                    let num = &m[j][k] * &m[c][c] - &m[j][c] * &m[c][k];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    m[j][k] = q;
                }
                m[j][c] = BigInt::zero();
            }
            prev = m[c][c].clone();
        }
        Rat::from_integer(m[n - 1][n - 1].clone()) * rat_int(sign) / scale
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;

    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

/// Standard basis vectors at the non-pivot columns of the subspace's echelon
/// form: coset representatives of a complement, in ascending index order.
pub fn quotient_basis(subspace: &[Vec<Rat>], ambient_dim: usize) -> Vec<Vec<Rat>> {
    for v in subspace {
        assert_eq!(v.len(), ambient_dim, "subspace vector length mismatch");
    }
    let m = Matrix::from_rows(ambient_dim, subspace);
    let (_, pivots) = m.rref();
    let mut reps = Vec::new();
    let mut piv_iter = pivots.iter().copied().peekable();
    for c in 0..ambient_dim {
        if piv_iter.peek() == Some(&c) {
            piv_iter.next();
        } else {
            let mut e = vec![Rat::zero(); ambient_dim];
            e[c] = Rat::one();
            reps.push(e);
        }
    }
    reps
}

/// Dot product of two equal-length vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot product length mismatch");
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        s += x * y;
    }
    s
}

pub fn zero_vec(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(|e| e.is_zero())
}

pub fn add_scaled(target: &mut [Rat], source: &[Rat], c: &Rat) {
    assert_eq!(target.len(), source.len(), "length mismatch");
    if c.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if s.is_zero() {
            continue;
        }
        *t += s * c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rat_text_form() {
        assert_eq!(rat_to_string(&rat(1, 2)), "1/2");
        assert_eq!(rat_to_string(&rat(-3, 6)), "-1/2");
        assert_eq!(rat_to_string(&rat_int(7)), "7");
        assert_eq!(rat_to_string(&Rat::zero()), "0");
        assert_eq!(rat_from_string("4/-6").unwrap(), rat(-2, 3));
        assert_eq!(rat_from_string("-5").unwrap(), rat_int(-5));
        assert!(rat_from_string("1/0").is_err());
        assert!(rat_from_string("x").is_err());
    }

    #[test]
    fn rref_identity_is_fixed() {
        let (r, p) = Matrix::identity(2).rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let (r, p) = mat(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_permutation() {
        let (r, p) = mat(&[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zero(3, 4).rank(), 0);
        assert_eq!(Matrix::identity(5).rank(), 5);
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(mat(&[&[1, 1]]).kernel_basis(), vec![vec![rat_int(-1), rat_int(1)]]);
        assert_eq!(
            Matrix::zero(2, 2).kernel_basis(),
            vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]]
        );
    }

    #[test]
    fn solve_examples() {
        let b = vec![rat_int(2), rat_int(3)];
        assert_eq!(Matrix::identity(2).solve(&b), Some(b.clone()));
        // Free variable zeroed.
        assert_eq!(mat(&[&[1, 1]]).solve(&[rat_int(1)]), Some(vec![rat_int(1), rat_int(0)]));
        assert_eq!(mat(&[&[0]]).solve(&[rat_int(1)]), None);
    }

    #[test]
    fn quotient_basis_examples() {
        let e0 = vec![rat_int(1), rat_int(0)];
        let e1 = vec![rat_int(0), rat_int(1)];
        assert_eq!(quotient_basis(&[], 2), vec![e0.clone(), e1.clone()]);
        assert_eq!(quotient_basis(std::slice::from_ref(&e0), 2), vec![e1.clone()]);
        assert_eq!(quotient_basis(&[e0.clone(), e1.clone()], 2), Vec::<Vec<Rat>>::new());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(mat(&[&[0, 0, 4], &[0, 8, 0], &[4, 0, 0]]).determinant(), rat_int(-128));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant(), rat_int(0));
        let m = Matrix::from_rows(
            2,
            &[vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]],
        );
        assert_eq!(m.determinant(), rat(1, 60));
    }

    /// Cofactor-expansion determinant, an independent route for cross-checks.
    fn det_cofactor(m: &Matrix) -> Rat {
        let n = m.rows();
        if n == 0 {
            return Rat::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut det = Rat::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let minor_rows: Vec<Vec<Rat>> = (1..n)
                .map(|i| (0..n).filter(|&k| k != j).map(|k| m[(i, k)].clone()).collect())
                .collect();
            let minor = Matrix::from_rows(n - 1, &minor_rows);
            let term = &m[(0, j)] * det_cofactor(&minor);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-6i64..7, 1i64..4), r * c).prop_map(move |cells| {
                let rows: Vec<Vec<Rat>> = cells
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&(n, d)| rat(n, d)).collect())
                    .collect();
                Matrix::from_rows(c, &rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
        }

        #[test]
        fn kernel_vectors_annihilate(m in small_matrix()) {
            for v in m.kernel_basis() {
                prop_assert!(is_zero_vec(&m.mul_vec(&v)));
            }
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r, p) = m.rref();
            let (r2, p2) = r.rref();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(p, p2);
        }

        #[test]
        fn solve_is_exact_or_certified_unsolvable(m in small_matrix(), seed in proptest::collection::vec(-5i64..6, 0..5)) {
            let b: Vec<Rat> = (0..m.rows())
                .map(|i| rat_int(*seed.get(i).unwrap_or(&1)))
                .collect();
            match m.solve(&b) {
                Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
                None => {
                    let mut aug = Matrix::zero(m.rows(), m.cols() + 1);
                    for i in 0..m.rows() {
                        for j in 0..m.cols() {
                            aug[(i, j)] = m[(i, j)].clone();
                        }
                        aug[(i, m.cols())] = b[i].clone();
                    }
                    prop_assert!(aug.rank() > m.rank());
                }
            }
        }

        #[test]
        fn determinant_matches_cofactor_expansion(m in small_matrix()) {
            let n = m.rows().min(m.cols());
            let square_rows: Vec<Vec<Rat>> =
                (0..n).map(|i| m.row(i)[..n].to_vec()).collect();
            let sq = Matrix::from_rows(n, &square_rows);
            prop_assert_eq!(sq.determinant(), det_cofactor(&sq));
        }
    }
}
