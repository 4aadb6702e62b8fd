//! Exact rational and Gaussian-rational linear algebra.
//!
//! Structure constants, Killing tables, root data and weight arithmetic are
//! all kept over `BigRational` (or `Complex<BigRational>` for root vectors),
//! so the character-theoretic multiplicity criterion never sees rounding.
//! Floating point enters only in the moment-geometry layer.

use num::{BigInt, BigRational, Complex, One, Signed, Zero};

pub type Rat = BigRational;
/// Gaussian rational: element of ℚ(i).
pub type CRat = Complex<BigRational>;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

pub fn czero() -> CRat {
    Complex::new(Rat::zero(), Rat::zero())
}

pub fn cone() -> CRat {
    Complex::new(Rat::one(), Rat::zero())
}

/// The imaginary unit of ℚ(i).
pub fn ci() -> CRat {
    Complex::new(Rat::zero(), Rat::one())
}

pub fn creal(r: Rat) -> CRat {
    Complex::new(r, Rat::zero())
}

pub fn cimag(r: Rat) -> CRat {
    Complex::new(Rat::zero(), r)
}

pub fn cint(n: i64) -> CRat {
    creal(rint(n))
}

pub fn crat(nre: i64, dre: i64, nim: i64, dim: i64) -> CRat {
    Complex::new(rat(nre, dre), rat(nim, dim))
}

/// Dense matrix over ℚ(i). Used for the ambient matrix realization of the
/// supported Lie algebras and their Cartan involutions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CRat>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![czero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, cone());
        }
        m
    }

    /// Build from integer entries (real part only).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = CMat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, cint(*v));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &CRat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CRat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        CMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        CMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> CMat {
        self.scale(&(-cone()))
    }

    pub fn scale(&self, c: &CRat) -> CMat {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        CMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.cols, other.rows);
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Lie bracket XY - YX.
    pub fn bracket(&self, other: &CMat) -> CMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> CMat {
        let mut out = CMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> CMat {
        let data = self.data.iter().map(|a| a.conj()).collect();
        CMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMat {
        self.conj().transpose()
    }

    pub fn trace(&self) -> CRat {
        assert_eq!(self.rows, self.cols);
        let mut t = czero();
        for i in 0..self.rows {
            t = t + self.get(i, i).clone();
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|a| a.im.is_zero())
    }

    /// Flatten to a coordinate vector (row-major).
    pub fn flatten(&self) -> Vec<CRat> {
        self.data.clone()
    }

    pub fn to_f64(&self) -> Vec<Complex<f64>> {
        self.data
            .iter()
            .map(|a| Complex::new(rat_to_f64(&a.re), rat_to_f64(&a.im)))
            .collect()
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Exact conversion for the small numerators/denominators that occur here.
    let n = r.numer();
    let d = r.denom();
    bigint_to_f64(n) / bigint_to_f64(d)
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    // BigInt -> f64 via string is exact enough for |n| < 2^53, which holds for
    // all structure data in this crate.
    n.to_string().parse::<f64>().unwrap()
}

/// Solve sum_j x_j a_j = target exactly by Gaussian elimination, where the
/// `a_j` and `target` are coordinate vectors over ℚ(i).
/// Returns None if the system is inconsistent.
pub fn solve_in_span(columns: &[Vec<CRat>], target: &[CRat]) -> Option<Vec<CRat>> {
    let n = target.len();
    let m = columns.len();
    for c in columns {
        assert_eq!(c.len(), n);
    }
    // Augmented matrix [A | b], n rows, m+1 cols.
    let mut a: Vec<Vec<CRat>> = (0..n)
        .map(|i| {
            let mut row: Vec<CRat> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut a, m);
    // Inconsistent if a pivot appears in the augmented column.
    for row in &a {
        if row[..m].iter().all(|v| v.is_zero()) && !row[m].is_zero() {
            return None;
        }
    }
    let mut x = vec![czero(); m];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = a[r][m].clone();
    }
    Some(x)
}

/// Reduced row echelon form over ℚ(i) on the first `ncols` columns.
/// Returns pivot column indices.
pub fn row_reduce(a: &mut Vec<Vec<CRat>>, ncols: usize) -> Vec<usize> {
    let nrows = a.len();
    let width = if nrows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let mut piv = None;
        for i in r..nrows {
            if !a[i][c].is_zero() {
                piv = Some(i);
                break;
            }
        }
        let Some(p) = piv else { continue };
        a.swap(r, p);
        let inv = cone() / a[r][c].clone();
        for j in 0..width {
            a[r][j] = a[r][j].clone() * inv.clone();
        }
        for i in 0..nrows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..width {
                    a[i][j] = a[i][j].clone() - f.clone() * a[r][j].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the kernel of the linear map with the given rows (over ℚ(i)).
pub fn kernel_basis(rows: &[Vec<CRat>], dim: usize) -> Vec<Vec<CRat>> {
    let mut a: Vec<Vec<CRat>> = rows.to_vec();
    for row in &a {
        assert_eq!(row.len(), dim);
    }
    let pivots = row_reduce(&mut a, dim);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![czero(); dim];
        v[f] = cone();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -a[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a rational matrix given as rows.
pub fn rank(rows: &[Vec<CRat>], dim: usize) -> usize {
    let mut a = rows.to_vec();
    row_reduce(&mut a, dim).len()
}

/// Invert a square rational (real) matrix. Panics if singular.
pub fn invert_rat(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<CRat>> = (0..n)
        .map(|i| {
            let mut row: Vec<CRat> = m[i].iter().map(|v| creal(v.clone())).collect();
            for j in 0..n {
                row.push(if i == j { cone() } else { czero() });
            }
            row
        })
        .collect();
    let pivots = row_reduce(&mut a, n);
    assert_eq!(pivots.len(), n, "singular matrix");
    (0..n)
        .map(|i| (0..n).map(|j| a[i][n + j].re.clone()).collect())
        .collect()
}

/// Smith-style integer kernel: basis of { x in Z^m : A x = 0 } for an integer
/// matrix A. The returned basis generates the full (saturated) kernel lattice.
pub fn integer_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    // Column-reduce [A; I] over Z by gcd elimination on the A-block. Columns
    // whose A-part becomes zero give the kernel generators in the I-part.
    let nrows = a.len();
    let ncols = if nrows == 0 { 0 } else { a[0].len() };
    if nrows == 0 {
        return (0..ncols)
            .map(|j| {
                let mut v = vec![BigInt::zero(); ncols];
                v[j] = BigInt::one();
                v
            })
            .collect();
    }
    let mut top: Vec<Vec<BigInt>> = (0..nrows).map(|i| a[i].clone()).collect();
    let mut bot: Vec<Vec<BigInt>> = (0..ncols)
        .map(|i| {
            let mut v = vec![BigInt::zero(); ncols];
            v[i] = BigInt::one();
            v
        })
        .collect();
    let mut lead_col = 0;
    for row in 0..nrows {
        loop {
            // Find nonzero entries in this row at columns >= lead_col.
            let nz: Vec<usize> = (lead_col..ncols)
                .filter(|&j| !top[row][j].is_zero())
                .collect();
            if nz.is_empty() {
                break;
            }
            if nz.len() == 1 {
                top.iter_mut().for_each(|r| r.swap(lead_col, nz[0]));
                bot.iter_mut().for_each(|r| r.swap(lead_col, nz[0]));
                lead_col += 1;
                break;
            }
            // Reduce the pair of columns with smallest absolute values.
            let mut cols = nz;
            cols.sort_by_key(|&j| top[row][j].abs());
            let (c0, c1) = (cols[0], cols[1]);
            let q = &top[row][c1] / &top[row][c0];
            for r in top.iter_mut() {
                let v = &r[c0] * &q;
                r[c1] -= v;
            }
            for r in bot.iter_mut() {
                let v = &r[c0] * &q;
                r[c1] -= v;
            }
        }
    }
    let mut kernel = Vec::new();
    for j in 0..ncols {
        if (0..nrows).all(|i| top[i][j].is_zero()) {
            kernel.push(bot.iter().map(|r| r[j].clone()).collect());
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_kernel() {
        let c1 = vec![cint(1), cint(0), cint(2)];
        let c2 = vec![cint(0), cint(1), cint(1)];
        let t = vec![cint(3), cint(4), cint(10)];
        let x = solve_in_span(&[c1.clone(), c2.clone()], &t).unwrap();
        assert_eq!(x[0], cint(3));
        assert_eq!(x[1], cint(4));
        let t2 = vec![cint(3), cint(4), cint(11)];
        assert!(solve_in_span(&[c1, c2], &t2).is_none());

        let rows = vec![vec![cint(1), cint(1), cint(0)]];
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!((v[0].clone() + v[1].clone()).is_zero());
        }
    }

    #[test]
    fn matrix_bracket() {
        let e = CMat::from_int_rows(&[&[0, 1], &[0, 0]]);
        let f = CMat::from_int_rows(&[&[0, 0], &[1, 0]]);
        let h = CMat::from_int_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(e.bracket(&f), h);
    }

    #[test]
    fn integer_kernel_saturated() {
        // ker of [2 4] over Z is generated by (2,-1), not (4,-2).
        let a = vec![vec![BigInt::from(2), BigInt::from(4)]];
        let k = integer_kernel(&a);
        assert_eq!(k.len(), 1);
        let g = &k[0];
        let gcd = num::Integer::gcd(&g[0], &g[1]);
        assert_eq!(gcd.abs(), BigInt::one());
    }

    #[test]
    fn invert_small() {
        let m = vec![vec![rint(2), rint(1)], vec![rint(1), rint(1)]];
        let inv = invert_rat(&m);
        assert_eq!(inv[0][0], rint(1));
        assert_eq!(inv[0][1], rint(-1));
    }
}
