//! Exact rational linear algebra.
//!
//! [`RationalMatrix`] is dense and immutable; rank, kernel and span
//! membership go through fraction-free (Bareiss) elimination over the
//! integers. [`RowEchelon`] is a sparse, incrementally maintained reduced
//! row echelon basis for the large spans built by the consequence engine.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Integer row echelon form produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// `self` on top of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
            })
            .collect()
    }

    fn echelon(&self) -> Echelon {
        let mut m = self.integer_rows();
        let (nrows, ncols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let (top, rest) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pv = &pivot_row[c];
            for row in rest.iter_mut() {
                let lead = std::mem::take(&mut row[c]);
                for j in c + 1..ncols {
                    let num = pv * &row[j] - &lead * &pivot_row[j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division is exact");
                    row[j] = num / &prev;
                }
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        Echelon { rows: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{ v : self * v = 0 }`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &ech.pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
                let mut acc = Rational::zero();
                for j in p + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[p] = -acc / Rational::from_integer(row[p].clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Whether `v` lies in the row space.
    pub fn in_span(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let extended = self.stack(&Self::from_rows(self.cols, vec![v.to_vec()])?)?;
        Ok(extended.rank() == self.rank())
    }

    /// Row-space equality via `rank A = rank B = rank [A; B]`.
    pub fn same_row_space(&self, other: &Self) -> Result<bool> {
        let (a, b) = (self.rank(), other.rank());
        Ok(a == b && self.stack(other)?.rank() == a)
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|q| q.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Rational)>;

/// `a + k * b`.
fn axpy(a: &[(usize, Rational)], k: &Rational, b: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, k * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + k * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally built reduced row echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<SparseVec>,
    pivot_of: Vec<Option<usize>>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon {
            cols,
            rows: Vec::new(),
            pivot_of: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis rows, each with leading coefficient one.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut out: SparseVec = v.to_vec();
        // Pivot rows vanish on all other pivot columns, so the pivot entries
        // of `v` are untouched by each elimination step.
        for (c, a) in v {
            if let Some(r) = self.pivot_of[*c] {
                let k = -a.clone();
                out = axpy(&out, &k, &self.rows[r]);
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        let rem = self.reduce(v);
        let Some((p, lead)) = rem.first().cloned() else {
            return false;
        };
        let inv = lead.recip();
        let new_row: SparseVec = rem.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        for row in &mut self.rows {
            if let Ok(pos) = row.binary_search_by_key(&p, |e| e.0) {
                let k = -row[pos].1.clone();
                *row = axpy(row, &k, &new_row);
            }
        }
        self.pivot_of[p] = Some(self.rows.len());
        self.rows.push(new_row);
        true
    }

    /// Dense copy of the basis.
    pub fn to_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (c, x) in row {
                m.data[i * self.cols + c] = x.clone();
            }
        }
        m
    }
}

pub fn to_sparse(dense: &[Rational]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Rank of a list of sparse rows.
pub fn sparse_rank<'a>(cols: usize, rows: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut ech = RowEchelon::new(cols);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Sign of the first nonzero entry; used to normalize kernel vectors.
pub fn leading_sign(v: &[Rational]) -> i32 {
    v.iter()
        .find(|x| !x.is_zero())
        .map_or(0, |x| if x.is_negative() { -1 } else { 1 })
}
