//! Gaussian elimination over the field tracts (`q`, `qi`, `fp:p`).

use crate::error::{Error, Result};
use crate::tract::{Scalar, Tract};

/// A dense matrix over one field tract.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    tract: Tract,
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
}

impl Matrix {
    pub fn new(tract: Tract, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if !tract.is_field() {
            return Err(Error::UnsupportedTract {
                tract,
                reason: "linear algebra needs a field".into(),
            });
        }
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::Parse("ragged matrix".into()));
            }
            for x in r {
                x.expect_tract(tract)?;
            }
        }
        Ok(Matrix { tract, rows, ncols })
    }

    /// Parses rows of scalar literals.
    pub fn parse<S: AsRef<str>>(tract: Tract, rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| Scalar::parse(tract, s.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(tract, rows)
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// The submatrix on the given columns.
    pub fn columns(&self, cols: &[usize]) -> Matrix {
        let rows = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
            .collect();
        Matrix {
            tract: self.tract,
            rows,
            ncols: cols.len(),
        }
    }

    pub fn conj(&self) -> Matrix {
        let rows = self.rows.iter().map(|r| r.iter().map(Scalar::conj).collect()).collect();
        Matrix {
            tract: self.tract,
            rows,
            ncols: self.ncols,
        }
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("pivot is nonzero");
            a[r] = a[r].iter().map(|x| inv.mul(x)).collect();
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    let pivot_row = a[r].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x = x.field_sub(&f.mul(y)).expect("same field");
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == a.len() {
                break;
            }
        }
        (
            Matrix {
                tract: self.tract,
                rows: a,
                ncols: self.ncols,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solves `A x = b` for square nonsingular `A`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.nrows();
        if self.ncols != n || b.len() != n {
            return Err(Error::Precondition("solve needs a square system".into()));
        }
        let aug: Vec<Vec<Scalar>> = self
            .rows
            .iter()
            .zip(b)
            .map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect())
            .collect();
        let (red, pivots) = Matrix {
            tract: self.tract,
            rows: aug,
            ncols: n + 1,
        }
        .rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::Domain("singular system".into()));
        }
        Ok(red.rows.iter().map(|r| r[n].clone()).collect())
    }

    /// `A⁻¹ M` where `A` is the square submatrix on `cols`.
    pub fn reduce_on(&self, cols: &[usize]) -> Result<Matrix> {
        let n = self.nrows();
        if cols.len() != n {
            return Err(Error::Precondition("need one column per row".into()));
        }
        let order: Vec<usize> = cols
            .iter()
            .copied()
            .chain((0..self.ncols).filter(|j| !cols.contains(j)))
            .collect();
        let (red, pivots) = self.columns(&order).rref();
        if pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::NotABasis(format!("{cols:?}")));
        }
        let mut rows = vec![vec![Scalar::zero(self.tract); self.ncols]; n];
        for (k, &j) in order.iter().enumerate() {
            for (row, src) in rows.iter_mut().zip(&red.rows) {
                row[j] = src[k].clone();
            }
        }
        Ok(Matrix {
            tract: self.tract,
            rows,
            ncols: self.ncols,
        })
    }
}
