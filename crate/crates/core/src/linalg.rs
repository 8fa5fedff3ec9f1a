//! Dense matrices over `F_p`: row reduction, rank, nullspace.

use crate::gfp::PrimeField;

/// Row-major dense matrix of reduced residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, field: &PrimeField, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(v).fold(0u32, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect()
    }

    /// Reduces in place to reduced row echelon form and returns the pivot
    /// column of each nonzero row.
    pub fn rref(&mut self, field: &PrimeField) -> Vec<usize> {
        rref_in_place(field, &mut self.data, self.rows, self.cols)
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        self.clone().rref(field).len()
    }

    /// A basis of `{v : self * v = 0}`, one vector per free column.
    pub fn nullspace(&self, field: &PrimeField) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        nullspace_from_rref(field, &m.data, self.cols, &pivots)
    }
}

pub(crate) fn rref_in_place(field: &PrimeField, data: &mut [u32], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(data[r * cols + c]);
        for j in c..cols {
            data[r * cols + j] = field.mul(data[r * cols + j], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = field.mul(f, data[r * cols + j]);
                data[i * cols + j] = field.sub(data[i * cols + j], sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn nullspace_from_rref(field: &PrimeField, data: &[u32], cols: usize, pivots: &[usize]) -> Vec<Vec<u32>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(data[r * cols + free]);
            }
            v
        })
        .collect()
}
