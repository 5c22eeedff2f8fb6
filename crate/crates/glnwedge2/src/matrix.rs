//! Dense matrices of exact integers with rank over a prime field and over
//! the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// A dense integer matrix. Row and column labels name the PBW monomials or
/// block indices behind each line; they may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().map(BigInt::from).collect(),
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    /// Build a matrix out of a grid of equally shaped blocks.
    pub fn from_blocks(grid: &[Vec<&IntMatrix>]) -> Self {
        let block_r = grid[0][0].rows;
        let block_c = grid[0][0].cols;
        for row in grid {
            for b in row {
                assert_eq!((b.rows, b.cols), (block_r, block_c));
            }
        }
        let rows = grid.len() * block_r;
        let cols = grid[0].len() * block_c;
        let mut out = IntMatrix::zeros(rows, cols);
        for (bi, row) in grid.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                for r in 0..block_r {
                    for c in 0..block_c {
                        out.set(bi * block_r + r, bj * block_c + c, b.at(r, c).clone());
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> IntMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= k;
        }
        out
    }

    /// Entrywise sum; shapes must match.
    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e += o;
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        self.scale(-1)
    }

    /// Exact entrywise division by a nonzero integer; panics if not exact.
    pub fn div_exact(&self, k: i64) -> IntMatrix {
        let kk = BigInt::from(k);
        let mut out = self.clone();
        for e in &mut out.entries {
            let (q, r) = e.div_rem(&kk);
            assert!(r.is_zero(), "inexact division of matrix entry by {k}");
            *e = q;
        }
        out
    }

    /// Rank over the field with p elements (p an odd prime).
    pub fn rank_mod_p(&self, p: u64) -> usize {
        if self.is_empty() {
            return 0;
        }
        let pp = BigInt::from(p);
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let v = self.at(r, c).mod_floor(&pp);
                        u64::try_from(v).expect("reduced entry fits in u64")
                    })
                    .collect()
            })
            .collect();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..self.cols {
            let Some(piv) = (row..self.rows).find(|&r| !m[r][col].is_multiple_of(p)) else {
                continue;
            };
            m.swap(row, piv);
            let inv = mod_inverse(m[row][col] % p, p);
            let pivot_row = m[row].clone();
            for (r, line) in m.iter_mut().enumerate() {
                if r != row && !line[col].is_multiple_of(p) {
                    let f = (line[col] % p) * inv % p;
                    for (c, x) in line.iter_mut().enumerate().skip(col) {
                        let sub = f * (pivot_row[c] % p) % p;
                        *x = (*x % p + p - sub) % p;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    /// Rank over the rationals by fraction-free Gaussian elimination.
    pub fn rank_over_q(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let mut prev = BigInt::from(1);
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..self.cols {
            let Some(piv) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, piv);
            let pivot = m[row][col].clone();
            for r in row + 1..self.rows {
                for c in col + 1..self.cols {
                    let (q, rem) = (&pivot * &m[r][c] - &m[r][col] * &m[row][c]).div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free elimination stayed exact");
                    m[r][c] = q;
                }
                m[r][col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
            row += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
