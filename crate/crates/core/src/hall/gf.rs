//! Dense matrices over a prime field GF(p), small enough that plain modular
//! arithmetic on `u64` covers everything in scope.

/// Modular inverse via Fermat; `p` is prime and `a` nonzero mod `p`.
fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl GfMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        GfMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, d: usize) -> Self {
        let mut m = Self::zero(p, d, d);
        for i in 0..d {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `self * other` (composition: `self` applied after `other`).
    pub fn mul(&self, other: &GfMatrix) -> GfMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = GfMatrix::zero(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = (out.get(r, c) + a * other.get(k, c)) % self.p;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = (acc + self.get(r, c) * v[c]) % self.p;
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().1.len()
    }

    /// In-place reduced row echelon form; returns the matrix and the pivot
    /// column of each nonzero row.
    pub fn rref(mut self) -> (GfMatrix, Vec<usize>) {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..self.cols {
                    let (a, b) = (self.get(row, c), self.get(pivot_row, c));
                    self.set(row, c, b);
                    self.set(pivot_row, c, a);
                }
            }
            let inv = inv_mod(self.get(row, col), p);
            for c in 0..self.cols {
                let v = self.get(row, c) * inv % p;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    for c in 0..self.cols {
                        let v = (self.get(r, c) + (p - factor) * self.get(row, c)) % p;
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (self, pivots)
    }
}

/// A subspace of GF(p)^d held as a reduced-row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub basis: GfMatrix,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    /// Reduce a vector modulo the subspace. The result is zero exactly when
    /// the vector lies in the span; the coefficient of basis row `r` used in
    /// the reduction is returned alongside.
    pub fn reduce(&self, v: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let p = self.basis.p;
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = rem[pc];
            coords.push(c);
            if c != 0 {
                for (x, b) in rem.iter_mut().zip(self.basis.row(r)) {
                    *x = (*x + (p - c) * b) % p;
                }
            }
        }
        (rem, coords)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).0.iter().all(|&x| x == 0)
    }

    /// Columns not used as pivots, i.e. coordinates of the quotient space.
    pub fn complement_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim()).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// All `k`-dimensional subspaces of GF(p)^d, each as an RREF basis: choose
/// pivot columns, then fill the free entries in all possible ways.
pub fn subspaces(p: u64, d: usize, k: usize) -> Vec<Subspace> {
    assert!(k <= d);
    if k == 0 {
        return vec![Subspace { basis: GfMatrix::zero(p, 0, d), pivots: vec![] }];
    }
    let mut out = Vec::new();
    for pivots in combinations(d, k) {
        // free entries: to the right of the row's pivot, outside pivot columns
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..d {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let mut values = vec![0u64; free.len()];
        loop {
            let mut basis = GfMatrix::zero(p, k, d);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(r, pc, 1);
            }
            for (&(r, c), &v) in free.iter().zip(&values) {
                basis.set(r, c, v);
            }
            out.push(Subspace { basis, pivots: pivots.clone() });
            // odometer over free values
            let mut idx = 0;
            loop {
                if idx == values.len() {
                    break;
                }
                values[idx] += 1;
                if values[idx] < p {
                    break;
                }
                values[idx] = 0;
                idx += 1;
            }
            if idx == values.len() {
                break;
            }
        }
    }
    out
}

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, d: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for c in start..d {
            current.push(c);
            rec(c + 1, d, k, current, out);
            current.pop();
        }
    }
    rec(0, d, k, &mut current, &mut out);
    out
}
