//! Field arithmetic kernels shared by both matrix representations.

use std::fmt::Debug;

use num::{BigRational, One, Zero};

use super::field::pow_mod;

pub(crate) trait Arith: Copy {
    type E: Clone + PartialEq + Debug;

    fn zero(self) -> Self::E;
    fn one(self) -> Self::E;
    fn from_i64(self, v: i64) -> Self::E;
    fn add(self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(self, a: &Self::E) -> Self::E;
    /// Multiplicative inverse; callers guarantee `a` is nonzero.
    fn inv(self, a: &Self::E) -> Self::E;
    fn is_zero(self, a: &Self::E) -> bool;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp(pub u64);

impl Arith for Fp {
    type E = u32;

    fn zero(self) -> u32 {
        0
    }
    fn one(self) -> u32 {
        1
    }
    fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }
    fn add(self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.0) as u32
    }
    fn sub(self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.0 - *b as u64) % self.0) as u32
    }
    fn mul(self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.0) as u32
    }
    fn neg(self, a: &u32) -> u32 {
        ((self.0 - *a as u64) % self.0) as u32
    }
    fn inv(self, a: &u32) -> u32 {
        debug_assert!(*a != 0);
        pow_mod(*a as u64, self.0 - 2, self.0) as u32
    }
    fn is_zero(self, a: &u32) -> bool {
        *a == 0
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Q;

impl Arith for Q {
    type E = BigRational;

    fn zero(self) -> BigRational {
        BigRational::zero()
    }
    fn one(self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Row-major product of an `n×k` and a `k×m` matrix.
pub(crate) fn mul<A: Arith>(ar: A, a: &[A::E], b: &[A::E], n: usize, k: usize, m: usize) -> Vec<A::E> {
    let mut out = vec![ar.zero(); n * m];
    for i in 0..n {
        for l in 0..k {
            let x = &a[i * k + l];
            if ar.is_zero(x) {
                continue;
            }
            for j in 0..m {
                let y = &b[l * m + j];
                if !ar.is_zero(y) {
                    out[i * m + j] = ar.add(&out[i * m + j], &ar.mul(x, y));
                }
            }
        }
    }
    out
}

/// In-place Gauss-Jordan elimination. Returns the pivot columns.
pub(crate) fn rref<A: Arith>(ar: A, m: &mut [A::E], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !ar.is_zero(&m[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&m[r * cols + c]);
        for j in c..cols {
            m[r * cols + j] = ar.mul(&m[r * cols + j], &inv);
        }
        let pivot_row: Vec<A::E> = m[r * cols..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m[i * cols + c].clone();
            if ar.is_zero(&factor) {
                continue;
            }
            for j in c..cols {
                if !ar.is_zero(&pivot_row[j]) {
                    m[i * cols + j] = ar.sub(&m[i * cols + j], &ar.mul(&factor, &pivot_row[j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}
