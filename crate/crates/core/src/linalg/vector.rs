//! Dense coordinate vectors as plain `Vec<Rat>`.

use num_traits::Zero;

use super::Rat;

pub type Vector = Vec<Rat>;

pub fn zeros(n: usize) -> Vector {
    vec![Rat::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = super::one();
    v
}

pub fn is_zero(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rat], c: &Rat, v: &[Rat]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rat, v: &[Rat]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn neg(v: &[Rat]) -> Vector {
    v.iter().map(|x| -x).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Linear combination `sum_i coeffs[i] * vectors[i]` in dimension `n`.
pub fn combine(n: usize, coeffs: &[Rat], vectors: &[Vector]) -> Vector {
    let mut out = zeros(n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}
