//! Naive reference arithmetic built only on field element operations.
#![allow(dead_code)]

use fqlab_core::{FieldElement, FieldSpec, Polynomial};

pub type P = Vec<FieldElement>;

pub fn trim(mut a: P) -> P {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn el(f: &FieldSpec, c: u64) -> FieldElement {
    f.element(c).unwrap()
}

pub fn from_codes(f: &FieldSpec, c: &[u64]) -> P {
    trim(c.iter().map(|&x| el(f, x)).collect())
}

pub fn mul(f: &FieldSpec, a: &P, b: &P) -> P {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Schoolbook long division, returning (quotient, remainder).
pub fn divmod(f: &FieldSpec, a: &P, b: &P) -> (P, P) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let inv = f.inv(*b.last().unwrap()).unwrap();
    let mut q = vec![FieldElement::ZERO; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = f.mul(*r.last().unwrap(), inv);
        q[shift] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = f.sub(r[shift + j], f.mul(c, bj));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn gcd(f: &FieldSpec, a: &P, b: &P) -> P {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = divmod(f, &a, &b).1;
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = f.inv(lc).unwrap();
        a = a.iter().map(|&c| f.mul(c, inv)).collect();
    }
    a
}

/// Every monic polynomial of degree `d`.
pub fn monics(f: &FieldSpec, d: usize) -> Vec<P> {
    let q = f.order();
    let total = q.pow(d as u32);
    (0..total)
        .map(|mut k| {
            let mut v = Vec::with_capacity(d + 1);
            for _ in 0..d {
                v.push(el(f, k % q));
                k /= q;
            }
            v.push(FieldElement::ONE);
            v
        })
        .collect()
}

/// All polynomials of degree < d (including zero).
pub fn below(f: &FieldSpec, d: usize) -> Vec<P> {
    let q = f.order();
    (0..q.pow(d as u32))
        .map(|mut k| {
            let mut v = Vec::with_capacity(d);
            for _ in 0..d {
                v.push(el(f, k % q));
                k /= q;
            }
            trim(v)
        })
        .collect()
}

/// Irreducibility by trial division against every monic of degree ≤ n/2.
pub fn irreducible(f: &FieldSpec, a: &P) -> bool {
    let n = a.len() - 1;
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        for g in monics(f, d) {
            if divmod(f, a, &g).1.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Monic irreducible factors with multiplicity, by repeated trial division.
pub fn factor(f: &FieldSpec, a: &P) -> Vec<(P, u32)> {
    let inv = f.inv(*a.last().unwrap()).unwrap();
    let mut rest: P = a.iter().map(|&c| f.mul(c, inv)).collect();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.len() > 1 {
        if 2 * d > rest.len() - 1 {
            out.push((rest.clone(), 1));
            break;
        }
        for g in monics(f, d) {
            let mut e = 0;
            loop {
                let (qt, r) = divmod(f, &rest, &g);
                if !r.is_empty() {
                    break;
                }
                rest = qt;
                e += 1;
            }
            if e > 0 {
                out.push((g, e));
            }
        }
        d += 1;
    }
    out
}

pub fn mobius(f: &FieldSpec, a: &P) -> i8 {
    let fs = factor(f, a);
    if fs.iter().any(|(_, e)| *e > 1) {
        0
    } else if fs.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sylvester matrix determinant by Gaussian elimination.
pub fn sylvester_resultant(f: &FieldSpec, a: &P, b: &P) -> FieldElement {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return FieldElement::ONE;
    }
    let mut mat = vec![vec![FieldElement::ZERO; size]; size];
    for i in 0..n {
        for (j, &c) in a.iter().rev().enumerate() {
            mat[i][i + j] = c;
        }
    }
    for i in 0..m {
        for (j, &c) in b.iter().rev().enumerate() {
            mat[n + i][i + j] = c;
        }
    }
    let mut det = FieldElement::ONE;
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
            return FieldElement::ZERO;
        };
        if piv != col {
            mat.swap(piv, col);
            det = f.neg(det);
        }
        det = f.mul(det, mat[col][col]);
        let inv = f.inv(mat[col][col]).unwrap();
        let pivot_row = mat[col].clone();
        for row in mat[col + 1..].iter_mut() {
            let factor = f.mul(row[col], inv);
            if factor.is_zero() {
                continue;
            }
            for (x, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = f.sub(*x, f.mul(factor, pv));
            }
        }
    }
    det
}

/// `Φ(Q)` by counting residues coprime to `Q`.
pub fn phi(f: &FieldSpec, qq: &P) -> u64 {
    below(f, qq.len() - 1)
        .iter()
        .filter(|a| gcd(f, a, qq).len() == 1)
        .count() as u64
}

pub fn poly(f: &FieldSpec, a: &P) -> Polynomial {
    Polynomial::from_coeffs(f, a.clone()).unwrap()
}
