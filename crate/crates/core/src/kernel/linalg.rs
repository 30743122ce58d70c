//! Dense exact linear algebra over small rational vectors.
//!
//! Everything here operates on plain `Vec<Rat>` rows. Dimensions stay in the
//! single digits, so simple Gaussian elimination is the right tool.

use super::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type QVec = Vec<Rat>;

pub fn zeros(n: usize) -> QVec {
    vec![Rat::zero(); n]
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn add(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], c: &Rat) -> QVec {
    a.iter().map(|x| x * c).collect()
}

pub fn neg(a: &[Rat]) -> QVec {
    a.iter().map(|x| -x).collect()
}

/// `a - c * b`, the elimination step.
pub fn sub_scaled(a: &[Rat], c: &Rat, b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - &(c * y)).collect()
}

/// Scale a rational vector to a primitive integer vector: clear denominators,
/// divide by the gcd of the numerators. The direction is preserved.
pub fn primitive(v: &[Rat]) -> QVec {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let scaled: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for n in &scaled {
        gcd = gcd.gcd(n);
    }
    scaled
        .into_iter()
        .map(|n| Rat::from_big(n / &gcd, BigInt::one()))
        .collect()
}

/// Primitive integer vector with its first nonzero coordinate positive.
/// Use only where the overall sign carries no meaning (lines, not rays).
pub fn primitive_signfree(v: &[Rat]) -> QVec {
    let p = primitive(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg(&p),
        _ => p,
    }
}

/// Row echelon basis of the span of `rows`: reduced row echelon form with each
/// row rescaled to a primitive integer vector with positive pivot. This is a
/// canonical basis of the subspace, so two subspaces are equal iff their
/// bases are componentwise equal.
pub fn subspace_basis(rows: &[QVec], dim: usize) -> Vec<QVec> {
    let mut mat: Vec<QVec> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let mut basis: Vec<QVec> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..dim {
        let Some(i) = mat.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let row = mat.swap_remove(i);
        let inv = row[col].recip();
        let row: QVec = scale(&row, &inv);
        for r in &mut mat {
            if !r[col].is_zero() {
                let c = r[col].clone();
                *r = sub_scaled(r, &c, &row);
            }
        }
        // Back-substitute into the rows already in the basis.
        for (b, &_p) in basis.iter_mut().zip(&pivots) {
            if !b[col].is_zero() {
                let c = b[col].clone();
                *b = sub_scaled(b, &c, &row);
            }
        }
        basis.push(row);
        pivots.push(col);
        mat.retain(|r| !is_zero_vec(r));
        if mat.is_empty() {
            break;
        }
    }
    basis.iter().map(|r| primitive_signfree(r)).collect()
}

/// Pivot columns of a row echelon basis as produced by [`subspace_basis`].
pub fn pivot_columns(basis: &[QVec]) -> Vec<usize> {
    basis
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect()
}

/// Reduce `v` modulo the span of a row echelon `basis`, zeroing the pivot
/// coordinates. The result is the canonical representative of `v` in the
/// quotient by the subspace.
pub fn reduce_mod(basis: &[QVec], v: &[Rat]) -> QVec {
    let mut out = v.to_vec();
    for row in basis {
        let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
        if !out[p].is_zero() {
            let c = &out[p] / &row[p];
            out = sub_scaled(&out, &c, row);
        }
    }
    out
}

pub fn rank(rows: &[QVec], dim: usize) -> usize {
    subspace_basis(rows, dim).len()
}

/// Basis of `{ x : r . x = 0 for all rows r }`, in canonical echelon form.
pub fn nullspace(rows: &[QVec], dim: usize) -> Vec<QVec> {
    let basis = subspace_basis(rows, dim);
    let pivots = pivot_columns(&basis);
    let mut out = Vec::new();
    for free in 0..dim {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = zeros(dim);
        v[free] = Rat::one();
        for (row, &p) in basis.iter().zip(&pivots) {
            // row . v = 0  =>  v[p] = -row[free] / row[p]
            v[p] = -(&row[free] / &row[p]);
        }
        out.push(v);
    }
    subspace_basis(&out, dim)
}

/// Solve `A x = b` for one solution, if any. `a` holds the rows of `A`.
pub fn solve(a: &[QVec], b: &[Rat], dim: usize) -> Option<QVec> {
    let mut aug: Vec<QVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut reduced: Vec<QVec> = Vec::new();
    for col in 0..dim {
        let Some(i) = aug.iter().position(|r| !r[col].is_zero()) else {
            continue;
        };
        let row = aug.swap_remove(i);
        let inv = row[col].recip();
        let row = scale(&row, &inv);
        for r in aug.iter_mut().chain(reduced.iter_mut()) {
            if !r[col].is_zero() {
                let c = r[col].clone();
                *r = sub_scaled(r, &c, &row);
            }
        }
        reduced.push(row);
        pivots.push(col);
    }
    // Remaining rows must be 0 = 0.
    if aug.iter().any(|r| !r[dim].is_zero()) {
        return None;
    }
    let mut x = zeros(dim);
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[dim].clone();
    }
    Some(x)
}
