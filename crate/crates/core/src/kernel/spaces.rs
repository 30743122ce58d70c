//! The quotient space `W = R^d / 1` and the affine slices `U`.
//!
//! A functional on the slice is a class of vectors modulo the all-one
//! direction; we store the canonical representative whose first coordinate is
//! zero. Cone computations happen in reduced coordinates, obtained by
//! dropping that leading zero, so a `W`-cone over ambient `d` is a
//! [`Cone`] over `R^{d-1}`.

use super::cone::Cone;
use super::linalg::{dot, QVec};
use super::rat::Rat;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A point of `W`: the canonical representative with first coordinate zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WVector {
    coords: Vec<Rat>,
}

impl WVector {
    /// Canonicalize an arbitrary representative by subtracting its first
    /// coordinate from every coordinate.
    pub fn new(rep: Vec<Rat>) -> Self {
        assert!(!rep.is_empty(), "empty representative");
        let head = rep[0].clone();
        if head.is_zero() {
            return WVector { coords: rep };
        }
        WVector {
            coords: rep.iter().map(|x| x - &head).collect(),
        }
    }

    pub fn from_ints(rep: &[i64]) -> Self {
        WVector::new(rep.iter().map(|&x| Rat::from_int(x)).collect())
    }

    pub fn zero(d: usize) -> Self {
        WVector {
            coords: vec![Rat::zero(); d],
        }
    }

    /// The basis functional `f_i` for `1 <= i <= d-1`: `i` zeros then ones.
    pub fn basis_f(d: usize, i: usize) -> Self {
        assert!((1..d).contains(&i), "basis index");
        let coords = (0..d)
            .map(|j| if j < i { Rat::zero() } else { Rat::one() })
            .collect();
        WVector { coords }
    }

    pub fn d(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Reduced coordinates: the canonical representative without its leading
    /// zero. This is a linear isomorphism `W ~ Q^{d-1}`.
    pub fn reduced(&self) -> QVec {
        self.coords[1..].to_vec()
    }

    pub fn from_reduced(reduced: &[Rat]) -> Self {
        let mut coords = Vec::with_capacity(reduced.len() + 1);
        coords.push(Rat::zero());
        coords.extend(reduced.iter().cloned());
        WVector { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }
}

impl fmt::Debug for WVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of an affine slice `U = { x in R^d : [1, x] = s }`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UPoint {
    coords: Vec<Rat>,
}

impl UPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        assert!(!coords.is_empty(), "empty point");
        UPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        UPoint::new(coords.iter().map(|&x| Rat::from_int(x)).collect())
    }

    pub fn d(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// The value of `[1, x]`, which identifies the slice the point lives in.
    pub fn slice_sum(&self) -> Rat {
        self.coords.iter().cloned().sum()
    }

    /// The distinguished point `x0 = (s/d) 1` of the slice: the unique point
    /// of `U` lying in the orthogonal complement direction.
    pub fn base_point(d: usize, slice_sum: &Rat) -> Self {
        let c = slice_sum / &Rat::from_int(d as i64);
        UPoint { coords: vec![c; d] }
    }
}

impl fmt::Debug for UPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The pairing `<w, u> = [w, u - x0]`, independent of the representative of
/// `w` because `u - x0` has coordinate sum zero.
pub fn pairing(w: &WVector, u: &UPoint, x0: &UPoint) -> Result<Rat> {
    if w.d() != u.d() {
        return Err(Error::DimensionMismatch {
            expected: w.d(),
            got: u.d(),
        });
    }
    if w.d() != x0.d() {
        return Err(Error::DimensionMismatch {
            expected: w.d(),
            got: x0.d(),
        });
    }
    let diff: QVec = u
        .coords()
        .iter()
        .zip(x0.coords())
        .map(|(a, b)| a - b)
        .collect();
    Ok(dot(w.coords(), &diff))
}

/// `[w, u - u']` for two points of a common slice. This is what face and
/// normal cone computations consume.
pub fn pairing_diff(w: &WVector, u: &UPoint, other: &UPoint) -> Result<Rat> {
    if w.d() != u.d() || u.d() != other.d() {
        return Err(Error::DimensionMismatch {
            expected: w.d(),
            got: u.d().max(other.d()),
        });
    }
    let diff: QVec = u
        .coords()
        .iter()
        .zip(other.coords())
        .map(|(a, b)| a - b)
        .collect();
    Ok(dot(w.coords(), &diff))
}

/// Build a `W`-cone (in reduced coordinates) from `W`-vector generators.
pub fn cone_from_wvectors(d: usize, rays: &[WVector], lines: &[WVector]) -> Result<Cone> {
    for v in rays.iter().chain(lines) {
        if v.d() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.d(),
            });
        }
    }
    let rays: Vec<QVec> = rays.iter().map(WVector::reduced).collect();
    let lines: Vec<QVec> = lines.iter().map(WVector::reduced).collect();
    Ok(Cone::from_generators(d - 1, &rays, &lines))
}

/// The rays of a `W`-cone as canonical `W`-vectors.
pub fn cone_rays_w(c: &Cone) -> Vec<WVector> {
    c.rays().iter().map(|r| WVector::from_reduced(r)).collect()
}

pub fn cone_lineality_w(c: &Cone) -> Vec<WVector> {
    c.lineality()
        .iter()
        .map(|l| WVector::from_reduced(l))
        .collect()
}
