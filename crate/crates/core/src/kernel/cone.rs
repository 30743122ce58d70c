//! Homogeneous polyhedral cones with exact double description.
//!
//! A [`Cone`] carries both a generator description (lineality basis plus
//! extreme rays modulo lineality) and a halfspace description (equality span
//! plus facet inequalities), each in a canonical form, so that two cones are
//! equal as sets iff they are structurally equal. Conversion between the two
//! descriptions is the double description method run through the polar cone.

use super::linalg::{
    self, dot, is_zero_vec, neg, primitive, rank, reduce_mod, scale, sub_scaled, subspace_basis,
    zeros, QVec,
};
use super::rat::Rat;
use crate::error::{Error, Result};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    /// `normal . x >= 0`
    Geq,
    /// `normal . x == 0`
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub normal: QVec,
    pub sense: Sense,
}

impl Halfspace {
    pub fn geq(normal: QVec) -> Self {
        Halfspace {
            normal,
            sense: Sense::Geq,
        }
    }

    pub fn eq(normal: QVec) -> Self {
        Halfspace {
            normal,
            sense: Sense::Eq,
        }
    }
}

/// Exact classification of a point against a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    /// In the relative interior.
    Interior,
    /// In the cone but on a proper face.
    Boundary,
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    space_dim: usize,
    dim: usize,
    lineality: Vec<QVec>,
    rays: Vec<QVec>,
    eqs: Vec<QVec>,
    ineqs: Vec<QVec>,
}

/// One ray of the incremental double description pair, with the set of
/// already-inserted constraints it satisfies with equality.
struct RayRec {
    v: QVec,
    zeros: Vec<u64>,
}

impl RayRec {
    fn set(&mut self, i: usize) {
        self.zeros[i / 64] |= 1 << (i % 64);
    }
}

fn zeros_intersection(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

/// Incremental double description: returns a lineality basis and a generating
/// set of rays for `{ x : constraints }`. The rays returned are extreme modulo
/// the lineality space (enforced by an exact rank filter at the end).
fn dd(space_dim: usize, cons: &[(QVec, Sense)]) -> (Vec<QVec>, Vec<QVec>) {
    // Deduplicate and put equalities first; both reduce intermediate growth.
    let mut seen = HashSet::new();
    let mut active: Vec<(QVec, Sense)> = Vec::new();
    for pass in [Sense::Eq, Sense::Geq] {
        for (a, sense) in cons {
            if *sense != pass || is_zero_vec(a) {
                continue;
            }
            let key = match sense {
                Sense::Eq => (linalg::primitive_signfree(a), *sense),
                Sense::Geq => (primitive(a), *sense),
            };
            if seen.insert(key.clone()) {
                active.push((key.0, *sense));
            }
        }
    }

    let words = active.len().div_ceil(64);
    let mut lin: Vec<QVec> = (0..space_dim)
        .map(|i| {
            let mut e = zeros(space_dim);
            e[i] = Rat::one();
            e
        })
        .collect();
    let mut rays: Vec<RayRec> = Vec::new();

    for idx in 0..active.len() {
        let (a, sense) = active[idx].clone();
        // Pivot on the lineality when some basis vector sees the constraint.
        if let Some(p) = lin.iter().position(|l| !dot(&a, l).is_zero()) {
            let l0 = lin.remove(p);
            let a_l0 = dot(&a, &l0);
            for l in &mut lin {
                let c = dot(&a, l);
                if !c.is_zero() {
                    *l = sub_scaled(l, &(&c / &a_l0), &l0);
                }
            }
            for r in &mut rays {
                let c = dot(&a, &r.v);
                if !c.is_zero() {
                    r.v = sub_scaled(&r.v, &(&c / &a_l0), &l0);
                }
                r.set(idx);
            }
            if sense == Sense::Geq {
                let v = if a_l0.is_positive() { l0 } else { neg(&l0) };
                let mut rec = RayRec {
                    v: primitive(&v),
                    zeros: vec![0; words],
                };
                for j in 0..idx {
                    rec.set(j);
                }
                rays.push(rec);
            }
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| dot(&a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let negs: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if negs.is_empty() && sense == Sense::Geq {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.set(idx);
                }
            }
            continue;
        }

        let mut fresh: Vec<RayRec> = Vec::new();
        let mut fresh_seen: HashSet<QVec> = HashSet::new();
        for &i in &pos {
            for &j in &negs {
                let common = zeros_intersection(&rays[i].zeros, &rays[j].zeros);
                if !adjacent(&active, &common, space_dim, lin.len()) {
                    continue;
                }
                // vals[i] * r_j - vals[j] * r_i, a positive combination on {a = 0}.
                let v = sub_scaled(&scale(&rays[j].v, &vals[i]), &vals[j], &rays[i].v);
                let v = primitive(&v);
                if !fresh_seen.insert(v.clone()) {
                    continue;
                }
                let mut rec = RayRec { v, zeros: common };
                rec.set(idx);
                fresh.push(rec);
            }
        }

        let mut kept: Vec<RayRec> = Vec::new();
        for (r, v) in rays.into_iter().zip(vals) {
            let keep = if v.is_zero() {
                true
            } else {
                v.is_positive() && sense == Sense::Geq
            };
            if keep {
                let mut r = r;
                if v.is_zero() {
                    r.set(idx);
                }
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    finish(space_dim, &active, lin, rays)
}

/// Exact adjacency: the face cut out by the commonly tight constraints has
/// dimension `lin_dim + 2`.
fn adjacent(active: &[(QVec, Sense)], common: &[u64], space_dim: usize, lin_dim: usize) -> bool {
    if space_dim < lin_dim + 2 {
        return false;
    }
    let want = space_dim - lin_dim - 2;
    let mut tight: Vec<QVec> = Vec::new();
    let mut count = 0usize;
    for (i, (a, _)) in active.iter().enumerate() {
        if common[i / 64] >> (i % 64) & 1 == 1 {
            tight.push(a.clone());
            count += 1;
        }
    }
    if count < want {
        return false;
    }
    rank(&tight, space_dim) == want
}

/// Canonicalize the double description output: echelon lineality, rays reduced
/// modulo the lineality, an exact extremality filter, deduplication, sorting.
fn finish(
    space_dim: usize,
    active: &[(QVec, Sense)],
    lin: Vec<QVec>,
    rays: Vec<RayRec>,
) -> (Vec<QVec>, Vec<QVec>) {
    let lin = subspace_basis(&lin, space_dim);
    let lin_dim = lin.len();
    let mut out: Vec<QVec> = Vec::new();
    let mut seen: HashSet<QVec> = HashSet::new();
    for r in &rays {
        let v = reduce_mod(&lin, &r.v);
        if is_zero_vec(&v) {
            continue;
        }
        let v = primitive(&v);
        if !seen.insert(v.clone()) {
            continue;
        }
        let tight: Vec<QVec> = active
            .iter()
            .filter(|(a, _)| dot(a, &v).is_zero())
            .map(|(a, _)| a.clone())
            .collect();
        if space_dim > lin_dim && rank(&tight, space_dim) == space_dim - lin_dim - 1 {
            out.push(v);
        }
    }
    out.sort();
    (lin, out)
}

fn sorted_primitive_mod(basis: &[QVec], vecs: &[QVec]) -> Vec<QVec> {
    let mut out: Vec<QVec> = Vec::new();
    let mut seen = HashSet::new();
    for v in vecs {
        let v = reduce_mod(basis, v);
        if is_zero_vec(&v) {
            continue;
        }
        let v = primitive(&v);
        if seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out.sort();
    out
}

impl Cone {
    fn from_parts(
        space_dim: usize,
        lineality: Vec<QVec>,
        rays: Vec<QVec>,
        eqs: Vec<QVec>,
        ineqs: Vec<QVec>,
    ) -> Self {
        let lineality = subspace_basis(&lineality, space_dim);
        let eqs = subspace_basis(&eqs, space_dim);
        let rays = sorted_primitive_mod(&lineality, &rays);
        let ineqs = sorted_primitive_mod(&eqs, &ineqs);
        let mut span = lineality.clone();
        span.extend(rays.iter().cloned());
        let dim = rank(&span, space_dim);
        Cone {
            space_dim,
            dim,
            lineality,
            rays,
            eqs,
            ineqs,
        }
    }

    /// Conic hull of `rays` plus the span of `lines`.
    pub fn from_generators(space_dim: usize, rays: &[QVec], lines: &[QVec]) -> Self {
        let mut cons: Vec<(QVec, Sense)> = Vec::new();
        cons.extend(rays.iter().cloned().map(|r| (r, Sense::Geq)));
        cons.extend(lines.iter().cloned().map(|l| (l, Sense::Eq)));
        let (plin, prays) = dd(space_dim, &cons);
        let mut back: Vec<(QVec, Sense)> = Vec::new();
        back.extend(prays.iter().cloned().map(|r| (r, Sense::Geq)));
        back.extend(plin.iter().cloned().map(|l| (l, Sense::Eq)));
        let (lin, xrays) = dd(space_dim, &back);
        Cone::from_parts(space_dim, lin, xrays, plin, prays)
    }

    /// Solution set of the given homogeneous constraints.
    pub fn from_halfspaces(space_dim: usize, halfspaces: &[Halfspace]) -> Self {
        let cons: Vec<(QVec, Sense)> = halfspaces
            .iter()
            .map(|h| (h.normal.clone(), h.sense))
            .collect();
        let (lin, xrays) = dd(space_dim, &cons);
        let mut back: Vec<(QVec, Sense)> = Vec::new();
        back.extend(xrays.iter().cloned().map(|r| (r, Sense::Geq)));
        back.extend(lin.iter().cloned().map(|l| (l, Sense::Eq)));
        let (plin, prays) = dd(space_dim, &back);
        Cone::from_parts(space_dim, lin, xrays, plin, prays)
    }

    pub fn zero(space_dim: usize) -> Self {
        Cone::from_generators(space_dim, &[], &[])
    }

    pub fn full_space(space_dim: usize) -> Self {
        let id: Vec<QVec> = (0..space_dim)
            .map(|i| {
                let mut e = zeros(space_dim);
                e[i] = Rat::one();
                e
            })
            .collect();
        Cone::from_generators(space_dim, &[], &id)
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn lineality(&self) -> &[QVec] {
        &self.lineality
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn equalities(&self) -> &[QVec] {
        &self.eqs
    }

    pub fn inequalities(&self) -> &[QVec] {
        &self.ineqs
    }

    pub fn halfspaces(&self) -> Vec<Halfspace> {
        let mut out: Vec<Halfspace> = self.eqs.iter().cloned().map(Halfspace::eq).collect();
        out.extend(self.ineqs.iter().cloned().map(Halfspace::geq));
        out
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if self.space_dim != other.space_dim {
            return Err(Error::DimensionMismatch {
                expected: self.space_dim,
                got: other.space_dim,
            });
        }
        let mut hs = self.halfspaces();
        hs.extend(other.halfspaces());
        Ok(Cone::from_halfspaces(self.space_dim, &hs))
    }

    /// Exact location of a point relative to the cone. `Interior` means the
    /// relative interior; a zero-dimensional cone has interior `{0}`.
    pub fn locate(&self, x: &[Rat]) -> Location {
        assert_eq!(x.len(), self.space_dim, "point dimension");
        for e in &self.eqs {
            if !dot(e, x).is_zero() {
                return Location::Outside;
            }
        }
        let mut tight = false;
        for n in &self.ineqs {
            let v = dot(n, x);
            if v.is_negative() {
                return Location::Outside;
            }
            if v.is_zero() {
                tight = true;
            }
        }
        if tight {
            Location::Boundary
        } else {
            Location::Interior
        }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.locate(x) != Location::Outside
    }

    /// Canonical relative interior point: the sum of the extreme rays
    /// (the origin for a cone with no rays).
    pub fn relative_interior_point(&self) -> QVec {
        let mut p = zeros(self.space_dim);
        for r in &self.rays {
            p = linalg::add(&p, r);
        }
        p
    }

    pub fn is_subset_of(&self, other: &Cone) -> bool {
        if self.space_dim != other.space_dim {
            return false;
        }
        self.rays.iter().all(|r| other.contains(r))
            && self
                .lineality
                .iter()
                .all(|l| other.contains(l) && other.contains(&neg(l)))
    }

    /// All nonempty faces, including the cone itself. Faces of a cone with
    /// lineality `L` all contain `L`; the minimal face of a pointed cone is
    /// the zero cone.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen: HashSet<Cone> = HashSet::new();
        let mut queue: Vec<Cone> = vec![self.clone()];
        seen.insert(self.clone());
        let mut head = 0;
        while head < queue.len() {
            let f = queue[head].clone();
            head += 1;
            for n in &self.ineqs {
                let mut hs = f.halfspaces();
                hs.push(Halfspace::eq(n.clone()));
                let child = Cone::from_halfspaces(self.space_dim, &hs);
                if seen.insert(child.clone()) {
                    queue.push(child);
                }
            }
        }
        queue.sort_by_key(|c| std::cmp::Reverse(c.dim()));
        queue
    }

    /// Apply a linear isomorphism given by its action on vectors of the
    /// primal space (`map`) and on halfspace normals (`normal_map`). The two
    /// must be consistent: `normal_map(n) . map(x) = n . x`.
    pub fn remap(&self, map: impl Fn(&[Rat]) -> QVec, normal_map: impl Fn(&[Rat]) -> QVec) -> Cone {
        Cone::from_parts(
            self.space_dim,
            self.lineality.iter().map(|l| map(l)).collect(),
            self.rays.iter().map(|r| map(r)).collect(),
            self.eqs.iter().map(|e| normal_map(e)).collect(),
            self.ineqs.iter().map(|n| normal_map(n)).collect(),
        )
    }
}
