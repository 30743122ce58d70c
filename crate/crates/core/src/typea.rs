//! The symmetric group as the type-A reflection group.
//!
//! `S_d` acts on the left on `W` by permuting coordinates of representatives
//! and dually on the right on the slice `U`. The fundamental chamber is the
//! cone of weakly increasing functionals; its faces are indexed by standard
//! ordered set partitions of `[d]`, whose blocks record which coordinates are
//! tied.

use crate::error::{Error, Result};
use crate::kernel::cone::{Cone, Halfspace};
use crate::kernel::linalg::QVec;
use crate::kernel::rat::Rat;
use crate::kernel::spaces::{UPoint, WVector};
use crate::posets::Poset;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// A permutation of `[d]` in one-line notation. `images[i]` is the image of
/// `i`, zero-indexed internally; the serialized form is one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    /// From one-based one-line notation `(pi(1), ..., pi(d))`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let d = one_line.len();
        let mut seen = vec![false; d];
        for &v in one_line {
            if v < 1 || v > d || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: one_line.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn transposition(d: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= d && j <= d && i != j);
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn d(&self) -> usize {
        self.images.len()
    }

    /// One-based image of a one-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.d(), other.d());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.d()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Left action on `W`: position `i` of the result reads position
    /// `pi^{-1}(i)` of the representative; the result is re-canonicalized.
    pub fn act_w(&self, w: &WVector) -> WVector {
        assert_eq!(self.d(), w.d(), "dimension mismatch");
        let inv = self.inverse();
        let coords = w.coords();
        WVector::new(
            (0..self.d())
                .map(|i| coords[inv.images[i]].clone())
                .collect(),
        )
    }

    /// Right action on `U`: `(u pi)_i = u_{pi(i)}`.
    pub fn act_u(&self, u: &UPoint) -> UPoint {
        assert_eq!(self.d(), u.d(), "dimension mismatch");
        let coords = u.coords();
        UPoint::new(
            (0..self.d())
                .map(|i| coords[self.images[i]].clone())
                .collect(),
        )
    }

    pub fn all(d: usize) -> Vec<Permutation> {
        fn rec(d: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == d {
                out.push(Permutation {
                    images: cur.clone(),
                });
                return;
            }
            for v in 0..d {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(d, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(d, &mut Vec::new(), &mut vec![false; d], &mut out);
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.one_line().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// An ordered list of disjoint nonempty blocks covering `[d]`. Blocks are
/// kept internally sorted; elements are one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(d: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; d];
        let mut total = 0usize;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition {
                    d,
                    reason: "empty block".into(),
                });
            }
            for &x in b {
                if x < 1 || x > d || seen[x - 1] {
                    return Err(Error::InvalidPartition {
                        d,
                        reason: format!("element {x} repeated or out of range"),
                    });
                }
                seen[x - 1] = true;
                total += 1;
            }
        }
        if total != d {
            return Err(Error::InvalidPartition {
                d,
                reason: "blocks do not cover [d]".into(),
            });
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        Ok(OrderedSetPartition { blocks })
    }

    /// The finest standard partition `(1 | 2 | ... | d)`.
    pub fn finest(d: usize) -> Self {
        OrderedSetPartition {
            blocks: (1..=d).map(|i| vec![i]).collect(),
        }
    }

    /// The trivial partition `([d])`.
    pub fn trivial(d: usize) -> Self {
        OrderedSetPartition {
            blocks: vec![(1..=d).collect()],
        }
    }

    /// The standard partition of `[d]` whose type set is `type_set`
    /// (a strictly increasing subset of `[d-1]`).
    pub fn from_type(d: usize, type_set: &[usize]) -> Self {
        let mut blocks = Vec::new();
        let mut start = 1;
        for &t in type_set {
            blocks.push((start..=t).collect());
            start = t + 1;
        }
        blocks.push((start..=d).collect());
        OrderedSetPartition { blocks }
    }

    pub fn d(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Rank in the refinement order: `d - |S|`.
    pub fn rank(&self) -> usize {
        self.d() - self.num_blocks()
    }

    /// Every element of a block is smaller than every element of the next.
    pub fn is_standard(&self) -> bool {
        self.blocks
            .windows(2)
            .all(|w| w[0].last().unwrap() < w[1].first().unwrap())
    }

    /// Partial sums of block sizes, a subset of `[d-1]`.
    pub fn type_set(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0;
        for b in &self.blocks[..self.blocks.len() - 1] {
            acc += b.len();
            out.push(acc);
        }
        out
    }

    /// Is `self` a refinement of `other` (so `self <= other` in the order on
    /// ordered set partitions)?
    pub fn refines(&self, other: &OrderedSetPartition) -> bool {
        if self.d() != other.d() {
            return false;
        }
        let mut i = 0;
        for target in &other.blocks {
            let mut acc: Vec<usize> = Vec::new();
            while acc.len() < target.len() {
                if i >= self.blocks.len() {
                    return false;
                }
                acc.extend(self.blocks[i].iter().copied());
                i += 1;
            }
            acc.sort_unstable();
            if &acc != target {
                return false;
            }
        }
        i == self.blocks.len()
    }

    /// Blockwise image under a permutation; the block order is kept.
    pub fn apply(&self, g: &Permutation) -> OrderedSetPartition {
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| g.apply(x)).collect())
            .collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        OrderedSetPartition { blocks }
    }

    /// All ordered set partitions of `[d]`, deterministic order.
    pub fn enumerate_all(d: usize) -> Vec<OrderedSetPartition> {
        fn rec(remaining: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedSetPartition>) {
            if remaining.is_empty() {
                out.push(OrderedSetPartition {
                    blocks: acc.clone(),
                });
                return;
            }
            let n = remaining.len();
            for mask in 1u32..(1 << n) {
                let block: Vec<usize> = (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| remaining[i])
                    .collect();
                let rest: Vec<usize> = (0..n)
                    .filter(|&i| mask >> i & 1 == 0)
                    .map(|i| remaining[i])
                    .collect();
                acc.push(block);
                rec(&rest, acc, out);
                acc.pop();
            }
        }
        let all: Vec<usize> = (1..=d).collect();
        let mut out = Vec::new();
        rec(&all, &mut Vec::new(), &mut out);
        out.sort_by_key(|s| (s.num_blocks(), s.blocks.clone()));
        out
    }

    /// All standard ordered set partitions of `[d]`: one per subset of
    /// `[d-1]`, ordered by (number of blocks, type set).
    pub fn enumerate_standard(d: usize) -> Vec<OrderedSetPartition> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << (d - 1)) {
            let type_set: Vec<usize> = (1..d).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
            out.push(OrderedSetPartition::from_type(d, &type_set));
        }
        out.sort_by_key(|s| (s.num_blocks(), s.type_set()));
        out
    }

    /// Bar label, e.g. `123|45|6`.
    pub fn label(&self) -> String {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// The braid cone of an ordered set partition: coordinates tied within each
/// block, block values weakly increasing along the list.
pub fn osp_cone(s: &OrderedSetPartition) -> Cone {
    let d = s.d();
    let m = d - 1;
    // Reduced coordinates of e_i (one-based); e_1 reduces to zero because the
    // canonical representative pins the first coordinate.
    let unit = |i: usize| -> QVec {
        let mut v = vec![Rat::zero(); m];
        if i >= 2 {
            v[i - 2] = Rat::one();
        }
        v
    };
    // Reduced normal of the functional w_j - w_i.
    let diff =
        |j: usize, i: usize| -> QVec { unit(j).iter().zip(unit(i)).map(|(a, b)| a - &b).collect() };
    let mut hs: Vec<Halfspace> = Vec::new();
    for b in s.blocks() {
        for w in b.windows(2) {
            hs.push(Halfspace::eq(diff(w[1], w[0])));
        }
    }
    for pair in s.blocks().windows(2) {
        hs.push(Halfspace::geq(diff(pair[1][0], pair[0][0])));
    }
    Cone::from_halfspaces(m, &hs)
}

/// The fundamental chamber of weakly increasing functionals, a simplicial
/// cone with rays `f_1, ..., f_{d-1}`.
pub fn fundamental_chamber(d: usize) -> Result<Cone> {
    if d < 2 {
        return Err(Error::UnsupportedDimension {
            d,
            min: 2,
            max: usize::MAX,
        });
    }
    Ok(osp_cone(&OrderedSetPartition::finest(d)))
}

/// A face of the fundamental chamber with its indexing standard partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberFace {
    pub osp: OrderedSetPartition,
    pub cone: Cone,
}

impl ChamberFace {
    pub fn new(osp: OrderedSetPartition) -> Self {
        assert!(
            osp.is_standard(),
            "chamber faces are indexed by standard partitions"
        );
        let cone = osp_cone(&osp);
        ChamberFace { osp, cone }
    }

    /// Dimension of the face: one less than the number of blocks.
    pub fn dim(&self) -> usize {
        self.osp.num_blocks() - 1
    }
}

/// The carrier of a cone contained in the fundamental chamber: the
/// inclusion-minimal face of the chamber containing it, read off the runs of
/// equal coordinates of a relative interior point.
pub fn carrier(d: usize, t: &Cone) -> Result<ChamberFace> {
    let phi = fundamental_chamber(d)?;
    if !t.is_subset_of(&phi) {
        return Err(Error::NotInChamber);
    }
    let p = WVector::from_reduced(&t.relative_interior_point());
    let coords = p.coords();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 1..=d {
        if i > 1 && coords[i - 1] == coords[i - 2] {
            blocks.last_mut().unwrap().push(i);
        } else {
            blocks.push(vec![i]);
        }
    }
    let osp = OrderedSetPartition::new(d, blocks)?;
    Ok(ChamberFace::new(osp))
}

/// Order of the setwise stabilizer of the face: the product of the
/// factorials of the block sizes of the indexing partition.
pub fn stabilizer_order(face: &ChamberFace) -> u64 {
    face.osp
        .blocks()
        .iter()
        .map(|b| (1..=b.len() as u64).product::<u64>())
        .product()
}

/// Does `g` stabilize the face setwise (equivalently, preserve each block)?
pub fn stabilizer_contains(face: &ChamberFace, g: &Permutation) -> bool {
    face.osp.blocks().iter().all(|b| {
        let image: HashSet<usize> = b.iter().map(|&x| g.apply(x)).collect();
        b.iter().all(|x| image.contains(x))
    })
}

/// All elements of the stabilizer: blockwise permutations.
pub fn stabilizer_elements(face: &ChamberFace) -> Vec<Permutation> {
    let d = face.osp.d();
    let mut out = vec![Permutation::identity(d)];
    for b in face.osp.blocks() {
        let perms = Permutation::all(b.len());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for g in &out {
            for p in &perms {
                let mut images = g.images.clone();
                for (k, &x) in b.iter().enumerate() {
                    images[x - 1] = b[p.images[k]] - 1;
                }
                next.push(Permutation { images });
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    out
}

/// Canonical left-coset representatives of the stabilizer: the
/// lexicographically least one-line form in each coset, i.e. the
/// order-preserving blockwise bijections onto each partition of the same
/// composition type. There are `d!/m(face)` of them.
pub fn coset_reps(face: &ChamberFace) -> Vec<Permutation> {
    let d = face.osp.d();
    let sizes: Vec<usize> = face.osp.blocks().iter().map(|b| b.len()).collect();
    // Enumerate ordered set partitions with the given block sizes.
    let mut targets: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    let mut remaining: Vec<Vec<usize>> = vec![(1..=d).collect()];
    for &sz in &sizes {
        let mut next_targets = Vec::new();
        let mut next_remaining = Vec::new();
        for (t, rem) in targets.iter().zip(&remaining) {
            let n = rem.len();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != sz {
                    continue;
                }
                let block: Vec<usize> = (0..n)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| rem[i])
                    .collect();
                let rest: Vec<usize> = (0..n)
                    .filter(|&i| mask >> i & 1 == 0)
                    .map(|i| rem[i])
                    .collect();
                let mut t = t.clone();
                t.push(block);
                next_targets.push(t);
                next_remaining.push(rest);
            }
        }
        targets = next_targets;
        remaining = next_remaining;
    }
    let mut out: Vec<Permutation> = targets
        .into_iter()
        .map(|blocks| {
            let mut images = vec![0usize; d];
            for (src, dst) in face.osp.blocks().iter().zip(&blocks) {
                for (&s, &t) in src.iter().zip(dst) {
                    images[s - 1] = t - 1;
                }
            }
            Permutation { images }
        })
        .collect();
    out.sort();
    out
}

/// The unique `(g, w0)` with `w0` the weakly increasing representative of the
/// orbit of `w` and `w = g w0`; ties are broken by original position so the
/// result is deterministic.
pub fn chamber_of_point(w: &WVector) -> (Permutation, WVector) {
    let d = w.d();
    let coords = w.coords();
    let mut idx: Vec<usize> = (0..d).collect();
    idx.sort_by(|&a, &b| coords[a].cmp(&coords[b]).then(a.cmp(&b)));
    let sorted: Vec<Rat> = idx.iter().map(|&i| coords[i].clone()).collect();
    let g = Permutation { images: idx };
    (g, WVector::new(sorted))
}

/// The refinement poset of all ordered set partitions of `[d]`, graded of
/// rank `d-1` by `d - |S|`.
pub fn osp_poset(d: usize) -> Result<Poset> {
    if !(2..=8).contains(&d) {
        return Err(Error::UnsupportedDimension { d, min: 2, max: 8 });
    }
    let elems = OrderedSetPartition::enumerate_all(d);
    let labels: Vec<String> = elems.iter().map(|s| s.label()).collect();
    Poset::from_order(labels, |i, j| elems[i].refines(&elems[j]))
}

/// The induced subposet of standard ordered set partitions.
pub fn std_osp_poset(d: usize) -> Result<Poset> {
    if !(2..=8).contains(&d) {
        return Err(Error::UnsupportedDimension { d, min: 2, max: 8 });
    }
    let elems = OrderedSetPartition::enumerate_standard(d);
    let labels: Vec<String> = elems.iter().map(|s| s.label()).collect();
    Poset::from_order(labels, |i, j| elems[i].refines(&elems[j]))
}

/// Seam for other finite reflection groups. Type A is the only
/// implementation; the surface is what the fan and poset machinery consumes.
pub trait ReflectionGroup {
    type Element: Clone + Eq + std::hash::Hash + Ord;

    fn ambient(&self) -> usize;
    fn order(&self) -> u64;
    fn identity(&self) -> Self::Element;
    fn elements(&self) -> Vec<Self::Element>;
    fn compose(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    fn chamber(&self) -> &Cone;
    fn chamber_face_count(&self) -> usize;
    fn face_cone(&self, face: usize) -> &Cone;
    fn face_dim(&self, face: usize) -> usize;
    fn carrier_id(&self, t: &Cone) -> Result<usize>;
    fn stabilizer_order_of(&self, face: usize) -> u64;
    fn coset_reps_of(&self, face: usize) -> Vec<Self::Element>;
    fn act_cone(&self, g: &Self::Element, c: &Cone) -> Cone;
}

/// The type-A reflection group on `W_{d-1}` with its fundamental chamber and
/// face bookkeeping precomputed.
pub struct TypeA {
    d: usize,
    chamber: Cone,
    faces: Vec<ChamberFace>,
}

impl TypeA {
    pub fn new(d: usize) -> Result<Self> {
        let chamber = fundamental_chamber(d)?;
        let faces = OrderedSetPartition::enumerate_standard(d)
            .into_iter()
            .map(ChamberFace::new)
            .collect();
        Ok(TypeA { d, chamber, faces })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> u64 {
        (1..=self.d as u64).product()
    }

    pub fn elements(&self) -> Vec<Permutation> {
        Permutation::all(self.d)
    }

    pub fn chamber(&self) -> &Cone {
        &self.chamber
    }

    /// All faces of the chamber, ordered by (dimension, type set).
    pub fn faces(&self) -> &[ChamberFace] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &ChamberFace {
        &self.faces[id]
    }

    pub fn face_id(&self, osp: &OrderedSetPartition) -> Option<usize> {
        self.faces.iter().position(|f| &f.osp == osp)
    }

    pub fn carrier_id(&self, t: &Cone) -> Result<usize> {
        let f = carrier(self.d, t)?;
        Ok(self
            .face_id(&f.osp)
            .expect("standard partition indexes a face"))
    }

    /// Action on a reduced `W`-cone: generators move by the left action,
    /// halfspace normals by the zero-sum lift of the same permutation.
    pub fn act_cone(&self, g: &Permutation, c: &Cone) -> Cone {
        assert_eq!(c.space_dim(), self.d - 1);
        let act_vec = |v: &[Rat]| -> QVec {
            let w = WVector::from_reduced(v);
            g.act_w(&w).reduced()
        };
        let inv = g.inverse();
        let act_normal = move |n: &[Rat]| -> QVec {
            let head: Rat = -n.iter().cloned().sum::<Rat>();
            let mut lifted = Vec::with_capacity(self.d);
            lifted.push(head);
            lifted.extend(n.iter().cloned());
            let permuted: Vec<Rat> = (0..self.d).map(|i| lifted[inv.images[i]].clone()).collect();
            permuted[1..].to_vec()
        };
        c.remap(act_vec, act_normal)
    }
}

impl ReflectionGroup for TypeA {
    type Element = Permutation;

    fn ambient(&self) -> usize {
        self.d
    }

    fn order(&self) -> u64 {
        TypeA::order(self)
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.d)
    }

    fn elements(&self) -> Vec<Permutation> {
        TypeA::elements(self)
    }

    fn compose(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b)
    }

    fn inverse(&self, a: &Permutation) -> Permutation {
        a.inverse()
    }

    fn chamber(&self) -> &Cone {
        &self.chamber
    }

    fn chamber_face_count(&self) -> usize {
        self.faces.len()
    }

    fn face_cone(&self, face: usize) -> &Cone {
        &self.faces[face].cone
    }

    fn face_dim(&self, face: usize) -> usize {
        self.faces[face].dim()
    }

    fn carrier_id(&self, t: &Cone) -> Result<usize> {
        TypeA::carrier_id(self, t)
    }

    fn stabilizer_order_of(&self, face: usize) -> u64 {
        stabilizer_order(&self.faces[face])
    }

    fn coset_reps_of(&self, face: usize) -> Vec<Permutation> {
        coset_reps(&self.faces[face])
    }

    fn act_cone(&self, g: &Permutation, c: &Cone) -> Cone {
        TypeA::act_cone(self, g, c)
    }
}
