//! V-representation polytopes in an affine slice: exact hulls, face lattices,
//! normal fans, perpendicular spaces, and f-vectors.
//!
//! A polytope lives in `U = { x : [1, x] = s }` and is stored by its true
//! vertex list. The affine chart drops the first coordinate; the hull and the
//! facets come from the double description of the cone over the lifted
//! points, and the face lattice is the intersection closure of the facet
//! vertex sets.

use crate::error::{Error, Result};
use crate::kernel::cone::{Cone, Halfspace};
use crate::kernel::linalg::{self, dot, nullspace, QVec};
use crate::kernel::rat::Rat;
use crate::kernel::spaces::{UPoint, WVector};
use crate::posets::Poset;
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    d: usize,
    vertices: Vec<UPoint>,
}

/// A face, recorded by the sorted indices of the vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub verts: Vec<usize>,
    pub dim: usize,
}

/// The poset of nonempty faces, graded by dimension. The top face is the
/// polytope itself; the atoms are the vertices. The empty face is excluded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    pub covers: Vec<(usize, usize)>,
}

/// Normal cones in reduced `W` coordinates, one per lattice face.
#[derive(Clone, Debug)]
pub struct NormalFan {
    pub cones: Vec<Cone>,
}

/// A basis of `{ w : <w, x> = <w, y> for all x, y in P }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace {
    pub d: usize,
    pub basis: Vec<WVector>,
}

impl LinearSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The subspace as a lineality-only cone in reduced coordinates.
    pub fn as_cone(&self) -> Cone {
        let lines: Vec<QVec> = self.basis.iter().map(WVector::reduced).collect();
        Cone::from_generators(self.d - 1, &[], &lines)
    }
}

impl Polytope {
    /// Exact hull: drops duplicate points and points that are convex
    /// combinations of the others.
    pub fn hull(points: &[UPoint]) -> Result<Polytope> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyInput("hull of no points"));
        };
        let d = first.d();
        let s = first.slice_sum();
        for p in points {
            if p.d() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: p.d(),
                });
            }
            if p.slice_sum() != s {
                return Err(Error::Invalid(format!(
                    "points lie in different slices: [1,x] = {} vs {}",
                    s,
                    p.slice_sum()
                )));
            }
        }
        let mut dedup: Vec<UPoint> = Vec::new();
        let mut seen = HashSet::new();
        for p in points {
            if seen.insert(p.coords().to_vec()) {
                dedup.push(p.clone());
            }
        }
        if dedup.len() == 1 {
            return Ok(Polytope { d, vertices: dedup });
        }
        // Lift each point to (1, chart(u)) and take extreme rays of the cone
        // over the lifted points; those are exactly the vertices.
        let lifted: Vec<QVec> = dedup.iter().map(lift).collect();
        let cone = Cone::from_generators(d, &lifted, &[]);
        let mut vertices: Vec<UPoint> = cone
            .rays()
            .iter()
            .map(|r| {
                let h = &r[0];
                debug_assert!(
                    h.is_positive(),
                    "cone over a polytope is pointed above height 0"
                );
                let chart: QVec = r[1..].iter().map(|x| x / h).collect();
                unlift(&s, &chart)
            })
            .collect();
        vertices.sort_by(|a, b| a.coords().cmp(b.coords()));
        Ok(Polytope { d, vertices })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn slice_sum(&self) -> Rat {
        self.vertices[0].slice_sum()
    }

    pub fn vertices(&self) -> &[UPoint] {
        &self.vertices
    }

    pub fn vertex_index(&self, p: &UPoint) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        let rows = self.difference_rows(0);
        linalg::rank(&rows, self.d - 1)
    }

    /// Chart differences `chart(v_j) - chart(v_base)` for all `j`.
    fn difference_rows(&self, base: usize) -> Vec<QVec> {
        let b = chart(&self.vertices[base]);
        self.vertices
            .iter()
            .map(|v| linalg::sub(&chart(v), &b))
            .collect()
    }

    /// Face lattice by facet enumeration plus intersection closure of the
    /// facet vertex sets.
    pub fn face_lattice(&self) -> FaceLattice {
        let n = self.vertices.len();
        let top: Vec<usize> = (0..n).collect();
        if n == 1 {
            return FaceLattice {
                faces: vec![Face { verts: top, dim: 0 }],
                covers: vec![],
            };
        }
        let lifted: Vec<QVec> = self.vertices.iter().map(lift).collect();
        let cone = Cone::from_generators(self.d, &lifted, &[]);
        let facet_sets: Vec<Vec<usize>> = cone
            .inequalities()
            .iter()
            .map(|normal| {
                (0..n)
                    .filter(|&j| dot(normal, &lifted[j]).is_zero())
                    .collect::<Vec<usize>>()
            })
            .collect();
        // Intersection closure, seeded with the polytope itself.
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        seen.insert(top.clone());
        queue.push_back(top);
        while let Some(f) = queue.pop_front() {
            for fs in &facet_sets {
                let meet: Vec<usize> = f.iter().copied().filter(|j| fs.contains(j)).collect();
                if !meet.is_empty() && seen.insert(meet.clone()) {
                    queue.push_back(meet);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|verts| {
                let dim = self.face_dim(&verts);
                Face { verts, dim }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.verts).cmp(&(b.dim, &b.verts)));
        let mut covers = Vec::new();
        for (i, fi) in faces.iter().enumerate() {
            for (j, fj) in faces.iter().enumerate() {
                if fj.dim == fi.dim + 1 && subset(&fi.verts, &fj.verts) {
                    covers.push((i, j));
                }
            }
        }
        FaceLattice { faces, covers }
    }

    fn face_dim(&self, verts: &[usize]) -> usize {
        let b = chart(&self.vertices[verts[0]]);
        let rows: Vec<QVec> = verts
            .iter()
            .map(|&j| linalg::sub(&chart(&self.vertices[j]), &b))
            .collect();
        linalg::rank(&rows, self.d - 1)
    }

    /// The normal cone of one face: functionals maximized on it.
    pub fn normal_cone(&self, verts: &[usize]) -> Cone {
        let m = self.d - 1;
        let f0 = verts[0];
        let mut hs: Vec<Halfspace> = Vec::new();
        for &f in &verts[1..] {
            hs.push(Halfspace::eq(self.pair_diff_normal(f, f0)));
        }
        for j in 0..self.vertices.len() {
            if !verts.contains(&j) {
                hs.push(Halfspace::geq(self.pair_diff_normal(f0, j)));
            }
        }
        Cone::from_halfspaces(m, &hs)
    }

    /// Reduced normal of the functional `w -> <w, v_a - v_b>`. The difference
    /// has zero coordinate sum, so dropping the first coordinate loses
    /// nothing.
    fn pair_diff_normal(&self, a: usize, b: usize) -> QVec {
        let va = self.vertices[a].coords();
        let vb = self.vertices[b].coords();
        va[1..].iter().zip(&vb[1..]).map(|(x, y)| x - y).collect()
    }

    /// All normal cones, aligned with the faces of the lattice.
    pub fn normal_fan(&self, lattice: &FaceLattice) -> NormalFan {
        NormalFan {
            cones: lattice
                .faces
                .iter()
                .map(|f| self.normal_cone(&f.verts))
                .collect(),
        }
    }

    /// Basis of the perpendicular space.
    pub fn perp_space(&self) -> LinearSubspace {
        let rows = self.difference_rows(0);
        let basis = nullspace(&rows, self.d - 1)
            .into_iter()
            .map(|r| WVector::from_reduced(&r))
            .collect();
        LinearSubspace { d: self.d, basis }
    }
}

/// Serializable form: `{"d": .., "slice_sum": .., "vertices": [[..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub d: usize,
    pub slice_sum: Rat,
    pub vertices: Vec<Vec<Rat>>,
}

impl From<&Polytope> for PolytopeDoc {
    fn from(p: &Polytope) -> Self {
        PolytopeDoc {
            d: p.d(),
            slice_sum: p.slice_sum(),
            vertices: p.vertices().iter().map(|v| v.coords().to_vec()).collect(),
        }
    }
}

impl TryFrom<&PolytopeDoc> for Polytope {
    type Error = Error;

    fn try_from(doc: &PolytopeDoc) -> Result<Polytope> {
        let points: Vec<UPoint> = doc
            .vertices
            .iter()
            .map(|v| {
                if v.len() != doc.d {
                    return Err(Error::DimensionMismatch {
                        expected: doc.d,
                        got: v.len(),
                    });
                }
                Ok(UPoint::new(v.clone()))
            })
            .collect::<Result<_>>()?;
        for p in &points {
            if p.slice_sum() != doc.slice_sum {
                return Err(Error::Invalid(format!(
                    "vertex {p:?} has coordinate sum {}, expected {}",
                    p.slice_sum(),
                    doc.slice_sum
                )));
            }
        }
        Polytope::hull(&points)
    }
}

/// Affine chart of the slice: drop the first coordinate.
fn chart(p: &UPoint) -> QVec {
    p.coords()[1..].to_vec()
}

fn unlift(slice_sum: &Rat, chart: &[Rat]) -> UPoint {
    let partial: Rat = chart.iter().cloned().sum();
    let mut coords = Vec::with_capacity(chart.len() + 1);
    coords.push(slice_sum - &partial);
    coords.extend(chart.iter().cloned());
    UPoint::new(coords)
}

fn lift(p: &UPoint) -> QVec {
    let mut v = Vec::with_capacity(p.d());
    v.push(Rat::one());
    v.extend(chart(p));
    v
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.faces[self.top()].dim
    }

    pub fn face_index(&self, verts: &[usize]) -> Option<usize> {
        let mut key = verts.to_vec();
        key.sort_unstable();
        self.faces.iter().position(|f| f.verts == key)
    }

    /// Faces of a given dimension.
    pub fn faces_of_dim(&self, dim: usize) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.faces[i].dim == dim)
            .collect()
    }

    pub fn to_poset(&self) -> Poset {
        let labels = self
            .faces
            .iter()
            .map(|f| {
                let verts: Vec<String> = f.verts.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", verts.join(","))
            })
            .collect();
        Poset::from_covers(labels, self.covers.clone()).expect("face lattices are acyclic")
    }
}

/// Face counts by dimension; the flag prepends a count of one for the empty
/// face on display and serialization.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: Vec<u64>,
    pub include_empty: bool,
}

impl FVector {
    pub fn entries(&self) -> Vec<u64> {
        if self.include_empty {
            let mut v = vec![1];
            v.extend(&self.counts);
            v
        } else {
            self.counts.clone()
        }
    }

    /// The alternating sum over nonempty faces equals one.
    pub fn euler_relation_holds(&self) -> bool {
        let mut acc: i64 = 0;
        for (i, &c) in self.counts.iter().enumerate() {
            let signed = c as i64;
            acc += if i % 2 == 0 { signed } else { -signed };
        }
        acc == 1
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.entries().iter().map(|c| c.to_string()).collect();
        write!(f, "({})", entries.join(","))
    }
}

pub fn f_vector(lattice: &FaceLattice, include_empty: bool) -> FVector {
    let e = lattice.dim();
    let mut counts = vec![0u64; e + 1];
    for f in &lattice.faces {
        counts[f.dim] += 1;
    }
    FVector {
        counts,
        include_empty,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::cone::{Location, Sense};
    use crate::kernel::rat::rat;
    use crate::posets::{diamond_check, poset_iso, DEFAULT_ISO_BUDGET};
    use crate::typea::Permutation;

    fn running_segment() -> Polytope {
        Polytope::hull(&[
            UPoint::from_ints(&[1, 2, 6, 8]),
            UPoint::from_ints(&[0, 4, 5, 8]),
        ])
        .unwrap()
    }

    #[test]
    fn hull_keeps_both_endpoints() {
        let s = running_segment();
        assert_eq!(s.vertices().len(), 2);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.slice_sum(), rat(17, 1));
    }

    #[test]
    fn hull_drops_midpoint() {
        let pts = [
            UPoint::from_ints(&[1, 5, 6]),
            UPoint::from_ints(&[2, 3, 7]),
            UPoint::new(vec![rat(3, 2), rat(4, 1), rat(13, 2)]),
        ];
        let l = Polytope::hull(&pts).unwrap();
        assert_eq!(l.vertices().len(), 2);
        assert!(l.vertex_index(&pts[2]).is_none());
        // Single point.
        let p = Polytope::hull(&[UPoint::from_ints(&[1, 2, 3])]).unwrap();
        assert_eq!(p.vertices().len(), 1);
        assert_eq!(p.dim(), 0);
        assert!(Polytope::hull(&[]).is_err());
        // Mixed slices rejected.
        assert!(
            Polytope::hull(&[UPoint::from_ints(&[1, 2, 3]), UPoint::from_ints(&[1, 2, 4])])
                .is_err()
        );
    }

    #[test]
    fn segment_lattice() {
        let s = running_segment();
        let fl = s.face_lattice();
        assert_eq!(fl.faces.len(), 3);
        assert_eq!(f_vector(&fl, false).entries(), vec![2, 1]);
        assert!(f_vector(&fl, false).euler_relation_holds());
        assert_eq!(fl.covers.len(), 2);
    }

    #[test]
    fn simplex_lattice_is_truncated_boolean() {
        // Standard triangle Conv{e1, e2, e3} in the slice sum = 1.
        let simplex = Polytope::hull(&[
            UPoint::from_ints(&[1, 0, 0]),
            UPoint::from_ints(&[0, 1, 0]),
            UPoint::from_ints(&[0, 0, 1]),
        ])
        .unwrap();
        let fl = simplex.face_lattice();
        assert_eq!(f_vector(&fl, false).entries(), vec![3, 3, 1]);
        // Compare with the truncated Boolean poset on three atoms.
        let subsets: Vec<Vec<usize>> = vec![
            vec![1],
            vec![2],
            vec![3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
            vec![1, 2, 3],
        ];
        let labels = subsets.iter().map(|s| format!("{s:?}")).collect();
        let boolean = Poset::from_order(labels, |i, j| {
            subsets[i].iter().all(|x| subsets[j].contains(x))
        })
        .unwrap();
        assert!(poset_iso(&fl.to_poset(), &boolean, DEFAULT_ISO_BUDGET).is_iso());
        assert!(diamond_check(&fl.to_poset()).unwrap());
    }

    #[test]
    fn hexagon_from_orbit_points() {
        // Orbit of (1,2,4) under S_3: a hexagon with f = (6,6,1).
        let base = UPoint::from_ints(&[1, 2, 4]);
        let pts: Vec<UPoint> = Permutation::all(3).iter().map(|g| g.act_u(&base)).collect();
        let hex = Polytope::hull(&pts).unwrap();
        assert_eq!(hex.vertices().len(), 6);
        let fl = hex.face_lattice();
        assert_eq!(f_vector(&fl, false).entries(), vec![6, 6, 1]);
        assert!(f_vector(&fl, false).euler_relation_holds());
        assert!(diamond_check(&fl.to_poset()).unwrap());
    }

    #[test]
    fn perp_space_of_segment() {
        let s = running_segment();
        let perp = s.perp_space();
        assert_eq!(perp.dim(), 2);
        // (0,0,0,1) and (0,1,2,2) span it.
        let c = perp.as_cone();
        assert!(c.contains(&WVector::from_ints(&[0, 0, 0, 1]).reduced()));
        assert!(c.contains(&WVector::from_ints(&[0, 1, 2, 2]).reduced()));
        assert_eq!(c.dim(), 2);
        // Full-dimensional polytope: zero perpendicular space.
        let simplex = Polytope::hull(&[
            UPoint::from_ints(&[1, 0, 0]),
            UPoint::from_ints(&[0, 1, 0]),
            UPoint::from_ints(&[0, 0, 1]),
        ])
        .unwrap();
        assert_eq!(simplex.perp_space().dim(), 0);
        // The line L: one-dimensional perpendicular space spanned by (0,1,2).
        let l = Polytope::hull(&[UPoint::from_ints(&[1, 5, 6]), UPoint::from_ints(&[2, 3, 7])])
            .unwrap();
        let perp = l.perp_space();
        assert_eq!(perp.dim(), 1);
        assert_eq!(perp.basis[0], WVector::from_ints(&[0, 1, 2]));
    }

    #[test]
    fn segment_normal_fan_has_three_cones() {
        let s = running_segment();
        let fl = s.face_lattice();
        let fan = s.normal_fan(&fl);
        assert_eq!(fan.cones.len(), 3);
        // The top face's cone is the perpendicular space as lineality.
        let top = fl.top();
        let center = &fan.cones[top];
        assert_eq!(center, &s.perp_space().as_cone());
        assert_eq!(center.dim(), 2);
        assert!(!center.is_pointed());
        // The two vertex cones are halfspaces cut by the center plane.
        for i in fl.faces_of_dim(0) {
            assert_eq!(fan.cones[i].dim(), 3);
            assert_eq!(fan.cones[i].lineality().len(), 2);
        }
    }

    #[test]
    fn simplex_normal_cones_match_tied_pattern() {
        // For the standard simplex, the normal cone at the face spanned by a
        // subset B of vertices is cut out by y_i <= y_j (i outside B, j in B)
        // with ties inside B.
        let d = 4;
        let verts: Vec<UPoint> = (0..d)
            .map(|i| {
                let mut c = vec![0i64; d];
                c[i] = 1;
                UPoint::from_ints(&c)
            })
            .collect();
        let simplex = Polytope::hull(&verts).unwrap();
        let fl = simplex.face_lattice();
        let fan = simplex.normal_fan(&fl);
        let unit = |i: usize| -> QVec {
            let mut v = vec![Rat::zero(); d - 1];
            if i >= 2 {
                v[i - 2] = Rat::one();
            }
            v
        };
        for (f, cone) in fl.faces.iter().zip(&fan.cones) {
            let members: Vec<usize> = f
                .verts
                .iter()
                .map(|&vi| {
                    simplex.vertices()[vi]
                        .coords()
                        .iter()
                        .position(|c| c.is_positive())
                        .unwrap()
                        + 1
                })
                .collect();
            let mut hs = Vec::new();
            for w in members.windows(2) {
                hs.push(Halfspace {
                    normal: linalg::sub(&unit(w[1]), &unit(w[0])),
                    sense: Sense::Eq,
                });
            }
            for i in 1..=d {
                if !members.contains(&i) {
                    hs.push(Halfspace {
                        normal: linalg::sub(&unit(members[0]), &unit(i)),
                        sense: Sense::Geq,
                    });
                }
            }
            let expected = Cone::from_halfspaces(d - 1, &hs);
            assert_eq!(cone, &expected);
        }
    }

    #[test]
    fn face_fan_order_reversal() {
        let s = running_segment();
        let fl = s.face_lattice();
        let fan = s.normal_fan(&fl);
        for (i, fi) in fl.faces.iter().enumerate() {
            for (j, fj) in fl.faces.iter().enumerate() {
                let inc = subset(&fi.verts, &fj.verts);
                let rev = fan.cones[j].is_subset_of(&fan.cones[i]);
                assert_eq!(inc, rev);
            }
            // Codimension matches dimension.
            assert_eq!(3 - fan.cones[i].dim(), fl.faces[i].dim);
        }
    }

    #[test]
    fn permutohedron_vertex_cone_is_chamber() {
        let base = UPoint::from_ints(&[1, 2, 4]);
        let pts: Vec<UPoint> = Permutation::all(3).iter().map(|g| g.act_u(&base)).collect();
        let hex = Polytope::hull(&pts).unwrap();
        let idx = hex.vertex_index(&base).unwrap();
        let cone = hex.normal_cone(&[idx]);
        assert_eq!(cone, crate::typea::fundamental_chamber(3).unwrap());
        assert_eq!(
            cone.locate(&WVector::from_ints(&[0, 1, 2]).reduced()),
            Location::Interior
        );
    }

    #[test]
    fn normal_fan_chambers_dissect() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        // Vertex cones of a normal fan cover the space with disjoint
        // interiors, checked exactly pairwise and on random probes.
        let hexagon = {
            let pts: Vec<UPoint> = Permutation::all(3)
                .iter()
                .map(|g| g.act_u(&UPoint::from_ints(&[1, 2, 4])))
                .collect();
            Polytope::hull(&pts).unwrap()
        };
        let simplex = Polytope::hull(&[
            UPoint::from_ints(&[1, 0, 0, 0]),
            UPoint::from_ints(&[0, 1, 0, 0]),
            UPoint::from_ints(&[0, 0, 1, 0]),
            UPoint::from_ints(&[0, 0, 0, 1]),
        ])
        .unwrap();
        let l = Polytope::hull(&[UPoint::from_ints(&[1, 5, 6]), UPoint::from_ints(&[2, 3, 7])])
            .unwrap();
        let mut rng = StdRng::seed_from_u64(5);
        for p in [running_segment(), hexagon, simplex, l] {
            let m = p.d() - 1;
            let fl = p.face_lattice();
            let chambers: Vec<Cone> = fl
                .faces_of_dim(0)
                .iter()
                .map(|&i| p.normal_cone(&fl.faces[i].verts))
                .collect();
            for (i, a) in chambers.iter().enumerate() {
                assert_eq!(a.dim(), m);
                for b in &chambers[i + 1..] {
                    // Interiors are disjoint: the canonical interior point of
                    // the meet is interior to at most one side.
                    let meet = a.intersect(b).unwrap();
                    let x = meet.relative_interior_point();
                    assert!(
                        a.locate(&x) != Location::Interior || b.locate(&x) != Location::Interior
                    );
                }
            }
            for _ in 0..50 {
                let probe: QVec = (0..m)
                    .map(|_| rat(rng.gen_range(-30..=30), rng.gen_range(1..=4)))
                    .collect();
                let hits = chambers.iter().filter(|c| c.contains(&probe)).count();
                let interior = chambers
                    .iter()
                    .filter(|c| c.locate(&probe) == Location::Interior)
                    .count();
                assert!(hits >= 1, "probe uncovered");
                assert!(interior <= 1, "probe interior to several chambers");
            }
        }
    }

    #[test]
    fn polytope_doc_round_trip() {
        let s = running_segment();
        let doc = PolytopeDoc::from(&s);
        let json = serde_json::to_string(&doc).unwrap();
        let back: PolytopeDoc = serde_json::from_str(&json).unwrap();
        let p = Polytope::try_from(&back).unwrap();
        assert_eq!(p, s);
        // Wrong slice sum is rejected.
        let mut bad = PolytopeDoc::from(&s);
        bad.slice_sum = rat(1, 1);
        assert!(Polytope::try_from(&bad).is_err());
    }

    #[test]
    fn point_f_vector() {
        let p = Polytope::hull(&[UPoint::from_ints(&[1, 2, 3])]).unwrap();
        let fl = p.face_lattice();
        let fv = f_vector(&fl, false);
        assert_eq!(fv.entries(), vec![1]);
        let fv = f_vector(&fl, true);
        assert_eq!(fv.entries(), vec![1, 1]);
        assert_eq!(format!("{:?}", fv), "(1,1)");
    }
}
