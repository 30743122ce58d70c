//! Placement checks and the (refined) fundamental fan.
//!
//! For a placed, appropriate polytope the normal fan slices the fundamental
//! chamber into the fundamental fan. Its cones are in bijection with the
//! pairs of a normal cone and a chamber face whose relative interiors meet;
//! grouping by the carrier face gives the refined decomposition.

use crate::error::{Error, Result};
use crate::kernel::cone::{Cone, Location};
use crate::kernel::spaces::WVector;
use crate::polytope::{FaceLattice, NormalFan, Polytope};
use crate::posets::{Poset, SigmaPoset};
use crate::typea::{fundamental_chamber, OrderedSetPartition, TypeA};
use std::collections::BTreeMap;

/// One cone of the fundamental fan: the intersection of the normal cone of
/// the `source` face with the chamber face `carrier`, which is its
/// inclusion-minimal containing face.
#[derive(Clone, Debug)]
pub struct FFanCone {
    pub cone: Cone,
    pub carrier: usize,
    pub source: usize,
}

/// A pair of a face of the polytope and a chamber face whose open cones
/// intersect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPair {
    pub sigma: usize,
    pub phi: usize,
}

/// Is some functional of the open fundamental chamber constant on the
/// polytope? Returns such a witness: the relative interior point of
/// `perp(P) /\ chamber` when that meets the open chamber.
pub fn is_placed(p: &Polytope) -> Result<Option<WVector>> {
    let phi = fundamental_chamber(p.d())?;
    let t = p.perp_space().as_cone().intersect(&phi)?;
    let x = t.relative_interior_point();
    Ok((phi.locate(&x) == Location::Interior).then(|| WVector::from_reduced(&x)))
}

/// Does the polytope lie in the open chamber of the slice? It is enough to
/// check that every vertex has strictly increasing coordinates.
pub fn is_appropriate(p: &Polytope) -> bool {
    p.vertices()
        .iter()
        .all(|v| v.coords().windows(2).all(|w| w[0] < w[1]))
}

/// Exact test for a nonempty intersection of relative interiors: when it is
/// nonempty it equals the relative interior of the closed intersection, so
/// the canonical interior point decides.
pub fn open_meet(a: &Cone, b: &Cone) -> Result<Option<Cone>> {
    let t = a.intersect(b)?;
    let x = t.relative_interior_point();
    let hit = a.locate(&x) == Location::Interior && b.locate(&x) == Location::Interior;
    Ok(hit.then_some(t))
}

/// The fundamental fan of a placed, appropriate polytope, together with the
/// face lattice and normal fan it was built from.
pub struct FundamentalFan {
    d: usize,
    pub witness: WVector,
    pub lattice: FaceLattice,
    pub fan: NormalFan,
    pub cones: Vec<FFanCone>,
}

/// The face poset of the fundamental fan. `items[i]` is the index of the
/// corresponding cone in the originating [`FundamentalFan`]; `coranks[i]` is
/// its codimension in `W`.
#[derive(Clone, Debug)]
pub struct ZPoset {
    pub poset: Poset,
    pub coranks: Vec<usize>,
    pub items: Vec<usize>,
}

impl FundamentalFan {
    /// Rejects non-placed or non-appropriate input with a diagnostic.
    pub fn build(p: &Polytope, group: &TypeA) -> Result<FundamentalFan> {
        if p.d() != group.d() {
            return Err(Error::DimensionMismatch {
                expected: group.d(),
                got: p.d(),
            });
        }
        if let Some(v) = p
            .vertices()
            .iter()
            .find(|v| !v.coords().windows(2).all(|w| w[0] < w[1]))
        {
            return Err(Error::NotAppropriate {
                vertex: format!("{v:?}"),
            });
        }
        let witness = is_placed(p)?.ok_or(Error::NotPlaced)?;
        let lattice = p.face_lattice();
        let fan = p.normal_fan(&lattice);
        let mut cones = Vec::new();
        for (source, sigma) in fan.cones.iter().enumerate() {
            for (carrier, face) in group.faces().iter().enumerate() {
                if let Some(t) = open_meet(sigma, &face.cone)? {
                    debug_assert_eq!(group.carrier_id(&t).unwrap(), carrier);
                    cones.push(FFanCone {
                        cone: t,
                        carrier,
                        source,
                    });
                }
            }
        }
        Ok(FundamentalFan {
            d: p.d(),
            witness,
            lattice,
            fan,
            cones,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The intersecting pairs, aligned one-to-one with the fan cones.
    pub fn omega(&self) -> Vec<OmegaPair> {
        self.cones
            .iter()
            .map(|c| OmegaPair {
                sigma: c.source,
                phi: c.carrier,
            })
            .collect()
    }

    /// Codimension of a cone in `W`.
    pub fn corank(&self, i: usize) -> usize {
        (self.d - 1) - self.cones[i].cone.dim()
    }

    /// Partition of the fan by carrier face; every chamber face appears.
    pub fn refined(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, c) in self.cones.iter().enumerate() {
            cells.entry(c.carrier).or_default().push(i);
        }
        cells
    }

    /// Counts of cones per codimension in one refined cell.
    pub fn cell_codim_counts(&self, cell: &[usize]) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for &i in cell {
            *out.entry(self.corank(i)).or_default() += 1;
        }
        out
    }

    /// Number of codimension-`k` cones of the whole fan.
    pub fn f_codim(&self, k: usize) -> u64 {
        (0..self.cones.len())
            .filter(|&i| self.corank(i) == k)
            .count() as u64
    }

    /// The face poset of the fan, ordered by inclusion of cones.
    pub fn zposet(&self, group: &TypeA) -> ZPoset {
        let labels: Vec<String> = self
            .cones
            .iter()
            .enumerate()
            .map(|(i, c)| format!("t{}:{}", i, group.face(c.carrier).osp.label()))
            .collect();
        let poset = Poset::from_order(labels, |i, j| {
            self.cones[i].cone.is_subset_of(&self.cones[j].cone)
        })
        .expect("cone inclusion is a partial order");
        let coranks = (0..self.cones.len()).map(|i| self.corank(i)).collect();
        ZPoset {
            poset,
            coranks,
            items: (0..self.cones.len()).collect(),
        }
    }

    /// The fan poset with carrier tags: the face poset of the refined
    /// fundamental fan.
    pub fn rposet(&self, group: &TypeA) -> SigmaPoset {
        let z = self.zposet(group);
        let carriers: Vec<OrderedSetPartition> = self
            .cones
            .iter()
            .map(|c| group.face(c.carrier).osp.clone())
            .collect();
        SigmaPoset::new(self.d, z.poset, carriers).expect("carriers are standard")
    }
}

/// Indices surviving the combinatorial pruning: drop every corank-1 element
/// covered by exactly one maximal element, and everything below such an
/// element. What remains is the cell of the full chamber.
pub fn prune_indices(poset: &Poset, coranks: &[usize]) -> Vec<usize> {
    let boundary: Vec<usize> = (0..poset.len())
        .filter(|&x| coranks[x] == 1 && poset.upper_covers(x).len() == 1)
        .collect();
    (0..poset.len())
        .filter(|&x| !boundary.contains(&x) && !boundary.iter().any(|&b| poset.lt(x, b)))
        .collect()
}

/// Purely combinatorial form of the determination result: reconstruct the
/// full-chamber cell of the fan poset without using any geometry.
pub fn prune_to_phi_cell(z: &ZPoset) -> ZPoset {
    let keep = prune_indices(&z.poset, &z.coranks);
    let (poset, map) = z.poset.induced(&keep);
    let coranks = map.iter().map(|&i| z.coranks[i]).collect();
    let items = map.iter().map(|&i| z.items[i]).collect();
    ZPoset {
        poset,
        coranks,
        items,
    }
}
