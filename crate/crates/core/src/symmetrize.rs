//! Geometric symmetrization: orbit hulls, vertex normal cones, conic
//! dissections, and the f-vector formula from the refined fan.
//!
//! Two independent routes compute the same objects. The oracle route takes
//! the exact hull of the full orbit and reads faces off it, with no fan
//! theory at all. The fan route assembles everything from the fundamental
//! fan via coset representatives. Their agreement is the executable content
//! of the structure results and the main verification gate.

use crate::error::{Error, Result};
use crate::ffan::FundamentalFan;
use crate::kernel::cone::{Cone, Location};
use crate::kernel::linalg::QVec;
use crate::kernel::rat::Rat;
use crate::kernel::spaces::UPoint;
use crate::polytope::{f_vector, FVector, FaceLattice, Polytope};
use crate::posets::{
    poset_iso, symmetrize, symmetrized_size, SymmetrizedPoset, DEFAULT_ISO_BUDGET,
};
use crate::typea::{stabilizer_order, Permutation, TypeA};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashMap;

/// The full vertex orbit, deduplicated and sorted.
pub fn orbit_points(p: &Polytope, group: &TypeA) -> Vec<UPoint> {
    let mut out: Vec<UPoint> = Vec::new();
    for g in group.elements() {
        for v in p.vertices() {
            out.push(g.act_u(v));
        }
    }
    out.sort_by(|a, b| a.coords().cmp(b.coords()));
    out.dedup();
    out
}

/// Brute-force verifier: the exact hull of the orbit with its face lattice,
/// computed with no fan theory. Works for any input polytope.
pub fn symmetrization_oracle(p: &Polytope, group: &TypeA) -> Result<(Polytope, FaceLattice)> {
    let hull = Polytope::hull(&orbit_points(p, group))?;
    let lattice = hull.face_lattice();
    Ok((hull, lattice))
}

/// The candidate vertex normal cone `g^{-1}[chamber /\ ncone(v, P)]`.
pub fn kappa_cone(
    ff: &FundamentalFan,
    group: &TypeA,
    vertex: usize,
    g: &Permutation,
) -> Result<Cone> {
    let face = ff
        .lattice
        .face_index(&[vertex])
        .ok_or_else(|| Error::Invalid(format!("no vertex with index {vertex}")))?;
    let meet = ff.fan.cones[face].intersect(group.chamber())?;
    Ok(group.act_cone(&g.inverse(), &meet))
}

/// An orbit cone of the assembled complete fan.
#[derive(Clone, Debug)]
pub struct AssembledCone {
    pub base: usize,
    pub rep: Permutation,
    pub cone: Cone,
}

/// The complete normal fan of the symmetrization, enumerated orbit by orbit
/// through coset representatives of each cone's carrier stabilizer. Distinct
/// by construction: orbits of distinct fan cones are disjoint.
pub fn assemble_fan(ff: &FundamentalFan, group: &TypeA) -> Vec<AssembledCone> {
    let mut out = Vec::new();
    for (i, c) in ff.cones.iter().enumerate() {
        for rep in crate::typea::coset_reps(group.face(c.carrier)) {
            let cone = group.act_cone(&rep, &c.cone);
            out.push(AssembledCone { base: i, rep, cone });
        }
    }
    out
}

/// The f-vector of the symmetrization computed from the refined fan alone:
/// each refined cell contributes its codimension counts weighted by the
/// index of its carrier's stabilizer.
pub fn fvector_from_refined(ff: &FundamentalFan, group: &TypeA, include_empty: bool) -> FVector {
    let d = group.d();
    let order = group.order();
    let mut counts = vec![0u64; d - 1 + 1];
    for (phi, cell) in ff.refined() {
        let weight = order / stabilizer_order(group.face(phi));
        for (codim, n) in ff.cell_codim_counts(&cell) {
            counts[codim] += n * weight;
        }
    }
    FVector {
        counts,
        include_empty,
    }
}

/// For ambient quotient dimension at most 3 (d at most 4), the chamber and
/// wall counts of the fundamental fan already determine the whole f-vector
/// of the symmetrization: the base polytope has dimension at most 2, so its
/// edge count is read off its vertex count (which equals the chamber count),
/// and the Euler relation fills in the facet count.
pub fn fvector_from_counts(chambers: u64, walls: u64, d: usize) -> Option<Vec<u64>> {
    if !(2..=4).contains(&d) || chambers == 0 {
        return None;
    }
    let order: u64 = (1..=d as u64).product();
    let base_edges = match chambers {
        1 => 0,
        2 => 1,
        n => n,
    };
    let f0 = order * chambers;
    let f1 = order / 2 * (walls + base_edges);
    match d {
        2 => Some(vec![f0, 1]),
        3 => Some(vec![f0, f1, 1]),
        4 => Some(vec![f0, f1, (2 + f1 as i64 - f0 as i64) as u64, 1]),
        _ => None,
    }
}

/// Metadata identifying the symmetrization as a hybrid of the permutohedron
/// of a designated point of the base polytope and the base polytope itself.
#[derive(Clone, Debug)]
pub struct HybridDescriptor {
    pub permutohedron_point: UPoint,
    pub base_face_count: usize,
}

/// Both routes bundled: the oracle hull with its lattice, the orbit-to-vertex
/// index, and the assembled fan.
pub struct SymmetrizationResult {
    pub polytope: Polytope,
    pub lattice: FaceLattice,
    pub vertex_index: HashMap<(usize, Permutation), usize>,
    pub fan_assembled: Vec<AssembledCone>,
    pub hybrid: HybridDescriptor,
}

pub fn symmetrize_polytope(p: &Polytope, group: &TypeA) -> Result<SymmetrizationResult> {
    let ff = FundamentalFan::build(p, group)?;
    let (hull, lattice) = symmetrization_oracle(p, group)?;
    let mut vertex_index = HashMap::new();
    for (vi, v) in p.vertices().iter().enumerate() {
        for g in group.elements() {
            let img = g.act_u(v);
            if let Some(j) = hull.vertex_index(&img) {
                vertex_index.insert((vi, g), j);
            }
        }
    }
    let fan_assembled = assemble_fan(&ff, group);
    let hybrid = HybridDescriptor {
        permutohedron_point: p.vertices()[0].clone(),
        base_face_count: ff.lattice.len(),
    };
    Ok(SymmetrizationResult {
        polytope: hull,
        lattice,
        vertex_index,
        fan_assembled,
        hybrid,
    })
}

/// Is the base polytope a face of its symmetrization?
pub fn check_p_is_face(p: &Polytope, group: &TypeA) -> Result<bool> {
    let (hull, lattice) = symmetrization_oracle(p, group)?;
    let mut verts = Vec::new();
    for v in p.vertices() {
        match hull.vertex_index(v) {
            Some(i) => verts.push(i),
            None => return Ok(false),
        }
    }
    verts.sort_unstable();
    Ok(lattice.face_index(&verts).is_some())
}

/// Per-vertex verification: every orbit point is a vertex of the hull and
/// its normal cone there equals the candidate cone.
pub struct VertexConeReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl VertexConeReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_vertex_cones(p: &Polytope, group: &TypeA) -> Result<VertexConeReport> {
    let ff = FundamentalFan::build(p, group)?;
    let (hull, _) = symmetrization_oracle(p, group)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for (vi, v) in p.vertices().iter().enumerate() {
        for g in group.elements() {
            checked += 1;
            let img = g.act_u(v);
            let Some(j) = hull.vertex_index(&img) else {
                failures.push(format!("orbit point {img:?} is not a vertex of the hull"));
                continue;
            };
            let expected = kappa_cone(&ff, group, vi, &g)?;
            let actual = hull.normal_cone(&[j]);
            if expected != actual {
                failures.push(format!("normal cone mismatch at vertex {vi} under {g:?}"));
            }
        }
    }
    Ok(VertexConeReport { checked, failures })
}

/// Exact check that the candidate vertex cones form a pointed conic
/// dissection: all full-dimensional and pointed, pairwise disjoint
/// interiors, and seeded random probes all covered.
pub struct DissectionReport {
    pub cones: usize,
    pub probes: usize,
    pub failures: Vec<String>,
}

impl DissectionReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn kappa_dissection_check(
    p: &Polytope,
    group: &TypeA,
    seed: u64,
    probes: usize,
) -> Result<DissectionReport> {
    let ff = FundamentalFan::build(p, group)?;
    let m = group.d() - 1;
    let mut cones: Vec<Cone> = Vec::new();
    for vi in 0..p.vertices().len() {
        for g in group.elements() {
            cones.push(kappa_cone(&ff, group, vi, &g)?);
        }
    }
    let mut failures = Vec::new();
    for (i, c) in cones.iter().enumerate() {
        if c.dim() != m {
            failures.push(format!("cone {i} is not full-dimensional"));
        }
        if !c.is_pointed() {
            failures.push(format!("cone {i} is not pointed"));
        }
    }
    for i in 0..cones.len() {
        for j in i + 1..cones.len() {
            if cones[i] == cones[j] {
                failures.push(format!("cones {i} and {j} coincide"));
                continue;
            }
            if crate::ffan::open_meet(&cones[i], &cones[j])?.is_some() {
                failures.push(format!("cones {i} and {j} overlap in their interiors"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..probes {
        let probe: QVec = (0..m)
            .map(|_| Rat::new(rng.gen_range(-60..=60), rng.gen_range(1..=7)))
            .collect();
        let hits = cones.iter().filter(|c| c.contains(&probe)).count();
        let interior_hits = cones
            .iter()
            .filter(|c| c.locate(&probe) == Location::Interior)
            .count();
        if hits == 0 {
            failures.push(format!("probe {probe:?} is uncovered"));
        }
        if interior_hits > 1 {
            failures.push(format!(
                "probe {probe:?} is interior to {interior_hits} cones"
            ));
        }
    }
    Ok(DissectionReport {
        cones: cones.len(),
        probes,
        failures,
    })
}

/// One named check of the verification suite.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// The whole battery of structure checks on one placed, appropriate
/// polytope, cross-checking the fan route against the hull oracle.
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub oracle_fvector: FVector,
    pub refined_fvector: FVector,
    pub symmetrized: SymmetrizedPoset,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn verify_all(p: &Polytope, group: &TypeA, seed: u64) -> Result<VerifyReport> {
    let d = group.d();
    let ff = FundamentalFan::build(p, group)?;
    let (hull, lattice) = symmetrization_oracle(p, group)?;
    let hull_poset = lattice.to_poset();
    let mut checks: Vec<CheckResult> = Vec::new();
    let mut push = |name: &'static str, pass: bool, detail: String| {
        checks.push(CheckResult { name, pass, detail });
    };

    let witness = ff.witness.clone();
    push("placed", true, format!("witness {witness:?}"));
    push(
        "appropriate",
        true,
        "all vertices strictly increasing".into(),
    );

    // Orbit points are exactly the hull vertices, and the counts match.
    let orbit = orbit_points(p, group);
    let orbit_ok = orbit.len() == hull.vertices().len()
        && orbit.iter().all(|q| hull.vertex_index(q).is_some());
    push(
        "vertex-orbit",
        orbit_ok,
        format!(
            "{} orbit points, {} hull vertices",
            orbit.len(),
            hull.vertices().len()
        ),
    );

    let vc = verify_vertex_cones(p, group)?;
    push(
        "vertex-normal-cones",
        vc.ok(),
        format!(
            "{} pairs checked{}",
            vc.checked,
            vc.failures
                .first()
                .map(|f| format!("; first failure: {f}"))
                .unwrap_or_default()
        ),
    );

    let pface = check_p_is_face(p, group)?;
    push(
        "base-is-face",
        pface,
        "the base polytope appears as a face of the hull".into(),
    );

    let dis = kappa_dissection_check(p, group, seed, 100)?;
    push(
        "kappa-dissection",
        dis.ok(),
        format!("{} cones, {} probes", dis.cones, dis.probes),
    );

    // The bijection with intersecting pairs embeds orders componentwise.
    let mut order_ok = true;
    for a in &ff.cones {
        for b in &ff.cones {
            let geo = a.cone.is_subset_of(&b.cone);
            let comb = ff.fan.cones[a.source].is_subset_of(&ff.fan.cones[b.source])
                && group
                    .face(a.carrier)
                    .cone
                    .is_subset_of(&group.face(b.carrier).cone);
            if geo != comb {
                order_ok = false;
            }
        }
    }
    push(
        "omega-order-embedding",
        order_ok,
        format!("{} cones compared", ff.cones.len()),
    );

    let mut distinct = true;
    for (i, a) in ff.cones.iter().enumerate() {
        for b in &ff.cones[i + 1..] {
            if a.cone == b.cone {
                distinct = false;
            }
        }
    }
    push(
        "omega-bijection",
        distinct,
        "fan cones pairwise distinct".into(),
    );

    // Open cones of each refined cell partition the open carrier face.
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let mut cell_ok = true;
    for (phi, cell) in ff.refined() {
        let face = group.face(phi);
        if face.cone.is_zero() {
            continue;
        }
        for _ in 0..20 {
            let mut probe = vec![Rat::zero(); d - 1];
            for r in face.cone.rays() {
                let c = Rat::new(rng.gen_range(1..=9), rng.gen_range(1..=4));
                for (x, y) in probe.iter_mut().zip(r) {
                    *x += &(&c * y);
                }
            }
            let hits = cell
                .iter()
                .filter(|&&i| ff.cones[i].cone.locate(&probe) == Location::Interior)
                .count();
            if hits != 1 {
                cell_ok = false;
            }
        }
    }
    push(
        "cell-partition-probes",
        cell_ok,
        "interior probes lie in exactly one cell cone".into(),
    );

    // Maximal cones of the restriction to a face have that face's dimension
    // and carry it.
    let mut maximal_ok = true;
    for (phi, _) in ff.refined() {
        let face = group.face(phi);
        let restricted: Vec<usize> = (0..ff.cones.len())
            .filter(|&i| ff.cones[i].cone.is_subset_of(&face.cone))
            .collect();
        for &i in &restricted {
            let is_max = restricted
                .iter()
                .all(|&j| j == i || !ff.cones[i].cone.is_subset_of(&ff.cones[j].cone));
            if is_max && (ff.cones[i].cone.dim() != face.dim() || ff.cones[i].carrier != phi) {
                maximal_ok = false;
            }
        }
    }
    push(
        "maximal-elements",
        maximal_ok,
        "restrictions peak at their face's dimension".into(),
    );

    // The combinatorial pruning reproduces the geometric full-chamber cell.
    let z = ff.zposet(group);
    let pruned = crate::ffan::prune_to_phi_cell(&z);
    let phi_id = group
        .face_id(&crate::typea::OrderedSetPartition::finest(d))
        .expect("chamber face");
    let mut phi_cell = ff.refined()[&phi_id].clone();
    phi_cell.sort_unstable();
    let mut kept = pruned.items.clone();
    kept.sort_unstable();
    push(
        "prune-determination",
        kept == phi_cell,
        format!("{} cones survive", kept.len()),
    );

    // The full-chamber cell is dual to the face poset, codimensions aligned.
    let mut zphi_ok = phi_cell.len() == ff.lattice.len();
    for &i in &phi_cell {
        if ff.corank(i) != ff.lattice.faces[ff.cones[i].source].dim {
            zphi_ok = false;
        }
    }
    let (cell_poset, _) = z.poset.induced(&phi_cell);
    let dual_faces = ff.lattice.to_poset().dual();
    zphi_ok = zphi_ok && poset_iso(&cell_poset, &dual_faces, DEFAULT_ISO_BUDGET).is_iso();
    push(
        "phi-cell-duality",
        zphi_ok,
        format!("{} cell cones", phi_cell.len()),
    );

    // Symmetrizing the tagged fan poset reproduces the oracle's face poset.
    let r = ff.rposet(group);
    let sym = symmetrize(&r, d)?;
    let expected_size = symmetrized_size(&r, d);
    let dual_hull = hull_poset.dual();
    let sym_ok = sym.poset.len() as u64 == expected_size
        && poset_iso(&sym.poset, &dual_hull, DEFAULT_ISO_BUDGET).is_iso();
    push(
        "symmetrized-poset",
        sym_ok,
        format!(
            "{} elements against {} hull faces",
            sym.poset.len(),
            lattice.len()
        ),
    );

    // f-vectors: refined-fan formula against the oracle.
    let oracle_fv = f_vector(&lattice, false);
    let refined_fv = fvector_from_refined(&ff, group, false);
    push(
        "fvector-formula",
        oracle_fv == refined_fv,
        format!("oracle {oracle_fv:?}, refined {refined_fv:?}"),
    );

    // The two closed-form entries.
    let base_fv = f_vector(&ff.lattice, false);
    let order = group.order();
    let f0_ok = oracle_fv.counts[0] == order * base_fv.counts[0];
    let f1_expected = order / 2 * (ff.f_codim(1) + base_fv.counts.get(1).copied().unwrap_or(0));
    let f1_ok = oracle_fv.counts.get(1).copied().unwrap_or(0) == f1_expected;
    push(
        "fvector-first-entries",
        f0_ok && f1_ok,
        format!(
            "f0 = {} = {}!*{}; f1 = {} = {}!/2*({}+{})",
            oracle_fv.counts[0],
            d,
            base_fv.counts[0],
            oracle_fv.counts.get(1).copied().unwrap_or(0),
            d,
            ff.f_codim(1),
            base_fv.counts.get(1).copied().unwrap_or(0),
        ),
    );

    // Assembled fan: count matches the total face count; on small inputs the
    // cones are compared against the oracle's normal cones one by one.
    let assembled = assemble_fan(&ff, group);
    let total: u64 = oracle_fv.counts.iter().sum();
    let mut assemble_ok = assembled.len() as u64 == total;
    let mut dedup: Vec<&Cone> = assembled.iter().map(|a| &a.cone).collect();
    dedup.sort_by_key(|c| (c.dim(), c.rays().to_vec(), c.lineality().to_vec()));
    dedup.dedup();
    assemble_ok = assemble_ok && dedup.len() == assembled.len();
    let mut detail = format!("{} cones assembled", assembled.len());
    if hull.vertices().len() <= 60 {
        let fan = hull.normal_fan(&lattice);
        let mut oracle_cones: Vec<&Cone> = fan.cones.iter().collect();
        oracle_cones.sort_by_key(|c| (c.dim(), c.rays().to_vec(), c.lineality().to_vec()));
        assemble_ok = assemble_ok && dedup == oracle_cones;
        detail.push_str(", matched against the oracle fan");
    }
    push("assembled-fan", assemble_ok, detail);

    push(
        "euler-relation",
        oracle_fv.euler_relation_holds(),
        format!("alternating sum of {oracle_fv:?}"),
    );
    push(
        "diamond-property",
        crate::posets::diamond_check(&hull_poset)?,
        "length-2 intervals of the hull lattice".into(),
    );

    Ok(VerifyReport {
        checks,
        oracle_fvector: oracle_fv,
        refined_fvector: refined_fv,
        symmetrized: sym,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn segment_s() -> Polytope {
        Polytope::hull(&[
            UPoint::from_ints(&[1, 2, 6, 8]),
            UPoint::from_ints(&[0, 4, 5, 8]),
        ])
        .unwrap()
    }

    fn segment_l() -> Polytope {
        Polytope::hull(&[UPoint::from_ints(&[1, 5, 6]), UPoint::from_ints(&[2, 3, 7])]).unwrap()
    }

    #[test]
    fn orbit_point_counts() {
        let group = TypeA::new(4).unwrap();
        assert_eq!(orbit_points(&segment_s(), &group).len(), 48);
        let group3 = TypeA::new(3).unwrap();
        assert_eq!(orbit_points(&segment_l(), &group3).len(), 12);
        // A point with a repeated coordinate has a smaller orbit.
        let p = Polytope::hull(&[UPoint::from_ints(&[1, 1, 2])]).unwrap();
        assert_eq!(orbit_points(&p, &group3).len(), 3);
    }

    #[test]
    fn oracle_fvector_of_running_segment() {
        let group = TypeA::new(4).unwrap();
        let (_, lattice) = symmetrization_oracle(&segment_s(), &group).unwrap();
        assert_eq!(f_vector(&lattice, false).entries(), vec![48, 72, 26, 1]);
    }

    #[test]
    fn kappa_cones_are_full_dimensional_and_pointed() {
        let group = TypeA::new(4).unwrap();
        let s = segment_s();
        let ff = FundamentalFan::build(&s, &group).unwrap();
        let id = Permutation::identity(4);
        for vi in 0..2 {
            let k = kappa_cone(&ff, &group, vi, &id).unwrap();
            assert_eq!(k.dim(), 3);
            assert!(k.is_pointed());
        }
        // For a single point the candidate cone is g^{-1} of the chamber.
        let group3 = TypeA::new(3).unwrap();
        let p = Polytope::hull(&[UPoint::from_ints(&[1, 2, 4])]).unwrap();
        let ffp = FundamentalFan::build(&p, &group3).unwrap();
        for g in group3.elements() {
            let k = kappa_cone(&ffp, &group3, 0, &g).unwrap();
            assert_eq!(k, group3.act_cone(&g.inverse(), group3.chamber()));
        }
    }

    #[test]
    fn vertex_cones_match_oracle_for_l() {
        let group = TypeA::new(3).unwrap();
        let report = verify_vertex_cones(&segment_l(), &group).unwrap();
        assert_eq!(report.checked, 12);
        assert!(report.ok(), "{:?}", report.failures);
    }

    #[test]
    fn permutohedron_vertex_cones() {
        // For a single appropriate point, ncone(u g) = g^{-1} chamber.
        let group = TypeA::new(3).unwrap();
        let p = Polytope::hull(&[UPoint::from_ints(&[1, 2, 4])]).unwrap();
        let report = verify_vertex_cones(&p, &group).unwrap();
        assert_eq!(report.checked, 6);
        assert!(report.ok(), "{:?}", report.failures);
    }

    #[test]
    fn base_polytope_is_a_face() {
        let group = TypeA::new(3).unwrap();
        assert!(check_p_is_face(&segment_l(), &group).unwrap());
        // A non-appropriate segment loses a vertex in the hull.
        let bad = Polytope::hull(&[UPoint::from_ints(&[3, 4, 5]), UPoint::from_ints(&[2, 4, 6])])
            .unwrap();
        assert!(!check_p_is_face(&bad, &group).unwrap());
    }

    #[test]
    fn dissection_check_on_l() {
        let group = TypeA::new(3).unwrap();
        let report = kappa_dissection_check(&segment_l(), &group, 42, 100).unwrap();
        assert_eq!(report.cones, 12);
        assert!(report.ok(), "{:?}", report.failures);
    }

    #[test]
    fn refined_fvector_matches_oracle_for_l() {
        let group = TypeA::new(3).unwrap();
        let ff = FundamentalFan::build(&segment_l(), &group).unwrap();
        let fv = fvector_from_refined(&ff, &group, false);
        assert_eq!(fv.entries(), vec![12, 12, 1]);
        let with_empty = fvector_from_refined(&ff, &group, true);
        assert_eq!(with_empty.entries(), vec![1, 12, 12, 1]);
    }

    #[test]
    fn assembled_fan_counts() {
        let group = TypeA::new(3).unwrap();
        let ff = FundamentalFan::build(&segment_l(), &group).unwrap();
        let assembled = assemble_fan(&ff, &group);
        assert_eq!(assembled.len(), 25);
        let group4 = TypeA::new(4).unwrap();
        let ff = FundamentalFan::build(&segment_s(), &group4).unwrap();
        assert_eq!(assemble_fan(&ff, &group4).len(), 147);
        // Symmetrizing a point assembles the complete braid fan: one cone per
        // ordered set partition.
        let p = Polytope::hull(&[UPoint::from_ints(&[1, 2, 4])]).unwrap();
        let ffp = FundamentalFan::build(&p, &group).unwrap();
        assert_eq!(assemble_fan(&ffp, &group).len(), 13);
    }

    #[test]
    fn counts_determine_fvector_in_low_dimension() {
        // Chamber and wall counts of the fundamental fan pin down the whole
        // f-vector when the ambient quotient has dimension at most 3.
        for (p, d) in [
            (segment_s(), 4usize),
            (segment_l(), 3),
            (crate::realize::build_p(3).unwrap(), 3),
            (crate::realize::build_p(4).unwrap(), 4),
        ] {
            let group = TypeA::new(d).unwrap();
            let ff = FundamentalFan::build(&p, &group).unwrap();
            let predicted = fvector_from_counts(ff.f_codim(0), ff.f_codim(1), d).unwrap();
            let (_, lattice) = symmetrization_oracle(&p, &group).unwrap();
            assert_eq!(predicted, f_vector(&lattice, false).entries());
        }
        assert!(fvector_from_counts(2, 3, 5).is_none());
    }

    #[test]
    fn verify_all_passes_on_l() {
        let group = TypeA::new(3).unwrap();
        let report = verify_all(&segment_l(), &group, 7).unwrap();
        for c in &report.checks {
            assert!(c.pass, "check {} failed: {}", c.name, c.detail);
        }
        assert_eq!(report.symmetrized.poset.len(), 25);
        assert_eq!(report.oracle_fvector.entries(), vec![12, 12, 1]);
    }

    #[test]
    fn verify_rejects_hypothesis_violations() {
        let group = TypeA::new(3).unwrap();
        let bad = Polytope::hull(&[UPoint::from_ints(&[2, 1, 9]), UPoint::from_ints(&[1, 3, 8])])
            .unwrap();
        assert!(matches!(
            verify_all(&bad, &group, 0),
            Err(Error::NotAppropriate { .. })
        ));
        // Appropriate but full-dimensional: the perpendicular space is zero.
        let full = Polytope::hull(&[
            UPoint::from_ints(&[1, 2, 4]),
            UPoint::from_ints(&[0, 3, 4]),
            UPoint::from_ints(&[0, 2, 5]),
        ])
        .unwrap();
        assert!(matches!(
            verify_all(&full, &group, 0),
            Err(Error::NotPlaced)
        ));
    }

    #[test]
    fn symmetrize_polytope_bundles_both_routes() {
        let group = TypeA::new(3).unwrap();
        let result = symmetrize_polytope(&segment_l(), &group).unwrap();
        assert_eq!(result.polytope.vertices().len(), 12);
        assert_eq!(result.fan_assembled.len(), 25);
        assert_eq!(result.vertex_index.len(), 12);
        assert_eq!(result.hybrid.base_face_count, 3);
        // Every (vertex, g) pair maps to the hull vertex carrying the point.
        for ((vi, g), &j) in &result.vertex_index {
            let img = g.act_u(&segment_l().vertices()[*vi]);
            assert_eq!(result.polytope.vertices()[j], img);
        }
    }
}
