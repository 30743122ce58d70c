//! Acceptance suite: every criterion runs at its stated tolerance (exact
//! arithmetic everywhere) and prints one pass line.

use orbitope::ffan::{open_meet, prune_to_phi_cell, FundamentalFan};
use orbitope::kernel::cone::Cone;
use orbitope::kernel::linalg::QVec;
use orbitope::kernel::rat::Rat;
use orbitope::kernel::spaces::{pairing_diff, UPoint, WVector};
use orbitope::polytope::{f_vector, Polytope};
use orbitope::posets::{
    diamond_check, poset_iso, symmetrize, IsoOutcome, Poset, DEFAULT_ISO_BUDGET,
};
use orbitope::realize::{
    build_p, charintersect_exhaustive, compatibility_check, decorated_poset, realize_pipeline,
    Compat,
};
use orbitope::symmetrize::{fvector_from_refined, kappa_cone, symmetrization_oracle, verify_all};
use orbitope::typea::{OrderedSetPartition, Permutation, TypeA};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

fn polytope(verts: &[&[i64]]) -> Polytope {
    let pts: Vec<UPoint> = verts.iter().map(|v| UPoint::from_ints(v)).collect();
    Polytope::hull(&pts).unwrap()
}

fn segment_s() -> Polytope {
    polytope(&[&[1, 2, 6, 8], &[0, 4, 5, 8]])
}

fn segment_l() -> Polytope {
    polytope(&[&[1, 5, 6], &[2, 3, 7]])
}

fn segment_x() -> Polytope {
    polytope(&[&[2, 3, 7, 8, 10], &[1, 5, 6, 8, 10]])
}

fn segment_y() -> Polytope {
    polytope(&[&[0, 3, 4, 5, 10], &[0, 1, 6, 7, 8]])
}

/// The six test polytopes of the oracle-equivalence criteria.
fn test_corpus() -> Vec<(String, Polytope)> {
    vec![
        ("S".into(), segment_s()),
        ("L".into(), segment_l()),
        ("X".into(), segment_x()),
        ("Y".into(), segment_y()),
        ("P3".into(), build_p(3).unwrap()),
        ("P4".into(), build_p(4).unwrap()),
    ]
}

#[test]
fn criterion_1_running_example_fvector_both_routes() {
    let t0 = Instant::now();
    let s = segment_s();
    let group = TypeA::new(4).unwrap();
    let (_, lattice) = symmetrization_oracle(&s, &group).unwrap();
    let oracle = f_vector(&lattice, false).entries();
    let ff = FundamentalFan::build(&s, &group).unwrap();
    let refined = fvector_from_refined(&ff, &group, false).entries();
    assert_eq!(oracle, vec![48, 72, 26, 1]);
    assert_eq!(refined, vec![48, 72, 26, 1]);
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, budget 10 s");
    println!("criterion 1 (running example, both routes give (48,72,26,1)): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_counterexample_pair() {
    let t0 = Instant::now();
    let group = TypeA::new(5).unwrap();
    let x = segment_x();
    let y = segment_y();
    let (_, lx) = symmetrization_oracle(&x, &group).unwrap();
    let (_, ly) = symmetrization_oracle(&y, &group).unwrap();
    assert_eq!(f_vector(&lx, true).entries(), vec![1, 240, 480, 290, 50, 1]);
    assert_eq!(f_vector(&ly, true).entries(), vec![1, 240, 480, 300, 60, 1]);
    // The refined-fan formula agrees on both.
    let fx = FundamentalFan::build(&x, &group).unwrap();
    let fy = FundamentalFan::build(&y, &group).unwrap();
    assert_eq!(
        fvector_from_refined(&fx, &group, true).entries(),
        vec![1, 240, 480, 290, 50, 1]
    );
    assert_eq!(
        fvector_from_refined(&fy, &group, true).entries(),
        vec![1, 240, 480, 300, 60, 1]
    );
    // Yet the fan posets are isomorphic: the fan does not determine the
    // f-vector of the symmetrization.
    let zx = fx.zposet(&group);
    let zy = fy.zposet(&group);
    assert!(matches!(
        poset_iso(&zx.poset, &zy.poset, DEFAULT_ISO_BUDGET),
        IsoOutcome::Iso(_)
    ));
    // The symmetrized posets themselves are not isomorphic: their sizes,
    // read off the extended f-vectors, differ (1061 against 1081).
    let rx = fx.rposet(&group);
    let ry = fy.rposet(&group);
    let sx = symmetrize(&rx, 5).unwrap();
    let sy = symmetrize(&ry, 5).unwrap();
    assert_eq!(sx.poset.len(), 1061);
    assert_eq!(sy.poset.len(), 1081);
    assert_eq!(
        poset_iso(&sx.poset, &sy.poset, DEFAULT_ISO_BUDGET),
        IsoOutcome::NonIso
    );
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, budget 5 min");
    println!("criterion 2 (X/Y f-vectors differ, fan posets isomorphic): PASS in {elapsed:?}");
}

#[test]
fn criterion_3_symmetrized_poset_equals_oracle() {
    for (name, p) in test_corpus() {
        let group = TypeA::new(p.d()).unwrap();
        let ff = FundamentalFan::build(&p, &group).unwrap();
        let r = ff.rposet(&group);
        let sym = symmetrize(&r, p.d()).unwrap();
        let (_, lattice) = symmetrization_oracle(&p, &group).unwrap();
        let dual = lattice.to_poset().dual();
        let outcome = poset_iso(&sym.poset, &dual, DEFAULT_ISO_BUDGET);
        assert!(
            matches!(outcome, IsoOutcome::Iso(_)),
            "{name}: symmetrized poset should match the oracle"
        );
        println!(
            "criterion 3 ({name}: symmetrized fan poset of {} elements matches the hull): PASS",
            sym.poset.len()
        );
    }
}

#[test]
fn criterion_4_phi_cell_determination() {
    for (name, p) in test_corpus() {
        let d = p.d();
        let group = TypeA::new(d).unwrap();
        let ff = FundamentalFan::build(&p, &group).unwrap();
        let phi = group.face_id(&OrderedSetPartition::finest(d)).unwrap();
        let cell = ff.refined()[&phi].clone();
        // Codimension-preserving bijection with the face lattice.
        assert_eq!(cell.len(), ff.lattice.len(), "{name}");
        for &i in &cell {
            assert_eq!(
                ff.corank(i),
                ff.lattice.faces[ff.cones[i].source].dim,
                "{name}: codimensions must match"
            );
        }
        let z = ff.zposet(&group);
        let (cell_poset, _) = z.poset.induced(&cell);
        let dual_faces = ff.lattice.to_poset().dual();
        assert!(
            poset_iso(&cell_poset, &dual_faces, DEFAULT_ISO_BUDGET).is_iso(),
            "{name}: chamber cell must be dual to the face lattice"
        );
        // The purely combinatorial pruning finds the same subposet.
        let pruned = prune_to_phi_cell(&z);
        let mut kept = pruned.items.clone();
        kept.sort_unstable();
        let mut expect = cell;
        expect.sort_unstable();
        assert_eq!(
            kept, expect,
            "{name}: pruning must recover the chamber cell"
        );
        println!("criterion 4 ({name}: chamber cell dual to face lattice, pruning agrees): PASS");
    }
}

#[test]
fn criterion_5_charintersect_brute_force() {
    let t0 = Instant::now();
    for d in 3..=5usize {
        let (checked, mismatches) = charintersect_exhaustive(d).unwrap();
        assert_eq!(mismatches, 0, "d = {d}");
        println!(
            "criterion 5 (d = {d}: {checked} pairs, exact test matches the characterization): PASS"
        );
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget 60 s");
}

#[test]
fn criterion_6_realization_pipeline() {
    let t0 = Instant::now();
    for (d, size) in [(3usize, 25usize), (4, 291)] {
        let stage_t = Instant::now();
        let report = realize_pipeline(d).unwrap();
        for s in &report.stages {
            assert!(s.pass, "d = {d}, stage {} failed: {}", s.name, s.detail);
        }
        assert_eq!(report.target_size, size);
        assert_eq!(report.symmetrized_size, Some(size as u64));
        // Independent count from the enumeration of decorated partitions.
        assert_eq!(decorated_poset(d).unwrap().elements.len(), size);
        println!(
            "criterion 6 (d = {d}: symmetrization realizes the {size}-element target): PASS in {:?}",
            stage_t.elapsed()
        );
    }
    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "took {elapsed:?}, budget 2 min for d = 4"
    );
}

#[test]
fn criterion_7_vertex_and_edge_count_formulas() {
    for (name, p) in test_corpus() {
        let d = p.d();
        let group = TypeA::new(d).unwrap();
        let order = group.order();
        let ff = FundamentalFan::build(&p, &group).unwrap();
        let (_, lattice) = symmetrization_oracle(&p, &group).unwrap();
        let big = f_vector(&lattice, false).entries();
        let small = f_vector(&ff.lattice, false).entries();
        assert_eq!(big[0], order * small[0], "{name}: vertex count formula");
        let f1_small = small.get(1).copied().unwrap_or(0);
        assert_eq!(
            big[1],
            order / 2 * (ff.f_codim(1) + f1_small),
            "{name}: edge count formula"
        );
        if name == "S" {
            // Reads 72 = 12 * (5 + 1) on the running example.
            assert_eq!(ff.f_codim(1), 5);
            assert_eq!(big[1], 12 * (5 + 1));
        }
        println!(
            "criterion 7 ({name}: f0 = {}!*{}, f1 = {}!/2*({}+{})): PASS",
            d,
            small[0],
            d,
            ff.f_codim(1),
            f1_small
        );
    }
}

#[test]
fn criterion_8_negative_compatibility() {
    // Set partitions of [4] under refinement: the pair partition has a
    // stabilizer of order 8, which is not parabolic.
    let d = 4;
    let group = TypeA::new(d).unwrap();
    let mut parts: Vec<Vec<Vec<usize>>> = Vec::new();
    for osp in OrderedSetPartition::enumerate_all(d) {
        let mut blocks = osp.blocks().to_vec();
        blocks.sort();
        if !parts.contains(&blocks) {
            parts.push(blocks);
        }
    }
    let refines = |a: &Vec<Vec<usize>>, b: &Vec<Vec<usize>>| -> bool {
        a.iter()
            .all(|blk| b.iter().any(|sup| blk.iter().all(|x| sup.contains(x))))
    };
    let action: Vec<Vec<usize>> = group
        .elements()
        .iter()
        .map(|g| {
            parts
                .iter()
                .map(|p| {
                    let mut img: Vec<Vec<usize>> = p
                        .iter()
                        .map(|b| {
                            let mut ib: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
                            ib.sort_unstable();
                            ib
                        })
                        .collect();
                    img.sort();
                    parts.iter().position(|q| q == &img).unwrap()
                })
                .collect()
        })
        .collect();
    let mut z = Vec::new();
    let mut seen = vec![false; parts.len()];
    for i in 0..parts.len() {
        if !seen[i] {
            z.push(i);
            for t in &action {
                seen[t[i]] = true;
            }
        }
    }
    let compat = compatibility_check(&group, &action, &z).unwrap();
    let Compat::NonParabolic {
        element,
        stabilizer_order,
    } = compat
    else {
        panic!("expected the non-parabolic witness");
    };
    assert_eq!(stabilizer_order, 8);
    assert_eq!(
        parts[z[element]]
            .iter()
            .map(|b| b.len())
            .collect::<Vec<_>>(),
        vec![2, 2]
    );
    // And the set partitions of [3] violate the diamond property.
    let mut p3: Vec<Vec<Vec<usize>>> = Vec::new();
    for osp in OrderedSetPartition::enumerate_all(3) {
        let mut blocks = osp.blocks().to_vec();
        blocks.sort();
        if !p3.contains(&blocks) {
            p3.push(blocks);
        }
    }
    let labels: Vec<String> = (0..p3.len()).map(|i| format!("p{i}")).collect();
    let poset = Poset::from_order(labels, |i, j| refines(&p3[i], &p3[j])).unwrap();
    assert!(!diamond_check(&poset).unwrap());
    println!(
        "criterion 8 (pair partition stabilizer of order 8 is not parabolic; diamond fails on set partitions of [3]): PASS"
    );
}

/// Random placed and appropriate polytope: strictly increasing base point
/// plus small perturbations orthogonal to both the all-one vector and a
/// random strictly increasing functional.
fn random_placed_polytope(rng: &mut StdRng, d: usize, k: usize) -> Polytope {
    loop {
        let mut gamma: Vec<i64> = vec![0; d];
        for i in 1..d {
            gamma[i] = gamma[i - 1] + rng.gen_range(1..=4);
        }
        // Nullspace basis of {1, gamma} by elimination on two rows.
        let rows: Vec<QVec> = vec![
            (0..d).map(|_| Rat::one()).collect(),
            gamma.iter().map(|&x| Rat::from_int(x)).collect(),
        ];
        let null = orbitope::kernel::linalg::nullspace(&rows, d);
        let base: Vec<i64> = (0..d).map(|i| 40 * i as i64).collect();
        let mut pts = Vec::new();
        for _ in 0..k {
            let mut coords: QVec = base.iter().map(|&x| Rat::from_int(x)).collect();
            for v in &null {
                let c = Rat::new(rng.gen_range(-4..=4), rng.gen_range(1..=3));
                for (x, y) in coords.iter_mut().zip(v) {
                    *x += &(&c * y);
                }
            }
            pts.push(UPoint::new(coords));
        }
        let Ok(p) = Polytope::hull(&pts) else {
            continue;
        };
        if orbitope::ffan::is_appropriate(&p) && orbitope::ffan::is_placed(&p).unwrap().is_some() {
            return p;
        }
    }
}

#[test]
fn criterion_9_property_suites() {
    let t0 = Instant::now();

    // Candidate vertex cones dissect the space: pairwise disjoint interiors
    // and full probe coverage, on random placed and appropriate polytopes.
    let mut rng = StdRng::seed_from_u64(2024);
    for case in 0..100 {
        let d = if case % 2 == 0 { 3 } else { 4 };
        let k = 1 + case % 3;
        let p = random_placed_polytope(&mut rng, d, k);
        let group = TypeA::new(d).unwrap();
        let report =
            orbitope::symmetrize::kappa_dissection_check(&p, &group, 1000 + case as u64, 20)
                .unwrap();
        assert!(report.ok(), "case {case}: {:?}", report.failures);
    }
    println!("criterion 9a (100 random vertex-cone dissections, zero failures): PASS");

    // A cone meeting the interior of a full-dimensional cone meets it with
    // its own interior.
    let mut rng = StdRng::seed_from_u64(77);
    for case in 0..100 {
        let m = 2 + case % 3;
        let full = loop {
            let rays: Vec<QVec> = (0..m + 1)
                .map(|_| {
                    (0..m)
                        .map(|_| Rat::from_int(rng.gen_range(-3..=3)))
                        .collect()
                })
                .collect();
            let c = Cone::from_generators(m, &rays, &[]);
            if c.dim() == m {
                break c;
            }
        };
        // An interior point of the full cone, forced into the other cone.
        let mut interior = vec![Rat::zero(); m];
        for r in full.rays() {
            let c = Rat::from_int(rng.gen_range(1..=3));
            for (x, y) in interior.iter_mut().zip(r) {
                *x += &(&c * y);
            }
        }
        let mut rays: Vec<QVec> = (0..case % 3)
            .map(|_| {
                (0..m)
                    .map(|_| Rat::from_int(rng.gen_range(-3..=3)))
                    .collect()
            })
            .collect();
        rays.push(interior);
        let other = Cone::from_generators(m, &rays, &[]);
        assert!(
            open_meet(&other, &full).unwrap().is_some(),
            "case {case}: interiors must meet"
        );
    }
    println!("criterion 9b (100 random interior-meeting cone pairs, zero failures): PASS");

    // Faces against normal cones: order-reversing bijection with matching
    // counts, on arbitrary random polytopes in a slice.
    let mut rng = StdRng::seed_from_u64(4242);
    for case in 0..100 {
        let d = if case % 2 == 0 { 3 } else { 4 };
        let n = 2 + case % 3;
        let base: i64 = rng.gen_range(10..20);
        let pts: Vec<UPoint> = (0..n)
            .map(|_| {
                let mut coords: Vec<i64> = (0..d - 1).map(|_| rng.gen_range(-5..=5)).collect();
                let partial: i64 = coords.iter().sum();
                coords.push(base - partial);
                UPoint::from_ints(&coords)
            })
            .collect();
        let Ok(p) = Polytope::hull(&pts) else {
            continue;
        };
        let fl = p.face_lattice();
        let fan = p.normal_fan(&fl);
        for (i, fi) in fl.faces.iter().enumerate() {
            for (j, fj) in fl.faces.iter().enumerate() {
                let inc = fi.verts.iter().all(|v| fj.verts.contains(v));
                let rev = fan.cones[j].is_subset_of(&fan.cones[i]);
                assert_eq!(inc, rev, "case {case}: order reversal");
            }
            assert_eq!((d - 1) - fan.cones[i].dim(), fl.faces[i].dim, "case {case}");
        }
    }
    println!("criterion 9c (100 random face/fan order reversals, zero failures): PASS");

    // The duality identity <g w, u> = <w, u g>.
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let d = rng.gen_range(2..=4);
        let perms = Permutation::all(d);
        let g = &perms[rng.gen_range(0..perms.len())];
        let w = WVector::new(
            (0..d)
                .map(|_| Rat::from_int(rng.gen_range(-5..=5)))
                .collect(),
        );
        let u = UPoint::new(
            (0..d)
                .map(|_| Rat::from_int(rng.gen_range(-5..=5)))
                .collect(),
        );
        let mut other: Vec<Rat> = (0..d - 1)
            .map(|_| Rat::from_int(rng.gen_range(-5..=5)))
            .collect();
        let partial: Rat = other.iter().cloned().sum();
        other.push(&u.slice_sum() - &partial);
        let other = UPoint::new(other);
        let lhs = pairing_diff(&g.act_w(&w), &u, &other).unwrap();
        let rhs = pairing_diff(&w, &g.act_u(&u), &g.act_u(&other)).unwrap();
        assert_eq!(lhs, rhs);
    }
    println!("criterion 9d (100 random duality identities, zero failures): PASS");

    println!("criterion 9 total: {:?}", t0.elapsed());
}

/// The d = 5 pipeline hulls 480 orbit points in four dimensions; it is
/// excluded from default runs. Run with `cargo test -- --ignored`.
#[test]
#[ignore = "slow: hull of the full orbit at d = 5"]
fn realization_pipeline_d5() {
    let report = realize_pipeline(5).unwrap();
    for s in &report.stages {
        assert!(s.pass, "stage {} failed: {}", s.name, s.detail);
    }
    assert_eq!(report.target_size, 3961);
    assert_eq!(report.symmetrized_size, Some(3961));
}

/// The running segment passes the entire verification battery; this pins the
/// per-check names used by the command-line driver.
#[test]
fn verification_battery_on_the_running_segment() {
    let group = TypeA::new(4).unwrap();
    let report = verify_all(&segment_s(), &group, 99).unwrap();
    assert!(report.all_pass());
    assert_eq!(report.symmetrized.poset.len(), 147);
    // Vertex normal cones match the candidate cones pair by pair on S too.
    let ff = FundamentalFan::build(&segment_s(), &group).unwrap();
    let (hull, _) = symmetrization_oracle(&segment_s(), &group).unwrap();
    for (vi, v) in segment_s().vertices().iter().enumerate() {
        for g in group.elements() {
            let img = g.act_u(v);
            let j = hull.vertex_index(&img).unwrap();
            assert_eq!(
                hull.normal_cone(&[j]),
                kappa_cone(&ff, &group, vi, &g).unwrap()
            );
        }
    }
}
