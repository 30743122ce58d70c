//! Finite posets, chamber-tagged posets, and their group symmetrization.
//!
//! A [`Poset`] stores labels, cover relations, and bitset closures of the
//! strict order; the rank function is the longest-chain rank and is kept only
//! when the poset is graded. [`SigmaPoset`] tags every element with a face of
//! the fundamental chamber (as a standard ordered set partition);
//! [`symmetrize`] replaces each tag by all of its group translates, ordered
//! by common-coset existence.

use crate::error::{Error, Result};
use crate::typea::{
    coset_reps, stabilizer_contains, stabilizer_elements, stabilizer_order, ChamberFace,
    OrderedSetPartition, Permutation, TypeA,
};
use serde::{Deserialize, Serialize};
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64)
                .filter(move |b| bits >> b & 1 == 1)
                .map(move |b| w * 64 + b)
        })
    }
}

/// A finite poset given by labels and cover relations.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    cover_up: Vec<Vec<usize>>,
    cover_down: Vec<Vec<usize>>,
    rank: Option<Vec<usize>>,
}

impl Poset {
    /// Build from cover relations `(lower, upper)`. Fails on cycles.
    pub fn from_covers(labels: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Poset> {
        let n = labels.len();
        let mut cover_up = vec![Vec::new(); n];
        let mut cover_down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n || a == b {
                return Err(Error::Invalid(format!("bad cover ({a},{b})")));
            }
            cover_up[a].push(b);
            cover_down[b].push(a);
        }
        for v in cover_up.iter_mut().chain(cover_down.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        // Topological order by Kahn's algorithm; detects cycles.
        let mut indeg: Vec<usize> = cover_down.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = stack.pop() {
            topo.push(x);
            for &y in &cover_up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::Invalid("cover relation has a cycle".into()));
        }
        let mut up = vec![BitSet::new(n); n];
        let mut down = vec![BitSet::new(n); n];
        for &x in topo.iter().rev() {
            let mut acc = BitSet::new(n);
            for &y in &cover_up[x] {
                acc.insert(y);
                acc.union_with(&up[y]);
            }
            up[x] = acc;
        }
        for &x in &topo {
            let mut acc = BitSet::new(n);
            for &y in &cover_down[x] {
                acc.insert(y);
                acc.union_with(&down[y]);
            }
            down[x] = acc;
        }
        // Longest-chain rank; keep it only when every cover raises it by 1.
        let mut rank = vec![0usize; n];
        for &x in &topo {
            for &y in &cover_down[x] {
                rank[x] = rank[x].max(rank[y] + 1);
            }
        }
        let graded = covers.iter().all(|&(a, b)| rank[b] == rank[a] + 1);
        let mut covers = covers;
        covers.sort_unstable();
        covers.dedup();
        Ok(Poset {
            labels,
            covers,
            up,
            down,
            cover_up,
            cover_down,
            rank: graded.then_some(rank),
        })
    }

    /// Build from the full order relation; covers are recovered by transitive
    /// reduction.
    pub fn from_order(labels: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let n = labels.len();
        let mut less = vec![BitSet::new(n); n];
        for (i, row) in less.iter_mut().enumerate() {
            for j in 0..n {
                if i != j && le(i, j) {
                    if le(j, i) {
                        return Err(Error::Invalid(format!("elements {i} and {j} are equal")));
                    }
                    row.insert(j);
                }
            }
        }
        // Transpose once: below[j] = { i : i < j }.
        let mut below = vec![BitSet::new(n); n];
        for (i, l) in less.iter().enumerate() {
            for j in l.iter() {
                below[j].insert(i);
            }
        }
        let mut covers = Vec::new();
        for (i, row) in less.iter().enumerate() {
            for j in row.iter() {
                // j covers i iff nothing sits strictly between.
                if !row.intersects(&below[j]) {
                    covers.push((i, j));
                }
            }
        }
        Poset::from_covers(labels, covers)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.cover_up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.cover_down[i]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.lt(i, j)
    }

    pub fn is_graded(&self) -> bool {
        self.rank.is_some()
    }

    /// Longest-chain rank; `None` when the poset is not graded.
    pub fn rank_of(&self, i: usize) -> Option<usize> {
        self.rank.as_ref().map(|r| r[i])
    }

    pub fn ranks(&self) -> Option<&[usize]> {
        self.rank.as_deref()
    }

    /// Longest-chain ranks, defined whether or not the poset is graded.
    pub fn chain_ranks(&self) -> Vec<usize> {
        if let Some(r) = &self.rank {
            return r.clone();
        }
        let mut rank = vec![0usize; self.len()];
        for x in self.topo_order() {
            for &y in &self.cover_down[x] {
                rank[x] = rank[x].max(rank[y] + 1);
            }
        }
        rank
    }

    pub fn height(&self) -> usize {
        self.rank
            .as_ref()
            .map(|r| r.iter().copied().max().unwrap_or(0))
            .unwrap_or_else(|| {
                let mut h = vec![0usize; self.len()];
                let mut best = 0;
                for x in self.topo_order() {
                    for &y in &self.cover_down[x] {
                        h[x] = h[x].max(h[y] + 1);
                    }
                    best = best.max(h[x]);
                }
                best
            })
    }

    fn topo_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.cover_down.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut topo = Vec::with_capacity(self.len());
        while let Some(x) = stack.pop() {
            topo.push(x);
            for &y in &self.cover_up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        topo
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.cover_up[i].is_empty())
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.cover_down[i].is_empty())
            .collect()
    }

    /// The order-reversed poset.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::from_covers(self.labels.clone(), covers).expect("dual of a poset is a poset")
    }

    /// Induced subposet on `keep` (order inherited); returns the poset and
    /// the map from new indices to old ones.
    pub fn induced(&self, keep: &[usize]) -> (Poset, Vec<usize>) {
        let keep = keep.to_vec();
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let poset = Poset::from_order(labels, |a, b| self.le(keep[a], keep[b]))
            .expect("induced order is a partial order");
        (poset, keep)
    }

    /// Number of elements strictly between `x` and `y`.
    pub fn open_interval_size(&self, x: usize, y: usize) -> usize {
        self.up[x].intersection_count(&self.down[y])
    }

    /// Rank-layered Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph \"{}\" {{\n", name.replace('"', "'")));
        out.push_str("  rankdir=BT;\n  node [shape=box];\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, l.replace('"', "'")));
        }
        let mut by_rank: HashMap<usize, Vec<usize>> = HashMap::new();
        if let Some(ranks) = &self.rank {
            for (i, &r) in ranks.iter().enumerate() {
                by_rank.entry(r).or_default().push(i);
            }
            let mut levels: Vec<usize> = by_rank.keys().copied().collect();
            levels.sort_unstable();
            for r in levels {
                out.push_str("  { rank=same;");
                for i in &by_rank[&r] {
                    out.push_str(&format!(" n{i};"));
                }
                out.push_str(" }\n");
            }
        }
        for &(a, b) in &self.covers {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Serializable document form: `{elements:[{id,label,rank}], covers:[[i,j]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<PosetElementDoc>,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetElementDoc {
    pub id: usize,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

impl From<&Poset> for PosetDoc {
    fn from(p: &Poset) -> Self {
        PosetDoc {
            elements: (0..p.len())
                .map(|i| PosetElementDoc {
                    id: i,
                    label: p.label(i).to_string(),
                    rank: p.rank_of(i),
                })
                .collect(),
            covers: p.covers().to_vec(),
        }
    }
}

impl TryFrom<&PosetDoc> for Poset {
    type Error = Error;

    fn try_from(doc: &PosetDoc) -> Result<Poset> {
        for (i, e) in doc.elements.iter().enumerate() {
            if e.id != i {
                return Err(Error::Invalid(format!(
                    "element ids must be 0..n, got {}",
                    e.id
                )));
            }
        }
        let labels = doc.elements.iter().map(|e| e.label.clone()).collect();
        Poset::from_covers(labels, doc.covers.clone())
    }
}

/// Every length-2 interval of a graded poset has exactly four elements.
pub fn diamond_check(p: &Poset) -> Result<bool> {
    let Some(ranks) = p.ranks() else {
        return Err(Error::NotGraded);
    };
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.lt(x, y) && ranks[y] == ranks[x] + 2 && p.open_interval_size(x, y) != 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of an isomorphism search. `BudgetExceeded` is explicitly distinct
/// from a proven non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[i]` is the image in `b` of element `i` of `a`.
    Iso(Vec<usize>),
    NonIso,
    BudgetExceeded,
}

impl IsoOutcome {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Iso(_))
    }
}

pub const DEFAULT_ISO_BUDGET: u64 = 20_000_000;

/// Order isomorphism search by individualization and refinement: colors are
/// refined over (rank, degrees, neighbor colors) until stable; then one
/// element of a smallest non-singleton class is pinned against each same-
/// color candidate in turn and the refinement is repeated. A bijection read
/// off a fully discrete coloring is always revalidated against the covers.
pub fn poset_iso(a: &Poset, b: &Poset, budget: u64) -> IsoOutcome {
    poset_iso_seeded(a, b, &vec![0; a.len()], &vec![0; b.len()], budget)
}

/// Like [`poset_iso`] but with externally imposed initial colors; images must
/// have the same seed color as their preimages.
pub fn poset_iso_seeded(
    a: &Poset,
    b: &Poset,
    seed_a: &[u64],
    seed_b: &[u64],
    budget: u64,
) -> IsoOutcome {
    if a.len() != b.len() || a.covers().len() != b.covers().len() {
        return IsoOutcome::NonIso;
    }
    if a.is_empty() {
        return IsoOutcome::Iso(Vec::new());
    }
    let mut nodes = 0u64;
    // A fresh pin color per individualization, shared by both sides.
    let mut pin_counter = 0u64;
    match ir_search(
        a,
        b,
        seed_a.to_vec(),
        seed_b.to_vec(),
        &mut nodes,
        budget,
        &mut pin_counter,
    ) {
        None => IsoOutcome::BudgetExceeded,
        Some(None) => IsoOutcome::NonIso,
        Some(Some(map)) => IsoOutcome::Iso(map),
    }
}

/// `None`: budget exhausted. `Some(None)`: no isomorphism on this branch.
fn ir_search(
    a: &Poset,
    b: &Poset,
    seed_a: Vec<u64>,
    seed_b: Vec<u64>,
    nodes: &mut u64,
    budget: u64,
    pin_counter: &mut u64,
) -> Option<Option<Vec<usize>>> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let ca = refine(a, &seed_a);
    let cb = refine(b, &seed_b);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Some(None);
    }
    // Group both sides by color.
    let mut classes_b: HashMap<u64, Vec<usize>> = HashMap::new();
    for (j, &c) in cb.iter().enumerate() {
        classes_b.entry(c).or_default().push(j);
    }
    let mut classes_a: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, &c) in ca.iter().enumerate() {
        classes_a.entry(c).or_default().push(i);
    }
    // Discrete coloring: the bijection is forced.
    if classes_a.values().all(|v| v.len() == 1) {
        let mut map = vec![usize::MAX; a.len()];
        for (color, xs) in &classes_a {
            map[xs[0]] = classes_b[color][0];
        }
        return if validate_iso(a, b, &map) {
            Some(Some(map))
        } else {
            Some(None)
        };
    }
    // Individualize one element of a smallest non-singleton class.
    let (&color, xs) = classes_a
        .iter()
        .filter(|(_, v)| v.len() > 1)
        .min_by_key(|(c, v)| (v.len(), **c))
        .expect("a non-singleton class exists");
    let x = xs[0];
    let candidates = classes_b[&color].clone();
    for y in candidates {
        *pin_counter += 1;
        let pin = {
            let mut h = DefaultHasher::new();
            (0x70696eu64, *pin_counter).hash(&mut h);
            h.finish()
        };
        let mut sa = seed_a.clone();
        let mut sb = seed_b.clone();
        sa[x] = pin;
        sb[y] = pin;
        if let Some(map) = ir_search(a, b, sa, sb, nodes, budget, pin_counter)? {
            return Some(Some(map));
        }
    }
    Some(None)
}

/// Recheck that `map` is a cover-preserving bijection in both directions.
pub fn validate_iso(a: &Poset, b: &Poset, map: &[usize]) -> bool {
    if map.len() != a.len() || a.len() != b.len() {
        return false;
    }
    let mut seen = vec![false; b.len()];
    for &j in map {
        if j >= b.len() || seen[j] {
            return false;
        }
        seen[j] = true;
    }
    let mapped: Vec<(usize, usize)> = {
        let mut v: Vec<(usize, usize)> =
            a.covers().iter().map(|&(x, y)| (map[x], map[y])).collect();
        v.sort_unstable();
        v
    };
    mapped == b.covers()
}

fn refine(p: &Poset, seed: &[u64]) -> Vec<u64> {
    let n = p.len();
    let mut colors: Vec<u64> = (0..n)
        .map(|i| {
            let mut h = DefaultHasher::new();
            seed[i].hash(&mut h);
            p.rank_of(i).hash(&mut h);
            p.upper_covers(i).len().hash(&mut h);
            p.lower_covers(i).len().hash(&mut h);
            h.finish()
        })
        .collect();
    for _ in 0..n.max(4) {
        let mut next = Vec::with_capacity(n);
        for i in 0..n {
            let mut ups: Vec<u64> = p.upper_covers(i).iter().map(|&u| colors[u]).collect();
            let mut downs: Vec<u64> = p.lower_covers(i).iter().map(|&u| colors[u]).collect();
            ups.sort_unstable();
            downs.sort_unstable();
            let mut h = DefaultHasher::new();
            colors[i].hash(&mut h);
            ups.hash(&mut h);
            downs.hash(&mut h);
            next.push(h.finish());
        }
        let classes_before = distinct(&colors);
        let classes_after = distinct(&next);
        colors = next;
        if classes_after == classes_before {
            break;
        }
    }
    colors
}

fn distinct(v: &[u64]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// A poset whose elements carry a face of the fundamental chamber, encoded by
/// its standard ordered set partition.
#[derive(Clone, Debug)]
pub struct SigmaPoset {
    pub d: usize,
    poset: Poset,
    carriers: Vec<OrderedSetPartition>,
}

impl SigmaPoset {
    pub fn new(d: usize, poset: Poset, carriers: Vec<OrderedSetPartition>) -> Result<Self> {
        if poset.len() != carriers.len() {
            return Err(Error::Invalid("one carrier per element required".into()));
        }
        for c in &carriers {
            if c.d() != d || !c.is_standard() {
                return Err(Error::Invalid(format!(
                    "carrier {} is not a standard partition of [{}]",
                    c.label(),
                    d
                )));
            }
        }
        Ok(SigmaPoset { d, poset, carriers })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn carriers(&self) -> &[OrderedSetPartition] {
        &self.carriers
    }

    pub fn carrier(&self, i: usize) -> &OrderedSetPartition {
        &self.carriers[i]
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// `x <= y` implies `carrier(x) <= carrier(y)` as faces: the carrier of
    /// `y` refines the carrier of `x` as a partition.
    pub fn is_order_consistent(&self) -> bool {
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.poset.lt(x, y) && !self.carriers[y].refines(&self.carriers[x]) {
                    return false;
                }
            }
        }
        true
    }
}

/// An element of the symmetrized poset: a base element together with the
/// canonical representative of a left coset of its carrier's stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedElement {
    pub base: usize,
    pub rep: Permutation,
}

#[derive(Clone, Debug)]
pub struct SymmetrizedPoset {
    pub poset: Poset,
    pub elements: Vec<SymmetrizedElement>,
}

/// Group symmetrization of an order-consistent tagged poset: the element set
/// is `{(x, g G_{ carrier(x) })}` and `(x, C) <= (y, C')` iff `x <= y` and
/// the cosets `C`, `C'` intersect.
pub fn symmetrize(r: &SigmaPoset, d: usize) -> Result<SymmetrizedPoset> {
    if r.d != d {
        return Err(Error::DimensionMismatch {
            expected: r.d,
            got: d,
        });
    }
    if !r.is_order_consistent() {
        return Err(Error::Invalid(
            "input tagged poset is not order-consistent".into(),
        ));
    }
    let faces: Vec<ChamberFace> = r
        .carriers()
        .iter()
        .map(|osp| ChamberFace::new(osp.clone()))
        .collect();
    let reps: Vec<Vec<Permutation>> = faces.iter().map(coset_reps).collect();
    let stabs: Vec<Vec<Permutation>> = faces.iter().map(stabilizer_elements).collect();

    let mut elements: Vec<SymmetrizedElement> = Vec::new();
    let mut offset = vec![0usize; r.len()];
    for (x, rx) in reps.iter().enumerate() {
        offset[x] = elements.len();
        for g in rx {
            elements.push(SymmetrizedElement {
                base: x,
                rep: g.clone(),
            });
        }
    }

    // Coset intersection: g1 G_1 meets g2 G_2 iff g2^{-1} g1 h lies in G_2
    // for some h in G_1. Enumerate the smaller stabilizer.
    let coset_meet = |x: usize, g1: &Permutation, y: usize, g2: &Permutation| -> bool {
        let (small_face, small_stab, big_face, lead) = if stabs[x].len() <= stabs[y].len() {
            (x, &stabs[x], y, g2.inverse().compose(g1))
        } else {
            (y, &stabs[y], x, g1.inverse().compose(g2))
        };
        let _ = small_face;
        small_stab
            .iter()
            .any(|h| stabilizer_contains(&faces[big_face], &lead.compose(h)))
    };

    let n = elements.len();
    let labels: Vec<String> = elements
        .iter()
        .map(|e| format!("({},{:?})", r.poset().label(e.base), e.rep))
        .collect();
    let mut less = vec![BitSet::new(n); n];
    for (i, ei) in elements.iter().enumerate() {
        for (j, ej) in elements.iter().enumerate() {
            if i == j || !r.poset().lt(ei.base, ej.base) {
                continue;
            }
            if coset_meet(ei.base, &ei.rep, ej.base, &ej.rep) {
                less[i].insert(j);
            }
        }
    }
    let poset = Poset::from_order(labels, |i, j| less[i].contains(j))?;
    let _ = offset;
    Ok(SymmetrizedPoset { poset, elements })
}

/// Expected size of the symmetrization: the sum over elements of the index
/// of the carrier's stabilizer.
pub fn symmetrized_size(r: &SigmaPoset, d: usize) -> u64 {
    let order: u64 = (1..=d as u64).product();
    r.carriers()
        .iter()
        .map(|osp| order / stabilizer_order(&ChamberFace::new(osp.clone())))
        .sum()
}

/// Isomorphism of tagged posets: an order isomorphism preserving carriers.
pub fn sigma_poset_iso(a: &SigmaPoset, b: &SigmaPoset, budget: u64) -> IsoOutcome {
    if a.d != b.d {
        return IsoOutcome::NonIso;
    }
    let key = |osp: &OrderedSetPartition| -> u64 {
        let mut h = DefaultHasher::new();
        osp.blocks().hash(&mut h);
        h.finish()
    };
    let seed_a: Vec<u64> = a.carriers().iter().map(key).collect();
    let seed_b: Vec<u64> = b.carriers().iter().map(key).collect();
    match poset_iso_seeded(a.poset(), b.poset(), &seed_a, &seed_b, budget) {
        IsoOutcome::Iso(map) => {
            for (i, &j) in map.iter().enumerate() {
                if a.carrier(i) != b.carrier(j) {
                    return IsoOutcome::NonIso;
                }
            }
            IsoOutcome::Iso(map)
        }
        other => other,
    }
}

/// Check the two generating-subposet axioms for a group acting on a poset.
/// `action[k]` is the permutation of element indices induced by the `k`-th
/// group element; `z` lists the candidate generator elements.
pub fn check_generating_subposet(t: &Poset, action: &[Vec<usize>], z: &[usize]) -> Result<bool> {
    let n = t.len();
    for perm in action {
        if perm.len() != n {
            return Err(Error::Invalid("action map has wrong length".into()));
        }
        let mut seen = vec![false; n];
        for &v in perm {
            if v >= n || seen[v] {
                return Err(Error::Invalid("action map is not a permutation".into()));
            }
            seen[v] = true;
        }
        for &(a, b) in t.covers() {
            let (ia, ib) = (perm[a], perm[b]);
            if !t.upper_covers(ia).contains(&ib) {
                return Err(Error::ActionNotOrderPreserving);
            }
        }
    }
    // (1) Disjoint orbit decomposition.
    let mut owner = vec![usize::MAX; n];
    for &zi in z {
        for perm in action {
            let img = perm[zi];
            if owner[img] != usize::MAX && owner[img] != zi {
                return Ok(false);
            }
            owner[img] = zi;
        }
    }
    if owner.contains(&usize::MAX) {
        return Ok(false);
    }
    // (2) Order transport: t1 <= t2 iff z1 <= z2 and a common group element
    // maps (z1, z2) to (t1, t2).
    for t1 in 0..n {
        for t2 in 0..n {
            if t1 == t2 {
                continue;
            }
            let (z1, z2) = (owner[t1], owner[t2]);
            let rhs = t.lt(z1, z2) && action.iter().any(|perm| perm[z1] == t1 && perm[z2] == t2);
            if t.lt(t1, t2) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds the poset-index action of the symmetric group on labelled elements.
/// `apply(g, i)` must return the index of the image of element `i`.
pub fn group_action_table(
    group: &TypeA,
    n: usize,
    apply: impl Fn(&Permutation, usize) -> usize,
) -> (Vec<Permutation>, Vec<Vec<usize>>) {
    let elems = group.elements();
    let tables = elems
        .iter()
        .map(|g| (0..n).map(|i| apply(g, i)).collect())
        .collect();
    (elems, tables)
}
