//! Deterministic constructors for the graph families under study.
//!
//! Every constructor fixes a canonical vertex order (lexicographic subsets or
//! tuples, numeric indices) so exports and witness indices are stable across
//! runs and platforms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::bits::BitSet;
use crate::error::FamilyError;
use crate::graph::{Graph, Provenance};
use crate::solve::Coloring;

/// Tolerance absorbing floating-point noise when comparing pair distances
/// against the threshold in sphere-sampled graphs.
pub const DISTANCE_SLACK: f64 = 1e-12;

/// Tolerance for the unit-norm check on sphere points.
pub const SPHERE_NORM_TOL: f64 = 1e-9;

/// All k-element subsets of `items`, in lexicographic order of their
/// ascending element sequences.
pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance the rightmost index that can still move
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + items.len() - k {
                idx[pos] += 1;
                for j in pos + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

fn subset_label(elements: &[usize]) -> String {
    let inner = elements
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

/// A ground set `[n]` together with a family of nonempty subsets.
///
/// Elements are 1-based externally and stored as bits `element - 1`.
/// Duplicate members are kept exactly as given; the synthetic constructors
/// never emit duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    ground: usize,
    sets: Vec<BitSet>,
}

impl SetSystem {
    /// Builds a system from explicit 1-based members, validating that no
    /// member is empty and every element lies in `[ground]`.
    pub fn from_sets(ground: usize, sets: &[Vec<usize>]) -> Result<Self, FamilyError> {
        if ground == 0 {
            return Err(FamilyError::InvalidParameter(
                "ground size must be positive".into(),
            ));
        }
        let mut members = Vec::with_capacity(sets.len());
        for (index, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(FamilyError::EmptySetMember { index });
            }
            let mut bits = BitSet::new(ground);
            for &e in s {
                if e == 0 || e > ground {
                    return Err(FamilyError::ElementOutOfRange { element: e, ground });
                }
                bits.insert(e - 1);
            }
            members.push(bits);
        }
        Ok(SetSystem {
            ground,
            sets: members,
        })
    }

    /// All k-subsets of `[n]` in lexicographic order.
    pub fn k_subsets(n: usize, k: usize) -> Result<Self, FamilyError> {
        if k == 0 || k > n {
            return Err(FamilyError::InvalidParameter(format!(
                "need 1 <= k <= n, got n={n} k={k}"
            )));
        }
        let items: Vec<usize> = (1..=n).collect();
        let sets = combinations(&items, k);
        SetSystem::from_sets(n, &sets)
    }

    /// The k-subsets of `[n]` containing no cyclically consecutive pair,
    /// i.e. no `{i, i+1}` and not `{1, n}` together, in lexicographic order.
    pub fn schrijver_subsets(n: usize, k: usize) -> Result<Self, FamilyError> {
        if k == 0 || n < 2 * k {
            return Err(FamilyError::InvalidParameter(format!(
                "need 1 <= k and n >= 2k, got n={n} k={k}"
            )));
        }
        let items: Vec<usize> = (1..=n).collect();
        let sets: Vec<Vec<usize>> = combinations(&items, k)
            .into_iter()
            .filter(|s| {
                let consecutive = s.windows(2).any(|w| w[1] == w[0] + 1);
                let wraps = n > 1 && s.first() == Some(&1) && s.last() == Some(&n);
                !consecutive && !wraps
            })
            .collect();
        SetSystem::from_sets(n, &sets)
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn members(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Union of all members, as a bitset over the ground set.
    pub fn support(&self) -> BitSet {
        let mut u = BitSet::new(self.ground);
        for s in &self.sets {
            u.union_with(s);
        }
        u
    }

    /// Member as ascending 1-based elements.
    pub fn member_elements(&self, index: usize) -> Vec<usize> {
        self.sets[index].iter().map(|b| b + 1).collect()
    }

    pub fn member_label(&self, index: usize) -> String {
        subset_label(&self.member_elements(index))
    }

    /// Distinct member values, sorted lexicographically by their ascending
    /// element sequences.
    pub fn distinct_members(&self) -> Vec<BitSet> {
        let mut seen: Vec<(Vec<usize>, BitSet)> = Vec::new();
        for s in &self.sets {
            let key: Vec<usize> = s.iter().collect();
            if !seen.iter().any(|(k, _)| *k == key) {
                seen.push((key, s.clone()));
            }
        }
        seen.sort_by(|a, b| a.0.cmp(&b.0));
        seen.into_iter().map(|(_, s)| s).collect()
    }
}

fn disjointness_graph(system: &SetSystem, prov: Provenance) -> Result<Graph, FamilyError> {
    // duplicate members are distinct vertices; suffix repeats to keep the
    // labels pairwise distinct
    let mut counts: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    let labels: Vec<String> = (0..system.len())
        .map(|i| {
            let base = system.member_label(i);
            let seen = counts.entry(base.clone()).or_insert(0);
            *seen += 1;
            if *seen == 1 {
                base
            } else {
                format!("{base}#{seen}")
            }
        })
        .collect();
    let mut g = Graph::new(labels, prov)?;
    for u in 0..system.len() {
        for v in u + 1..system.len() {
            if system.sets[u].is_disjoint(&system.sets[v]) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// General Kneser graph of a set system: one vertex per member in input
/// order, edges between disjoint members.
pub fn build_general_kneser(system: &SetSystem) -> Result<Graph, FamilyError> {
    if system.is_empty() {
        return Err(FamilyError::InvalidParameter(
            "set system has no members".into(),
        ));
    }
    disjointness_graph(
        system,
        Provenance::new("general-kneser")
            .with("ground", system.ground_size() as u64)
            .with("members", system.len() as u64),
    )
}

/// Kneser graph: vertices are the k-subsets of `[n]` in lexicographic order,
/// edges between disjoint subsets.
pub fn build_kneser(n: usize, k: usize) -> Result<Graph, FamilyError> {
    let system = SetSystem::k_subsets(n, k)?;
    disjointness_graph(
        &system,
        Provenance::new("kneser")
            .with("n", n as u64)
            .with("k", k as u64),
    )
}

/// Schrijver graph: the subgraph of the Kneser graph induced on subsets with
/// no cyclically consecutive elements.
pub fn build_schrijver(n: usize, k: usize) -> Result<Graph, FamilyError> {
    let system = SetSystem::schrijver_subsets(n, k)?;
    disjointness_graph(
        &system,
        Provenance::new("schrijver")
            .with("n", n as u64)
            .with("k", k as u64),
    )
}

/// Generalized Mycielskian with `r` levels over a base graph.
///
/// Level-p copy of vertex i is adjacent to the level-q copy of vertex j when
/// ij is a base edge and either p = q = 0 or |p - q| = 1; an apex vertex is
/// adjacent to every vertex of the top level r-1. Canonical order: level 0,
/// level 1, ..., level r-1, then the apex.
pub fn build_mycielski(base: &Graph, r: usize) -> Result<Graph, FamilyError> {
    if r == 0 {
        return Err(FamilyError::InvalidParameter(
            "level count r must be positive".into(),
        ));
    }
    let n = base.vertex_count();
    let mut labels = Vec::with_capacity(r * n + 1);
    for level in 0..r {
        for v in 0..n {
            labels.push(format!("{}@{}", base.label(v), level));
        }
    }
    labels.push("apex".to_string());
    let prov = Provenance::new("mycielski")
        .with("levels", r as u64)
        .with("base", base.provenance().family.clone());
    let mut g = Graph::new(labels, prov)?;
    let id = |level: usize, v: usize| level * n + v;
    for (u, v) in base.edges() {
        g.add_edge(id(0, u), id(0, v))?;
        for level in 0..r.saturating_sub(1) {
            g.add_edge(id(level, u), id(level + 1, v))?;
            g.add_edge(id(level, v), id(level + 1, u))?;
        }
    }
    let apex = r * n;
    for v in 0..n {
        g.add_edge(id(r - 1, v), apex)?;
    }
    Ok(g)
}

/// Universal graph for local colorings: vertices are pairs (i, A) with
/// i in [m], A an (r-1)-subset of [m] avoiding i, ordered lexicographically
/// by (i, A); (i, A) and (j, B) are adjacent when i is in B and j is in A.
pub fn build_u(m: usize, r: usize) -> Result<Graph, FamilyError> {
    if r == 0 || r > m {
        return Err(FamilyError::InvalidParameter(format!(
            "need 1 <= r <= m, got m={m} r={r}"
        )));
    }
    let items: Vec<usize> = (1..=m).collect();
    let mut vertices: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 1..=m {
        for a in combinations(&items, r - 1) {
            if !a.contains(&i) {
                vertices.push((i, a));
            }
        }
    }
    let labels: Vec<String> = vertices
        .iter()
        .map(|(i, a)| format!("({i},{})", subset_label(a)))
        .collect();
    let prov = Provenance::new("u")
        .with("m", m as u64)
        .with("r", r as u64);
    let mut g = Graph::new(labels, prov)?;
    for x in 0..vertices.len() {
        for y in x + 1..vertices.len() {
            let (i, a) = &vertices[x];
            let (j, b) = &vertices[y];
            if b.contains(i) && a.contains(j) {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}

/// Universal graph for wide colorings: vertices are words of length t over
/// {0..s} with exactly one 0 and at least one 1, in lexicographic order;
/// words are adjacent when every coordinate pair differs by one or both
/// equal s.
pub fn build_w(s: usize, t: usize) -> Result<Graph, FamilyError> {
    if s == 0 {
        return Err(FamilyError::InvalidParameter(
            "path length s must be positive".into(),
        ));
    }
    if t < 2 {
        return Err(FamilyError::InvalidParameter(format!(
            "need t >= 2, got t={t}"
        )));
    }
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut word = vec![0usize; t];
    loop {
        let zeros = word.iter().filter(|&&x| x == 0).count();
        let has_one = word.iter().any(|&x| x == 1);
        if zeros == 1 && has_one {
            words.push(word.clone());
        }
        // lexicographic odometer over {0..s}^t
        let mut advanced = false;
        let mut pos = t;
        while pos > 0 {
            pos -= 1;
            if word[pos] < s {
                word[pos] += 1;
                for x in word.iter_mut().skip(pos + 1) {
                    *x = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    let labels: Vec<String> = words
        .iter()
        .map(|w| {
            if s <= 9 {
                w.iter().map(|x| x.to_string()).collect::<String>()
            } else {
                w.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        })
        .collect();
    let prov = Provenance::new("w")
        .with("s", s as u64)
        .with("t", t as u64);
    let mut g = Graph::new(labels, prov)?;
    let coord_ok = |a: usize, b: usize| a.abs_diff(b) == 1 || (a == s && b == s);
    for x in 0..words.len() {
        for y in x + 1..words.len() {
            if words[x]
                .iter()
                .zip(&words[y])
                .all(|(&a, &b)| coord_ok(a, b))
            {
                g.add_edge(x, y)?;
            }
        }
    }
    Ok(g)
}

/// Rational (circular) complete graph: vertices 0..p-1, edges where
/// q <= |i - j| <= p - q.
pub fn build_rational_complete(p: usize, q: usize) -> Result<Graph, FamilyError> {
    if q == 0 || p < 2 * q {
        return Err(FamilyError::InvalidParameter(format!(
            "need p >= 2q >= 2, got p={p} q={q}"
        )));
    }
    let labels: Vec<String> = (0..p).map(|i| i.to_string()).collect();
    let prov = Provenance::new("rational")
        .with("p", p as u64)
        .with("q", q as u64);
    let mut g = Graph::new(labels, prov)?;
    for i in 0..p {
        for j in i + 1..p {
            let d = j - i;
            if d >= q && d <= p - q {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// The proper coloring of the rational complete graph that assigns vertex i
/// the color i/q + 1, using the minimal palette of ceil(p/q) colors.
pub fn rational_canonical_coloring(p: usize, q: usize) -> Result<Coloring, FamilyError> {
    if q == 0 || p < 2 * q {
        return Err(FamilyError::InvalidParameter(format!(
            "need p >= 2q >= 2, got p={p} q={q}"
        )));
    }
    let palette = p.div_ceil(q) as u32;
    let colors: Vec<u32> = (0..p).map(|i| (i / q) as u32 + 1).collect();
    Ok(Coloring::new(palette, colors).expect("canonical coloring is within its palette"))
}

/// Points on the unit sphere S^{d-1}, with the seed that produced them.
#[derive(Clone, Debug)]
pub struct SpherePointSet {
    pub dimension: usize,
    pub points: Vec<Vec<f64>>,
    pub seed: u64,
}

impl SpherePointSet {
    /// `count` equally spaced points on the unit circle, starting at (1, 0).
    pub fn equally_spaced_circle(count: usize) -> Self {
        let points = (0..count)
            .map(|i| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / count as f64;
                vec![theta.cos(), theta.sin()]
            })
            .collect();
        SpherePointSet {
            dimension: 2,
            points,
            seed: 0,
        }
    }

    /// Seeded uniform sample of `count` points on S^{d-1} (normalized
    /// Gaussian vectors).
    pub fn sample_uniform(dimension: usize, count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let normal = StandardNormal;
        let mut points = Vec::with_capacity(count);
        while points.len() < count {
            let v: Vec<f64> = (0..dimension)
                .map(|_| normal.sample(&mut rng))
                .collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue;
            }
            points.push(v.into_iter().map(|x| x / norm).collect());
        }
        SpherePointSet {
            dimension,
            points,
            seed,
        }
    }
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Finite sampled subgraph of a Borsuk graph: one vertex per point, edges
/// between points at Euclidean distance at least `alpha` (up to
/// [`DISTANCE_SLACK`]).
pub fn build_borsuk_sample(
    d: usize,
    alpha: f64,
    points: &SpherePointSet,
) -> Result<Graph, FamilyError> {
    if d < 2 {
        return Err(FamilyError::InvalidParameter(format!(
            "need dimension d >= 2, got {d}"
        )));
    }
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(FamilyError::InvalidParameter(format!(
            "need alpha in (0, 2], got {alpha}"
        )));
    }
    if points.dimension != d {
        return Err(FamilyError::DimensionMismatch {
            expected: d,
            got: points.dimension,
        });
    }
    for (index, p) in points.points.iter().enumerate() {
        if p.len() != d {
            return Err(FamilyError::DimensionMismatch {
                expected: d,
                got: p.len(),
            });
        }
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > SPHERE_NORM_TOL {
            return Err(FamilyError::NotOnSphere { index, norm });
        }
    }
    let labels: Vec<String> = (0..points.points.len()).map(|i| i.to_string()).collect();
    let prov = Provenance::new("borsuk")
        .with("d", d as u64)
        .with("alpha", alpha)
        .with("points", points.points.len() as u64)
        .with_seed(points.seed);
    let mut g = Graph::new(labels, prov)?;
    for i in 0..points.points.len() {
        for j in i + 1..points.points.len() {
            if euclidean(&points.points[i], &points.points[j]) >= alpha - DISTANCE_SLACK {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
