//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use kneserlab::defect::{cd3_certificate, colorability_defect, pairwise_condition};
use kneserlab::families::{
    build_general_kneser, build_kneser, build_rational_complete, build_schrijver, build_u,
    build_w, rational_canonical_coloring, SetSystem,
};
use kneserlab::graph::Graph;
use kneserlab::solve::{
    chromatic_number, circular_chromatic, enumerate_colorings, find_homomorphism, is_wide,
    max_closed_neighborhood_colors, random_proper_coloring, RationalValue,
};
use kneserlab::witness::{
    all_bipartitions, find_colorful_bipartite, find_zigzag, spencer_su_partition, sweep_verify,
    sweep_verify_sampled, SweepOptions, SweepOutcome, SweepProperty,
};
use kneserlab::Budget;

fn pass(criterion: u32, what: &str) {
    println!("criterion {criterion} PASS: {what}");
}

fn chi(g: &Graph) -> u32 {
    chromatic_number(g, &Budget::unlimited()).unwrap()
}

#[test]
fn criterion_01_chromatic_formulas() {
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3)] {
        let g = build_kneser(n, k).unwrap();
        assert_eq!(chi(&g) as usize, n - 2 * k + 2, "KG({n},{k})");
    }
    for (n, k) in [(5, 2), (6, 2), (7, 2)] {
        let g = build_schrijver(n, k).unwrap();
        assert_eq!(chi(&g) as usize, n - 2 * k + 2, "SG({n},{k})");
    }
    for q in 1..=3usize {
        for p in 2 * q..=9 {
            let g = build_rational_complete(p, q).unwrap();
            assert_eq!(chi(&g) as usize, p.div_ceil(q), "K_{p}/{q}");
        }
    }
    pass(1, "chromatic formulas for KG(n,k), SG(n,k), K_p/q");
}

#[test]
fn criterion_02_defect_formula() {
    for (n, k) in [(4, 1), (5, 1), (5, 2), (6, 2), (7, 2), (7, 3)] {
        let f = SetSystem::k_subsets(n, k).unwrap();
        assert_eq!(
            colorability_defect(&f, 2).size,
            n - 2 * k + 2,
            "cd2 of {k}-subsets of [{n}]"
        );
    }
    pass(2, "cd2(k-subsets of [n]) = n-2k+2");
}

#[test]
fn criterion_03_dolnikov_inequality() {
    let mut rng = common::seeded(0xD011480);
    let mut systems: Vec<SetSystem> = (0..200)
        .map(|_| common::random_system(&mut rng, 8, 10))
        .collect();
    for (n, k) in [(4, 1), (5, 1), (5, 2), (6, 2), (7, 2), (7, 3)] {
        systems.push(SetSystem::k_subsets(n, k).unwrap());
    }
    let mut violations = 0;
    for f in &systems {
        let defect = colorability_defect(f, 2).size;
        let graph = build_general_kneser(f).unwrap();
        if defect > chi(&graph) as usize {
            violations += 1;
        }
    }
    assert_eq!(violations, 0);
    pass(3, "cd2 <= chi(KG(F)) on 206 systems, zero violations");
}

#[test]
fn criterion_04_colorful_sweeps() {
    let instances: Vec<(&str, Graph, u32, u64)> = vec![
        ("KG(5,2)", build_kneser(5, 2).unwrap(), 3, 20),
        ("KG(6,2)", build_kneser(6, 2).unwrap(), 4, 160),
        ("SG(6,2)", build_schrijver(6, 2).unwrap(), 4, 52),
        ("SG(5,2)", build_schrijver(5, 2).unwrap(), 3, 5),
        ("W(2,3)", build_w(2, 3).unwrap(), 3, 85),
        ("U(3,2)", build_u(3, 2).unwrap(), 2, 4),
        ("K_5/2", build_rational_complete(5, 2).unwrap(), 3, 5),
    ];
    for (name, g, t, expected_colorings) in instances {
        assert_eq!(chi(&g), t, "{name} is {t}-chromatic");
        let report = sweep_verify(
            &g,
            t,
            &SweepProperty::Colorful { bipartition: None },
            &SweepOptions::default(),
            serde_json::Value::Null,
        );
        assert_eq!(report.outcome, SweepOutcome::Pass, "{name}");
        assert!(report.counterexample.is_none(), "{name}");
        assert_eq!(report.colorings_checked, expected_colorings, "{name}");
    }
    pass(
        4,
        "colorful bipartite witnesses across all canonical colorings and bipartitions",
    );
}

#[test]
fn criterion_05_zigzag_sweeps() {
    for (name, g, system, r) in [
        (
            "KG(5,2)",
            build_kneser(5, 2).unwrap(),
            SetSystem::k_subsets(5, 2).unwrap(),
            3u32,
        ),
        (
            "KG(6,2)",
            build_kneser(6, 2).unwrap(),
            SetSystem::k_subsets(6, 2).unwrap(),
            4u32,
        ),
    ] {
        assert_eq!(
            colorability_defect(&system, 2).size,
            r as usize,
            "{name}: r matches cd2"
        );
        let t = chi(&g);
        let canonical = sweep_verify(
            &g,
            t,
            &SweepProperty::Zigzag { r },
            &SweepOptions::default(),
            serde_json::Value::Null,
        );
        assert_eq!(canonical.outcome, SweepOutcome::Pass, "{name} canonical");

        let sampled = sweep_verify_sampled(
            &g,
            t + 1,
            &SweepProperty::Zigzag { r },
            100,
            0x5EED,
            &SweepOptions::default(),
            serde_json::Value::Null,
        );
        assert_eq!(sampled.outcome, SweepOutcome::Pass, "{name} sampled");
        assert_eq!(sampled.colorings_checked, 100, "{name} sampled count");
    }
    pass(
        5,
        "zig-zag witnesses in all canonical chi-colorings and 100 random (chi+1)-colorings",
    );
}

#[test]
fn criterion_06_negative_control() {
    let g = build_rational_complete(7, 2).unwrap();
    let c = rational_canonical_coloring(7, 2).unwrap();
    let colorful = find_colorful_bipartite(&g, &c, &[2, 4], &[1, 3]).unwrap();
    assert_eq!(colorful, None, "even/odd colorful witness must be absent");
    let zigzag = find_zigzag(&g, &c, 4).unwrap();
    assert_eq!(zigzag, None, "zig-zag of length 4 must be absent");
    pass(
        6,
        "K_7/2 canonical coloring defeats both the even/odd and the zig-zag search",
    );
}

#[test]
fn criterion_07_spencer_su() {
    for (name, system) in [
        ("KG(5,2)", SetSystem::k_subsets(5, 2).unwrap()),
        ("SG(6,2)", SetSystem::schrijver_subsets(6, 2).unwrap()),
    ] {
        let g = build_general_kneser(&system).unwrap();
        let t = chi(&g);
        let mut checked = 0u64;
        for c in enumerate_colorings(&g, t) {
            for (b1, b2) in all_bipartitions(t) {
                let partition = spencer_su_partition(&system, &c, &b1, &b2)
                    .unwrap_or_else(|e| panic!("{name}: {e}"));
                assert!(partition.verify(&system, &c), "{name}");
                assert_eq!(partition.colors_e1, b1, "{name}");
                assert_eq!(partition.colors_e2, b2, "{name}");
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
    pass(
        7,
        "ground partitions realize the prescribed color blocks exactly on KG(5,2) and SG(6,2)",
    );
}

#[test]
fn criterion_08_cd3_certificates() {
    let mut systems = vec![SetSystem::k_subsets(5, 2).unwrap()];
    let mut rng = common::seeded(0xCE47);
    while systems.len() < 101 {
        let f = common::random_system(&mut rng, 8, 10);
        if pairwise_condition(&f) {
            systems.push(f);
        }
    }
    for f in &systems {
        let cert = cd3_certificate(f).unwrap();
        assert!(cert.valid);
        assert!(cert.deleted.len() <= 3);
        assert!(colorability_defect(f, 2).size <= 3);
    }
    pass(
        8,
        "cd3 certificates valid with |Y| <= 3 on 101 pairwise-condition systems",
    );
}

#[test]
fn criterion_09_circular_chromatic() {
    let c5 = build_rational_complete(5, 2).unwrap();
    assert_eq!(
        circular_chromatic(&c5, &Budget::unlimited()).unwrap(),
        RationalValue::new(5, 2)
    );
    let k4 = build_rational_complete(4, 1).unwrap();
    assert_eq!(
        circular_chromatic(&k4, &Budget::unlimited()).unwrap(),
        RationalValue::new(4, 1)
    );
    let sg = build_schrijver(6, 2).unwrap();
    assert_eq!(
        circular_chromatic(&sg, &Budget::unlimited()).unwrap(),
        RationalValue::new(4, 1)
    );
    pass(9, "chi_c(C5) = 5/2, chi_c(K4) = 4/1, chi_c(SG(6,2)) = 4/1");
}

/// Local (m,r)-colorability by exhaustive canonical enumeration; false when
/// no proper m-coloring exists.
fn locally_colorable(g: &Graph, m: u32, r: u32) -> bool {
    enumerate_colorings(g, m)
        .any(|c| max_closed_neighborhood_colors(g, &c).unwrap() <= r)
}

/// s-wide t-colorability by exhaustive canonical enumeration.
fn wide_colorable(g: &Graph, s: u32, t: u32) -> bool {
    enumerate_colorings(g, t).any(|c| is_wide(g, &c, s).unwrap())
}

#[test]
fn criterion_10_universality() {
    let u32g = build_u(3, 2).unwrap();
    let u43 = build_u(4, 3).unwrap();
    let w13 = build_w(1, 3).unwrap();
    let w23 = build_w(2, 3).unwrap();
    let budget = Budget::unlimited();

    let mut rng = common::seeded(0x10CA1);
    let mut mismatches = 0;
    for _ in 0..100 {
        let g = common::random_graph(&mut rng, 6, 9);
        for (target, m, r) in [(&u32g, 3, 2), (&u43, 4, 3)] {
            let hom = find_homomorphism(&g, target, &budget).unwrap().is_some();
            if hom != locally_colorable(&g, m, r) {
                mismatches += 1;
            }
        }
        for (target, s, t) in [(&w13, 1, 3), (&w23, 2, 3)] {
            let hom = find_homomorphism(&g, target, &budget).unwrap().is_some();
            if hom != wide_colorable(&g, s, t) {
                mismatches += 1;
            }
        }
    }
    assert_eq!(mismatches, 0);
    pass(
        10,
        "hom-to-U(m,r) matches local colorability and hom-to-W(s,t) matches wideness on 100 graphs",
    );
}

#[test]
fn criterion_11_oracle_equivalence() {
    // graph corpus, at most 8 vertices each
    let mut graphs: Vec<Graph> = vec![
        build_rational_complete(5, 2).unwrap(),
        build_rational_complete(7, 2).unwrap(),
        build_rational_complete(4, 1).unwrap(),
        build_rational_complete(8, 3).unwrap(),
        build_schrijver(4, 2).unwrap(),
        build_schrijver(5, 2).unwrap(),
        build_u(3, 2).unwrap(),
        build_u(3, 3).unwrap(),
        build_w(1, 3).unwrap(),
        build_w(2, 2).unwrap(),
    ];
    let mut rng = common::seeded(0x0AC1E);
    for _ in 0..30 {
        graphs.push(common::random_graph(&mut rng, 8, 28));
    }
    for g in &graphs {
        assert_eq!(chi(g), common::naive_chromatic(g), "{g:?}");
    }

    // colorful search against the product-enumeration oracle
    for g in &graphs {
        if g.edge_count() == 0 {
            continue;
        }
        let t = chi(g);
        for c in enumerate_colorings(g, t) {
            for (a, b) in all_bipartitions(t) {
                let found = find_colorful_bipartite(g, &c, &a, &b).unwrap().is_some();
                let oracle = common::naive_colorful_exists(g, &c, &a, &b);
                assert_eq!(found, oracle, "{g:?} bipartition {a:?}/{b:?}");
            }
        }
    }

    // defect against the subset-minimization oracle
    let mut systems: Vec<SetSystem> = vec![
        SetSystem::k_subsets(4, 1).unwrap(),
        SetSystem::k_subsets(5, 2).unwrap(),
        SetSystem::k_subsets(6, 2).unwrap(),
        SetSystem::k_subsets(6, 3).unwrap(),
        SetSystem::schrijver_subsets(6, 2).unwrap(),
    ];
    for _ in 0..30 {
        systems.push(common::random_system(&mut rng, 8, 10));
    }
    for f in &systems {
        for m in [2, 3] {
            assert_eq!(
                colorability_defect(f, m).size,
                common::naive_defect(f, m),
                "defect mismatch"
            );
        }
    }
    pass(
        11,
        "chromatic, defect, and colorful searches agree with naive enumeration oracles",
    );
}

#[test]
fn criterion_05b_random_colorings_are_proper_and_distinct() {
    // supporting check for the sampled side of criterion 5: the seeded
    // generator actually produces proper colorings at the requested palette
    let g = build_kneser(5, 2).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..100u64 {
        let mut rng = common::seeded(0x5EED_u64.wrapping_add(i));
        let c = random_proper_coloring(&g, 4, &mut rng).unwrap();
        assert!(kneserlab::solve::is_proper(&g, &c).unwrap());
        seen.insert(c.colors().to_vec());
    }
    assert!(seen.len() > 10, "sampling collapsed to {} colorings", seen.len());
}
