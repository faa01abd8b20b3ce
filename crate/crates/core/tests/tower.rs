mod common;

use common::*;
use lyndon_pbw::freealg::Poly;
use lyndon_pbw::ihoe::{build_tower, check_leibniz, tower_monomials, verify_step_freeness};
use lyndon_pbw::linalg;
use lyndon_pbw::pbw::module_family;
use lyndon_pbw::Error;

fn verified(name: &str, expected_len: usize) {
    let s = setup(corpus(name));
    let t = build_tower(&s.d, &s.gb).unwrap();
    assert_eq!(t.l, expected_len, "{name}");
    assert_eq!(t.l, s.d.n_i.len() - s.d.n_j.len(), "{name}");
    assert_eq!(t.certified_through_degree, 6);
    for i in 0..t.l {
        assert!(
            check_leibniz(&t, &s.d, &s.gb, i).unwrap().is_empty(),
            "{name} step {i}"
        );
        for n in 0..=6 {
            let f = verify_step_freeness(&t, &s.d, &s.gb, i, n).unwrap();
            assert!(f.passed(), "{name} {f:?}");
        }
    }
    for n in 0..=6 {
        let tower = tower_monomials(&t, &s.d, &s.gb, n).unwrap();
        let family = module_family(&s.d, &s.gb, n, false).unwrap();
        assert_eq!(linalg::rank(&tower), tower.len());
        assert_eq!(
            linalg::rank(tower.iter().chain(&family)),
            family.len(),
            "{name} degree {n}"
        );
        assert_eq!(
            tower.len(),
            quotient_dim(&degrees_of(s.p.alphabet()), &rels_of(&s.p), n)
        );
    }
}

#[test]
fn heisenberg_three_steps() {
    verified("heisenberg", 3);
    let s = setup(corpus("heisenberg"));
    let t = build_tower(&s.d, &s.gb).unwrap();
    let a = s.p.alphabet();
    let step3: Vec<(String, Vec<(String, String)>)> = t.steps[2]
        .delta_table
        .iter()
        .map(|(g, v)| (g.label(a), v.to_pairs(a)))
        .collect();
    assert_eq!(
        step3,
        [
            (
                "z[x]".to_string(),
                vec![("1/1".to_string(), "y·x".to_string())]
            ),
            ("z[y·x]".to_string(), vec![]),
        ]
    );
    // δ₃(x) is z_yx itself, i.e. yx − xy in normal words.
    let back = lyndon_pbw::pbw::PbwBasis::new(&s.gb)
        .from_coordinates(&t.steps[2].delta_table[0].1)
        .unwrap();
    assert_eq!(
        back.to_pairs(a),
        [("1/1".into(), "y·x".into()), ("-1/1".into(), "x·y".into())]
    );
}

#[test]
fn heisenberg_over_x_two_steps() {
    verified("heisenberg-over-x", 2);
}

#[test]
fn remaining_towers() {
    for (name, l) in [
        ("commutative-2", 2),
        ("commutative-2-over-x1", 1),
        ("commutative-3", 3),
        ("heisenberg-central", 1),
        ("divided-power", 2),
    ] {
        verified(name, l);
    }
}

#[test]
fn witt_truncation_is_inconclusive() {
    let s = setup(corpus("witt-truncated"));
    assert!(matches!(
        build_tower(&s.d, &s.gb),
        Err(Error::InfiniteGamma(_))
    ));
}

#[test]
fn mutated_delta_table_fails_freeness() {
    let s = setup(corpus("heisenberg"));
    let mut t = build_tower(&s.d, &s.gb).unwrap();
    t.steps[2].delta_table[0].1 = Poly::zero();
    let results: Vec<bool> = (0..=6)
        .map(|n| {
            verify_step_freeness(&t, &s.d, &s.gb, 2, n)
                .unwrap()
                .passed()
        })
        .collect();
    assert!(results.iter().any(|ok| !ok));
    assert!(!check_leibniz(&t, &s.d, &s.gb, 2).unwrap().is_empty());
}
