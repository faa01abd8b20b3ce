mod common;

use common::*;
use lyndon_pbw::cli::corpus::CORPUS;
use lyndon_pbw::pbw::{
    check_structure, hilbert_report, reorder_to_bounded, verify_condition_1, verify_condition_2,
    verify_condition_3, CheckStatus,
};
use lyndon_pbw::presentation::{check_delta_ideal, compare_with_subalgebra, validate};
use lyndon_pbw::rewrite::complete;

fn delta_passing() -> Vec<&'static str> {
    CORPUS
        .iter()
        .filter(|e| {
            let p = load(e);
            validate(&p).is_empty() && {
                let gb = complete(p.alphabet(), p.relations(), p.bound()).unwrap();
                check_delta_ideal(&p, &gb).unwrap().passed()
            }
        })
        .map(|e| e.name)
        .collect()
}

#[test]
fn obstructions_lyndon_and_irreducibles_are_lyndon_products() {
    let names = delta_passing();
    assert!(names.len() >= 8);
    for name in names {
        let s = setup(corpus(name));
        let r = check_structure(&s.d, &s.gb).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
    }
}

#[test]
fn subalgebra_ideal_is_intersection() {
    for name in [
        "heisenberg-over-x",
        "commutative-2-over-x1",
        "heisenberg-central",
        "heisenberg-whole",
    ] {
        let s = setup(corpus(name));
        let sub_len = s.p.subalgebra_len();
        let report = compare_with_subalgebra(&s.gb, &s.gb_j, sub_len).unwrap();
        assert!(report.passed(), "{name}: {report:?}");
        // Independent check: J-irreducible counts equal X'-words minus the
        // dimension of the ideal slice restricted to X'-words.
        let degrees = degrees_of(s.p.alphabet());
        let rels = rels_of(&s.p);
        for n in 0..=6 {
            let expected =
                sub_words(&degrees, n, sub_len) - intersection_dim(&degrees, &rels, n, sub_len);
            assert_eq!(
                s.gb_j.irreducible_words(n).unwrap().len(),
                expected,
                "{name} degree {n}"
            );
        }
    }
}

#[test]
fn central_extension_has_nontrivial_subalgebra_ideal() {
    let s = setup(corpus("heisenberg-central"));
    let a = s.p.alphabet();
    assert_eq!(s.gb_j.elements().len(), 1);
    assert_eq!(
        a.render(s.gb_j.elements()[0].leading_word().unwrap()),
        "z·x"
    );
    assert_eq!(render_all(a, &s.d.gamma), ["y"]);
    assert_eq!(render_all(a, &s.d.n_j), ["x", "z"]);
}

fn conditions_hold(name: &str) {
    let s = setup(corpus(name));
    for c in verify_condition_1(&s.d, &s.p, &s.gb).unwrap() {
        assert_eq!(
            c.status,
            CheckStatus::Pass,
            "{name} coproduct {:?}",
            c.gamma
        );
    }
    for c in verify_condition_2(&s.d, &s.p, &s.gb).unwrap() {
        assert_ne!(
            c.status,
            CheckStatus::Fail,
            "{name} commutator {:?}",
            c.gamma
        );
    }
    for n in 0..=6 {
        let c = verify_condition_3(&s.d, &s.p, &s.gb, n).unwrap();
        assert!(c.passed(), "{name} module basis {c:?}");
        assert_eq!(
            c.dim,
            quotient_dim(&degrees_of(s.p.alphabet()), &rels_of(&s.p), n)
        );
    }
}

#[test]
fn pbw_conditions_heisenberg_over_field() {
    conditions_hold("heisenberg");
}

#[test]
fn pbw_conditions_heisenberg_over_x() {
    conditions_hold("heisenberg-over-x");
}

#[test]
fn pbw_conditions_divided_power() {
    conditions_hold("divided-power");
    let s = setup(corpus("divided-power"));
    let c1 = verify_condition_1(&s.d, &s.p, &s.gb).unwrap();
    // Δ(w) − w⊗1 − 1⊗w = v⊗v with v < w.
    let w = c1
        .iter()
        .find(|c| s.p.alphabet().render(&c.gamma) == "w")
        .unwrap();
    assert_eq!(
        w.residual.to_triples(s.p.alphabet()),
        [("1/1".into(), "v".into(), "v".into())]
    );
}

#[test]
fn pbw_conditions_remaining_corpus() {
    for name in [
        "commutative-2",
        "commutative-2-over-x1",
        "commutative-3",
        "heisenberg-central",
        "heisenberg-whole",
    ] {
        conditions_hold(name);
    }
}

#[test]
fn gk_dimensions() {
    let cases = [
        ("heisenberg", 3, 0, true),
        ("heisenberg-over-x", 3, 1, true),
        ("commutative-2", 2, 0, true),
        ("commutative-3", 3, 0, true),
        ("heisenberg-central", 3, 2, true),
        ("divided-power", 2, 0, true),
        ("heisenberg-whole", 3, 3, true),
    ];
    for (name, gk, gk_b, certified) in cases {
        let s = setup(corpus(name));
        let h = hilbert_report(&s.d, &s.gb).unwrap();
        assert_eq!(h.gk_estimate.count, gk, "{name}");
        assert_eq!(h.gk_estimate.certified, certified, "{name}");
        assert_eq!(h.gk_subalgebra, gk_b, "{name}");
        assert_eq!(h.gamma_count, gk - gk_b, "{name}");
        assert!(h.consistent(), "{name}");
    }
    let s = setup(corpus("witt-truncated"));
    assert!(!hilbert_report(&s.d, &s.gb).unwrap().gk_estimate.certified);
}

#[test]
fn heisenberg_hilbert_series() {
    let s = setup(corpus("heisenberg"));
    let h = hilbert_report(&s.d, &s.gb).unwrap();
    assert_eq!(h.dims[..6], [1, 2, 4, 6, 9, 12]);
    assert_eq!(h.product_dims[..6], [1, 2, 4, 6, 9, 12]);
    let oracle: Vec<usize> = (0..6)
        .map(|n| quotient_dim(&[1, 1], &rels_of(&s.p), n))
        .collect();
    assert_eq!(oracle, [1, 2, 4, 6, 9, 12]);
}

#[test]
fn gamma_orders() {
    let cases: [(&str, &[&str]); 5] = [
        ("heisenberg", &["x", "y·x", "y"]),
        ("heisenberg-over-x", &["y·x", "y"]),
        ("commutative-2", &["x1", "x2"]),
        ("commutative-2-over-x1", &["x2"]),
        ("heisenberg-whole", &[]),
    ];
    for (name, gamma) in cases {
        let s = setup(corpus(name));
        assert_eq!(render_all(s.p.alphabet(), &s.d.gamma), gamma, "{name}");
    }
}

#[test]
fn whole_algebra_has_trivial_module_basis() {
    let s = setup(corpus("heisenberg-whole"));
    for n in 0..=6 {
        let c = verify_condition_3(&s.d, &s.p, &s.gb, n).unwrap();
        assert!(c.passed());
    }
    assert!(s.d.gamma.is_empty());
}

#[test]
fn reordering_stays_below_the_maximum() {
    let s = setup(corpus("heisenberg"));
    let n_i = s.d.n_i.clone();
    for u in &n_i {
        for v in &n_i {
            for w in &n_i {
                let seq = [u.clone(), v.clone(), w.clone()];
                if seq.iter().map(|x| x.degree()).sum::<u32>() > 6 {
                    continue;
                }
                let r = reorder_to_bounded(&seq, &s.d, &s.gb).unwrap();
                assert!(r.certified, "{seq:?}");
            }
        }
    }
}
