use monoidrep_core::builtin::*;
use monoidrep_core::green::{left_set, right_set, two_sided_set, verify_mackey};
use monoidrep_core::inverse::involution;
use monoidrep_core::random::{random_submonoid, random_transformation_monoid, rng};
use monoidrep_core::*;
use proptest::prelude::*;

fn corpus() -> Vec<FiniteMonoid> {
    vec![
        symmetric_inverse_monoid(2),
        symmetric_inverse_monoid(3),
        full_transformation_monoid(2),
        full_transformation_monoid(3),
        symmetric_group(3),
        nilpotent3(),
        cyclic(4),
    ]
}

fn check_lm(m: &FiniteMonoid, n: &Submonoid) {
    for x in m.elements() {
        let nx = left_set(m, n, x);
        let nxn = two_sided_set(m, n, n, x);
        for &a in n.members() {
            let ax = m.mul(a, x);
            let lhs = two_sided_set(m, n, n, ax) == nxn;
            let rhs = left_set(m, n, ax) == nx;
            assert_eq!(lhs, rhs, "lemma lm fails at n={a}, m={x}");
        }
    }
}

fn check_local_counts(m: &FiniteMonoid, n: &Submonoid) {
    let g = green_relative(m, n, n);
    for x in m.elements() {
        let rec = g.record_at(m, x);
        let lm = local_monoid(m, n, x);
        // units of (N_m, ∘_m) are L ∩ R
        assert_eq!(lm.units, rec.h_class, "G_m^N differs from L∩R at {x}");
        assert_eq!(rec.members.len(), rec.alpha() * rec.beta() * lm.units.len());
        assert!(lm.monoid.check_associative().is_ok());
    }
}

fn check_tworegular(m: &FiniteMonoid, n: &Submonoid) {
    let rel = green_relative(m, n, n);
    let abs = GreenData::absolute(m);
    let nm = n.as_monoid(m);
    let regular: Vec<usize> = (0..nm.size()).filter(|&i| nm.is_regular_element(i)).map(|i| n.members()[i]).collect();
    for &a in &regular {
        for &b in &regular {
            assert_eq!(rel.same_l(a, b), abs.same_l(a, b));
            assert_eq!(rel.same_r(a, b), abs.same_r(a, b));
        }
    }
}

#[test]
fn lemmas_on_corpus() {
    for m in corpus() {
        let subs = vec![Submonoid::whole(&m), Submonoid::trivial(&m), Submonoid::units(&m)];
        for n in &subs {
            check_lm(&m, n);
            check_local_counts(&m, n);
            check_tworegular(&m, n);
        }
    }
}

#[test]
fn mackey_on_corpus() {
    for m in corpus() {
        let subs = vec![Submonoid::whole(&m), Submonoid::trivial(&m), Submonoid::units(&m)];
        for n in &subs {
            for k in &subs {
                let cells = mackey_decompose(&m, n, k);
                verify_mackey(&m, &cells).unwrap();
                for c in &cells {
                    assert_eq!(two_sided_set(&m, n, k, c.class.rep).len() >= c.class.members.len(), true);
                }
            }
        }
    }
}

#[test]
fn inverse_monoid_involution() {
    for m in [symmetric_inverse_monoid(2), symmetric_inverse_monoid(3), symmetric_group(3)] {
        let star = involution(&m).unwrap();
        for x in m.elements() {
            assert_eq!(star[star[x]], x);
            assert_eq!(m.mul(m.mul(x, star[x]), x), x);
            for y in m.elements() {
                assert_eq!(star[m.mul(x, y)], m.mul(star[y], star[x]));
            }
        }
        let subs = vec![
            Submonoid::whole(&m),
            Submonoid::units(&m),
            Submonoid::generated(&m, &m.idempotents()),
        ];
        for n in &subs {
            for x in m.elements() {
                let (_, g) = local_group(&m, n, x);
                let (_, gs) = local_group(&m, n, star[x]);
                let mut img: Vec<usize> = g.iter().map(|&u| star[u]).collect();
                img.sort();
                assert_eq!(img, gs);
            }
        }
    }
}

#[test]
fn local_group_at_idempotent_is_maximal_subgroup() {
    for m in [symmetric_inverse_monoid(3), full_transformation_monoid(3)] {
        let w = Submonoid::whole(&m);
        for e in m.idempotents() {
            // brute force: units of eMe
            let eme: Vec<usize> = m.elements().filter(|&x| m.mul(m.mul(e, x), e) == x).collect();
            let units: Vec<usize> = eme
                .iter()
                .copied()
                .filter(|&x| eme.iter().any(|&y| m.mul(x, y) == e && m.mul(y, x) == e))
                .collect();
            let (_, g) = local_group(&m, &w, e);
            assert_eq!(g, units);
        }
    }
}

#[test]
fn sandwich_for_inverse_monoids_is_diagonal() {
    use monoidrep_core::green::sandwich_matrix_with;
    let m = symmetric_inverse_monoid(3);
    let star = involution(&m).unwrap();
    let g = GreenData::absolute(&m);
    for e in m.idempotents() {
        let rec = g.record_at(&m, e);
        let ys: Vec<usize> = rec.xs.iter().map(|&x| star[x]).collect();
        let p = sandwich_matrix_with(&m, e, &rec.xs, &ys);
        for (j, row) in p.entries.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { Some(e) } else { None });
            }
        }
    }
}

#[test]
fn principal_series_steps() {
    for m in corpus() {
        let w = Submonoid::whole(&m);
        let chain = principal_series(&m, &w, &w);
        let g = GreenData::absolute(&m);
        assert_eq!(chain.len(), g.classes().len());
        assert_eq!(chain.last().unwrap().len(), m.size());
        for win in chain.windows(2) {
            assert!(win[0].len() < win[1].len());
            let added: Vec<usize> = win[1].iter().copied().filter(|x| !win[0].contains(x)).collect();
            assert!(added.iter().all(|&x| g.same_j(x, added[0])));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_relative_green(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let m = random_transformation_monoid(&mut r, 12);
        let n = random_submonoid(&mut r, &m);
        let k = random_submonoid(&mut r, &m);
        check_lm(&m, &n);
        check_local_counts(&m, &n);
        check_tworegular(&m, &n);
        let cells = mackey_decompose(&m, &n, &k);
        prop_assert!(verify_mackey(&m, &cells).is_ok());
        let g = green_relative(&m, &n, &k);
        for c in g.classes() {
            // brute-force orbit of the two-sided action
            let direct: Vec<usize> = m.elements()
                .filter(|&x| two_sided_set(&m, &n, &k, x) == two_sided_set(&m, &n, &k, c.rep))
                .collect();
            prop_assert_eq!(&direct, &c.members);
            for &x in &c.l_class {
                prop_assert_eq!(left_set(&m, &n, x), left_set(&m, &n, c.rep));
            }
            for &y in &c.r_class {
                prop_assert_eq!(right_set(&m, &k, y), right_set(&m, &k, c.rep));
            }
        }
    }
}
