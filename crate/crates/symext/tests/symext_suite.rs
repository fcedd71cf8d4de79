use std::sync::Arc;

use monoidrep_core::builtin::{cyclic, symmetric_group};
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::rational::rat;
use monoidrep_rep::catalog::{linear_characters, BasicProvider, ChainProvider};
use monoidrep_rep::{is_isomorphic, Representation};
use monoidrep_symext::*;
use monoidrep_symrep::{symmetric_catalog, SymProvider};
use proptest::prelude::*;

fn provider() -> ChainProvider<'static> {
    ChainProvider(vec![&SymProvider, &BasicProvider])
}

fn nontrivial_character(g: &Arc<FiniteMonoid>) -> Representation {
    linear_characters(g).into_iter().find(|r| !r.matrix(1).get(0, 0).is_one()).unwrap()
}

fn standard_s3() -> Representation {
    let g = Arc::new(symmetric_group(3));
    symmetric_catalog(3).into_iter().find(|v| v.dim() == 2).unwrap().rebase(g)
}

fn klein() -> Arc<FiniteMonoid> {
    Arc::new(cyclic(2).direct_product(&cyclic(2)))
}

#[test]
fn c2_square_oracle() {
    let g = Arc::new(cyclic(2));
    let e = symmetric_extension(&g, 2, DEFAULT_BUDGET).unwrap();
    assert_eq!(e.size(), 4);
    let a = e.pure(vec![0, 0]).unwrap();
    let b = e.pure(vec![0, 1]).unwrap();
    let c = e.pure(vec![1, 1]).unwrap();
    let m = &e.monoid;
    let d = m.mul(b, b);
    let half = SymTensorElement::from_terms(g.clone(), 2, [(vec![0, 0], rat(1, 2)), (vec![1, 1], rat(1, 2))]);
    assert_eq!(e.element(d), &half);
    assert_eq!(m.mul(d, d), d);
    let mut idem = vec![a, d];
    idem.sort_unstable();
    assert_eq!(m.idempotents(), idem);
    assert_eq!(m.identity(), a);
    assert_eq!(e.embedding, vec![a, c]);
    assert!(e.embedding_is_injective_homomorphism());
    let j = e.to_json(serde_json::json!("c2"));
    assert_eq!(j["elements"].as_array().unwrap().len(), 4);
    assert_eq!(j["table"][b][b], d);
}

#[test]
fn degree_one_is_the_group() {
    for g in [cyclic(2), cyclic(5), symmetric_group(3)] {
        let g = Arc::new(g);
        let e = symmetric_extension(&g, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(e.size(), g.size());
        assert!(e.monoid.find_isomorphism(&g).is_some());
        assert!(semisimplicity_symext(&g, 1, DEFAULT_BUDGET).unwrap());
    }
}

#[test]
fn finite_closures_satisfy_the_invariants() {
    for (g, n) in [(Arc::new(cyclic(2)), 2), (klein(), 2), (Arc::new(FiniteMonoid::trivial()), 3)] {
        let e = symmetric_extension(&g, n, DEFAULT_BUDGET).unwrap();
        e.monoid.check_associative().unwrap();
        assert!(e.elements.iter().all(|x| x.in_simplex()));
        assert!(e.embedding_is_injective_homomorphism());
        let one = SymTensorElement::identity(g.clone(), n);
        for x in &e.elements {
            assert_eq!(&sym_product(&one, x).unwrap(), x);
            assert_eq!(&sym_product(x, &one).unwrap(), x);
        }
        assert!(semisimplicity_symext(&g, n, DEFAULT_BUDGET).unwrap());
    }
}

#[test]
fn elements_of_order_three_make_the_closure_infinite() {
    for (g, n) in [(cyclic(3), 2), (cyclic(4), 2), (cyclic(2), 3), (symmetric_group(3), 2)] {
        let g = Arc::new(g);
        match symmetric_extension(&g, n, DEFAULT_BUDGET) {
            Err(SymExtError::Infinite(w)) => assert!(w.order >= 2),
            other => panic!("expected an infinitude witness, got {other:?}"),
        }
        assert!(matches!(semisimplicity_symext(&g, n, DEFAULT_BUDGET), Err(SymExtError::Infinite(_))));
    }
    // the plain closure keeps growing: the powers of (1,g)^⊙2 in C3 are distinct
    let g = Arc::new(cyclic(3));
    assert!(matches!(enumerate_closure(&g, 2, 300, None), Err(SymExtError::BudgetExceeded { cap: 300, .. })));
}

#[test]
fn closure_is_independent_of_generator_order() {
    let g = klein();
    let base = symmetric_extension(&g, 2, DEFAULT_BUDGET).unwrap();
    let k = base.generators.len();
    for order in [(0..k).rev().collect::<Vec<_>>(), (0..k).map(|i| (i * 3 + 1) % k).collect()] {
        let other = symmetric_extension_ordered(&g, 2, DEFAULT_BUDGET, Some(&order)).unwrap();
        assert_eq!(other.size(), base.size());
        let f: Vec<usize> = base.elements.iter().map(|x| other.index_of(x).unwrap()).collect();
        assert!(base.monoid.is_homomorphism(&other.monoid, &f));
    }
}

#[test]
fn functoriality() {
    let c2 = Arc::new(cyclic(2));
    let k = klein();
    let e2 = symmetric_extension(&c2, 2, DEFAULT_BUDGET).unwrap();
    let ek = symmetric_extension(&k, 2, DEFAULT_BUDGET).unwrap();
    let id = functorial_extension(&[0, 1], &e2, &e2).unwrap();
    assert_eq!(id, (0..e2.size()).collect::<Vec<_>>());
    // projection onto the first factor
    let proj: Vec<usize> = k.elements().map(|x| x / 2).collect();
    let f = functorial_extension(&proj, &ek, &e2).unwrap();
    assert!(is_surjective(&f, e2.size()));
    // trivial map lands on the identity
    let t = functorial_extension(&[0; 4], &ek, &e2).unwrap();
    assert!(t.iter().all(|&y| y == e2.monoid.identity()));
    assert!(functorial_extension(&[1, 1], &e2, &e2).is_err());
}

#[test]
fn pure_parts_separate() {
    for g in [Arc::new(cyclic(2)), klein()] {
        let e = symmetric_extension(&g, 2, DEFAULT_BUDGET).unwrap();
        let sym: Vec<Representation> = linear_characters(&g).iter().map(|c| rep_sym(&e, c).unwrap()).collect();
        for i in 0..sym.len() {
            for j in 0..sym.len() {
                assert_eq!(is_isomorphic(&sym[i], &sym[j]).unwrap(), i == j);
            }
        }
    }
}

#[test]
fn theta1_on_c2() {
    let g = Arc::new(cyclic(2));
    for (pi, chi_sign) in [(nontrivial_character(&g), false), (nontrivial_character(&g), true), (Representation::trivial(g.clone()), false)] {
        let r = theorem_theta1_check(&g, &pi, &sn_character(2, chi_sign), 2, DEFAULT_BUDGET, &provider()).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!((r.certificate.span_dim, r.certificate.commutant_dim, r.certificate.expected), (1, 1, 1));
        assert_eq!(r.extension_size, 4);
        assert!(r.has_pair("sym", if chi_sign { "sign" } else { "trivial" }));
    }
}

#[test]
fn theta1_on_klein() {
    let g = klein();
    for pi in linear_characters(&g) {
        let r = theorem_theta1_check(&g, &pi, &sn_character(2, false), 2, DEFAULT_BUDGET, &provider()).unwrap();
        assert!(r.holds);
    }
}

#[test]
fn theta1_beyond_finite_closures() {
    let s3 = Arc::new(symmetric_group(3));
    let c3 = Arc::new(cyclic(3));
    for (g, pi) in [(s3, standard_s3()), (c3.clone(), nontrivial_character(&c3))] {
        let r = theorem_theta1_check(&g, &pi, &sn_character(2, false), 2, DEFAULT_BUDGET, &provider());
        assert!(matches!(r, Err(SymExtError::Infinite(_))));
    }
}

#[test]
fn commutant_certificates() {
    // S3 standard: span 10 = C(4+1, 2), S² and Λ² irreducible under the generator span
    let c = commutant_certificate(&standard_s3(), &sn_character(2, false), 2).unwrap();
    assert!(c.holds);
    assert_eq!((c.span_dim, c.commutant_dim, c.expected), (10, 10, 10));
    assert_eq!((c.sym_dim, c.sym_span, c.alt_dim, c.alt_span), (3, 9, 1, 1));
    let c3 = Arc::new(cyclic(3));
    let c = commutant_certificate(&nontrivial_character(&c3), &sn_character(2, false), 2).unwrap();
    assert!(c.holds && c.span_dim == 1);
    let c = commutant_certificate(&standard_s3(), &sn_character(3, true), 3).unwrap();
    assert!(c.holds);
    assert_eq!(c.expected, 20);
    // a reducible π gives a smaller span
    let reg = Representation::regular_left(c3);
    let c = commutant_certificate(&reg, &sn_character(2, false), 2).unwrap();
    assert!(!c.holds && c.span_dim < c.commutant_dim);
}

#[test]
fn tensor_representations() {
    let g = Arc::new(cyclic(2));
    let e = symmetric_extension(&g, 2, DEFAULT_BUDGET).unwrap();
    let reg = Representation::regular_left(g.clone());
    let full = rep_on_tensor_power(&e, &reg).unwrap();
    let sym = rep_sym(&e, &reg).unwrap();
    let alt = rep_alt(&e, &reg).unwrap();
    assert_eq!((full.dim(), sym.dim(), alt.dim()), (4, 3, 1));
    // pure elements act as π(g)^{⊗2}
    for x in g.elements() {
        let gg = e.embedding[x];
        assert_eq!(full.matrix(gg), &reg.matrix(x).kron(reg.matrix(x)));
    }
    let p = slot_permutations(2, 2, &sn_character(2, false)).unwrap();
    for x in e.monoid.elements() {
        assert_eq!(full.matrix(x).mul(p.matrix(1)), p.matrix(1).mul(full.matrix(x)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn sym_product_is_associative(a in proptest::collection::vec(0usize..4, 2), b in proptest::collection::vec(0usize..4, 2), c in proptest::collection::vec(0usize..4, 2)) {
        let g = klein();
        let (x, y, z) = (SymTensorElement::pure(g.clone(), a), SymTensorElement::pure(g.clone(), b), SymTensorElement::pure(g, c));
        let l = sym_product(&sym_product(&x, &y).unwrap(), &z).unwrap();
        let r = sym_product(&x, &sym_product(&y, &z).unwrap()).unwrap();
        prop_assert!(l.in_simplex());
        prop_assert_eq!(l, r);
    }

    #[test]
    fn sym_product_on_s3_cubes(a in proptest::collection::vec(0usize..6, 3), b in proptest::collection::vec(0usize..6, 3), c in proptest::collection::vec(0usize..6, 3)) {
        let g = Arc::new(symmetric_group(3));
        let (x, y, z) = (SymTensorElement::pure(g.clone(), a), SymTensorElement::pure(g.clone(), b), SymTensorElement::pure(g, c));
        let xy = sym_product(&x, &y).unwrap();
        prop_assert!(xy.in_simplex());
        prop_assert_eq!(sym_product(&xy, &z).unwrap(), sym_product(&x, &sym_product(&y, &z).unwrap()).unwrap());
    }
}
