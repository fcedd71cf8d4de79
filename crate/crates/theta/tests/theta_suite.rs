use std::sync::Arc;

use monoidrep_core::builtin::*;
use monoidrep_core::random::rng;
use monoidrep_core::FiniteMonoid;
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::catalog::{linear_characters, BasicProvider};
use monoidrep_rep::{cmp_irreducibles, hom_space, Representation, Side, Subspace};
use monoidrep_theta::gamma::single_apex_representations;
use monoidrep_theta::*;
use proptest::prelude::*;

fn catalog(m: &Arc<FiniteMonoid>) -> Vec<Representation> {
    cmp_irreducibles(m, &BasicProvider).unwrap().into_iter().map(|c| c.rep).collect()
}

fn sum_of(m1: &Arc<FiniteMonoid>, m2: &Arc<FiniteMonoid>, terms: &[(usize, usize)]) -> BimoduleRep {
    let (c1, c2) = (catalog(m1), catalog(m2));
    let p = Arc::new(product_monoid(m1, m2));
    let parts: Vec<Representation> = terms.iter().map(|&(i, j)| external_tensor(&c1[i], &c2[j], p.clone()).unwrap()).collect();
    let rep = Representation::direct_sum_all(&parts).unwrap();
    BimoduleRep::with_catalogs(m1.clone(), m2.clone(), rep, c1, c2).unwrap()
}

#[test]
fn trivial_factor_and_dimensions() {
    let t = Arc::new(FiniteMonoid::trivial());
    let s3 = Arc::new(symmetric_group(3));
    let p = product_monoid(&t, &s3);
    assert!(p.find_isomorphism(&s3).is_some());
    let c = catalog(&s3);
    let std2 = c.iter().find(|r| r.dim() == 2).unwrap();
    let c2 = Arc::new(cyclic(3));
    let three = Representation::direct_sum_all(&catalog(&c2)).unwrap();
    let ext = external_tensor(std2, &three, Arc::new(product_monoid(&s3, &c2))).unwrap();
    assert_eq!(ext.dim(), 6);
}

#[test]
fn hom_of_external_tensors_factors() {
    let s3 = Arc::new(symmetric_group(3));
    let c3 = Arc::new(cyclic(3));
    let p = Arc::new(product_monoid(&s3, &c3));
    let (a, b) = (catalog(&s3), catalog(&c3));
    let v1 = Representation::direct_sum_all(&[a[0].clone(), a[2].clone(), a[2].clone()]).unwrap();
    let v2 = Representation::direct_sum_all(&[b[1].clone(), b[1].clone()]).unwrap();
    let w1 = Representation::direct_sum_all(&[a[2].clone(), a[0].clone()]).unwrap();
    let w2 = Representation::direct_sum_all(&[b[1].clone(), b[0].clone()]).unwrap();
    let lhs = hom_space(&external_tensor(&v1, &v2, p.clone()).unwrap(), &external_tensor(&w1, &w2, p).unwrap()).unwrap();
    assert_eq!(lhs.len(), hom_space(&v1, &w1).unwrap().len() * hom_space(&v2, &w2).unwrap().len());
}

#[test]
fn irreducible_bimodule_pairs_its_factors() {
    let s3 = Arc::new(symmetric_group(3));
    let c3 = Arc::new(cyclic(3));
    for i in 0..3 {
        for j in 0..3 {
            let pi = sum_of(&s3, &c3, &[(i, j)]);
            let th = big_theta(&pi, Factor::First, i).unwrap();
            assert_eq!(th.multiplicities, (0..3).map(|k| usize::from(k == j)).collect::<Vec<_>>());
            let other = (i + 1) % 3;
            assert_eq!(big_theta(&pi, Factor::First, other).unwrap().rep.dim(), 0);
            let r = is_theta(&pi).unwrap();
            assert_eq!(r.verdict, Some(true));
            assert_eq!(r.pairs, vec![(i, j)]);
        }
    }
}

#[test]
fn two_partners_is_not_theta() {
    let s3 = Arc::new(symmetric_group(3));
    let c3 = Arc::new(cyclic(3));
    let pi = sum_of(&s3, &c3, &[(2, 0), (2, 1)]);
    let r = is_theta(&pi).unwrap();
    assert_eq!(r.verdict, Some(false));
    assert_eq!(r.first[2].quotients, 2);
    let b = proposition_theta_battery(&pi).unwrap();
    assert!(!b.theta && b.unanimous);
    let j = r.to_json();
    assert_eq!(j["verdict"], false);
    assert_eq!(j["multiplicities"].as_array().unwrap().len(), 2);
}

#[test]
fn left_class_bimodule_is_theta() {
    for m in [symmetric_inverse_monoid(2), symmetric_inverse_monoid(3), full_transformation_monoid(2)] {
        let m = Arc::new(m);
        for e in m.idempotents() {
            let pi = left_class_bimodule(&m, e, &BasicProvider).unwrap();
            let r = is_theta(&pi).unwrap();
            if pi.semisimple {
                assert_eq!(r.verdict, Some(true));
                // Ind_{G_e}(W) ↔ W^∨: the partner of W has the inverted character
                for &(i, j) in &r.pairs {
                    let (v, w) = (&pi.irr1[i], &pi.irr2[j]);
                    assert_eq!(v.dim() % w.dim(), 0);
                }
                assert_eq!(r.pairs.len(), pi.irr2.len());
            } else {
                assert_eq!(r.verdict, None);
            }
        }
    }
}

#[test]
fn left_class_partner_is_contragredient() {
    let m = Arc::new(adjoin_zero(&cyclic(3)));
    let pi = left_class_bimodule(&m, 0, &BasicProvider).unwrap();
    let r = is_theta(&pi).unwrap();
    assert!(r.is_true());
    for &(i, j) in &r.pairs {
        let chi = pi.irr1[i].matrix(1).get(0, 0).clone();
        let psi = pi.irr2[j].matrix(1).get(0, 0).clone();
        assert!((&chi * &psi).is_one());
    }
}

#[test]
fn regular_bimodule_is_theta() {
    for m in [symmetric_inverse_monoid(2), symmetric_group(3), cyclic(4), adjoin_zero(&cyclic(2))] {
        let m = Arc::new(m);
        let pi = regular_bimodule(&m, &BasicProvider).unwrap();
        let r = is_theta(&pi).unwrap();
        assert!(r.is_true());
        let b = proposition_theta_battery(&pi).unwrap();
        assert!(b.unanimous && b.theta && b.diagonal_constituents, "{b:?}");
    }
}

#[test]
fn proposition_theta_battery_is_unanimous() {
    let mut r = rng(20_240_601);
    let mut seen = [0usize; 2];
    for case in 0..20 {
        let pi = random_bimodule(&mut r, 10, 10, &BasicProvider).unwrap();
        let rec = proposition_theta_battery(&pi).unwrap();
        assert!(rec.unanimous, "case {case}: {rec:?}");
        seen[rec.theta as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn random_monoids_are_semisimple() {
    let mut r = rng(7);
    for _ in 0..30 {
        let m = random_semisimple_monoid(&mut r, 10);
        assert!(m.size() <= 10);
        assert!(monoidrep_rep::is_semisimple(&m).semisimple);
    }
}

#[test]
fn waldspurger_invariant_subspaces_factor() {
    let s3 = Arc::new(symmetric_group(3));
    let c3 = Arc::new(cyclic(3));
    let (a, b) = (catalog(&s3), catalog(&c3));
    let v1 = a.iter().find(|r| r.dim() == 2).unwrap();
    let v2 = Representation::direct_sum_all(&[b[0].clone(), b[1].clone(), b[1].clone(), b[2].clone()]).unwrap();
    let ext = external_tensor(v1, &v2, Arc::new(product_monoid(&s3, &c3))).unwrap();
    let mut r = rng(3);
    use rand::Rng;
    for _ in 0..10 {
        let v: Vec<CycNum> = (0..ext.dim()).map(|_| CycNum::from_int(r.gen_range(-2..=2))).collect();
        let s = ext.invariant_closure(&[v]);
        let f = waldspurger_factor(v1.dim(), v2.dim(), &s).expect("S = V₁⊗V₂′");
        assert!(v2.is_invariant(&f));
    }
    // a non-invariant subspace need not factor
    let mut e = vec![CycNum::zero(); ext.dim()];
    e[0] = CycNum::one();
    assert!(waldspurger_factor(v1.dim(), v2.dim(), &Subspace::span(ext.dim(), &[e])).is_none());
}

#[test]
fn gamma_transfer_group_case() {
    let d = desk_group_case();
    let reps = single_apex_representations(&d, 1, &BasicProvider).unwrap();
    assert_eq!(reps.len(), (1 << 6) - 1);
    for rho in reps.iter().step_by(5) {
        let g = gamma_transfer(&d, rho, &BasicProvider).unwrap();
        assert!(g.holds, "{g:?}");
        assert_eq!(g.induced_dim, rho.dim());
        assert!(g.excluded.is_empty());
    }
}

#[test]
fn gamma_transfer_inverse_case() {
    let d = desk_inverse_case();
    let g0 = graph_submonoid(&d).unwrap();
    assert_eq!(g0.gamma.len(), 6);
    let reps = single_apex_representations(&d, 2, &BasicProvider).unwrap();
    assert_eq!(reps.len(), 80 + 8);
    let mut verdicts = [0usize; 2];
    for rho in &reps {
        let g = gamma_transfer(&d, rho, &BasicProvider).unwrap();
        assert!(g.holds, "{g:?}");
        verdicts[g.restricted.is_true() as usize] += 1;
    }
    assert!(verdicts[0] > 0 && verdicts[1] > 0);
}

#[test]
fn gamma_rejects_non_centric_units() {
    let m = Arc::new(symmetric_inverse_monoid(2));
    let n = monoidrep_core::Submonoid::units(&m);
    let d = GammaData { m1: m.clone(), n1: n.clone(), m2: m, n2: n, iota: vec![] };
    assert!(matches!(graph_submonoid(&d), Err(ThetaError::Assumption(_))));
}

#[test]
fn non_semisimple_is_undecided() {
    let t2 = Arc::new(full_transformation_monoid(2));
    let c2 = Arc::new(cyclic(2));
    let p = Arc::new(product_monoid(&t2, &c2));
    let triv = Representation::trivial(p);
    let pi = BimoduleRep::new(t2, c2, triv, &BasicProvider).unwrap();
    assert_eq!(is_theta(&pi).unwrap().verdict, None);
    assert!(proposition_theta_battery(&pi).is_err());
}

fn conjugated(rep: &Representation, seed: u64) -> Representation {
    use rand::Rng;
    let mut r = rng(seed);
    let n = rep.dim();
    let mut t = ExactMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            t.set(i, j, CycNum::from_int(r.gen_range(-1..=1)));
        }
    }
    rep.conjugate_by(&t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn theta_invariants(table in proptest::collection::vec(0usize..3, 9), seed in 0u64..100) {
        let s3 = Arc::new(symmetric_group(3));
        let c3 = Arc::new(cyclic(3));
        let terms: Vec<(usize, usize)> = (0..9).flat_map(|k| std::iter::repeat((k / 3, k % 3)).take(table[k])).collect();
        prop_assume!(!terms.is_empty());
        let base = sum_of(&s3, &c3, &terms);
        let pi = BimoduleRep::with_catalogs(s3.clone(), c3.clone(), conjugated(&base.rep, seed), base.irr1.clone(), base.irr2.clone()).unwrap();
        let r = is_theta(&pi).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(r.multiplicities[i][j], table[i * 3 + j]);
            }
            // π ∈ R(Π) ⟺ Θ_π ≠ 0
            prop_assert_eq!(r.first[i].present, big_theta(&pi, Factor::First, i).unwrap().rep.dim() > 0);
        }
        let expect = (0..3).all(|i| (0..3).map(|j| table[i * 3 + j]).sum::<usize>() <= 1)
            && (0..3).all(|j| (0..3).map(|i| table[i * 3 + j]).sum::<usize>() <= 1);
        prop_assert_eq!(r.verdict, Some(expect));
        if expect {
            let mut lefts: Vec<usize> = r.pairs.iter().map(|p| p.0).collect();
            let mut rights: Vec<usize> = r.pairs.iter().map(|p| p.1).collect();
            lefts.dedup();
            rights.sort_unstable();
            rights.dedup();
            prop_assert_eq!(lefts.len(), r.pairs.len());
            prop_assert_eq!(rights.len(), r.pairs.len());
        }
    }
}

#[test]
fn linear_character_side_check() {
    let c2 = Arc::new(cyclic(2));
    let sign = linear_characters(&c2).into_iter().find(|c| !c.matrix(1).is_identity()).unwrap();
    assert_eq!(sign.side(), Side::Left);
}
