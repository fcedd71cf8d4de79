use std::sync::Arc;

use monoidrep_core::builtin::*;
use monoidrep_core::random::{random_transformation_monoid, rng};
use monoidrep_core::*;
use monoidrep_linalg::{CycNum, ExactMatrix};
use monoidrep_rep::catalog::{check_catalog, BasicProvider, IrrProvider};
use monoidrep_rep::cmp::{apex_info, corner_matches_sigma, is_semisimple_with};
use monoidrep_rep::duality::{contragredient_inverse, dual_composed_with_star};
use monoidrep_rep::representation::PermutationLike;
use monoidrep_rep::schutz::{maximal_subgroup, sandwich_at, substitute};
use monoidrep_rep::*;
use proptest::prelude::*;

fn corpus() -> Vec<FiniteMonoid> {
    vec![
        symmetric_inverse_monoid(1),
        symmetric_inverse_monoid(2),
        symmetric_inverse_monoid(3),
        full_transformation_monoid(2),
        full_transformation_monoid(3),
        symmetric_group(3),
        cyclic(4),
        nilpotent3(),
        full_transformation_monoid(2).direct_product(&cyclic(2)),
    ]
}

fn lambda_of(sr: &SchutzRep) -> Representation {
    Representation::regular_left(sr.group.clone())
}

fn block_matrix(blocks: &[Vec<Option<usize>>], sigma: &Representation) -> ExactMatrix {
    let d = sigma.dim();
    let (r, c) = (blocks.len(), blocks.first().map_or(0, |b| b.len()));
    let mut a = ExactMatrix::zeros(r * d, c * d);
    for (i, row) in blocks.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if let Some(g) = e {
                for p in 0..d {
                    for q in 0..d {
                        a.set(i * d + p, j * d + q, sigma.matrix(*g).get(p, q).clone());
                    }
                }
            }
        }
    }
    a
}

#[test]
fn schutzenberger_multiplicative_on_eight_elements() {
    let m = full_transformation_monoid(2).direct_product(&cyclic(2));
    assert_eq!(m.size(), 8);
    let w = Submonoid::whole(&m);
    let ma = Arc::new(m.clone());
    for x in m.elements() {
        for side in [Side::Left, Side::Right] {
            let sr = schutzenberger(&m, &w, x, side);
            let r = sr.to_representation(ma.clone(), None).unwrap();
            for a in m.elements() {
                for b in m.elements() {
                    assert_eq!(*r.matrix(m.mul(a, b)), r.matrix(a).mul(r.matrix(b)));
                }
            }
            // each column (left) or row (right) carries at most one nonzero block
            for blk in &sr.blocks {
                let k = blk.len();
                for u in 0..k {
                    let count = match side {
                        Side::Left => (0..k).filter(|&i| blk[i][u].is_some()).count(),
                        Side::Right => (0..k).filter(|&j| blk[u][j].is_some()).count(),
                    };
                    assert!(count <= 1);
                }
            }
        }
    }
}

#[test]
fn sandwich_intertwines_left_and_right() {
    for m in corpus() {
        let w = Submonoid::whole(&m);
        for x in m.elements() {
            let l = schutzenberger(&m, &w, x, Side::Left);
            let r = schutzenberger(&m, &w, x, Side::Right);
            let p = sandwich_at(&m, x);
            let lam = lambda_of(&l);
            let pm = substitute(&p, &lam);
            for k in 0..l.blocks.len() {
                let lhs = pm.mul(&block_matrix(&l.blocks[k], &lam));
                let rhs = block_matrix(&r.blocks[k], &lam).mul(&pm);
                assert_eq!(lhs, rhs, "P π_l ≠ π_r P at m={x}, n={}", l.n_members[k]);
            }
        }
    }
}

/// ℂ[S] with n·s = ns when ns ∈ S, otherwise 0.
fn truncated_action(m: &Arc<FiniteMonoid>, set: &[usize]) -> Representation {
    let pos = |x: usize| set.iter().position(|&y| y == x);
    let mats = m
        .elements()
        .map(|a| {
            let mut t = ExactMatrix::zeros(set.len(), set.len());
            for (j, &s) in set.iter().enumerate() {
                if let Some(i) = pos(m.mul(a, s)) {
                    t.set(i, j, CycNum::one());
                }
            }
            t
        })
        .collect();
    Representation::new(m.clone(), Side::Left, mats).unwrap()
}

#[test]
fn class_space_is_t_copies_of_l_class() {
    for m in [symmetric_inverse_monoid(3), full_transformation_monoid(3), full_transformation_monoid(2)] {
        let ma = Arc::new(m.clone());
        let g = GreenData::absolute(&m);
        for c in g.classes() {
            let cj = truncated_action(&ma, &c.members);
            let cl = truncated_action(&ma, &c.l_class);
            let copies = Representation::direct_sum_all(&vec![cl; c.beta()]).unwrap();
            assert!(is_isomorphic(&cj, &copies).unwrap(), "class of {}", c.rep);
        }
    }
}

#[test]
fn phi_matches_direct_assembly_and_intertwines() {
    for m in corpus() {
        let ma = Arc::new(m.clone());
        for e in m.idempotents() {
            let (g, members) = maximal_subgroup(&m, e);
            for sigma in BasicProvider.irreducibles(&g).unwrap() {
                let phi = phi_map(&m, e, &sigma).unwrap();
                let rec = GreenData::absolute(&m).record_at(&m, e);
                let d = sigma.dim();
                let mut direct = ExactMatrix::zeros(rec.beta() * d, rec.alpha() * d);
                for (j, &y) in rec.ys.iter().enumerate() {
                    for (i, &x) in rec.xs.iter().enumerate() {
                        let yx = m.mul(y, x);
                        if let Some(gi) = members.iter().position(|&u| u == yx) {
                            for p in 0..d {
                                for q in 0..d {
                                    direct.set(j * d + p, i * d + q, sigma.matrix(gi).get(p, q).clone());
                                }
                            }
                        }
                    }
                }
                assert_eq!(phi, direct);
                let ind = induce(&ma, e, &sigma).unwrap();
                let co = coinduce(&ma, e, &sigma).unwrap();
                for a in m.elements() {
                    assert_eq!(phi.mul(ind.matrix(a)), co.matrix(a).mul(&phi));
                }
            }
        }
    }
}

#[test]
fn induce_dimensions() {
    let m = Arc::new(symmetric_inverse_monoid(3));
    let e = m.elements().find(|&x| m.label(x) == "[1,2,-]").unwrap();
    let (g, _) = schutz::maximal_subgroup(&m, e);
    assert_eq!(g.size(), 2);
    let sign = Representation::character(g.clone(), vec![CycNum::one(), CycNum::from_int(-1)]).unwrap();
    let v = induce(&m, e, &sign).unwrap();
    assert_eq!(v.dim(), 3);
    assert_eq!(radical_subspace(&v, e).dim(), 0);
    // group case: Ind over the whole group is σ itself
    let s3 = Arc::new(symmetric_group(3));
    for sigma in BasicProvider.irreducibles(&s3).unwrap() {
        let v = induce(&s3, 0, &sigma).unwrap();
        assert!(is_isomorphic(&v, &sigma).unwrap());
    }
}

#[test]
fn nilpotent_induced_has_radical() {
    let m = Arc::new(nilpotent3());
    let zero = 2;
    let one = 0;
    let (g, _) = schutz::maximal_subgroup(&m, one);
    let triv = Representation::trivial(g);
    let v = induce(&m, one, &triv).unwrap();
    // L-classes of {1,a,0} are singletons, so every induced module is a line; the
    // radical shows up on the regular representation instead
    assert_eq!(v.dim(), 1);
    let reg = Representation::regular_left(m.clone());
    assert_eq!(radical_subspace(&reg, one).dim(), 0);
    assert!(radical_subspace(&reg, zero).dim() > 0);
    assert!(!is_semisimple(&m).semisimple);
}

#[test]
fn cmp_catalog_properties() {
    for m in corpus() {
        let ma = Arc::new(m.clone());
        let irr = cmp_irreducibles(&ma, &BasicProvider).unwrap();
        for c in &irr {
            assert_eq!(c.rep.burnside_image_dim(), c.rep.dim() * c.rep.dim());
            assert!(corner_matches_sigma(&ma, c).unwrap());
            assert_eq!(apex_info(&c.rep).apex_idempotent, Some(c.apex));
        }
        for (i, a) in irr.iter().enumerate() {
            for b in &irr[..i] {
                assert_eq!(multiplicity(&a.rep, &b.rep).unwrap(), 0);
            }
        }
        let cert = is_semisimple_with(&ma, &BasicProvider).unwrap();
        assert_eq!(cert.cross_check(), Some(true), "biconditional fails for |M| = {}", m.size());
        if monoidrep_core::inverse::is_inverse_monoid(&m) {
            assert!(cert.semisimple);
        }
    }
}

#[test]
fn expected_semisimplicity() {
    assert!(is_semisimple(&symmetric_inverse_monoid(3)).semisimple);
    assert!(is_semisimple(&cyclic(5)).semisimple);
    assert!(!is_semisimple(&nilpotent3()).semisimple);
    assert!(!is_semisimple(&full_transformation_monoid(3)).semisimple);
}

#[test]
fn contragredient_lemmas() {
    let m = Arc::new(symmetric_inverse_monoid(3));
    let irr = cmp_irreducibles(&m, &BasicProvider).unwrap();
    for c in &irr {
        let chk = contragredient_inverse(&c.rep).unwrap();
        let ds = dual_composed_with_star(&c.rep).unwrap();
        assert_eq!(multiplicity(&chk, &ds).unwrap(), 1);
        // m(V ⊗ V̌, ℂ) ≤ 1 for the trivial representation
        let t = c.rep.tensor(&chk).unwrap();
        assert!(multiplicity(&t, &Representation::trivial(m.clone())).unwrap() <= 1);
    }
    let s3 = Arc::new(symmetric_group(3));
    let std = &BasicProvider.irreducibles(&s3).unwrap()[2];
    assert!(is_isomorphic(&contragredient_inverse(std).unwrap(), std).unwrap());
}

#[test]
fn burnside_examples() {
    let c2 = Arc::new(cyclic(2));
    let reg = Representation::regular_left(c2);
    assert_eq!(reg.burnside_image_dim(), 2);
    assert!(!reg.is_irreducible());
    let p = ExactMatrix::permutation_like(3, Some);
    assert!(p.is_identity());
}

#[test]
fn catalogs_from_basic_provider() {
    for g in [cyclic(6), symmetric_group(3), cyclic(2).direct_product(&symmetric_group(3))] {
        let g = Arc::new(g);
        let cat = BasicProvider.irreducibles(&g).unwrap();
        check_catalog(&g, &cat).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_monoids_satisfy_biconditional(seed in 0u64..10_000) {
        let m = Arc::new(random_transformation_monoid(&mut rng(seed), 14));
        let cert = is_semisimple_with(&m, &BasicProvider).unwrap();
        prop_assert_eq!(cert.cross_check(), Some(true));
        let w = Submonoid::whole(&m);
        for x in m.elements() {
            let l = schutzenberger(&m, &w, x, Side::Left).to_representation(m.clone(), None).unwrap();
            prop_assert!(l.validate().is_ok());
        }
    }
}
