use proptest::prelude::*;

use symrep::combinat::{partitions_of, Partition};
use symrep::ffield::Fp;
use symrep::modrep::GroupModule;
use symrep::specht::{permutation_module, signed_permutation_module, simple_restricted, specht_module};
use symrep::structure::{Config, Engine};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn f5() -> Fp {
    Fp::new(5).unwrap()
}

/// Specht, permutation, signed permutation and sign modules of `Σ_5`.
fn zoo() -> Vec<GroupModule> {
    let f = f5();
    let mut out = Vec::new();
    for l in partitions_of(5) {
        out.push(specht_module(&l, f).0);
        out.push(permutation_module(&l, f));
    }
    out.push(signed_permutation_module(&part("2"), &part("21"), f).unwrap());
    out.push(GroupModule::sign(5, f));
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn hom_dim_is_symmetric_under_duality(i in 0usize..15, j in 0usize..15) {
        let e = Engine::with_defaults(5, 5).unwrap();
        let z = zoo();
        let (m, n) = (&z[i % z.len()], &z[j % z.len()]);
        prop_assert_eq!(e.hom_dim(m, n).unwrap(), e.hom_dim(&n.dual(), &m.dual()).unwrap());
    }

    #[test]
    fn composition_factors_do_not_depend_on_seed(i in 0usize..15, seed in any::<u64>()) {
        let z = zoo();
        let m = &z[i % z.len()];
        let a = Engine::with_defaults(5, 5).unwrap();
        let b = Engine::new(5, f5(), Config { seed, ..Config::default() });
        prop_assert_eq!(a.composition_multiplicities(m).unwrap(), b.composition_multiplicities(m).unwrap());
    }
}

#[test]
fn ext_is_symmetric_under_duality_on_principal_block() {
    let e = Engine::with_defaults(5, 5).unwrap();
    let simples: Vec<GroupModule> =
        e.simples().unwrap().iter().filter(|s| !e.is_projective(&s.module).unwrap()).map(|s| s.module.clone()).collect();
    assert_eq!(simples.len(), 4);
    for a in &simples {
        for b in &simples {
            assert_eq!(e.ext1(a, b).unwrap(), e.ext1(&b.dual(), &a.dual()).unwrap());
        }
    }
}

#[test]
fn cartan_sum_is_group_order() {
    for (d, order) in [(4, 24), (5, 120), (6, 720)] {
        let e = Engine::with_defaults(d, 5).unwrap();
        let total: usize = e.pims().unwrap().iter().zip(e.simples().unwrap()).map(|(p, s)| p.dim() * s.module.dim()).sum();
        assert_eq!(total, order, "d={d}");
    }
}

#[test]
fn projectives_have_no_extensions() {
    let e = Engine::with_defaults(5, 5).unwrap();
    let p = e.pims().unwrap()[0].clone();
    for s in e.spechts() {
        assert_eq!(e.ext1(&p, &s.specht).unwrap(), 0);
        assert_eq!(e.ext1(&s.dual, &p).unwrap(), 0);
    }
}

#[test]
fn heller_shifts_round_trip() {
    let e = Engine::with_defaults(5, 5).unwrap();
    let d = simple_restricted(&part("21^3"), e.field()).unwrap();
    let u = e.heller(&d, 2).unwrap();
    let back = e.heller(&u, -2).unwrap();
    assert!(e.are_isomorphic(&back, &d).unwrap().is_some());
}

#[test]
fn decomposition_accounts_for_dimension() {
    let e = Engine::with_defaults(5, 5).unwrap();
    for l in partitions_of(5) {
        let m = permutation_module(&l, e.field());
        let dec = e.decompose(&m).unwrap();
        assert_eq!(dec.pieces.iter().map(|x| x.dim()).sum::<usize>(), m.dim());
        assert!(dec.change_of_basis(e.field(), m.dim()).is_invertible());
        for x in &dec.pieces {
            assert!(x.basis.mul(&x.proj).is_identity());
            for (g, h) in m.gens().iter().zip(x.module.gens()) {
                assert_eq!(&x.basis.mul(g).mul(&x.proj), h);
            }
        }
    }
}

#[test]
fn dimensions_collide_but_labels_do_not() {
    let e = Engine::with_defaults(5, 5).unwrap();
    let a = e.simple_by_restricted(&part("31^2")).unwrap();
    let b = e.simple_by_restricted(&part("21^3")).unwrap();
    assert_eq!(a.module.dim(), b.module.dim());
    assert!(e.are_isomorphic(&a.module, &b.module).unwrap().is_none());
}
