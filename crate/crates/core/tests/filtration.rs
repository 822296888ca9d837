use symrep::combinat::{partitions_of, Partition};
use symrep::ffield::Fp;
use symrep::filtration::{neither_regular_nor_restricted, Analyzer, Kind};
use symrep::specht::permutation_module;
use symrep::structure::{Config, Engine};

fn analyzer(d: usize) -> Analyzer {
    Analyzer::new(Engine::with_defaults(d, 5).unwrap())
}

fn seeded(d: usize, seed: u64) -> Analyzer {
    let config = Config { seed, ..Config::default() };
    Analyzer::new(Engine::new(d, Fp::new(5).unwrap(), config))
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn assert_report(r: &symrep::filtration::ExampleReport) {
    let bad: Vec<String> = r.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn section_four() {
    assert_report(&analyzer(5).verify_section4().unwrap());
}

#[test]
fn section_six_up_to_six() {
    for d in 1..=6 {
        assert_report(&analyzer(d).verify_section6().unwrap());
    }
    assert!(neither_regular_nor_restricted(7, 5).is_empty());
    assert!(neither_regular_nor_restricted(10, 5).is_empty());
    assert_eq!(neither_regular_nor_restricted(11, 5), vec![part("61^5")]);
}

#[test]
fn section_seven_and_ext_probe() {
    let an = analyzer(5);
    assert_report(&an.verify_section7().unwrap());
    assert_report(&an.signed_young_ext_probe().unwrap());
}

#[test]
fn young_modules_are_self_dual_with_both_filtrations() {
    for d in 1..=6 {
        let an = analyzer(d);
        let e = an.engine();
        let mut total = 0;
        for l in partitions_of(d) {
            let y = an.young_module(&l).unwrap();
            total += y.dim();
            assert!(e.local_isomorphism(&y, &y.dual()).unwrap().is_some(), "Y^{l} is not self-dual");
            for kind in [Kind::Specht, Kind::DualSpecht] {
                let cert = an.find_filtration(&y, kind).unwrap().unwrap_or_else(|| panic!("Y^{l}: no {kind} filtration"));
                assert!(cert.verify(&an, &y).unwrap());
                // S^λ once, everything else above λ in dominance
                assert_eq!(cert.multiplicities().get(&l), Some(&1), "Y^{l}");
                assert!(cert.labels().iter().all(|m| m.dominates(&l).unwrap()), "Y^{l}");
            }
        }
        assert!(total > 0);
    }
}

#[test]
fn certificate_multisets_do_not_depend_on_seed() {
    let f = Fp::new(5).unwrap();
    let sources = [permutation_module(&part("31^2"), f), permutation_module(&part("2^21"), f)];
    for kind in [Kind::Specht, Kind::DualSpecht] {
        for m in &sources {
            let mut seen = Vec::new();
            for seed in [0, 1, 0xdead_beef] {
                let an = seeded(5, seed);
                let cert = an.find_filtration(m, kind).unwrap().expect("permutation modules are filtered");
                seen.push(cert.multiplicities());
            }
            assert!(seen.windows(2).all(|w| w[0] == w[1]), "{}: {seen:?}", m.label());
        }
    }
}

#[test]
fn non_regular_dual_spechts_have_specht_extensions() {
    for d in [5, 6] {
        let an = analyzer(d);
        let e = an.engine();
        for mu in e.spechts().iter().filter(|s| !s.shape.is_p_regular(5)) {
            let hit = e.spechts().iter().any(|l| e.ext1(&l.specht, &mu.dual).unwrap() > 0);
            assert!(hit, "d={d}: Ext¹(S^λ, S_{}) vanishes for all λ", mu.shape);
        }
    }
}

#[test]
fn u_tensor_u_has_no_filtration() {
    let an = analyzer(5);
    let u = an.module_u().unwrap();
    let uu = u.tensor(&u).unwrap();
    for kind in [Kind::Specht, Kind::DualSpecht] {
        assert!(an.find_filtration(&uu, kind).unwrap().is_none());
    }
}

#[test]
fn small_characteristic_is_refused() {
    let an = Analyzer::new(Engine::with_defaults(4, 3).unwrap());
    let m = permutation_module(&part("31"), an.engine().field());
    assert!(an.check_criteria(&m).is_err());
    assert!(an.find_filtration(&m, Kind::Specht).is_err());
}
