use super::*;
use crate::combinat::Partition;
use crate::specht::{simple_restricted, specht_module};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn engine() -> Engine {
    Engine::with_defaults(5, 5).unwrap()
}

#[test]
fn catalogue_labels_at_five() {
    let e = engine();
    let got: Vec<(String, String, usize)> = e
        .simples()
        .unwrap()
        .iter()
        .map(|s| (s.regular.to_string(), s.restricted.to_string(), s.module.dim()))
        .collect();
    let find = |reg: &str| got.iter().find(|g| g.0 == reg).unwrap().clone();
    assert_eq!(find("41").1, "31^2");
    assert_eq!(find("21^3").1, "1^5");
}

#[test]
fn specht_series_at_five() {
    let e = engine();
    let f = e.field();
    let want = [
        ("5", vec!["5"]),
        ("41", vec!["41", "5"]),
        ("32", vec!["32"]),
        ("31^2", vec!["31^2", "41"]),
        ("2^21", vec!["2^21"]),
        ("21^3", vec!["21^3", "31^2"]),
        ("1^5", vec!["21^3"]),
    ];
    for (l, regular) in want {
        let (s, _) = specht_module(&p(l), f);
        let mut got: Vec<String> = e.composition_labels(&s).unwrap().iter().map(|x| x.regular.to_string()).collect();
        got.sort();
        let mut regular: Vec<String> = regular.iter().map(|r| r.to_string()).collect();
        regular.sort();
        assert_eq!(got, regular, "S^{l}");
        let lw = e.loewy(&s).unwrap();
        assert_eq!(lw.layers.len(), got.len().min(2), "S^{l} is uniserial of length at most 2");
    }
}

#[test]
fn pims_and_ext_at_five() {
    let e = engine();
    let pims = e.pims().unwrap();
    let total: usize = pims.iter().zip(e.simples().unwrap()).map(|(p, s)| p.dim() * s.module.dim()).sum();
    assert_eq!(total, 120);
    assert!(pims.iter().all(|p| p.dim() % 5 == 0));
    for p in pims.iter() {
        assert!(e.is_projective_indecomposable(p).unwrap());
    }
    let f = e.field();
    let d213 = simple_restricted(&p("21^3"), f).unwrap();
    let d312 = simple_restricted(&p("31^2"), f).unwrap();
    assert_eq!(e.ext1(&d213, &d312).unwrap(), 1);
    assert_eq!(e.ext1_via(&d213, &d312, ExtRoute::Young).unwrap(), 1);
    assert_eq!(e.ext1(&d213, &d213).unwrap(), 0);
    let u = e.heller(&d213, 2).unwrap();
    assert_eq!(u.dim(), 8);
    assert_eq!(e.ext1(&u, &u).unwrap(), 0);
    assert_eq!(e.ext1(&u, &u.dual()).unwrap(), 1);
}

#[test]
fn tensor_square_of_u() {
    let e = engine();
    let u = e.heller(&simple_restricted(&p("21^3"), e.field()).unwrap(), 2).unwrap();
    let dec = e.decompose(&u.tensor(&u).unwrap()).unwrap();
    let mut dims = 0;
    let mut non_projective = Vec::new();
    for (m, k) in dec.summands() {
        dims += m.dim() * k;
        if !e.is_projective_indecomposable(m).unwrap() {
            non_projective.push(m.dim());
        }
    }
    assert_eq!(dims, 64);
    non_projective.sort();
    assert_eq!(non_projective, vec![1, 3]);
}

#[test]
fn pims_at_six() {
    let e = Engine::with_defaults(6, 5).unwrap();
    let total: usize = e.pims().unwrap().iter().zip(e.simples().unwrap()).map(|(p, s)| p.dim() * s.module.dim()).sum();
    assert_eq!(total, 720);
}
