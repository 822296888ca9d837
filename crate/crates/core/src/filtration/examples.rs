use serde::Serialize;

use crate::combinat::{partitions_of, Partition, Permutation};
use crate::error::{Error, Result};
use crate::ffield::Matrix;
use crate::modrep::{induce, GroupModule, SubgroupAction};
use crate::specht::signed_permutation_module;

use super::{Analyzer, Criterion, Kind};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ExampleReport {
    pub section: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl ExampleReport {
    pub fn new(section: impl Into<String>) -> Self {
        ExampleReport { section: section.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Records a check; an error counts as a failure with its message.
    fn attempt(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        let check = match f() {
            Ok((ok, detail)) => Check::new(name, ok, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        };
        self.checks.push(check);
    }
}

/// Specht modules of `Σ_5` at `p = 5`: radical layers from the top, by
/// restricted label.
const SIGMA5: [(&str, &[&[&str]]); 7] = [
    ("5", &[&["41"]]),
    ("41", &[&["31^2"], &["41"]]),
    ("32", &[&["32"]]),
    ("31^2", &[&["21^3"], &["31^2"]]),
    ("2^21", &[&["2^21"]]),
    ("21^3", &[&["1^5"], &["21^3"]]),
    ("1^5", &[&["1^5"]]),
];

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn sorted_labels(mut v: Vec<Partition>) -> Vec<String> {
    v.sort();
    v.iter().map(ToString::to_string).collect()
}

fn label_set(v: &[&str]) -> Vec<String> {
    sorted_labels(v.iter().map(|s| part(s)).collect())
}

fn join_layers(layers: &[Vec<String>]) -> String {
    layers.iter().map(|l| l.join(" ⊕ ")).collect::<Vec<_>>().join(" / ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpechtClass {
    RegularAndRestricted,
    Regular,
    Restricted,
    Neither,
}

impl SpechtClass {
    pub fn of(mu: &Partition, p: u32) -> Self {
        match (mu.is_p_regular(p), mu.is_p_restricted(p)) {
            (true, true) => SpechtClass::RegularAndRestricted,
            (true, false) => SpechtClass::Regular,
            (false, true) => SpechtClass::Restricted,
            (false, false) => SpechtClass::Neither,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibleSpecht {
    pub shape: Partition,
    pub class: SpechtClass,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpechtReport {
    pub d: usize,
    pub p: u32,
    pub irreducible: Vec<IrreducibleSpecht>,
    pub reducible: Vec<Partition>,
}

impl SpechtReport {
    pub fn passed(&self) -> bool {
        self.irreducible.iter().all(|s| s.checks.iter().all(|c| c.passed))
    }
}

/// Partitions of `d ≤ max_d` that are neither `p`-regular nor `p`-restricted.
pub fn neither_regular_nor_restricted(max_d: usize, p: u32) -> Vec<Partition> {
    (1..=max_d)
        .flat_map(partitions_of)
        .filter(|l| SpechtClass::of(l, p) == SpechtClass::Neither)
        .collect()
}

/// One isomorphism class of summands of a signed permutation module.
#[derive(Clone, Debug, Serialize)]
pub struct SignedSummand {
    pub source: String,
    pub dim: usize,
    pub multiplicity: usize,
    pub self_dual: bool,
    /// Specht filtration labels from the bottom, when one exists.
    pub specht: Option<Vec<Partition>>,
    #[serde(skip)]
    pub module: GroupModule,
}

impl Analyzer {
    fn restricted_layers(&self, layers: &[Vec<(usize, usize)>]) -> Result<Vec<Vec<String>>> {
        let e = self.engine();
        layers
            .iter()
            .map(|layer| {
                let mut v = Vec::new();
                for &(i, k) in layer {
                    for _ in 0..k {
                        v.push(e.label(i)?.restricted);
                    }
                }
                Ok(sorted_labels(v))
            })
            .collect()
    }

    fn require_sigma5(&self) -> Result<()> {
        self.gate()?;
        let e = self.engine();
        if e.d() != 5 || e.p() != 5 {
            return Err(Error::ModuleMismatch(format!("the Σ_5 examples need d = 5, p = 5, not d = {}, p = {}", e.d(), e.p())));
        }
        Ok(())
    }

    /// `U = Ω²(D_{21³})`.
    pub fn module_u(&self) -> Result<GroupModule> {
        let e = self.engine();
        let d = &e.simple_by_restricted(&part("21^3"))?.module;
        Ok(e.heller(d, 2)?.labeled("U"))
    }

    /// Induction of `rad²` of the group algebra of `⟨(0 1 2 3 4)⟩`, a
    /// Sylow 5-subgroup of `Σ_5`.
    pub fn sylow_induction(&self) -> Result<GroupModule> {
        let e = self.engine();
        let f = e.field();
        let c = Permutation::cycle(5, &[0, 1, 2, 3, 4]);
        let jordan = Matrix::from_rows(f, &[[1i64, 1, 0], [0, 1, 1], [0, 0, 1]]);
        let h = SubgroupAction::generate(5, f, 3, &[(c, jordan)])?;
        Ok(induce(&h, f, &h.right_transversal())?.labeled("Ind(rad² kP)"))
    }

    pub fn verify_section4(&self) -> Result<ExampleReport> {
        self.require_sigma5()?;
        let e = self.engine();
        let mut r = ExampleReport::new("4");
        for (shape, expected) in SIGMA5 {
            let expected: Vec<Vec<String>> = expected.iter().map(|l| label_set(l)).collect();
            r.attempt(format!("S^{shape} structure"), || {
                let s = &e.specht_pair(&part(shape))?.specht;
                let lw = e.loewy(s)?;
                let top = self.restricted_layers(&lw.layers)?;
                let mut bottom = self.restricted_layers(&lw.socle_layers)?;
                bottom.reverse();
                let series: Vec<String> =
                    e.composition_labels(s)?.iter().map(|l| l.restricted.to_string()).collect();
                let flat: Vec<String> = expected.iter().flatten().cloned().collect();
                let ok = top == expected && bottom == expected && series == flat;
                Ok((ok, format!("{} (composition series {})", join_layers(&top), series.join(", "))))
            });
        }
        let u = match self.module_u() {
            Ok(u) => u,
            Err(err) => {
                r.checks.push(Check::new("U = Ω²(D_21^3)", false, format!("error: {err}")));
                return Ok(r);
            }
        };
        r.checks.push(Check::new("U has dimension 8", u.dim() == 8, format!("dim U = {}", u.dim())));
        r.attempt("U Loewy layers", || {
            let layers = self.restricted_layers(&e.loewy(&u)?.layers)?;
            let want = vec![label_set(&["41", "21^3"]), label_set(&["31^2", "1^5"])];
            Ok((layers == want, join_layers(&layers)))
        });
        for (kind, want) in [(Kind::Specht, ["1^5", "31^2", "5"].as_slice()), (Kind::DualSpecht, ["21^3", "41"].as_slice())] {
            r.attempt(format!("U has a {kind} filtration"), || {
                let Some(cert) = self.find_filtration(&u, kind)? else { return Ok((false, "none found".into())) };
                let got = sorted_labels(cert.labels());
                let want = label_set(want);
                let shown: Vec<String> = cert.labels().iter().map(|l| kind.symbol(l)).collect();
                Ok((got == want, format!("bottom to top: {}", shown.join(", "))))
            });
        }
        let uu = u.tensor(&u)?.labeled("U⊗U");
        r.attempt("U⊗U ≅ D_31^2 ⊕ D_1^5 ⊕ projective", || {
            let dec = e.decompose(&uu)?;
            let mut simple = Vec::new();
            let mut other = Vec::new();
            let mut proj = 0;
            for (x, k) in dec.summands() {
                if e.is_projective_indecomposable(x)? {
                    proj += x.dim() * k;
                } else if e.is_simple(x)? {
                    let i = e.identify_simple(x)?;
                    for _ in 0..k {
                        simple.push(e.label(i)?.restricted);
                    }
                } else {
                    other.push(x.dim());
                }
            }
            let simple = sorted_labels(simple);
            let ok = simple == label_set(&["31^2", "1^5"]) && other.is_empty();
            Ok((ok, format!("non-projective: {}; projective part of dimension {proj}", simple.join(" ⊕ "))))
        });
        for kind in [Kind::Specht, Kind::DualSpecht] {
            r.attempt(format!("U⊗U has no {kind} filtration"), || {
                let found = self.find_filtration(&uu, kind)?;
                Ok((found.is_none(), if found.is_none() { "no filtration (exhaustive)".into() } else { "found one".into() }))
            });
        }
        r.attempt("Ext¹(U, U*) = 1", || {
            let x = e.ext1(&u, &u.dual())?;
            Ok((x == 1, format!("dim = {x}")))
        });
        r.attempt("Ext¹(U, U) = 0", || {
            let x = e.ext1(&u, &u)?;
            Ok((x == 0, format!("dim = {x}")))
        });
        r.attempt("U* ≅ Ω²(D_31^2)", || {
            let d = &e.simple_by_restricted(&part("31^2"))?.module;
            let w = e.heller(d, 2)?;
            Ok((e.are_isomorphic(&u.dual(), &w)?.is_some(), format!("dim Ω²(D_31^2) = {}", w.dim())))
        });
        r.attempt("Ind(rad² kP) ≅ U ⊕ U* ⊕ D_21^3 ⊕ D_31^2 ⊕ projective", || {
            let ind = self.sylow_induction()?;
            let mut want: Vec<(String, GroupModule)> = vec![
                ("U".into(), u.clone()),
                ("U*".into(), u.dual()),
                ("D_21^3".into(), e.simple_by_restricted(&part("21^3"))?.module.clone()),
                ("D_31^2".into(), e.simple_by_restricted(&part("31^2"))?.module.clone()),
            ];
            let dec = e.decompose(&ind)?;
            let mut proj = 0;
            let mut extra = 0;
            let mut matched = Vec::new();
            for (x, k) in dec.summands() {
                if e.is_projective_indecomposable(x)? {
                    proj += x.dim() * k;
                    continue;
                }
                for _ in 0..k {
                    let mut hit = None;
                    for (j, (_, w)) in want.iter().enumerate() {
                        if e.local_isomorphism(w, x)?.is_some() {
                            hit = Some(j);
                            break;
                        }
                    }
                    match hit {
                        Some(j) => matched.push(want.remove(j).0),
                        None => extra += 1,
                    }
                }
            }
            let ok = want.is_empty() && extra == 0 && proj + 22 == ind.dim();
            Ok((
                ok,
                format!("dim {}: {} plus a projective part of dimension {proj}", ind.dim(), matched.join(" ⊕ ")),
            ))
        });
        r.notes.push("the induced module has dimension 72; the named summands account for 22 and the remaining 50 are projective".into());
        r.notes.push("lifting to characteristic zero and the Σ_10 example are not computed".into());
        Ok(r)
    }

    /// Irreducible Specht modules at this degree and the conclusions that
    /// apply to them.
    pub fn irreducible_specht_report(&self) -> Result<SpechtReport> {
        self.gate()?;
        let e = self.engine();
        let p = e.p();
        let mut irreducible = Vec::new();
        let mut reducible = Vec::new();
        for pair in e.spechts() {
            let mu = &pair.shape;
            if !e.is_simple(&pair.specht)? {
                reducible.push(mu.clone());
                continue;
            }
            let class = SpechtClass::of(mu, p);
            let mut r = ExampleReport::new("6");
            let regular = matches!(class, SpechtClass::Regular | SpechtClass::RegularAndRestricted);
            let restricted = matches!(class, SpechtClass::Restricted | SpechtClass::RegularAndRestricted);
            let crit = self.check_criteria(&pair.dual);
            if regular {
                r.attempt(format!("S^{mu} ≅ Y^{mu}"), || {
                    let y = self.young_module(mu)?;
                    Ok((e.are_isomorphic(&pair.specht, &y)?.is_some(), format!("dim {}", y.dim())))
                });
                for (c, what) in [(Criterion::II, "Ext¹(S^λ, S_μ) = 0 for all λ"), (Criterion::III, "Ext¹(S_μ, S_λ) = 0 for all λ")] {
                    r.attempt(format!("{what}, μ = {mu}"), || ext_vanishes(&crit, c));
                }
            }
            if restricted {
                r.attempt(format!("S^{mu} ≅ Y^{} ⊗ sgn", mu.conjugate()), || {
                    let y = self.young_module(&mu.conjugate())?.sign_twist();
                    Ok((e.are_isomorphic(&pair.specht, &y)?.is_some(), format!("dim {}", y.dim())))
                });
                for (c, what) in [(Criterion::IV, "Ext¹(S_λ, S_μ) = 0 for all λ"), (Criterion::I, "Ext¹(S_μ, S^λ) = 0 for all λ")] {
                    r.attempt(format!("{what}, μ = {mu}"), || ext_vanishes(&crit, c));
                }
            }
            if class == SpechtClass::Neither {
                r.attempt(format!("S^{mu} meets none of the criteria"), || {
                    let rep = self.check_criteria(&pair.specht)?;
                    let none = Criterion::ALL.iter().all(|&c| !rep.passes(c));
                    Ok((none, String::new()))
                });
            }
            irreducible.push(IrreducibleSpecht { shape: mu.clone(), class, checks: r.checks });
        }
        Ok(SpechtReport { d: e.d(), p, irreducible, reducible })
    }

    pub fn verify_section6(&self) -> Result<ExampleReport> {
        let rep = self.irreducible_specht_report()?;
        let mut r = ExampleReport::new("6");
        let count = rep.irreducible.len();
        for s in rep.irreducible {
            for c in s.checks {
                r.checks.push(Check { name: format!("d={}: {}", rep.d, c.name), ..c });
            }
        }
        r.notes.push(format!(
            "d={}: {count} irreducible Specht modules; reducible: {}",
            rep.d,
            rep.reducible.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
        ));
        Ok(r)
    }

    /// Every isomorphism class of summands of every `M^(λ|μ)` at this degree.
    pub fn signed_sweep(&self) -> Result<Vec<SignedSummand>> {
        self.gate()?;
        let e = self.engine();
        let d = e.d();
        let mut out = Vec::new();
        for a in 0..=d {
            for lambda in partitions_of(a) {
                for mu in partitions_of(d - a) {
                    let m = signed_permutation_module(&lambda, &mu, e.field())?;
                    let dec = e.decompose(&m)?;
                    for (x, k) in dec.summands() {
                        let self_dual = e.local_isomorphism(x, &x.dual())?.is_some();
                        let specht = self.find_filtration(x, Kind::Specht)?.map(|c| c.labels());
                        out.push(SignedSummand {
                            source: m.label().to_string(),
                            dim: x.dim(),
                            multiplicity: k,
                            self_dual,
                            specht,
                            module: x.clone(),
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn verify_section7(&self) -> Result<ExampleReport> {
        let mut r = ExampleReport::new("7");
        for (i, s) in self.signed_sweep()?.iter().enumerate() {
            let labels = s.specht.as_ref().map(|l| l.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
            r.checks.push(Check::new(
                format!("{} summand {i} (dim {}, ×{})", s.source, s.dim, s.multiplicity),
                s.self_dual && s.specht.is_some(),
                format!("self-dual: {}; Specht labels: {}", s.self_dual, labels.unwrap_or_else(|| "none".into())),
            ));
        }
        Ok(r)
    }

    /// `Ext¹` and `Ext²` between the distinct signed Young modules of this
    /// degree. Returns one check per ordered pair.
    pub fn signed_young_ext_probe(&self) -> Result<ExampleReport> {
        let e = self.engine();
        let mut classes: Vec<GroupModule> = Vec::new();
        for s in self.signed_sweep()? {
            if !self.matches_known(&s.module, &classes)? {
                classes.push(s.module.clone());
            }
        }
        let mut r = ExampleReport::new("8");
        for (i, x) in classes.iter().enumerate() {
            let omega = e.heller(x, 1)?;
            for (j, y) in classes.iter().enumerate() {
                let one = e.ext1(x, y)?;
                let two = e.ext1(&omega, y)?;
                r.checks.push(Check::new(
                    format!("signed Young {i} (dim {}) vs {j} (dim {})", x.dim(), y.dim()),
                    one == 0 && two == 0,
                    format!("Ext¹ = {one}, Ext² = {two}"),
                ));
            }
        }
        r.notes.push(format!("{} isomorphism classes of signed Young modules", classes.len()));
        Ok(r)
    }

    fn matches_known(&self, x: &GroupModule, known: &[GroupModule]) -> Result<bool> {
        for y in known {
            if y.dim() == x.dim() && self.engine().local_isomorphism(y, x)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn ext_vanishes(crit: &Result<super::CriteriaReport>, c: Criterion) -> Result<(bool, String)> {
    let rep = crit.as_ref().map_err(Clone::clone)?;
    let res = rep.result(c);
    let detail = match &res.witness {
        Some(l) => format!("nonzero at λ = {l}"),
        None => format!("criterion {c} holds"),
    };
    Ok((res.passes, detail))
}
