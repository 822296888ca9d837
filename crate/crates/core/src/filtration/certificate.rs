use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::ffield::Matrix;
use crate::modrep::{GroupModule, Part, SubmoduleBasis};
use crate::structure::{is_homomorphism, SpechtPair};

use super::{Analyzer, Multiplicities};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Specht,
    DualSpecht,
}

impl Kind {
    pub fn module(self, pair: &SpechtPair) -> &GroupModule {
        match self {
            Kind::Specht => &pair.specht,
            Kind::DualSpecht => &pair.dual,
        }
    }

    pub fn symbol(self, lambda: &Partition) -> String {
        match self {
            Kind::Specht => format!("S^{lambda}"),
            Kind::DualSpecht => format!("S_{lambda}"),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Specht => "Specht",
            Kind::DualSpecht => "dual Specht",
        })
    }
}

/// One layer `F_{i+1}/F_i`: its label and an isomorphism from the named
/// Specht (or dual Specht) module onto it.
#[derive(Clone, Debug)]
pub struct Step {
    pub label: Partition,
    pub witness: Matrix,
}

/// `0 = F_0 ⊂ F_1 ⊂ … ⊂ F_k = M` with named subquotients.
#[derive(Clone, Debug)]
pub struct FiltrationCertificate {
    pub kind: Kind,
    pub chain: Vec<SubmoduleBasis>,
    pub steps: Vec<Step>,
}

impl FiltrationCertificate {
    /// Labels from the bottom of the chain up.
    pub fn labels(&self) -> Vec<Partition> {
        self.steps.iter().map(|s| s.label.clone()).collect()
    }

    pub fn multiplicities(&self) -> Multiplicities {
        let mut out = Multiplicities::new();
        for s in &self.steps {
            *out.entry(s.label.clone()).or_default() += 1;
        }
        out
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(SubmoduleBasis::dim).collect()
    }

    /// Recomputes every subquotient and checks its witness.
    pub fn verify(&self, an: &Analyzer, m: &GroupModule) -> Result<bool> {
        let e = an.engine();
        let (Some(first), Some(last)) = (self.chain.first(), self.chain.last()) else { return Ok(false) };
        if first.dim() != 0 || last.dim() != m.dim() || self.chain.len() != self.steps.len() + 1 {
            return Ok(false);
        }
        for (i, step) in self.steps.iter().enumerate() {
            let (lo, hi) = (&self.chain[i], &self.chain[i + 1]);
            if hi.check_stable(m).is_err() || !hi.contains_sub(lo) {
                return Ok(false);
            }
            let sq = subquotient(m, lo, hi)?;
            let s = self.kind.module(e.specht_pair(&step.label)?);
            if s.dim() != sq.dim() || !step.witness.is_invertible() || !is_homomorphism(s, &sq, &step.witness) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `upper / lower` as a module, in the coordinates of `upper`'s quotient.
pub(crate) fn subquotient(m: &GroupModule, lower: &SubmoduleBasis, upper: &SubmoduleBasis) -> Result<GroupModule> {
    let top = m.sub_quotient(upper, Part::Sub)?;
    let inner = SubmoduleBasis::new(&top, &upper.coords(lower.rows()))?;
    top.sub_quotient(&inner, Part::Quotient)
}

/// A multiplicity prediction and whether it matches the certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Formula {
    pub name: String,
    pub values: Multiplicities,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub kind: Kind,
    pub certified: Multiplicities,
    pub formulas: Vec<Formula>,
}

impl CrossCheck {
    pub fn formula(&self, name: &str) -> Option<&Formula> {
        self.formulas.iter().find(|f| f.name == name)
    }
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

/// Coefficient vectors of `P^{h-1}(F_p)`, normalized with leading entry 1.
fn projective_points(p: u32, h: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..h).flat_map(move |lead| {
        let free = h - lead - 1;
        let count = (p as u64).saturating_pow(free as u32);
        (0..count).map(move |code| {
            let mut c = vec![0u32; h];
            c[lead] = 1;
            let mut x = code;
            for slot in c.iter_mut().skip(lead + 1) {
                *slot = (x % p as u64) as u32;
                x /= p as u64;
            }
            c
        })
    })
}

/// Every `n ≥ 0` with `Σ n_i · factors[i] = target`.
fn feasible_counts(target: &[usize], factors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn rec(i: usize, rest: &mut [usize], counts: &mut Vec<usize>, factors: &[Vec<usize>], out: &mut Vec<Vec<usize>>) {
        if i == factors.len() {
            if rest.iter().all(|&r| r == 0) {
                out.push(counts.clone());
            }
            return;
        }
        let v = &factors[i];
        let max = v.iter().zip(rest.iter()).filter(|(a, _)| **a > 0).map(|(a, r)| r / a).min().unwrap_or(0);
        for c in 0..=max {
            for (r, a) in rest.iter_mut().zip(v) {
                *r -= c * a;
            }
            counts.push(c);
            rec(i + 1, rest, counts, factors, out);
            counts.pop();
            for (r, a) in rest.iter_mut().zip(v) {
                *r += c * a;
            }
        }
    }
    let mut out = Vec::new();
    rec(0, &mut target.to_vec(), &mut Vec::new(), factors, &mut out);
    out
}

type Path = Vec<(Matrix, usize)>;

impl Analyzer {
    /// A certified filtration of the requested kind, `None` when the
    /// exhaustive search shows there is none, or `BudgetExceeded`.
    ///
    /// Summands are searched one isomorphism class at a time; a module has
    /// such a filtration exactly when each of its summands does.
    pub fn find_filtration(&self, m: &GroupModule, kind: Kind) -> Result<Option<FiltrationCertificate>> {
        self.gate()?;
        let e = self.engine();
        let f = m.field();
        let dec = e.decompose(m)?;
        let factors = self.specht_factors()?;
        let mut budget = Budget { limit: e.config().budget, used: 0 };
        let mut chain = vec![SubmoduleBasis::zero(m)];
        let mut labels = Vec::new();
        let mut below = Matrix::zeros(f, 0, m.dim());
        for class in &dec.classes {
            let rep = &dec.pieces[class[0]];
            let Some(path) = self.search_piece(&rep.module, kind, &factors, &mut budget)? else { return Ok(None) };
            for &i in class {
                let piece = &dec.pieces[i];
                let phi = match i == class[0] {
                    true => Matrix::identity(f, rep.dim()),
                    false => e
                        .local_isomorphism(&rep.module, &piece.module)?
                        .ok_or_else(|| Error::Identification("summands in one class are not isomorphic".into()))?,
                };
                for (rows, idx) in &path {
                    let lifted = rows.mul(&phi).mul(&piece.basis);
                    chain.push(SubmoduleBasis::from_rows_unchecked(&below.vstack(&lifted)));
                    labels.push(e.spechts()[*idx].shape.clone());
                }
                below = below.vstack(&piece.basis);
            }
        }
        let mut steps = Vec::new();
        for (i, label) in labels.into_iter().enumerate() {
            let sq = subquotient(m, &chain[i], &chain[i + 1])?;
            let s = kind.module(e.specht_pair(&label)?);
            let witness = e
                .are_isomorphic(s, &sq)?
                .ok_or_else(|| Error::Identification(format!("layer {i} is not {}", kind.symbol(&label))))?;
            steps.push(Step { label, witness });
        }
        let cert = FiltrationCertificate { kind, chain, steps };
        if !cert.verify(self, m)? {
            return Err(Error::Identification("assembled filtration failed verification".into()));
        }
        Ok(Some(cert))
    }

    /// Backtracking over label multisets compatible with the composition
    /// factors, then over submodules isomorphic to each candidate.
    fn search_piece(&self, x: &GroupModule, kind: Kind, factors: &[Vec<usize>], budget: &mut Budget) -> Result<Option<Path>> {
        let comp = self.engine().composition_multiplicities(x)?;
        for mut counts in feasible_counts(&comp, factors) {
            let mut failed = HashSet::new();
            let mut path = Vec::new();
            if self.peel(x, kind, &SubmoduleBasis::zero(x), &mut counts, &mut path, &mut failed, budget)? {
                return Ok(Some(path));
            }
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn peel(
        &self,
        x: &GroupModule,
        kind: Kind,
        sub: &SubmoduleBasis,
        remaining: &mut [usize],
        path: &mut Path,
        failed: &mut HashSet<(Vec<u32>, Vec<usize>)>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if sub.dim() == x.dim() {
            return Ok(remaining.iter().all(|&c| c == 0));
        }
        let e = self.engine();
        let f = x.field();
        let q = x.sub_quotient(sub, Part::Quotient)?;
        let n = remaining.len();
        // dominated labels at the bottom of a Specht filtration, dominant
        // ones at the bottom of a dual Specht filtration
        let order: Vec<usize> = match kind {
            Kind::Specht => (0..n).rev().collect(),
            Kind::DualSpecht => (0..n).collect(),
        };
        for i in order {
            if remaining[i] == 0 {
                continue;
            }
            let s = kind.module(&e.spechts()[i]);
            let hs = e.hom(s, &q)?;
            let mut seen = HashSet::new();
            for c in projective_points(f.p(), hs.dim()) {
                budget.spend()?;
                let r = hs.combination(f, &c).rref();
                if r.rank != s.dim() {
                    continue;
                }
                let image = r.matrix.row_range(0, r.rank);
                if !seen.insert(image.data().to_vec()) {
                    continue;
                }
                let next = sub.lift(Part::Quotient, &image);
                remaining[i] -= 1;
                let key = (next.rows().data().to_vec(), remaining.to_vec());
                if !failed.contains(&key) {
                    path.push((next.rows().clone(), i));
                    if self.peel(x, kind, &next, remaining, path, failed, budget)? {
                        return Ok(true);
                    }
                    path.pop();
                    failed.insert(key);
                }
                remaining[i] += 1;
            }
        }
        Ok(false)
    }

    /// Certificate multiplicities against the Hom-dimension formulas.
    pub fn multiplicity_crosscheck(&self, m: &GroupModule, cert: &FiltrationCertificate) -> Result<CrossCheck> {
        let e = self.engine();
        let certified = cert.multiplicities();
        let names: [(&str, bool, Kind); 3] = match cert.kind {
            Kind::DualSpecht => [
                ("dim Hom(M, S^μ)", false, Kind::Specht),
                ("dim Hom(S^μ, M)", true, Kind::Specht),
                ("dim Hom(M, S_μ)", false, Kind::DualSpecht),
            ],
            Kind::Specht => [
                ("dim Hom(M, S_μ)", false, Kind::DualSpecht),
                ("dim Hom(S_μ, M)", true, Kind::DualSpecht),
                ("dim Hom(S^μ, M)", true, Kind::Specht),
            ],
        };
        let mut formulas = Vec::new();
        for (name, into_m, k) in names {
            let mut values = Multiplicities::new();
            for pair in e.spechts() {
                let s = k.module(pair);
                let h = if into_m { e.hom_dim(s, m)? } else { e.hom_dim(m, s)? };
                if h > 0 {
                    values.insert(pair.shape.clone(), h);
                }
            }
            let agrees = values == certified;
            formulas.push(Formula { name: name.to_string(), values, agrees });
        }
        Ok(CrossCheck { kind: cert.kind, certified, formulas })
    }
}
