use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use symrep::combinat::Partition;
use symrep::ffield::Fp;
use symrep::filtration::{Analyzer, Criterion, ExampleReport, FiltrationCertificate, Kind};
use symrep::modrep::GroupModule;
use symrep::specht::{
    dual_specht_module, permutation_module, signed_permutation_module, simple_module, simple_restricted, specht_module,
};
use symrep::structure::{Engine, SimpleLabel};
use symrep::Error;

use crate::cache::{Cache, Lookup};
use crate::config::{Command, Labeling, RunConfig, Section};
use crate::expr::{parse_partition, parse_signed, Expr, LeafKind};
use crate::report::{ModuleRef, Outcome};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

pub fn dispatch(cfg: &RunConfig, cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Specht { partition } => construct(cfg, Expr::Leaf(LeafKind::Specht, parse_partition(partition)?, None)),
        Command::Perm { partition } => construct(cfg, Expr::Leaf(LeafKind::Perm, parse_partition(partition)?, None)),
        Command::Simple { partition, labeling } => {
            let kind = match labeling {
                Labeling::Regular => LeafKind::Simple,
                Labeling::Restricted => LeafKind::SimpleRestricted,
            };
            construct(cfg, Expr::Leaf(kind, parse_partition(partition)?, None))
        }
        Command::SignedPerm { spec } => {
            let (a, b) = parse_signed(spec)?;
            construct(cfg, Expr::Leaf(LeafKind::SignedPerm, a, Some(b)))
        }
        Command::Criteria { expr, require } => {
            criteria(cfg, &Expr::parse(expr)?, &require.iter().map(|&c| c.into()).collect::<Vec<_>>())
        }
        Command::Filtration { expr, kind } => filtration(cfg, &Expr::parse(expr)?, (*kind).into()),
        Command::Young { partition } => young(cfg, &parse_partition(partition)?),
        Command::VerifyPaper { section } => verify(cfg, *section),
        Command::SweepSigned => sweep_signed(cfg),
    }
}

/// Engine, analyzer and cache for one degree.
struct Session {
    cfg: RunConfig,
    analyzer: Analyzer,
    cache: Option<Cache>,
}

impl Session {
    fn new(cfg: &RunConfig, d: usize) -> Result<Self> {
        let f = Fp::new(cfg.p)?;
        let engine = Engine::new(d, f, cfg.engine_config());
        let cache = cfg.cache_dir.as_deref().map(Cache::open).transpose()?;
        Ok(Session { cfg: cfg.clone(), analyzer: Analyzer::new(engine), cache })
    }

    /// Degree from `--d` and the expression; theory verbs check the
    /// regular-module limit before anything else.
    fn for_expr(cfg: &RunConfig, e: &Expr, regular: bool) -> Result<Self> {
        let inferred = e.degree()?;
        let d = cfg.d.or(inferred).ok_or_else(|| CliError::Usage("cannot infer the degree; pass --d".into()))?;
        let s = Session::new(cfg, d)?;
        if regular || e.needs_regular() {
            s.engine().check_regular_limit()?;
        }
        if let Some(k) = inferred.filter(|&k| k != d) {
            return Err(CliError::Usage(format!("--d {d} but {e} has degree {k}")));
        }
        Ok(s)
    }

    fn engine(&self) -> &Engine {
        self.analyzer.engine()
    }

    fn field(&self) -> Fp {
        self.engine().field()
    }

    fn d(&self) -> usize {
        self.engine().d()
    }

    fn eval(&self, e: &Expr) -> Result<GroupModule> {
        let Some(cache) = &self.cache else {
            return self.build(e);
        };
        let name = e.to_string();
        let key = cache.key(&name, self.cfg.p, self.d(), self.cfg.seed);
        match cache.get(&key) {
            Lookup::Hit(m) => {
                eprintln!("cache hit: {name}");
                return Ok(m);
            }
            Lookup::Corrupt(why) => eprintln!("cache entry for {name} is damaged ({why}); rebuilding"),
            Lookup::Miss => {}
        }
        let m = self.build(e)?;
        cache.put(&key, &m)?;
        Ok(m)
    }

    fn build(&self, e: &Expr) -> Result<GroupModule> {
        let f = self.field();
        let d = self.d();
        let m = match e {
            Expr::Leaf(kind, a, b) => {
                let size = a.size() + b.as_ref().map_or(0, Partition::size);
                if size != d {
                    return Err(Error::SizeMismatch(size, d).into());
                }
                match kind {
                    LeafKind::Specht => specht_module(a, f).0,
                    LeafKind::DualSpecht => dual_specht_module(a, f),
                    LeafKind::Perm => permutation_module(a, f),
                    LeafKind::Simple => simple_module(a, f)?,
                    LeafKind::SimpleRestricted => simple_restricted(a, f)?,
                    LeafKind::SignedPerm => signed_permutation_module(a, b.as_ref().expect("signed leaf"), f)?,
                    LeafKind::Young => self.analyzer.young_module(a)?,
                }
            }
            Expr::Trivial => GroupModule::trivial(d, f),
            Expr::Sign => GroupModule::sign(d, f),
            Expr::Dual(x) => self.eval(x)?.dual().labeled(e.to_string()),
            Expr::SignTwist(x) => self.eval(x)?.sign_twist().labeled(e.to_string()),
            Expr::Tensor(a, b) => self.eval(a)?.tensor(&self.eval(b)?)?.labeled(e.to_string()),
            Expr::Heller(k, x) => self.engine().heller(&self.eval(x)?, *k)?.labeled(e.to_string()),
            Expr::Summand(x, i) => {
                let m = self.eval(x)?;
                let dec = self.engine().decompose(&m)?;
                let classes = dec.summands();
                let (s, _) = classes.get(*i).ok_or_else(|| {
                    CliError::Usage(format!("{x} has {} classes of summands; index {i} is out of range", classes.len()))
                })?;
                (*s).clone().labeled(e.to_string())
            }
        };
        Ok(m)
    }
}

#[derive(Serialize)]
struct Factor {
    restricted: Partition,
    regular: Partition,
    multiplicity: usize,
}

fn factor(label: &SimpleLabel, multiplicity: usize) -> Factor {
    Factor { restricted: label.restricted.clone(), regular: label.regular.clone(), multiplicity }
}

fn factor_text(label: &SimpleLabel, k: usize) -> String {
    if k == 1 {
        label.to_string()
    } else {
        format!("{label} x{k}")
    }
}

fn construct(cfg: &RunConfig, e: Expr) -> Result<Outcome> {
    let d = e.degree()?.expect("constructor leaves have a degree");
    if let Some(given) = cfg.d.filter(|&g| g != d) {
        return Err(CliError::Usage(format!("--d {given} but {e} has degree {d}")));
    }
    let s = Session::new(cfg, d)?;
    let m = s.eval(&e)?;
    let eng = s.engine();
    let mut composition = Vec::new();
    let mut table = format!("{}  dim {}\n\ncomposition factors:\n", m.label(), m.dim());
    for (i, &k) in eng.composition_multiplicities(&m)?.iter().enumerate() {
        if k > 0 {
            let l = eng.label(i)?;
            let _ = writeln!(table, "  {}", factor_text(&l, k));
            composition.push(factor(&l, k));
        }
    }
    let loewy = eng.loewy(&m)?;
    let layers = eng.label_layers(&loewy.layers)?;
    table.push_str("\nLoewy layers, top first:\n");
    let mut json_layers = Vec::new();
    for layer in &layers {
        let line: Vec<String> = layer.0.iter().map(|(l, k)| factor_text(l, *k)).collect();
        let _ = writeln!(table, "  {}", line.join(" ⊕ "));
        json_layers.push(layer.0.iter().map(|(l, k)| factor(l, *k)).collect::<Vec<_>>());
    }
    Ok(Outcome {
        passed: true,
        degree: Some(d),
        result: json!({
            "module": ModuleRef::of(&m),
            "expression": e.to_string(),
            "composition_factors": composition,
            "loewy_layers": json_layers,
        }),
        table,
        modules: vec![ModuleRef::of(&m)],
    })
}

fn criteria(cfg: &RunConfig, e: &Expr, require: &[Criterion]) -> Result<Outcome> {
    let s = Session::for_expr(cfg, e, true)?;
    let m = s.eval(e)?;
    let rep = s.analyzer.check_criteria(&m)?;
    let mut table = format!("{}  dim {}\n\n", m.label(), m.dim());
    let mut rows = Vec::new();
    for r in &rep.results {
        let c = r.criterion;
        let verdict = if r.passes { "holds" } else { "fails" };
        let _ = write!(table, "{:<6}{} = 0 for all λ: {verdict}", c.to_string(), c.ext_expression());
        match &r.witness {
            Some(w) => {
                let dim = r.ext.iter().find(|(l, _)| l == w).map_or(0, |x| x.1);
                let _ = writeln!(table, " (λ = {w}, dim {dim})");
            }
            None => {
                let terms: Vec<String> = r.predicted.iter().map(|(l, k)| format!("{}x{k}", c.kind().symbol(l))).collect();
                let _ = writeln!(table, "\n      {} filtration, {}: {}", c.kind(), c.hom_expression(), terms.join(" "));
            }
        }
        rows.push(json!({
            "criterion": c.to_string(),
            "condition": format!("{} = 0 for all λ", c.ext_expression()),
            "passes": r.passes,
            "witness": r.witness,
            "ext": r.ext.iter().map(|(l, x)| json!({ "lambda": l, "dim": x })).collect::<Vec<_>>(),
            "filtration": c.kind(),
            "multiplicity_formula": c.hom_expression(),
            "predicted": r.predicted,
        }));
    }
    let passed = require.iter().all(|&c| rep.passes(c));
    if !require.is_empty() {
        let names: Vec<String> = require.iter().map(ToString::to_string).collect();
        let _ = writeln!(table, "\nrequired: {}", names.join(" "));
    }
    Ok(Outcome {
        passed,
        degree: Some(s.d()),
        result: json!({
            "module": ModuleRef::of(&m),
            "expression": e.to_string(),
            "criteria": rows,
            "required": require.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        table,
        modules: vec![ModuleRef::of(&m)],
    })
}

fn certificate_json(s: &Session, m: &GroupModule, cert: &FiltrationCertificate) -> Result<Value> {
    let an = &s.analyzer;
    let verified = cert.verify(an, m)?;
    let check = an.multiplicity_crosscheck(m, cert)?;
    Ok(json!({
        "status": "certified",
        "labels": cert.labels().iter().map(|l| cert.kind.symbol(l)).collect::<Vec<_>>(),
        "chain_dims": cert.dims(),
        "multiplicities": cert.multiplicities(),
        "verified": verified,
        "crosscheck": check,
    }))
}

fn search(s: &Session, m: &GroupModule, kind: Kind) -> Result<(Option<FiltrationCertificate>, String)> {
    match s.analyzer.find_filtration(m, kind) {
        Ok(Some(c)) => Ok((Some(c), "certified".into())),
        Ok(None) => Ok((None, "no filtration (exhaustive)".into())),
        Err(Error::BudgetExceeded { budget }) => Ok((None, format!("not found within budget of {budget} steps"))),
        Err(e) => Err(e.into()),
    }
}

fn filtration(cfg: &RunConfig, e: &Expr, kind: Kind) -> Result<Outcome> {
    let s = Session::for_expr(cfg, e, false)?;
    s.analyzer.gate()?;
    let m = s.eval(e)?;
    let (cert, status) = search(&s, &m, kind)?;
    let mut table = format!("{kind} filtration of {} (dim {})\n", m.label(), m.dim());
    let (passed, body) = match &cert {
        Some(c) => {
            let body = certificate_json(&s, &m, c)?;
            table.push_str("bottom to top:\n");
            for (l, dim) in c.labels().iter().zip(c.dims().iter().skip(1)) {
                let _ = writeln!(table, "  {:<12} through dim {dim}", kind.symbol(l));
            }
            let verified = body["verified"].as_bool().unwrap_or(false);
            let _ = writeln!(table, "certificate {}", if verified { "verified" } else { "FAILED verification" });
            if let Some(x) = body["crosscheck"]["formulas"].as_array() {
                for f in x {
                    let _ = writeln!(
                        table,
                        "  {:<18} {}",
                        f["name"].as_str().unwrap_or(""),
                        if f["agrees"].as_bool() == Some(true) { "agrees" } else { "differs" }
                    );
                }
            }
            (verified, body)
        }
        None => {
            let _ = writeln!(table, "{status}");
            (false, json!({ "status": status }))
        }
    };
    let mut result = json!({ "module": ModuleRef::of(&m), "expression": e.to_string(), "kind": kind });
    merge(&mut result, body);
    Ok(Outcome { passed, degree: Some(s.d()), result, table, modules: vec![ModuleRef::of(&m)] })
}

fn merge(into: &mut Value, from: Value) {
    if let (Some(a), Value::Object(b)) = (into.as_object_mut(), from) {
        a.extend(b);
    }
}

fn young(cfg: &RunConfig, lambda: &Partition) -> Result<Outcome> {
    let e = Expr::Leaf(LeafKind::Young, lambda.clone(), None);
    let s = Session::for_expr(cfg, &e, false)?;
    s.analyzer.gate()?;
    let y = s.eval(&e)?;
    let self_dual = s.engine().local_isomorphism(&y, &y.dual())?.is_some();
    let mut table = format!("{}  dim {}\nself-dual: {}\n", y.label(), y.dim(), if self_dual { "yes" } else { "no" });
    let mut passed = self_dual;
    let mut filtrations = serde_json::Map::new();
    for kind in [Kind::Specht, Kind::DualSpecht] {
        let (cert, status) = search(&s, &y, kind)?;
        let body = match &cert {
            Some(c) => {
                let body = certificate_json(&s, &y, c)?;
                passed &= body["verified"].as_bool() == Some(true);
                let labels: Vec<String> = c.labels().iter().map(|l| kind.symbol(l)).collect();
                let _ = writeln!(table, "{kind} filtration, bottom to top: {}", labels.join(", "));
                body
            }
            None => {
                passed = false;
                let _ = writeln!(table, "{kind} filtration: {status}");
                json!({ "status": status })
            }
        };
        filtrations.insert(serde_json::to_value(kind).expect("kind").as_str().expect("string").to_string(), body);
    }
    Ok(Outcome {
        passed,
        degree: Some(s.d()),
        result: json!({ "module": ModuleRef::of(&y), "self_dual": self_dual, "filtrations": filtrations }),
        table,
        modules: vec![ModuleRef::of(&y)],
    })
}

fn example_table(r: &ExampleReport, table: &mut String) {
    for c in &r.checks {
        let _ = writeln!(table, "  {} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    for n in &r.notes {
        let _ = writeln!(table, "  note: {n}");
    }
}

fn verify(cfg: &RunConfig, section: Section) -> Result<Outcome> {
    let fixed = |what: &str| -> Result<()> {
        match cfg.d {
            Some(d) if d != 5 => Err(CliError::Usage(format!("{what} runs at d = 5, not --d {d}"))),
            _ => Ok(()),
        }
    };
    let mut reports = Vec::new();
    let mut modules = Vec::new();
    let mut table = String::new();
    if matches!(section, Section::Four | Section::All) {
        if section == Section::Four {
            fixed("section 4")?;
        }
        let s = Session::new(cfg, 5)?;
        let r = s.analyzer.verify_section4()?;
        if let Ok(u) = s.analyzer.module_u() {
            modules.push(ModuleRef::of(&u));
        }
        reports.push(r);
    }
    if matches!(section, Section::Six | Section::All) {
        let top = cfg.d.unwrap_or(6);
        for d in 1..=top {
            let s = Session::new(cfg, d)?;
            let mut r = s.analyzer.verify_section6()?;
            r.section = format!("6 (d = {d})");
            reports.push(r);
        }
    }
    if matches!(section, Section::Seven | Section::All) {
        if section == Section::Seven {
            fixed("section 7")?;
        }
        let s = Session::new(cfg, 5)?;
        reports.push(s.analyzer.verify_section7()?);
        let mut probe = s.analyzer.signed_young_ext_probe()?;
        probe.section = "7 (Ext between signed Young modules)".into();
        reports.push(probe);
    }
    for r in &reports {
        let _ = writeln!(table, "section {}: {}", r.section, if r.passed() { "pass" } else { "FAIL" });
        example_table(r, &mut table);
        table.push('\n');
    }
    let passed = reports.iter().all(ExampleReport::passed);
    Ok(Outcome {
        passed,
        degree: cfg.d,
        result: json!({ "sections": reports }),
        table,
        modules,
    })
}

fn sweep_signed(cfg: &RunConfig) -> Result<Outcome> {
    let d = cfg.d.unwrap_or(5);
    let s = Session::new(cfg, d)?;
    let rows = s.analyzer.signed_sweep()?;
    let mut table = format!("{:<16} {:>4} {:>5}  {:<9} Specht filtration (bottom up)\n", "source", "dim", "mult", "self-dual");
    let mut passed = true;
    let mut json_rows = Vec::new();
    let mut modules = Vec::new();
    for r in &rows {
        passed &= r.self_dual && r.specht.is_some();
        let labels = r.specht.as_ref().map_or("none".to_string(), |v| {
            v.iter().map(|l| Kind::Specht.symbol(l)).collect::<Vec<_>>().join(", ")
        });
        let _ = writeln!(
            table,
            "{:<16} {:>4} {:>5}  {:<9} {labels}",
            r.source,
            r.dim,
            r.multiplicity,
            if r.self_dual { "yes" } else { "no" }
        );
        let mut v = serde_json::to_value(r).expect("summand serializes");
        merge(&mut v, json!({ "hash": r.module.content_hash() }));
        json_rows.push(v);
        modules.push(ModuleRef::of(&r.module));
    }
    Ok(Outcome { passed, degree: Some(d), result: json!({ "summands": json_rows }), table, modules })
}
