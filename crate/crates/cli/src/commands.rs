use crate::parse::Grid;
use crate::table::{fmt_f64, num, Cell, Table};
use crate::{BasisArg, EvalArgs, ExpandArgs, FamilyArg, FormArg, KindArg, LiealgArgs, MehlerArgs, RnmArgs, SignArg, TableArgs, TargetArg, VarArgs};
use algleg::expansions::{lh_coefficients, lh_partial_sum, w_expansion, w_index, ExpansionSpec};
use algleg::families::{mehler_integral, mehler_quadrature, Family, FamilyPoint, MehlerVar, OrderSign, Variable};
use algleg::lie::{build_ladders, build_real_form_from, casimir2, casimir4, check_structure, singleton_check, w_max, RealForm, SingletonCase, Window};
use algleg::octahedral::{d_coeff, generate, OctIndex};
use algleg::oracle::{ferrers_p, LegendreFn};
use algleg::Error;
use serde_json::{json, Value};
use std::fmt;
use std::io::Write;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
    /// The command ran but a verification did not pass.
    Failed(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) if is_domain(e) => 3,
            CliError::Lib(Error::Config(_) | Error::WindowMismatch(_)) => 4,
            CliError::Lib(_) | CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage: {s}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Failed(s) => write!(f, "verification failed: {s}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type Res = Result<(), CliError>;

/// Errors that say the requested point or parameters lie outside where the
/// function is defined or implemented.
fn is_domain(e: &Error) -> bool {
    matches!(e, Error::Domain(_) | Error::Undefined(_) | Error::Pole(_) | Error::DivisionByZero(_) | Error::LimitNotImplemented(_))
}

/// Collects per-point failures; if every point failed for a domain reason
/// the whole command is a domain error.
#[derive(Default)]
struct Failures {
    points: usize,
    first_domain: Option<Error>,
    domain: usize,
}

impl Failures {
    fn record<T>(&mut self, r: &Result<T, Error>) {
        self.points += 1;
        if let Err(e) = r {
            if is_domain(e) {
                self.domain += 1;
                self.first_domain.get_or_insert_with(|| e.clone());
            }
        }
    }

    fn check(self) -> Res {
        match self.first_domain {
            Some(e) if self.domain == self.points => Err(e.into()),
            _ => Ok(()),
        }
    }
}

fn status<T>(r: &Result<T, Error>) -> Cell {
    Cell::Text(match r {
        Ok(_) => "ok".into(),
        Err(e) => e.to_string(),
    })
}

fn value(r: &Result<f64, Error>) -> Cell {
    r.as_ref().map_or(Cell::Empty, |&v| num(v))
}

/// Turns a non-finite success into an explicit failure.
fn finite(r: Result<f64, Error>) -> Result<f64, Error> {
    match r {
        Ok(v) if !v.is_finite() => Err(Error::NoConvergence(format!("non-finite value {v}"))),
        r => r,
    }
}

fn variables(v: &VarArgs) -> (&'static str, Vec<Variable>) {
    match (&v.theta, &v.xi) {
        (Some(Grid(t)), _) => ("theta", t.iter().map(|&x| Variable::Theta(x)).collect()),
        (None, Some(Grid(x))) => ("xi", x.iter().map(|&x| Variable::Xi(x)).collect()),
        (None, None) => unreachable!("clap requires one of --theta, --xi"),
    }
}

fn sign(s: SignArg) -> OrderSign {
    match s {
        SignArg::Plus => OrderSign::Plus,
        SignArg::Minus => OrderSign::Minus,
    }
}

pub fn eval(a: EvalArgs, out: &mut dyn Write) -> Res {
    let family = match a.family {
        FamilyArg::Octahedral => Family::Octahedral,
        FamilyArg::Tetra2 => Family::TetraII,
        FamilyArg::Tetra3 => Family::TetraIII,
        FamilyArg::Dihedral => Family::Dihedral,
        FamilyArg::Cyclic => Family::Cyclic,
    };
    let function = match a.kind {
        KindArg::FerrersP => LegendreFn::FerrersP,
        KindArg::FerrersQ => LegendreFn::FerrersQ,
        KindArg::LegendreP => LegendreFn::LegendreP,
        KindArg::LegendreQhat => LegendreFn::LegendreQhat,
    };
    let (name, vars) = variables(&a.var);
    let mut cols = vec![name, "value"];
    if a.oracle {
        cols.extend(["oracle", "rel_diff"]);
    }
    cols.push("status");
    let mut t = Table::new(&cols);
    let mut failures = Failures::default();
    for var in vars {
        let p = FamilyPoint { family, function, n: a.n, m: a.m, alpha: a.alpha, sign: sign(a.order), var };
        let r = finite(p.eval());
        failures.record(&r);
        let mut row = vec![Cell::Num(var.value()), value(&r)];
        if a.oracle {
            let o = finite(p.oracle_target().and_then(|t| t.eval()));
            row.push(value(&o));
            row.push(match (&r, &o) {
                (Ok(v), Ok(w)) => num((v - w).abs() / w.abs().max(1e-300)),
                _ => Cell::Empty,
            });
        }
        row.push(status(&r));
        t.push(row);
    }
    failures.check()?;
    t.write(a.out.format, out)?;
    Ok(())
}

pub fn rnm(a: RnmArgs, out: &mut dyn Write) -> Res {
    let idx = OctIndex::new(a.n, a.m);
    let f = generate(idx)?;
    let degree = f.numer.degree().unwrap_or(0);
    let d = d_coeff(idx);
    if a.json {
        let v = json!({
            "n": a.n,
            "m": a.m,
            "function": f.to_string(),
            "numerator": f.numer.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "a": f.pow_one_minus_u,
            "b": f.pow_pf,
            "degree": degree,
            "d": d.to_string(),
        });
        serde_json::to_writer_pretty(&mut *out, &v).map_err(std::io::Error::from)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{f}")?;
        writeln!(out, "a = {}", f.pow_one_minus_u)?;
        writeln!(out, "b = {}", f.pow_pf)?;
        writeln!(out, "degree = {degree}")?;
        writeln!(out, "d = {d}")?;
    }
    Ok(())
}

pub fn table(a: TableArgs, out: &mut dyn Write) -> Res {
    let mut t = Table::new(&["n", "m", "a", "b", "degree", "d", "numerator"]);
    for n in a.n.0..=a.n.1 {
        for m in a.m.0..=a.m.1 {
            let idx = OctIndex::new(n, m);
            let f = generate(idx)?;
            let coeffs: Vec<String> = f.numer.coeffs().iter().map(|c| c.to_string()).collect();
            t.push(vec![
                Cell::Int(n),
                Cell::Int(m),
                Cell::Int(f.pow_one_minus_u.into()),
                Cell::Int(f.pow_pf.into()),
                Cell::Int(f.numer.degree().unwrap_or(0) as i64),
                Cell::Text(d_coeff(idx).to_string()),
                Cell::Text(coeffs.join(" ")),
            ]);
        }
    }
    t.write(a.out.format, out)?;
    Ok(())
}

fn target(which: TargetArg, nu0: f64, mu: f64) -> (Box<dyn Fn(f64) -> f64>, Vec<f64>) {
    match which {
        TargetArg::One => (Box::new(|_| 1.0), vec![]),
        TargetArg::Linear => (Box::new(|z| z), vec![]),
        TargetArg::Abs => (Box::new(f64::abs), vec![0.0]),
        TargetArg::Step => (Box::new(|z| if z > 0.0 { 1.0 } else { 0.0 }), vec![0.0]),
        TargetArg::SelfFn => (Box::new(move |z| ferrers_p(nu0, mu, z).unwrap_or(f64::NAN)), vec![]),
    }
}

pub fn expand(a: ExpandArgs, out: &mut dyn Write) -> Res {
    if a.n_trunc < 0 {
        return Err(CliError::Usage(format!("--n-trunc must be non-negative, got {}", a.n_trunc)));
    }
    let (f, breaks) = target(a.target, a.nu0, a.mu);
    let format = a.out.format;
    match a.basis {
        BasisArg::W => {
            if a.target == TargetArg::SelfFn {
                return Err(CliError::Usage("--target self needs --basis love-hunter".into()));
            }
            let e = w_expansion(&f, a.n_trunc, &breaks)?;
            if a.coefficients {
                let mut t = Table::new(&["n", "j", "c"]);
                for &(n, c) in &e.coeffs {
                    t.push(vec![Cell::Int(n), Cell::Int(w_index(n).0.into()), num(c)]);
                }
                return Ok(t.write(format, out)?);
            }
            reconstruction(&a.z, &f, |z| e.eval(z), format, out)
        }
        BasisArg::LoveHunter => {
            let spec = ExpansionSpec::new(a.nu0, a.mu, a.n_trunc, &f)?;
            let c = lh_coefficients(&spec)?;
            if a.coefficients {
                let mut t = Table::new(&["n", "nu", "c"]);
                for &(n, cn) in &c {
                    t.push(vec![Cell::Int(n), Cell::Num(spec.degree(n)), num(cn)]);
                }
                return Ok(t.write(format, out)?);
            }
            reconstruction(&a.z, &f, |z| lh_partial_sum(&spec, &c, a.n_trunc, z), format, out)
        }
    }
}

fn reconstruction(
    z: &Grid,
    f: &dyn Fn(f64) -> f64,
    sum: impl Fn(f64) -> Result<f64, Error>,
    format: crate::table::Format,
    out: &mut dyn Write,
) -> Res {
    let mut t = Table::new(&["z", "target", "sum", "error", "status"]);
    for &x in &z.0 {
        let s = finite(sum(x));
        let fx = f(x);
        let err = s.as_ref().map_or(Cell::Empty, |v| num((v - fx).abs()));
        t.push(vec![Cell::Num(x), num(fx), value(&s), err, status(&s)]);
    }
    Ok(t.write(format, out)?)
}

fn forms(f: FormArg) -> Vec<RealForm> {
    match f {
        FormArg::So32A => vec![RealForm::So32A],
        FormArg::So41 => vec![RealForm::So41],
        FormArg::So32B => vec![RealForm::So32B],
        FormArg::So5R => vec![RealForm::So5R],
        FormArg::All => RealForm::ALL.to_vec(),
    }
}

fn jnum(x: f64) -> Value {
    if x.is_finite() {
        serde_json::from_str(&fmt_f64(x)).expect("formatted float is a JSON number")
    } else {
        Value::Null
    }
}

pub fn liealg(a: LiealgArgs, out: &mut dyn Write) -> Res {
    let (nu0, mu0) = (a.base[0], a.base[1]);
    let w = Window::square(nu0, mu0, a.window, a.margin)?;
    let ladders = build_ladders(w, a.twisted);
    let mut all_pass = true;
    let mut reports = Vec::new();
    for form in forms(a.form) {
        let t = build_real_form_from(&ladders, form)?;
        let structure = check_structure(&t)?;
        let c2 = casimir2(&t)?;
        let c2_dev = c2.deviation_from(-1.25);
        let w_res = w_max(&t)?;
        let c4 = casimir4(&t)?;
        let pass = [structure, c2_dev, w_res, c4].iter().all(|&r| r < a.tol);
        all_pass &= pass;
        let values: Vec<Value> = c2
            .diagonal
            .iter()
            .map(|(&(n, m), v)| json!({ "n": n, "m": m, "re": jnum(v.re), "im": jnum(v.im) }))
            .collect();
        reports.push(json!({
            "form": form.name(),
            "structure_residual": jnum(structure),
            "c2": { "target": jnum(-1.25), "max_deviation": jnum(c2_dev), "off_diagonal": jnum(c2.off_diagonal), "interior": values },
            "w_max": jnum(w_res),
            "c4_max": jnum(c4),
            "pass": pass,
        }));
    }
    let case = match (nu0, mu0) {
        (0.0, 0.0) => SingletonCase::Rac,
        (0.5, 0.5) => SingletonCase::Di,
        _ => SingletonCase::Offset(nu0, mu0),
    };
    let s = singleton_check(case, a.window.max(2))?;
    let report = json!({
        "base": [jnum(nu0), jnum(mu0)],
        "window": a.window,
        "margin": a.margin,
        "twisted": a.twisted,
        "tolerance": jnum(a.tol),
        "forms": reports,
        "singleton": {
            "case": format!("{:?}", s.case),
            "triangle_invariant": s.triangle_invariant,
            "columns_checked": s.columns_checked,
            "max_defect": jnum(s.max_defect),
            "skew_hermitian": s.skew_hermitian,
            "ladders_real_transposed": s.ladders_real_transposed,
        },
        "pass": all_pass,
    });
    serde_json::to_writer_pretty(&mut *out, &report).map_err(std::io::Error::from)?;
    writeln!(out)?;
    if all_pass {
        Ok(())
    } else {
        Err(CliError::Failed(format!("a residual exceeds {}", a.tol)))
    }
}

pub fn mehler(a: MehlerArgs, out: &mut dyn Write) -> Res {
    let (name, vars) = variables(&a.var);
    let mut t = Table::new(&[name, "closed_form", "quadrature", "rel_diff", "status"]);
    let mut failures = Failures::default();
    for var in vars {
        let mv = match var {
            Variable::Theta(x) => MehlerVar::Circular(x),
            Variable::Xi(x) => MehlerVar::Hyperbolic(x),
        };
        let c = finite(mehler_integral(a.n, a.m, mv));
        let q = finite(mehler_quadrature(a.n, a.m, mv));
        failures.record(&c);
        let diff = match (&c, &q) {
            (Ok(c), Ok(q)) => num((c - q).abs() / c.abs().max(1e-300)),
            _ => Cell::Empty,
        };
        let st = if c.is_ok() { status(&q) } else { status(&c) };
        t.push(vec![Cell::Num(var.value()), value(&c), value(&q), diff, st]);
    }
    failures.check()?;
    t.write(a.out.format, out)?;
    Ok(())
}
