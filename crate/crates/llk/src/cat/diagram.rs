//! Executable commuting diagrams. A `DiagramSpec` quantifies over object
//! variables (instantiated from a grid) and optional morphism variables
//! (enumerated from hom-sets), and asserts that two composite paths are
//! equal. Reports carry the smallest counterexample found.

use super::{BangOps, Cat, CartesianOps, ClosedOps, DiffOps, Monoidal};
use crate::syntax::parse::{read_sexps, Sexp};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq)]
pub enum OExpr {
    Var(u8),
    One,
    Top,
    Tensor(Box<OExpr>, Box<OExpr>),
    With(Box<OExpr>, Box<OExpr>),
    Lolli(Box<OExpr>, Box<OExpr>),
    Bang(Box<OExpr>),
}

impl OExpr {
    pub fn tensor(a: OExpr, b: OExpr) -> OExpr {
        OExpr::Tensor(Box::new(a), Box::new(b))
    }
    pub fn with_(a: OExpr, b: OExpr) -> OExpr {
        OExpr::With(Box::new(a), Box::new(b))
    }
    pub fn bang(a: OExpr) -> OExpr {
        OExpr::Bang(Box::new(a))
    }
}

pub const A: OExpr = OExpr::Var(0);
pub const B: OExpr = OExpr::Var(1);
pub const C: OExpr = OExpr::Var(2);
pub const D: OExpr = OExpr::Var(3);

#[derive(Clone, Debug, PartialEq)]
pub enum MExpr {
    Id(OExpr),
    MVar(u8),
    /// Named structural generator applied at object parameters.
    Gen(String, Vec<OExpr>),
    /// Path composition in diagrammatic order: `Comp([f, g])` is g ∘ f.
    Comp(Vec<MExpr>),
    Tensor(Box<MExpr>, Box<MExpr>),
    Pair(Box<MExpr>, Box<MExpr>),
    BangM(Box<MExpr>),
    Plus(Box<MExpr>, Box<MExpr>),
    /// cur(f) for f : Z ⊗ A → B, with the three objects spelled out.
    Cur(OExpr, OExpr, OExpr, Box<MExpr>),
}

pub fn gen(name: &str, objs: &[OExpr]) -> MExpr {
    MExpr::Gen(name.to_string(), objs.to_vec())
}

pub fn path(steps: &[MExpr]) -> MExpr {
    MExpr::Comp(steps.to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MVarMode {
    /// Enumerate the full hom-set (guarded by a size cap).
    Exhaustive,
    /// Enumerate a generating family only (sound for union-linear laws).
    Basis,
}

#[derive(Clone, Debug)]
pub struct DiagramSpec {
    pub name: String,
    pub ovars: usize,
    /// Morphism variables with their (dom, cod) object expressions.
    pub mvars: Vec<(OExpr, OExpr)>,
    pub mvar_mode: MVarMode,
    pub lhs: MExpr,
    pub rhs: MExpr,
}

impl DiagramSpec {
    pub fn new(name: &str, ovars: usize, lhs: MExpr, rhs: MExpr) -> DiagramSpec {
        DiagramSpec {
            name: name.to_string(),
            ovars,
            mvars: vec![],
            mvar_mode: MVarMode::Exhaustive,
            lhs,
            rhs,
        }
    }

    pub fn with_mvars(mut self, mvars: Vec<(OExpr, OExpr)>, mode: MVarMode) -> DiagramSpec {
        self.mvars = mvars;
        self.mvar_mode = mode;
        self
    }
}

/// The generator surface a model exposes to diagrams. Every capability is
/// optional; unsupported requests surface as check errors.
pub trait DiagHost: Cat {
    fn op_obj(&self, e: &OExpr, env: &[Self::O]) -> Result<Self::O, String>;
    fn op_gen(&self, name: &str, objs: &[Self::O]) -> Result<Self::M, String>;
    fn op_tensor_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String>;
    fn op_pair_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String>;
    fn op_bang_m(&self, f: &Self::M) -> Result<Self::M, String>;
    fn op_plus_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String>;
    fn op_cur(
        &self,
        z: &Self::O,
        a: &Self::O,
        b: &Self::O,
        f: &Self::M,
    ) -> Result<Self::M, String>;
}

/// Object evaluation over the full monoidal/cartesian/closed/bang surface.
pub fn obj_full<H>(h: &H, e: &OExpr, env: &[H::O]) -> Result<H::O, String>
where
    H: Monoidal + CartesianOps + ClosedOps + BangOps,
{
    Ok(match e {
        OExpr::Var(i) => env
            .get(*i as usize)
            .cloned()
            .ok_or_else(|| format!("unbound object variable #{i}"))?,
        OExpr::One => h.unit(),
        OExpr::Top => h.top(),
        OExpr::Tensor(a, b) => {
            let a = obj_full(h, a, env)?;
            let b = obj_full(h, b, env)?;
            h.tensor(&a, &b)
        }
        OExpr::With(a, b) => {
            let a = obj_full(h, a, env)?;
            let b = obj_full(h, b, env)?;
            h.prod(&a, &b)
        }
        OExpr::Lolli(a, b) => {
            let a = obj_full(h, a, env)?;
            let b = obj_full(h, b, env)?;
            h.hom_obj(&a, &b)
        }
        OExpr::Bang(a) => {
            let a = obj_full(h, a, env)?;
            h.bang(&a)
        }
    })
}

/// Core structural generators shared by all three models.
pub fn gen_core<H>(h: &H, name: &str, o: &[H::O]) -> Option<Result<H::M, String>>
where
    H: Monoidal + CartesianOps + ClosedOps + BangOps,
{
    let arg = |i: usize| -> &H::O { &o[i] };
    let want = |n: usize| -> bool { o.len() == n };
    Some(Ok(match name {
        "alpha" if want(3) => h.alpha(arg(0), arg(1), arg(2)),
        "alpha-inv" if want(3) => h.alpha_inv(arg(0), arg(1), arg(2)),
        "lambda" if want(1) => h.lambda(arg(0)),
        "lambda-inv" if want(1) => h.lambda_inv(arg(0)),
        "rho" if want(1) => h.rho(arg(0)),
        "rho-inv" if want(1) => h.rho_inv(arg(0)),
        "gamma" if want(2) => h.gamma(arg(0), arg(1)),
        "e" if want(1) => h.to_top(arg(0)),
        "pr0" if want(2) => h.pr0(arg(0), arg(1)),
        "pr1" if want(2) => h.pr1(arg(0), arg(1)),
        "diag" if want(1) => h.diag(arg(0)),
        "ev" if want(2) => h.ev(arg(0), arg(1)),
        "der" if want(1) => h.der(arg(0)),
        "dig" if want(1) => h.dig(arg(0)),
        "m0" if want(0) => h.m0(),
        "m0-inv" if want(0) => h.m0_inv(),
        "m2" if want(2) => h.m2(arg(0), arg(1)),
        "m2-inv" if want(2) => h.m2_inv(arg(0), arg(1)),
        "weak" if want(1) => h.weak(arg(0)),
        "contr" if want(1) => h.contr(arg(0)),
        "mu2" if want(2) => h.mu2(arg(0), arg(1)),
        "mu0" if want(0) => h.mu0(),
        "lax-m2" if want(2) => h.lax_m2(arg(0), arg(1)),
        _ => return None,
    }))
}

/// Differential generators (Rel only).
pub fn gen_diff<H: DiffOps>(h: &H, name: &str, o: &[H::O]) -> Option<Result<H::M, String>> {
    let want = |n: usize| -> bool { o.len() == n };
    Some(Ok(match name {
        "coder" if want(1) => h.coder(&o[0]),
        "coweak" if want(1) => h.coweak(&o[0]),
        "cocontr" if want(1) => h.cocontr(&o[0]),
        "dbar" if want(1) => h.dbar(&o[0]),
        "zero" if want(2) => h.zero(&o[0], &o[1]),
        _ => return None,
    }))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// How morphism variables were quantified, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantifier: Option<String>,
    pub instances: usize,
}

impl DiagramResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOpts {
    /// Cap on exhaustive hom enumeration per morphism variable.
    pub hom_cap: f64,
}

impl Default for CheckOpts {
    fn default() -> Self {
        CheckOpts { hom_cap: 70_000.0 }
    }
}

struct Evaluator<'a, H: DiagHost> {
    host: &'a H,
    env: &'a [H::O],
    menv: &'a [H::M],
}

impl<'a, H: DiagHost> Evaluator<'a, H> {
    fn obj(&self, e: &OExpr) -> Result<H::O, String> {
        self.host.op_obj(e, self.env)
    }

    fn mor(&self, e: &MExpr) -> Result<H::M, String> {
        match e {
            MExpr::Id(o) => Ok(self.host.id(&self.obj(o)?)),
            MExpr::MVar(i) => self
                .menv
                .get(*i as usize)
                .cloned()
                .ok_or_else(|| format!("unbound morphism variable #{i}")),
            MExpr::Gen(name, objs) => {
                let objs = objs
                    .iter()
                    .map(|o| self.obj(o))
                    .collect::<Result<Vec<_>, _>>()?;
                self.host.op_gen(name, &objs)
            }
            MExpr::Comp(steps) => {
                if steps.is_empty() {
                    return Err("empty path".to_string());
                }
                let mut acc = self.mor(&steps[0])?;
                for step in &steps[1..] {
                    let next = self.mor(step)?;
                    if self.host.cod(&acc) != self.host.dom(&next) {
                        return Err(format!(
                            "ill-typed path: cod {} ≠ dom {}",
                            self.host.obj_label(&self.host.cod(&acc)),
                            self.host.obj_label(&self.host.dom(&next))
                        ));
                    }
                    acc = self.host.comp(&next, &acc);
                }
                Ok(acc)
            }
            MExpr::Tensor(f, g) => {
                let f = self.mor(f)?;
                let g = self.mor(g)?;
                self.host.op_tensor_m(&f, &g)
            }
            MExpr::Pair(f, g) => {
                let f = self.mor(f)?;
                let g = self.mor(g)?;
                self.host.op_pair_m(&f, &g)
            }
            MExpr::BangM(f) => {
                let f = self.mor(f)?;
                self.host.op_bang_m(&f)
            }
            MExpr::Plus(f, g) => {
                let f = self.mor(f)?;
                let g = self.mor(g)?;
                self.host.op_plus_m(&f, &g)
            }
            MExpr::Cur(z, a, b, f) => {
                let z = self.obj(z)?;
                let a = self.obj(a)?;
                let b = self.obj(b)?;
                let f = self.mor(f)?;
                self.host.op_cur(&z, &a, &b, &f)
            }
        }
    }
}

/// Check one diagram over every object instantiation from `grid` (ordered so
/// the smallest counterexample is reported first).
pub fn check_diagram<H: DiagHost>(
    host: &H,
    d: &DiagramSpec,
    grid: &[H::O],
    opts: CheckOpts,
) -> DiagramResult {
    let mut assignments: Vec<Vec<H::O>> = vec![vec![]];
    for _ in 0..d.ovars {
        let mut next = Vec::new();
        for a in &assignments {
            for o in grid {
                let mut a2 = a.clone();
                a2.push(o.clone());
                next.push(a2);
            }
        }
        assignments = next;
    }
    assignments.sort_by_key(|a| a.iter().map(|o| host.obj_weight(o)).sum::<usize>());

    let mut instances = 0;
    let mut quantifier: Option<String> = None;
    for env in &assignments {
        // resolve morphism variable carriers
        let mut mvar_choices: Vec<Vec<H::M>> = Vec::new();
        let mut skip = false;
        for (de, ce) in &d.mvars {
            let ev = Evaluator {
                host,
                env,
                menv: &[],
            };
            let (dom, cod) = match (ev.obj(de), ev.obj(ce)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    return DiagramResult {
                        name: d.name.clone(),
                        status: Status::Error,
                        counterexample: Some(e),
                        quantifier: None,
                        instances,
                    }
                }
            };
            let exhaustive = d.mvar_mode == MVarMode::Exhaustive
                && host.hom_size(&dom, &cod).is_some_and(|s| s <= opts.hom_cap);
            let mors = if exhaustive {
                quantifier.get_or_insert_with(|| "exhaustive".to_string());
                host.hom(&dom, &cod)
            } else {
                quantifier = Some("basis".to_string());
                host.hom_basis(&dom, &cod)
            };
            if mors.is_empty() {
                skip = true;
                break;
            }
            mvar_choices.push(mors);
        }
        if skip {
            continue;
        }
        let mut menvs: Vec<Vec<H::M>> = vec![vec![]];
        for choices in &mvar_choices {
            let mut next = Vec::new();
            for m in &menvs {
                for c in choices {
                    let mut m2 = m.clone();
                    m2.push(c.clone());
                    next.push(m2);
                }
            }
            menvs = next;
        }
        for menv in &menvs {
            instances += 1;
            let ev = Evaluator { host, env, menv };
            let lhs = ev.mor(&d.lhs);
            let rhs = ev.mor(&d.rhs);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    let typed = host.dom(&l) == host.dom(&r) && host.cod(&l) == host.cod(&r);
                    if !typed || l != r {
                        let mut ce = String::new();
                        let objs: Vec<String> = env.iter().map(|o| host.obj_label(o)).collect();
                        let _ = write!(ce, "objects [{}]", objs.join(", "));
                        for (i, m) in menv.iter().enumerate() {
                            let _ = write!(ce, ", f{}={}", i, host.mor_label(m));
                        }
                        if typed {
                            let _ = write!(
                                ce,
                                ": lhs {} ≠ rhs {}",
                                host.mor_label(&l),
                                host.mor_label(&r)
                            );
                        } else {
                            let _ = write!(ce, ": path endpoints disagree");
                        }
                        return DiagramResult {
                            name: d.name.clone(),
                            status: Status::Fail,
                            counterexample: Some(ce),
                            quantifier,
                            instances,
                        };
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    return DiagramResult {
                        name: d.name.clone(),
                        status: Status::Error,
                        counterexample: Some(e),
                        quantifier,
                        instances,
                    }
                }
            }
        }
    }
    DiagramResult {
        name: d.name.clone(),
        status: Status::Pass,
        counterexample: None,
        quantifier,
        instances,
    }
}

// ---------------------------------------------------------------------------
// Text format (same s-expression dialect as proof files).

fn oexpr_of_sexp(s: &Sexp, ovars: &[String]) -> Result<OExpr, String> {
    match s {
        Sexp::Atom(name, ..) => ovars
            .iter()
            .position(|v| v == name)
            .map(|i| OExpr::Var(i as u8))
            .ok_or_else(|| format!("unbound object name '{name}'")),
        Sexp::List(items, ..) => {
            let head = match items.first() {
                Some(Sexp::Atom(h, ..)) => h.as_str(),
                _ => return Err("expected object expression".to_string()),
            };
            let sub = |i: usize| oexpr_of_sexp(&items[i], ovars);
            match (head, items.len()) {
                ("one", 1) => Ok(OExpr::One),
                ("top", 1) => Ok(OExpr::Top),
                ("tensor", 3) => Ok(OExpr::tensor(sub(1)?, sub(2)?)),
                ("with", 3) => Ok(OExpr::with_(sub(1)?, sub(2)?)),
                ("lolli", 3) => Ok(OExpr::Lolli(Box::new(sub(1)?), Box::new(sub(2)?))),
                ("bang", 2) => Ok(OExpr::bang(sub(1)?)),
                _ => Err(format!("bad object expression head '{head}'")),
            }
        }
        Sexp::Key(k, ..) => Err(format!("unexpected keyword :{k} in object expression")),
    }
}

fn mexpr_of_sexp(s: &Sexp, ovars: &[String], mvars: &[String]) -> Result<MExpr, String> {
    match s {
        Sexp::Atom(name, ..) => mvars
            .iter()
            .position(|v| v == name)
            .map(|i| MExpr::MVar(i as u8))
            .ok_or_else(|| format!("unbound morphism name '{name}'")),
        Sexp::List(items, ..) => {
            let head = match items.first() {
                Some(Sexp::Atom(h, ..)) => h.as_str(),
                _ => return Err("expected morphism expression".to_string()),
            };
            let o = |i: usize| oexpr_of_sexp(&items[i], ovars);
            let m = |i: usize| mexpr_of_sexp(&items[i], ovars, mvars);
            match head {
                "id" if items.len() == 2 => Ok(MExpr::Id(o(1)?)),
                "gen" if items.len() >= 2 => {
                    let Sexp::Atom(gname, ..) = &items[1] else {
                        return Err("gen needs a generator name".to_string());
                    };
                    let objs = items[2..]
                        .iter()
                        .map(|x| oexpr_of_sexp(x, ovars))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(MExpr::Gen(gname.clone(), objs))
                }
                "comp" if items.len() >= 2 => {
                    let steps = (1..items.len()).map(m).collect::<Result<Vec<_>, _>>()?;
                    Ok(MExpr::Comp(steps))
                }
                "ten" if items.len() == 3 => Ok(MExpr::Tensor(Box::new(m(1)?), Box::new(m(2)?))),
                "pair" if items.len() == 3 => Ok(MExpr::Pair(Box::new(m(1)?), Box::new(m(2)?))),
                "bangm" if items.len() == 2 => Ok(MExpr::BangM(Box::new(m(1)?))),
                "plus" if items.len() == 3 => Ok(MExpr::Plus(Box::new(m(1)?), Box::new(m(2)?))),
                "cur" if items.len() == 5 => Ok(MExpr::Cur(o(1)?, o(2)?, o(3)?, Box::new(m(4)?))),
                _ => Err(format!("bad morphism expression head '{head}'")),
            }
        }
        Sexp::Key(k, ..) => Err(format!("unexpected keyword :{k} in morphism expression")),
    }
}

/// Parse `(diagram name (objects A B …) [(mvars (f dom cod) …)] (eq lhs rhs))`.
pub fn parse_diagram(src: &str) -> Result<DiagramSpec, String> {
    let sexps = read_sexps(src).map_err(|e| e.to_string())?;
    let [Sexp::List(items, ..)] = &sexps[..] else {
        return Err("expected a single (diagram …) form".to_string());
    };
    match items.first() {
        Some(Sexp::Atom(h, ..)) if h == "diagram" => {}
        _ => return Err("expected (diagram …)".to_string()),
    }
    let Some(Sexp::Atom(name, ..)) = items.get(1) else {
        return Err("diagram needs a name".to_string());
    };
    let mut ovars: Vec<String> = Vec::new();
    let mut mvar_names: Vec<String> = Vec::new();
    let mut mvars = Vec::new();
    let mut eq = None;
    for item in &items[2..] {
        let Sexp::List(sub, ..) = item else {
            return Err("expected a (objects …)/(mvars …)/(eq …) clause".to_string());
        };
        match sub.first() {
            Some(Sexp::Atom(h, ..)) if h == "objects" => {
                for v in &sub[1..] {
                    match v {
                        Sexp::Atom(n, ..) => ovars.push(n.clone()),
                        _ => return Err("object names must be atoms".to_string()),
                    }
                }
            }
            Some(Sexp::Atom(h, ..)) if h == "mvars" => {
                for v in &sub[1..] {
                    let Sexp::List(mv, ..) = v else {
                        return Err("mvar clause must be (name dom cod)".to_string());
                    };
                    let [Sexp::Atom(n, ..), d, c] = &mv[..] else {
                        return Err("mvar clause must be (name dom cod)".to_string());
                    };
                    mvar_names.push(n.clone());
                    mvars.push((oexpr_of_sexp(d, &ovars)?, oexpr_of_sexp(c, &ovars)?));
                }
            }
            Some(Sexp::Atom(h, ..)) if h == "eq" => {
                if sub.len() != 3 {
                    return Err("(eq lhs rhs) takes two paths".to_string());
                }
                let lhs = mexpr_of_sexp(&sub[1], &ovars, &mvar_names)?;
                let rhs = mexpr_of_sexp(&sub[2], &ovars, &mvar_names)?;
                eq = Some((lhs, rhs));
            }
            _ => return Err("unknown diagram clause".to_string()),
        }
    }
    let (lhs, rhs) = eq.ok_or("diagram needs an (eq …) clause")?;
    Ok(DiagramSpec {
        name: name.clone(),
        ovars: ovars.len(),
        mvars,
        mvar_mode: MVarMode::Exhaustive,
        lhs,
        rhs,
    })
}
