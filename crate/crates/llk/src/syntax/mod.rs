//! Syntax of the four sequent calculi (LJ, iMALL, ILL, DiLL): formulas,
//! sequents, proof trees, and the per-system rule tables.

pub mod enumerate;
pub mod parse;
pub mod print;
pub mod validate;

use std::fmt;

/// A formula. Which connectives are admissible depends on the logic system;
/// that check happens at validation time, not here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Formula {
    Var(String),
    /// ⊤, the additive truth (unit of ∧ and &).
    Top,
    /// 1, the multiplicative unit.
    One,
    /// A ∧ B (intuitionistic conjunction).
    And(Box<Formula>, Box<Formula>),
    /// A & B (additive conjunction, "with").
    With(Box<Formula>, Box<Formula>),
    /// A ⊗ B (multiplicative conjunction).
    Tensor(Box<Formula>, Box<Formula>),
    /// A ⊃ B (intuitionistic implication).
    Impl(Box<Formula>, Box<Formula>),
    /// A ⊸ B (linear implication).
    Lolli(Box<Formula>, Box<Formula>),
    /// !A (the exponential).
    Bang(Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }
    pub fn with(a: Formula, b: Formula) -> Formula {
        Formula::With(Box::new(a), Box::new(b))
    }
    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::Tensor(Box::new(a), Box::new(b))
    }
    pub fn impl_(a: Formula, b: Formula) -> Formula {
        Formula::Impl(Box::new(a), Box::new(b))
    }
    pub fn lolli(a: Formula, b: Formula) -> Formula {
        Formula::Lolli(Box::new(a), Box::new(b))
    }
    pub fn bang(a: Formula) -> Formula {
        Formula::Bang(Box::new(a))
    }

    pub fn is_bang(&self) -> bool {
        matches!(self, Formula::Bang(_))
    }

    /// Free propositional variables, in first-occurrence order.
    pub fn vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Var(v) => {
                if !out.iter().any(|w| w == v) {
                    out.push(v.clone());
                }
            }
            Formula::Top | Formula::One => {}
            Formula::And(a, b)
            | Formula::With(a, b)
            | Formula::Tensor(a, b)
            | Formula::Impl(a, b)
            | Formula::Lolli(a, b) => {
                a.vars(out);
                b.vars(out);
            }
            Formula::Bang(a) => a.vars(out),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Top => write!(f, "⊤"),
            Formula::One => write!(f, "1"),
            Formula::And(a, b) => write!(f, "({a} ∧ {b})"),
            Formula::With(a, b) => write!(f, "({a} & {b})"),
            Formula::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
            Formula::Impl(a, b) => write!(f, "({a} ⊃ {b})"),
            Formula::Lolli(a, b) => write!(f, "({a} ⊸ {b})"),
            Formula::Bang(a) => write!(f, "!{a}"),
        }
    }
}

/// A sequent Γ ⊢ B. The context is an ordered list; exchange is an explicit
/// rule, so order matters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sequent {
    pub context: Vec<Formula>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(context: Vec<Formula>, conclusion: Formula) -> Sequent {
        Sequent {
            context,
            conclusion,
        }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.context.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        if self.context.is_empty() {
            write!(f, "⊢ {}", self.conclusion)
        } else {
            write!(f, " ⊢ {}", self.conclusion)
        }
    }
}

/// One tag per inference rule across all four systems.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RuleTag {
    Ax,
    Cut,
    Weak,
    Contr,
    Ex,
    AndLeft1,
    AndLeft2,
    AndRight,
    TopRight,
    ImplLeft,
    ImplRight,
    WithLeft1,
    WithLeft2,
    WithRight,
    LolliLeft,
    LolliRight,
    TensorLeft,
    TensorRight,
    OneLeft,
    OneRight,
    Der,
    Prom,
    BangWeak,
    BangContr,
    CoWeak,
    CoContr,
    CoDer,
    Zero,
    Sum,
}

impl RuleTag {
    /// Number of premises the rule takes.
    pub fn arity(self) -> usize {
        use RuleTag::*;
        match self {
            Ax | TopRight | OneRight | CoWeak | Zero => 0,
            Weak | Contr | Ex | AndLeft1 | AndLeft2 | ImplRight | WithLeft1 | WithLeft2
            | LolliRight | TensorLeft | OneLeft | Der | Prom | BangWeak | BangContr | CoDer => 1,
            Cut | AndRight | ImplLeft | WithRight | LolliLeft | TensorRight | CoContr | Sum => 2,
        }
    }

    /// Rules whose premise contexts are obtained by splitting the conclusion
    /// context; the proof file records the split point explicitly.
    pub fn takes_split(self) -> bool {
        use RuleTag::*;
        matches!(self, Cut | ImplLeft | LolliLeft | TensorRight | CoContr)
    }

    /// The exchange rule carries the position of the swapped pair.
    pub fn takes_pos(self) -> bool {
        self == RuleTag::Ex
    }

    pub fn name(self) -> &'static str {
        use RuleTag::*;
        match self {
            Ax => "ax",
            Cut => "cut",
            Weak => "weak",
            Contr => "contr",
            Ex => "ex",
            AndLeft1 => "and-left-1",
            AndLeft2 => "and-left-2",
            AndRight => "and-right",
            TopRight => "top-right",
            ImplLeft => "impl-left",
            ImplRight => "impl-right",
            WithLeft1 => "with-left-1",
            WithLeft2 => "with-left-2",
            WithRight => "with-right",
            LolliLeft => "lolli-left",
            LolliRight => "lolli-right",
            TensorLeft => "tensor-left",
            TensorRight => "tensor-right",
            OneLeft => "one-left",
            OneRight => "one-right",
            Der => "der",
            Prom => "prom",
            BangWeak => "bang-weak",
            BangContr => "bang-contr",
            CoWeak => "co-weak",
            CoContr => "co-contr",
            CoDer => "co-der",
            Zero => "zero",
            Sum => "sum",
        }
    }

    pub fn from_name(s: &str) -> Option<RuleTag> {
        use RuleTag::*;
        Some(match s {
            "ax" => Ax,
            "cut" => Cut,
            "weak" => Weak,
            "contr" => Contr,
            "ex" => Ex,
            "and-left-1" => AndLeft1,
            "and-left-2" => AndLeft2,
            "and-right" => AndRight,
            "top-right" => TopRight,
            "impl-left" => ImplLeft,
            "impl-right" => ImplRight,
            "with-left-1" => WithLeft1,
            "with-left-2" => WithLeft2,
            "with-right" => WithRight,
            "lolli-left" => LolliLeft,
            "lolli-right" => LolliRight,
            "tensor-left" => TensorLeft,
            "tensor-right" => TensorRight,
            "one-left" => OneLeft,
            "one-right" => OneRight,
            "der" => Der,
            "prom" => Prom,
            "bang-weak" => BangWeak,
            "bang-contr" => BangContr,
            "co-weak" => CoWeak,
            "co-contr" => CoContr,
            "co-der" => CoDer,
            "zero" => Zero,
            "sum" => Sum,
            _ => return None,
        })
    }
}

/// Auxiliary data carried by some rules.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Aux {
    /// For multiplicative rules: |Γ1|, the length of the first context part.
    pub split: Option<usize>,
    /// For exchange: index of the left formula of the swapped pair.
    pub pos: Option<usize>,
}

impl Aux {
    pub fn none() -> Aux {
        Aux::default()
    }
    pub fn split(k: usize) -> Aux {
        Aux {
            split: Some(k),
            pos: None,
        }
    }
    pub fn pos(k: usize) -> Aux {
        Aux {
            split: None,
            pos: Some(k),
        }
    }
}

/// A proof tree: each node is a rule instance whose conclusion is the node's
/// sequent and whose premises are the conclusions of its children.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProofTree {
    pub rule: RuleTag,
    pub conclusion: Sequent,
    pub premises: Vec<ProofTree>,
    pub aux: Aux,
}

impl ProofTree {
    pub fn new(rule: RuleTag, conclusion: Sequent, premises: Vec<ProofTree>, aux: Aux) -> ProofTree {
        ProofTree {
            rule,
            conclusion,
            premises,
            aux,
        }
    }

    pub fn leaf(rule: RuleTag, conclusion: Sequent) -> ProofTree {
        ProofTree::new(rule, conclusion, vec![], Aux::none())
    }

    /// Total number of nodes.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(|p| p.size()).sum::<usize>()
    }

    /// Number of cut nodes.
    pub fn cut_count(&self) -> usize {
        let here = usize::from(self.rule == RuleTag::Cut);
        here + self.premises.iter().map(|p| p.cut_count()).sum::<usize>()
    }

    pub fn is_cut_free(&self) -> bool {
        self.cut_count() == 0
    }

    /// Node at a path of child indices, if any.
    pub fn at_path(&self, path: &[usize]) -> Option<&ProofTree> {
        let mut node = self;
        for &i in path {
            node = node.premises.get(i)?;
        }
        Some(node)
    }

    /// Replace the node at `path` with `repl`, returning the new tree.
    pub fn replace_at(&self, path: &[usize], repl: ProofTree) -> ProofTree {
        match path.split_first() {
            None => repl,
            Some((&i, rest)) => {
                let mut node = self.clone();
                node.premises[i] = node.premises[i].replace_at(rest, repl);
                node
            }
        }
    }

    /// All free propositional variables in the end-sequent and subproofs.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            for f in node
                .conclusion
                .context
                .iter()
                .chain(std::iter::once(&node.conclusion.conclusion))
            {
                f.vars(&mut out);
            }
            stack.extend(node.premises.iter());
        }
        out.sort();
        out.dedup();
        out
    }
}

/// The four proof systems. Each enables a rule subset and a connective subset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LogicSystem {
    Lj,
    Imall,
    Ill,
    Dill,
}

impl LogicSystem {
    pub fn name(self) -> &'static str {
        match self {
            LogicSystem::Lj => "lj",
            LogicSystem::Imall => "imall",
            LogicSystem::Ill => "ill",
            LogicSystem::Dill => "dill",
        }
    }

    pub fn from_name(s: &str) -> Option<LogicSystem> {
        Some(match s {
            "lj" => LogicSystem::Lj,
            "imall" => LogicSystem::Imall,
            "ill" => LogicSystem::Ill,
            "dill" => LogicSystem::Dill,
            _ => return None,
        })
    }

    pub fn allows_rule(self, r: RuleTag) -> bool {
        use LogicSystem::*;
        use RuleTag::*;
        let lj = matches!(
            r,
            Ax | Cut
                | Weak
                | Contr
                | Ex
                | AndLeft1
                | AndLeft2
                | AndRight
                | TopRight
                | ImplLeft
                | ImplRight
        );
        let imall = matches!(
            r,
            Ax | Cut
                | Ex
                | WithLeft1
                | WithLeft2
                | WithRight
                | TopRight
                | LolliLeft
                | LolliRight
                | TensorLeft
                | TensorRight
                | OneLeft
                | OneRight
        );
        let ill = imall || matches!(r, Der | Prom | BangWeak | BangContr);
        let dill = ill || matches!(r, CoWeak | CoContr | CoDer | Zero | Sum);
        match self {
            Lj => lj,
            Imall => imall,
            Ill => ill,
            Dill => dill,
        }
    }

    pub fn allows_formula(self, f: &Formula) -> bool {
        use LogicSystem::*;
        let ok = match f {
            Formula::Var(_) | Formula::Top => true,
            Formula::And(..) | Formula::Impl(..) => self == Lj,
            Formula::One | Formula::With(..) | Formula::Tensor(..) | Formula::Lolli(..) => {
                self != Lj
            }
            Formula::Bang(_) => matches!(self, Ill | Dill),
        };
        if !ok {
            return false;
        }
        match f {
            Formula::And(a, b)
            | Formula::With(a, b)
            | Formula::Tensor(a, b)
            | Formula::Impl(a, b)
            | Formula::Lolli(a, b) => self.allows_formula(a) && self.allows_formula(b),
            Formula::Bang(a) => self.allows_formula(a),
            _ => true,
        }
    }

    /// Whether the cut/⊃-left style rules place the distinguished formula at
    /// the front (LJ) or at the back (linear systems) of the second premise.
    pub fn cut_formula_at_front(self) -> bool {
        self == LogicSystem::Lj
    }
}
