//! Proof validation against the per-system rule tables.
//!
//! Every structural step is an explicit node; nothing is implicit. The
//! distinguished formula of `cut` and of the implication left rules sits at
//! the *front* of the second premise in LJ and at the *back* in the linear
//! systems, exactly as the rules are printed:
//!
//!   LJ:      Γ1 ⊢ B    B, Γ2 ⊢ C          linear:  Γ1 ⊢ B    Γ2, B ⊢ C
//!           --------------------- (cut)           --------------------- (cut)
//!                Γ1, Γ2 ⊢ C                            Γ1, Γ2 ⊢ C

use super::{Formula, LogicSystem, ProofTree, RuleTag, Sequent};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    /// Path of child indices from the root to the offending node.
    pub path: Vec<usize>,
    pub rule: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid")
        } else {
            for v in &self.violations {
                writeln!(f, "at {:?} ({}): {}", v.path, v.rule, v.message)?;
            }
            Ok(())
        }
    }
}

struct Checker {
    sys: LogicSystem,
    violations: Vec<Violation>,
}

impl Checker {
    fn fail(&mut self, path: &[usize], rule: RuleTag, msg: String) {
        self.violations.push(Violation {
            path: path.to_vec(),
            rule: rule.name().to_string(),
            message: msg,
        });
    }

    fn check_formulas(&mut self, path: &[usize], node: &ProofTree) {
        let all = node
            .conclusion
            .context
            .iter()
            .chain(std::iter::once(&node.conclusion.conclusion));
        for f in all {
            if !self.sys.allows_formula(f) {
                self.fail(
                    path,
                    node.rule,
                    format!("formula {f} uses a connective outside {}", self.sys.name()),
                );
                break;
            }
        }
    }

    fn node(&mut self, path: &mut Vec<usize>, node: &ProofTree) {
        self.check_formulas(path, node);
        if node.premises.len() != node.rule.arity() {
            self.fail(
                path,
                node.rule,
                format!(
                    "rule takes {} premises, found {}",
                    node.rule.arity(),
                    node.premises.len()
                ),
            );
            return;
        }
        if !self.sys.allows_rule(node.rule) {
            let msg = match (self.sys, node.rule) {
                (LogicSystem::Ill | LogicSystem::Dill | LogicSystem::Imall, RuleTag::Contr) => {
                    "contraction restricted to !A (use bang-contr)".to_string()
                }
                (LogicSystem::Ill | LogicSystem::Dill | LogicSystem::Imall, RuleTag::Weak) => {
                    "weakening restricted to !A (use bang-weak)".to_string()
                }
                _ => format!("rule not available in {}", self.sys.name()),
            };
            self.fail(path, node.rule, msg);
        } else {
            self.instance(path, node);
        }
        for (i, prem) in node.premises.iter().enumerate() {
            path.push(i);
            self.node(path, prem);
            path.pop();
        }
    }

    /// Split the conclusion context at the recorded :split point.
    fn split<'a>(
        &mut self,
        path: &[usize],
        node: &'a ProofTree,
    ) -> Option<(&'a [Formula], &'a [Formula], usize)> {
        let ctx = &node.conclusion.context;
        let Some(k) = node.aux.split else {
            self.fail(path, node.rule, "missing :split annotation".to_string());
            return None;
        };
        if k > ctx.len() {
            self.fail(
                path,
                node.rule,
                format!(":split {k} exceeds context length {}", ctx.len()),
            );
            return None;
        }
        Some((&ctx[..k], &ctx[k..], k))
    }

    fn expect_premise(&mut self, path: &[usize], node: &ProofTree, i: usize, want: Sequent) {
        let got = &node.premises[i].conclusion;
        if *got != want {
            self.fail(
                path,
                node.rule,
                format!("premise {} should be `{}`, found `{}`", i, want, got),
            );
        }
    }

    #[allow(clippy::too_many_lines)]
    fn instance(&mut self, path: &[usize], node: &ProofTree) {
        use RuleTag::*;
        let seq = &node.conclusion;
        let ctx = &seq.context;
        let concl = &seq.conclusion;
        let front = self.sys.cut_formula_at_front();
        match node.rule {
            //  ----- (ax)
            //  A ⊢ A
            Ax => {
                if ctx.len() != 1 || ctx[0] != *concl {
                    self.fail(path, Ax, format!("axiom must be A ⊢ A, found `{seq}`"));
                }
            }
            Cut => {
                let Some((g1, g2, _)) = self.split(path, node) else {
                    return;
                };
                let b = node.premises[0].conclusion.conclusion.clone();
                self.expect_premise(path, node, 0, Sequent::new(g1.to_vec(), b.clone()));
                let ctx2 = if front {
                    let mut v = vec![b];
                    v.extend(g2.iter().cloned());
                    v
                } else {
                    let mut v = g2.to_vec();
                    v.push(b);
                    v
                };
                self.expect_premise(path, node, 1, Sequent::new(ctx2, concl.clone()));
            }
            //  Γ ⊢ B
            //  ---------- (weak)
            //  Γ, A ⊢ B
            Weak => {
                if ctx.is_empty() {
                    self.fail(path, Weak, "weakening needs a nonempty context".into());
                    return;
                }
                let g = &ctx[..ctx.len() - 1];
                self.expect_premise(path, node, 0, Sequent::new(g.to_vec(), concl.clone()));
            }
            //  Γ, A, A ⊢ B
            //  ------------ (contr)
            //  Γ, A ⊢ B
            Contr => {
                let Some(a) = ctx.last() else {
                    self.fail(path, Contr, "contraction needs a nonempty context".into());
                    return;
                };
                let mut want = ctx.clone();
                want.push(a.clone());
                self.expect_premise(path, node, 0, Sequent::new(want, concl.clone()));
            }
            //  Γ1, A1, A2, Γ2 ⊢ B
            //  ------------------- (ex at :pos |Γ1|)
            //  Γ1, A2, A1, Γ2 ⊢ B
            Ex => {
                let Some(k) = node.aux.pos else {
                    self.fail(path, Ex, "missing :pos annotation".into());
                    return;
                };
                if k + 1 >= ctx.len() + 1 && ctx.len() < 2 || k + 1 >= ctx.len() {
                    self.fail(
                        path,
                        Ex,
                        format!(":pos {k} does not address an adjacent pair in `{seq}`"),
                    );
                    return;
                }
                let mut want = ctx.clone();
                want.swap(k, k + 1);
                self.expect_premise(path, node, 0, Sequent::new(want, concl.clone()));
            }
            AndLeft1 | AndLeft2 | WithLeft1 | WithLeft2 => {
                let additive = matches!(node.rule, AndLeft1 | AndLeft2);
                let pick_first = matches!(node.rule, AndLeft1 | WithLeft1);
                let Some(last) = ctx.last() else {
                    self.fail(path, node.rule, "left rule needs a context formula".into());
                    return;
                };
                let parts = match (last, additive) {
                    (Formula::And(a, b), true) => Some((a, b)),
                    (Formula::With(a, b), false) => Some((a, b)),
                    _ => None,
                };
                let Some((a1, a2)) = parts else {
                    self.fail(
                        path,
                        node.rule,
                        format!(
                            "last context formula must be a {} conjunction, found `{last}`",
                            if additive { "∧" } else { "&" }
                        ),
                    );
                    return;
                };
                let picked = if pick_first { a1 } else { a2 };
                let mut want = ctx[..ctx.len() - 1].to_vec();
                want.push((**picked).clone());
                self.expect_premise(path, node, 0, Sequent::new(want, concl.clone()));
            }
            //  Γ ⊢ B1   Γ ⊢ B2
            //  ----------------- (∧/&-right, shared context)
            //  Γ ⊢ B1 ∧ B2
            AndRight | WithRight => {
                let parts = match (concl, node.rule) {
                    (Formula::And(a, b), AndRight) => Some((a, b)),
                    (Formula::With(a, b), WithRight) => Some((a, b)),
                    _ => None,
                };
                let Some((b1, b2)) = parts else {
                    self.fail(
                        path,
                        node.rule,
                        format!("conclusion must match the rule connective, found `{concl}`"),
                    );
                    return;
                };
                self.expect_premise(path, node, 0, Sequent::new(ctx.clone(), (**b1).clone()));
                self.expect_premise(path, node, 1, Sequent::new(ctx.clone(), (**b2).clone()));
            }
            TopRight => {
                if *concl != Formula::Top {
                    self.fail(path, TopRight, format!("conclusion must be ⊤, found `{concl}`"));
                }
            }
            //  Γ1 ⊢ A    B, Γ2 ⊢ C
            //  --------------------- (⊃-left; A ⊃ B heads the context)
            //  A ⊃ B, Γ1, Γ2 ⊢ C
            ImplLeft => {
                let Some(Formula::Impl(a, b)) = ctx.first() else {
                    self.fail(
                        path,
                        ImplLeft,
                        "first context formula must be an implication".into(),
                    );
                    return;
                };
                let rest = &ctx[1..];
                let Some(k) = node.aux.split else {
                    self.fail(path, ImplLeft, "missing :split annotation".into());
                    return;
                };
                if k > rest.len() {
                    self.fail(path, ImplLeft, format!(":split {k} exceeds context"));
                    return;
                }
                let (g1, g2) = rest.split_at(k);
                self.expect_premise(path, node, 0, Sequent::new(g1.to_vec(), (**a).clone()));
                let mut ctx2 = vec![(**b).clone()];
                ctx2.extend(g2.iter().cloned());
                self.expect_premise(path, node, 1, Sequent::new(ctx2, concl.clone()));
            }
            //  Γ, A ⊢ B
            //  ------------ (⊃/⊸-right)
            //  Γ ⊢ A ⊃ B
            ImplRight | LolliRight => {
                let parts = match (concl, node.rule) {
                    (Formula::Impl(a, b), ImplRight) => Some((a, b)),
                    (Formula::Lolli(a, b), LolliRight) => Some((a, b)),
                    _ => None,
                };
                let Some((a, b)) = parts else {
                    self.fail(
                        path,
                        node.rule,
                        format!("conclusion must match the rule connective, found `{concl}`"),
                    );
                    return;
                };
                let mut want = ctx.clone();
                want.push((**a).clone());
                self.expect_premise(path, node, 0, Sequent::new(want, (**b).clone()));
            }
            //  Γ1 ⊢ A    Γ2, B ⊢ C
            //  ---------------------- (⊸-left; A ⊸ B closes the context)
            //  Γ1, Γ2, A ⊸ B ⊢ C
            LolliLeft => {
                let Some(Formula::Lolli(a, b)) = ctx.last() else {
                    self.fail(
                        path,
                        LolliLeft,
                        "last context formula must be a linear implication".into(),
                    );
                    return;
                };
                let rest = &ctx[..ctx.len() - 1];
                let Some(k) = node.aux.split else {
                    self.fail(path, LolliLeft, "missing :split annotation".into());
                    return;
                };
                if k > rest.len() {
                    self.fail(path, LolliLeft, format!(":split {k} exceeds context"));
                    return;
                }
                let (g1, g2) = rest.split_at(k);
                self.expect_premise(path, node, 0, Sequent::new(g1.to_vec(), (**a).clone()));
                let mut ctx2 = g2.to_vec();
                ctx2.push((**b).clone());
                self.expect_premise(path, node, 1, Sequent::new(ctx2, concl.clone()));
            }
            //  Γ, A1, A2 ⊢ B
            //  ----------------- (⊗-left)
            //  Γ, A1 ⊗ A2 ⊢ B
            TensorLeft => {
                let Some(Formula::Tensor(a1, a2)) = ctx.last() else {
                    self.fail(path, TensorLeft, "last context formula must be a tensor".into());
                    return;
                };
                let mut want = ctx[..ctx.len() - 1].to_vec();
                want.push((**a1).clone());
                want.push((**a2).clone());
                self.expect_premise(path, node, 0, Sequent::new(want, concl.clone()));
            }
            //  Γ1 ⊢ B1   Γ2 ⊢ B2
            //  ------------------- (⊗-right)
            //  Γ1, Γ2 ⊢ B1 ⊗ B2
            TensorRight => {
                let Formula::Tensor(b1, b2) = concl else {
                    self.fail(path, TensorRight, format!("conclusion must be a tensor, found `{concl}`"));
                    return;
                };
                let Some((g1, g2, _)) = self.split(path, node) else {
                    return;
                };
                self.expect_premise(path, node, 0, Sequent::new(g1.to_vec(), (**b1).clone()));
                self.expect_premise(path, node, 1, Sequent::new(g2.to_vec(), (**b2).clone()));
            }
            //  Γ ⊢ B
            //  ----------- (1-left)
            //  Γ, 1 ⊢ B
            OneLeft => {
                if ctx.last() != Some(&Formula::One) {
                    self.fail(path, OneLeft, "last context formula must be 1".into());
                    return;
                }
                self.expect_premise(
                    path,
                    node,
                    0,
                    Sequent::new(ctx[..ctx.len() - 1].to_vec(), concl.clone()),
                );
            }
            //  ------ (1-right)
            //   ⊢ 1
            OneRight => {
                if !ctx.is_empty() || *concl != Formula::One {
                    self.fail(path, OneRight, format!("must be ⊢ 1, found `{seq}`"));
                }
            }
            //  Γ, A ⊢ B
            //  ------------ (der)
            //  Γ, !A ⊢ B
            Der => {
                let Some(Formula::Bang(a)) = ctx.last() else {
                    self.fail(path, Der, "last context formula must be !A".into());
                    return;
                };
                let mut want = ctx[..ctx.len() - 1].to_vec();
                want.push((**a).clone());
                self.expect_premise(path, node, 0, Sequent::new(want, concl.clone()));
            }
            //  !A1, …, !An ⊢ B
            //  ----------------- (prom)
            //  !A1, …, !An ⊢ !B
            Prom => {
                let Formula::Bang(b) = concl else {
                    self.fail(path, Prom, format!("conclusion must be !B, found `{concl}`"));
                    return;
                };
                if let Some(bad) = ctx.iter().find(|f| !f.is_bang()) {
                    self.fail(
                        path,
                        Prom,
                        format!("promotion requires every context formula !-prefixed, found `{bad}`"),
                    );
                    return;
                }
                self.expect_premise(path, node, 0, Sequent::new(ctx.clone(), (**b).clone()));
            }
            //  Γ ⊢ B
            //  ------------ (bang-weak)
            //  Γ, !A ⊢ B
            BangWeak => {
                if !matches!(ctx.last(), Some(Formula::Bang(_))) {
                    self.fail(path, BangWeak, "weakening restricted to !A".into());
                    return;
                }
                self.expect_premise(
                    path,
                    node,
                    0,
                    Sequent::new(ctx[..ctx.len() - 1].to_vec(), concl.clone()),
                );
            }
            //  Γ, !A, !A ⊢ B
            //  --------------- (bang-contr)
            //  Γ, !A ⊢ B
            BangContr => {
                let Some(a @ Formula::Bang(_)) = ctx.last() else {
                    self.fail(path, BangContr, "contraction restricted to !A".into());
                    return;
                };
                let mut want = ctx.clone();
                want.push(a.clone());
                self.expect_premise(path, node, 0, Sequent::new(want, concl.clone()));
            }
            //  -------- (co-weak)
            //   ⊢ !A
            CoWeak => {
                if !ctx.is_empty() || !concl.is_bang() {
                    self.fail(path, CoWeak, format!("must be ⊢ !A, found `{seq}`"));
                }
            }
            //  Γ1 ⊢ !A   Γ2 ⊢ !A
            //  ------------------- (co-contr)
            //  Γ1, Γ2 ⊢ !A
            CoContr => {
                if !concl.is_bang() {
                    self.fail(path, CoContr, format!("conclusion must be !A, found `{concl}`"));
                    return;
                }
                let Some((g1, g2, _)) = self.split(path, node) else {
                    return;
                };
                self.expect_premise(path, node, 0, Sequent::new(g1.to_vec(), concl.clone()));
                self.expect_premise(path, node, 1, Sequent::new(g2.to_vec(), concl.clone()));
            }
            //  Γ ⊢ A
            //  --------- (co-der)
            //  Γ ⊢ !A
            CoDer => {
                let Formula::Bang(a) = concl else {
                    self.fail(path, CoDer, format!("conclusion must be !A, found `{concl}`"));
                    return;
                };
                self.expect_premise(path, node, 0, Sequent::new(ctx.clone(), (**a).clone()));
            }
            //  -------- (zero)
            //  Γ ⊢ B
            Zero => {}
            //  Γ ⊢ B   Γ ⊢ B
            //  --------------- (sum)
            //  Γ ⊢ B
            Sum => {
                self.expect_premise(path, node, 0, seq.clone());
                self.expect_premise(path, node, 1, seq.clone());
            }
        }
    }
}

/// Validate a proof against a logic system. Violations are data, not errors.
pub fn validate_proof(p: &ProofTree, sys: LogicSystem) -> ValidationReport {
    let mut checker = Checker {
        sys,
        violations: Vec::new(),
    };
    checker.node(&mut Vec::new(), p);
    ValidationReport {
        violations: checker.violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse::parse_proof;

    fn valid(src: &str, sys: LogicSystem) -> bool {
        validate_proof(&parse_proof(src).unwrap(), sys).is_valid()
    }

    #[test]
    fn axiom_valid_everywhere() {
        for sys in [
            LogicSystem::Lj,
            LogicSystem::Imall,
            LogicSystem::Ill,
            LogicSystem::Dill,
        ] {
            assert!(valid("(ax (seq (v A) (v A)))", sys));
        }
    }

    #[test]
    fn and_right_shares_context() {
        let src = "(and-right (seq (v A) (and (v A) (v A))) (ax (seq (v A) (v A))) (ax (seq (v A) (v A))))";
        assert!(valid(src, LogicSystem::Lj));
    }

    #[test]
    fn contr_restricted_in_ill() {
        let src = "(contr (seq (v A) (v A)) (weak (seq (v A) (v A) (v A)) (ax (seq (v A) (v A)))))";
        assert!(valid(src, LogicSystem::Lj));
        let report = validate_proof(&parse_proof(src).unwrap(), LogicSystem::Ill);
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.message.contains("contraction restricted to !A")));
    }

    #[test]
    fn lj_cut_formula_at_front() {
        // cut: A ⊢ A from A ⊢ A∧A and A∧A ⊢ A
        let src = "(cut (seq (v A) (v A)) :split 1 \
                   (and-right (seq (v A) (and (v A) (v A))) (ax (seq (v A) (v A))) (ax (seq (v A) (v A)))) \
                   (and-left-1 (seq (and (v A) (v A)) (v A)) (ax (seq (v A) (v A)))))";
        assert!(valid(src, LogicSystem::Lj));
    }

    #[test]
    fn linear_cut_formula_at_back() {
        let src = "(cut (seq (v A) (v B) (tensor (v A) (v B))) :split 2 \
                   (tensor-right (seq (v A) (v B) (tensor (v A) (v B))) :split 1 (ax (seq (v A) (v A))) (ax (seq (v B) (v B)))) \
                   (ax (seq (tensor (v A) (v B)) (tensor (v A) (v B)))))";
        // premise 2 has context Γ2,B = [], (A⊗B): ax
        assert!(valid(src, LogicSystem::Imall));
    }

    #[test]
    fn prom_requires_banged_context() {
        let good = "(prom (seq (bang (v A)) (bang (v A))) (der (seq (bang (v A)) (v A)) (ax (seq (v A) (v A)))))";
        assert!(valid(good, LogicSystem::Ill));
        let bad = "(prom (seq (v A) (bang (v A))) (co-der (seq (v A) (v A))))";
        let p = parse_proof("(prom (seq (v A) (bang (v A))) (ax (seq (v A) (v A))))").unwrap();
        let report = validate_proof(&p, LogicSystem::Ill);
        assert!(!report.is_valid());
        let _ = bad;
    }

    #[test]
    fn monotone_in_system() {
        // a proof valid in IMALL is valid in ILL and DILL
        let src = "(with-right (seq (v A) (with (v A) (v A))) (ax (seq (v A) (v A))) (ax (seq (v A) (v A))))";
        assert!(valid(src, LogicSystem::Imall));
        assert!(valid(src, LogicSystem::Ill));
        assert!(valid(src, LogicSystem::Dill));
    }

    #[test]
    fn exchange_swaps_adjacent() {
        let src = "(ex (seq (v B) (v A) (v A)) :pos 0 (weak (seq (v A) (v B) (v A)) (ax (seq (v A) (v A)))))";
        assert!(valid(src, LogicSystem::Lj));
    }

    #[test]
    fn dill_sum_and_zero() {
        let src = "(sum (seq (v A) (v A)) (zero (seq (v A) (v A))) (ax (seq (v A) (v A))))";
        assert!(valid(src, LogicSystem::Dill));
        assert!(!valid(src, LogicSystem::Ill));
    }
}
