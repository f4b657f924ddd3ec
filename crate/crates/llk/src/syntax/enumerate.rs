//! Bounded enumeration of cut-free proofs. Serves as the provability oracle
//! and as a proof-counting tool for the syntax tests.

use super::{Aux, Formula, LogicSystem, ProofTree, RuleTag, Sequent};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("node budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("max_depth must be at least 1")]
    BadDepth,
}

pub struct Enumerator {
    sys: LogicSystem,
    budget: usize,
    used: usize,
}

impl Enumerator {
    fn spend(&mut self, n: usize) -> Result<(), EnumError> {
        self.used += n;
        if self.used > self.budget {
            Err(EnumError::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    fn proofs(&mut self, seq: &Sequent, depth: usize) -> Result<Vec<ProofTree>, EnumError> {
        if depth == 0 {
            return Ok(vec![]);
        }
        self.spend(1)?;
        let mut out = Vec::new();
        let push1 = |this: &mut Self,
                         rule: RuleTag,
                         prem: Sequent,
                         aux: Aux,
                         out: &mut Vec<ProofTree>|
         -> Result<(), EnumError> {
            for p in this.proofs(&prem, depth - 1)? {
                out.push(ProofTree::new(rule, seq.clone(), vec![p], aux));
            }
            Ok(())
        };
        let ctx = &seq.context;
        let concl = &seq.conclusion;
        let sys = self.sys;
        let allow = |r: RuleTag| sys.allows_rule(r);

        // Leaves.
        if allow(RuleTag::Ax) && ctx.len() == 1 && ctx[0] == *concl {
            out.push(ProofTree::leaf(RuleTag::Ax, seq.clone()));
        }
        if allow(RuleTag::TopRight) && *concl == Formula::Top {
            out.push(ProofTree::leaf(RuleTag::TopRight, seq.clone()));
        }
        if allow(RuleTag::OneRight) && ctx.is_empty() && *concl == Formula::One {
            out.push(ProofTree::leaf(RuleTag::OneRight, seq.clone()));
        }
        if allow(RuleTag::CoWeak) && ctx.is_empty() && concl.is_bang() {
            out.push(ProofTree::leaf(RuleTag::CoWeak, seq.clone()));
        }
        if allow(RuleTag::Zero) {
            out.push(ProofTree::leaf(RuleTag::Zero, seq.clone()));
        }

        // Unary structural / left rules.
        if allow(RuleTag::Weak) && !ctx.is_empty() {
            let prem = Sequent::new(ctx[..ctx.len() - 1].to_vec(), concl.clone());
            push1(self, RuleTag::Weak, prem, Aux::none(), &mut out)?;
        }
        if allow(RuleTag::Contr) {
            if let Some(a) = ctx.last() {
                let mut c = ctx.clone();
                c.push(a.clone());
                push1(self, RuleTag::Contr, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
            }
        }
        if allow(RuleTag::Ex) && ctx.len() >= 2 {
            for k in 0..ctx.len() - 1 {
                let mut c = ctx.clone();
                c.swap(k, k + 1);
                push1(self, RuleTag::Ex, Sequent::new(c, concl.clone()), Aux::pos(k), &mut out)?;
            }
        }
        if let Some(last) = ctx.last() {
            let g = || ctx[..ctx.len() - 1].to_vec();
            match last {
                Formula::And(a1, a2) if allow(RuleTag::AndLeft1) => {
                    let mut c = g();
                    c.push((**a1).clone());
                    push1(self, RuleTag::AndLeft1, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
                    let mut c = g();
                    c.push((**a2).clone());
                    push1(self, RuleTag::AndLeft2, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
                }
                Formula::With(a1, a2) if allow(RuleTag::WithLeft1) => {
                    let mut c = g();
                    c.push((**a1).clone());
                    push1(self, RuleTag::WithLeft1, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
                    let mut c = g();
                    c.push((**a2).clone());
                    push1(self, RuleTag::WithLeft2, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
                }
                Formula::Tensor(a1, a2) if allow(RuleTag::TensorLeft) => {
                    let mut c = g();
                    c.push((**a1).clone());
                    c.push((**a2).clone());
                    push1(self, RuleTag::TensorLeft, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
                }
                Formula::One if allow(RuleTag::OneLeft) => {
                    push1(self, RuleTag::OneLeft, Sequent::new(g(), concl.clone()), Aux::none(), &mut out)?;
                }
                Formula::Bang(a) => {
                    if allow(RuleTag::Der) {
                        let mut c = g();
                        c.push((**a).clone());
                        push1(self, RuleTag::Der, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
                    }
                    if allow(RuleTag::BangWeak) {
                        push1(self, RuleTag::BangWeak, Sequent::new(g(), concl.clone()), Aux::none(), &mut out)?;
                    }
                    if allow(RuleTag::BangContr) {
                        let mut c = ctx.clone();
                        c.push(last.clone());
                        push1(self, RuleTag::BangContr, Sequent::new(c, concl.clone()), Aux::none(), &mut out)?;
                    }
                }
                _ => {}
            }
        }

        // Right rules.
        match concl {
            Formula::And(b1, b2) if allow(RuleTag::AndRight) => {
                self.binary_shared(seq, RuleTag::AndRight, b1, b2, depth, &mut out)?;
            }
            Formula::With(b1, b2) if allow(RuleTag::WithRight) => {
                self.binary_shared(seq, RuleTag::WithRight, b1, b2, depth, &mut out)?;
            }
            Formula::Impl(a, b) if allow(RuleTag::ImplRight) => {
                let mut c = ctx.clone();
                c.push((**a).clone());
                push1(self, RuleTag::ImplRight, Sequent::new(c, (**b).clone()), Aux::none(), &mut out)?;
            }
            Formula::Lolli(a, b) if allow(RuleTag::LolliRight) => {
                let mut c = ctx.clone();
                c.push((**a).clone());
                push1(self, RuleTag::LolliRight, Sequent::new(c, (**b).clone()), Aux::none(), &mut out)?;
            }
            Formula::Tensor(b1, b2) if allow(RuleTag::TensorRight) => {
                for k in 0..=ctx.len() {
                    let p1 = Sequent::new(ctx[..k].to_vec(), (**b1).clone());
                    let p2 = Sequent::new(ctx[k..].to_vec(), (**b2).clone());
                    self.binary_split(seq, RuleTag::TensorRight, p1, p2, k, depth, &mut out)?;
                }
            }
            Formula::Bang(b) => {
                if allow(RuleTag::Prom) && ctx.iter().all(Formula::is_bang) {
                    push1(self, RuleTag::Prom, Sequent::new(ctx.clone(), (**b).clone()), Aux::none(), &mut out)?;
                }
                if allow(RuleTag::CoDer) {
                    push1(self, RuleTag::CoDer, Sequent::new(ctx.clone(), (**b).clone()), Aux::none(), &mut out)?;
                }
                if allow(RuleTag::CoContr) {
                    for k in 0..=ctx.len() {
                        let p1 = Sequent::new(ctx[..k].to_vec(), concl.clone());
                        let p2 = Sequent::new(ctx[k..].to_vec(), concl.clone());
                        self.binary_split(seq, RuleTag::CoContr, p1, p2, k, depth, &mut out)?;
                    }
                }
            }
            _ => {}
        }

        // ⊃-left / ⊸-left key on a context formula rather than the conclusion.
        if allow(RuleTag::ImplLeft) {
            if let Some(Formula::Impl(a, b)) = ctx.first() {
                let rest = &ctx[1..];
                for k in 0..=rest.len() {
                    let p1 = Sequent::new(rest[..k].to_vec(), (**a).clone());
                    let mut c2 = vec![(**b).clone()];
                    c2.extend(rest[k..].iter().cloned());
                    let p2 = Sequent::new(c2, concl.clone());
                    self.binary_split(seq, RuleTag::ImplLeft, p1, p2, k, depth, &mut out)?;
                }
            }
        }
        if allow(RuleTag::LolliLeft) {
            if let Some(Formula::Lolli(a, b)) = ctx.last() {
                let rest = &ctx[..ctx.len() - 1];
                for k in 0..=rest.len() {
                    let p1 = Sequent::new(rest[..k].to_vec(), (**a).clone());
                    let mut c2 = rest[k..].to_vec();
                    c2.push((**b).clone());
                    let p2 = Sequent::new(c2, concl.clone());
                    self.binary_split(seq, RuleTag::LolliLeft, p1, p2, k, depth, &mut out)?;
                }
            }
        }
        if allow(RuleTag::Sum) {
            let subs = self.proofs(seq, depth - 1)?;
            for p in &subs {
                for q in &subs {
                    out.push(ProofTree::new(
                        RuleTag::Sum,
                        seq.clone(),
                        vec![p.clone(), q.clone()],
                        Aux::none(),
                    ));
                }
            }
        }
        Ok(out)
    }

    fn binary_shared(
        &mut self,
        seq: &Sequent,
        rule: RuleTag,
        b1: &Formula,
        b2: &Formula,
        depth: usize,
        out: &mut Vec<ProofTree>,
    ) -> Result<(), EnumError> {
        let p1 = Sequent::new(seq.context.clone(), b1.clone());
        let p2 = Sequent::new(seq.context.clone(), b2.clone());
        let l = self.proofs(&p1, depth - 1)?;
        if l.is_empty() {
            return Ok(());
        }
        let r = self.proofs(&p2, depth - 1)?;
        for a in &l {
            for b in &r {
                out.push(ProofTree::new(rule, seq.clone(), vec![a.clone(), b.clone()], Aux::none()));
            }
        }
        Ok(())
    }

    fn binary_split(
        &mut self,
        seq: &Sequent,
        rule: RuleTag,
        p1: Sequent,
        p2: Sequent,
        k: usize,
        depth: usize,
        out: &mut Vec<ProofTree>,
    ) -> Result<(), EnumError> {
        let l = self.proofs(&p1, depth - 1)?;
        if l.is_empty() {
            return Ok(());
        }
        let r = self.proofs(&p2, depth - 1)?;
        for a in &l {
            for b in &r {
                out.push(ProofTree::new(
                    rule,
                    seq.clone(),
                    vec![a.clone(), b.clone()],
                    Aux::split(k),
                ));
            }
        }
        Ok(())
    }
}

/// All cut-free proofs of `seq` in `sys` of depth at most `max_depth`.
pub fn enumerate_proofs(
    seq: &Sequent,
    sys: LogicSystem,
    max_depth: usize,
    budget: usize,
) -> Result<Vec<ProofTree>, EnumError> {
    if max_depth == 0 {
        return Err(EnumError::BadDepth);
    }
    let mut e = Enumerator {
        sys,
        budget,
        used: 0,
    };
    let mut proofs = e.proofs(seq, max_depth)?;
    let mut seen = HashSet::new();
    proofs.retain(|p| seen.insert(p.clone()));
    Ok(proofs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::validate::validate_proof;

    fn seq(ctx: Vec<Formula>, c: Formula) -> Sequent {
        Sequent::new(ctx, c)
    }

    #[test]
    fn single_axiom_at_depth_one() {
        let s = seq(vec![Formula::var("A")], Formula::var("A"));
        let proofs = enumerate_proofs(&s, LogicSystem::Lj, 1, 10_000).unwrap();
        assert_eq!(proofs.len(), 1);
        assert_eq!(proofs[0].rule, RuleTag::Ax);
    }

    #[test]
    fn tensor_diagonal_unprovable() {
        // A ⊢ A ⊗ A has no proof in iMALL.
        let a = Formula::var("A");
        let s = seq(vec![a.clone()], Formula::tensor(a.clone(), a));
        let proofs = enumerate_proofs(&s, LogicSystem::Imall, 4, 1_000_000).unwrap();
        assert_eq!(proofs.len(), 0);
    }

    #[test]
    fn with_diagonal_provable() {
        // A ⊢ A & A is provable in iMALL.
        let a = Formula::var("A");
        let s = seq(vec![a.clone()], Formula::with(a.clone(), a));
        let proofs = enumerate_proofs(&s, LogicSystem::Imall, 4, 1_000_000).unwrap();
        assert!(!proofs.is_empty());
        for p in &proofs {
            assert!(validate_proof(p, LogicSystem::Imall).is_valid());
            assert!(p.is_cut_free());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let a = Formula::var("A");
        let s = seq(vec![a.clone()], Formula::with(a.clone(), a));
        let err = enumerate_proofs(&s, LogicSystem::Imall, 6, 2).unwrap_err();
        assert!(matches!(err, EnumError::BudgetExceeded(2)));
    }

    #[test]
    fn results_validate_and_are_cut_free() {
        let a = Formula::var("A");
        let s = seq(
            vec![Formula::impl_(a.clone(), a.clone()), a.clone()],
            a.clone(),
        );
        let proofs = enumerate_proofs(&s, LogicSystem::Lj, 4, 2_000_000).unwrap();
        assert!(!proofs.is_empty());
        for p in &proofs {
            assert!(validate_proof(p, LogicSystem::Lj).is_valid(), "{p:?}");
            assert!(p.is_cut_free());
        }
    }
}
