//! Printer for proof files. `parse_proof` and `print_proof` round-trip on the
//! tree value, and printing normalizes whitespace.

use super::{Formula, ProofTree, Sequent};

pub fn print_formula(f: &Formula) -> String {
    match f {
        Formula::Var(v) => format!("(v {v})"),
        Formula::Top => "(top)".to_string(),
        Formula::One => "(one)".to_string(),
        Formula::And(a, b) => format!("(and {} {})", print_formula(a), print_formula(b)),
        Formula::With(a, b) => format!("(with {} {})", print_formula(a), print_formula(b)),
        Formula::Tensor(a, b) => format!("(tensor {} {})", print_formula(a), print_formula(b)),
        Formula::Impl(a, b) => format!("(impl {} {})", print_formula(a), print_formula(b)),
        Formula::Lolli(a, b) => format!("(lolli {} {})", print_formula(a), print_formula(b)),
        Formula::Bang(a) => format!("(bang {})", print_formula(a)),
    }
}

pub fn print_sequent(s: &Sequent) -> String {
    let mut out = String::from("(seq");
    for f in &s.context {
        out.push(' ');
        out.push_str(&print_formula(f));
    }
    out.push(' ');
    out.push_str(&print_formula(&s.conclusion));
    out.push(')');
    out
}

pub fn print_proof(p: &ProofTree) -> String {
    let mut out = String::new();
    out.push('(');
    out.push_str(p.rule.name());
    out.push(' ');
    out.push_str(&print_sequent(&p.conclusion));
    if let Some(k) = p.aux.split {
        out.push_str(&format!(" :split {k}"));
    }
    if let Some(k) = p.aux.pos {
        out.push_str(&format!(" :pos {k}"));
    }
    for prem in &p.premises {
        out.push(' ');
        out.push_str(&print_proof(prem));
    }
    out.push(')');
    out
}

/// Collapse whitespace runs and drop spaces adjacent to parentheses, the
/// normal form `print_proof` emits.
pub fn normalize_whitespace(src: &str) -> String {
    let mut out = String::new();
    let mut pending_space = false;
    for line in src.lines() {
        let line = match line.find(';') {
            Some(i) => &line[..i],
            None => line,
        };
        for ch in line.chars() {
            if ch.is_whitespace() {
                pending_space = true;
                continue;
            }
            if pending_space && !out.is_empty() && !out.ends_with('(') && ch != ')' {
                out.push(' ');
            }
            pending_space = false;
            out.push(ch);
        }
        pending_space = true;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse::parse_proof;

    #[test]
    fn print_parse_identity() {
        let src = "(and-right (seq (v A) (and (v A) (v A)))\n  (ax (seq (v A) (v A)))\n  (ax (seq (v A) (v A))))";
        let p = parse_proof(src).unwrap();
        let printed = print_proof(&p);
        assert_eq!(parse_proof(&printed).unwrap(), p);
        assert_eq!(printed, normalize_whitespace(src));
    }
}
