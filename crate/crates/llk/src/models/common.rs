//! Web points and pair-set morphisms shared by the coherence-space and
//! relational models. Points are structural trees with a canonical
//! ordering, so morphism equality is ordinary set equality.

use std::fmt;

/// A point of a web. `MSet` holds a sorted multiset (relational exponential),
/// `Set` a sorted strictly-increasing set (coherence-space exponential).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Point {
    Base(u32),
    Unit,
    Pair(Box<Point>, Box<Point>),
    L(Box<Point>),
    R(Box<Point>),
    MSet(Vec<Point>),
    Set(Vec<Point>),
}

impl Point {
    pub fn pair(a: Point, b: Point) -> Point {
        Point::Pair(Box::new(a), Box::new(b))
    }
    pub fn l(a: Point) -> Point {
        Point::L(Box::new(a))
    }
    pub fn r(a: Point) -> Point {
        Point::R(Box::new(a))
    }
    pub fn mset(mut items: Vec<Point>) -> Point {
        items.sort();
        Point::MSet(items)
    }
    pub fn set(mut items: Vec<Point>) -> Point {
        items.sort();
        items.dedup();
        Point::Set(items)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Base(i) => write!(f, "{i}"),
            Point::Unit => write!(f, "*"),
            Point::Pair(a, b) => write!(f, "({a},{b})"),
            Point::L(a) => write!(f, "l.{a}"),
            Point::R(a) => write!(f, "r.{a}"),
            Point::MSet(items) | Point::Set(items) => {
                write!(f, "[")?;
                for (i, p) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Multiset union of two sorted multisets.
pub fn mset_merge(a: &[Point], b: &[Point]) -> Vec<Point> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort();
    out
}

/// All ways of splitting a sorted multiset into two sorted multisets.
pub fn mset_splits(m: &[Point]) -> Vec<(Vec<Point>, Vec<Point>)> {
    // group equal elements, then choose how many of each go left
    let mut groups: Vec<(&Point, usize)> = Vec::new();
    for p in m {
        match groups.last_mut() {
            Some((q, n)) if *q == p => *n += 1,
            _ => groups.push((p, 1)),
        }
    }
    let mut out = vec![(Vec::new(), Vec::new())];
    for (p, n) in groups {
        let mut next = Vec::new();
        for (left, right) in &out {
            for k in 0..=n {
                let mut l = left.clone();
                let mut r = right.clone();
                for _ in 0..k {
                    l.push((*p).clone());
                }
                for _ in k..n {
                    r.push((*p).clone());
                }
                next.push((l, r));
            }
        }
        out = next;
    }
    out
}

/// All partitions of a sorted multiset into nonempty blocks, each block a
/// sorted multiset, the list of blocks itself sorted.
pub fn mset_partitions(m: &[Point]) -> Vec<Vec<Vec<Point>>> {
    fn go(rest: &[Point], acc: &mut Vec<Vec<Point>>, out: &mut Vec<Vec<Vec<Point>>>) {
        if rest.is_empty() {
            let mut blocks = acc.clone();
            blocks.sort();
            out.push(blocks);
            return;
        }
        let first = rest[0].clone();
        let rest = &rest[1..];
        // put `first` into an existing block (only the first of equal blocks,
        // to cut duplicates early; final dedup still applies)
        for i in 0..acc.len() {
            acc[i].push(first.clone());
            acc[i].sort();
            go(rest, acc, out);
            let pos = acc[i].iter().position(|x| *x == first).expect("present");
            acc[i].remove(pos);
        }
        // or open a new block
        acc.push(vec![first]);
        go(rest, acc, out);
        acc.pop();
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    go(m, &mut acc, &mut out);
    out.sort();
    out.dedup();
    out
}

/// A morphism stored as a sorted, deduplicated set of point-index pairs,
/// tagged with its object ids.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairMor {
    pub dom: usize,
    pub cod: usize,
    pub pairs: Vec<(u32, u32)>,
}

impl PairMor {
    pub fn new(dom: usize, cod: usize, mut pairs: Vec<(u32, u32)>) -> PairMor {
        pairs.sort_unstable();
        pairs.dedup();
        PairMor { dom, cod, pairs }
    }

    pub fn empty(dom: usize, cod: usize) -> PairMor {
        PairMor {
            dom,
            cod,
            pairs: Vec::new(),
        }
    }

    pub fn union(&self, other: &PairMor) -> PairMor {
        assert_eq!((self.dom, self.cod), (other.dom, other.cod), "union type mismatch");
        let mut pairs = self.pairs.clone();
        pairs.extend_from_slice(&other.pairs);
        PairMor::new(self.dom, self.cod, pairs)
    }

    /// Relational composition g ∘ f.
    pub fn compose(g: &PairMor, f: &PairMor) -> PairMor {
        assert_eq!(f.cod, g.dom, "composition type mismatch");
        let mut by_src: std::collections::HashMap<u32, Vec<u32>> = std::collections::HashMap::new();
        for &(y, z) in &g.pairs {
            by_src.entry(y).or_default().push(z);
        }
        let mut pairs = Vec::new();
        for &(x, y) in &f.pairs {
            if let Some(zs) = by_src.get(&y) {
                for &z in zs {
                    pairs.push((x, z));
                }
            }
        }
        PairMor::new(f.dom, g.cod, pairs)
    }

    pub fn image(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        self.pairs
            .iter()
            .filter(move |&&(a, _)| a == x)
            .map(|&(_, b)| b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(i: u32) -> Point {
        Point::Base(i)
    }

    #[test]
    fn splits_of_small_multiset() {
        // [a,a]: (∅,[a,a]) ([a],[a]) ([a,a],∅)
        let m = vec![b(0), b(0)];
        assert_eq!(mset_splits(&m).len(), 3);
        // [a,b]: 4 splits
        let m = vec![b(0), b(1)];
        assert_eq!(mset_splits(&m).len(), 4);
    }

    #[test]
    fn partitions_of_small_multiset() {
        // [a,a]: {[a,a]} and {[a],[a]}
        let m = vec![b(0), b(0)];
        assert_eq!(mset_partitions(&m).len(), 2);
        // [a,b]: {[a,b]}, {[a],[b]}
        let m = vec![b(0), b(1)];
        assert_eq!(mset_partitions(&m).len(), 2);
        // [a,a,b]: {[aab]}, {[aa],[b]}, {[ab],[a]}, {[a],[a],[b]}
        let m = vec![b(0), b(0), b(1)];
        assert_eq!(mset_partitions(&m).len(), 4);
    }

    #[test]
    fn composition_is_relational() {
        let f = PairMor::new(0, 1, vec![(0, 0), (0, 1)]);
        let g = PairMor::new(1, 2, vec![(1, 5)]);
        let gf = PairMor::compose(&g, &f);
        assert_eq!(gf.pairs, vec![(0, 5)]);
    }
}
