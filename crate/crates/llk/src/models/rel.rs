//! The relational model over the Boolean semiring, with a degree-truncated
//! finite-multiset exponential. This is the additive differential model.
//!
//! Webs are graded: base points weigh 1, the unit point 0, pairs add, tagged
//! points keep their weight, and a multiset weighs the sum of its elements.
//! The web of !Y holds the multisets of total degree ≤ d whose elements all
//! have positive degree, together with the singleton [y] for each degree-0
//! point y (the latter keeps the comonad triangle exact at the empty
//! multiset). Every structural generator is degree-homogeneous, so composing
//! truncated relations agrees with the untruncated composites on the
//! enumerated fragment.

use super::common::{mset_merge, mset_partitions, mset_splits, PairMor, Point};
use super::ModelObj;
use crate::cat::{AdditiveOps, BangOps, Cat, CartesianOps, ClosedOps, DiffOps, Monoidal};
use std::cell::RefCell;
use std::collections::HashMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct RelObj(pub usize);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Key {
    Base(usize),
    Top,
    One,
    Tensor(RelObj, RelObj),
    With(RelObj, RelObj),
    Lolli(RelObj, RelObj),
    Bang(RelObj),
}

struct Info {
    key: Key,
    points: Vec<Point>,
    index: HashMap<Point, u32>,
    deg: Vec<i64>,
}

pub struct Rel {
    pub degree: i64,
    store: RefCell<Store>,
}

struct Store {
    objs: Vec<Info>,
    index: HashMap<Key, usize>,
}

const WEB_BUDGET: usize = 500_000;

impl Rel {
    pub fn new(degree: usize) -> Rel {
        assert!(degree >= 1, "degree bound must be at least 1");
        Rel {
            degree: degree as i64,
            store: RefCell::new(Store {
                objs: Vec::new(),
                index: HashMap::new(),
            }),
        }
    }

    fn insert(&self, key: Key, mut pts: Vec<(Point, i64)>) -> RelObj {
        pts.sort_by(|(p, d), (q, e)| (d, p).cmp(&(e, q)));
        assert!(pts.len() <= WEB_BUDGET, "web budget exceeded: {} points", pts.len());
        let mut st = self.store.borrow_mut();
        if let Some(&i) = st.index.get(&key) {
            return RelObj(i);
        }
        let points: Vec<Point> = pts.iter().map(|(p, _)| p.clone()).collect();
        let deg: Vec<i64> = pts.iter().map(|(_, d)| *d).collect();
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let i = st.objs.len();
        st.index.insert(key.clone(), i);
        st.objs.push(Info {
            key,
            points,
            index,
            deg,
        });
        RelObj(i)
    }

    fn built(&self, key: &Key) -> Option<RelObj> {
        self.store.borrow().index.get(key).copied().map(RelObj)
    }

    pub fn base(&self, size: usize) -> RelObj {
        if let Some(o) = self.built(&Key::Base(size)) {
            return o;
        }
        let pts = (0..size as u32).map(|i| (Point::Base(i), 1)).collect();
        self.insert(Key::Base(size), pts)
    }

    pub fn web_size(&self, o: RelObj) -> usize {
        self.store.borrow().objs[o.0].points.len()
    }

    pub fn points(&self, o: RelObj) -> Vec<Point> {
        self.store.borrow().objs[o.0].points.clone()
    }

    pub fn point_at(&self, o: RelObj, i: u32) -> Point {
        self.store.borrow().objs[o.0].points[i as usize].clone()
    }

    pub fn point_index(&self, o: RelObj, p: &Point) -> Option<u32> {
        self.store.borrow().objs[o.0].index.get(p).copied()
    }

    pub fn point_deg(&self, o: RelObj, i: u32) -> i64 {
        self.store.borrow().objs[o.0].deg[i as usize]
    }

    fn deg_of(&self, o: RelObj, p: &Point) -> i64 {
        let i = self.point_index(o, p).expect("point not in web");
        self.point_deg(o, i)
    }

    pub fn top_obj(&self) -> RelObj {
        self.built(&Key::Top)
            .unwrap_or_else(|| self.insert(Key::Top, vec![]))
    }

    pub fn one_obj(&self) -> RelObj {
        self.built(&Key::One)
            .unwrap_or_else(|| self.insert(Key::One, vec![(Point::Unit, 0)]))
    }

    pub fn tensor_obj(&self, a: RelObj, b: RelObj) -> RelObj {
        if let Some(o) = self.built(&Key::Tensor(a, b)) {
            return o;
        }
        let mut pts = Vec::new();
        for (i, p) in self.points(a).iter().enumerate() {
            for (j, q) in self.points(b).iter().enumerate() {
                pts.push((
                    Point::pair(p.clone(), q.clone()),
                    self.point_deg(a, i as u32) + self.point_deg(b, j as u32),
                ));
            }
        }
        self.insert(Key::Tensor(a, b), pts)
    }

    pub fn with_obj(&self, a: RelObj, b: RelObj) -> RelObj {
        if let Some(o) = self.built(&Key::With(a, b)) {
            return o;
        }
        let mut pts = Vec::new();
        for (i, p) in self.points(a).iter().enumerate() {
            pts.push((Point::l(p.clone()), self.point_deg(a, i as u32)));
        }
        for (j, q) in self.points(b).iter().enumerate() {
            pts.push((Point::r(q.clone()), self.point_deg(b, j as u32)));
        }
        self.insert(Key::With(a, b), pts)
    }

    pub fn lolli_obj(&self, a: RelObj, b: RelObj) -> RelObj {
        if let Some(o) = self.built(&Key::Lolli(a, b)) {
            return o;
        }
        let mut pts = Vec::new();
        for (i, p) in self.points(a).iter().enumerate() {
            for (j, q) in self.points(b).iter().enumerate() {
                pts.push((
                    Point::pair(p.clone(), q.clone()),
                    self.point_deg(b, j as u32) - self.point_deg(a, i as u32),
                ));
            }
        }
        self.insert(Key::Lolli(a, b), pts)
    }

    pub fn bang_obj(&self, a: RelObj) -> RelObj {
        if let Some(o) = self.built(&Key::Bang(a)) {
            return o;
        }
        let pa = self.points(a);
        let degs: Vec<i64> = (0..pa.len()).map(|i| self.point_deg(a, i as u32)).collect();
        let mut pts: Vec<(Point, i64)> = Vec::new();
        // multisets over positive-degree points, total degree ≤ d
        let positive: Vec<usize> = (0..pa.len()).filter(|&i| degs[i] >= 1).collect();
        let mut stack: Vec<(usize, Vec<Point>, i64)> = vec![(0, Vec::new(), 0)];
        while let Some((from, items, total)) = stack.pop() {
            pts.push((Point::mset(items.clone()), total));
            for (slot, &i) in positive.iter().enumerate().skip(from) {
                if total + degs[i] <= self.degree {
                    let mut items2 = items.clone();
                    items2.push(pa[i].clone());
                    stack.push((slot, items2, total + degs[i]));
                }
            }
        }
        // singleton multisets over degree-0 points
        for (i, p) in pa.iter().enumerate() {
            if degs[i] == 0 {
                pts.push((Point::mset(vec![p.clone()]), 0));
            }
        }
        self.insert(Key::Bang(a), pts)
    }

    /// Build a morphism from explicit points, silently dropping pairs whose
    /// endpoints fall outside the truncated webs.
    pub fn mor_from_points(&self, dom: RelObj, cod: RelObj, pts: &[(Point, Point)]) -> PairMor {
        let pairs = pts
            .iter()
            .filter_map(|(x, y)| {
                Some((self.point_index(dom, x)?, self.point_index(cod, y)?))
            })
            .collect();
        PairMor::new(dom.0, cod.0, pairs)
    }

    fn relabel(&self, dom: RelObj, cod: RelObj, f: impl Fn(&Point) -> Point) -> PairMor {
        let pairs = self
            .points(dom)
            .iter()
            .enumerate()
            .filter_map(|(i, p)| Some((i as u32, self.point_index(cod, &f(p))?)))
            .collect();
        PairMor::new(dom.0, cod.0, pairs)
    }

    /// Sum of a multiset of multisets.
    fn block_sum(blocks: &[Point]) -> Vec<Point> {
        let mut out = Vec::new();
        for b in blocks {
            match b {
                Point::MSet(items) => out.extend(items.iter().cloned()),
                _ => panic!("block_sum over non-multiset point"),
            }
        }
        out.sort();
        out
    }
}

impl Cat for Rel {
    type O = RelObj;
    type M = PairMor;

    fn id(&self, o: &RelObj) -> PairMor {
        let n = self.web_size(*o) as u32;
        PairMor::new(o.0, o.0, (0..n).map(|i| (i, i)).collect())
    }

    fn comp(&self, g: &PairMor, f: &PairMor) -> PairMor {
        PairMor::compose(g, f)
    }

    fn dom(&self, m: &PairMor) -> RelObj {
        RelObj(m.dom)
    }
    fn cod(&self, m: &PairMor) -> RelObj {
        RelObj(m.cod)
    }

    fn hom(&self, a: &RelObj, b: &RelObj) -> Vec<PairMor> {
        let bits = self.web_size(*a) * self.web_size(*b);
        assert!(bits <= 22, "hom enumeration too large: 2^{bits} relations");
        let na = self.web_size(*a) as u32;
        let nb = self.web_size(*b) as u32;
        let cells: Vec<(u32, u32)> = (0..na)
            .flat_map(|x| (0..nb).map(move |y| (x, y)))
            .collect();
        (0..(1u64 << bits))
            .map(|mask| {
                let pairs = cells
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &c)| c)
                    .collect();
                PairMor::new(a.0, b.0, pairs)
            })
            .collect()
    }

    fn hom_size(&self, a: &RelObj, b: &RelObj) -> Option<f64> {
        Some((2f64).powf((self.web_size(*a) * self.web_size(*b)) as f64))
    }

    fn hom_basis(&self, a: &RelObj, b: &RelObj) -> Vec<PairMor> {
        // relations are unions of singletons, and every generator here is
        // union-linear, so singletons plus the empty relation generate
        let mut out = vec![PairMor::empty(a.0, b.0)];
        for x in 0..self.web_size(*a) as u32 {
            for y in 0..self.web_size(*b) as u32 {
                out.push(PairMor::new(a.0, b.0, vec![(x, y)]));
            }
        }
        out
    }

    fn obj_weight(&self, o: &RelObj) -> usize {
        self.web_size(*o)
    }

    fn obj_label(&self, o: &RelObj) -> String {
        let st = self.store.borrow();
        match &st.objs[o.0].key {
            Key::Base(n) => format!("base{n}"),
            Key::Top => "⊤".into(),
            Key::One => "1".into(),
            Key::Tensor(a, b) => {
                let (a, b) = (*a, *b);
                drop(st);
                format!("({}⊗{})", self.obj_label(&a), self.obj_label(&b))
            }
            Key::With(a, b) => {
                let (a, b) = (*a, *b);
                drop(st);
                format!("({}&{})", self.obj_label(&a), self.obj_label(&b))
            }
            Key::Lolli(a, b) => {
                let (a, b) = (*a, *b);
                drop(st);
                format!("({}⊸{})", self.obj_label(&a), self.obj_label(&b))
            }
            Key::Bang(a) => {
                let a = *a;
                drop(st);
                format!("!{}", self.obj_label(&a))
            }
        }
    }

    fn mor_label(&self, m: &PairMor) -> String {
        let pts: Vec<String> = m
            .pairs
            .iter()
            .map(|&(x, y)| {
                format!(
                    "({},{})",
                    self.point_at(RelObj(m.dom), x),
                    self.point_at(RelObj(m.cod), y)
                )
            })
            .collect();
        format!("{{{}}}", pts.join(" "))
    }
}

impl Monoidal for Rel {
    fn unit(&self) -> RelObj {
        self.one_obj()
    }
    fn tensor(&self, a: &RelObj, b: &RelObj) -> RelObj {
        self.tensor_obj(*a, *b)
    }

    fn tensor_mor(&self, f: &PairMor, g: &PairMor) -> PairMor {
        let (fa, fb) = (RelObj(f.dom), RelObj(f.cod));
        let (ga, gb) = (RelObj(g.dom), RelObj(g.cod));
        let dom = self.tensor_obj(fa, ga);
        let cod = self.tensor_obj(fb, gb);
        let mut pairs = Vec::new();
        for &(x, x2) in &f.pairs {
            for &(y, y2) in &g.pairs {
                let p = Point::pair(self.point_at(fa, x), self.point_at(ga, y));
                let q = Point::pair(self.point_at(fb, x2), self.point_at(gb, y2));
                if let (Some(i), Some(j)) = (self.point_index(dom, &p), self.point_index(cod, &q))
                {
                    pairs.push((i, j));
                }
            }
        }
        PairMor::new(dom.0, cod.0, pairs)
    }

    fn alpha(&self, a: &RelObj, b: &RelObj, c: &RelObj) -> PairMor {
        let dom = self.tensor_obj(self.tensor_obj(*a, *b), *c);
        let cod = self.tensor_obj(*a, self.tensor_obj(*b, *c));
        self.relabel(dom, cod, |p| match p {
            Point::Pair(xy, z) => match &**xy {
                Point::Pair(x, y) => {
                    Point::pair((**x).clone(), Point::pair((**y).clone(), (**z).clone()))
                }
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })
    }

    fn alpha_inv(&self, a: &RelObj, b: &RelObj, c: &RelObj) -> PairMor {
        let dom = self.tensor_obj(*a, self.tensor_obj(*b, *c));
        let cod = self.tensor_obj(self.tensor_obj(*a, *b), *c);
        self.relabel(dom, cod, |p| match p {
            Point::Pair(x, yz) => match &**yz {
                Point::Pair(y, z) => {
                    Point::pair(Point::pair((**x).clone(), (**y).clone()), (**z).clone())
                }
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })
    }

    fn lambda(&self, a: &RelObj) -> PairMor {
        let dom = self.tensor_obj(self.one_obj(), *a);
        self.relabel(dom, *a, |p| match p {
            Point::Pair(_, x) => (**x).clone(),
            _ => unreachable!(),
        })
    }

    fn lambda_inv(&self, a: &RelObj) -> PairMor {
        let cod = self.tensor_obj(self.one_obj(), *a);
        self.relabel(*a, cod, |p| Point::pair(Point::Unit, p.clone()))
    }

    fn rho(&self, a: &RelObj) -> PairMor {
        let dom = self.tensor_obj(*a, self.one_obj());
        self.relabel(dom, *a, |p| match p {
            Point::Pair(x, _) => (**x).clone(),
            _ => unreachable!(),
        })
    }

    fn rho_inv(&self, a: &RelObj) -> PairMor {
        let cod = self.tensor_obj(*a, self.one_obj());
        self.relabel(*a, cod, |p| Point::pair(p.clone(), Point::Unit))
    }

    fn gamma(&self, a: &RelObj, b: &RelObj) -> PairMor {
        let dom = self.tensor_obj(*a, *b);
        let cod = self.tensor_obj(*b, *a);
        self.relabel(dom, cod, |p| match p {
            Point::Pair(x, y) => Point::pair((**y).clone(), (**x).clone()),
            _ => unreachable!(),
        })
    }
}

impl CartesianOps for Rel {
    fn top(&self) -> RelObj {
        self.top_obj()
    }

    fn to_top(&self, a: &RelObj) -> PairMor {
        PairMor::empty(a.0, self.top_obj().0)
    }

    fn prod(&self, a: &RelObj, b: &RelObj) -> RelObj {
        self.with_obj(*a, *b)
    }

    fn pr0(&self, a: &RelObj, b: &RelObj) -> PairMor {
        let dom = self.with_obj(*a, *b);
        let pairs = self
            .points(*a)
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                Some((self.point_index(dom, &Point::l(p.clone()))?, i as u32))
            })
            .collect();
        PairMor::new(dom.0, a.0, pairs)
    }

    fn pr1(&self, a: &RelObj, b: &RelObj) -> PairMor {
        let dom = self.with_obj(*a, *b);
        let pairs = self
            .points(*b)
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                Some((self.point_index(dom, &Point::r(p.clone()))?, i as u32))
            })
            .collect();
        PairMor::new(dom.0, b.0, pairs)
    }

    fn pair(&self, f: &PairMor, g: &PairMor) -> PairMor {
        assert_eq!(f.dom, g.dom, "pairing domain mismatch");
        let (bc, cc) = (RelObj(f.cod), RelObj(g.cod));
        let cod = self.with_obj(bc, cc);
        let mut pairs = Vec::new();
        for &(x, y) in &f.pairs {
            let p = Point::l(self.point_at(bc, y));
            pairs.push((x, self.point_index(cod, &p).expect("with web")));
        }
        for &(x, y) in &g.pairs {
            let p = Point::r(self.point_at(cc, y));
            pairs.push((x, self.point_index(cod, &p).expect("with web")));
        }
        PairMor::new(f.dom, cod.0, pairs)
    }
}

impl ClosedOps for Rel {
    fn hom_obj(&self, a: &RelObj, b: &RelObj) -> RelObj {
        self.lolli_obj(*a, *b)
    }

    fn ev(&self, a: &RelObj, b: &RelObj) -> PairMor {
        let l = self.lolli_obj(*a, *b);
        let dom = self.tensor_obj(l, *a);
        let mut pairs = Vec::new();
        for (i, p) in self.points(dom).iter().enumerate() {
            if let Point::Pair(xy, x2) = p {
                if let Point::Pair(x, y) = &**xy {
                    if **x == **x2 {
                        pairs.push((i as u32, self.point_index(*b, y).expect("cod web")));
                    }
                }
            }
        }
        PairMor::new(dom.0, b.0, pairs)
    }

    fn cur(&self, z: &RelObj, a: &RelObj, b: &RelObj, f: &PairMor) -> PairMor {
        let dom = self.tensor_obj(*z, *a);
        assert_eq!(f.dom, dom.0, "cur domain mismatch");
        assert_eq!(f.cod, b.0, "cur codomain mismatch");
        let l = self.lolli_obj(*a, *b);
        let pairs = f
            .pairs
            .iter()
            .filter_map(|&(p, y)| {
                let (zp, xp) = match self.point_at(dom, p) {
                    Point::Pair(zp, xp) => ((*zp).clone(), (*xp).clone()),
                    _ => unreachable!(),
                };
                let q = Point::pair(xp, self.point_at(*b, y));
                Some((self.point_index(*z, &zp)?, self.point_index(l, &q)?))
            })
            .collect();
        PairMor::new(z.0, l.0, pairs)
    }
}

impl BangOps for Rel {
    fn bang(&self, a: &RelObj) -> RelObj {
        self.bang_obj(*a)
    }

    /// !f pairs [x1..xk] with [y1..yk] when the elements can be matched
    /// through f.
    fn bang_mor(&self, f: &PairMor) -> PairMor {
        let (a, b) = (RelObj(f.dom), RelObj(f.cod));
        let (ba, bb) = (self.bang_obj(a), self.bang_obj(b));
        let mut pairs = Vec::new();
        for (mi, mp) in self.points(ba).iter().enumerate() {
            let Point::MSet(items) = mp else { unreachable!() };
            // all image multisets, elementwise
            let mut images: Vec<Vec<Point>> = vec![Vec::new()];
            for x in items {
                let xi = self.point_index(a, x).expect("dom web");
                let ys: Vec<u32> = f.image(xi).collect();
                if ys.is_empty() {
                    images.clear();
                    break;
                }
                let mut next = Vec::new();
                for img in &images {
                    for &y in &ys {
                        let mut img2 = img.clone();
                        img2.push(self.point_at(b, y));
                        img2.sort();
                        next.push(img2);
                    }
                }
                next.sort();
                next.dedup();
                images = next;
            }
            for img in images {
                if let Some(ni) = self.point_index(bb, &Point::MSet(img)) {
                    pairs.push((mi as u32, ni));
                }
            }
        }
        PairMor::new(ba.0, bb.0, pairs)
    }

    fn der(&self, a: &RelObj) -> PairMor {
        let ba = self.bang_obj(*a);
        let pairs = self
            .points(*a)
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                Some((
                    self.point_index(ba, &Point::mset(vec![p.clone()]))?,
                    i as u32,
                ))
            })
            .collect();
        PairMor::new(ba.0, a.0, pairs)
    }

    /// dig relates m to the partitions of m into nonempty blocks, plus the
    /// one-block cover [m] (which at m = [] is the singleton [[]]).
    fn dig(&self, a: &RelObj) -> PairMor {
        let ba = self.bang_obj(*a);
        let bba = self.bang_obj(ba);
        let mut pairs = Vec::new();
        for (mi, mp) in self.points(ba).iter().enumerate() {
            let Point::MSet(items) = mp else { unreachable!() };
            let mut targets: Vec<Point> = mset_partitions(items)
                .into_iter()
                .map(|blocks| Point::mset(blocks.into_iter().map(Point::MSet).collect()))
                .collect();
            targets.push(Point::mset(vec![mp.clone()]));
            targets.sort();
            targets.dedup();
            for t in targets {
                if let Some(ti) = self.point_index(bba, &t) {
                    pairs.push((mi as u32, ti));
                }
            }
        }
        PairMor::new(ba.0, bba.0, pairs)
    }

    fn m0(&self) -> PairMor {
        let one = self.one_obj();
        let bt = self.bang_obj(self.top_obj());
        self.mor_from_points(one, bt, &[(Point::Unit, Point::mset(vec![]))])
    }

    fn m0_inv(&self) -> PairMor {
        let one = self.one_obj();
        let bt = self.bang_obj(self.top_obj());
        self.mor_from_points(bt, one, &[(Point::mset(vec![]), Point::Unit)])
    }

    fn m2(&self, a: &RelObj, b: &RelObj) -> PairMor {
        let (ba, bb) = (self.bang_obj(*a), self.bang_obj(*b));
        let dom = self.tensor_obj(ba, bb);
        let ab = self.with_obj(*a, *b);
        let cod = self.bang_obj(ab);
        let pairs = self
            .points(dom)
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                let Point::Pair(m, n) = p else { unreachable!() };
                let (Point::MSet(ms), Point::MSet(ns)) = (&**m, &**n) else {
                    unreachable!()
                };
                let mut items: Vec<Point> = ms.iter().cloned().map(Point::l).collect();
                items.extend(ns.iter().cloned().map(Point::r));
                Some((i as u32, self.point_index(cod, &Point::mset(items))?))
            })
            .collect();
        PairMor::new(dom.0, cod.0, pairs)
    }

    fn m2_inv(&self, a: &RelObj, b: &RelObj) -> PairMor {
        let m = self.m2(a, b);
        PairMor::new(m.cod, m.dom, m.pairs.iter().map(|&(x, y)| (y, x)).collect())
    }

    /// contr relates m to every two-way split of m.
    fn contr(&self, a: &RelObj) -> PairMor {
        let ba = self.bang_obj(*a);
        let cod = self.tensor_obj(ba, ba);
        let mut pairs = Vec::new();
        for (mi, mp) in self.points(ba).iter().enumerate() {
            let Point::MSet(items) = mp else { unreachable!() };
            for (l, r) in mset_splits(items) {
                let q = Point::pair(Point::mset(l), Point::mset(r));
                if let Some(qi) = self.point_index(cod, &q) {
                    pairs.push((mi as u32, qi));
                }
            }
        }
        PairMor::new(ba.0, cod.0, pairs)
    }

    /// weak relates only the empty multiset to the unit point.
    fn weak(&self, a: &RelObj) -> PairMor {
        let ba = self.bang_obj(*a);
        self.mor_from_points(ba, self.one_obj(), &[(Point::mset(vec![]), Point::Unit)])
    }
}

impl AdditiveOps for Rel {
    fn zero(&self, a: &RelObj, b: &RelObj) -> PairMor {
        PairMor::empty(a.0, b.0)
    }
    fn plus(&self, f: &PairMor, g: &PairMor) -> PairMor {
        f.union(g)
    }
}

impl DiffOps for Rel {
    fn coder(&self, a: &RelObj) -> PairMor {
        let ba = self.bang_obj(*a);
        let pairs = self
            .points(*a)
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                Some((
                    i as u32,
                    self.point_index(ba, &Point::mset(vec![p.clone()]))?,
                ))
            })
            .collect();
        PairMor::new(a.0, ba.0, pairs)
    }

    fn coweak(&self, a: &RelObj) -> PairMor {
        let ba = self.bang_obj(*a);
        self.mor_from_points(self.one_obj(), ba, &[(Point::Unit, Point::mset(vec![]))])
    }

    fn cocontr(&self, a: &RelObj) -> PairMor {
        let ba = self.bang_obj(*a);
        let dom = self.tensor_obj(ba, ba);
        let pairs = self
            .points(dom)
            .iter()
            .enumerate()
            .filter_map(|(i, p)| {
                let Point::Pair(m, n) = p else { unreachable!() };
                let (Point::MSet(ms), Point::MSet(ns)) = (&**m, &**n) else {
                    unreachable!()
                };
                let joined = Point::MSet(mset_merge(ms, ns));
                Some((i as u32, self.point_index(ba, &joined)?))
            })
            .collect();
        PairMor::new(dom.0, ba.0, pairs)
    }
}

impl ModelObj for Rel {
    fn describe(&self, o: &RelObj) -> serde_json::Value {
        let pts: Vec<String> = self.points(*o).iter().map(|p| p.to_string()).collect();
        serde_json::json!({
            "model": "rel",
            "label": self.obj_label(o),
            "degree": self.degree,
            "web": pts,
        })
    }
}

pub use self::web_check::enumerate_web;

mod web_check {
    use super::*;

    /// Points of an object's web in canonical order (the public enumeration
    /// entry used by the CLI and tests).
    pub fn enumerate_web(rel: &Rel, o: RelObj) -> Vec<Point> {
        rel.points(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(i: u32) -> Point {
        Point::Base(i)
    }

    #[test]
    fn web_of_bang_over_two_points_degree_two() {
        let rel = Rel::new(2);
        let a = rel.base(2);
        let ba = rel.bang_obj(a);
        // [], [a], [b], [aa], [ab], [bb]
        assert_eq!(rel.web_size(ba), 6);
    }

    #[test]
    fn empty_base_web_is_only_the_empty_multiset() {
        let rel = Rel::new(2);
        let a = rel.base(0);
        let ba = rel.bang_obj(a);
        assert_eq!(rel.points(ba), vec![Point::mset(vec![])]);
    }

    #[test]
    fn dig_on_two_equal_elements_has_two_images() {
        let rel = Rel::new(2);
        let a = rel.base(1);
        let ba = rel.bang_obj(a);
        let dig = rel.dig(&a);
        let m = rel.point_index(ba, &Point::mset(vec![b(0), b(0)])).unwrap();
        let images: Vec<u32> = dig.image(m).collect();
        assert_eq!(images.len(), 2, "partitions [[a,a]] and [[a],[a]]");
    }

    #[test]
    fn comonad_triangles_hold_exactly() {
        let rel = Rel::new(3);
        for size in 0..=2 {
            let a = rel.base(size);
            let ba = rel.bang_obj(a);
            let dig = rel.dig(&a);
            let der_bang = rel.der(&ba);
            let left = rel.comp(&der_bang, &dig);
            assert_eq!(left, rel.id(&ba), "der_!A ∘ dig = id at size {size}");
            let bang_der = rel.bang_mor(&rel.der(&a));
            let right = rel.comp(&bang_der, &dig);
            assert_eq!(right, rel.id(&ba), "!der ∘ dig = id at size {size}");
        }
    }

    #[test]
    fn comonad_square_holds_exactly() {
        let rel = Rel::new(3);
        for size in 1..=2 {
            let a = rel.base(size);
            let ba = rel.bang_obj(a);
            let dig = rel.dig(&a);
            let left = rel.comp(&rel.dig(&ba), &dig);
            let right = rel.comp(&rel.bang_mor(&dig), &dig);
            assert_eq!(left, right, "dig square at size {size}");
        }
    }

    #[test]
    fn dbar_adds_one_element() {
        let rel = Rel::new(3);
        let a = rel.base(2);
        let ba = rel.bang_obj(a);
        let dbar = rel.dbar(&a);
        let dom = rel.tensor_obj(ba, a);
        let x = rel
            .point_index(dom, &Point::pair(Point::mset(vec![b(0)]), b(1)))
            .unwrap();
        let images: Vec<Point> = dbar.image(x).map(|i| rel.point_at(ba, i)).collect();
        assert_eq!(images, vec![Point::mset(vec![b(0), b(1)])]);
    }

    #[test]
    fn sum_is_union_with_empty_neutral() {
        let rel = Rel::new(2);
        let a = rel.base(2);
        let f = PairMor::new(a.0, a.0, vec![(0, 1)]);
        let z = rel.zero(&a, &a);
        assert_eq!(rel.plus(&f, &z), f);
    }

    #[test]
    fn block_sum_helper() {
        let blocks = vec![
            Point::mset(vec![b(0)]),
            Point::mset(vec![b(0), b(1)]),
        ];
        assert_eq!(Rel::block_sum(&blocks), vec![b(0), b(0), b(1)]);
    }
}
