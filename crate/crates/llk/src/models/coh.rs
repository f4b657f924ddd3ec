//! Finite coherence spaces. Objects are webs with a reflexive symmetric
//! coherence relation; a morphism A → B is a clique of A ⊸ B, stored as a
//! set of point pairs and composed relationally.

use super::common::{PairMor, Point};
use super::ModelObj;
use crate::cat::{BangOps, Cat, CartesianOps, ClosedOps, Monoidal};
use std::cell::RefCell;
use std::collections::HashMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CohObj(pub usize);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Key {
    Atom(usize),
    Top,
    One,
    Tensor(CohObj, CohObj),
    With(CohObj, CohObj),
    Lolli(CohObj, CohObj),
    Bang(CohObj),
}

struct Info {
    key: Key,
    points: Vec<Point>,
    index: HashMap<Point, u32>,
    coh: Vec<Vec<bool>>,
}

pub struct Coh {
    store: RefCell<Store>,
}

struct Store {
    objs: Vec<Info>,
    index: HashMap<Key, usize>,
    atoms: Vec<Vec<Vec<bool>>>,
}

impl Default for Coh {
    fn default() -> Self {
        Coh::new()
    }
}

impl Coh {
    pub fn new() -> Coh {
        Coh {
            store: RefCell::new(Store {
                objs: Vec::new(),
                index: HashMap::new(),
                atoms: Vec::new(),
            }),
        }
    }

    /// Register an atomic space from its coherence matrix (must be reflexive
    /// and symmetric).
    pub fn atom(&self, coh: Vec<Vec<bool>>) -> CohObj {
        let n = coh.len();
        for (i, row) in coh.iter().enumerate() {
            assert_eq!(row.len(), n, "coherence matrix must be square");
            assert!(row[i], "coherence must be reflexive");
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, coh[j][i], "coherence must be symmetric");
            }
        }
        let id = {
            let mut st = self.store.borrow_mut();
            st.atoms.push(coh.clone());
            st.atoms.len() - 1
        };
        let points = (0..n as u32).map(Point::Base).collect();
        self.insert(Key::Atom(id), points, coh)
    }

    /// The fully incoherent space on n points (only reflexive coherences).
    pub fn discrete(&self, n: usize) -> CohObj {
        let coh = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        self.atom(coh)
    }

    /// All coherence spaces with web size ≤ max, one per coherence matrix.
    pub fn all_spaces_up_to(&self, max: usize) -> Vec<CohObj> {
        let mut out = Vec::new();
        for n in 0..=max {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .collect();
            for mask in 0..(1u32 << pairs.len()) {
                let mut coh = vec![vec![false; n]; n];
                for (i, row) in coh.iter_mut().enumerate() {
                    row[i] = true;
                }
                for (b, &(i, j)) in pairs.iter().enumerate() {
                    let v = mask & (1 << b) != 0;
                    coh[i][j] = v;
                    coh[j][i] = v;
                }
                out.push(self.atom(coh));
            }
        }
        out
    }

    fn insert(&self, key: Key, points: Vec<Point>, coh: Vec<Vec<bool>>) -> CohObj {
        let mut st = self.store.borrow_mut();
        if let Some(&i) = st.index.get(&key) {
            return CohObj(i);
        }
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
            coh,
        });
        CohObj(i)
    }

    fn built(&self, key: &Key) -> Option<CohObj> {
        self.store.borrow().index.get(key).copied().map(CohObj)
    }

    pub fn web_size(&self, o: CohObj) -> usize {
        self.store.borrow().objs[o.0].points.len()
    }

    pub fn points(&self, o: CohObj) -> Vec<Point> {
        self.store.borrow().objs[o.0].points.clone()
    }

    pub fn point_index(&self, o: CohObj, p: &Point) -> u32 {
        self.store.borrow().objs[o.0].index[p]
    }

    pub fn point_at(&self, o: CohObj, i: u32) -> Point {
        self.store.borrow().objs[o.0].points[i as usize].clone()
    }

    pub fn coherent(&self, o: CohObj, i: u32, j: u32) -> bool {
        self.store.borrow().objs[o.0].coh[i as usize][j as usize]
    }

    /// Is a set of point indices a clique?
    pub fn is_clique(&self, o: CohObj, pts: &[u32]) -> bool {
        pts.iter()
            .enumerate()
            .all(|(k, &i)| pts[k + 1..].iter().all(|&j| self.coherent(o, i, j)))
    }

    /// All cliques (as sorted index vectors), enumerated by backtracking.
    pub fn cliques(&self, o: CohObj) -> Vec<Vec<u32>> {
        let n = self.web_size(o) as u32;
        let mut out = vec![vec![]];
        let mut stack: Vec<Vec<u32>> = (0..n).map(|i| vec![i]).collect();
        while let Some(c) = stack.pop() {
            let last = *c.last().expect("nonempty");
            out.push(c.clone());
            for next in (last + 1)..n {
                if c.iter().all(|&i| self.coherent(o, i, next)) {
                    let mut c2 = c.clone();
                    c2.push(next);
                    stack.push(c2);
                }
            }
        }
        out
    }

    fn build(&self, key: Key) -> CohObj {
        if let Some(o) = self.built(&key) {
            return o;
        }
        match key {
            Key::Atom(_) => unreachable!("atoms are inserted directly"),
            Key::Top => self.insert(Key::Top, vec![], vec![]),
            Key::One => self.insert(Key::One, vec![Point::Unit], vec![vec![true]]),
            Key::Tensor(a, b) => {
                let (pa, pb) = (self.points(a), self.points(b));
                let mut points = Vec::new();
                for x in &pa {
                    for y in &pb {
                        points.push(Point::pair(x.clone(), y.clone()));
                    }
                }
                let nb = pb.len();
                let n = points.len();
                let mut coh = vec![vec![false; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        let (xi, yi) = ((i / nb) as u32, (i % nb) as u32);
                        let (xj, yj) = ((j / nb) as u32, (j % nb) as u32);
                        coh[i][j] = self.coherent(a, xi, xj) && self.coherent(b, yi, yj);
                    }
                }
                self.insert(Key::Tensor(a, b), points, coh)
            }
            Key::With(a, b) => {
                let (pa, pb) = (self.points(a), self.points(b));
                let na = pa.len();
                let mut points: Vec<Point> = pa.iter().cloned().map(Point::l).collect();
                points.extend(pb.iter().cloned().map(Point::r));
                let n = points.len();
                let mut coh = vec![vec![true; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        if i < na && j < na {
                            coh[i][j] = self.coherent(a, i as u32, j as u32);
                        } else if i >= na && j >= na {
                            coh[i][j] = self.coherent(b, (i - na) as u32, (j - na) as u32);
                        }
                    }
                }
                self.insert(Key::With(a, b), points, coh)
            }
            Key::Lolli(a, b) => {
                // A ⊸ B = dual(A ⊗ dual B): coherent iff equal, or the
                // hypothesis side is incoherent, or the conclusion side is
                // strictly coherent.
                let (pa, pb) = (self.points(a), self.points(b));
                let mut points = Vec::new();
                for x in &pa {
                    for y in &pb {
                        points.push(Point::pair(x.clone(), y.clone()));
                    }
                }
                let nb = pb.len();
                let n = points.len();
                let mut coh = vec![vec![false; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        let (xi, yi) = ((i / nb) as u32, (i % nb) as u32);
                        let (xj, yj) = ((j / nb) as u32, (j % nb) as u32);
                        coh[i][j] = i == j
                            || !self.coherent(a, xi, xj)
                            || (yi != yj && self.coherent(b, yi, yj));
                    }
                }
                self.insert(Key::Lolli(a, b), points, coh)
            }
            Key::Bang(a) => {
                let pa = self.points(a);
                let cliques = self.cliques(a);
                let mut points: Vec<Point> = cliques
                    .iter()
                    .map(|c| Point::set(c.iter().map(|&i| pa[i as usize].clone()).collect()))
                    .collect();
                points.sort_by_key(|p| match p {
                    Point::Set(items) => (items.len(), p.clone()),
                    _ => unreachable!(),
                });
                let idx_sets: Vec<Vec<u32>> = points
                    .iter()
                    .map(|p| match p {
                        Point::Set(items) => items
                            .iter()
                            .map(|q| self.point_index(a, q))
                            .collect::<Vec<_>>(),
                        _ => unreachable!(),
                    })
                    .collect();
                let n = points.len();
                let mut coh = vec![vec![false; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        let mut union = idx_sets[i].clone();
                        union.extend_from_slice(&idx_sets[j]);
                        union.sort_unstable();
                        union.dedup();
                        coh[i][j] = self.is_clique(a, &union);
                    }
                }
                self.insert(Key::Bang(a), points, coh)
            }
        }
    }

    pub fn top_obj(&self) -> CohObj {
        self.build(Key::Top)
    }
    pub fn one_obj(&self) -> CohObj {
        self.build(Key::One)
    }
    pub fn tensor_obj(&self, a: CohObj, b: CohObj) -> CohObj {
        self.build(Key::Tensor(a, b))
    }
    pub fn with_obj(&self, a: CohObj, b: CohObj) -> CohObj {
        self.build(Key::With(a, b))
    }
    pub fn lolli_obj(&self, a: CohObj, b: CohObj) -> CohObj {
        self.build(Key::Lolli(a, b))
    }
    pub fn bang_obj(&self, a: CohObj) -> CohObj {
        self.build(Key::Bang(a))
    }

    /// Build a morphism from explicit point pairs.
    pub fn mor_from_points(&self, dom: CohObj, cod: CohObj, pts: &[(Point, Point)]) -> PairMor {
        let pairs = pts
            .iter()
            .map(|(x, y)| (self.point_index(dom, x), self.point_index(cod, y)))
            .collect();
        PairMor::new(dom.0, cod.0, pairs)
    }

    /// Relabel points of `dom` into points of `cod` through a function.
    fn relabel(&self, dom: CohObj, cod: CohObj, f: impl Fn(&Point) -> Point) -> PairMor {
        let pairs = self
            .points(dom)
            .iter()
            .enumerate()
            .map(|(i, p)| (i as u32, self.point_index(cod, &f(p))))
            .collect();
        PairMor::new(dom.0, cod.0, pairs)
    }

    /// Is m a clique of dom ⊸ cod?
    pub fn mor_is_clique(&self, m: &PairMor) -> bool {
        let l = self.lolli_obj(CohObj(m.dom), CohObj(m.cod));
        let idx: Vec<u32> = m
            .pairs
            .iter()
            .map(|&(x, y)| {
                let p = Point::pair(
                    self.point_at(CohObj(m.dom), x),
                    self.point_at(CohObj(m.cod), y),
                );
                self.point_index(l, &p)
            })
            .collect();
        self.is_clique(l, &idx)
    }
}

impl Cat for Coh {
    type O = CohObj;
    type M = PairMor;

    fn id(&self, o: &CohObj) -> PairMor {
        let n = self.web_size(*o) as u32;
        PairMor::new(o.0, o.0, (0..n).map(|i| (i, i)).collect())
    }

    fn comp(&self, g: &PairMor, f: &PairMor) -> PairMor {
        PairMor::compose(g, f)
    }

    fn dom(&self, m: &PairMor) -> CohObj {
        CohObj(m.dom)
    }
    fn cod(&self, m: &PairMor) -> CohObj {
        CohObj(m.cod)
    }

    fn hom(&self, a: &CohObj, b: &CohObj) -> Vec<PairMor> {
        let l = self.lolli_obj(*a, *b);
        let nb = self.web_size(*b) as u32;
        self.cliques(l)
            .into_iter()
            .map(|c| {
                let pairs = c.iter().map(|&i| (i / nb, i % nb)).collect();
                PairMor::new(a.0, b.0, pairs)
            })
            .collect()
    }

    fn hom_size(&self, a: &CohObj, b: &CohObj) -> Option<f64> {
        let l = self.lolli_obj(*a, *b);
        if self.web_size(l) <= 20 {
            Some(self.cliques(l).len() as f64)
        } else {
            None
        }
    }

    fn obj_weight(&self, o: &CohObj) -> usize {
        self.web_size(*o)
    }

    fn obj_label(&self, o: &CohObj) -> String {
        let st = self.store.borrow();
        match &st.objs[o.0].key {
            Key::Atom(i) => format!("atom{}({}pt)", i, st.objs[o.0].points.len()),
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
                    self.point_at(CohObj(m.dom), x),
                    self.point_at(CohObj(m.cod), y)
                )
            })
            .collect();
        format!("{{{}}}", pts.join(" "))
    }
}

impl Monoidal for Coh {
    fn unit(&self) -> CohObj {
        self.one_obj()
    }
    fn tensor(&self, a: &CohObj, b: &CohObj) -> CohObj {
        self.tensor_obj(*a, *b)
    }

    fn tensor_mor(&self, f: &PairMor, g: &PairMor) -> PairMor {
        let (fa, fb) = (CohObj(f.dom), CohObj(f.cod));
        let (ga, gb) = (CohObj(g.dom), CohObj(g.cod));
        let dom = self.tensor_obj(fa, ga);
        let cod = self.tensor_obj(fb, gb);
        let mut pairs = Vec::new();
        for &(x, x2) in &f.pairs {
            for &(y, y2) in &g.pairs {
                let p = Point::pair(self.point_at(fa, x), self.point_at(ga, y));
                let q = Point::pair(self.point_at(fb, x2), self.point_at(gb, y2));
                pairs.push((self.point_index(dom, &p), self.point_index(cod, &q)));
            }
        }
        PairMor::new(dom.0, cod.0, pairs)
    }

    fn alpha(&self, a: &CohObj, b: &CohObj, c: &CohObj) -> PairMor {
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

    fn alpha_inv(&self, a: &CohObj, b: &CohObj, c: &CohObj) -> PairMor {
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

    fn lambda(&self, a: &CohObj) -> PairMor {
        let dom = self.tensor_obj(self.one_obj(), *a);
        self.relabel(dom, *a, |p| match p {
            Point::Pair(_, x) => (**x).clone(),
            _ => unreachable!(),
        })
    }

    fn lambda_inv(&self, a: &CohObj) -> PairMor {
        let cod = self.tensor_obj(self.one_obj(), *a);
        self.relabel(*a, cod, |p| Point::pair(Point::Unit, p.clone()))
    }

    fn rho(&self, a: &CohObj) -> PairMor {
        let dom = self.tensor_obj(*a, self.one_obj());
        self.relabel(dom, *a, |p| match p {
            Point::Pair(x, _) => (**x).clone(),
            _ => unreachable!(),
        })
    }

    fn rho_inv(&self, a: &CohObj) -> PairMor {
        let cod = self.tensor_obj(*a, self.one_obj());
        self.relabel(*a, cod, |p| Point::pair(p.clone(), Point::Unit))
    }

    fn gamma(&self, a: &CohObj, b: &CohObj) -> PairMor {
        let dom = self.tensor_obj(*a, *b);
        let cod = self.tensor_obj(*b, *a);
        self.relabel(dom, cod, |p| match p {
            Point::Pair(x, y) => Point::pair((**y).clone(), (**x).clone()),
            _ => unreachable!(),
        })
    }
}

impl CartesianOps for Coh {
    fn top(&self) -> CohObj {
        self.top_obj()
    }

    fn to_top(&self, a: &CohObj) -> PairMor {
        PairMor::empty(a.0, self.top_obj().0)
    }

    fn prod(&self, a: &CohObj, b: &CohObj) -> CohObj {
        self.with_obj(*a, *b)
    }

    fn pr0(&self, a: &CohObj, b: &CohObj) -> PairMor {
        let dom = self.with_obj(*a, *b);
        let pairs = self
            .points(*a)
            .iter()
            .map(|p| {
                (
                    self.point_index(dom, &Point::l(p.clone())),
                    self.point_index(*a, p),
                )
            })
            .collect();
        PairMor::new(dom.0, a.0, pairs)
    }

    fn pr1(&self, a: &CohObj, b: &CohObj) -> PairMor {
        let dom = self.with_obj(*a, *b);
        let pairs = self
            .points(*b)
            .iter()
            .map(|p| {
                (
                    self.point_index(dom, &Point::r(p.clone())),
                    self.point_index(*b, p),
                )
            })
            .collect();
        PairMor::new(dom.0, b.0, pairs)
    }

    fn pair(&self, f: &PairMor, g: &PairMor) -> PairMor {
        assert_eq!(f.dom, g.dom, "pairing domain mismatch");
        let (bc, cc) = (CohObj(f.cod), CohObj(g.cod));
        let cod = self.with_obj(bc, cc);
        let mut pairs = Vec::new();
        for &(x, y) in &f.pairs {
            let p = Point::l(self.point_at(bc, y));
            pairs.push((x, self.point_index(cod, &p)));
        }
        for &(x, y) in &g.pairs {
            let p = Point::r(self.point_at(cc, y));
            pairs.push((x, self.point_index(cod, &p)));
        }
        PairMor::new(f.dom, cod.0, pairs)
    }
}

impl ClosedOps for Coh {
    fn hom_obj(&self, a: &CohObj, b: &CohObj) -> CohObj {
        self.lolli_obj(*a, *b)
    }

    fn ev(&self, a: &CohObj, b: &CohObj) -> PairMor {
        let l = self.lolli_obj(*a, *b);
        let dom = self.tensor_obj(l, *a);
        let mut pairs = Vec::new();
        for (i, p) in self.points(dom).iter().enumerate() {
            if let Point::Pair(xy, x2) = p {
                if let Point::Pair(x, y) = &**xy {
                    if **x == **x2 {
                        pairs.push((i as u32, self.point_index(*b, y)));
                    }
                }
            }
        }
        PairMor::new(dom.0, b.0, pairs)
    }

    fn cur(&self, z: &CohObj, a: &CohObj, b: &CohObj, f: &PairMor) -> PairMor {
        let dom = self.tensor_obj(*z, *a);
        assert_eq!(f.dom, dom.0, "cur domain mismatch");
        assert_eq!(f.cod, b.0, "cur codomain mismatch");
        let l = self.lolli_obj(*a, *b);
        let pairs = f
            .pairs
            .iter()
            .map(|&(p, y)| {
                let (zp, xp) = match self.point_at(dom, p) {
                    Point::Pair(zp, xp) => ((*zp).clone(), (*xp).clone()),
                    _ => unreachable!(),
                };
                let q = Point::pair(xp, self.point_at(*b, y));
                (self.point_index(*z, &zp), self.point_index(l, &q))
            })
            .collect();
        PairMor::new(z.0, l.0, pairs)
    }
}

impl BangOps for Coh {
    fn bang(&self, a: &CohObj) -> CohObj {
        self.bang_obj(*a)
    }

    /// !f relates (c, d) when some subset of f covers c on the left and d on
    /// the right exactly.
    fn bang_mor(&self, f: &PairMor) -> PairMor {
        let (a, b) = (CohObj(f.dom), CohObj(f.cod));
        let (ba, bb) = (self.bang_obj(a), self.bang_obj(b));
        let mut pairs = Vec::new();
        for (ci, cp) in self.points(ba).iter().enumerate() {
            let Point::Set(items) = cp else { unreachable!() };
            let elems: Vec<u32> = items.iter().map(|p| self.point_index(a, p)).collect();
            // choose a nonempty image subset for every element of c
            let choices: Vec<Vec<u32>> = elems
                .iter()
                .map(|&x| f.image(x).collect::<Vec<_>>())
                .collect();
            if choices.iter().any(|c| c.is_empty()) && !elems.is_empty() {
                continue;
            }
            let mut images: Vec<Vec<u32>> = vec![Vec::new()];
            for ch in &choices {
                let mut next = Vec::new();
                for img in &images {
                    for mask in 1..(1u32 << ch.len()) {
                        let mut img2 = img.clone();
                        for (bit, &y) in ch.iter().enumerate() {
                            if mask & (1 << bit) != 0 {
                                img2.push(y);
                            }
                        }
                        img2.sort_unstable();
                        img2.dedup();
                        next.push(img2);
                    }
                }
                next.sort();
                next.dedup();
                images = next;
            }
            for d in images {
                if !self.is_clique(b, &d) {
                    continue;
                }
                let dp = Point::set(d.iter().map(|&y| self.point_at(b, y)).collect());
                pairs.push((ci as u32, self.point_index(bb, &dp)));
            }
        }
        PairMor::new(ba.0, bb.0, pairs)
    }

    fn der(&self, a: &CohObj) -> PairMor {
        let ba = self.bang_obj(*a);
        let pairs = self
            .points(*a)
            .iter()
            .map(|p| {
                (
                    self.point_index(ba, &Point::set(vec![p.clone()])),
                    self.point_index(*a, p),
                )
            })
            .collect();
        PairMor::new(ba.0, a.0, pairs)
    }

    fn dig(&self, a: &CohObj) -> PairMor {
        let ba = self.bang_obj(*a);
        let bba = self.bang_obj(ba);
        let mut pairs = Vec::new();
        for (i, cp) in self.points(bba).iter().enumerate() {
            let Point::Set(cliques) = cp else { unreachable!() };
            let mut union: Vec<Point> = cliques
                .iter()
                .flat_map(|q| match q {
                    Point::Set(items) => items.clone(),
                    _ => unreachable!(),
                })
                .collect();
            union.sort();
            union.dedup();
            let c = Point::Set(union);
            pairs.push((self.point_index(ba, &c), i as u32));
        }
        PairMor::new(ba.0, bba.0, pairs)
    }

    fn m0(&self) -> PairMor {
        let one = self.one_obj();
        let bt = self.bang_obj(self.top_obj());
        self.mor_from_points(one, bt, &[(Point::Unit, Point::set(vec![]))])
    }

    fn m0_inv(&self) -> PairMor {
        let one = self.one_obj();
        let bt = self.bang_obj(self.top_obj());
        self.mor_from_points(bt, one, &[(Point::set(vec![]), Point::Unit)])
    }

    fn m2(&self, a: &CohObj, b: &CohObj) -> PairMor {
        let (ba, bb) = (self.bang_obj(*a), self.bang_obj(*b));
        let dom = self.tensor_obj(ba, bb);
        let ab = self.with_obj(*a, *b);
        let cod = self.bang_obj(ab);
        let pairs = self
            .points(dom)
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let Point::Pair(c, d) = p else { unreachable!() };
                let (Point::Set(cs), Point::Set(ds)) = (&**c, &**d) else {
                    unreachable!()
                };
                let mut items: Vec<Point> = cs.iter().cloned().map(Point::l).collect();
                items.extend(ds.iter().cloned().map(Point::r));
                (i as u32, self.point_index(cod, &Point::set(items)))
            })
            .collect();
        PairMor::new(dom.0, cod.0, pairs)
    }

    fn m2_inv(&self, a: &CohObj, b: &CohObj) -> PairMor {
        let m = self.m2(a, b);
        PairMor::new(m.cod, m.dom, m.pairs.iter().map(|&(x, y)| (y, x)).collect())
    }
}

impl ModelObj for Coh {
    fn describe(&self, o: &CohObj) -> serde_json::Value {
        let pts: Vec<String> = self.points(*o).iter().map(|p| p.to_string()).collect();
        serde_json::json!({
            "model": "coh",
            "label": self.obj_label(o),
            "web": pts,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incoherent_two_point_web_has_three_cliques() {
        let coh = Coh::new();
        let a = coh.discrete(2);
        let ba = coh.bang_obj(a);
        assert_eq!(coh.web_size(ba), 3);
    }

    #[test]
    fn bang_top_is_the_unit() {
        let coh = Coh::new();
        let bt = coh.bang_obj(coh.top_obj());
        assert_eq!(coh.web_size(bt), 1);
    }

    #[test]
    fn m2_web_bijection() {
        let coh = Coh::new();
        for a in coh.all_spaces_up_to(2) {
            for b in coh.all_spaces_up_to(2) {
                let lhs = coh.web_size(coh.bang_obj(coh.with_obj(a, b)));
                let rhs = coh.web_size(coh.bang_obj(a)) * coh.web_size(coh.bang_obj(b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn composition_of_cliques_is_a_clique() {
        let coh = Coh::new();
        let spaces = coh.all_spaces_up_to(3);
        for &a in &spaces {
            for &b in spaces.iter().take(4) {
                for f in coh.hom(&a, &b) {
                    assert!(coh.mor_is_clique(&f), "hom returned a non-clique");
                }
            }
        }
    }

    #[test]
    fn with_cliques_are_pairs_of_cliques() {
        let coh = Coh::new();
        for a in coh.all_spaces_up_to(2) {
            for b in coh.all_spaces_up_to(2) {
                let w = coh.with_obj(a, b);
                let n = coh.cliques(w).len();
                assert_eq!(n, coh.cliques(a).len() * coh.cliques(b).len());
            }
        }
    }
}
