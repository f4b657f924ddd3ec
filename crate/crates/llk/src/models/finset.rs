//! Finite sets and total functions: the Cartesian closed model of LJ.
//!
//! Objects are sizes; the point set of an object of size n is 0..n. Products
//! and hom objects are interned with index arithmetic for their points. The
//! exponential bundle is the identity comonad, which makes FinSet a
//! (degenerate) Seely category so iMALL/ILL proofs can be interpreted here
//! too; it carries no additive structure.

use super::ModelObj;
use crate::cat::{AdditiveOps, BangOps, Cat, CartesianOps, ClosedOps, Monoidal};
use std::cell::RefCell;
use std::collections::HashMap;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FsObj(pub usize);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinFn {
    pub dom: FsObj,
    pub cod: FsObj,
    pub table: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Key {
    Size(usize),
    Unit,
    Prod(FsObj, FsObj),
    Hom(FsObj, FsObj),
}

struct Info {
    key: Key,
    size: usize,
}

pub struct FinSet {
    store: RefCell<Store>,
}

struct Store {
    objs: Vec<Info>,
    index: HashMap<Key, usize>,
}

impl Default for FinSet {
    fn default() -> Self {
        FinSet::new()
    }
}

impl FinSet {
    pub fn new() -> FinSet {
        FinSet {
            store: RefCell::new(Store {
                objs: Vec::new(),
                index: HashMap::new(),
            }),
        }
    }

    fn intern(&self, key: Key, size: usize) -> FsObj {
        let mut st = self.store.borrow_mut();
        if let Some(&i) = st.index.get(&key) {
            return FsObj(i);
        }
        let i = st.objs.len();
        st.index.insert(key.clone(), i);
        st.objs.push(Info { key, size });
        FsObj(i)
    }

    pub fn obj(&self, size: usize) -> FsObj {
        self.intern(Key::Size(size), size)
    }

    pub fn size(&self, o: FsObj) -> usize {
        self.store.borrow().objs[o.0].size
    }

    fn key(&self, o: FsObj) -> Key {
        self.store.borrow().objs[o.0].key.clone()
    }

    pub fn mor(&self, dom: FsObj, cod: FsObj, table: Vec<u32>) -> FinFn {
        debug_assert_eq!(table.len(), self.size(dom));
        debug_assert!(table.iter().all(|&v| (v as usize) < self.size(cod)));
        FinFn { dom, cod, table }
    }

    /// Encode a pair of points as a point of the product.
    pub fn pair_point(&self, a: FsObj, b: FsObj, x: u32, y: u32) -> u32 {
        let _ = a;
        x * self.size(b) as u32 + y
    }

    pub fn unpair_point(&self, _a: FsObj, b: FsObj, p: u32) -> (u32, u32) {
        let nb = self.size(b) as u32;
        (p / nb, p % nb)
    }

    /// Encode a function table as a point of the hom object.
    pub fn fn_point(&self, _a: FsObj, b: FsObj, table: &[u32]) -> u32 {
        let nb = self.size(b) as u32;
        let mut p = 0u32;
        for &v in table.iter().rev() {
            p = p * nb + v;
        }
        p
    }

    pub fn fn_table(&self, a: FsObj, b: FsObj, mut p: u32) -> Vec<u32> {
        let na = self.size(a);
        let nb = self.size(b) as u32;
        let mut table = Vec::with_capacity(na);
        for _ in 0..na {
            table.push(p % nb);
            p /= nb;
        }
        table
    }
}

impl Cat for FinSet {
    type O = FsObj;
    type M = FinFn;

    fn id(&self, o: &FsObj) -> FinFn {
        let n = self.size(*o);
        FinFn {
            dom: *o,
            cod: *o,
            table: (0..n as u32).collect(),
        }
    }

    fn comp(&self, g: &FinFn, f: &FinFn) -> FinFn {
        assert_eq!(f.cod, g.dom, "FinSet composition type mismatch");
        FinFn {
            dom: f.dom,
            cod: g.cod,
            table: f.table.iter().map(|&x| g.table[x as usize]).collect(),
        }
    }

    fn dom(&self, m: &FinFn) -> FsObj {
        m.dom
    }
    fn cod(&self, m: &FinFn) -> FsObj {
        m.cod
    }

    fn hom(&self, a: &FsObj, b: &FsObj) -> Vec<FinFn> {
        let na = self.size(*a);
        let nb = self.size(*b);
        if na == 0 {
            return vec![FinFn {
                dom: *a,
                cod: *b,
                table: vec![],
            }];
        }
        if nb == 0 {
            return vec![];
        }
        let total = (nb as u64).pow(na as u32);
        let mut out = Vec::with_capacity(total as usize);
        let mut table = vec![0u32; na];
        loop {
            out.push(FinFn {
                dom: *a,
                cod: *b,
                table: table.clone(),
            });
            let mut i = 0;
            loop {
                if i == na {
                    return out;
                }
                table[i] += 1;
                if (table[i] as usize) < nb {
                    break;
                }
                table[i] = 0;
                i += 1;
            }
        }
    }

    fn hom_size(&self, a: &FsObj, b: &FsObj) -> Option<f64> {
        let na = self.size(*a) as f64;
        let nb = self.size(*b) as f64;
        if na == 0.0 {
            return Some(1.0);
        }
        Some(nb.powf(na))
    }

    fn obj_weight(&self, o: &FsObj) -> usize {
        self.size(*o)
    }

    fn obj_label(&self, o: &FsObj) -> String {
        match self.key(*o) {
            Key::Size(n) => format!("{n}"),
            Key::Unit => "1".to_string(),
            Key::Prod(a, b) => format!("({}×{})", self.obj_label(&a), self.obj_label(&b)),
            Key::Hom(a, b) => format!("({}⇒{})", self.obj_label(&a), self.obj_label(&b)),
        }
    }

    fn mor_label(&self, m: &FinFn) -> String {
        format!("{:?}", m.table)
    }
}

impl CartesianOps for FinSet {
    fn top(&self) -> FsObj {
        self.intern(Key::Unit, 1)
    }

    fn to_top(&self, a: &FsObj) -> FinFn {
        FinFn {
            dom: *a,
            cod: self.top(),
            table: vec![0; self.size(*a)],
        }
    }

    fn prod(&self, a: &FsObj, b: &FsObj) -> FsObj {
        let size = self.size(*a) * self.size(*b);
        self.intern(Key::Prod(*a, *b), size)
    }

    fn pr0(&self, a: &FsObj, b: &FsObj) -> FinFn {
        let p = self.prod(a, b);
        let table = (0..self.size(p) as u32)
            .map(|i| self.unpair_point(*a, *b, i).0)
            .collect();
        FinFn {
            dom: p,
            cod: *a,
            table,
        }
    }

    fn pr1(&self, a: &FsObj, b: &FsObj) -> FinFn {
        let p = self.prod(a, b);
        let table = (0..self.size(p) as u32)
            .map(|i| self.unpair_point(*a, *b, i).1)
            .collect();
        FinFn {
            dom: p,
            cod: *b,
            table,
        }
    }

    fn pair(&self, f: &FinFn, g: &FinFn) -> FinFn {
        assert_eq!(f.dom, g.dom, "pairing domain mismatch");
        let p = self.prod(&f.cod, &g.cod);
        let table = f
            .table
            .iter()
            .zip(&g.table)
            .map(|(&x, &y)| self.pair_point(f.cod, g.cod, x, y))
            .collect();
        FinFn {
            dom: f.dom,
            cod: p,
            table,
        }
    }
}

impl Monoidal for FinSet {
    fn unit(&self) -> FsObj {
        self.top()
    }
    fn tensor(&self, a: &FsObj, b: &FsObj) -> FsObj {
        self.prod(a, b)
    }
    fn tensor_mor(&self, f: &FinFn, g: &FinFn) -> FinFn {
        self.prod_mor(f, g)
    }

    fn alpha(&self, a: &FsObj, b: &FsObj, c: &FsObj) -> FinFn {
        let ab = self.prod(a, b);
        let abc = self.prod(&ab, c);
        let bc = self.prod(b, c);
        let cod = self.prod(a, &bc);
        let table = (0..self.size(abc) as u32)
            .map(|p| {
                let (xy, z) = self.unpair_point(ab, *c, p);
                let (x, y) = self.unpair_point(*a, *b, xy);
                let yz = self.pair_point(*b, *c, y, z);
                self.pair_point(*a, bc, x, yz)
            })
            .collect();
        FinFn {
            dom: abc,
            cod,
            table,
        }
    }

    fn alpha_inv(&self, a: &FsObj, b: &FsObj, c: &FsObj) -> FinFn {
        let bc = self.prod(b, c);
        let dom = self.prod(a, &bc);
        let ab = self.prod(a, b);
        let cod = self.prod(&ab, c);
        let table = (0..self.size(dom) as u32)
            .map(|p| {
                let (x, yz) = self.unpair_point(*a, bc, p);
                let (y, z) = self.unpair_point(*b, *c, yz);
                let xy = self.pair_point(*a, *b, x, y);
                self.pair_point(ab, *c, xy, z)
            })
            .collect();
        FinFn { dom, cod, table }
    }

    fn lambda(&self, a: &FsObj) -> FinFn {
        // 1×A → A: point arithmetic collapses to the identity on indices
        let dom = self.prod(&self.unit(), a);
        FinFn {
            dom,
            cod: *a,
            table: (0..self.size(*a) as u32).collect(),
        }
    }

    fn lambda_inv(&self, a: &FsObj) -> FinFn {
        let cod = self.prod(&self.unit(), a);
        FinFn {
            dom: *a,
            cod,
            table: (0..self.size(*a) as u32).collect(),
        }
    }

    fn rho(&self, a: &FsObj) -> FinFn {
        let dom = self.prod(a, &self.unit());
        FinFn {
            dom,
            cod: *a,
            table: (0..self.size(*a) as u32).collect(),
        }
    }

    fn rho_inv(&self, a: &FsObj) -> FinFn {
        let cod = self.prod(a, &self.unit());
        FinFn {
            dom: *a,
            cod,
            table: (0..self.size(*a) as u32).collect(),
        }
    }

    fn gamma(&self, a: &FsObj, b: &FsObj) -> FinFn {
        let dom = self.prod(a, b);
        let cod = self.prod(b, a);
        let table = (0..self.size(dom) as u32)
            .map(|p| {
                let (x, y) = self.unpair_point(*a, *b, p);
                self.pair_point(*b, *a, y, x)
            })
            .collect();
        FinFn { dom, cod, table }
    }
}

impl ClosedOps for FinSet {
    fn hom_obj(&self, a: &FsObj, b: &FsObj) -> FsObj {
        let na = self.size(*a);
        let nb = self.size(*b);
        let size = if na == 0 { 1 } else { nb.pow(na as u32) };
        self.intern(Key::Hom(*a, *b), size)
    }

    fn ev(&self, a: &FsObj, b: &FsObj) -> FinFn {
        let h = self.hom_obj(a, b);
        let dom = self.prod(&h, a);
        let table = (0..self.size(dom) as u32)
            .map(|p| {
                let (fp, x) = self.unpair_point(h, *a, p);
                let tab = self.fn_table(*a, *b, fp);
                tab[x as usize]
            })
            .collect();
        FinFn {
            dom,
            cod: *b,
            table,
        }
    }

    fn cur(&self, z: &FsObj, a: &FsObj, b: &FsObj, f: &FinFn) -> FinFn {
        let h = self.hom_obj(a, b);
        assert_eq!(f.dom, self.prod(z, a), "cur domain mismatch");
        assert_eq!(f.cod, *b, "cur codomain mismatch");
        let table = (0..self.size(*z) as u32)
            .map(|zp| {
                let tab: Vec<u32> = (0..self.size(*a) as u32)
                    .map(|x| f.table[self.pair_point(*z, *a, zp, x) as usize])
                    .collect();
                self.fn_point(*a, *b, &tab)
            })
            .collect();
        FinFn {
            dom: *z,
            cod: h,
            table,
        }
    }
}

// The identity comonad: makes FinSet a degenerate Seely category so that
// linear proofs have a CCC reading.
impl BangOps for FinSet {
    fn bang(&self, a: &FsObj) -> FsObj {
        *a
    }
    fn bang_mor(&self, f: &FinFn) -> FinFn {
        f.clone()
    }
    fn der(&self, a: &FsObj) -> FinFn {
        self.id(a)
    }
    fn dig(&self, a: &FsObj) -> FinFn {
        self.id(a)
    }
    fn m0(&self) -> FinFn {
        self.id(&self.top())
    }
    fn m0_inv(&self) -> FinFn {
        self.id(&self.top())
    }
    fn m2(&self, a: &FsObj, b: &FsObj) -> FinFn {
        self.id(&self.prod(a, b))
    }
    fn m2_inv(&self, a: &FsObj, b: &FsObj) -> FinFn {
        self.id(&self.prod(a, b))
    }
}

impl ModelObj for FinSet {
    fn describe(&self, o: &FsObj) -> serde_json::Value {
        serde_json::json!({ "model": "finset", "size": self.size(*o), "label": self.obj_label(o) })
    }
}

// FinSet has no additive structure; this impl exists only to give the
// interpreter a uniform surface and fails loudly if reached.
impl AdditiveOps for FinSet {
    fn zero(&self, _a: &FsObj, _b: &FsObj) -> FinFn {
        panic!("FinSet has no zero morphisms")
    }
    fn plus(&self, _f: &FinFn, _g: &FinFn) -> FinFn {
        panic!("FinSet has no morphism sums")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_two_three_has_nine_elements() {
        let fs = FinSet::new();
        let a = fs.obj(2);
        let b = fs.obj(3);
        assert_eq!(fs.hom(&a, &b).len(), 9);
    }

    #[test]
    fn product_projections() {
        let fs = FinSet::new();
        let a = fs.obj(2);
        let b = fs.obj(3);
        let p = fs.prod(&a, &b);
        assert_eq!(fs.size(p), 6);
        // pr0∘⟨f,g⟩ = f exhaustively over all pairs f: 1+2 → 2, g: dom → 3
        let z = fs.obj(2);
        for f in fs.hom(&z, &a) {
            for g in fs.hom(&z, &b) {
                let pairing = fs.pair(&f, &g);
                assert_eq!(fs.comp(&fs.pr0(&a, &b), &pairing), f);
                assert_eq!(fs.comp(&fs.pr1(&a, &b), &pairing), g);
            }
        }
    }

    #[test]
    fn cur_ev_round_trip_all_sixteen() {
        // ev∘(cur(f)×id) = f for all f: 2×2 → 2
        let fs = FinSet::new();
        let two = fs.obj(2);
        let dom = fs.prod(&two, &two);
        let mut count = 0;
        for f in fs.hom(&dom, &two) {
            let c = fs.cur(&two, &two, &two, &f);
            let step = fs.prod_mor(&c, &fs.id(&two));
            let back = fs.comp(&fs.ev(&two, &two), &step);
            assert_eq!(back, f);
            count += 1;
        }
        assert_eq!(count, 16);
    }
}
