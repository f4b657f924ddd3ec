//! Functor/monad data as first-class records, and the two Kleisli
//! constructions: over the exponential comonad (hom(A,B) = C(!A,B)) and over
//! a monad (hom(A,B) = C(A,TB)).

use super::{BangOps, Cat, CartesianOps, ClosedOps};
use std::rc::Rc;

pub struct FunctorData<C: Cat> {
    pub name: String,
    pub on_obj: Rc<dyn Fn(&C, &C::O) -> C::O>,
    pub on_mor: Rc<dyn Fn(&C, &C::M) -> C::M>,
}

impl<C: Cat> Clone for FunctorData<C> {
    fn clone(&self) -> Self {
        FunctorData {
            name: self.name.clone(),
            on_obj: Rc::clone(&self.on_obj),
            on_mor: Rc::clone(&self.on_mor),
        }
    }
}

impl<C: Cat + 'static> FunctorData<C> {
    pub fn identity() -> FunctorData<C> {
        FunctorData {
            name: "Id".into(),
            on_obj: Rc::new(|_, o| o.clone()),
            on_mor: Rc::new(|_, m| m.clone()),
        }
    }

    pub fn obj(&self, c: &C, o: &C::O) -> C::O {
        (self.on_obj)(c, o)
    }
    pub fn mor(&self, c: &C, m: &C::M) -> C::M {
        (self.on_mor)(c, m)
    }

    /// Composite functor self ∘ other.
    pub fn after(&self, other: &FunctorData<C>) -> FunctorData<C> {
        let f = self.clone();
        let g = other.clone();
        let f2 = self.clone();
        let g2 = other.clone();
        FunctorData {
            name: format!("{}∘{}", self.name, other.name),
            on_obj: Rc::new(move |c, o| f.obj(c, &g.obj(c, o))),
            on_mor: Rc::new(move |c, m| f2.mor(c, &g2.mor(c, m))),
        }
    }

    /// Check preservation of identities and composites over a grid.
    pub fn check_laws(&self, c: &C, grid: &[C::O], cap: f64) -> Result<(), String> {
        for o in grid {
            let got = self.mor(c, &c.id(o));
            if got != c.id(&self.obj(c, o)) {
                return Err(format!("F(id) ≠ id at {}", c.obj_label(o)));
            }
        }
        for a in grid {
            for b in grid {
                for x in grid {
                    let ok_ab = c.hom_size(a, b).is_some_and(|s| s <= cap);
                    let ok_bx = c.hom_size(b, x).is_some_and(|s| s <= cap);
                    let (fs, gs) = if ok_ab && ok_bx {
                        (c.hom(a, b), c.hom(b, x))
                    } else {
                        (c.hom_basis(a, b), c.hom_basis(b, x))
                    };
                    for f in &fs {
                        for g in &gs {
                            let lhs = self.mor(c, &c.comp(g, f));
                            let rhs = c.comp(&self.mor(c, g), &self.mor(c, f));
                            if lhs != rhs {
                                return Err(format!(
                                    "F(g∘f) ≠ F(g)∘F(f) at f={}, g={}",
                                    c.mor_label(f),
                                    c.mor_label(g)
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

pub struct NatTransData<C: Cat> {
    pub name: String,
    pub source: FunctorData<C>,
    pub target: FunctorData<C>,
    pub component: Rc<dyn Fn(&C, &C::O) -> C::M>,
}

impl<C: Cat> Clone for NatTransData<C> {
    fn clone(&self) -> Self {
        NatTransData {
            name: self.name.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            component: Rc::clone(&self.component),
        }
    }
}

impl<C: Cat + 'static> NatTransData<C> {
    pub fn at(&self, c: &C, o: &C::O) -> C::M {
        (self.component)(c, o)
    }

    /// Naturality squares over enumerated morphisms.
    pub fn check_natural(&self, c: &C, grid: &[C::O], cap: f64) -> Result<(), String> {
        for a in grid {
            for b in grid {
                let mors = if c.hom_size(a, b).is_some_and(|s| s <= cap) {
                    c.hom(a, b)
                } else {
                    c.hom_basis(a, b)
                };
                for f in &mors {
                    let lhs = c.comp(&self.at(c, b), &self.source.mor(c, f));
                    let rhs = c.comp(&self.target.mor(c, f), &self.at(c, a));
                    if lhs != rhs {
                        return Err(format!(
                            "{} not natural at f={}: {} ≠ {}",
                            self.name,
                            c.mor_label(f),
                            c.mor_label(&lhs),
                            c.mor_label(&rhs)
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

pub struct MonadData<C: Cat> {
    pub functor: FunctorData<C>,
    pub eta: Rc<dyn Fn(&C, &C::O) -> C::M>,
    pub mu: Rc<dyn Fn(&C, &C::O) -> C::M>,
}

impl<C: Cat> Clone for MonadData<C> {
    fn clone(&self) -> Self {
        MonadData {
            functor: self.functor.clone(),
            eta: Rc::clone(&self.eta),
            mu: Rc::clone(&self.mu),
        }
    }
}

impl<C: Cat + 'static> MonadData<C> {
    pub fn eta(&self, c: &C, o: &C::O) -> C::M {
        (self.eta)(c, o)
    }
    pub fn mu(&self, c: &C, o: &C::O) -> C::M {
        (self.mu)(c, o)
    }

    /// Monad square and both triangles at every grid object.
    pub fn check_laws(&self, c: &C, grid: &[C::O]) -> Result<(), String> {
        for o in grid {
            let t = &self.functor;
            let to = t.obj(c, o);
            let tto = t.obj(c, &to);
            let mu = self.mu(c, o);
            let mu_t = self.mu(c, &to);
            let t_mu = t.mor(c, &mu);
            let square_l = c.comp(&mu, &t_mu);
            let square_r = c.comp(&mu, &mu_t);
            if square_l != square_r {
                return Err(format!("monad square fails at {}", c.obj_label(o)));
            }
            let eta_t = self.eta(c, &to);
            let t_eta = t.mor(c, &self.eta(c, o));
            if c.comp(&mu, &eta_t) != c.id(&to) {
                return Err(format!("monad triangle η_T fails at {}", c.obj_label(o)));
            }
            if c.comp(&mu, &t_eta) != c.id(&to) {
                return Err(format!("monad triangle Tη fails at {}", c.obj_label(o)));
            }
            let _ = tto;
        }
        Ok(())
    }
}

/// A morphism of the Kleisli category of a comonad: the payload lives in the
/// base as !dom → cod.
pub struct KlBangMor<C: Cat> {
    pub dom: C::O,
    pub cod: C::O,
    pub m: C::M,
}

impl<C: Cat> Clone for KlBangMor<C> {
    fn clone(&self) -> Self {
        KlBangMor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            m: self.m.clone(),
        }
    }
}

impl<C: Cat> PartialEq for KlBangMor<C> {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.m == other.m
    }
}

impl<C: Cat> Eq for KlBangMor<C> {}

impl<C: Cat> std::fmt::Debug for KlBangMor<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KlBangMor({:?} -> {:?}, {:?})", self.dom, self.cod, self.m)
    }
}

/// Kleisli category of the exponential comonad.
pub struct KleisliBang<'c, C: BangOps> {
    pub base: &'c C,
}

impl<'c, C: BangOps> KleisliBang<'c, C> {
    pub fn new(base: &'c C) -> Self {
        KleisliBang { base }
    }

    pub fn wrap(&self, dom: &C::O, cod: &C::O, m: C::M) -> KlBangMor<C> {
        debug_assert_eq!(self.base.dom(&m), self.base.bang(dom));
        debug_assert_eq!(self.base.cod(&m), cod.clone());
        KlBangMor {
            dom: dom.clone(),
            cod: cod.clone(),
            m,
        }
    }

    /// The faithful embedding κ(f) = f ∘ der.
    pub fn embed(&self, f: &C::M) -> KlBangMor<C> {
        let a = self.base.dom(f);
        let m = self.base.comp(f, &self.base.der(&a));
        KlBangMor {
            dom: a,
            cod: self.base.cod(f),
            m,
        }
    }

    /// Promotion f^! = !f ∘ dig : !A → !B of f : !A → B.
    pub fn promote(&self, f: &KlBangMor<C>) -> C::M {
        let dig = self.base.dig(&f.dom);
        self.base.comp(&self.base.bang_mor(&f.m), &dig)
    }
}

impl<'c, C: BangOps> Cat for KleisliBang<'c, C> {
    type O = C::O;
    type M = KlBangMor<C>;

    fn id(&self, o: &C::O) -> KlBangMor<C> {
        KlBangMor {
            dom: o.clone(),
            cod: o.clone(),
            m: self.base.der(o),
        }
    }

    fn comp(&self, g: &KlBangMor<C>, f: &KlBangMor<C>) -> KlBangMor<C> {
        assert_eq!(f.cod, g.dom, "Kleisli composition type mismatch");
        KlBangMor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            m: self.base.comp(&g.m, &self.promote(f)),
        }
    }

    fn dom(&self, m: &KlBangMor<C>) -> C::O {
        m.dom.clone()
    }
    fn cod(&self, m: &KlBangMor<C>) -> C::O {
        m.cod.clone()
    }

    fn hom(&self, a: &C::O, b: &C::O) -> Vec<KlBangMor<C>> {
        let ba = self.base.bang(a);
        self.base
            .hom(&ba, b)
            .into_iter()
            .map(|m| KlBangMor {
                dom: a.clone(),
                cod: b.clone(),
                m,
            })
            .collect()
    }

    fn hom_size(&self, a: &C::O, b: &C::O) -> Option<f64> {
        self.base.hom_size(&self.base.bang(a), b)
    }

    fn hom_basis(&self, a: &C::O, b: &C::O) -> Vec<KlBangMor<C>> {
        let ba = self.base.bang(a);
        self.base
            .hom_basis(&ba, b)
            .into_iter()
            .map(|m| KlBangMor {
                dom: a.clone(),
                cod: b.clone(),
                m,
            })
            .collect()
    }

    fn obj_weight(&self, o: &C::O) -> usize {
        self.base.obj_weight(o)
    }
    fn obj_label(&self, o: &C::O) -> String {
        self.base.obj_label(o)
    }
    fn mor_label(&self, m: &KlBangMor<C>) -> String {
        self.base.mor_label(&m.m)
    }
}

impl<'c, C: BangOps> CartesianOps for KleisliBang<'c, C> {
    fn top(&self) -> C::O {
        self.base.top()
    }

    fn to_top(&self, a: &C::O) -> KlBangMor<C> {
        KlBangMor {
            dom: a.clone(),
            cod: self.base.top(),
            m: self.base.to_top(&self.base.bang(a)),
        }
    }

    fn prod(&self, a: &C::O, b: &C::O) -> C::O {
        self.base.prod(a, b)
    }

    fn pr0(&self, a: &C::O, b: &C::O) -> KlBangMor<C> {
        self.embed(&self.base.pr0(a, b))
    }

    fn pr1(&self, a: &C::O, b: &C::O) -> KlBangMor<C> {
        self.embed(&self.base.pr1(a, b))
    }

    fn pair(&self, f: &KlBangMor<C>, g: &KlBangMor<C>) -> KlBangMor<C> {
        assert_eq!(f.dom, g.dom, "Kleisli pairing domain mismatch");
        KlBangMor {
            dom: f.dom.clone(),
            cod: self.base.prod(&f.cod, &g.cod),
            m: self.base.pair(&f.m, &g.m),
        }
    }
}

/// The closure of the Kleisli category: X ⇒ Y := !X ⊸ Y, transported through
/// the Seely isomorphism.
pub struct KleisliClosure;

impl<'c, C: BangOps + ClosedOps> KleisliBang<'c, C> {
    pub fn hom_obj(&self, a: &C::O, b: &C::O) -> C::O {
        self.base.hom_obj(&self.base.bang(a), b)
    }

    /// ev : (X ⇒ Y) & X → Y in the Kleisli category.
    pub fn kl_ev(&self, a: &C::O, b: &C::O) -> KlBangMor<C> {
        let h = self.hom_obj(a, b);
        let ba = self.base.bang(a);
        let unpack = self.base.m2_inv(&h, a);
        let der_h = self.base.der(&h);
        let step = self.base.tensor_mor(&der_h, &self.base.id(&ba));
        let ev = self.base.ev(&ba, b);
        let m = self.base.comp(&ev, &self.base.comp(&step, &unpack));
        KlBangMor {
            dom: self.base.prod(&h, a),
            cod: b.clone(),
            m,
        }
    }

    /// cur(f) : Z → (X ⇒ Y) for a Kleisli morphism f : Z & X → Y.
    pub fn kl_cur(&self, z: &C::O, a: &C::O, b: &C::O, f: &KlBangMor<C>) -> KlBangMor<C> {
        let m2 = self.base.m2(z, a);
        let packed = self.base.comp(&f.m, &m2);
        let bz = self.base.bang(z);
        let ba = self.base.bang(a);
        let m = ClosedOps::cur(self.base, &bz, &ba, b, &packed);
        KlBangMor {
            dom: z.clone(),
            cod: self.hom_obj(a, b),
            m,
        }
    }
}

/// A morphism of the Kleisli category of a monad: payload dom → T cod.
pub struct KlMonMor<C: Cat> {
    pub dom: C::O,
    pub cod: C::O,
    pub m: C::M,
}

impl<C: Cat> Clone for KlMonMor<C> {
    fn clone(&self) -> Self {
        KlMonMor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            m: self.m.clone(),
        }
    }
}

impl<C: Cat> PartialEq for KlMonMor<C> {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.m == other.m
    }
}

impl<C: Cat> Eq for KlMonMor<C> {}

impl<C: Cat> std::fmt::Debug for KlMonMor<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KlMonMor({:?} -> {:?}, {:?})", self.dom, self.cod, self.m)
    }
}

/// Kleisli category of a monad given as data.
pub struct KleisliMonad<'c, C: Cat> {
    pub base: &'c C,
    pub monad: MonadData<C>,
}

impl<'c, C: Cat + 'static> KleisliMonad<'c, C> {
    pub fn new(base: &'c C, monad: MonadData<C>) -> Self {
        KleisliMonad { base, monad }
    }

    pub fn wrap(&self, dom: &C::O, cod: &C::O, m: C::M) -> KlMonMor<C> {
        debug_assert_eq!(self.base.dom(&m), dom.clone());
        debug_assert_eq!(self.base.cod(&m), self.monad.functor.obj(self.base, cod));
        KlMonMor {
            dom: dom.clone(),
            cod: cod.clone(),
            m,
        }
    }

    /// The faithful embedding κ(f) = η ∘ f.
    pub fn embed(&self, f: &C::M) -> KlMonMor<C> {
        let b = self.base.cod(f);
        KlMonMor {
            dom: self.base.dom(f),
            cod: b.clone(),
            m: self.base.comp(&self.monad.eta(self.base, &b), f),
        }
    }
}

impl<'c, C: Cat + 'static> Cat for KleisliMonad<'c, C> {
    type O = C::O;
    type M = KlMonMor<C>;

    fn id(&self, o: &C::O) -> KlMonMor<C> {
        KlMonMor {
            dom: o.clone(),
            cod: o.clone(),
            m: self.monad.eta(self.base, o),
        }
    }

    fn comp(&self, g: &KlMonMor<C>, f: &KlMonMor<C>) -> KlMonMor<C> {
        assert_eq!(f.cod, g.dom, "Kleisli composition type mismatch");
        let tg = self.monad.functor.mor(self.base, &g.m);
        let mu = self.monad.mu(self.base, &g.cod);
        KlMonMor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            m: self.base.comp(&mu, &self.base.comp(&tg, &f.m)),
        }
    }

    fn dom(&self, m: &KlMonMor<C>) -> C::O {
        m.dom.clone()
    }
    fn cod(&self, m: &KlMonMor<C>) -> C::O {
        m.cod.clone()
    }

    fn hom(&self, a: &C::O, b: &C::O) -> Vec<KlMonMor<C>> {
        let tb = self.monad.functor.obj(self.base, b);
        self.base
            .hom(a, &tb)
            .into_iter()
            .map(|m| KlMonMor {
                dom: a.clone(),
                cod: b.clone(),
                m,
            })
            .collect()
    }

    fn hom_size(&self, a: &C::O, b: &C::O) -> Option<f64> {
        self.base.hom_size(a, &self.monad.functor.obj(self.base, b))
    }

    fn hom_basis(&self, a: &C::O, b: &C::O) -> Vec<KlMonMor<C>> {
        let tb = self.monad.functor.obj(self.base, b);
        self.base
            .hom_basis(a, &tb)
            .into_iter()
            .map(|m| KlMonMor {
                dom: a.clone(),
                cod: b.clone(),
                m,
            })
            .collect()
    }

    fn obj_weight(&self, o: &C::O) -> usize {
        self.base.obj_weight(o)
    }
    fn obj_label(&self, o: &C::O) -> String {
        self.base.obj_label(o)
    }
    fn mor_label(&self, m: &KlMonMor<C>) -> String {
        self.base.mor_label(&m.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::rel::Rel;
    use crate::models::coh::Coh;
    use crate::cat::Monoidal;

    #[test]
    fn kleisli_bang_identity_laws_in_rel() {
        let rel = Rel::new(2);
        let kl = KleisliBang::new(&rel);
        for na in 1..=2usize {
            for nb in 1..=2usize {
                let a = rel.base(na);
                let b = rel.base(nb);
                for f in kl.hom(&a, &b) {
                    assert_eq!(kl.comp(&kl.id(&b), &f), f, "left identity");
                    assert_eq!(kl.comp(&f, &kl.id(&a)), f, "right identity");
                }
            }
        }
    }

    #[test]
    fn embedding_of_identity_is_dereliction() {
        let rel = Rel::new(2);
        let kl = KleisliBang::new(&rel);
        let a = rel.base(2);
        assert_eq!(kl.embed(&rel.id(&a)), kl.id(&a));
    }

    #[test]
    fn promotion_of_dereliction_is_identity() {
        let rel = Rel::new(3);
        let kl = KleisliBang::new(&rel);
        let a = rel.base(2);
        let promoted = kl.promote(&kl.id(&a));
        assert_eq!(promoted, rel.id(&rel.bang(&a)));
    }

    #[test]
    fn promotion_is_functorial_on_enumerated_morphisms() {
        // (g ∘κ f)^! = g^! ∘ f^! over all Kleisli morphisms at size ≤ 2
        let rel = Rel::new(2);
        let kl = KleisliBang::new(&rel);
        let a = rel.base(1);
        let b = rel.base(2);
        let c = rel.base(1);
        for f in kl.hom(&a, &b) {
            for g in kl.hom(&b, &c) {
                let lhs = kl.promote(&kl.comp(&g, &f));
                let rhs = rel.comp(&kl.promote(&g), &kl.promote(&f));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn kleisli_associativity_on_coherence_spaces() {
        let coh = Coh::new();
        let kl = KleisliBang::new(&coh);
        let a = coh.discrete(2);
        let b = coh.discrete(1);
        // exhaustive over two small hom-sets
        for f in kl.hom(&a, &b) {
            for g in kl.hom(&b, &a) {
                for h in kl.hom(&a, &b) {
                    let lhs = kl.comp(&h, &kl.comp(&g, &f));
                    let rhs = kl.comp(&kl.comp(&h, &g), &f);
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let _ = coh.unit();
    }

    #[test]
    fn embedded_base_morphisms_compose_as_in_base() {
        let rel = Rel::new(2);
        let kl = KleisliBang::new(&rel);
        let a = rel.base(2);
        for f in rel.hom(&a, &a) {
            for g in rel.hom(&a, &a) {
                let lhs = kl.comp(&kl.embed(&g), &kl.embed(&f));
                let rhs = kl.embed(&rel.comp(&g, &f));
                assert_eq!(lhs, rhs, "κ is a functor");
            }
        }
    }
}
