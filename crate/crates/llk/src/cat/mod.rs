//! Executable finite categories: the core trait, structure bundles, a
//! commuting-diagram checker, Kleisli constructions and law suites.

pub mod diagram;
pub mod kleisli;
pub mod suites;

use std::fmt::Debug;
use std::hash::Hash;

/// A finite category: enumerable objects-by-request, finite hom-sets with
/// decidable equality, identities and composition.
pub trait Cat {
    type O: Clone + Eq + Hash + Debug;
    type M: Clone + Eq + Debug;

    fn id(&self, o: &Self::O) -> Self::M;
    /// g ∘ f. Panics if cod(f) ≠ dom(g); the diagram checker type-checks
    /// paths before evaluating them.
    fn comp(&self, g: &Self::M, f: &Self::M) -> Self::M;
    fn dom(&self, m: &Self::M) -> Self::O;
    fn cod(&self, m: &Self::M) -> Self::O;

    /// Exhaustive hom-set enumeration. May be large; callers guard sizes.
    fn hom(&self, a: &Self::O, b: &Self::O) -> Vec<Self::M>;

    /// Number of morphisms a full enumeration would return, if finite and
    /// cheaply computable (used to decide whether exhaustive loops are safe).
    fn hom_size(&self, a: &Self::O, b: &Self::O) -> Option<f64>;

    /// A small generating family for hom(a,b), sufficient for laws that are
    /// linear in the morphism (union/sum-linear models override this).
    fn hom_basis(&self, a: &Self::O, b: &Self::O) -> Vec<Self::M> {
        self.hom(a, b)
    }

    /// Used to order counterexamples (smallest instantiation first).
    fn obj_weight(&self, o: &Self::O) -> usize;
    fn obj_label(&self, o: &Self::O) -> String;
    fn mor_label(&self, m: &Self::M) -> String;
}

/// Symmetric monoidal structure.
pub trait Monoidal: Cat {
    fn unit(&self) -> Self::O;
    fn tensor(&self, a: &Self::O, b: &Self::O) -> Self::O;
    fn tensor_mor(&self, f: &Self::M, g: &Self::M) -> Self::M;
    /// α : (A⊗B)⊗C → A⊗(B⊗C)
    fn alpha(&self, a: &Self::O, b: &Self::O, c: &Self::O) -> Self::M;
    fn alpha_inv(&self, a: &Self::O, b: &Self::O, c: &Self::O) -> Self::M;
    /// λ : 1⊗A → A
    fn lambda(&self, a: &Self::O) -> Self::M;
    fn lambda_inv(&self, a: &Self::O) -> Self::M;
    /// ρ : A⊗1 → A
    fn rho(&self, a: &Self::O) -> Self::M;
    fn rho_inv(&self, a: &Self::O) -> Self::M;
    /// γ : A⊗B → B⊗A
    fn gamma(&self, a: &Self::O, b: &Self::O) -> Self::M;
}

/// Cartesian structure: final object and binary products.
pub trait CartesianOps: Cat {
    fn top(&self) -> Self::O;
    /// e_A : A → ⊤, the unique morphism.
    fn to_top(&self, a: &Self::O) -> Self::M;
    fn prod(&self, a: &Self::O, b: &Self::O) -> Self::O;
    fn pr0(&self, a: &Self::O, b: &Self::O) -> Self::M;
    fn pr1(&self, a: &Self::O, b: &Self::O) -> Self::M;
    fn pair(&self, f: &Self::M, g: &Self::M) -> Self::M;

    /// Δ = ⟨id, id⟩.
    fn diag(&self, a: &Self::O) -> Self::M {
        let i = self.id(a);
        self.pair(&i, &i)
    }
    /// f × g = ⟨f∘pr0, g∘pr1⟩.
    fn prod_mor(&self, f: &Self::M, g: &Self::M) -> Self::M {
        let a = self.dom(f);
        let b = self.dom(g);
        let l = self.comp(f, &self.pr0(&a, &b));
        let r = self.comp(g, &self.pr1(&a, &b));
        self.pair(&l, &r)
    }
}

/// Closure with regard to the monoidal product.
pub trait ClosedOps: Monoidal {
    fn hom_obj(&self, a: &Self::O, b: &Self::O) -> Self::O;
    /// ev : (A ⊸ B) ⊗ A → B
    fn ev(&self, a: &Self::O, b: &Self::O) -> Self::M;
    /// cur(f) : Z → (A ⊸ B) for f : Z ⊗ A → B.
    fn cur(&self, z: &Self::O, a: &Self::O, b: &Self::O, f: &Self::M) -> Self::M;
}

/// Exponential comonad with Seely isomorphisms.
pub trait BangOps: Monoidal + CartesianOps {
    fn bang(&self, a: &Self::O) -> Self::O;
    fn bang_mor(&self, f: &Self::M) -> Self::M;
    /// der_A : !A → A
    fn der(&self, a: &Self::O) -> Self::M;
    /// dig_A : !A → !!A
    fn dig(&self, a: &Self::O) -> Self::M;
    /// m0 : 1 → !⊤ (iso)
    fn m0(&self) -> Self::M;
    fn m0_inv(&self) -> Self::M;
    /// m2 : !A ⊗ !B → !(A & B) (iso)
    fn m2(&self, a: &Self::O, b: &Self::O) -> Self::M;
    fn m2_inv(&self, a: &Self::O, b: &Self::O) -> Self::M;

    /// weak_A : !A → 1, lifted from e_A through the Seely isomorphisms.
    fn weak(&self, a: &Self::O) -> Self::M {
        let e = self.to_top(a);
        self.comp(&self.m0_inv(), &self.bang_mor(&e))
    }
    /// contr_A : !A → !A ⊗ !A, lifted from Δ_A.
    fn contr(&self, a: &Self::O) -> Self::M {
        let d = self.diag(a);
        self.comp(&self.m2_inv(a, a), &self.bang_mor(&d))
    }
    /// μ2 : !A ⊗ !B → !(!A ⊗ !B), the promotion carrier for binary contexts,
    /// defined as !(m2⁻¹) ∘ dig ∘ m2.
    fn mu2(&self, a: &Self::O, b: &Self::O) -> Self::M {
        let m2 = self.m2(a, b);
        let ab = self.prod(a, b);
        let dig = self.dig(&ab);
        let unpack = self.bang_mor(&self.m2_inv(a, b));
        self.comp(&unpack, &self.comp(&dig, &m2))
    }
    /// μ0 : 1 → !1, the promotion carrier for empty contexts.
    fn mu0(&self) -> Self::M {
        let m0 = self.m0();
        let dig = self.dig(&self.top());
        let unpack = self.bang_mor(&self.m0_inv());
        self.comp(&unpack, &self.comp(&dig, &m0))
    }
    /// Lax monoidal structure !X ⊗ !Y → !(X ⊗ Y).
    fn lax_m2(&self, a: &Self::O, b: &Self::O) -> Self::M {
        let ders = self.tensor_mor(&self.der(a), &self.der(b));
        self.comp(&self.bang_mor(&ders), &self.mu2(a, b))
    }
}

/// Hom-set commutative monoids (the paper's sense of an additive model).
pub trait AdditiveOps: Cat {
    fn zero(&self, a: &Self::O, b: &Self::O) -> Self::M;
    fn plus(&self, f: &Self::M, g: &Self::M) -> Self::M;
}

/// Differential structure over the exponential.
pub trait DiffOps: BangOps + AdditiveOps {
    /// coDer_X : X → !X
    fn coder(&self, a: &Self::O) -> Self::M;
    /// coWeak_X : 1 → !X
    fn coweak(&self, a: &Self::O) -> Self::M;
    /// coContr_X : !X ⊗ !X → !X
    fn cocontr(&self, a: &Self::O) -> Self::M;
    /// ∂̄_X : !X ⊗ X → !X = coContr ∘ (id ⊗ coDer)
    fn dbar(&self, a: &Self::O) -> Self::M {
        let ba = self.bang(a);
        let idb = self.id(&ba);
        let step = self.tensor_mor(&idb, &self.coder(a));
        self.comp(&self.cocontr(a), &step)
    }
}

/// Compose a chain left-to-right: `chain(c, [f, g, h]) = h ∘ g ∘ f`.
pub fn chain<C: Cat>(c: &C, mors: &[C::M]) -> C::M {
    let mut it = mors.iter();
    let first = it.next().expect("chain of at least one morphism").clone();
    it.fold(first, |acc, m| c.comp(m, &acc))
}
