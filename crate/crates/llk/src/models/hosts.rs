//! Diagram-host wiring: exposes each model's structure bundles to the
//! generic diagram checker under stable generator names.

use super::coh::Coh;
use super::finset::FinSet;
use super::rel::Rel;
use crate::cat::diagram::{gen_core, gen_diff, obj_full, DiagHost, OExpr};
use crate::cat::{AdditiveOps, CartesianOps, ClosedOps, Monoidal};

impl DiagHost for FinSet {
    fn op_obj(&self, e: &OExpr, env: &[Self::O]) -> Result<Self::O, String> {
        obj_full(self, e, env)
    }
    fn op_gen(&self, name: &str, objs: &[Self::O]) -> Result<Self::M, String> {
        gen_core(self, name, objs).unwrap_or_else(|| Err(format!("finset: no generator '{name}'")))
    }
    fn op_tensor_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String> {
        Ok(self.tensor_mor(f, g))
    }
    fn op_pair_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String> {
        Ok(self.pair(f, g))
    }
    fn op_bang_m(&self, f: &Self::M) -> Result<Self::M, String> {
        Ok(f.clone())
    }
    fn op_plus_m(&self, _f: &Self::M, _g: &Self::M) -> Result<Self::M, String> {
        Err("finset has no morphism sums".into())
    }
    fn op_cur(&self, z: &Self::O, a: &Self::O, b: &Self::O, f: &Self::M) -> Result<Self::M, String> {
        Ok(ClosedOps::cur(self, z, a, b, f))
    }
}

impl DiagHost for Coh {
    fn op_obj(&self, e: &OExpr, env: &[Self::O]) -> Result<Self::O, String> {
        obj_full(self, e, env)
    }
    fn op_gen(&self, name: &str, objs: &[Self::O]) -> Result<Self::M, String> {
        gen_core(self, name, objs).unwrap_or_else(|| Err(format!("coh: no generator '{name}'")))
    }
    fn op_tensor_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String> {
        Ok(self.tensor_mor(f, g))
    }
    fn op_pair_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String> {
        Ok(self.pair(f, g))
    }
    fn op_bang_m(&self, f: &Self::M) -> Result<Self::M, String> {
        Ok(crate::cat::BangOps::bang_mor(self, f))
    }
    fn op_plus_m(&self, _f: &Self::M, _g: &Self::M) -> Result<Self::M, String> {
        Err("coh has no morphism sums".into())
    }
    fn op_cur(&self, z: &Self::O, a: &Self::O, b: &Self::O, f: &Self::M) -> Result<Self::M, String> {
        Ok(ClosedOps::cur(self, z, a, b, f))
    }
}

impl DiagHost for Rel {
    fn op_obj(&self, e: &OExpr, env: &[Self::O]) -> Result<Self::O, String> {
        obj_full(self, e, env)
    }
    fn op_gen(&self, name: &str, objs: &[Self::O]) -> Result<Self::M, String> {
        gen_core(self, name, objs)
            .or_else(|| gen_diff(self, name, objs))
            .unwrap_or_else(|| Err(format!("rel: no generator '{name}'")))
    }
    fn op_tensor_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String> {
        Ok(self.tensor_mor(f, g))
    }
    fn op_pair_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String> {
        Ok(self.pair(f, g))
    }
    fn op_bang_m(&self, f: &Self::M) -> Result<Self::M, String> {
        Ok(crate::cat::BangOps::bang_mor(self, f))
    }
    fn op_plus_m(&self, f: &Self::M, g: &Self::M) -> Result<Self::M, String> {
        Ok(self.plus(f, g))
    }
    fn op_cur(&self, z: &Self::O, a: &Self::O, b: &Self::O, f: &Self::M) -> Result<Self::M, String> {
        Ok(ClosedOps::cur(self, z, a, b, f))
    }
}
