//! Interchangeable routes to the local multiplicity `lcl_p(J/I)`.
//!
//! Every invariant in this crate is built from local multiplicities, so the
//! computation is a trait object selected by name. Two implementations ship:
//!
//! - `restriction`: localize by setting the variables outside `p` to one,
//!   then count the torsion monomials of the restricted quotient inside
//!   the exponent box of its generators.
//! - `global-torsion`: saturate by `p` in the full ring and count the
//!   classes of torsion monomials that survive inverting the variables
//!   outside `p` (see [`crate::oracle`]).
//!
//! The two routes share only the ideal arithmetic, and the test suites check
//! that they agree.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chow::PrimeSupport;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, Subquotient};
use crate::oracle::GlobalTorsion;

pub trait LocalMultiplicity: Send + Sync {
    fn name(&self) -> &'static str;

    /// Length of the `p`-torsion of the localization of `m` at `p`.
    fn local_multiplicity(&self, m: &Subquotient, p: &PrimeSupport) -> u64;
}

type Constructor = fn() -> Arc<dyn LocalMultiplicity>;

/// Name → constructor table for [`LocalMultiplicity`] backends.
#[derive(Clone)]
pub struct BackendRegistry {
    entries: BTreeMap<&'static str, Constructor>,
}

impl BackendRegistry {
    pub fn empty() -> Self {
        BackendRegistry {
            entries: BTreeMap::new(),
        }
    }

    /// Registry holding the built-in backends.
    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        reg.register("restriction", || Arc::new(Restriction));
        reg.register("global-torsion", || Arc::new(GlobalTorsion));
        reg
    }

    pub fn register(&mut self, name: &'static str, ctor: Constructor) {
        self.entries.insert(name, ctor);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn create(&self, name: &str) -> Result<Arc<dyn LocalMultiplicity>> {
        self.entries
            .get(name)
            .map(|ctor| ctor())
            .ok_or_else(|| Error::UnknownBackend(name.to_string()))
    }
}

impl Default for BackendRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Localization by restriction followed by a torsion-box count.
#[derive(Clone, Copy, Debug, Default)]
pub struct Restriction;

impl LocalMultiplicity for Restriction {
    fn name(&self) -> &'static str {
        "restriction"
    }

    fn local_multiplicity(&self, m: &Subquotient, p: &PrimeSupport) -> u64 {
        let vars = p.vars();
        let lower = m.lower().restrict(vars);
        let upper = m.upper().restrict(vars);
        torsion_box_monomials(&lower, vars)
            .into_iter()
            .filter(|u| upper.contains(u))
            .count() as u64
    }
}

/// Monomials in the variables `vars` that are torsion modulo `i` with
/// respect to `(x_v : v ∈ vars)`, where `i` only involves `vars`.
///
/// Torsion monomials have `exp_v < c_v` for the largest exponent `c_v` of
/// `x_v` among the generators, since raising an exponent past `c_v` never
/// changes membership in `i`.
pub fn torsion_box_monomials(i: &crate::monomial::MonomialIdeal, vars: &[usize]) -> Vec<Monomial> {
    if i.is_unit() {
        return Vec::new();
    }
    let n = i.ambient();
    let maxima = i.max_exponents();
    let bounds: Vec<u32> = vars.iter().map(|&v| maxima[v]).collect();
    let prime = crate::monomial::MonomialIdeal::generated_by_vars(n, vars);
    let sat = i.saturation(&prime).expect("same ambient ring");
    box_monomials(n, vars, &bounds)
        .filter(|u| !i.contains(u) && sat.contains(u))
        .collect()
}

/// Monomials supported on `vars` with `exp_{vars[k]} < bounds[k]`.
pub(crate) fn box_monomials<'a>(
    n: usize,
    vars: &'a [usize],
    bounds: &'a [u32],
) -> impl Iterator<Item = Monomial> + 'a {
    let empty = bounds.contains(&0);
    let mut digits = vec![0u32; vars.len()];
    let mut done = empty;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut exps = vec![0u32; n];
        for (k, &v) in vars.iter().enumerate() {
            exps[v] = digits[k];
        }
        // odometer step
        done = true;
        for k in 0..digits.len() {
            digits[k] += 1;
            if digits[k] < bounds[k] {
                done = false;
                break;
            }
            digits[k] = 0;
        }
        Some(Monomial::new(exps))
    })
}
