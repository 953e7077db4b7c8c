//! Associated primes, local multiplicities, fundamental cycles and the
//! ordinal length `len M = ⊕_p lcl_p(M)·ω^dim(p)`.

use std::sync::Arc;

use crate::backend::{BackendRegistry, LocalMultiplicity, Restriction};
use crate::chow::{Cycle, PrimeSupport};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, Subquotient, DEFAULT_MAX_VARS};
use crate::ordinal::Ordinal;

/// Default iteration cap for [`Engine::find_e_open_power`].
pub const DEFAULT_E_OPEN_CAP: u32 = 32;

/// Entry point for every invariant computation; holds the selected local
/// multiplicity backend and the resource caps.
#[derive(Clone)]
pub struct Engine {
    backend: Arc<dyn LocalMultiplicity>,
    e_open_cap: u32,
    max_vars: usize,
}

/// Summary invariants of a module. `order` and `dimension` are `None` for
/// the zero module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicInvariants {
    pub order: Option<u32>,
    pub valence: u64,
    pub generic_length: u64,
    pub dimension: Option<u32>,
    pub is_unmixed: bool,
    pub no_embedded_primes: bool,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            backend: Arc::new(Restriction),
            e_open_cap: DEFAULT_E_OPEN_CAP,
            max_vars: DEFAULT_MAX_VARS,
        }
    }
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("backend", &self.backend.name())
            .field("e_open_cap", &self.e_open_cap)
            .field("max_vars", &self.max_vars)
            .finish()
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Engine using the backend registered under `name` in the built-in
    /// registry.
    pub fn with_backend(name: &str) -> Result<Self> {
        let backend = BackendRegistry::builtin().create(name)?;
        Ok(Engine {
            backend,
            ..Self::default()
        })
    }

    pub fn from_backend(backend: Arc<dyn LocalMultiplicity>) -> Self {
        Engine {
            backend,
            ..Self::default()
        }
    }

    pub fn e_open_cap(mut self, cap: u32) -> Self {
        self.e_open_cap = cap;
        self
    }

    pub fn max_vars(mut self, max: usize) -> Self {
        self.max_vars = max;
        self
    }

    pub fn backend_name(&self) -> &'static str {
        self.backend.name()
    }

    pub fn cap(&self) -> u32 {
        self.e_open_cap
    }

    pub fn check_vars(&self, n: usize) -> Result<()> {
        if n > self.max_vars {
            return Err(Error::TooManyVariables {
                count: n,
                max: self.max_vars,
            });
        }
        Ok(())
    }

    pub fn local_multiplicity(&self, m: &Subquotient, p: &PrimeSupport) -> u64 {
        self.backend.local_multiplicity(m, p)
    }

    /// `Ass(J/I)`, smallest primes first.
    ///
    /// `Ass(J/I) ⊆ Ass(R/I)`, whose members are generated by variables
    /// occurring in `I`, so only subsets of the support of `I` are tried.
    pub fn associated_primes(&self, m: &Subquotient) -> Vec<PrimeSupport> {
        self.fundamental_cycle(m).support().cloned().collect()
    }

    pub fn fundamental_cycle(&self, m: &Subquotient) -> Cycle {
        if m.is_zero() {
            return Cycle::zero();
        }
        let n = m.ambient();
        let support = m.lower().support();
        assert!(
            support.len() < 64,
            "too many variables for subset enumeration"
        );
        let mut terms = Vec::new();
        for mask in 0u64..(1u64 << support.len()) {
            let vars = support
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v);
            let p = PrimeSupport::new(n, vars);
            let mult = self.local_multiplicity(m, &p);
            if mult > 0 {
                terms.push((p, mult as i64));
            }
        }
        Cycle::from_terms(terms)
    }

    pub fn length(&self, m: &Subquotient) -> Ordinal {
        self.fundamental_cycle(m)
            .binord()
            .expect("fundamental cycles are effective")
    }

    /// `hd N = len(M/N)` for `N = k/I` inside `M = J/I`.
    pub fn height_rank(&self, outer: &Subquotient, k: &MonomialIdeal) -> Result<Ordinal> {
        Ok(self.length(&outer.quotient(k)?))
    }

    pub fn basic_invariants(&self, m: &Subquotient) -> BasicInvariants {
        let cycle = self.fundamental_cycle(m);
        let order = cycle.support().map(PrimeSupport::dim).min();
        let dimension = cycle.support().map(PrimeSupport::dim).max();
        let generic_length = cycle
            .terms()
            .filter(|(p, _)| Some(p.dim()) == dimension)
            .map(|(_, a)| a as u64)
            .sum();
        let ass: Vec<&PrimeSupport> = cycle.support().collect();
        let no_embedded_primes = ass
            .iter()
            .all(|p| ass.iter().all(|q| p == q || !p.contains(q)));
        BasicInvariants {
            order,
            valence: cycle.degree() as u64,
            generic_length,
            dimension,
            is_unmixed: order == dimension,
            no_embedded_primes,
        }
    }

    pub fn order(&self, m: &Subquotient) -> Result<u32> {
        self.basic_invariants(m)
            .order
            .ok_or(Error::ZeroModule("order"))
    }

    pub fn dimension(&self, m: &Subquotient) -> Result<u32> {
        self.basic_invariants(m)
            .dimension
            .ok_or(Error::ZeroModule("dimension"))
    }

    /// `D_i(M)`, the largest submodule of dimension at most `i`, returned as
    /// the submodule `K/I`. It is the `a`-torsion of `M` for `a` the
    /// intersection of the associated primes of dimension at most `i`.
    pub fn dimension_filtration(&self, m: &Subquotient, i: i64) -> Subquotient {
        let n = m.ambient();
        let low: Vec<PrimeSupport> = self
            .associated_primes(m)
            .into_iter()
            .filter(|p| i64::from(p.dim()) <= i)
            .collect();
        if low.is_empty() {
            return m.submodule(m.lower()).expect("I ⊆ I ⊆ J");
        }
        let a = low.iter().fold(MonomialIdeal::unit(n), |acc, p| {
            acc.intersection(&p.ideal()).expect("same ambient ring")
        });
        let k = m
            .lower()
            .saturation(&a)
            .and_then(|s| s.intersection(m.upper()))
            .and_then(|s| s.sum(m.lower()))
            .expect("same ambient ring");
        m.submodule(&k).expect("torsion lies between I and J")
    }

    /// `fcyc(N) + fcyc(M/N) - fcyc(M)` for `N = k/I`; effective whenever `M`
    /// has no embedded primes.
    pub fn cycle_defect(&self, m: &Subquotient, k: &MonomialIdeal) -> Result<Cycle> {
        let sub = self.fundamental_cycle(&m.submodule(k)?);
        let quot = self.fundamental_cycle(&m.quotient(k)?);
        Ok(sub.add(&quot).sub(&self.fundamental_cycle(m)))
    }

    /// A monomial submodule `K/I ⊆ M` of length `nu`, for any `nu ⪯ len M`.
    ///
    /// Terms of `nu` are realized from the highest exponent down. To add one
    /// copy of `ω^i` to a submodule `H` of length `θ`, pick an `i`-dimensional
    /// associated prime `p` of `M` where `H` is still locally smaller, and
    /// adjoin a monomial `x ∈ J \ H` with `(H : x) = p` exactly. The result
    /// has length `θ` or `θ ⊕ ω^i`; in the first case `H` grows and the step
    /// repeats.
    pub fn construct_submodule_of_length(
        &self,
        m: &Subquotient,
        nu: &Ordinal,
    ) -> Result<MonomialIdeal> {
        let mu = self.length(m);
        if !nu.weaker(&mu) {
            return Err(Error::NotWeaker {
                requested: nu.clone(),
                length: mu,
            });
        }
        let ass = self.associated_primes(m);
        let mut h = m.lower().clone();
        let mut theta = Ordinal::zero();
        for (exp, coeff) in nu.terms().map(|(e, c)| (e, c.clone())).collect::<Vec<_>>() {
            let mut remaining = coeff;
            while remaining > 0u32.into() {
                let target = theta.shuffle_sum(&Ordinal::omega_pow(exp));
                h = self.adjoin_step(m, &ass, h, exp, &target)?;
                theta = target;
                remaining -= 1u32;
            }
        }
        debug_assert_eq!(self.length(&m.submodule(&h)?), *nu);
        Ok(h)
    }

    fn adjoin_step(
        &self,
        m: &Subquotient,
        ass: &[PrimeSupport],
        mut h: MonomialIdeal,
        exp: u32,
        target: &Ordinal,
    ) -> Result<MonomialIdeal> {
        let n = m.ambient();
        // Each pass either finishes or strictly enlarges h.
        const MAX_PASSES: usize = 100_000;
        for _ in 0..MAX_PASSES {
            let sub = m.submodule(&h)?;
            let p = ass
                .iter()
                .filter(|p| p.dim() == exp)
                .find(|p| self.local_multiplicity(&sub, p) < self.local_multiplicity(m, p))
                .ok_or_else(|| Error::SubmoduleSearchFailed(target.clone()))?;
            let outside: Vec<usize> = (0..n).filter(|v| !p.vars().contains(v)).collect();
            let killed = h.colon(&p.ideal())?.intersection(m.upper())?;
            let unit_outside = MonomialIdeal::new(
                n,
                [Monomial::new(
                    (0..n).map(|v| u32::from(outside.contains(&v))).collect(),
                )],
            );
            let dies = h.saturation(&unit_outside)?;
            let x = killed
                .gens()
                .iter()
                .find(|g| !dies.contains(g))
                .cloned()
                .ok_or_else(|| Error::SubmoduleSearchFailed(target.clone()))?;
            h = h.sum(&MonomialIdeal::new(n, [x]))?;
            let len = self.length(&m.submodule(&h)?);
            if len == *target {
                return Ok(h);
            }
        }
        Err(Error::SubmoduleSearchFailed(target.clone()))
    }
}
