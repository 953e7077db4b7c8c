//! Brute-force counterparts of the engine, plus seeded random instances.
//!
//! Nothing here goes through [`MonomialIdeal::restrict`] or the torsion box of
//! [`crate::backend`]; agreement between the two routes is what the test
//! suites check.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::backend::LocalMultiplicity;
use crate::chow::PrimeSupport;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, Subquotient};
use crate::topology::monomials_up_to;

/// Local multiplicity through the global `p`-torsion `(I : p^∞) ∩ J`.
///
/// A monomial `u` in the variables of `p` contributes one basis element of
/// the localized torsion when `u·X^N` lies in the torsion but not in `I`,
/// with `X` the product of the remaining variables and `N` large enough that
/// membership has stabilized.
#[derive(Clone, Copy, Debug, Default)]
pub struct GlobalTorsion;

impl LocalMultiplicity for GlobalTorsion {
    fn name(&self) -> &'static str {
        "global-torsion"
    }

    fn local_multiplicity(&self, m: &Subquotient, p: &PrimeSupport) -> u64 {
        oracle_lcl(m, p)
    }
}

pub fn oracle_lcl(m: &Subquotient, p: &PrimeSupport) -> u64 {
    let n = m.ambient();
    let (lower, upper) = (m.lower(), m.upper());
    let torsion = lower
        .saturation(&p.ideal())
        .and_then(|t| t.intersection(upper))
        .expect("same ambient ring");
    let big = [lower, upper, &torsion]
        .iter()
        .flat_map(|i| i.gens())
        .flat_map(|g| g.exponents().iter().copied())
        .max()
        .unwrap_or(0)
        + 1;
    let inside: Vec<usize> = p.vars().to_vec();
    let stretch = Monomial::new(
        (0..n)
            .map(|v| if inside.contains(&v) { 0 } else { big })
            .collect(),
    );
    // Torsion monomials have degree below the sum of the largest exponents
    // of I; the bound is deliberately loose.
    let maxima = lower.max_exponents();
    let degree_bound: u32 = inside.iter().map(|&v| maxima[v]).sum();
    monomials_up_to(inside.len(), degree_bound)
        .map(|small| {
            let mut exps = vec![0; n];
            for (k, &v) in inside.iter().enumerate() {
                exps[v] = small.exponents()[k];
            }
            Monomial::new(exps).mul(&stretch)
        })
        .filter(|w| torsion.contains(w) && !lower.contains(w))
        .count() as u64
}

/// Whether every variable acts nilpotently on `J/I`.
pub fn is_artinian(m: &Subquotient) -> bool {
    let n = m.ambient();
    (0..n).all(|v| {
        let var = MonomialIdeal::new(n, [Monomial::var(n, v)]);
        m.upper()
            .is_subset(&m.lower().saturation(&var).expect("same ambient ring"))
    })
}

/// Number of monomials in `J \ I` for an Artinian `J/I`.
pub fn oracle_artinian_length(m: &Subquotient) -> Result<u64> {
    if !is_artinian(m) {
        return Err(Error::NotArtinian);
    }
    let bounds = m.lower().max_exponents();
    let mut count = 0;
    let mut exps = vec![0u32; m.ambient()];
    loop {
        let u = Monomial::new(exps.clone());
        if m.upper().contains(&u) && !m.lower().contains(&u) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == exps.len() {
                return Ok(count);
            }
            exps[k] += 1;
            if exps[k] <= bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// Krull dimension of `R/I` as `n` minus the smallest set of variables
/// meeting the support of every generator. `None` for `I = (1)`.
pub fn krull_dimension(i: &MonomialIdeal) -> Option<u32> {
    if i.is_unit() {
        return None;
    }
    let n = i.ambient();
    let supports: Vec<u64> = i
        .gens()
        .iter()
        .map(|g| g.support().fold(0u64, |acc, v| acc | 1 << v))
        .collect();
    let cover = (0u64..1 << n)
        .filter(|mask| supports.iter().all(|s| s & mask != 0))
        .map(|mask| mask.count_ones())
        .min()
        .expect("the full variable set covers every non-constant generator");
    Some(n as u32 - cover)
}

/// Size limits for [`random_instance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_degree: u32,
}

impl Profile {
    pub const DEFAULT: Profile = Profile {
        max_vars: 4,
        max_gens: 6,
        max_degree: 5,
    };
    pub const STRESS: Profile = Profile {
        max_vars: 6,
        max_gens: 6,
        max_degree: 8,
    };
}

impl Default for Profile {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Nested ideals `I ⊆ K ⊆ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub lower: MonomialIdeal,
    pub middle: MonomialIdeal,
    pub upper: MonomialIdeal,
}

impl Chain {
    pub fn module(&self) -> Subquotient {
        Subquotient::new(self.lower.clone(), self.upper.clone()).expect("chain is nested")
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(1..=max_degree);
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

fn random_ideal(rng: &mut ChaCha8Rng, n: usize, profile: Profile) -> MonomialIdeal {
    let count = rng.gen_range(1..=profile.max_gens);
    MonomialIdeal::new(
        n,
        (0..count).map(|_| random_monomial(rng, n, profile.max_degree)),
    )
}

/// A random chain `I ⊆ K ⊆ J`, deterministic in `seed`.
///
/// `K` and `J` are built by adjoining monomials (or, for `J`, sometimes
/// taking the unit ideal), so the inclusions hold by construction. Proper
/// inclusions are attempted whenever a monomial outside the smaller ideal
/// is available.
pub fn random_chain(seed: u64, profile: Profile) -> Chain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=profile.max_vars);
    let lower = random_ideal(&mut rng, n, profile);
    let upper = if rng.gen_bool(0.5) {
        MonomialIdeal::unit(n)
    } else {
        grow(&mut rng, &lower, profile)
    };
    let between: Vec<Monomial> = monomials_up_to(n, profile.max_degree)
        .filter(|u| upper.contains(u) && !lower.contains(u))
        .collect();
    let middle = if between.is_empty() {
        lower.clone()
    } else {
        let take = rng.gen_range(1..=between.len().min(3));
        let picked: Vec<Monomial> = between.choose_multiple(&mut rng, take).cloned().collect();
        lower
            .sum(&MonomialIdeal::new(n, picked))
            .expect("same ambient ring")
    };
    Chain {
        lower,
        middle,
        upper,
    }
}

fn grow(rng: &mut ChaCha8Rng, base: &MonomialIdeal, profile: Profile) -> MonomialIdeal {
    let n = base.ambient();
    let extra = rng.gen_range(1..=2);
    let outside: Vec<Monomial> = monomials_up_to(n, profile.max_degree)
        .filter(|u| !base.contains(u))
        .collect();
    if outside.is_empty() {
        return base.clone();
    }
    let picked: Vec<Monomial> = outside.choose_multiple(rng, extra).cloned().collect();
    base.sum(&MonomialIdeal::new(n, picked))
        .expect("same ambient ring")
}

/// The module `J/I` of [`random_chain`].
pub fn random_instance(seed: u64, profile: Profile) -> Subquotient {
    random_chain(seed, profile).module()
}

/// Candidate primes: every subset of the variables.
pub fn all_primes(n: usize) -> impl Iterator<Item = PrimeSupport> {
    (0u64..1 << n).map(move |mask| PrimeSupport::new(n, (0..n).filter(|v| mask >> v & 1 == 1)))
}
