//! Monomials, monomial ideals and subquotients `J/I` of a polynomial ring
//! `k[x_0, .., x_{n-1}]`.
//!
//! The base field never appears: every invariant of a monomial subquotient
//! is determined by the combinatorics of exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the number of ring variables.
pub const DEFAULT_MAX_VARS: usize = 16;

/// An exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn ambient(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Product; panics on exponent overflow rather than wrapping.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Sets the exponents of every variable outside `keep` to zero.
    pub fn restrict(&self, keep: &[usize]) -> Monomial {
        Monomial(
            self.0
                .iter()
                .enumerate()
                .map(|(i, e)| if keep.contains(&i) { *e } else { 0 })
                .collect(),
        )
    }

    /// Renders with the given variable names, e.g. `x^2*y`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                if *e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Degree first; among equal degrees, larger exponents on earlier variables
/// come first (so `x^2 < x*y < y^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal given by its minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reduced to its minimal
    /// generators.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(all.iter().all(|g| g.ambient() == n));
        all.sort();
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for g in all {
            // sorted by degree, so only earlier entries can divide g
            if !gens.iter().any(|h| h.divides(&g)) {
                gens.push(g);
            }
        }
        MonomialIdeal { n, gens }
    }

    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Self {
        Self::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The prime `(x_i : i ∈ vars)`.
    pub fn generated_by_vars(n: usize, vars: &[usize]) -> Self {
        Self::new(n, vars.iter().map(|&i| Monomial::var(n, i)))
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.gens.iter().any(|g| g.0[i] > 0))
            .collect()
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        (0..self.n)
            .map(|i| self.gens.iter().map(|g| g.0[i]).max().unwrap_or(0))
            .collect()
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        Ok(Self::new(
            self.n,
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        Ok(Self::new(self.n, lcms))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let prods = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)));
        Ok(Self::new(self.n, prods))
    }

    /// `self^k`, with `self^0 = (1)`.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = Self::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self).expect("same ambient ring");
        }
        acc
    }

    /// `(self : m)`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        Self::new(self.n, self.gens.iter().map(|g| g.strip(m)))
    }

    /// `(self : other)`; the colon by the zero ideal is `(1)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut acc = Self::unit(self.n);
        for g in &other.gens {
            acc = acc.intersection(&self.colon_monomial(g))?;
        }
        Ok(acc)
    }

    /// `(self : other^∞)`, the stable value of iterated colons.
    pub fn saturation(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(other)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Image under `x_j ↦ 1` for every `j` outside `keep`.
    pub fn restrict(&self, keep: &[usize]) -> MonomialIdeal {
        Self::new(self.n, self.gens.iter().map(|g| g.restrict(keep)))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.n)))
    }
}

/// `x, y, z, w` for up to four variables, `x0, x1, ..` beyond.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "w"][..n]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("x{i}")).collect()
    }
}

/// The module `upper / lower` for monomial ideals `lower ⊆ upper`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subquotient {
    lower: MonomialIdeal,
    upper: MonomialIdeal,
}

impl Subquotient {
    pub fn new(lower: MonomialIdeal, upper: MonomialIdeal) -> Result<Self> {
        lower.check(&upper)?;
        if !lower.is_subset(&upper) {
            return Err(Error::NotNested);
        }
        Ok(Subquotient { lower, upper })
    }

    /// The cyclic module `R/I`.
    pub fn cyclic(lower: MonomialIdeal) -> Self {
        let upper = MonomialIdeal::unit(lower.ambient());
        Subquotient { lower, upper }
    }

    pub fn lower(&self) -> &MonomialIdeal {
        &self.lower
    }

    pub fn upper(&self) -> &MonomialIdeal {
        &self.upper
    }

    pub fn ambient(&self) -> usize {
        self.lower.ambient()
    }

    pub fn is_zero(&self) -> bool {
        self.lower == self.upper
    }

    pub fn is_cyclic(&self) -> bool {
        self.upper.is_unit()
    }

    /// Whether `lower ⊆ k ⊆ upper`, i.e. `k/lower` is a submodule.
    pub fn admits(&self, k: &MonomialIdeal) -> bool {
        self.lower.is_subset(k) && k.is_subset(&self.upper)
    }

    fn checked(&self, k: &MonomialIdeal) -> Result<()> {
        self.lower.check(k)?;
        if !self.admits(k) {
            return Err(Error::InclusionViolation);
        }
        Ok(())
    }

    /// The submodule `k/lower`.
    pub fn submodule(&self, k: &MonomialIdeal) -> Result<Subquotient> {
        self.checked(k)?;
        Ok(Subquotient {
            lower: self.lower.clone(),
            upper: k.clone(),
        })
    }

    /// The quotient `upper/k` of this module by `k/lower`.
    pub fn quotient(&self, k: &MonomialIdeal) -> Result<Subquotient> {
        self.checked(k)?;
        Ok(Subquotient {
            lower: k.clone(),
            upper: self.upper.clone(),
        })
    }
}
