//! Cycles on the monomial primes of a polynomial ring.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{default_names, MonomialIdeal};
use crate::ordinal::Ordinal;

/// The monomial prime `(x_i : i ∈ vars)` of `k[x_0, .., x_{n-1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    vars: Vec<usize>,
    ambient: usize,
}

impl PrimeSupport {
    pub fn new(ambient: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        assert!(
            vars.iter().all(|&v| v < ambient),
            "variable index out of range"
        );
        PrimeSupport { vars, ambient }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Krull dimension of `R/p`.
    pub fn dim(&self) -> u32 {
        (self.ambient - self.vars.len()) as u32
    }

    pub fn contains(&self, other: &PrimeSupport) -> bool {
        other.vars.iter().all(|v| self.vars.contains(v))
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::generated_by_vars(self.ambient, &self.vars)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.vars.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<&str> = self.vars.iter().map(|&v| names[v].as_str()).collect();
        format!("({})", parts.join(","))
    }
}

/// Smaller primes first, then lexicographic on the variable indices.
impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient, self.vars.len(), &self.vars).cmp(&(
            other.ambient,
            other.vars.len(),
            &other.vars,
        ))
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.ambient)))
    }
}

/// A finite formal sum `Σ a_i [p_i]` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cycle {
    terms: BTreeMap<PrimeSupport, i64>,
}

impl Cycle {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn point(p: PrimeSupport, mult: i64) -> Self {
        Self::from_terms([(p, mult)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PrimeSupport, i64)>) -> Self {
        let mut out = Cycle::zero();
        for (p, a) in terms {
            out.add_term(p, a);
        }
        out
    }

    fn add_term(&mut self, p: PrimeSupport, a: i64) {
        let entry = self.terms.entry(p.clone()).or_insert(0);
        *entry = entry.checked_add(a).expect("cycle coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &PrimeSupport) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PrimeSupport, i64)> + '_ {
        self.terms.iter().map(|(p, a)| (p, *a))
    }

    pub fn support(&self) -> impl Iterator<Item = &PrimeSupport> + '_ {
        self.terms.keys()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&a| a >= 0)
    }

    /// Sum of the coefficients.
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Cycle) -> Cycle {
        let mut out = self.clone();
        for (p, a) in other.terms() {
            out.add_term(p.clone(), a);
        }
        out
    }

    pub fn sub(&self, other: &Cycle) -> Cycle {
        let mut out = self.clone();
        for (p, a) in other.terms() {
            out.add_term(p.clone(), -a);
        }
        out
    }

    /// Coefficient-wise `self ⪯ other`.
    pub fn leq(&self, other: &Cycle) -> bool {
        other.sub(self).is_effective()
    }

    /// `⊕ a_i ω^dim(p_i)`; only defined for effective cycles.
    pub fn binord(&self) -> Result<Ordinal> {
        if !self.is_effective() {
            return Err(Error::NotEffective);
        }
        Ok(Ordinal::from_terms(
            self.terms().map(|(p, a)| (p.dim(), a as u64)),
        ))
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (p, a)) in self.terms().enumerate() {
            let sign = if a < 0 { "-" } else { "+" };
            if k == 0 {
                if a < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if a.abs() != 1 {
                out.push_str(&a.abs().to_string());
            }
            out.push_str(&format!("[{}]", p.render(names)));
        }
        out
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.terms.keys().next().map_or(0, PrimeSupport::ambient);
        f.write_str(&self.render(&default_names(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vars: &[usize]) -> PrimeSupport {
        PrimeSupport::new(3, vars.iter().copied())
    }

    #[test]
    fn prime_dimension() {
        assert_eq!(p(&[]).dim(), 3);
        assert_eq!(p(&[0, 1]).dim(), 1);
        assert_eq!(p(&[0, 1, 2]).dim(), 0);
        assert!(p(&[0, 1]).contains(&p(&[0])));
        assert_eq!(p(&[1, 0]).to_string(), "(x,y)");
    }

    #[test]
    fn arithmetic() {
        let xy = p(&[0, 1]);
        let x = p(&[0]);
        let three = Cycle::point(xy.clone(), 3);
        assert_eq!(three.add(&Cycle::zero()), three);
        let d = Cycle::from_terms([(x.clone(), 1), (xy.clone(), 1)]);
        assert_eq!(
            d.sub(&Cycle::point(x.clone(), 1)),
            Cycle::point(xy.clone(), 1)
        );
        let neg = Cycle::point(x.clone(), 1).sub(&Cycle::point(x.clone(), 2));
        assert_eq!(neg, Cycle::point(x.clone(), -1));
        assert!(!neg.is_effective());
        assert_eq!(neg.to_string(), "-[(x)]");
        assert_eq!(d.to_string(), "[(x)] + [(x,y)]");
    }

    #[test]
    fn partial_order() {
        let x = p(&[0]);
        let xy = p(&[0, 1]);
        let d = Cycle::from_terms([(x.clone(), 1), (xy, 1)]);
        assert!(Cycle::point(x.clone(), 1).leq(&d));
        assert!(!Cycle::point(x.clone(), 2).leq(&Cycle::point(x, 1)));
        assert!(Cycle::zero().leq(&d));
    }

    #[test]
    fn binord_values() {
        let xy = p(&[0, 1]);
        let x = p(&[0]);
        assert_eq!(
            Cycle::point(xy.clone(), 3).binord().unwrap(),
            Ordinal::monomial(1, 3u32)
        );
        let d = Cycle::from_terms([(x.clone(), 1), (xy, 1)]);
        assert_eq!(
            d.binord().unwrap(),
            Ordinal::from_terms([(2, 1u32), (1, 1u32)])
        );
        assert_eq!(Cycle::zero().binord().unwrap(), Ordinal::zero());
        assert_eq!(Cycle::point(x, -1).binord(), Err(Error::NotEffective));
    }
}
