//! Ordinals below ω^ω in Cantor normal form.
//!
//! An [`Ordinal`] is stored as a sparse map from exponent to a non-zero
//! coefficient, so `ω^2 + 3ω + 5` is `{2: 1, 1: 3, 0: 5}` and zero is the
//! empty map. Besides the usual (non-commutative) ordinal sum this module
//! provides the shuffle sum, the coefficient-wise "weaker" partial order and
//! its meet, which is where most of the length calculus lives.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// An ordinal strictly below ω^ω.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    coeffs: BTreeMap<u32, BigUint>,
}

/// Structural data of a non-zero ordinal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub degree: u32,
    pub ord: u32,
    pub valence: BigUint,
    pub support: Vec<u32>,
    pub is_limit: bool,
    pub is_successor: bool,
}

impl Ordinal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::finite(1u32)
    }

    /// The finite ordinal `n`.
    pub fn finite(n: impl Into<BigUint>) -> Self {
        Self::monomial(0, n)
    }

    /// ω itself.
    pub fn omega() -> Self {
        Self::omega_pow(1)
    }

    /// The single term ω^exp.
    pub fn omega_pow(exp: u32) -> Self {
        Self::monomial(exp, 1u32)
    }

    /// The term `coeff·ω^exp` (zero when `coeff` is zero).
    pub fn monomial(exp: u32, coeff: impl Into<BigUint>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs. Repeated
    /// exponents are added and zero coefficients dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigUint>,
    {
        let mut coeffs: BTreeMap<u32, BigUint> = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_default() += c.into();
        }
        coeffs.retain(|_, c| !c.is_zero());
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of ω^exp (zero if absent).
    pub fn coeff(&self, exp: u32) -> BigUint {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms from the highest exponent down.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigUint)> + '_ {
        self.coeffs.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent in the support.
    pub fn ord(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    /// Sum of the Cantor coefficients.
    pub fn valence(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    pub fn support(&self) -> Vec<u32> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_successor(&self) -> bool {
        self.ord() == Some(0)
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    pub fn is_finite(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    /// Degree, order, valence and support at once; `None` for zero, whose
    /// degree and order are undefined.
    pub fn classify(&self) -> Option<Classification> {
        Some(Classification {
            degree: self.degree()?,
            ord: self.ord()?,
            valence: self.valence(),
            support: self.support(),
            is_limit: self.is_limit(),
            is_successor: self.is_successor(),
        })
    }

    /// Ordinary ordinal addition `self + rhs`.
    pub fn cantor_sum(&self, rhs: &Ordinal) -> Ordinal {
        let Some(top) = rhs.degree() else {
            return self.clone();
        };
        let mut coeffs: BTreeMap<u32, BigUint> = self
            .coeffs
            .range(top + 1..)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        for (e, c) in &rhs.coeffs {
            coeffs.insert(*e, c.clone());
        }
        if let Some(c) = self.coeffs.get(&top) {
            *coeffs.get_mut(&top).expect("rhs has a top term") += c;
        }
        Ordinal { coeffs }
    }

    /// Natural (Hessenberg) sum: coefficient-wise addition.
    pub fn shuffle_sum(&self, rhs: &Ordinal) -> Ordinal {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            *coeffs.entry(*e).or_default() += c;
        }
        Ordinal { coeffs }
    }

    /// Coefficient-wise minimum, the infimum for [`Ordinal::weaker`].
    pub fn meet(&self, rhs: &Ordinal) -> Ordinal {
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(e, c)| rhs.coeffs.get(e).map(|d| (*e, c.min(d).clone())))
            .collect();
        Ordinal { coeffs }
    }

    /// `self ⪯ rhs`: every Cantor coefficient of `self` is at most the
    /// matching coefficient of `rhs`.
    pub fn weaker(&self, rhs: &Ordinal) -> bool {
        self.coeffs
            .iter()
            .all(|(e, c)| rhs.coeffs.get(e).is_some_and(|d| c <= d))
    }

    /// The coefficient-wise difference `rhs - self`, if `self ⪯ rhs`.
    pub fn shuffle_difference(&self, rhs: &Ordinal) -> Option<Ordinal> {
        if !self.weaker(rhs) {
            return None;
        }
        let coeffs = rhs
            .coeffs
            .iter()
            .map(|(e, d)| (*e, d - self.coeffs.get(e).cloned().unwrap_or_default()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Some(Ordinal { coeffs })
    }

    /// Terms of exponent at least `i + 1`. A negative `i` keeps everything.
    pub fn truncate_above(&self, i: i64) -> Ordinal {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(e, _)| i64::from(**e) > i)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        Ordinal { coeffs }
    }

    /// Terms of exponent at most `i`, so that
    /// `truncate_above(i) ⊕ truncate_below(i) == self`.
    pub fn truncate_below(&self, i: i64) -> Ordinal {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(e, _)| i64::from(**e) <= i)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        Ordinal { coeffs }
    }

    /// `n·self`, the n-fold shuffle sum.
    pub fn scalar_mul(&self, n: impl Into<BigUint>) -> Ordinal {
        let n = n.into();
        if n.is_zero() {
            return Ordinal::zero();
        }
        let coeffs = self.coeffs.iter().map(|(e, c)| (*e, c * &n)).collect();
        Ordinal { coeffs }
    }

    /// The total order `self ≤ rhs`.
    pub fn leq(&self, rhs: &Ordinal) -> bool {
        self <= rhs
    }

    /// Renders the Cantor normal form, with `w` in place of `ω` when
    /// `ascii` is set.
    pub fn render(&self, ascii: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let w = if ascii { "w" } else { "ω" };
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let coeff = if c.is_one() && e > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                match e {
                    0 => coeff,
                    1 => format!("{coeff}{w}"),
                    _ => format!("{coeff}{w}^{e}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut lhs = self.terms();
        let mut rhs = other.terms();
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ea, ca)), Some((eb, cb))) => {
                    let ord = ea.cmp(&eb).then_with(|| ca.cmp(cb));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
            }
        }
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(f.alternate()))
    }
}
