//! Free graded-commutative polynomial rings over the rationals.
//!
//! Variables carry integer degrees. Monomials are stored in normal form: the
//! variables are sorted by their registration index, odd variables occur at
//! most once, and the sign produced by reordering odd variables is folded
//! into the coefficient.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use graded_core::rational::unit_sign;
use graded_core::sign::{is_negative, parity};
use graded_core::{format_rational, Degree, Rational};
use num_traits::{One, Zero};

use crate::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub degree: Degree,
}

impl Variable {
    pub fn new(name: impl Into<String>, degree: Degree) -> Self {
        Variable {
            name: name.into(),
            degree,
        }
    }
}

/// An ordered registry of variables with unique names.
#[derive(Debug, Clone)]
pub struct Ring {
    vars: Vec<Variable>,
    index: HashMap<String, usize>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(vars: Vec<Variable>) -> Result<Arc<Ring>, RingError> {
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.name.clone(), i).is_some() {
                return Err(RingError::DuplicateVariable(v.name.clone()));
            }
        }
        Ok(Arc::new(Ring { vars, index }))
    }

    /// The ring whose variables are those of `rings`, registered in order.
    pub fn product(rings: &[&Ring]) -> Result<Arc<Ring>, RingError> {
        Ring::new(rings.iter().flat_map(|r| r.vars.iter().cloned()).collect())
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn variable(&self, i: usize) -> &Variable {
        &self.vars[i]
    }

    pub fn degree(&self, i: usize) -> Degree {
        self.vars[i].degree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.vars[i].name
    }

    pub fn is_odd(&self, i: usize) -> bool {
        parity(self.vars[i].degree) == 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A monomial in normal form: `(variable, exponent)` pairs sorted by
/// variable index, exponents positive, odd variables with exponent 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of variable factors, counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree(&self, ring: &Ring) -> Degree {
        self.0.iter().map(|&(v, e)| ring.degree(v) * Degree::from(e)).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.iter().find(|&&(v, _)| v == var).map_or(0, |&(_, e)| e)
    }

    /// The variables of the monomial as a word, each repeated by its exponent.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize))
            .collect()
    }

    /// Normal form of the product `self · other`, with the sign produced by
    /// moving odd variables of `other` past odd variables of `self`, or
    /// `None` when an odd variable would appear twice.
    fn times(&self, other: &Monomial, ring: &Ring) -> Option<(Monomial, bool)> {
        let mut swaps = 0u64;
        for &(b, _) in &other.0 {
            if ring.is_odd(b) {
                swaps += self.0.iter().filter(|&&(a, _)| a > b && ring.is_odd(a)).count() as u64;
            }
        }
        let mut merged = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            if a < b {
                merged.push((a, ea));
                i += 1;
            } else if b < a {
                merged.push((b, eb));
                j += 1;
            } else {
                if ring.is_odd(a) {
                    return None;
                }
                merged.push((a, ea + eb));
                i += 1;
                j += 1;
            }
        }
        merged.extend_from_slice(&self.0[i..]);
        merged.extend_from_slice(&other.0[j..]);
        Some((Monomial(merged), swaps % 2 == 1))
    }

    fn render(&self, ring: &Ring) -> String {
        self.0
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    ring.name(v).to_string()
                } else {
                    format!("{}^{e}", ring.name(v))
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// A polynomial: a finite map from normal-form monomials to nonzero
/// rational coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        let mut p = Poly::zero(ring);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Poly::constant(ring, Rational::one())
    }

    /// The generator with index `i`.
    pub fn variable(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.len(), "variable index {i} out of range");
        let mut p = Poly::zero(ring);
        p.terms.insert(Monomial(vec![(i, 1)]), Rational::one());
        p
    }

    /// The generator with the given name.
    pub fn named(ring: &Arc<Ring>, name: &str) -> Result<Self, RingError> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        Ok(Poly::variable(ring, i))
    }

    /// `c · m` where `m` is a monomial already in normal form.
    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        let mut p = Poly::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of a normal-form monomial.
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// The common degree of all terms; `None` for the zero polynomial or an
    /// inhomogeneous one.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let mut degrees = self.terms.keys().map(|m| m.degree(&self.ring));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, degree: Degree) -> bool {
        self.terms.keys().all(|m| m.degree(&self.ring) == degree)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials live in different rings"
        );
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// The product `self · other`. Panics if the rings differ; see
    /// [`multiply`] for the checked version.
    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials live in different rings"
        );
        let mut out = Poly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = ma.times(mb, &self.ring) {
                    out.add_term(m, ca * cb * unit_sign(negative));
                }
            }
        }
        out
    }

    /// Like [`Poly::mul`], dropping every monomial of word length above `max_len`.
    pub fn mul_truncated(&self, other: &Poly, max_len: u32) -> Poly {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials live in different rings"
        );
        let mut out = Poly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.word_length() + mb.word_length() > max_len {
                    continue;
                }
                if let Some((m, negative)) = ma.times(mb, &self.ring) {
                    out.add_term(m, ca * cb * unit_sign(negative));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Drops every monomial of word length above `max_len`.
    pub fn truncate(&self, max_len: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.word_length() <= max_len)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at a rational point. Variables of nonzero degree evaluate to
    /// zero whatever `point` says about them; `point` has one entry per
    /// variable of the ring.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(
            point.len(),
            self.ring.len(),
            "point has the wrong number of coordinates"
        );
        let mut total = Rational::zero();
        'terms: for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.factors() {
                if self.ring.degree(v) != 0 {
                    continue 'terms;
                }
                for _ in 0..e {
                    value *= &point[v];
                }
            }
            total += value;
        }
        total
    }

    /// Moves the polynomial into another ring containing variables with the
    /// same names and degrees.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Poly, RingError> {
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut image = Poly::constant(target, c.clone());
            for v in m.word() {
                let var = self.ring.variable(v);
                let j = target
                    .index_of(&var.name)
                    .filter(|&j| target.degree(j) == var.degree)
                    .ok_or_else(|| RingError::UnknownVariable(var.name.clone()))?;
                image = image.mul(&Poly::variable(target, j));
            }
            out = out.add(&image);
        }
        Ok(out)
    }
}

/// The product `f · g`, failing when the factors live in different rings.
pub fn multiply(f: &Poly, g: &Poly) -> Result<Poly, RingError> {
    if !same_ring(&f.ring, &g.ring) {
        return Err(RingError::RingMismatch);
    }
    Ok(f.mul(g))
}

/// Canonical text: terms in monomial order, explicit signs, rationals as
/// `p/q`, a unit coefficient omitted in front of a nonconstant monomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{}", m.render(&self.ring))?;
            } else {
                write!(f, "{}·{}", format_rational(&magnitude), m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

/// `(-1)^e` with the exponent reduced by parity.
pub(crate) fn sign_of(e: i64) -> Rational {
    unit_sign(is_negative(e))
}
