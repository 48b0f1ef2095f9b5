//! Polynomial rings for the apolarity action.
//!
//! Two rings in `n` variables appear throughout: the operator ring
//! `S = Q[x1..xn]` and the dual ring `R = Q[X1..Xn]` on which `S` acts by
//! partial differentiation. A polynomial is tagged with its alphabet and
//! the two kinds never mix in arithmetic.
//!
//! Monomials are ordered by graded reverse lexicographic order with
//! `x1 > x2 > ... > xn`, and every monomial basis is listed in decreasing
//! grevlex order. All matrix rows and columns elsewhere in the crate are
//! indexed by these bases, so the ordering fixed here makes every computed
//! matrix, echelon form and report deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{Error, Result};
use crate::exactla::Rat;

/// Which of the two rings a polynomial lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    /// The ring `S = Q[x1..xn]` acting by differentiation.
    Operator,
    /// The ring `R = Q[X1..Xn]` being differentiated.
    Dual,
}

impl Alphabet {
    fn variable_name(self, index: usize) -> String {
        match self {
            Alphabet::Operator => format!("x{}", index + 1),
            Alphabet::Dual => format!("X{}", index + 1),
        }
    }
}

/// A polynomial ring dimension: just the number of variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RingSpec {
    n: usize,
}

impl RingSpec {
    /// A ring in `n >= 1` variables.
    pub fn new(n: usize) -> RingSpec {
        assert!(n >= 1, "a polynomial ring needs at least one variable");
        RingSpec { n }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Number of degree-`d` monomials, `C(n-1+d, d)`.
    pub fn dim(&self, d: usize) -> usize {
        binomial(self.n - 1 + d, d)
    }

    /// All degree-`d` monomials in decreasing grevlex order.
    pub fn monomial_basis(&self, d: usize) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.dim(d));
        let mut exps = vec![0u32; self.n];
        enumerate_exponents(&mut exps, 0, d as u32, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Parses a polynomial, inferring the alphabet from the variables used.
    /// A constant with no variables lands in the operator ring.
    pub fn parse(&self, text: &str) -> Result<Poly> {
        parse_poly(text, self.n, None)
    }

    /// Parses a polynomial that must lie in the given alphabet.
    pub fn parse_as(&self, text: &str, alphabet: Alphabet) -> Result<Poly> {
        parse_poly(text, self.n, Some(alphabet))
    }
}

fn enumerate_exponents(exps: &mut Vec<u32>, var: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if var + 1 == exps.len() {
        exps[var] = remaining;
        out.push(Monomial(exps.clone()));
        return;
    }
    for e in 0..=remaining {
        exps[var] = e;
        enumerate_exponents(exps, var + 1, remaining - e, out);
    }
    exps[var] = 0;
}

/// Binomial coefficient as `usize`; panics on overflow.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflow")
}

/// A monomial, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    /// The variable with 0-based index `i`.
    pub fn variable(n: usize, i: usize) -> Monomial {
        assert!(i < n);
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial(exps)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, when the division is exact.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }
}

/// Grevlex with `x1 > x2 > ... > xn`: higher total degree is larger; at
/// equal degree the monomial with the smaller exponent at the last
/// differing variable is larger.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {
                for k in (0..self.0.len()).rev() {
                    if self.0[k] != other.0[k] {
                        return other.0[k].cmp(&self.0[k]);
                    }
                }
                Ordering::Equal
            }
            unequal => unequal,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders a monomial in the given alphabet, e.g. `X1*X2^2`.
pub fn monomial_string(m: &Monomial, alphabet: Alphabet) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(alphabet.variable_name(i)),
            _ => parts.push(format!("{}^{}", alphabet.variable_name(i), e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Degree of a polynomial under the homogeneity query.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyDegree {
    /// The zero polynomial, which has no degree.
    Zero,
    /// All terms share this degree.
    Homogeneous(usize),
    /// Terms of different degrees are present.
    Inhomogeneous,
}

/// A sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map ordered by grevlex; zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    n: usize,
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(n: usize, alphabet: Alphabet) -> Poly {
        Poly {
            n,
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, alphabet: Alphabet, c: Rat) -> Poly {
        let mut p = Poly::zero(n, alphabet);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    /// The variable with 0-based index `i`.
    pub fn variable(n: usize, alphabet: Alphabet, i: usize) -> Poly {
        let mut p = Poly::zero(n, alphabet);
        p.terms.insert(Monomial::variable(n, i), Rat::one());
        p
    }

    pub fn from_terms(
        n: usize,
        alphabet: Alphabet,
        terms: impl IntoIterator<Item = (Monomial, Rat)>,
    ) -> Poly {
        let mut p = Poly::zero(n, alphabet);
        for (m, c) in terms {
            assert_eq!(m.nvars(), n, "monomial has wrong variable count");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest monomial with a nonzero coefficient.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rat> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// Scales so the leading coefficient becomes 1; zero stays zero.
    pub fn normalized(&self) -> Poly {
        match self.leading_coefficient() {
            Some(c) => {
                let inv = c.clone();
                self.scale(&(Rat::one() / inv))
            }
            None => self.clone(),
        }
    }

    pub fn homogeneous_degree(&self) -> PolyDegree {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => PolyDegree::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    PolyDegree::Homogeneous(d)
                } else {
                    PolyDegree::Inhomogeneous
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn check_compatible(&self, other: &Poly) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::MixedAlphabets);
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "polynomials in {} and {} variables",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> Poly {
        if factor.is_zero() {
            return Poly::zero(self.n, self.alphabet);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= factor;
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        let mut out = Poly::zero(self.n, self.alphabet);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::constant(self.n, self.alphabet, Rat::one());
        for _ in 0..e {
            out = out.mul(self).expect("pow cannot mix alphabets");
        }
        out
    }

    /// The apolarity action: `self` (operator ring) differentiates `f`
    /// (dual ring). A monomial `x^a` sends `X^b` to
    /// `prod_i b_i (b_i - 1) ... (b_i - a_i + 1) X^(b-a)`, i.e. genuine
    /// iterated partial differentiation with falling-factorial scalars.
    pub fn diff_action(&self, f: &Poly) -> Result<Poly> {
        if self.alphabet != Alphabet::Operator || f.alphabet != Alphabet::Dual {
            return Err(Error::MixedAlphabets);
        }
        if self.n != f.n {
            return Err(Error::DimensionMismatch(format!(
                "operator in {} variables acting on {} variables",
                self.n, f.n
            )));
        }
        let mut out = Poly::zero(self.n, Alphabet::Dual);
        for (a, ca) in &self.terms {
            for (b, cb) in &f.terms {
                if let Some(m) = b.div(a) {
                    let scalar = falling_factorial_product(b, a);
                    out.add_term(m, ca * cb * Rat::from_integer(scalar));
                }
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.n
            )));
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Coefficients of `self` with respect to a monomial basis; monomials
    /// outside the basis are ignored by debug builds only if absent.
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Vec<Rat> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }
}

fn falling_factorial_product(b: &Monomial, a: &Monomial) -> BigInt {
    let mut acc = BigInt::one();
    for (&bi, &ai) in b.exponents().iter().zip(a.exponents()) {
        for t in 0..ai {
            acc *= BigInt::from((bi - t) as i64);
        }
    }
    acc
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let negative = c < &Rat::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(m, self.alphabet);
            if mono == "1" {
                write!(f, "{}", magnitude)?;
            } else if magnitude.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", magnitude, mono)?;
            }
        }
        Ok(())
    }
}

/// Largest 1-based variable index mentioned in `text`, if any. Used to
/// infer the ring dimension from command-line input.
pub fn max_variable_index(text: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut best = None;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if matches!(c, 'x' | 'X' | 'y') {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end > start {
                if let Ok(idx) = text[start..end].parse::<usize>() {
                    best = Some(best.map_or(idx, |b: usize| b.max(idx)));
                }
                i = end;
                continue;
            }
        }
        i += 1;
    }
    best
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.bytes.get(self.pos).map(|&b| b as char)
    }

    fn scan_digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(start, "expected a number"));
        }
        Ok(&self.text[start..self.pos])
    }

    fn scan_integer(&mut self) -> Result<BigInt> {
        let digits = self.scan_digits()?;
        Ok(BigInt::parse_bytes(digits.as_bytes(), 10).expect("digits parse as an integer"))
    }

    /// `digits [ '/' digits ]`
    fn scan_coefficient(&mut self) -> Result<Rat> {
        let numer = self.scan_integer()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            let slash = self.pos;
            self.pos += 1;
            self.skip_ws();
            let denom = self.scan_integer()?;
            if denom.is_zero() {
                return Err(self.error(slash, "zero denominator in coefficient"));
            }
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }

    /// `var_letter index [ '^' exponent ]`
    fn scan_factor(&mut self) -> Result<(Alphabet, usize, u32)> {
        let letter_pos = self.pos;
        let letter = self.peek().expect("factor starts with a letter");
        let alphabet = match letter {
            'x' => Alphabet::Operator,
            'X' | 'y' => Alphabet::Dual,
            _ => return Err(self.error(letter_pos, format!("unexpected character '{letter}'"))),
        };
        self.pos += 1;
        let index_pos = self.pos;
        let index: usize = self
            .scan_digits()
            .map_err(|_| {
                self.error(
                    index_pos,
                    format!("expected a variable index after '{letter}'"),
                )
            })?
            .parse()
            .map_err(|_| self.error(index_pos, "variable index too large"))?;
        if index == 0 || index > self.n {
            return Err(self.error(
                index_pos,
                format!("variable index {} out of range 1..={}", index, self.n),
            ));
        }
        self.skip_ws();
        let mut exponent = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let exp_pos = self.pos;
            exponent = self
                .scan_digits()
                .map_err(|_| self.error(exp_pos, "expected an exponent after '^'"))?
                .parse()
                .map_err(|_| self.error(exp_pos, "exponent too large"))?;
        }
        Ok((alphabet, index - 1, exponent))
    }

    fn at_factor(&self) -> bool {
        matches!(self.peek(), Some('x' | 'X' | 'y'))
    }
}

fn parse_poly(text: &str, n: usize, expect: Option<Alphabet>) -> Result<Poly> {
    let mut p = Parser {
        text,
        bytes: text.as_bytes(),
        pos: 0,
        n,
    };
    let mut seen: Option<(Alphabet, usize)> = None;
    let mut terms: Vec<(Monomial, Rat)> = Vec::new();

    p.skip_ws();
    if p.pos == p.bytes.len() {
        return Err(p.error(0, "empty polynomial"));
    }
    let mut first_term = true;
    while p.pos < p.bytes.len() {
        // sign
        let mut sign = Rat::one();
        p.skip_ws();
        match p.peek() {
            Some('+') => {
                p.pos += 1;
            }
            Some('-') => {
                sign = -sign;
                p.pos += 1;
            }
            _ if first_term => {}
            Some(other) => {
                return Err(p.error(p.pos, format!("expected '+' or '-', found '{other}'")));
            }
            None => break,
        }
        first_term = false;
        p.skip_ws();

        // term = [coefficient] [factors]
        let term_pos = p.pos;
        let mut coeff = sign;
        let mut exps = vec![0u32; n];
        let mut has_content = false;
        if matches!(p.peek(), Some(c) if c.is_ascii_digit()) {
            coeff *= p.scan_coefficient()?;
            has_content = true;
            p.skip_ws();
            if p.peek() == Some('*') {
                p.pos += 1;
                p.skip_ws();
            }
        }
        while p.at_factor() {
            let factor_pos = p.pos;
            let (alphabet, index, exponent) = p.scan_factor()?;
            match seen {
                None => seen = Some((alphabet, factor_pos)),
                Some((prior, _)) if prior != alphabet => {
                    return Err(Error::MixedAlphabets);
                }
                _ => {}
            }
            exps[index] = exps[index]
                .checked_add(exponent)
                .ok_or_else(|| p.error(factor_pos, "exponent too large"))?;
            has_content = true;
            p.skip_ws();
            if p.peek() == Some('*') {
                p.pos += 1;
                p.skip_ws();
            }
        }
        if !has_content {
            return Err(p.error(term_pos, "expected a coefficient or a variable"));
        }
        terms.push((Monomial::from_exponents(exps), coeff));
        p.skip_ws();
    }

    let alphabet = match (seen, expect) {
        (Some((found, pos)), Some(wanted)) if found != wanted => {
            let ring = match wanted {
                Alphabet::Operator => "operator variables x1, x2, ...",
                Alphabet::Dual => "dual variables X1, X2, ... (or y1, y2, ...)",
            };
            return Err(Error::Parse {
                position: pos,
                message: format!("expected a polynomial in the {ring}"),
            });
        }
        (Some((found, _)), _) => found,
        (None, Some(wanted)) => wanted,
        (None, None) => Alphabet::Operator,
    };
    Ok(Poly::from_terms(n, alphabet, terms))
}
