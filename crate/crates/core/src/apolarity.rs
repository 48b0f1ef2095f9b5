//! Macaulay duality between forms and Artinian Gorenstein ideals.
//!
//! A nonzero homogeneous form `F` of degree `s` in the dual ring determines
//! the annihilator ideal `I = ann(F)` in the operator ring, and `A = S/I`
//! is an Artinian Gorenstein algebra with socle degree `s`. Everything here
//! is driven by catalecticant matrices: the degree-`i` piece of `I` is the
//! kernel of the catalecticant pairing, and its rank is the Hilbert
//! function value `h_i`.

use num::{BigInt, Integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rat};
use crate::polyring::{Alphabet, Monomial, Poly, PolyDegree, RingSpec};

/// The Hilbert function `(h_0, ..., h_s)` of a graded Artinian algebra.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HVector(pub Vec<usize>);

impl HVector {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Largest degree with `h_d` recorded; for a Gorenstein quotient this
    /// is the socle degree.
    pub fn socle_degree(&self) -> usize {
        assert!(!self.0.is_empty());
        self.0.len() - 1
    }

    /// `h_d`, with zeros beyond the recorded range.
    pub fn get(&self, d: usize) -> usize {
        self.0.get(d).copied().unwrap_or(0)
    }

    /// Vector space dimension of the whole algebra.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Whether `h_i = h_(s-i)` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        let s = self.0.len();
        (0..s).all(|i| self.0[i] == self.0[s - 1 - i])
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

/// A nonzero homogeneous form in the dual ring, the Macaulay dual
/// generator of the algebra under study.
#[derive(Clone, Debug)]
pub struct DualGenerator {
    ring: RingSpec,
    form: Poly,
    socle: usize,
}

impl DualGenerator {
    /// Wraps a form after checking it is nonzero, homogeneous and in the
    /// dual alphabet.
    pub fn new(form: Poly) -> Result<DualGenerator> {
        if form.alphabet() != Alphabet::Dual {
            return Err(Error::MixedAlphabets);
        }
        match form.homogeneous_degree() {
            PolyDegree::Zero => Err(Error::ZeroForm),
            PolyDegree::Inhomogeneous => Err(Error::InvalidInput(
                "dual generator must be homogeneous".to_string(),
            )),
            PolyDegree::Homogeneous(s) => Ok(DualGenerator {
                ring: RingSpec::new(form.nvars()),
                form,
                socle: s,
            }),
        }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn socle_degree(&self) -> usize {
        self.socle
    }

    pub fn form(&self) -> &Poly {
        &self.form
    }

    /// The catalecticant matrix in degree `i`: rows are indexed by the
    /// degree-`(s-i)` monomial basis, columns by the degree-`i` basis, and
    /// the `(r, c)` entry is the coefficient of the row monomial in
    /// `(column monomial) . F`. Degree `s+1` yields a matrix with no rows,
    /// whose kernel is everything.
    pub fn catalecticant(&self, i: usize) -> Result<QMatrix> {
        let s = self.socle;
        if i > s + 1 {
            return Err(Error::DegreeOutOfRange {
                degree: i,
                socle: s,
            });
        }
        let cols = self.ring.monomial_basis(i);
        if i == s + 1 {
            return Ok(QMatrix::zeros(0, cols.len()));
        }
        let rows = self.ring.monomial_basis(s - i);
        let mut derived = Vec::with_capacity(cols.len());
        for c in &cols {
            let op = Poly::from_terms(self.nvars(), Alphabet::Operator, [(c.clone(), Rat::one())]);
            derived.push(op.diff_action(&self.form).expect("apolarity action"));
        }
        Ok(QMatrix::from_fn(rows.len(), cols.len(), |r, c| {
            derived[c].coeff(&rows[r])
        }))
    }

    /// `h_i = rank` of the degree-`i` catalecticant; zero past the socle.
    pub fn h(&self, i: usize) -> usize {
        if i > self.socle {
            return 0;
        }
        self.catalecticant(i).expect("degree in range").rank()
    }

    /// The full Hilbert function `(h_0, ..., h_s)`.
    pub fn hilbert_function(&self) -> HVector {
        HVector((0..=self.socle).map(|i| self.h(i)).collect())
    }

    /// Canonical basis of the degree-`i` piece of `ann(F)`, as operator
    /// polynomials.
    pub fn annihilator_piece(&self, i: usize) -> Result<Vec<Poly>> {
        let kernel = self.catalecticant(i)?.kernel_basis();
        let basis = self.ring.monomial_basis(i);
        Ok((0..kernel.rows())
            .map(|r| {
                Poly::from_terms(
                    self.nvars(),
                    Alphabet::Operator,
                    basis
                        .iter()
                        .cloned()
                        .zip(kernel.row(r).iter().cloned())
                        .filter(|(_, c)| !c.is_zero()),
                )
            })
            .collect())
    }

    /// The annihilator ideal, with pieces recorded up to degree `s+1`.
    pub fn annihilator(&self) -> GradedIdeal {
        let pieces = (0..=self.socle + 1)
            .map(|i| {
                let (rref, pivots) = self
                    .catalecticant(i)
                    .expect("degree in range")
                    .kernel_basis()
                    .rref();
                Piece { rref, pivots }
            })
            .collect();
        GradedIdeal {
            ring: self.ring,
            socle: self.socle,
            pieces,
        }
    }

    /// Whether no linear form annihilates `F`, i.e. `h_1 = n`.
    pub fn is_nondegenerate(&self) -> bool {
        self.h(1) == self.nvars()
    }

    /// Whether the algebra is a cone: some linear operator kills `F`, so
    /// after a change of coordinates `F` uses fewer variables.
    pub fn is_cone(&self) -> bool {
        !self.is_nondegenerate()
    }
}

struct Piece {
    rref: QMatrix,
    pivots: Vec<usize>,
}

/// A graded ideal in the operator ring, stored degree by degree as
/// canonical reduced row echelon bases with respect to the decreasing
/// grevlex monomial basis.
pub struct GradedIdeal {
    ring: RingSpec,
    socle: usize,
    pieces: Vec<Piece>,
}

impl GradedIdeal {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn socle_degree(&self) -> usize {
        self.socle
    }

    /// Largest degree with a stored piece (`socle + 1`).
    pub fn max_degree(&self) -> usize {
        self.pieces.len() - 1
    }

    /// The canonical echelon basis matrix of the degree-`d` piece.
    pub fn piece_matrix(&self, d: usize) -> &QMatrix {
        &self.pieces[d].rref
    }

    /// Pivot columns of the degree-`d` echelon basis.
    pub fn piece_pivots(&self, d: usize) -> &[usize] {
        &self.pieces[d].pivots
    }

    /// The degree-`d` piece as polynomials.
    pub fn piece_polys(&self, d: usize) -> Vec<Poly> {
        let basis = self.ring.monomial_basis(d);
        let m = &self.pieces[d].rref;
        (0..m.rows())
            .map(|r| {
                Poly::from_terms(
                    self.ring.nvars(),
                    Alphabet::Operator,
                    basis
                        .iter()
                        .cloned()
                        .zip(m.row(r).iter().cloned())
                        .filter(|(_, c)| !c.is_zero()),
                )
            })
            .collect()
    }

    /// `dim (S/I)_d`, zero beyond the stored range.
    pub fn quotient_dim(&self, d: usize) -> usize {
        if d >= self.pieces.len() {
            return 0;
        }
        self.ring.dim(d) - self.pieces[d].rref.rows()
    }

    /// Number of minimal generators required in each degree: the dimension
    /// of the degree-`d` piece modulo the span of `S_1` times the
    /// degree-`(d-1)` piece.
    pub fn new_generator_counts(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        (0..self.pieces.len())
            .map(|d| {
                let here = self.pieces[d].rref.rows();
                if d == 0 || here == 0 {
                    return here;
                }
                let prev = &self.pieces[d - 1].rref;
                let basis_prev = self.ring.monomial_basis(d - 1);
                let basis_here = self.ring.monomial_basis(d);
                let mut rows = Vec::with_capacity(n * prev.rows());
                for r in 0..prev.rows() {
                    let poly = Poly::from_terms(
                        n,
                        Alphabet::Operator,
                        basis_prev
                            .iter()
                            .cloned()
                            .zip(prev.row(r).iter().cloned())
                            .filter(|(_, c)| !c.is_zero()),
                    );
                    for v in 0..n {
                        let shifted = poly
                            .mul(&Poly::variable(n, Alphabet::Operator, v))
                            .expect("same alphabet");
                        rows.push(shifted.coeff_vector(&basis_here));
                    }
                }
                let spanned = QMatrix::from_rows(rows, basis_here.len()).rank();
                here - spanned
            })
            .collect()
    }

    /// Degrees of a minimal generating set, as a sorted multiset.
    pub fn generator_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (d, count) in self.new_generator_counts().into_iter().enumerate() {
            out.extend(std::iter::repeat_n(d, count));
        }
        out
    }

    pub fn minimal_generator_count(&self) -> usize {
        self.new_generator_counts().iter().sum()
    }
}

fn monomial_factorial(m: &Monomial) -> BigInt {
    let mut acc = BigInt::one();
    for &e in m.exponents() {
        for t in 2..=e {
            acc *= BigInt::from(t);
        }
    }
    acc
}

/// Recovers the dual generator of degree `socle` annihilated by the given
/// homogeneous operator polynomials. Fails unless the space of such forms
/// is exactly one dimensional, i.e. unless the input cuts out a Gorenstein
/// quotient with the requested socle degree.
///
/// The result is normalized: integer coefficients with content 1 and a
/// positive leading coefficient.
pub fn dual_generator_from_ideal(gens: &[Poly], socle: usize) -> Result<DualGenerator> {
    let n = match gens.first() {
        Some(g) => g.nvars(),
        None => {
            return Err(Error::InvalidInput(
                "at least one ideal generator is required".to_string(),
            ))
        }
    };
    let ring = RingSpec::new(n);
    let dual_basis = ring.monomial_basis(socle);
    let weights: Vec<Rat> = dual_basis
        .iter()
        .map(|m| Rat::from_integer(monomial_factorial(m)))
        .collect();

    let mut rows = Vec::new();
    for g in gens {
        if g.alphabet() != Alphabet::Operator {
            return Err(Error::MixedAlphabets);
        }
        if g.nvars() != n {
            return Err(Error::DimensionMismatch(
                "ideal generators use different variable counts".to_string(),
            ));
        }
        let d = match g.homogeneous_degree() {
            PolyDegree::Zero => continue,
            PolyDegree::Inhomogeneous => {
                return Err(Error::InvalidInput(
                    "ideal generators must be homogeneous".to_string(),
                ))
            }
            PolyDegree::Homogeneous(d) => d,
        };
        if d > socle {
            continue;
        }
        for m in ring.monomial_basis(socle - d) {
            let shifted = g
                .mul(&Poly::from_terms(n, Alphabet::Operator, [(m, Rat::one())]))
                .expect("same alphabet");
            let row: Vec<Rat> = dual_basis
                .iter()
                .zip(&weights)
                .map(|(b, w)| shifted.coeff(b) * w)
                .collect();
            rows.push(row);
        }
    }

    let kernel = QMatrix::from_rows(rows, dual_basis.len()).kernel_basis();
    if kernel.rows() != 1 {
        return Err(Error::NotGorensteinSocle {
            socle,
            kernel_dim: kernel.rows(),
        });
    }
    let form = Poly::from_terms(
        n,
        Alphabet::Dual,
        dual_basis
            .iter()
            .cloned()
            .zip(kernel.row(0).iter().cloned())
            .filter(|(_, c)| !c.is_zero()),
    );
    DualGenerator::new(normalize_integer_content(&form))
}

/// Scales a nonzero polynomial so its coefficients are coprime integers
/// and the leading coefficient is positive.
pub fn normalize_integer_content(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for (_, c) in p.terms() {
        let scaled = c * Rat::from_integer(denom_lcm.clone());
        debug_assert!(scaled.is_integer());
        numer_gcd = numer_gcd.gcd(scaled.numer());
    }
    let mut factor = Rat::new(denom_lcm, numer_gcd);
    if p.leading_coefficient().expect("nonzero") * &factor < Rat::zero() {
        factor = -factor;
    }
    p.scale(&factor)
}
