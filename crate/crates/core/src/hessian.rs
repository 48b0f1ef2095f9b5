//! Higher Hessians and the Hessian criterion for strong Lefschetz elements.
//!
//! For a dual generator `F` of degree `s` and a basis `a_1, ..., a_m` of
//! the degree-`i` piece of the algebra, the order-`i` Hessian is the
//! symmetric matrix of forms `(a_u a_v) . F` of degree `s - 2i`. The
//! linear form with coefficient vector `p` is a strong Lefschetz element
//! exactly when `F(p)` is nonzero and every Hessian determinant of order
//! `1..=s/2` is nonzero at `p`, so strong Lefschetz questions become
//! questions about whether these determinants vanish identically.
//!
//! The order-1 Hessian is always taken with respect to the full set of
//! variables, i.e. it is the classical matrix of second partials. For a
//! nondegenerate form this is the same matrix as over a basis of `A_1`;
//! for a cone it acquires zero rows, making its determinant identically
//! zero, which is exactly the behaviour the cone criterion in at most
//! four variables relies on.
//!
//! Vanishing is decided exactly: the determinant of an order-`i` Hessian
//! of size `m` has degree at most `m(s - 2i)` in each coordinate of `p`,
//! so it is the zero polynomial if and only if it vanishes on the integer
//! grid `{0, ..., m(s-2i)}^n`. The sweep stops at the first nonzero value.

use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apolarity::DualGenerator;
use crate::artin::{ArtinAlgebra, LinearForm};
use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rat};
use crate::polyring::{Alphabet, Monomial, Poly};

/// A Hessian matrix of some order: a square symmetric matrix of forms in
/// the dual ring, indexed by a monomial basis.
pub struct HessianMatrix {
    order: usize,
    entry_degree: usize,
    nvars: usize,
    basis: Vec<Monomial>,
    entries: Vec<Vec<Poly>>,
}

impl HessianMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    /// Common degree of the matrix entries.
    pub fn entry_degree(&self) -> usize {
        self.entry_degree
    }

    /// The operator monomials indexing rows and columns.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn entry(&self, u: usize, v: usize) -> &Poly {
        &self.entries[u][v]
    }

    /// Exact determinant after evaluating every entry at `point`.
    pub fn det_at(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, Hessian entries have {} variables",
                point.len(),
                self.nvars
            )));
        }
        let m = QMatrix::from_fn(self.size(), self.size(), |u, v| {
            self.entries[u][v].evaluate(point).expect("length checked")
        });
        m.det()
    }

    /// Whether the Hessian determinant is the zero polynomial, decided by
    /// sweeping the grid described in the module documentation.
    pub fn is_identically_zero(&self) -> bool {
        let size = self.size();
        if size == 0 {
            // An empty determinant is the constant 1.
            return false;
        }
        if self.entries.iter().any(|row| row.iter().all(Poly::is_zero)) {
            return true;
        }
        let degree_bound = size * self.entry_degree;
        for point in grid_points(self.nvars, degree_bound as i64) {
            if !self
                .det_at(&point)
                .expect("grid point has full length")
                .is_zero()
            {
                return false;
            }
        }
        true
    }
}

/// Iterates over all points of `{0, ..., side}^n` as rational vectors,
/// last coordinate moving fastest.
fn grid_points(n: usize, side: i64) -> impl Iterator<Item = Vec<Rat>> {
    let mut digits = vec![0i64; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let point: Vec<Rat> = digits
            .iter()
            .map(|&d| Rat::from_integer(d.into()))
            .collect();
        let mut k = n;
        loop {
            if k == 0 {
                done = true;
                break;
            }
            k -= 1;
            if digits[k] < side {
                digits[k] += 1;
                break;
            }
            digits[k] = 0;
        }
        Some(point)
    })
}

/// The order-`i` Hessian of the algebra's dual generator for
/// `1 <= i <= s/2`. Order 1 uses the full variable set (the classical
/// matrix of second partials); higher orders use the standard monomial
/// basis of `A_i`.
pub fn hessian_matrix(algebra: &ArtinAlgebra, order: usize) -> Result<HessianMatrix> {
    let s = algebra.socle_degree();
    if order < 1 || 2 * order > s {
        return Err(Error::OrderOutOfRange { order, socle: s });
    }
    let basis = if order == 1 {
        algebra.dual().ring().monomial_basis(1)
    } else {
        algebra.basis(order).to_vec()
    };
    Ok(hessian_on_basis(algebra.dual(), order, basis))
}

/// The determinant of the order-`i` Hessian evaluated at a point.
pub fn hessian_det_at(algebra: &ArtinAlgebra, order: usize, point: &[Rat]) -> Result<Rat> {
    hessian_matrix(algebra, order)?.det_at(point)
}

/// Whether the order-`i` Hessian determinant is the zero polynomial,
/// decided by a full grid sweep, so a `true` answer is a proof.
pub fn hessian_is_identically_zero(algebra: &ArtinAlgebra, order: usize) -> Result<bool> {
    Ok(hessian_matrix(algebra, order)?.is_identically_zero())
}

/// The classical Hessian: second partial derivatives over the full
/// variable set. Same matrix as `hessian_matrix(_, 1)` but available
/// directly from the dual generator. For forms in at most four variables
/// its determinant vanishes identically exactly when the form is a cone.
/// Requires `s >= 2`.
pub fn classical_hessian(f: &DualGenerator) -> Result<HessianMatrix> {
    let s = f.socle_degree();
    if s < 2 {
        return Err(Error::OrderOutOfRange { order: 1, socle: s });
    }
    Ok(hessian_on_basis(f, 1, f.ring().monomial_basis(1)))
}

fn hessian_on_basis(f: &DualGenerator, order: usize, basis: Vec<Monomial>) -> HessianMatrix {
    let n = f.nvars();
    let s = f.socle_degree();
    let size = basis.len();
    let mut entries = Vec::with_capacity(size);
    for u in 0..size {
        let mut row = Vec::with_capacity(size);
        for v in 0..size {
            let op = Poly::from_terms(
                n,
                Alphabet::Operator,
                [(basis[u].mul(&basis[v]), Rat::one())],
            );
            row.push(op.diff_action(f.form()).expect("apolarity action"));
        }
        entries.push(row);
    }
    for (u, row) in entries.iter().enumerate() {
        for (v, entry) in row.iter().enumerate().take(u) {
            debug_assert_eq!(*entry, entries[v][u]);
        }
    }
    HessianMatrix {
        order,
        entry_degree: s - 2 * order,
        nvars: n,
        basis,
        entries,
    }
}

/// Decides whether the linear form with coefficient vector `point` is a
/// strong Lefschetz element. The boundary map `ell^s : A_0 -> A_s` is
/// checked through the multiplication matrices, the interior orders
/// through the Hessian determinants at `point`.
pub fn slp_by_hessians(algebra: &ArtinAlgebra, point: &[Rat]) -> Result<bool> {
    let n = algebra.nvars();
    if point.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates, the algebra has {} variables",
            point.len(),
            n
        )));
    }
    let s = algebra.socle_degree();
    let ell = LinearForm(point.to_vec());
    if algebra.mult_map(&ell, 0, s).rank() != 1 {
        return Ok(false);
    }
    for i in 1..=s / 2 {
        if hessian_det_at(algebra, i, point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The outcome of the exact strong Lefschetz decision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SlpDecision {
    /// Some linear form is strong Lefschetz; here is one.
    Holds { witness: LinearForm },
    /// No linear form works: the Hessian of this order has identically
    /// vanishing determinant.
    Fails { vanishing_order: usize },
}

/// Decides strong Lefschetz exactly: a strong Lefschetz element exists if
/// and only if no Hessian determinant of order `1..=s/2` vanishes
/// identically. When none does, the product of those determinants with
/// `F` itself is a nonzero polynomial, so a witness is guaranteed on an
/// integer grid sized by its degree; cheap candidates are tried first.
///
/// Note that the order-1 Hessian is the classical one, so for a cone the
/// decision is always `Fails` at order 1 even though the quotient algebra,
/// viewed in fewer variables, may well have a strong Lefschetz element.
pub fn has_slp(algebra: &ArtinAlgebra) -> SlpDecision {
    let s = algebra.socle_degree();
    let mut hessians = Vec::with_capacity(s / 2);
    for i in 1..=s / 2 {
        let hessian = hessian_matrix(algebra, i).expect("order in range");
        if hessian.is_identically_zero() {
            return SlpDecision::Fails { vanishing_order: i };
        }
        hessians.push(hessian);
    }

    let n = algebra.nvars();
    let form = algebra.dual().form();
    let good = |point: &[Rat]| {
        !form.evaluate(point).expect("full length").is_zero()
            && hessians
                .iter()
                .all(|h| !h.det_at(point).expect("full length").is_zero())
    };
    let certify = |point: Vec<Rat>| {
        let witness = LinearForm(point);
        debug_assert!(algebra.has_slp_at(&witness).expect("nonzero witness"));
        SlpDecision::Holds { witness }
    };

    let ones: Vec<Rat> = vec![Rat::one(); n];
    if good(&ones) {
        return certify(ones);
    }
    // Small random points almost surely avoid the hypersurface where some
    // determinant vanishes; the exhaustive grid below is the guaranteed
    // fallback.
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..64 {
        let point: Vec<Rat> = (0..n)
            .map(|_| Rat::from_integer(rng.gen_range(-20i64..=20).into()))
            .collect();
        if good(&point) {
            return certify(point);
        }
    }
    let degree_bound: usize = hessians
        .iter()
        .map(|h| h.size() * h.entry_degree())
        .sum::<usize>()
        + s;
    for point in grid_points(n, degree_bound as i64) {
        if good(&point) {
            return certify(point);
        }
    }
    unreachable!("a nonzero product of Hessian determinants attains a nonzero grid value")
}
