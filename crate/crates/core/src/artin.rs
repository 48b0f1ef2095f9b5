//! The Artinian Gorenstein algebra attached to a dual generator.
//!
//! From the annihilator ideal of a form `F` we build explicit vector space
//! bases of every graded piece `A_d` (the standard monomials, i.e. those
//! outside the leading terms of the ideal) together with the matrices of
//! multiplication by each variable. Weak and strong Lefschetz properties,
//! multiplication by powers of a linear form and Jordan types all reduce
//! to exact rank computations on these matrices.

use std::collections::HashMap;

use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::apolarity::{DualGenerator, GradedIdeal, HVector};
use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rat};
use crate::polyring::{Alphabet, Monomial, Poly};

/// A linear form in the operator ring, stored as its coefficient vector
/// on `x1, ..., xn`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearForm(pub Vec<Rat>);

impl LinearForm {
    pub fn ones(n: usize) -> LinearForm {
        LinearForm(vec![Rat::one(); n])
    }

    pub fn from_ints(coeffs: &[i64]) -> LinearForm {
        LinearForm(
            coeffs
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn coefficients(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_poly(&self) -> Poly {
        let n = self.0.len();
        Poly::from_terms(
            n,
            Alphabet::Operator,
            (0..n).map(|i| (Monomial::variable(n, i), self.0[i].clone())),
        )
    }
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// An integer partition, kept weakly decreasing with zero parts dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// The conjugate partition: its `k`-th part counts parts of `self`
    /// that are at least `k`.
    pub fn conjugate(&self) -> Partition {
        let largest = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=largest)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count())
                .collect(),
        )
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The Jordan type of a strong Lefschetz element: the conjugate of the
/// Hilbert function sorted into decreasing order.
pub fn slp_jordan_type(h: &HVector) -> Partition {
    Partition::new(h.values().to_vec()).conjugate()
}

/// An Artinian Gorenstein algebra `A = S/ann(F)` with explicit bases and
/// multiplication matrices in every degree.
pub struct ArtinAlgebra {
    dual: DualGenerator,
    ideal: GradedIdeal,
    hvector: HVector,
    bases: Vec<Vec<Monomial>>,
    var_maps: Vec<Vec<QMatrix>>,
}

impl ArtinAlgebra {
    /// Computes the annihilator, the standard monomial bases and all
    /// multiplication-by-variable matrices.
    pub fn build(dual: DualGenerator) -> ArtinAlgebra {
        let ring = dual.ring();
        let n = ring.nvars();
        let s = dual.socle_degree();
        let ideal = dual.annihilator();
        let hvector = dual.hilbert_function();

        let mut bases: Vec<Vec<Monomial>> = Vec::with_capacity(s + 1);
        for d in 0..=s {
            let full = ring.monomial_basis(d);
            let pivots = ideal.piece_pivots(d);
            let mut is_pivot = vec![false; full.len()];
            for &p in pivots {
                is_pivot[p] = true;
            }
            let std: Vec<Monomial> = full
                .into_iter()
                .enumerate()
                .filter(|(j, _)| !is_pivot[*j])
                .map(|(_, m)| m)
                .collect();
            debug_assert_eq!(std.len(), hvector.get(d));
            bases.push(std);
        }

        let mut var_maps: Vec<Vec<QMatrix>> = Vec::with_capacity(s + 1);
        for d in 0..=s {
            if d == s {
                var_maps.push(vec![QMatrix::zeros(0, bases[s].len()); n]);
                break;
            }
            let full_next = ring.monomial_basis(d + 1);
            let index_next: HashMap<&Monomial, usize> =
                full_next.iter().enumerate().map(|(j, m)| (m, j)).collect();
            let rref = ideal.piece_matrix(d + 1);
            let pivots = ideal.piece_pivots(d + 1);
            let mut pivot_row = vec![None; full_next.len()];
            for (r, &p) in pivots.iter().enumerate() {
                pivot_row[p] = Some(r);
            }
            let std_positions: Vec<usize> = (0..full_next.len())
                .filter(|j| pivot_row[*j].is_none())
                .collect();
            let mut maps = vec![QMatrix::zeros(bases[d + 1].len(), bases[d].len()); n];
            for (col, m) in bases[d].iter().enumerate() {
                for (v, map) in maps.iter_mut().enumerate() {
                    let prod = m.mul(&Monomial::variable(n, v));
                    let j = index_next[&prod];
                    match pivot_row[j] {
                        // A standard monomial: the normal form is itself.
                        None => {
                            let row = std_positions.binary_search(&j).expect("standard position");
                            map.set(row, col, Rat::one());
                        }
                        // A leading monomial of the ideal: subtracting the
                        // echelon row leaves minus its non-pivot entries.
                        Some(r) => {
                            for (row, &pos) in std_positions.iter().enumerate() {
                                let c = rref.at(r, pos);
                                if !c.is_zero() {
                                    map.set(row, col, -c.clone());
                                }
                            }
                        }
                    }
                }
            }
            var_maps.push(maps);
        }

        ArtinAlgebra {
            dual,
            ideal,
            hvector,
            bases,
            var_maps,
        }
    }

    pub fn dual(&self) -> &DualGenerator {
        &self.dual
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn hilbert_function(&self) -> &HVector {
        &self.hvector
    }

    pub fn socle_degree(&self) -> usize {
        self.dual.socle_degree()
    }

    pub fn nvars(&self) -> usize {
        self.dual.nvars()
    }

    /// Total vector space dimension.
    pub fn dim(&self) -> usize {
        self.hvector.total()
    }

    /// The standard monomial basis of `A_d`.
    pub fn basis(&self, d: usize) -> &[Monomial] {
        &self.bases[d]
    }

    /// The matrix of multiplication by the variable `x_(v+1)` from `A_d`
    /// to `A_(d+1)`; for `d = s` the target is zero.
    pub fn variable_map(&self, d: usize, v: usize) -> &QMatrix {
        &self.var_maps[d][v]
    }

    /// The matrix of multiplication by a linear form from `A_d` to
    /// `A_(d+1)`.
    pub fn linear_map(&self, ell: &LinearForm, d: usize) -> QMatrix {
        assert_eq!(ell.nvars(), self.nvars());
        assert!(d <= self.socle_degree());
        let maps = &self.var_maps[d];
        let rows = maps[0].rows();
        let cols = maps[0].cols();
        QMatrix::from_fn(rows, cols, |r, c| {
            let mut acc = Rat::zero();
            for (v, coeff) in ell.coefficients().iter().enumerate() {
                if !coeff.is_zero() {
                    acc += coeff * maps[v].at(r, c);
                }
            }
            acc
        })
    }

    /// The matrix of multiplication by `ell^k` from `A_i` to `A_(i+k)`.
    /// When `i + k` exceeds the socle degree the target space is zero and
    /// the matrix has no rows.
    pub fn mult_map(&self, ell: &LinearForm, i: usize, k: usize) -> QMatrix {
        let s = self.socle_degree();
        assert!(i <= s);
        let h_i = self.hvector.get(i);
        if k == 0 {
            return QMatrix::identity(h_i);
        }
        if i + k > s {
            return QMatrix::zeros(0, h_i);
        }
        let mut acc = self.linear_map(ell, i);
        for d in i + 1..i + k {
            acc = self.linear_map(ell, d).mul(&acc);
        }
        acc
    }

    fn wlp_with(&self, ell: &LinearForm) -> bool {
        let s = self.socle_degree();
        (0..s).all(|i| {
            let expected = self.hvector.get(i).min(self.hvector.get(i + 1));
            self.linear_map(ell, i).rank() == expected
        })
    }

    fn slp_with(&self, ell: &LinearForm) -> bool {
        let s = self.socle_degree();
        (0..=s / 2).all(|i| {
            let h_i = self.hvector.get(i);
            if self.hvector.get(s - i) != h_i {
                return false;
            }
            self.mult_map(ell, i, s - 2 * i).rank() == h_i
        })
    }

    fn jordan_with(&self, ell: &LinearForm) -> Partition {
        let s = self.socle_degree();
        let dim = self.dim();
        // r[k] = rank of ell^k on all of A.
        let mut r = vec![dim];
        for k in 1..=s {
            r.push((0..=s - k).map(|i| self.mult_map(ell, i, k).rank()).sum());
        }
        r.extend([0, 0]);
        let mut parts = Vec::new();
        for k in 1..=s + 1 {
            let m = r[k - 1] as isize - 2 * r[k] as isize + r[k + 1] as isize;
            debug_assert!(m >= 0, "block multiplicities must be nonnegative");
            parts.extend(std::iter::repeat_n(k, m.max(0) as usize));
        }
        let jt = Partition::new(parts);
        debug_assert_eq!(jt.total(), dim);
        jt
    }

    /// Weak Lefschetz at the given element: multiplication by `ell` has
    /// maximal rank in every consecutive degree.
    pub fn has_wlp_at(&self, ell: &LinearForm) -> Result<bool> {
        if ell.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(self.wlp_with(ell))
    }

    /// Strong Lefschetz at the given element. Because the Hilbert
    /// function here is symmetric, it suffices that
    /// `ell^(s-2i) : A_i -> A_(s-i)` is bijective for `0 <= i <= s/2`.
    pub fn has_slp_at(&self, ell: &LinearForm) -> Result<bool> {
        if ell.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(self.slp_with(ell))
    }

    /// The Jordan type of multiplication by `ell`: the partition of
    /// `dim A` by Jordan block sizes of the nilpotent operator.
    pub fn jordan_type(&self, ell: &LinearForm) -> Result<Partition> {
        if ell.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(self.jordan_with(ell))
    }

    /// Tries the all-ones element and then `trials` seeded random integer
    /// elements, recording the outcome of each and the first weak and
    /// strong Lefschetz witnesses found. At least one random trial is
    /// required; candidates that happen to draw the zero form are recorded
    /// but never accepted as witnesses.
    pub fn probe_lefschetz(
        &self,
        seed: u64,
        trials: usize,
        coeff_bound: i64,
    ) -> Result<LefschetzProbe> {
        if trials == 0 {
            return Err(Error::InvalidInput(
                "at least one random trial is required".to_string(),
            ));
        }
        let n = self.nvars();
        let bound = coeff_bound.max(0);
        let mut candidates = vec![("all-ones".to_string(), LinearForm::ones(n))];
        for t in 0..trials {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
            candidates.push((format!("random trial {t}"), LinearForm::from_ints(&coeffs)));
        }

        let expected_jordan = slp_jordan_type(&self.hvector);
        let mut probe = LefschetzProbe {
            trials: Vec::with_capacity(candidates.len()),
            wlp_witness: None,
            slp_witness: None,
        };
        for (description, ell) in candidates {
            let wlp = self.wlp_with(&ell);
            let slp = self.slp_with(&ell);
            let jordan = self.jordan_with(&ell);
            assert_eq!(
                slp,
                jordan == expected_jordan,
                "strong Lefschetz must match the conjugate Hilbert partition"
            );
            if wlp && probe.wlp_witness.is_none() && !ell.is_zero() {
                probe.wlp_witness = Some(ell.clone());
            }
            if slp && probe.slp_witness.is_none() && !ell.is_zero() {
                probe.slp_witness = Some(ell.clone());
            }
            probe.trials.push(ProbeTrial {
                description,
                candidate: ell,
                wlp,
                slp,
                jordan,
            });
        }
        Ok(probe)
    }
}

/// One tested candidate in a Lefschetz probe.
#[derive(Clone, Debug)]
pub struct ProbeTrial {
    pub description: String,
    pub candidate: LinearForm,
    pub wlp: bool,
    pub slp: bool,
    pub jordan: Partition,
}

/// The outcome of probing for Lefschetz elements: every trial together
/// with the first witnesses found.
#[derive(Clone, Debug)]
pub struct LefschetzProbe {
    pub trials: Vec<ProbeTrial>,
    pub wlp_witness: Option<LinearForm>,
    pub slp_witness: Option<LinearForm>,
}

impl LefschetzProbe {
    pub fn has_wlp(&self) -> bool {
        self.wlp_witness.is_some()
    }

    pub fn has_slp(&self) -> bool {
        self.slp_witness.is_some()
    }
}
