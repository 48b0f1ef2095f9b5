//! Graded Betti numbers via Koszul homology, Hilbert functions from Betti
//! tables, truncated-ideal growth, and the Macaulay bound machinery.
//!
//! The graded Betti numbers of `A = S/I` are the dimensions of the graded
//! pieces of `Tor_i(A, K)`, computed here as homology of the Koszul
//! complex on the `n` variables tensored with `A`. Every graded strand is
//! a small exact linear algebra problem over the rationals, so minimality
//! is automatic and no Groebner machinery is needed.
//!
//! The table is displayed the way such tables are usually printed: columns
//! indexed by the homological degree `i`, rows by `j - i`, a `total` row
//! on top, and `.` for zero entries.

use std::collections::{BTreeMap, HashMap};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::apolarity::{DualGenerator, HVector};
use crate::artin::ArtinAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rat};
use crate::polyring::{binomial, Monomial, RingSpec};

/// A graded Betti table: the nonzero `b_{i,j}` of a cyclic graded quotient
/// of a polynomial ring in `n` variables with socle degree `s`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(from = "BettiTableRepr", into = "BettiTableRepr")]
pub struct BettiTable {
    n: usize,
    socle: usize,
    entries: BTreeMap<(usize, usize), usize>,
}

#[derive(Clone, Serialize, Deserialize)]
struct BettiTableRepr {
    n: usize,
    s: usize,
    entries: Vec<(usize, usize, usize)>,
}

impl From<BettiTableRepr> for BettiTable {
    fn from(repr: BettiTableRepr) -> BettiTable {
        BettiTable::from_entries(repr.n, repr.s, repr.entries)
    }
}

impl From<BettiTable> for BettiTableRepr {
    fn from(table: BettiTable) -> BettiTableRepr {
        BettiTableRepr {
            n: table.n,
            s: table.socle,
            entries: table
                .entries
                .into_iter()
                .map(|((i, j), b)| (i, j, b))
                .collect(),
        }
    }
}

impl BettiTable {
    /// Builds a table from explicit `(i, j, b)` entries; zero entries are
    /// dropped.
    pub fn from_entries(
        n: usize,
        socle: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize)>,
    ) -> BettiTable {
        let mut map = BTreeMap::new();
        for (i, j, b) in entries {
            debug_assert!(i <= n, "homological degree exceeds variable count");
            if b > 0 {
                map.insert((i, j), b);
            }
        }
        BettiTable {
            n,
            socle,
            entries: map,
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn socle_degree(&self) -> usize {
        self.socle
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), b)`, ordered lexicographically.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &b)| (k, b))
    }

    /// Total Betti number `b_i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &b)| b)
            .sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.n).map(|i| self.total(i)).collect()
    }

    /// Gorenstein symmetry: `b_{i,j} = b_{n-i, (n+s)-j}` for all entries.
    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(&(i, j), &b)| {
            i <= self.n
                && j <= self.n + self.socle
                && self.entry(self.n - i, self.n + self.socle - j) == b
        })
    }

    /// Renders the table with columns `i = 0..=n`, rows `r = 0..=s`
    /// containing `b_{i,i+r}`, and a leading `total` row.
    pub fn render_text(&self) -> String {
        let cell = |v: usize| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let totals = self.totals();
        let mut widths: Vec<usize> = (0..=self.n).map(|i| i.to_string().len()).collect();
        for i in 0..=self.n {
            widths[i] = widths[i].max(cell(totals[i]).len());
            for r in 0..=self.socle {
                widths[i] = widths[i].max(cell(self.entry(i, i + r)).len());
            }
        }
        let line = |label: &str, cells: &[String]| {
            let mut out = format!("{label:>6}");
            for (i, c) in cells.iter().enumerate() {
                out.push(' ');
                out.push_str(&format!("{c:>width$}", width = widths[i]));
            }
            out
        };
        let mut body = Vec::new();
        let header: Vec<String> = (0..=self.n).map(|i| i.to_string()).collect();
        body.push(line("", &header));
        let total_cells: Vec<String> = totals.iter().map(|&t| cell(t)).collect();
        body.push(line("total:", &total_cells));
        for r in 0..=self.socle {
            let cells: Vec<String> = (0..=self.n).map(|i| cell(self.entry(i, i + r))).collect();
            body.push(line(&format!("{r}:"), &cells));
        }
        let inner = 6 + widths.iter().map(|w| w + 1).sum::<usize>();
        let frame = format!("+{}+", "-".repeat(inner));
        let mut out = String::new();
        out.push_str(&frame);
        out.push('\n');
        for row in body {
            out.push('|');
            out.push_str(&row);
            out.push_str("|\n");
        }
        out.push_str(&frame);
        out.push('\n');
        out
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order, each sorted
/// ascending.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut current = Vec::with_capacity(k);
    fn extend(
        n: usize,
        k: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            extend(n, k, v + 1, current, out);
            current.pop();
        }
    }
    extend(n, k, 0, &mut current, &mut out);
    out
}

/// Rank of the degree-`j` strand of the Koszul differential
/// `d_i : (Lambda^i V (x) A)_j -> (Lambda^(i-1) V (x) A)_j`.
fn koszul_rank(algebra: &ArtinAlgebra, subs: &[Vec<Vec<usize>>], i: usize, j: usize) -> usize {
    let s = algebra.socle_degree();
    let h = algebra.hilbert_function();
    let src_deg = match j.checked_sub(i) {
        Some(d) if d <= s => d,
        _ => return 0,
    };
    let h_src = h.get(src_deg);
    let h_tgt = h.get(src_deg + 1);
    let cols = subs[i].len() * h_src;
    let rows = subs[i - 1].len() * h_tgt;
    if rows == 0 || cols == 0 {
        return 0;
    }
    let tgt_index: HashMap<&[usize], usize> = subs[i - 1]
        .iter()
        .enumerate()
        .map(|(k, t)| (t.as_slice(), k))
        .collect();
    let mut m = QMatrix::zeros(rows, cols);
    for (ti, t_set) in subs[i].iter().enumerate() {
        for r in 0..i {
            let v = t_set[r];
            let mut reduced = t_set.clone();
            reduced.remove(r);
            let block = tgt_index[reduced.as_slice()];
            let vmap = algebra.variable_map(src_deg, v);
            for col_m in 0..h_src {
                for row_m in 0..h_tgt {
                    let val = vmap.at(row_m, col_m);
                    if !val.is_zero() {
                        let signed = if r % 2 == 0 {
                            val.clone()
                        } else {
                            -val.clone()
                        };
                        m.set(block * h_tgt + row_m, ti * h_src + col_m, signed);
                    }
                }
            }
        }
    }
    m.rank()
}

/// The graded Betti table of `A`, computed strand by strand as Koszul
/// homology: `b_{i,j} = dim (K_i)_j - rank (d_i)_j - rank (d_{i+1})_j`.
pub fn betti_table(algebra: &ArtinAlgebra) -> BettiTable {
    let n = algebra.nvars();
    let s = algebra.socle_degree();
    let h = algebra.hilbert_function();
    let subs: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| subsets(n, i)).collect();
    let mut entries = Vec::new();
    for j in 0..=n + s {
        let mut ranks = vec![0usize];
        ranks.extend((1..=n).map(|i| koszul_rank(algebra, &subs, i, j)));
        ranks.push(0);
        for i in 0..=n {
            let dim = match j.checked_sub(i) {
                Some(d) if d <= s => binomial(n, i) * h.get(d),
                _ => 0,
            };
            let b = dim
                .checked_sub(ranks[i])
                .and_then(|x| x.checked_sub(ranks[i + 1]))
                .expect("homology dimension is nonnegative");
            entries.push((i, j, b));
        }
    }
    BettiTable::from_entries(n, s, entries)
}

/// Gorenstein symmetry check, `b_{i,j} = b_{n-i,(n+s)-j}`.
pub fn betti_symmetry_check(table: &BettiTable) -> bool {
    table.is_symmetric()
}

/// Recovers the Hilbert function from a Betti table by dividing the
/// alternating numerator `sum (-1)^i b_{i,j} T^j` by `(1-T)^n`. Division
/// by `1-T` is a running prefix sum whose final value must vanish.
pub fn hilbert_from_betti(table: &BettiTable) -> Result<HVector> {
    let n = table.nvars();
    let top = table.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
    let mut coeffs = vec![0i64; top + 1];
    for (&(i, j), &b) in &table.entries {
        let signed = if i % 2 == 0 { b as i64 } else { -(b as i64) };
        coeffs[j] += signed;
    }
    for _ in 0..n {
        let mut acc = 0i64;
        for c in coeffs.iter_mut() {
            acc += *c;
            *c = acc;
        }
        match coeffs.pop() {
            Some(0) => {}
            Some(rem) => {
                return Err(Error::InconsistentTable(format!(
                    "numerator is not divisible by (1-T)^{n}; remainder {rem}"
                )))
            }
            None => {
                return Err(Error::InconsistentTable(
                    "table is empty after division".to_string(),
                ))
            }
        }
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(Error::InconsistentTable(
            "Hilbert series is identically zero".to_string(),
        ));
    }
    let mut values = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if c < 0 {
            return Err(Error::InconsistentTable(format!(
                "Hilbert function has negative value {c}"
            )));
        }
        values.push(c as usize);
    }
    Ok(HVector(values))
}

/// The Macaulay representation of `h` in degree `t >= 1`: the unique
/// greedy expansion `h = C(a_t,t) + C(a_(t-1),t-1) + ...` with strictly
/// decreasing tops `a_t > a_(t-1) > ...`.
pub fn macaulay_rep(h: usize, t: usize) -> Vec<(usize, usize)> {
    assert!(t >= 1, "Macaulay representations need degree at least 1");
    let mut rep = Vec::new();
    let mut rem = h;
    let mut k = t;
    while rem > 0 {
        let mut a = k;
        while binomial(a + 1, k) <= rem {
            a += 1;
        }
        rep.push((a, k));
        rem -= binomial(a, k);
        k -= 1;
    }
    rep
}

/// Macaulay's growth bound `h^<t>`: each binomial of the representation
/// shifted by one, `sum C(a_k+1, k+1)`.
pub fn macaulay_bound(h: usize, t: usize) -> usize {
    macaulay_rep(h, t)
        .into_iter()
        .map(|(a, k)| binomial(a + 1, k + 1))
        .sum()
}

/// The value in degree `t + j` forced by Gotzmann persistence when growth
/// from degree `t` is maximal: every binomial shifted by `j`.
pub fn gotzmann_growth(h: usize, t: usize, j: usize) -> usize {
    macaulay_rep(h, t)
        .into_iter()
        .map(|(a, k)| binomial(a + j, k + j))
        .sum()
}

/// One failure of Macaulay's bound inside an H-vector: the entry in
/// `degree` has `value` exceeding the `bound` grown from the previous
/// degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MacaulayViolation {
    pub degree: usize,
    pub value: usize,
    pub bound: usize,
}

/// Checks that a Hilbert function is an O-sequence: `h_0 = 1` and
/// `h_(i+1) <= macaulay_bound(h_i, i)` for every `i >= 1`. Returns the
/// violations; an empty list means the sequence is admissible.
pub fn check_macaulay(hv: &HVector) -> Vec<MacaulayViolation> {
    let vals = hv.values();
    let mut out = Vec::new();
    if vals.is_empty() {
        return out;
    }
    if vals[0] != 1 {
        out.push(MacaulayViolation {
            degree: 0,
            value: vals[0],
            bound: 1,
        });
    }
    for i in 1..vals.len().saturating_sub(1) {
        let bound = macaulay_bound(vals[i], i);
        if vals[i + 1] > bound {
            out.push(MacaulayViolation {
                degree: i + 1,
                value: vals[i + 1],
                bound,
            });
        }
    }
    out
}

/// Hilbert function of `S/J_t` through degree `up_to`, where `J_t` is
/// generated by the elements of `ann(F)` of degree at most `t`: its
/// degree-`d` piece is `I_d` for `d <= t` and `S_(d-t) I_t` beyond.
pub fn truncated_ideal_hilbert(dual: &DualGenerator, t: usize, up_to: usize) -> Result<HVector> {
    let s = dual.socle_degree();
    if t < 1 || t > s + 1 {
        return Err(Error::DegreeOutOfRange {
            degree: t,
            socle: s,
        });
    }
    let ring = dual.ring();
    let ideal = dual.annihilator();
    let mut values = Vec::with_capacity(up_to + 1);
    let mut current = QMatrix::zeros(0, 1);
    for d in 0..=up_to {
        current = if d <= t {
            ideal.piece_matrix(d).clone()
        } else {
            grow_by_linear_span(&ring, &current, d)
        };
        values.push(ring.dim(d) - current.rows());
    }
    Ok(HVector(values))
}

/// Row span of `S_1 * rows` inside degree `d`, returned as echelon rows.
fn grow_by_linear_span(ring: &RingSpec, rows: &QMatrix, d: usize) -> QMatrix {
    let n = ring.nvars();
    let prev_basis = ring.monomial_basis(d - 1);
    let basis = ring.monomial_basis(d);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(c, m)| (m, c)).collect();
    let mut products: Vec<Vec<Rat>> = Vec::with_capacity(rows.rows() * n);
    for r in 0..rows.rows() {
        for v in 0..n {
            let mut row = vec![Rat::zero(); basis.len()];
            for (c, m) in prev_basis.iter().enumerate() {
                let val = rows.at(r, c);
                if !val.is_zero() {
                    row[index[&m.mul(&Monomial::variable(n, v))]] = val.clone();
                }
            }
            products.push(row);
        }
    }
    let stacked = QMatrix::from_rows(products, basis.len());
    let (rref, pivots) = stacked.rref();
    let kept: Vec<Vec<Rat>> = (0..pivots.len()).map(|r| rref.row(r).to_vec()).collect();
    QMatrix::from_rows(kept, basis.len())
}
