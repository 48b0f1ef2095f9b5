//! Finite enumeration engines for classifying Betti tables of Artinian
//! Gorenstein algebras in four variables with socle degree five.
//!
//! Three classifications are replayed as exhaustive searches over small
//! integer tuples: the unique table for the constant Hilbert function
//! `(1,4,4,4,4,1)`, the unique table of an equigenerated ideal, and the
//! unique complete intersection. Each search encodes the arithmetic
//! constraints that Hilbert function relations and Macaulay/Gotzmann
//! growth bounds impose on the unknown entries of a symmetric table, and
//! reports which constraint eliminated which share of the search space.
//!
//! The module also ships the conjectured list of nine Betti tables for
//! the Hilbert function `(1,4,7,7,4,1)` together with consistency checks
//! and their partial order under entrywise comparison.

use serde::{Deserialize, Serialize};

use crate::apolarity::HVector;
use crate::error::{Error, Result};
use crate::polyring::binomial;
use crate::resolution::{betti_symmetry_check, hilbert_from_betti, BettiTable};

/// All nondecreasing degree tuples `(d_1, ..., d_n)` with every
/// `d_i >= 2` and `sum d_i = s + n`: the possible generator degrees of a
/// complete intersection with socle degree `s` in `n` variables.
pub fn enumerate_ci_degrees(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn extend(
        remaining: usize,
        slots: usize,
        min: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let mut d = min;
        while d * slots <= remaining {
            current.push(d);
            extend(remaining - d, slots - 1, d, current, out);
            current.pop();
            d += 1;
        }
    }
    extend(s + n, n, 2, &mut current, &mut out);
    out
}

/// The Betti table of a complete intersection with the given generator
/// degrees: the Koszul complex gives `b_{i,j}` = number of `i`-element
/// subsets of the degrees summing to `j`.
pub fn koszul_betti_from_degrees(degrees: &[usize]) -> BettiTable {
    let n = degrees.len();
    assert!(n < usize::BITS as usize, "too many generators");
    let s = degrees.iter().sum::<usize>() - n;
    let mut entries = std::collections::BTreeMap::new();
    for mask in 0usize..1 << n {
        let i = mask.count_ones() as usize;
        let j: usize = (0..n)
            .filter(|t| mask >> t & 1 == 1)
            .map(|t| degrees[t])
            .sum();
        *entries.entry((i, j)).or_insert(0) += 1;
    }
    BettiTable::from_entries(n, s, entries.into_iter().map(|((i, j), b)| (i, j, b)))
}

/// The H-vector of a complete intersection with the given generator
/// degrees: coefficients of the product of `1 + T + ... + T^(d-1)`.
pub fn hvector_from_ci_degrees(degrees: &[usize]) -> HVector {
    let mut coeffs = vec![1usize];
    for &d in degrees {
        assert!(d >= 1);
        let mut next = vec![0usize; coeffs.len() + d - 1];
        for (k, &c) in coeffs.iter().enumerate() {
            for e in 0..d {
                next[k + e] += c;
            }
        }
        coeffs = next;
    }
    HVector(coeffs)
}

/// The complete intersection classification for given `n` and `s`: every
/// admissible degree tuple with its Koszul table and H-vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CiReport {
    pub n: usize,
    pub socle: usize,
    pub degrees: Vec<Vec<usize>>,
    pub tables: Vec<BettiTable>,
    pub hvectors: Vec<HVector>,
}

pub fn classify_ci(n: usize, s: usize) -> CiReport {
    let degrees = enumerate_ci_degrees(n, s);
    let tables = degrees
        .iter()
        .map(|d| koszul_betti_from_degrees(d))
        .collect();
    let hvectors = degrees.iter().map(|d| hvector_from_ci_degrees(d)).collect();
    CiReport {
        n,
        socle: s,
        degrees,
        tables,
        hvectors,
    }
}

/// Outcome of the equigenerated classification in four variables with
/// socle degree five. A quadric-generated table leads to a linear system
/// whose unique solution would be a complete intersection of four
/// quadrics, excluded because that has socle degree four; the
/// cubic-generated template is determined outright.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EquigeneratedReport {
    pub search_bound: usize,
    /// Nonnegative solutions `(k, a, b, e)` of the quadric template's
    /// linear system.
    pub quadric_solutions: Vec<[usize; 4]>,
    /// The Koszul table of a complete intersection of four quadrics.
    pub quadric_ci_table: BettiTable,
    /// Socle degree of that complete intersection; since it is not 5,
    /// the quadric template is excluded.
    pub quadric_ci_socle: usize,
    pub quadric_excluded: bool,
    /// Degree-3 generator count forced in the cubic template.
    pub cubic_d: usize,
    /// First-syzygy entry forced in the cubic template.
    pub cubic_e: usize,
    pub hvector: HVector,
    pub table: BettiTable,
}

/// Replays the equigenerated classification. The quadric template's
/// unknowns `(k, a, b, e)` must satisfy
///
/// ```text
/// k = 10 - a            (h_2)
/// k = 20 - 4a + b       (h_3)
/// 4 = 35 - 10a + 4b + e (h_4)
/// 1 = 56 - 20a + 10b + 5e (h_5)
/// ```
///
/// and the solution set is found by exhaustive search up to
/// `search_bound` in every coordinate.
pub fn classify_equigenerated(search_bound: usize) -> EquigeneratedReport {
    let m = search_bound as i64;
    let mut quadric_solutions = Vec::new();
    for k in 0..=m {
        for a in 0..=m {
            if k != 10 - a {
                continue;
            }
            for b in 0..=m {
                if k != 20 - 4 * a + b {
                    continue;
                }
                for e in 0..=m {
                    if 4 == 35 - 10 * a + 4 * b + e && 1 == 56 - 20 * a + 10 * b + 5 * e {
                        quadric_solutions.push([k as usize, a as usize, b as usize, e as usize]);
                    }
                }
            }
        }
    }
    let quadric_ci_table = koszul_betti_from_degrees(&[2, 2, 2, 2]);
    let quadric_ci_socle = quadric_ci_table.socle_degree();

    // With no quadrics, h_2 = dim S_2 = 10, and symmetry forces
    // h_3 = 10 as well, so there are d = dim S_3 - 10 cubic generators.
    let h2 = binomial(3 + 2, 2);
    let cubic_d = binomial(3 + 3, 3) - h2;
    // h_4 = 35 - (4d - e) = 4 pins the first syzygies in degree 4.
    let cubic_e = 4 * cubic_d - 31;
    let hvector = HVector(vec![1, 4, h2, h2, 4, 1]);
    let table = BettiTable::from_entries(
        4,
        5,
        [
            (0, 0, 1),
            (1, 3, cubic_d),
            (2, 4, cubic_e),
            (2, 5, cubic_e),
            (3, 6, cubic_d),
            (4, 9, 1),
        ],
    );
    debug_assert_eq!(hilbert_from_betti(&table).unwrap(), hvector);
    EquigeneratedReport {
        search_bound,
        quadric_solutions,
        quadric_ci_table,
        quadric_ci_socle,
        quadric_excluded: quadric_ci_socle != 5,
        cubic_d,
        cubic_e,
        hvector,
        table,
    }
}

/// The unknown entries `(b, c, d, e, f)` of a symmetric Betti table for
/// the Hilbert function `(1,4,4,4,4,1)`:
///
/// ```text
///        0 1  2 3 4
///    0:  1 .  . . .
///    1:  . 6  b c .
///    2:  . d  e f .
///    3:  . f  e d .
///    4:  . c  b 6 .
///    5:  . .  . . 1
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct K4Tuple {
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
}

impl K4Tuple {
    /// The full symmetric table with these unknowns filled in.
    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_entries(
            4,
            5,
            [
                (0, 0, 1),
                (1, 2, 6),
                (2, 3, self.b),
                (3, 4, self.c),
                (1, 3, self.d),
                (2, 4, self.e),
                (3, 5, self.f),
                (1, 4, self.f),
                (2, 5, self.e),
                (3, 6, self.d),
                (1, 5, self.c),
                (2, 6, self.b),
                (3, 7, 6),
                (4, 9, 1),
            ],
        )
    }
}

impl std::fmt::Display for K4Tuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(b,c,d,e,f)=({},{},{},{},{})",
            self.b, self.c, self.d, self.e, self.f
        )
    }
}

/// One constraint of the classification, as a named predicate on the
/// unknown tuple.
pub struct K4Constraint {
    pub name: &'static str,
    pub description: &'static str,
    predicate: fn(&K4Tuple) -> bool,
}

impl K4Constraint {
    pub fn accepts(&self, t: &K4Tuple) -> bool {
        (self.predicate)(t)
    }
}

/// The constraint set, in the order the proof derives them.
pub fn k4_constraints() -> Vec<K4Constraint> {
    vec![
        K4Constraint {
            name: "relation_h3",
            description: "h_3 = 4 forces b = d + 8",
            predicate: |t| t.b == t.d + 8,
        },
        K4Constraint {
            name: "relation_h4",
            description: "h_4 = 4 forces c - e + f = 3",
            predicate: |t| t.c + t.f == t.e + 3,
        },
        K4Constraint {
            name: "macaulay_j2",
            description: "Macaulay growth of the quadric ideal gives h_3(S/J_2) <= 5, so b is 8 or 9",
            predicate: |t| (8..=9).contains(&t.b),
        },
        K4Constraint {
            name: "gotzmann_j2",
            description: "if b = 9 the quadric growth is maximal and persists, forcing c >= 6",
            predicate: |t| !(t.b == 9 && t.c < 6),
        },
        K4Constraint {
            name: "macaulay_j3",
            description: "Macaulay growth from degree 3 gives h_4(S/J_3) <= 5, i.e. c >= e + 2",
            predicate: |t| t.c >= t.e + 2,
        },
        K4Constraint {
            name: "macaulay_j4",
            description: "Macaulay growth from degree 4 gives h_5(S/J_4) <= 4, i.e. c <= 3",
            predicate: |t| t.c <= 3,
        },
        K4Constraint {
            name: "f_bound",
            description: "c <= 3 together with c - e + f = 3 forces f <= 1",
            predicate: |t| t.f <= 1,
        },
        K4Constraint {
            name: "masked_quadric_growth",
            description:
                "with no cubic generators, f = 1 would force a negative syzygy count for the quadric ideal",
            predicate: |t| !(t.d == 0 && t.f == 1),
        },
    ]
}

/// Cap on explicitly stored survivors; the count is always exact.
const K4_SURVIVOR_CAP: usize = 10_000;

/// Outcome of the `(1,4,4,4,4,1)` table search.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct K4Report {
    pub search_bound: usize,
    pub skipped: Vec<String>,
    /// For each active constraint, in order: how many tuples it was the
    /// first to eliminate.
    pub eliminated: Vec<(String, u64)>,
    pub survivor_count: u64,
    pub survivors: Vec<K4Tuple>,
    pub truncated: bool,
}

impl K4Report {
    pub fn unique_survivor(&self) -> Option<K4Tuple> {
        if self.survivor_count == 1 {
            self.survivors.first().copied()
        } else {
            None
        }
    }
}

/// Enumerates all tuples `(b,c,d,e,f)` bounded by `search_bound` against
/// the full constraint set.
pub fn classify_k4(search_bound: usize) -> Result<K4Report> {
    classify_k4_filtered(search_bound, &[])
}

/// Like [`classify_k4`] but with the named constraints disabled, to show
/// what each one eliminates.
pub fn classify_k4_filtered(search_bound: usize, skip: &[&str]) -> Result<K4Report> {
    if search_bound < 10 {
        return Err(Error::InvalidInput(
            "the search bound must be at least 10 to contain the classified table".to_string(),
        ));
    }
    let constraints = k4_constraints();
    for name in skip {
        if !constraints.iter().any(|c| c.name == *name) {
            return Err(Error::InvalidInput(format!("unknown constraint `{name}`")));
        }
    }
    let active: Vec<&K4Constraint> = constraints
        .iter()
        .filter(|c| !skip.contains(&c.name))
        .collect();
    let mut eliminated = vec![0u64; active.len()];
    let mut survivors = Vec::new();
    let mut survivor_count = 0u64;
    let m = search_bound;
    let cube = ((m + 1) as u64).pow(3);
    // The first constraint depends only on (b, d); when it is active and
    // fails, every (c, e, f) extension is charged to it in bulk.
    let bulk_first = active.first().is_some_and(|c| c.name == "relation_h3");
    for b in 0..=m {
        for d in 0..=m {
            if bulk_first && b != d + 8 {
                eliminated[0] += cube;
                continue;
            }
            for c in 0..=m {
                for e in 0..=m {
                    'tuple: for f in 0..=m {
                        let t = K4Tuple { b, c, d, e, f };
                        for (idx, constraint) in active.iter().enumerate() {
                            if !constraint.accepts(&t) {
                                eliminated[idx] += 1;
                                continue 'tuple;
                            }
                        }
                        survivor_count += 1;
                        if survivors.len() < K4_SURVIVOR_CAP {
                            survivors.push(t);
                        }
                    }
                }
            }
        }
    }
    Ok(K4Report {
        search_bound,
        skipped: skip.iter().map(|s| s.to_string()).collect(),
        eliminated: active
            .iter()
            .zip(&eliminated)
            .map(|(c, &n)| (c.name.to_string(), n))
            .collect(),
        survivor_count,
        truncated: survivor_count as usize > survivors.len(),
        survivors,
    })
}

/// Entrywise comparison of Betti tables: `a <= b` when every entry of
/// `a` is at most the corresponding entry of `b`. Tables over different
/// variable counts are incomparable.
pub fn betti_leq(a: &BettiTable, b: &BettiTable) -> bool {
    a.nvars() == b.nvars() && a.entries().all(|((i, j), v)| v <= b.entry(i, j))
}

/// A symmetric table for the Hilbert function `(1,4,7,7,4,1)` with the
/// free entries `p = b_{2,3}`, `q = b_{1,4}`, `r = b_{3,4}`; all other
/// entries are determined by symmetry and the Hilbert function.
fn consistent_table(p: usize, q: usize, r: usize) -> BettiTable {
    BettiTable::from_entries(
        4,
        5,
        [
            (0, 0, 1),
            (1, 2, 3),
            (2, 3, p),
            (3, 4, r),
            (1, 3, 1 + p),
            (2, 4, 3 + q + r),
            (3, 5, q),
            (1, 4, q),
            (2, 5, 3 + q + r),
            (3, 6, 1 + p),
            (1, 5, r),
            (2, 6, p),
            (3, 7, 3),
            (4, 9, 1),
        ],
    )
}

/// The nine conjectured Betti tables for the Hilbert function
/// `(1,4,7,7,4,1)`, in their published display order. The first is the
/// complete intersection table; no realizability claim is attached to
/// the others.
pub fn conjectured_tables() -> Vec<BettiTable> {
    [
        (0, 0, 0),
        (2, 0, 0),
        (1, 1, 0),
        (0, 3, 0),
        (2, 1, 0),
        (2, 3, 0),
        (3, 1, 1),
        (3, 3, 1),
        (1, 3, 0),
    ]
    .into_iter()
    .map(|(p, q, r)| consistent_table(p, q, r))
    .collect()
}

/// Consistency report for the conjectured tables: symmetry, Hilbert
/// consistency, and the partial order they form under [`betti_leq`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub tables: Vec<BettiTable>,
    pub target_hvector: HVector,
    pub all_symmetric: bool,
    pub all_hilbert_consistent: bool,
    pub all_distinct: bool,
    /// Pairs `(i, j)` with table `i` strictly below table `j`.
    pub comparable_pairs: Vec<(usize, usize)>,
    /// Covering relations of the order.
    pub hasse_edges: Vec<(usize, usize)>,
    pub antisymmetric: bool,
    pub transitive: bool,
}

pub fn check_conjectured_tables() -> ConjectureReport {
    let tables = conjectured_tables();
    let target = HVector(vec![1, 4, 7, 7, 4, 1]);
    let all_symmetric = tables.iter().all(betti_symmetry_check);
    let all_hilbert_consistent = tables
        .iter()
        .all(|t| hilbert_from_betti(t).is_ok_and(|h| h == target));
    let all_distinct = tables
        .iter()
        .enumerate()
        .all(|(i, t)| tables[i + 1..].iter().all(|u| u != t));
    let mut comparable_pairs = Vec::new();
    for i in 0..tables.len() {
        for j in 0..tables.len() {
            if i != j && betti_leq(&tables[i], &tables[j]) {
                comparable_pairs.push((i, j));
            }
        }
    }
    let less = |i: usize, j: usize| comparable_pairs.contains(&(i, j));
    let antisymmetric = comparable_pairs.iter().all(|&(i, j)| !less(j, i));
    let transitive = comparable_pairs
        .iter()
        .all(|&(i, j)| comparable_pairs.iter().all(|&(k, l)| k != j || less(i, l)));
    let hasse_edges = comparable_pairs
        .iter()
        .copied()
        .filter(|&(i, j)| !(0..tables.len()).any(|k| k != i && k != j && less(i, k) && less(k, j)))
        .collect();
    ConjectureReport {
        tables,
        target_hvector: target,
        all_symmetric,
        all_hilbert_consistent,
        all_distinct,
        comparable_pairs,
        hasse_edges,
        antisymmetric,
        transitive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apolarity::DualGenerator;
    use crate::artin::ArtinAlgebra;
    use crate::polyring::{Alphabet, RingSpec};
    use crate::resolution::betti_table;

    #[test]
    fn ci_degree_enumeration() {
        assert_eq!(enumerate_ci_degrees(4, 5), vec![vec![2, 2, 2, 3]]);
        assert_eq!(enumerate_ci_degrees(4, 4), vec![vec![2, 2, 2, 2]]);
        assert_eq!(enumerate_ci_degrees(3, 3), vec![vec![2, 2, 2]]);
        assert_eq!(
            enumerate_ci_degrees(4, 6),
            vec![vec![2, 2, 2, 4], vec![2, 2, 3, 3]]
        );
    }

    #[test]
    fn koszul_tables_match_direct_computation() {
        let f = RingSpec::new(4)
            .parse_as("X1*X2*X3*X4^2", Alphabet::Dual)
            .unwrap();
        let a = ArtinAlgebra::build(DualGenerator::new(f).unwrap());
        assert_eq!(koszul_betti_from_degrees(&[2, 2, 2, 3]), betti_table(&a));
        let quad = koszul_betti_from_degrees(&[2, 2, 2, 2]);
        assert_eq!(quad.totals(), vec![1, 4, 6, 4, 1]);
        assert_eq!(quad.socle_degree(), 4);
    }

    #[test]
    fn ci_hvectors() {
        assert_eq!(
            hvector_from_ci_degrees(&[2, 2, 2, 3]).values(),
            &[1, 4, 7, 7, 4, 1]
        );
        assert_eq!(
            hvector_from_ci_degrees(&[2, 2, 2, 2]).values(),
            &[1, 4, 6, 4, 1]
        );
        assert_eq!(hvector_from_ci_degrees(&[2, 2, 2]).values(), &[1, 3, 3, 1]);
    }

    #[test]
    fn equigenerated_classification() {
        let report = classify_equigenerated(60);
        assert_eq!(report.quadric_solutions, vec![[6, 4, 2, 1]]);
        assert_eq!(report.quadric_ci_socle, 4);
        assert!(report.quadric_excluded);
        assert_eq!(report.cubic_d, 10);
        assert_eq!(report.cubic_e, 9);
        assert_eq!(report.hvector.values(), &[1, 4, 10, 10, 4, 1]);
        assert_eq!(report.table.totals(), vec![1, 10, 18, 10, 1]);
        assert!(report.table.is_symmetric());
    }

    #[test]
    fn k4_search_finds_the_unique_table() {
        for bound in [10, 20] {
            let report = classify_k4(bound).unwrap();
            assert_eq!(report.survivor_count, 1);
            let t = report.unique_survivor().unwrap();
            assert_eq!(
                t,
                K4Tuple {
                    b: 8,
                    c: 3,
                    d: 0,
                    e: 0,
                    f: 0
                }
            );
            let total: u64 = report.eliminated.iter().map(|(_, n)| n).sum();
            assert_eq!(total + report.survivor_count, ((bound as u64) + 1).pow(5));
            assert_eq!(t.betti_table().totals(), vec![1, 9, 16, 9, 1]);
            assert!(t.betti_table().is_symmetric());
            assert_eq!(
                hilbert_from_betti(&t.betti_table()).unwrap().values(),
                &[1, 4, 4, 4, 4, 1]
            );
        }
    }

    #[test]
    fn dropping_the_gotzmann_step_admits_maximal_growth() {
        let report = classify_k4_filtered(20, &["gotzmann_j2"]).unwrap();
        let expected = [
            (8, 3, 0, 0, 0),
            (9, 2, 1, 0, 1),
            (9, 3, 1, 0, 0),
            (9, 3, 1, 1, 1),
        ]
        .map(|(b, c, d, e, f)| K4Tuple { b, c, d, e, f });
        assert_eq!(report.survivors, expected);
        assert!(report.survivors[1..].iter().all(|t| t.b == 9));
    }

    #[test]
    fn k4_rejects_bad_input() {
        assert!(matches!(classify_k4(9), Err(Error::InvalidInput(_))));
        assert!(matches!(
            classify_k4_filtered(10, &["no_such_rule"]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn entrywise_order_on_tables() {
        let tables = conjectured_tables();
        assert!(betti_leq(&tables[0], &tables[0]));
        assert!(betti_leq(&tables[0], &tables[1]));
        assert!(!betti_leq(&tables[1], &tables[0]));
        // Totals (1,6,10,6,1) vs (1,7,12,7,1) yet incomparable entrywise.
        assert!(!betti_leq(&tables[1], &tables[3]));
        assert!(!betti_leq(&tables[3], &tables[1]));
    }

    #[test]
    fn conjectured_tables_are_consistent() {
        let report = check_conjectured_tables();
        assert_eq!(report.tables.len(), 9);
        assert!(report.all_symmetric);
        assert!(report.all_hilbert_consistent);
        assert!(report.all_distinct);
        assert!(report.antisymmetric);
        assert!(report.transitive);
        assert_eq!(report.comparable_pairs.len(), 27);
        let totals: Vec<Vec<usize>> = report.tables.iter().map(|t| t.totals()).collect();
        assert_eq!(
            totals,
            vec![
                vec![1, 4, 6, 4, 1],
                vec![1, 6, 10, 6, 1],
                vec![1, 6, 10, 6, 1],
                vec![1, 7, 12, 7, 1],
                vec![1, 7, 12, 7, 1],
                vec![1, 9, 16, 9, 1],
                vec![1, 9, 16, 9, 1],
                vec![1, 11, 20, 11, 1],
                vec![1, 8, 14, 8, 1],
            ]
        );
        // The complete intersection table sits at the bottom.
        assert!((1..9).all(|j| report.comparable_pairs.contains(&(0, j))));
        // Covers of the bottom element.
        assert!(report.hasse_edges.contains(&(0, 1)));
        assert!(!report.hasse_edges.contains(&(0, 5)));
    }

    #[test]
    fn first_conjectured_table_is_the_ci_table() {
        assert_eq!(
            conjectured_tables()[0],
            koszul_betti_from_degrees(&[2, 2, 2, 3])
        );
    }
}
