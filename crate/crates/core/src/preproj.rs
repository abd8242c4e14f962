//! The preprojective algebra `R` of the cyclic quiver.
//!
//! Two independent engines live here. [`RelationIdealTruncation`] is the
//! slow, generic one: free paths modulo the ideal generated by the vertex
//! relations `a_i a_i* - a_{i-1}* a_{i-1}`, computed degree by degree with
//! exact row reduction. [`AlgebraElement`] is the fast one: every path is
//! equal to a unique monomial `a_i .. a_{i+l-1} a_{i+l-1}* .. a_{i+l-k}*`,
//! so a monomial is just `(source, l, k)` and multiplication is a closed
//! formula. Tests check that the two agree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::linalg::{collect_row, SparseRow, Subspace};
use crate::quiver::{AdjacencyMatrix, ArrowRef, QuiverA, Word};
use crate::scalars::{CyclotomicContext, Scalar};

/// Canonical monomial: `nonstars` nonstar arrows from `source`, then `stars` star arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NFMonomial {
    pub source: usize,
    pub nonstars: usize,
    pub stars: usize,
}

impl NFMonomial {
    pub fn new(source: usize, nonstars: usize, stars: usize) -> Self {
        NFMonomial {
            source,
            nonstars,
            stars,
        }
    }

    pub fn idempotent(v: usize) -> Self {
        Self::new(v, 0, 0)
    }

    pub fn degree(&self) -> usize {
        self.nonstars + self.stars
    }

    pub fn target(&self, n: usize) -> usize {
        (self.source + self.nonstars + n * (self.stars / n + 1) - self.stars) % n
    }

    /// The word `a_i .. a_{i+l-1} a_{i+l-1}* .. a_{i+l-k}*`.
    pub fn representative(&self, q: &QuiverA) -> Word {
        let n = q.n();
        let mut arrows = Vec::with_capacity(self.degree());
        for t in 0..self.nonstars {
            arrows.push(ArrowRef::nonstar((self.source + t) % n));
        }
        let top = self.source + self.nonstars + n * (self.stars / n + 1);
        for t in 0..self.stars {
            arrows.push(ArrowRef::star((top - 1 - t) % n));
        }
        Word {
            source: self.source,
            arrows,
        }
    }

    /// All monomials of degree `d`: `n (d + 1)` of them.
    pub fn of_degree(n: usize, d: usize) -> Vec<NFMonomial> {
        let mut out = Vec::with_capacity(n * (d + 1));
        for source in 0..n {
            for l in (0..=d).rev() {
                out.push(NFMonomial::new(source, l, d - l));
            }
        }
        out.sort();
        out
    }
}

impl Ord for NFMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.source.cmp(&other.source))
            .then(other.nonstars.cmp(&self.nonstars))
    }
}

impl PartialOrd for NFMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NFMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF({},{},{})", self.source, self.nonstars, self.stars)
    }
}

/// The monomial a word equals in `R`. Never zero: star-then-nonstar pairs
/// are always `a_j* a_j`, which the vertex relation turns into `a_{j+1} a_{j+1}*`.
pub fn normal_form(w: &Word) -> NFMonomial {
    NFMonomial::new(w.source, w.nonstar_count(), w.star_count())
}

/// Applies `a_j* a_j -> a_{j+1} a_{j+1}*` until no star precedes a nonstar.
/// Returns the final word and the number of rewrite steps taken.
pub fn rewrite_to_normal_form(q: &QuiverA, w: &Word) -> (Word, usize) {
    let n = q.n();
    let mut arrows = w.arrows.clone();
    let mut steps = 0;
    loop {
        let Some(pos) = arrows.windows(2).position(|p| p[0].starred && !p[1].starred) else {
            break;
        };
        let j = arrows[pos].index;
        debug_assert_eq!(arrows[pos + 1].index, j, "non-composable word");
        arrows[pos] = ArrowRef::nonstar((j + 1) % n);
        arrows[pos + 1] = ArrowRef::star((j + 1) % n);
        steps += 1;
    }
    (
        Word {
            source: w.source,
            arrows,
        },
        steps,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(usize),
    Mixed,
}

/// A finite linear combination of normal-form monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<NFMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(n: usize, m: NFMonomial, c: Scalar) -> Self {
        let mut out = Self::zero(n);
        out.add_term(m, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (NFMonomial, Scalar)>>(n: usize, terms: I) -> Self {
        let mut out = Self::zero(n);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    /// `sum_i e_i`, the unit of `R`.
    pub fn one(n: usize, ctx: &Arc<CyclotomicContext>) -> Self {
        Self::from_terms(n, (0..n).map(|v| (NFMonomial::idempotent(v), Scalar::one(ctx))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<NFMonomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &NFMonomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: NFMonomial, c: Scalar) {
        debug_assert!(m.source < self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let v = &*slot + &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(NFMonomial::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) if degs.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Mixed,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    /// Bilinear extension of
    /// `NF(i,l,k) NF(j,l',k') = NF(i, l+l', k+k')` when `j` is the target of
    /// the left factor, and `0` otherwise.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut by_source: HashMap<usize, Vec<(&NFMonomial, &Scalar)>> = HashMap::new();
        for (m, c) in &other.terms {
            by_source.entry(m.source).or_default().push((m, c));
        }
        let mut out = Self::zero(n);
        for (a, ca) in &self.terms {
            let Some(partners) = by_source.get(&a.target(n)) else {
                continue;
            };
            for (b, cb) in partners {
                out.add_term(mul_monomials(n, a, b).expect("composable"), ca * cb);
            }
        }
        out
    }

    /// Left multiplication by the idempotent `e_v`.
    pub fn left_idempotent(&self, v: usize) -> Self {
        Self::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|(m, _)| m.source == v)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Right multiplication by the idempotent `e_v`.
    pub fn right_idempotent(&self, v: usize) -> Self {
        let n = self.n;
        Self::from_terms(
            n,
            self.terms
                .iter()
                .filter(|(m, _)| m.target(n) == v)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn pow(&self, e: usize, ctx: &Arc<CyclotomicContext>) -> Self {
        (0..e).fold(Self::one(self.n, ctx), |acc, _| acc.mul(self))
    }
}

/// Closed-form product of two monomials, `None` when they do not compose.
pub fn mul_monomials(n: usize, a: &NFMonomial, b: &NFMonomial) -> Option<NFMonomial> {
    if a.target(n) != b.source {
        return None;
    }
    Some(NFMonomial::new(a.source, a.nonstars + b.nonstars, a.stars + b.stars))
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One `(source, target)` block of a degree of the free path algebra, with
/// the part of the relation ideal that lives there.
#[derive(Clone, Debug)]
pub struct OracleBlock {
    /// Column `c` is `words[c]`; words are in decreasing monomial order so
    /// that pivots land on the largest words.
    words: Vec<Word>,
    index: HashMap<Vec<ArrowRef>, usize>,
    ideal: Subspace,
}

impl OracleBlock {
    fn new(ctx: &Arc<CyclotomicContext>, mut words: Vec<Word>) -> Self {
        words.sort();
        words.reverse();
        let index = words.iter().enumerate().map(|(i, w)| (w.arrows.clone(), i)).collect();
        let ideal = Subspace::new(ctx, words.len());
        OracleBlock { words, index, ideal }
    }

    pub fn free_dim(&self) -> usize {
        self.words.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.dim()
    }

    pub fn quotient_dim(&self) -> usize {
        self.free_dim() - self.ideal_dim()
    }

    /// Words whose classes form the quotient basis chosen by the reduction.
    pub fn standard_words(&self) -> Vec<&Word> {
        self.ideal.free_columns().into_iter().map(|c| &self.words[c]).collect()
    }
}

/// The relation ideal `(Omega)` truncated at a fixed degree, stored per
/// degree and per `(source, target)` block.
#[derive(Clone, Debug)]
pub struct RelationIdealTruncation {
    quiver: QuiverA,
    ctx: Arc<CyclotomicContext>,
    layers: Vec<BTreeMap<(usize, usize), OracleBlock>>,
}

impl RelationIdealTruncation {
    pub fn build(quiver: QuiverA, max_degree: usize) -> Self {
        let ctx = CyclotomicContext::rational();
        let mut out = RelationIdealTruncation {
            quiver,
            ctx,
            layers: Vec::new(),
        };
        for d in 0..=max_degree {
            out.push_layer(d);
        }
        out
    }

    pub fn quiver(&self) -> &QuiverA {
        &self.quiver
    }

    pub fn max_degree(&self) -> usize {
        self.layers.len() - 1
    }

    fn empty_layer(&self, d: usize) -> BTreeMap<(usize, usize), OracleBlock> {
        let q = &self.quiver;
        let mut grouped: BTreeMap<(usize, usize), Vec<Word>> = BTreeMap::new();
        for v in 0..q.n() {
            let mut words = Vec::new();
            q.free_words_from(v, d, &mut words);
            for w in words {
                grouped.entry((v, q.word_target(&w))).or_default().push(w);
            }
        }
        grouped
            .into_iter()
            .map(|(key, words)| (key, OracleBlock::new(&self.ctx, words)))
            .collect()
    }

    fn push_layer(&mut self, d: usize) {
        let q = self.quiver;
        let n = q.n();
        let mut layer = self.empty_layer(d);
        let one = Scalar::one(&self.ctx);
        let minus = -&one;
        if d == 2 {
            for i in 0..n {
                let lhs = vec![ArrowRef::nonstar(i), ArrowRef::star(i)];
                let prev = (i + n - 1) % n;
                let rhs = vec![ArrowRef::star(prev), ArrowRef::nonstar(prev)];
                let block = layer.get_mut(&(i, i)).expect("cycle block");
                let row = collect_row([(block.index[&lhs], one.clone()), (block.index[&rhs], minus.clone())]);
                block.ideal.insert(&row);
            }
        } else if d > 2 {
            let prev = &self.layers[d - 1];
            let mut pending: BTreeMap<(usize, usize), Vec<SparseRow>> = BTreeMap::new();
            for (&(s, t), block) in prev {
                for row in block.ideal.rows() {
                    for a in q.arrows_into(s) {
                        let key = (q.source(a), t);
                        let target = &layer[&key];
                        let new_row = collect_row(row.iter().map(|(c, v)| {
                            let mut arrows = Vec::with_capacity(d);
                            arrows.push(a);
                            arrows.extend_from_slice(&block.words[*c].arrows);
                            (target.index[&arrows], v.clone())
                        }));
                        pending.entry(key).or_default().push(new_row);
                    }
                    for a in q.arrows_from(t) {
                        let key = (s, q.target(a));
                        let target = &layer[&key];
                        let new_row = collect_row(row.iter().map(|(c, v)| {
                            let mut arrows = block.words[*c].arrows.clone();
                            arrows.push(a);
                            (target.index[&arrows], v.clone())
                        }));
                        pending.entry(key).or_default().push(new_row);
                    }
                }
            }
            for (key, rows) in pending {
                let block = layer.get_mut(&key).expect("block exists");
                block.ideal.extend(rows.iter());
            }
        }
        self.layers.push(layer);
    }

    pub fn layer(&self, d: usize) -> &BTreeMap<(usize, usize), OracleBlock> {
        &self.layers[d]
    }

    /// `dim R_d` as computed by the oracle.
    pub fn quotient_dim(&self, d: usize) -> usize {
        self.layers[d].values().map(OracleBlock::quotient_dim).sum()
    }

    /// `dim e_i R_d e_j` for all `i, j`.
    pub fn block_dims(&self, d: usize) -> Vec<Vec<usize>> {
        let n = self.quiver.n();
        let mut out = vec![vec![0; n]; n];
        for (&(s, t), block) in &self.layers[d] {
            out[s][t] = block.quotient_dim();
        }
        out
    }

    /// Coordinates of a word in the quotient, keyed by standard word.
    pub fn reduce_word(&self, w: &Word) -> Vec<(Word, Scalar)> {
        let d = w.len();
        let key = (w.source, self.quiver.word_target(w));
        let block = &self.layers[d][&key];
        let col = block.index[&w.arrows];
        let rem = block.ideal.reduce(&[(col, Scalar::one(&self.ctx))]);
        rem.into_iter().map(|(c, v)| (block.words[c].clone(), v)).collect()
    }

    /// Checks that the normal-form monomials of degree `d` map to a basis of
    /// `R_d` under the oracle's reduction.
    pub fn normal_forms_form_basis(&self, d: usize) -> bool {
        let n = self.quiver.n();
        for (&(s, t), block) in &self.layers[d] {
            let monomials: Vec<NFMonomial> = NFMonomial::of_degree(n, d)
                .into_iter()
                .filter(|m| m.source == s && m.target(n) == t)
                .collect();
            if monomials.len() != block.quotient_dim() {
                return false;
            }
            let mut span = Subspace::new(&self.ctx, block.free_dim());
            for m in &monomials {
                let w = m.representative(&self.quiver);
                let rem = block.ideal.reduce(&[(block.index[&w.arrows], Scalar::one(&self.ctx))]);
                if !span.insert(&rem) {
                    return false;
                }
            }
        }
        true
    }
}

/// Total and matrix-valued Hilbert series through a fixed degree.

/// Compares the closed-form product with oracle reduction of concatenated
/// representative words for every composable pair of total degree at most
/// `max_total`. Returns the number of pairs checked, or the first mismatch.
pub fn check_products_against_oracle(
    oracle: &RelationIdealTruncation,
    max_total: usize,
) -> Result<usize, (NFMonomial, NFMonomial)> {
    let q = oracle.quiver();
    let n = q.n();
    let max_total = max_total.min(oracle.max_degree());
    let mut checked = 0;
    for da in 0..=max_total {
        for db in 0..=max_total - da {
            for a in NFMonomial::of_degree(n, da) {
                for b in NFMonomial::of_degree(n, db)
                    .into_iter()
                    .filter(|b| b.source == a.target(n))
                {
                    let word = q
                        .compose(&a.representative(q), &b.representative(q))
                        .expect("composable");
                    let product = mul_monomials(n, &a, &b).expect("composable monomials multiply");
                    if oracle.reduce_word(&word) != oracle.reduce_word(&product.representative(q)) {
                        return Err((a, b));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub n: usize,
    pub total: Vec<usize>,
    /// `matrix[d][i][j] = dim e_i R_d e_j` (0-based vertices).
    pub matrix: Vec<Vec<Vec<usize>>>,
}

impl HilbertReport {
    /// Checks `C_d = M C_{d-1} - C_{d-2}` with `C_0 = I`, `C_1 = M`.
    /// Returns the first degree where it fails.
    pub fn recurrence_failure(&self, q: &QuiverA) -> Option<usize> {
        let m = q.adjacency();
        let n = q.n();
        let as_i64 = |c: &Vec<Vec<usize>>| -> Vec<Vec<i64>> {
            c.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
        };
        for d in 0..self.matrix.len() {
            let expect: Vec<Vec<i64>> = match d {
                0 => AdjacencyMatrix::identity(n)
                    .0
                    .iter()
                    .map(|r| r.iter().map(|&x| x as i64).collect())
                    .collect(),
                1 => m.0.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect(),
                _ => {
                    let c1 = as_i64(&self.matrix[d - 1]);
                    let c2 = as_i64(&self.matrix[d - 2]);
                    (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| {
                                    let mc: i64 = (0..n).map(|k| m.0[i][k] as i64 * c1[k][j]).sum();
                                    mc - c2[i][j]
                                })
                                .collect()
                        })
                        .collect()
                }
            };
            if expect != as_i64(&self.matrix[d]) {
                return Some(d);
            }
        }
        None
    }

    /// Total dimensions predicted by expanding `(1 - M t)^{-2}`, i.e.
    /// `(d + 1) * (sum of entries of M^d)`.
    pub fn inverse_square_totals(q: &QuiverA, max_degree: usize) -> Vec<u128> {
        let m = q.adjacency();
        (0..=max_degree)
            .map(|d| (d as u128 + 1) * m.pow(d).total() as u128)
            .collect()
    }

    /// First degree where the oracle series departs from `(1 - M t)^{-2}`.
    pub fn inverse_square_discrepancy(&self, q: &QuiverA) -> Option<usize> {
        let predicted = Self::inverse_square_totals(q, self.total.len().saturating_sub(1));
        self.total.iter().zip(predicted).position(|(&a, b)| a as u128 != b)
    }
}

/// Hilbert series of `R` through `max_degree`, read off the oracle.
pub fn hilbert(q: &QuiverA, max_degree: usize) -> HilbertReport {
    let oracle = RelationIdealTruncation::build(*q, max_degree);
    hilbert_from_oracle(&oracle)
}

/// Hilbert series read off the oracle through `oracle_cap` and counted from
/// normal-form monomials above it. The oracle enumerates every free word, so
/// its cost doubles with each degree.
pub fn hilbert_with_cap(q: &QuiverA, max_degree: usize, oracle_cap: usize) -> HilbertReport {
    let mut report = hilbert(q, max_degree.min(oracle_cap));
    let n = q.n();
    for d in report.total.len()..=max_degree {
        let mut block = vec![vec![0; n]; n];
        for m in NFMonomial::of_degree(n, d) {
            block[m.source][m.target(n)] += 1;
        }
        report.total.push(block.iter().flatten().sum());
        report.matrix.push(block);
    }
    report
}

pub fn hilbert_from_oracle(oracle: &RelationIdealTruncation) -> HilbertReport {
    let max_degree = oracle.max_degree();
    HilbertReport {
        n: oracle.quiver().n(),
        total: (0..=max_degree).map(|d| oracle.quotient_dim(d)).collect(),
        matrix: (0..=max_degree).map(|d| oracle.block_dims(d)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(s: usize, l: usize, k: usize) -> NFMonomial {
        NFMonomial::new(s, l, k)
    }

    fn word(q: &QuiverA, source: usize, arrows: &[(usize, bool)]) -> Word {
        q.word(
            source,
            arrows.iter().map(|&(i, s)| ArrowRef { index: i, starred: s }).collect(),
        )
        .unwrap()
    }

    #[test]
    fn targets_and_representatives() {
        let q = QuiverA::new(3).unwrap();
        assert_eq!(nf(0, 2, 1).target(3), 1);
        assert_eq!(nf(0, 0, 4).target(3), 2);
        let w = nf(1, 1, 1).representative(&q);
        assert_eq!(w.to_string(), "a1.a1*");
        assert!(q.word(w.source, w.arrows.clone()).is_ok());
        for d in 0..6 {
            for m in NFMonomial::of_degree(3, d) {
                let w = m.representative(&q);
                assert_eq!(q.word_target(&w), m.target(3));
                assert_eq!(normal_form(&w), m);
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        let q = QuiverA::new(3).unwrap();
        let w = word(&q, 1, &[(0, true), (0, false)]);
        assert_eq!(normal_form(&w), nf(1, 1, 1));
        assert_eq!(rewrite_to_normal_form(&q, &w).0, nf(1, 1, 1).representative(&q));
        let w = word(&q, 0, &[(0, false), (1, false)]);
        assert_eq!(normal_form(&w), nf(0, 2, 0));
        let w = word(&q, 2, &[(1, true), (0, true), (0, false), (1, false)]);
        assert_eq!(normal_form(&w), nf(2, 2, 2));
        let (rewritten, steps) = rewrite_to_normal_form(&q, &w);
        assert_eq!(rewritten, nf(2, 2, 2).representative(&q));
        assert_eq!(steps, 4);
    }

    #[test]
    fn rewriting_agrees_with_counting_on_all_short_words() {
        for n in 3..=5 {
            let q = QuiverA::new(n).unwrap();
            for d in 0..=7 {
                for w in q.free_basis(d) {
                    let (r, _) = rewrite_to_normal_form(&q, &w);
                    assert_eq!(r, normal_form(&w).representative(&q), "{w}");
                }
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let ctx = CyclotomicContext::rational();
        let one = Scalar::one(&ctx);
        let m = |s, l, k| AlgebraElement::monomial(3, nf(s, l, k), one.clone());
        assert_eq!(m(0, 1, 0).mul(&m(1, 1, 0)), m(0, 2, 0));
        assert!(m(0, 1, 0).mul(&m(2, 1, 0)).is_zero());
        assert_eq!(m(0, 2, 1).mul(&m(1, 0, 1)), m(0, 2, 2));
        let unit = AlgebraElement::one(3, &ctx);
        let x = m(2, 3, 1).add(&m(0, 0, 2).scale(&Scalar::from_integer(&ctx, -4)));
        assert_eq!(unit.mul(&x), x);
        assert_eq!(x.mul(&unit), x);
    }

    #[test]
    fn homogeneity() {
        let ctx = CyclotomicContext::rational();
        let one = Scalar::one(&ctx);
        let a = AlgebraElement::monomial(4, nf(0, 1, 1), one.clone());
        assert_eq!(a.homogeneity(), Homogeneity::Degree(2));
        let b = a.add(&AlgebraElement::monomial(4, nf(1, 1, 0), one));
        assert_eq!(b.homogeneity(), Homogeneity::Mixed);
        assert_eq!(AlgebraElement::zero(4).homogeneity(), Homogeneity::Zero);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn oracle_small_degrees() {
        let q = QuiverA::new(3).unwrap();
        let oracle = RelationIdealTruncation::build(q, 4);
        assert_eq!(oracle.quotient_dim(0), 3);
        assert_eq!(oracle.quotient_dim(1), 6);
        assert_eq!(oracle.quotient_dim(2), 9);
        assert_eq!(oracle.layer(2).values().map(OracleBlock::ideal_dim).sum::<usize>(), 3);
        for d in 0..=4 {
            assert!(oracle.normal_forms_form_basis(d));
        }
        // the standard words are exactly the normal-form representatives
        for block in oracle.layer(4).values() {
            for w in block.standard_words() {
                assert_eq!(&normal_form(w).representative(&q), w);
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        let q3 = QuiverA::new(3).unwrap();
        let h = hilbert(&q3, 5);
        assert_eq!(h.total, vec![3, 6, 9, 12, 15, 18]);
        assert_eq!(h.matrix[2][0][0], 1);
        assert_eq!(h.recurrence_failure(&q3), None);
        assert_eq!(h.inverse_square_discrepancy(&q3), Some(1));
        let q4 = QuiverA::new(4).unwrap();
        let h = hilbert(&q4, 2);
        let m: Vec<Vec<usize>> = q4
            .adjacency()
            .0
            .iter()
            .map(|r| r.iter().map(|&x| x as usize).collect())
            .collect();
        assert_eq!(h.matrix[1], m);
    }
}
