//! The doubled cyclic quiver of extended type A with `n` vertices.
//!
//! Vertices are residues `0..n`. The nonstar arrow `a_i` runs `i -> i+1` and
//! its partner `a_i*` runs `i+1 -> i`. Paths are written left to right, so
//! `pq` is defined when the target of `p` equals the source of `q`.

use std::cmp::Ordering;
use std::fmt;

use crate::scalars::Scalar;
use crate::symmetry::Automorphism;
use crate::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuiverA {
    n: usize,
}

impl QuiverA {
    /// Rejects `n <= 2`: for those the double is not schurian.
    pub fn new(n: usize) -> Result<Self, AlgebraError> {
        if n < 3 {
            return Err(AlgebraError::QuiverTooSmall(n));
        }
        Ok(QuiverA { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex(&self, v: i64) -> usize {
        v.rem_euclid(self.n as i64) as usize
    }

    pub fn source(&self, a: ArrowRef) -> usize {
        if a.starred {
            (a.index + 1) % self.n
        } else {
            a.index
        }
    }

    pub fn target(&self, a: ArrowRef) -> usize {
        if a.starred {
            a.index
        } else {
            (a.index + 1) % self.n
        }
    }

    /// The two arrows leaving `v`: `a_v` and `a_{v-1}*`.
    pub fn arrows_from(&self, v: usize) -> [ArrowRef; 2] {
        [ArrowRef::nonstar(v), ArrowRef::star((v + self.n - 1) % self.n)]
    }

    /// The two arrows entering `v`: `a_{v-1}` and `a_v*`.
    pub fn arrows_into(&self, v: usize) -> [ArrowRef; 2] {
        [ArrowRef::nonstar((v + self.n - 1) % self.n), ArrowRef::star(v)]
    }

    /// The unique arrow `from -> to`, if any.
    pub fn arrow_between(&self, from: usize, to: usize) -> Option<ArrowRef> {
        self.arrows_from(from).into_iter().find(|a| self.target(*a) == to)
    }

    pub fn arrows(&self) -> Vec<ArrowRef> {
        (0..self.n)
            .map(ArrowRef::nonstar)
            .chain((0..self.n).map(ArrowRef::star))
            .collect()
    }

    pub fn adjacency(&self) -> AdjacencyMatrix {
        let n = self.n;
        let mut m = vec![vec![0u64; n]; n];
        for a in self.arrows() {
            m[self.source(a)][self.target(a)] += 1;
        }
        AdjacencyMatrix(m)
    }

    pub fn trivial(&self, v: usize) -> Word {
        Word {
            source: v,
            arrows: Vec::new(),
        }
    }

    /// Builds a word from `source`, checking composability.
    pub fn word(&self, source: usize, arrows: Vec<ArrowRef>) -> Result<Word, AlgebraError> {
        let mut at = source;
        for a in &arrows {
            if self.source(*a) != at {
                return Err(AlgebraError::NotComposable);
            }
            at = self.target(*a);
        }
        Ok(Word { source, arrows })
    }

    pub fn word_target(&self, w: &Word) -> usize {
        w.arrows.last().map_or(w.source, |a| self.target(*a))
    }

    /// `w1 w2`, or `None` for the zero product of the path algebra.
    pub fn compose(&self, w1: &Word, w2: &Word) -> Option<Word> {
        if self.word_target(w1) != w2.source {
            return None;
        }
        let mut arrows = w1.arrows.clone();
        arrows.extend_from_slice(&w2.arrows);
        Some(Word {
            source: w1.source,
            arrows,
        })
    }

    /// All paths of length `d` in increasing monomial order.
    pub fn free_basis(&self, d: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for v in 0..self.n {
            self.free_words_from(v, d, &mut out);
        }
        out.sort();
        out
    }

    pub fn free_words_from(&self, source: usize, d: usize, out: &mut Vec<Word>) {
        let mut stack = vec![(source, Vec::with_capacity(d))];
        while let Some((at, arrows)) = stack.pop() {
            if arrows.len() == d {
                out.push(Word { source, arrows });
                continue;
            }
            for a in self.arrows_from(at) {
                let mut next = arrows.clone();
                next.push(a);
                stack.push((self.target(a), next));
            }
        }
    }
}

/// An arrow `a_index` or `a_index*`.
///
/// Ordered with every nonstar arrow below every star arrow, then by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowRef {
    pub starred: bool,
    pub index: usize,
}

impl ArrowRef {
    pub fn nonstar(index: usize) -> Self {
        ArrowRef { starred: false, index }
    }

    pub fn star(index: usize) -> Self {
        ArrowRef { starred: true, index }
    }
}

impl fmt::Display for ArrowRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "a{}*", self.index)
        } else {
            write!(f, "a{}", self.index)
        }
    }
}

/// A composable word; length zero is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub source: usize,
    pub arrows: Vec<ArrowRef>,
}

impl Word {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn nonstar_count(&self) -> usize {
        self.arrows.iter().filter(|a| !a.starred).count()
    }

    pub fn star_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.starred).count()
    }
}

impl Ord for Word {
    /// Degree, then source vertex, then lexicographic on arrows.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then(self.source.cmp(&other.source))
            .then_with(|| self.arrows.cmp(&other.arrows))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "e{}", self.source);
        }
        let parts: Vec<String> = self.arrows.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("."))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix(pub Vec<Vec<u64>>);

impl AdjacencyMatrix {
    pub fn identity(n: usize) -> Self {
        AdjacencyMatrix((0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.0.len();
        let mut out = vec![vec![0u64; n]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = (0..n).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        AdjacencyMatrix(out)
    }

    pub fn pow(&self, d: usize) -> Self {
        (0..d).fold(Self::identity(self.0.len()), |acc, _| acc.mul(self))
    }

    pub fn total(&self) -> u64 {
        self.0.iter().flatten().sum()
    }
}

/// Image of a word under a graded automorphism: the arrow-by-arrow image
/// together with the product of the per-arrow scalars.
pub fn apply_word_automorphism(q: &QuiverA, g: &Automorphism, w: &Word) -> (Scalar, Word) {
    let mut coeff = Scalar::one(g.context());
    let mut arrows = Vec::with_capacity(w.len());
    for a in &w.arrows {
        let (c, b) = g.arrow_image(*a);
        coeff = &coeff * &c;
        arrows.push(b);
    }
    let source = g.vertex_image(w.source);
    debug_assert!(q.word(source, arrows.clone()).is_ok());
    (coeff, Word { source, arrows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_quivers_rejected() {
        assert!(QuiverA::new(2).is_err());
        assert!(QuiverA::new(3).is_ok());
    }

    #[test]
    fn arrow_endpoints() {
        let q = QuiverA::new(4).unwrap();
        assert_eq!((q.source(ArrowRef::nonstar(3)), q.target(ArrowRef::nonstar(3))), (3, 0));
        assert_eq!((q.source(ArrowRef::star(3)), q.target(ArrowRef::star(3))), (0, 3));
        assert_eq!(q.arrow_between(0, 3), Some(ArrowRef::star(3)));
        assert_eq!(q.arrow_between(0, 2), None);
    }

    #[test]
    fn composition() {
        let q = QuiverA::new(3).unwrap();
        let a0 = q.word(0, vec![ArrowRef::nonstar(0)]).unwrap();
        let a1 = q.word(1, vec![ArrowRef::nonstar(1)]).unwrap();
        let a0a1 = q.compose(&a0, &a1).unwrap();
        assert_eq!(a0a1.arrows, vec![ArrowRef::nonstar(0), ArrowRef::nonstar(1)]);
        assert_eq!(q.compose(&a0, &a0), None);
        let a2 = q.word(2, vec![ArrowRef::nonstar(2)]).unwrap();
        assert_eq!(q.compose(&q.trivial(2), &a2), Some(a2.clone()));
        assert_eq!(q.compose(&a2, &q.trivial(0)), Some(a2));
        assert!(q.word(0, vec![ArrowRef::nonstar(1)]).is_err());
    }

    #[test]
    fn free_basis_counts() {
        let q = QuiverA::new(3).unwrap();
        assert_eq!(q.free_basis(0).len(), 3);
        assert_eq!(q.free_basis(1).len(), 6);
        assert_eq!(q.free_basis(2).len(), 12);
        for n in 3..=6 {
            let q = QuiverA::new(n).unwrap();
            let m = q.adjacency();
            for d in 0..=12 {
                assert_eq!(q.free_basis(d).len() as u64, m.pow(d).total(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn adjacency_is_circulant() {
        let q = QuiverA::new(5).unwrap();
        let m = q.adjacency();
        for i in 0..5 {
            for j in 0..5 {
                let expect = u64::from(j == (i + 1) % 5 || i == (j + 1) % 5);
                assert_eq!(m.0[i][j], expect);
            }
        }
    }

    #[test]
    fn word_order_puts_nonstar_first() {
        let q = QuiverA::new(3).unwrap();
        let basis = q.free_basis(2);
        let from0: Vec<_> = basis.iter().filter(|w| w.source == 0).collect();
        assert_eq!(from0[0].to_string(), "a0.a1");
        assert_eq!(from0[3].to_string(), "a2*.a1*");
    }
}
