//! Rings of invariants `R^G`: averaging, orbit sums and their relations,
//! the presentations of `R^{D_n}` and `R^{W_n}`, and the free-module checks.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::linalg::{collect_row, rank, SparseRow, Subspace};
use crate::preproj::{AlgebraElement, NFMonomial};
use crate::scalars::{CyclotomicContext, Scalar};
use crate::symmetry::FiniteGroup;
use crate::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    All,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, v: usize) -> bool {
        match self {
            Parity::All => true,
            Parity::Even => v % 2 == 0,
            Parity::Odd => v % 2 == 1,
        }
    }

    fn opposite(self) -> Parity {
        match self {
            Parity::All => Parity::All,
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::All => Ok(()),
            Parity::Even => write!(f, "^even"),
            Parity::Odd => write!(f, "^odd"),
        }
    }
}

/// `B_{l,k}`: monomials with `l` nonstar and `k` star arrows in either order.
pub fn orbit_block(n: usize, l: usize, k: usize, parity: Parity) -> BTreeSet<NFMonomial> {
    (0..n)
        .filter(|&i| parity.admits(i))
        .flat_map(|i| [NFMonomial::new(i, l, k), NFMonomial::new(i, k, l)])
        .collect()
}

/// `O(l,k)`, or its even/odd part.
pub fn orbit_sum(n: usize, l: usize, k: usize, parity: Parity, ctx: &Arc<CyclotomicContext>) -> AlgebraElement {
    AlgebraElement::from_terms(
        n,
        orbit_block(n, l, k, parity).into_iter().map(|m| (m, Scalar::one(ctx))),
    )
}

/// `(1/|G|) sum_g g(x)`.
pub fn reynolds(group: &FiniteGroup, x: &AlgebraElement) -> AlgebraElement {
    let ctx = group.context();
    let mut acc = AlgebraElement::zero(x.n());
    for g in group.elements() {
        acc = acc.add(&g.apply(x));
    }
    acc.scale(&Scalar::from_ratio(ctx, 1, group.order() as i64))
}

pub fn orbit_of(group: &FiniteGroup, p: &NFMonomial) -> Result<BTreeSet<NFMonomial>, AlgebraError> {
    let mut out = BTreeSet::new();
    for g in group.elements() {
        let (c, m) = g.apply_monomial(p);
        if !c.is_one() {
            return Err(AlgebraError::Unsupported(
                "orbit images acquire non-unit coefficients under a scalar group".into(),
            ));
        }
        out.insert(m);
    }
    Ok(out)
}

/// Column of a degree-`d` monomial in `R_d` coordinates.
fn column(m: &NFMonomial, d: usize) -> usize {
    m.source * (d + 1) + m.stars
}

/// Coordinates of a homogeneous element of degree `d`.
pub fn to_row(x: &AlgebraElement, d: usize) -> SparseRow {
    collect_row(x.terms().iter().map(|(m, c)| {
        debug_assert_eq!(m.degree(), d);
        (column(m, d), c.clone())
    }))
}

fn from_row(n: usize, d: usize, row: &SparseRow) -> AlgebraElement {
    AlgebraElement::from_terms(
        n,
        row.iter()
            .map(|(c, v)| (NFMonomial::new(c / (d + 1), d - c % (d + 1), c % (d + 1)), v.clone())),
    )
}

/// Reduced bases of `(R^G)_d` for `d = 0..=D`.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    n: usize,
    ctx: Arc<CyclotomicContext>,
    degrees: Vec<Vec<AlgebraElement>>,
}

impl InvariantBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn basis(&self, d: usize) -> &[AlgebraElement] {
        &self.degrees[d]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// `dim s_a (R^G)_d s_b` with `s_0 = sum of even e_i`, `s_1 = sum of odd e_i`.
    pub fn parity_block_dims(&self, d: usize) -> [[usize; 2]; 2] {
        let mut out = [[0; 2]; 2];
        for (a, row) in out.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                let rows: Vec<SparseRow> = self.degrees[d]
                    .iter()
                    .map(|x| {
                        let proj = AlgebraElement::from_terms(
                            self.n,
                            x.terms()
                                .iter()
                                .filter(|(m, _)| m.source % 2 == a && m.target(self.n) % 2 == b)
                                .map(|(m, c)| (*m, c.clone())),
                        );
                        to_row(&proj, d)
                    })
                    .collect();
                *slot = rank(&self.ctx, self.n * (d + 1), &rows);
            }
        }
        out
    }

    /// Whether `x` (homogeneous of degree `d`) lies in the span.
    pub fn contains(&self, x: &AlgebraElement, d: usize) -> bool {
        let mut s = Subspace::new(&self.ctx, self.n * (d + 1));
        for b in &self.degrees[d] {
            s.insert(&to_row(b, d));
        }
        s.contains(&to_row(x, d))
    }
}

/// Averages every monomial and row-reduces the results degree by degree.
pub fn invariant_basis(group: &FiniteGroup, max_degree: usize) -> InvariantBasis {
    let n = group.n();
    let ctx = group.context().clone();
    let degrees = (0..=max_degree)
        .map(|d| {
            let mut s = Subspace::new(&ctx, n * (d + 1));
            for m in NFMonomial::of_degree(n, d) {
                let avg = reynolds(group, &AlgebraElement::monomial(n, m, Scalar::one(&ctx)));
                s.insert(&to_row(&avg, d));
            }
            s.rows().iter().map(|r| from_row(n, d, r)).collect()
        })
        .collect();
    InvariantBasis { n, ctx, degrees }
}

/// Coefficient of `t^d` in `1/((1-t)(1-t^2))`.
pub fn dihedral_invariant_dim(d: usize) -> usize {
    d / 2 + 1
}

/// Coefficient of `t^d` in `(I - swap t)^{-1} (I - I t^2)^{-1}`.
pub fn vertex_reflection_matrix_dim(d: usize) -> [[usize; 2]; 2] {
    let c = d / 2 + 1;
    if d % 2 == 0 {
        [[c, 0], [0, c]]
    } else {
        [[0, c], [c, 0]]
    }
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub name: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub n: usize,
    pub max_degree: usize,
    pub instances: Vec<RelationInstance>,
    /// Instances where the naive product rule (coefficient 1 on both
    /// summands, result parity taken from the target) differs from the
    /// actual product.
    pub literal_discrepancies: Vec<RelationInstance>,
}

impl RelationReport {
    pub fn checked(&self) -> usize {
        self.instances.len()
    }

    pub fn failures(&self) -> Vec<&RelationInstance> {
        self.instances.iter().filter(|r| !r.holds).collect()
    }

    pub fn all_hold(&self) -> bool {
        self.instances.iter().all(|r| r.holds)
    }

    fn record(&mut self, name: String, lhs: &AlgebraElement, rhs: &AlgebraElement) {
        self.instances.push(RelationInstance {
            name,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    fn record_literal(&mut self, name: String, actual: &AlgebraElement, literal: &AlgebraElement) {
        if actual != literal {
            self.literal_discrepancies.push(RelationInstance {
                name,
                holds: false,
                lhs: actual.to_string(),
                rhs: literal.to_string(),
            });
        }
    }
}

/// Right-hand side of `O(1,0) O(l,k)` for `l >= k`.
///
/// When `l = k + 1` both middle terms fall into `B_{l,l}`, which has only `n`
/// monomials, so that summand carries coefficient 2 (the `l = 1, k = 0` case
/// is `s_1^2 = s_2 + 2 O(1,1)`).
fn shift_product_rhs(n: usize, l: usize, k: usize, parity: Parity, ctx: &Arc<CyclotomicContext>) -> AlgebraElement {
    let first = orbit_sum(n, l + 1, k, parity, ctx);
    if l == k {
        return first;
    }
    let c = if l == k + 1 { 2 } else { 1 };
    first.add(&orbit_sum(n, l, k + 1, parity, ctx).scale(&Scalar::from_integer(ctx, c)))
}

/// Checks the orbit-sum product rules and the generator identities through degree `D`.
pub fn check_orbit_sum_relations(n: usize, max_degree: usize) -> RelationReport {
    let ctx = CyclotomicContext::rational();
    let o = |l, k, p| orbit_sum(n, l, k, p, &ctx);
    let two = Scalar::from_integer(&ctx, 2);
    let mut report = RelationReport {
        n,
        max_degree,
        ..Default::default()
    };
    let s1 = o(1, 0, Parity::All);
    for total in 0..max_degree {
        for k in 0..=total / 2 {
            let l = total - k;
            let lhs = s1.mul(&o(l, k, Parity::All));
            report.record(
                format!("O(1,0) O({l},{k})"),
                &lhs,
                &shift_product_rhs(n, l, k, Parity::All, &ctx),
            );
            let literal = if l == k {
                o(l + 1, k, Parity::All)
            } else {
                o(l + 1, k, Parity::All).add(&o(l, k + 1, Parity::All))
            };
            report.record_literal(format!("O(1,0) O({l},{k})"), &lhs, &literal);
        }
    }
    let o11 = o(1, 1, Parity::All);
    for m in 1..=max_degree / 2 {
        report.record(format!("O(1,1)^{m}"), &o11.pow(m, &ctx), &o(m, m, Parity::All));
    }
    let s2 = o(2, 0, Parity::All);
    if max_degree >= 3 {
        report.record("s1 s2 = s2 s1".into(), &s1.mul(&s2), &s2.mul(&s1));
    }
    if max_degree >= 2 {
        report.record("s1^2 = s2 + 2 O(1,1)".into(), &s1.mul(&s1), &s2.add(&o11.scale(&two)));
    }
    if n % 2 == 1 {
        return report;
    }
    for p in [Parity::Even, Parity::Odd] {
        let q = p.opposite();
        let s1p = o(1, 0, p);
        for total in 0..max_degree {
            for k in 0..=total / 2 {
                let l = total - k;
                let lhs = s1p.mul(&o(l, k, q));
                report.record(
                    format!("O(1,0){p} O({l},{k}){q}"),
                    &lhs,
                    &shift_product_rhs(n, l, k, p, &ctx),
                );
                report.record(
                    format!("O(1,0){p} O({l},{k}){p} = 0"),
                    &s1p.mul(&o(l, k, p)),
                    &AlgebraElement::zero(n),
                );
                let lit = if (l + k) % 2 == 0 { q } else { p };
                let literal = if l == k {
                    o(l + 1, k, lit)
                } else {
                    o(l + 1, k, lit).add(&o(l, k + 1, lit))
                };
                report.record_literal(format!("O(1,0){p} O({l},{k}){q}"), &lhs, &literal);
            }
        }
        let o11p = o(1, 1, p);
        for m in 1..=max_degree / 2 {
            report.record(format!("(O(1,1){p})^{m}"), &o11p.pow(m, &ctx), &o(m, m, p));
        }
    }
    let (t1, t1p) = (o(1, 0, Parity::Even), o(1, 0, Parity::Odd));
    let (t2, t2p) = (o(2, 0, Parity::Even), o(2, 0, Parity::Odd));
    if max_degree >= 3 {
        report.record("s2 s1 = s1 s2'".into(), &t2.mul(&t1), &t1.mul(&t2p));
        report.record("s2' s1' = s1' s2".into(), &t2p.mul(&t1p), &t1p.mul(&t2));
    }
    if max_degree >= 2 {
        report.record(
            "s1 s1' = s2 + 2 O(1,1)^even".into(),
            &t1.mul(&t1p),
            &t2.add(&o(1, 1, Parity::Even).scale(&two)),
        );
        report.record(
            "s1' s1 = s2' + 2 O(1,1)^odd".into(),
            &t1p.mul(&t1),
            &t2p.add(&o(1, 1, Parity::Odd).scale(&two)),
        );
    }
    report
}

/// The two groups with a known presentation of the invariant ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresentedGroup {
    /// `D_n`, with `R^{D_n} = k[s_1, s_2]`.
    Dihedral,
    /// `W_n` (n even), with `R^{W_n} = kQ / (v1 u1 - u1 v2, v2 u2 - u2 v1)`.
    VertexReflections,
}

impl PresentedGroup {
    pub fn group(&self, n: usize) -> FiniteGroup {
        match self {
            PresentedGroup::Dihedral => FiniteGroup::dihedral_group(n),
            PresentedGroup::VertexReflections => FiniteGroup::vertex_reflection_group(n),
        }
    }

    /// Recognises `D_n` and, for even `n`, `W_n`.
    pub fn recognise(group: &FiniteGroup) -> Option<Self> {
        let n = group.n();
        let sig = group.dihedral_signature();
        if !group.is_pure_dihedral() {
            None
        } else if sig == FiniteGroup::dihedral_group(n).dihedral_signature() {
            Some(PresentedGroup::Dihedral)
        } else if n % 2 == 0 && sig == FiniteGroup::vertex_reflection_group(n).dihedral_signature() {
            Some(PresentedGroup::VertexReflections)
        } else {
            None
        }
    }

    fn check_n(&self, n: usize) -> Result<(), AlgebraError> {
        if *self == PresentedGroup::VertexReflections && n % 2 == 1 {
            return Err(AlgebraError::Unsupported(
                "the two-vertex presentation needs an even number of vertices".into(),
            ));
        }
        crate::quiver::QuiverA::new(n).map(|_| ())
    }
}

impl fmt::Display for PresentedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentedGroup::Dihedral => write!(f, "D_n"),
            PresentedGroup::VertexReflections => write!(f, "W_n"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationTarget {
    PolynomialTwoVars,
    TwoVertexQuiver,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDefect {
    pub degree: usize,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub target: PresentationTarget,
    pub well_defined: bool,
    /// Largest `d` such that the map is bijective in every degree up to `d`.
    pub degreewise_bijective_through: Option<usize>,
    pub presentation_dims: Vec<usize>,
    pub invariant_dims: Vec<usize>,
    pub failures: Vec<DegreeDefect>,
}

impl PresentationReport {
    pub fn passes(&self, max_degree: usize) -> bool {
        self.well_defined && self.degreewise_bijective_through == Some(max_degree) && self.failures.is_empty()
    }
}

fn bijective_prefix(failures: &[DegreeDefect], max_degree: usize) -> Option<usize> {
    match failures.iter().map(|f| f.degree).min() {
        None => Some(max_degree),
        Some(0) => None,
        Some(d) => Some(d - 1),
    }
}

/// Letters of the two-vertex quiver: `u1: 0 -> 1`, `u2: 1 -> 0` of degree 1
/// and loops `v1` at 0, `v2` at 1 of degree 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Letter {
    U1,
    U2,
    V1,
    V2,
}

impl Letter {
    #[cfg(test)]
    fn source(self) -> usize {
        match self {
            Letter::U1 | Letter::V1 => 0,
            Letter::U2 | Letter::V2 => 1,
        }
    }

    fn target(self) -> usize {
        match self {
            Letter::U2 | Letter::V1 => 0,
            Letter::U1 | Letter::V2 => 1,
        }
    }

    #[cfg(test)]
    fn weight(self) -> usize {
        match self {
            Letter::U1 | Letter::U2 => 1,
            Letter::V1 | Letter::V2 => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct QuiverPath {
    source: usize,
    letters: Vec<Letter>,
}

impl QuiverPath {
    fn target(&self) -> usize {
        self.letters.last().map_or(self.source, |l| l.target())
    }

    #[cfg(test)]
    fn concat(&self, other: &QuiverPath) -> QuiverPath {
        debug_assert_eq!(self.target(), other.source);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        QuiverPath {
            source: self.source,
            letters,
        }
    }
}

/// All paths of total weight `d`, sorted.
#[cfg(test)]
fn quiver_paths(d: usize) -> Vec<QuiverPath> {
    fn go(at: usize, left: usize, prefix: &mut Vec<Letter>, source: usize, out: &mut Vec<QuiverPath>) {
        if left == 0 {
            out.push(QuiverPath {
                source,
                letters: prefix.clone(),
            });
            return;
        }
        for l in [Letter::U1, Letter::U2, Letter::V1, Letter::V2] {
            if l.source() == at && l.weight() <= left {
                prefix.push(l);
                go(l.target(), left - l.weight(), prefix, source, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..2 {
        go(v, d, &mut Vec::new(), v, &mut out);
    }
    out.sort();
    out
}

/// Paths avoiding `v1 u1` and `v2 u2`: all `u` letters first, then loops.
///
/// The two relations rewrite `v u -> u v`; their leading words do not
/// overlap, so these words form a basis of `(kQ/K)_d`.
fn normal_paths(d: usize) -> Vec<QuiverPath> {
    let mut out = Vec::new();
    for source in 0..2 {
        for loops in 0..=d / 2 {
            let mut letters = Vec::new();
            let mut at = source;
            for _ in 0..d - 2 * loops {
                let u = if at == 0 { Letter::U1 } else { Letter::U2 };
                letters.push(u);
                at = u.target();
            }
            let v = if at == 0 { Letter::V1 } else { Letter::V2 };
            letters.extend(std::iter::repeat(v).take(loops));
            out.push(QuiverPath { source, letters });
        }
    }
    out
}

fn normal_path_block_dims(d: usize) -> [[usize; 2]; 2] {
    let mut out = [[0; 2]; 2];
    for p in normal_paths(d) {
        out[p.source][p.target()] += 1;
    }
    out
}

/// `dim e_a (kQ/K)_d e_b` by row reduction over all paths.
#[cfg(test)]
fn quiver_quotient_block_dims(d: usize, ctx: &Arc<CyclotomicContext>) -> [[usize; 2]; 2] {
    let paths = quiver_paths(d);
    let index: std::collections::HashMap<&QuiverPath, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let relations = [
        (
            QuiverPath {
                source: 0,
                letters: vec![Letter::V1, Letter::U1],
            },
            QuiverPath {
                source: 0,
                letters: vec![Letter::U1, Letter::V2],
            },
        ),
        (
            QuiverPath {
                source: 1,
                letters: vec![Letter::V2, Letter::U2],
            },
            QuiverPath {
                source: 1,
                letters: vec![Letter::U2, Letter::V1],
            },
        ),
    ];
    let mut ideal = Subspace::new(ctx, paths.len());
    if d >= 3 {
        for (a_left, a_right) in &relations {
            let (rs, rt) = (a_left.source, a_left.target());
            for w in 0..=d - 3 {
                for left in quiver_paths(w).into_iter().filter(|p| p.target() == rs) {
                    for right in quiver_paths(d - 3 - w).into_iter().filter(|p| p.source == rt) {
                        let x = left.concat(a_left).concat(&right);
                        let y = left.concat(a_right).concat(&right);
                        ideal.insert(&collect_row([
                            (index[&x], Scalar::one(ctx)),
                            (index[&y], Scalar::from_integer(ctx, -1)),
                        ]));
                    }
                }
            }
        }
    }
    let mut out = [[0; 2]; 2];
    for c in ideal.free_columns() {
        out[paths[c].source][paths[c].target()] += 1;
    }
    out
}

/// Verifies the presentation of `R^G` for `G = D_n` or `W_n` through degree `D`.
pub fn verify_presentation(
    n: usize,
    which: PresentedGroup,
    max_degree: usize,
) -> Result<PresentationReport, AlgebraError> {
    which.check_n(n)?;
    let group = which.group(n);
    let ctx = group.context().clone();
    let basis = invariant_basis(&group, max_degree);
    let invariant_dims = basis.dims();
    let mut failures = Vec::new();
    let mut presentation_dims = Vec::new();
    let o = |l, k, p| orbit_sum(n, l, k, p, &ctx);
    let report = match which {
        PresentedGroup::Dihedral => {
            let (s1, s2) = (o(1, 0, Parity::All), o(2, 0, Parity::All));
            let well_defined = s1.mul(&s2) == s2.mul(&s1);
            for d in 0..=max_degree {
                let monomials: Vec<AlgebraElement> = (0..=d / 2)
                    .map(|b| s1.pow(d - 2 * b, &ctx).mul(&s2.pow(b, &ctx)))
                    .collect();
                presentation_dims.push(monomials.len());
                let rows: Vec<SparseRow> = monomials.iter().map(|x| to_row(x, d)).collect();
                let r = rank(&ctx, n * (d + 1), &rows);
                if r != monomials.len() {
                    failures.push(DegreeDefect {
                        degree: d,
                        detail: format!("kernel of dimension {}", monomials.len() - r),
                    });
                }
                if r != invariant_dims[d] {
                    failures.push(DegreeDefect {
                        degree: d,
                        detail: format!("image has dimension {r}, invariants {}", invariant_dims[d]),
                    });
                }
                if monomials.len() != dihedral_invariant_dim(d) {
                    failures.push(DegreeDefect {
                        degree: d,
                        detail: "polynomial ring dimension mismatch".into(),
                    });
                }
            }
            PresentationReport {
                target: PresentationTarget::PolynomialTwoVars,
                well_defined,
                degreewise_bijective_through: None,
                presentation_dims,
                invariant_dims,
                failures,
            }
        }
        PresentedGroup::VertexReflections => {
            let gen = |l: Letter| match l {
                Letter::U1 => o(1, 0, Parity::Even),
                Letter::U2 => o(1, 0, Parity::Odd),
                Letter::V1 => o(2, 0, Parity::Even),
                Letter::V2 => o(2, 0, Parity::Odd),
            };
            let idem = [o(0, 0, Parity::Even), o(0, 0, Parity::Odd)];
            let image = |p: &QuiverPath| {
                p.letters
                    .iter()
                    .fold(idem[p.source].clone(), |acc, l| acc.mul(&gen(*l)))
            };
            let well_defined = [
                (Letter::V1, Letter::U1, Letter::U1, Letter::V2),
                (Letter::V2, Letter::U2, Letter::U2, Letter::V1),
            ]
            .iter()
            .all(|(a, b, c, e)| gen(*a).mul(&gen(*b)) == gen(*c).mul(&gen(*e)));
            for d in 0..=max_degree {
                let quotient = normal_path_block_dims(d);
                let total: usize = quotient.iter().flatten().sum();
                presentation_dims.push(total);
                let rows: Vec<SparseRow> = normal_paths(d).iter().map(|p| to_row(&image(p), d)).collect();
                let r = rank(&ctx, n * (d + 1), &rows);
                if r != invariant_dims[d] {
                    failures.push(DegreeDefect {
                        degree: d,
                        detail: format!("image has dimension {r}, invariants {}", invariant_dims[d]),
                    });
                }
                if total != r {
                    failures.push(DegreeDefect {
                        degree: d,
                        detail: format!("quotient has dimension {total}, image {r}"),
                    });
                }
                let expected = vertex_reflection_matrix_dim(d);
                if quotient != expected || basis.parity_block_dims(d) != expected {
                    failures.push(DegreeDefect {
                        degree: d,
                        detail: format!(
                            "block dims {:?} / {:?}, expected {:?}",
                            quotient,
                            basis.parity_block_dims(d),
                            expected
                        ),
                    });
                }
            }
            PresentationReport {
                target: PresentationTarget::TwoVertexQuiver,
                well_defined,
                degreewise_bijective_through: None,
                presentation_dims,
                invariant_dims,
                failures,
            }
        }
    };
    let through = bijective_prefix(&report.failures, max_degree);
    Ok(PresentationReport {
        degreewise_bijective_through: through,
        ..report
    })
}

#[derive(Clone, Debug)]
pub struct ModuleCheckReport {
    /// Largest `d` such that the check passes in every degree up to `d`.
    pub passes_through: Option<usize>,
    pub failures: Vec<DegreeDefect>,
}

impl ModuleCheckReport {
    pub fn passes(&self, max_degree: usize) -> bool {
        self.passes_through == Some(max_degree)
    }
}

fn left_multiply_all(basis: &[AlgebraElement], by: &AlgebraElement) -> Vec<AlgebraElement> {
    basis.iter().map(|b| by.mul(b)).collect()
}

fn rank_of(ctx: &Arc<CyclotomicContext>, n: usize, d: usize, xs: &[AlgebraElement]) -> usize {
    let rows: Vec<SparseRow> = xs.iter().map(|x| to_row(x, d)).collect();
    rank(ctx, n * (d + 1), &rows)
}

/// Checks that `R = sum_i e_i R^G + sum_i a_i R^G` is a direct sum in each degree.
pub fn verify_free_module(
    n: usize,
    which: PresentedGroup,
    max_degree: usize,
) -> Result<ModuleCheckReport, AlgebraError> {
    which.check_n(n)?;
    let group = which.group(n);
    let ctx = group.context().clone();
    let basis = invariant_basis(&group, max_degree);
    let one = Scalar::one(&ctx);
    let mut failures = Vec::new();
    for d in 0..=max_degree {
        let mut pieces: Vec<Vec<AlgebraElement>> = Vec::new();
        for i in 0..n {
            pieces.push(left_multiply_all(
                basis.basis(d),
                &AlgebraElement::monomial(n, NFMonomial::idempotent(i), one.clone()),
            ));
            if d > 0 {
                pieces.push(left_multiply_all(
                    basis.basis(d - 1),
                    &AlgebraElement::monomial(n, NFMonomial::new(i, 1, 0), one.clone()),
                ));
            }
        }
        let summand_dims: usize = pieces.iter().map(|p| rank_of(&ctx, n, d, p)).sum();
        let all: Vec<AlgebraElement> = pieces.into_iter().flatten().collect();
        let span = rank_of(&ctx, n, d, &all);
        let target = n * (d + 1);
        if summand_dims != target || span != target {
            failures.push(DegreeDefect {
                degree: d,
                detail: format!("summands add to {summand_dims}, span {span}, dim R_d {target}"),
            });
        }
    }
    Ok(ModuleCheckReport {
        passes_through: bijective_prefix(&failures, max_degree),
        failures,
    })
}

/// Checks that left multiplication by `a_{n-1}` is injective on `e_0 R^G`,
/// so `a_{n-1} R^G` is a copy of `e_0 R^G` shifted by one degree.
pub fn verify_shift_summand(
    n: usize,
    which: PresentedGroup,
    max_degree: usize,
) -> Result<ModuleCheckReport, AlgebraError> {
    which.check_n(n)?;
    let group = which.group(n);
    let ctx = group.context().clone();
    let basis = invariant_basis(&group, max_degree);
    let one = Scalar::one(&ctx);
    let e0 = AlgebraElement::monomial(n, NFMonomial::idempotent(0), one.clone());
    let arrow = AlgebraElement::monomial(n, NFMonomial::new(n - 1, 1, 0), one);
    let mut failures = Vec::new();
    for d in 0..=max_degree {
        let corner = left_multiply_all(basis.basis(d), &e0);
        let shifted = left_multiply_all(&corner, &arrow);
        let (a, b) = (rank_of(&ctx, n, d, &corner), rank_of(&ctx, n, d + 1, &shifted));
        let direct = rank_of(&ctx, n, d + 1, &left_multiply_all(basis.basis(d), &arrow));
        if a != b || b != direct {
            failures.push(DegreeDefect {
                degree: d,
                detail: format!("e_0 part has dimension {a}, its image {b}, a_(n-1) R^G has {direct}"),
            });
        }
    }
    Ok(ModuleCheckReport {
        passes_through: bijective_prefix(&failures, max_degree),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::Automorphism;

    fn q() -> Arc<CyclotomicContext> {
        CyclotomicContext::rational()
    }

    #[test]
    fn reynolds_examples() {
        let ctx = q();
        let g = FiniteGroup::dihedral_group(3);
        let a0 = AlgebraElement::monomial(3, NFMonomial::new(0, 1, 0), Scalar::one(&ctx));
        assert_eq!(
            reynolds(&g, &a0),
            orbit_sum(3, 1, 0, Parity::All, &ctx).scale(&Scalar::from_ratio(&ctx, 1, 6))
        );
        let x = AlgebraElement::monomial(3, NFMonomial::new(0, 1, 1), Scalar::one(&ctx));
        assert_eq!(
            reynolds(&g, &x),
            orbit_sum(3, 1, 1, Parity::All, &ctx).scale(&Scalar::from_ratio(&ctx, 1, 3))
        );
        let inv = orbit_sum(3, 2, 1, Parity::All, &ctx);
        assert_eq!(reynolds(&g, &inv), inv);
    }

    #[test]
    fn orbits() {
        let d3 = FiniteGroup::dihedral_group(3);
        assert_eq!(
            orbit_of(&d3, &NFMonomial::new(0, 1, 0)).unwrap(),
            orbit_block(3, 1, 0, Parity::All)
        );
        assert_eq!(orbit_of(&d3, &NFMonomial::new(0, 1, 1)).unwrap().len(), 3);
        let w4 = FiniteGroup::vertex_reflection_group(4);
        let orbit = orbit_of(&w4, &NFMonomial::new(0, 1, 0)).unwrap();
        assert_eq!(orbit, orbit_block(4, 1, 0, Parity::Even));
        assert_eq!(orbit.len(), 4);
    }

    #[test]
    fn invariant_dims_examples() {
        assert_eq!(
            invariant_basis(&FiniteGroup::dihedral_group(3), 5).dims(),
            vec![1, 1, 2, 2, 3, 3]
        );
        let w4 = invariant_basis(&FiniteGroup::vertex_reflection_group(4), 5);
        assert_eq!(w4.dims(), vec![2, 2, 4, 4, 6, 6]);
        assert_eq!(w4.parity_block_dims(3), [[0, 2], [2, 0]]);
        let ctx = q();
        let m1 = Scalar::from_integer(&ctx, -1);
        let s = Automorphism::scalar(vec![m1.clone(); 3], vec![m1; 3], &ctx);
        let g = FiniteGroup::generate(3, &ctx, vec![s], 4).unwrap();
        assert_eq!(invariant_basis(&g, 4).dims(), vec![3, 0, 9, 0, 15]);
    }

    #[test]
    fn orbit_product_examples() {
        let ctx = q();
        let o = |n, l, k| orbit_sum(n, l, k, Parity::All, &ctx);
        assert_eq!(o(3, 1, 0).mul(&o(3, 1, 1)), o(3, 2, 1));
        let two = Scalar::from_integer(&ctx, 2);
        assert_eq!(o(4, 1, 0).mul(&o(4, 2, 1)), o(4, 3, 1).add(&o(4, 2, 2).scale(&two)));
        assert_eq!(o(4, 1, 0).mul(&o(4, 3, 1)), o(4, 4, 1).add(&o(4, 3, 2)));
    }

    #[test]
    fn relation_suite_small() {
        for n in 3..=6 {
            let r = check_orbit_sum_relations(n, 8);
            assert!(r.all_hold(), "{:?}", r.failures());
            assert!(!r.literal_discrepancies.is_empty());
        }
    }

    #[test]
    fn normal_paths_match_quotient() {
        let ctx = q();
        for d in 0..=10 {
            assert_eq!(
                normal_path_block_dims(d),
                quiver_quotient_block_dims(d, &ctx),
                "degree {d}"
            );
            assert_eq!(normal_path_block_dims(d), vertex_reflection_matrix_dim(d));
        }
    }

    #[test]
    fn presentations_small() {
        assert!(verify_presentation(3, PresentedGroup::Dihedral, 8).unwrap().passes(8));
        assert!(verify_presentation(4, PresentedGroup::VertexReflections, 8)
            .unwrap()
            .passes(8));
        assert!(verify_presentation(3, PresentedGroup::VertexReflections, 8).is_err());
        assert!(verify_free_module(3, PresentedGroup::Dihedral, 6).unwrap().passes(6));
        assert!(verify_shift_summand(4, PresentedGroup::VertexReflections, 6)
            .unwrap()
            .passes(6));
    }
}
