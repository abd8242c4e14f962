//! The skew group algebra `R#G`, the two-sided ideal generated by
//! `f_G = sum_g 1#g`, and the growth of the identity component `R'`.
//!
//! `(R#G)_d` splits into blocks `(i, j)` under the idempotents `e_i#1` on
//! both sides: the term `x#g` with `x: i -> t` lives in block
//! `(i, g^{-1}(t))`. The ideal is homogeneous for this splitting, so each
//! degree is stored as one reduced subspace per block.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::linalg::{collect_row, SparseRow, Subspace};
use crate::preproj::{mul_monomials, AlgebraElement, NFMonomial};
use crate::quiver::ArrowRef;
use crate::scalars::{CyclotomicContext, Scalar};
use crate::symmetry::{classify_auslander, FiniteGroup, SubgroupDescriptor, Verdict};
use crate::AlgebraError;

/// `(monomial, group element index)`.
pub type SmashTerm = (NFMonomial, usize);

#[derive(Clone, PartialEq, Eq)]
pub struct SmashElement {
    n: usize,
    terms: BTreeMap<SmashTerm, Scalar>,
}

impl SmashElement {
    pub fn zero(n: usize) -> Self {
        SmashElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(n: usize, m: NFMonomial, g: usize, c: Scalar) -> Self {
        Self::from_terms(n, [((m, g), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (SmashTerm, Scalar)>>(n: usize, terms: I) -> Self {
        let mut out = Self::zero(n);
        for (t, c) in terms {
            out.add_term(t, c);
        }
        out
    }

    /// `x # 1`.
    pub fn from_algebra(x: &AlgebraElement) -> Self {
        Self::from_terms(x.n(), x.terms().iter().map(|(m, c)| ((*m, 0), c.clone())))
    }

    /// `1 # g`.
    pub fn group_element(n: usize, g: usize, ctx: &Arc<CyclotomicContext>) -> Self {
        Self::from_terms(n, (0..n).map(|i| ((NFMonomial::idempotent(i), g), Scalar::one(ctx))))
    }

    /// `f_G = sum_g 1#g`.
    pub fn f_g(group: &FiniteGroup) -> Self {
        let mut out = Self::zero(group.n());
        for g in 0..group.order() {
            out = out.add(&Self::group_element(group.n(), g, group.context()));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<SmashTerm, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, t: SmashTerm, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&t) {
            Some(slot) => {
                let v = &*slot + &c;
                if v.is_zero() {
                    self.terms.remove(&t);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.terms.insert(t, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(*t, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(*t, -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(t, v)| (*t, v * c)))
    }

    /// Common degree of all terms; zero counts as degree 0.
    pub fn degree(&self) -> Result<usize, AlgebraError> {
        let mut degrees = self.terms.keys().map(|(m, _)| m.degree());
        let first = degrees.next().unwrap_or(0);
        if degrees.all(|d| d == first) {
            Ok(first)
        } else {
            Err(AlgebraError::MixedDegree)
        }
    }

    /// The identity-group component as an element of `R`.
    pub fn identity_component(&self) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|((_, g), _)| *g == 0)
                .map(|((m, _), c)| (*m, c.clone())),
        )
    }
}

impl fmt::Display for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((m, g), c)| format!("({c}) {m}#g{g}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(a#g)(b#h) = a g(b) # gh`, extended bilinearly.
pub fn smash_multiply(group: &FiniteGroup, x: &SmashElement, y: &SmashElement) -> SmashElement {
    let n = group.n();
    let mut out = SmashElement::zero(n);
    for ((a, g), c) in &x.terms {
        let elem = group.element(*g);
        for ((b, h), d) in &y.terms {
            let (k, gb) = elem.apply_monomial(b);
            if let Some(m) = mul_monomials(n, a, &gb) {
                out.add_term((m, group.mul(*g, *h)), &(c * d) * &k);
            }
        }
    }
    out
}

/// `b -> a g(b)`, the image of `a#g` under the Auslander map.
pub fn eval_auslander_map(group: &FiniteGroup, a: &AlgebraElement, g: usize, b: &AlgebraElement) -> AlgebraElement {
    a.mul(&group.element(g).apply(b))
}

/// Left block index of a term: the right vertex is `g^{-1}(target)`.
fn block_of(group: &FiniteGroup, m: &NFMonomial, g: usize) -> (usize, usize) {
    let t = m.target(group.n());
    (m.source, group.element(group.inverse(g)).vertex_image(t))
}

#[derive(Clone, Debug)]
struct Block {
    columns: Vec<SmashTerm>,
    index: HashMap<SmashTerm, usize>,
    space: Subspace,
    /// Columns at or after this index carry the identity element.
    identity_start: usize,
}

impl Block {
    fn identity_columns(&self) -> usize {
        self.columns.len() - self.identity_start
    }

    /// Dimension of the ideal's intersection with `R_d # 1` in this block.
    fn identity_intersection(&self) -> usize {
        self.space.pivots().filter(|p| *p >= self.identity_start).count()
    }

    fn to_terms(&self, row: &SparseRow) -> Vec<(SmashTerm, Scalar)> {
        row.iter().map(|(c, v)| (self.columns[*c], v.clone())).collect()
    }
}

/// One degree of the ideal `(f_G)`.
#[derive(Clone, Debug)]
pub struct IdealLayer {
    degree: usize,
    blocks: BTreeMap<(usize, usize), Block>,
    /// Set once the layer is all of `(R#G)_d`; every later layer is then full too.
    full: bool,
}

impl IdealLayer {
    fn empty(group: &FiniteGroup, d: usize) -> Self {
        let n = group.n();
        let mut grouped: BTreeMap<(usize, usize), Vec<SmashTerm>> = BTreeMap::new();
        for m in NFMonomial::of_degree(n, d) {
            for g in 0..group.order() {
                grouped.entry(block_of(group, &m, g)).or_default().push((m, g));
            }
        }
        let blocks = grouped
            .into_iter()
            .map(|(key, mut columns)| {
                // non-identity components first so identity-only rows sit at the bottom
                columns.sort_by_key(|&(m, g)| (g == 0, g, m));
                let identity_start = columns.iter().position(|&(_, g)| g == 0).unwrap_or(columns.len());
                let index = columns.iter().enumerate().map(|(i, t)| (*t, i)).collect();
                let space = Subspace::new(group.context(), columns.len());
                (
                    key,
                    Block {
                        columns,
                        index,
                        space,
                        identity_start,
                    },
                )
            })
            .collect();
        IdealLayer {
            degree: d,
            blocks,
            full: false,
        }
    }

    fn insert_terms(&mut self, key: (usize, usize), terms: impl IntoIterator<Item = (SmashTerm, Scalar)>) {
        let block = self.blocks.get_mut(&key).expect("block exists");
        let row = collect_row(terms.into_iter().map(|(t, c)| (block.index[&t], c)));
        block.space.insert(&row);
    }

    fn refresh_full(&mut self) {
        self.full = self.blocks.values().all(|b| b.space.dim() == b.columns.len());
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn dim(&self) -> usize {
        self.blocks.values().map(|b| b.space.dim()).sum()
    }

    pub fn ambient_dim(&self) -> usize {
        self.blocks.values().map(|b| b.columns.len()).sum()
    }

    /// `dim R'_d`: identity-component monomials not hit by the ideal.
    pub fn identity_quotient_dim(&self) -> usize {
        self.blocks
            .values()
            .map(|b| b.identity_columns() - b.identity_intersection())
            .sum()
    }

    /// `n x n` matrix of `dim e_i R'_d e_j`.
    pub fn identity_quotient_matrix(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![0; n]; n];
        for (&(i, j), b) in &self.blocks {
            out[i][j] += b.identity_columns() - b.identity_intersection();
        }
        out
    }

    pub fn contains(&self, group: &FiniteGroup, x: &SmashElement) -> bool {
        let mut grouped: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
        for ((m, g), c) in x.terms() {
            if m.degree() != self.degree || *g >= group.order() {
                return false;
            }
            let key = block_of(group, m, *g);
            grouped
                .entry(key)
                .or_default()
                .push((self.blocks[&key].index[&(*m, *g)], c.clone()));
        }
        grouped
            .into_iter()
            .all(|(k, entries)| self.blocks[&k].space.contains(&collect_row(entries)))
    }
}

fn arrow_monomials(n: usize) -> Vec<NFMonomial> {
    (0..n)
        .flat_map(|i| [NFMonomial::new(i, 1, 0), NFMonomial::new(i, 0, 1)])
        .collect()
}

fn layer_zero(group: &FiniteGroup) -> IdealLayer {
    let n = group.n();
    let one = Scalar::one(group.context());
    let mut layer = IdealLayer::empty(group, 0);
    // (e_i#1) f_G (e_j#h) = sum over g with g(j) = i of e_i # gh
    for j in 0..n {
        for h in 0..group.order() {
            let mut by_block: BTreeMap<(usize, usize), Vec<(SmashTerm, Scalar)>> = BTreeMap::new();
            for g in 0..group.order() {
                let i = group.element(g).vertex_image(j);
                let t = (NFMonomial::idempotent(i), group.mul(g, h));
                by_block
                    .entry(block_of(group, &t.0, t.1))
                    .or_default()
                    .push((t, one.clone()));
            }
            for (key, terms) in by_block {
                layer.insert_terms(key, terms);
            }
        }
    }
    layer.refresh_full();
    layer
}

/// `J_d = R_1 J_{d-1} + J_{d-1} R_1`.
fn next_layer(group: &FiniteGroup, prev: &IdealLayer) -> IdealLayer {
    let n = group.n();
    let d = prev.degree + 1;
    let mut layer = IdealLayer::empty(group, d);
    if prev.full {
        for b in layer.blocks.values_mut() {
            for c in 0..b.columns.len() {
                b.space.insert(&[(c, Scalar::one(group.context()))]);
            }
        }
        layer.full = true;
        return layer;
    }
    let arrows = arrow_monomials(n);
    for (&(i, j), block) in &prev.blocks {
        for row in block.space.rows() {
            let terms = block.to_terms(row);
            // left multiplication by arrows ending at i
            for a in arrows.iter().filter(|a| a.target(n) == i) {
                let product: Vec<(SmashTerm, Scalar)> = terms
                    .iter()
                    .filter_map(|((m, g), c)| mul_monomials(n, a, m).map(|p| ((p, *g), c.clone())))
                    .collect();
                if !product.is_empty() {
                    layer.insert_terms((a.source, j), product);
                }
            }
            // right multiplication by arrows a#1 leaving j
            for a in arrows.iter().filter(|a| a.source == j) {
                let product: Vec<(SmashTerm, Scalar)> = terms
                    .iter()
                    .filter_map(|((m, g), c)| {
                        let (k, ga) = group.element(*g).apply_monomial(a);
                        mul_monomials(n, m, &ga).map(|p| ((p, *g), c * &k))
                    })
                    .collect();
                if !product.is_empty() {
                    layer.insert_terms((i, a.target(n)), product);
                }
            }
        }
    }
    layer.refresh_full();
    layer
}

/// Degree truncation of the two-sided ideal `(f_G)`, all layers retained.
#[derive(Clone, Debug)]
pub struct IdealTruncation {
    group: FiniteGroup,
    layers: Vec<IdealLayer>,
}

impl IdealTruncation {
    pub fn build(group: &FiniteGroup, max_degree: usize) -> Self {
        let mut layers = vec![layer_zero(group)];
        for _ in 0..max_degree {
            let next = next_layer(group, layers.last().expect("nonempty"));
            layers.push(next);
        }
        IdealTruncation {
            group: group.clone(),
            layers,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn max_degree(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, d: usize) -> &IdealLayer {
        &self.layers[d]
    }

    pub fn dim(&self, d: usize) -> usize {
        self.layers[d].dim()
    }

    pub fn identity_component_dims(&self) -> Vec<usize> {
        self.layers.iter().map(IdealLayer::identity_quotient_dim).collect()
    }

    pub fn membership(&self, x: &SmashElement) -> Result<Membership, AlgebraError> {
        let d = x.degree()?;
        if d > self.max_degree() {
            return Err(AlgebraError::Unsupported(format!(
                "element has degree {d} but the ideal is only built through {}",
                self.max_degree()
            )));
        }
        Ok(if self.layers[d].contains(&self.group, x) {
            Membership::InIdeal
        } else {
            Membership::NotInIdeal
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    InIdeal,
    NotInIdeal,
}

/// `dim R'_d` for `d = 0..=max_degree`, keeping one layer at a time.
pub fn identity_component_dims(group: &FiniteGroup, max_degree: usize) -> Vec<usize> {
    identity_component_series(group, max_degree).0
}

/// Totals and `n x n` block matrices of `R'_d`.
pub fn identity_component_series(group: &FiniteGroup, max_degree: usize) -> (Vec<usize>, Vec<Vec<Vec<usize>>>) {
    let mut layer = layer_zero(group);
    let mut totals = vec![layer.identity_quotient_dim()];
    let mut matrices = vec![layer.identity_quotient_matrix(group.n())];
    for _ in 0..max_degree {
        layer = next_layer(group, &layer);
        totals.push(layer.identity_quotient_dim());
        matrices.push(layer.identity_quotient_matrix(group.n()));
    }
    (totals, matrices)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GrowthKind {
    FiniteDim,
    GK1,
    GK2Likely,
    Inconclusive,
}

impl GrowthKind {
    /// Estimated GK dimension of `R'`.
    pub fn gk(&self) -> Option<u32> {
        match self {
            GrowthKind::FiniteDim => Some(0),
            GrowthKind::GK1 => Some(1),
            GrowthKind::GK2Likely => Some(2),
            GrowthKind::Inconclusive => None,
        }
    }
}

impl fmt::Display for GrowthKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GrowthKind::FiniteDim => "FiniteDim",
            GrowthKind::GK1 => "GK1",
            GrowthKind::GK2Likely => "GK2Likely",
            GrowthKind::Inconclusive => "Inconclusive",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthVerdict {
    pub kind: GrowthKind,
    pub window: usize,
    /// Start of the final run of zeros, when the series ends in zero.
    pub first_zero_degree: Option<usize>,
    pub tail_max: usize,
    pub previous_max: usize,
    /// Common difference of the last two windows when they form an arithmetic progression.
    pub tail_increment: Option<i64>,
}

pub fn default_window(max_degree: usize) -> usize {
    ((max_degree + 1) / 4).max(2)
}

/// Windowed classification of a dimension series.
///
/// Zero tail gives `FiniteDim`; a tail growing by a constant positive step
/// gives `GK2Likely`; a nonzero tail whose maximum matches the previous
/// window gives `GK1`.
pub fn growth_classify(dims: &[usize], window: usize) -> Result<GrowthVerdict, AlgebraError> {
    let needed = 2 * window;
    if window == 0 || dims.len() < needed {
        return Err(AlgebraError::WindowTooLarge {
            window,
            needed,
            have: dims.len(),
        });
    }
    let tail = &dims[dims.len() - window..];
    let prev = &dims[dims.len() - needed..dims.len() - window];
    let tail_max = *tail.iter().max().expect("window > 0");
    let previous_max = *prev.iter().max().expect("window > 0");
    let first_zero_degree = if dims.last() == Some(&0) {
        Some(dims.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1))
    } else {
        None
    };
    // the progression has to run through both windows
    let diffs: Vec<i64> = dims[dims.len() - needed..]
        .windows(2)
        .map(|w| w[1] as i64 - w[0] as i64)
        .collect();
    let tail_increment = diffs.first().copied().filter(|d0| diffs.iter().all(|d| d == d0));
    let kind = if tail_max == 0 {
        GrowthKind::FiniteDim
    } else if matches!(tail_increment, Some(c) if c > 0) {
        GrowthKind::GK2Likely
    } else if tail_max == previous_max {
        GrowthKind::GK1
    } else {
        GrowthKind::Inconclusive
    };
    Ok(GrowthVerdict {
        kind,
        window,
        first_zero_degree,
        tail_max,
        previous_max,
        tail_increment,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmpiricalVerdict {
    Iso,
    NotIso,
    Unknown,
}

impl fmt::Display for EmpiricalVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EmpiricalVerdict::Iso => "Iso",
            EmpiricalVerdict::NotIso => "NotIso",
            EmpiricalVerdict::Unknown => "Unknown",
        };
        write!(f, "{s}")
    }
}

impl From<Verdict> for EmpiricalVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Iso => EmpiricalVerdict::Iso,
            Verdict::NotIso => EmpiricalVerdict::NotIso,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuslanderReport {
    pub n: usize,
    pub group_order: usize,
    pub descriptor: SubgroupDescriptor,
    pub max_degree: usize,
    pub dims: Vec<usize>,
    pub growth: GrowthVerdict,
    /// `2 - GK(R')`, absent when growth is inconclusive.
    pub pertinency: Option<u32>,
    pub verdict: EmpiricalVerdict,
    pub classifier: Option<Verdict>,
    pub agree: Option<bool>,
}

/// Cutoff that leaves room for the expected zero tail to show: `4n + 4` for
/// dihedral subgroups, `4 |G| n + 2` when scalars are involved.
pub fn default_auslander_degree(group: &FiniteGroup) -> usize {
    if group.is_pure_dihedral() {
        4 * group.n() + 4
    } else {
        4 * group.order() * group.n() + 2
    }
}

pub fn auslander_verdict(group: &FiniteGroup, max_degree: usize) -> Result<AuslanderReport, AlgebraError> {
    auslander_verdict_with_window(group, max_degree, default_window(max_degree))
}

pub fn auslander_verdict_with_window(
    group: &FiniteGroup,
    max_degree: usize,
    window: usize,
) -> Result<AuslanderReport, AlgebraError> {
    let dims = identity_component_dims(group, max_degree);
    let growth = growth_classify(&dims, window)?;
    let pertinency = growth.kind.gk().map(|gk| 2 - gk);
    let verdict = match growth.kind {
        GrowthKind::FiniteDim => EmpiricalVerdict::Iso,
        GrowthKind::GK1 | GrowthKind::GK2Likely => EmpiricalVerdict::NotIso,
        GrowthKind::Inconclusive => EmpiricalVerdict::Unknown,
    };
    let classifier = classify_auslander(group).ok();
    let agree = classifier.map(|c| EmpiricalVerdict::from(c) == verdict);
    Ok(AuslanderReport {
        n: group.n(),
        group_order: group.order(),
        descriptor: group.describe(),
        max_degree,
        dims,
        growth,
        pertinency,
        verdict,
        classifier,
        agree,
    })
}

/// A named element of `R#G` expected to lie in `(f_G)`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub name: String,
    pub element: SmashElement,
}

impl Certificate {
    fn path(n: usize, name: String, m: NFMonomial, ctx: &Arc<CyclotomicContext>) -> Self {
        Certificate {
            name,
            element: SmashElement::term(n, m, 0, Scalar::one(ctx)),
        }
    }

    pub fn degree(&self) -> usize {
        self.element.degree().unwrap_or(0)
    }
}

/// `(p - q)#1` with `p` the pure nonstar and `q` the pure star cycle at `e_0`.
pub fn cycle_difference_certificate(group: &FiniteGroup) -> Certificate {
    let n = group.n();
    let one = Scalar::one(group.context());
    let x = SmashElement::from_terms(
        n,
        [
            ((NFMonomial::new(0, n, 0), 0), one.clone()),
            ((NFMonomial::new(0, 0, n), 0), -&one),
        ],
    );
    Certificate {
        name: "(p-q)#1".into(),
        element: x,
    }
}

/// Path products `a_0 ... a_{m-1} # 1` for a group generated by one diagonal
/// scalar automorphism of order `m`.
///
/// When every nonstar scale is the same root of unity the `a_i` are the
/// arrows themselves and the product is a pure nonstar path of length `m`;
/// otherwise `a_i = p`, the nonstar cycle, giving `p^m`. Star paths are
/// handled the same way.
pub fn sequence_certificates(group: &FiniteGroup) -> Result<Vec<Certificate>, AlgebraError> {
    let n = group.n();
    let ctx = group.context();
    let sigma = match group.generators() {
        [g] if g.fixes_vertices() && !g.is_reflection_part() && g.rot() == 0 => g,
        _ => return Err(AlgebraError::ScalarGroupNotClassifiable),
    };
    let m = group.order();
    let uniform = |starred: bool| {
        let first = sigma.xi(ArrowRef { starred, index: 0 });
        (1..n).all(|i| sigma.xi(ArrowRef { starred, index: i }) == first)
    };
    let mut out = Vec::new();
    if uniform(false) {
        out.push(Certificate::path(
            n,
            format!("nonstar path of length {m}"),
            NFMonomial::new(0, m, 0),
            ctx,
        ));
    } else {
        out.push(Certificate::path(
            n,
            format!("p^{m}"),
            NFMonomial::new(0, n * m, 0),
            ctx,
        ));
    }
    if uniform(true) {
        out.push(Certificate::path(
            n,
            format!("star path of length {m}"),
            NFMonomial::new(0, 0, m),
            ctx,
        ));
    } else {
        out.push(Certificate::path(
            n,
            format!("q^{m}"),
            NFMonomial::new(0, 0, n * m),
            ctx,
        ));
    }
    Ok(out)
}

/// Builds the ideal through the largest certificate degree and tests each one.
pub fn check_certificates(group: &FiniteGroup, certs: &[Certificate]) -> Result<Vec<(String, bool)>, AlgebraError> {
    let top = certs.iter().map(Certificate::degree).max().unwrap_or(0);
    let ideal = IdealTruncation::build(group, top);
    certs
        .iter()
        .map(|c| Ok((c.name.clone(), ideal.membership(&c.element)? == Membership::InIdeal)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::Automorphism;

    fn rational() -> Arc<CyclotomicContext> {
        CyclotomicContext::rational()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let ctx = rational();
        FiniteGroup::generate(n, &ctx, vec![Automorphism::rotation(n, 1, &ctx)], 2 * n).unwrap()
    }

    #[test]
    fn smash_product_examples() {
        let g = cyclic(3);
        let ctx = rational();
        let one = Scalar::one(&ctx);
        let rho = g.index_of(&Automorphism::rotation(3, 1, &ctx)).unwrap();
        let x = SmashElement::term(3, NFMonomial::new(0, 1, 0), rho, one.clone());
        let y = SmashElement::term(3, NFMonomial::new(0, 1, 0), 0, one.clone());
        assert_eq!(
            smash_multiply(&g, &x, &y),
            SmashElement::term(3, NFMonomial::new(0, 2, 0), rho, one.clone())
        );
        let a = SmashElement::group_element(3, rho, &ctx);
        let b = SmashElement::group_element(3, rho, &ctx);
        assert_eq!(
            smash_multiply(&g, &a, &b),
            SmashElement::group_element(3, g.mul(rho, rho), &ctx)
        );
    }

    #[test]
    fn corner_of_f_g_for_dihedral() {
        let g = FiniteGroup::dihedral_group(4);
        let ctx = rational();
        let e0 = SmashElement::term(4, NFMonomial::idempotent(0), 0, Scalar::one(&ctx));
        let f1 = smash_multiply(&g, &smash_multiply(&g, &e0, &SmashElement::f_g(&g)), &e0);
        let r = g.index_of(&Automorphism::reflection(4, 0, &ctx)).unwrap();
        let expect = e0.add(&SmashElement::term(4, NFMonomial::idempotent(0), r, Scalar::one(&ctx)));
        assert_eq!(f1, expect);
    }

    #[test]
    fn trivial_group_gives_unit_ideal() {
        let g = FiniteGroup::trivial(3, &rational());
        let ideal = IdealTruncation::build(&g, 4);
        assert!(ideal.layer(0).is_full());
        assert_eq!(ideal.identity_component_dims(), vec![0; 5]);
    }

    #[test]
    fn rotation_group_kills_long_paths() {
        let g = cyclic(3);
        let dims = identity_component_dims(&g, 10);
        assert!(dims[7..].iter().all(|&d| d == 0), "{dims:?}");
        let ideal = IdealTruncation::build(&g, 7);
        assert_eq!(ideal.dim(7), 72);
    }

    #[test]
    fn growth_examples() {
        let r: Vec<usize> = (0..20).map(|d| 3 * (d + 1)).collect();
        assert_eq!(growth_classify(&r, 4).unwrap().kind, GrowthKind::GK2Likely);
        let z = [3, 2, 1, 0, 0, 0, 0, 0];
        let v = growth_classify(&z, 2).unwrap();
        assert_eq!(v.kind, GrowthKind::FiniteDim);
        assert_eq!(v.first_zero_degree, Some(3));
        let b = [3, 2, 1, 2, 1, 2, 1, 2];
        assert_eq!(growth_classify(&b, 2).unwrap().kind, GrowthKind::GK1);
        assert!(matches!(
            growth_classify(&b, 5),
            Err(AlgebraError::WindowTooLarge { .. })
        ));
    }

    #[test]
    fn verdicts_for_small_groups() {
        let rep = auslander_verdict(&cyclic(3), 14).unwrap();
        assert_eq!(rep.verdict, EmpiricalVerdict::Iso);
        assert_eq!(rep.pertinency, Some(2));
        assert_eq!(rep.agree, Some(true));
        let rep = auslander_verdict(&FiniteGroup::dihedral_group(3), 16).unwrap();
        assert_eq!(rep.verdict, EmpiricalVerdict::NotIso, "{:?}", rep.dims);
        assert_eq!(rep.pertinency, Some(1));
    }
}
