//! Graded automorphisms of `R` and finite groups of them.
//!
//! Every automorphism is a dihedral symmetry of the `n`-cycle (rotation by
//! `rot`, optionally preceded by the reflection `v -> -v`) combined with a
//! nonzero scalar on each arrow. The dihedral generators are
//! `rho: e_i -> e_{i+1}` and `r: e_i -> e_{-i}`; `refl(j)` below is `rho^j r`,
//! the map `v -> j - v`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::preproj::{AlgebraElement, NFMonomial};
use crate::quiver::{ArrowRef, QuiverA, Word};
use crate::scalars::{CyclotomicContext, Scalar};
use crate::AlgebraError;

#[derive(Clone)]
pub struct Automorphism {
    n: usize,
    rot: usize,
    refl: bool,
    /// Scalar on `a_i` at `i`, on `a_i*` at `n + i`.
    xi: Vec<Scalar>,
    pure: bool,
    ctx: Arc<CyclotomicContext>,
}

impl Automorphism {
    fn build(n: usize, rot: usize, refl: bool, xi: Vec<Scalar>, ctx: &Arc<CyclotomicContext>) -> Self {
        assert_eq!(xi.len(), 2 * n);
        let pure = xi.iter().all(Scalar::is_one);
        Automorphism {
            n,
            rot: rot % n,
            refl,
            xi,
            pure,
            ctx: ctx.clone(),
        }
    }

    pub fn dihedral(n: usize, rot: i64, refl: bool, ctx: &Arc<CyclotomicContext>) -> Self {
        let rot = rot.rem_euclid(n as i64) as usize;
        Self::build(n, rot, refl, vec![Scalar::one(ctx); 2 * n], ctx)
    }

    pub fn identity(n: usize, ctx: &Arc<CyclotomicContext>) -> Self {
        Self::dihedral(n, 0, false, ctx)
    }

    /// `rho^a`.
    pub fn rotation(n: usize, a: i64, ctx: &Arc<CyclotomicContext>) -> Self {
        Self::dihedral(n, a, false, ctx)
    }

    /// `rho^j r`, the reflection `v -> j - v`.
    pub fn reflection(n: usize, j: i64, ctx: &Arc<CyclotomicContext>) -> Self {
        Self::dihedral(n, j, true, ctx)
    }

    /// The vertex-fixing map `a_i -> xi_i a_i`, `a_i* -> xi_star_i a_i*`.
    pub fn scalar(xi: Vec<Scalar>, xi_star: Vec<Scalar>, ctx: &Arc<CyclotomicContext>) -> Self {
        let n = xi.len();
        assert_eq!(xi_star.len(), n);
        let mut all = xi;
        all.extend(xi_star);
        let all = all.into_iter().map(|s| s.embed(ctx)).collect();
        Self::build(n, 0, false, all, ctx)
    }

    /// General constructor: dihedral part plus per-arrow scalars.
    pub fn with_scalars(n: usize, rot: i64, refl: bool, xi: Vec<Scalar>, ctx: &Arc<CyclotomicContext>) -> Self {
        let rot = rot.rem_euclid(n as i64) as usize;
        let xi = xi.into_iter().map(|s| s.embed(ctx)).collect();
        Self::build(n, rot, refl, xi, ctx)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rot(&self) -> usize {
        self.rot
    }

    pub fn is_reflection_part(&self) -> bool {
        self.refl
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    /// All arrow scalars are 1.
    pub fn is_pure_dihedral(&self) -> bool {
        self.pure
    }

    /// Fixes every vertex.
    pub fn fixes_vertices(&self) -> bool {
        !self.refl && self.rot == 0
    }

    pub fn xi(&self, a: ArrowRef) -> &Scalar {
        &self.xi[arrow_slot(self.n, a)]
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        if self.refl {
            (self.rot + self.n - v % self.n) % self.n
        } else {
            (self.rot + v) % self.n
        }
    }

    pub fn fixed_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.vertex_image(v) == v).collect()
    }

    /// Permutation part on arrows: the unique arrow between the image vertices.
    pub fn arrow_permutation(&self, a: ArrowRef) -> ArrowRef {
        let n = self.n;
        let (s, t) = if a.starred {
            ((a.index + 1) % n, a.index)
        } else {
            (a.index, (a.index + 1) % n)
        };
        let (gs, gt) = (self.vertex_image(s), self.vertex_image(t));
        if gt == (gs + 1) % n {
            ArrowRef::nonstar(gs)
        } else {
            debug_assert_eq!(gs, (gt + 1) % n);
            ArrowRef::star(gt)
        }
    }

    pub fn arrow_image(&self, a: ArrowRef) -> (Scalar, ArrowRef) {
        (self.xi(a).clone(), self.arrow_permutation(a))
    }

    /// `self o other`: first `other`, then `self`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        assert_eq!(self.n, other.n);
        let n = self.n as i64;
        // v -> eps v + a
        let (e1, a1) = (if self.refl { -1 } else { 1 }, self.rot as i64);
        let (e2, a2) = (if other.refl { -1 } else { 1 }, other.rot as i64);
        let rot = (e1 * a2 + a1).rem_euclid(n);
        let refl = e1 * e2 == -1;
        let xi = all_arrows(self.n)
            .map(|b| self.xi(other.arrow_permutation(b)) * other.xi(b))
            .collect();
        Self::build(self.n, rot as usize, refl, xi, &self.ctx)
    }

    /// Image of a normal-form monomial: a coefficient and a monomial.
    ///
    /// Rotations by `a` send `NF(i,l,k)` to `NF(i+a,l,k)`; reflections
    /// `v -> a - v` send it to `NF(a-i,k,l)`. The coefficient is the product
    /// of the arrow scalars along the representative word.
    pub fn apply_monomial(&self, m: &NFMonomial) -> (Scalar, NFMonomial) {
        let image = if self.refl {
            NFMonomial::new(self.vertex_image(m.source), m.stars, m.nonstars)
        } else {
            NFMonomial::new(self.vertex_image(m.source), m.nonstars, m.stars)
        };
        if self.pure {
            return (Scalar::one(&self.ctx), image);
        }
        let q = QuiverA::new(self.n).expect("n >= 3");
        let w = m.representative(&q);
        let mut c = Scalar::one(&self.ctx);
        for a in &w.arrows {
            c = &c * self.xi(*a);
        }
        (c, image)
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_terms(
            x.n(),
            x.terms().iter().map(|(m, c)| {
                let (k, img) = self.apply_monomial(m);
                (img, &k * c)
            }),
        )
    }

    /// Checks that `g(Omega)` is a multiple of `Omega` in the free algebra.
    pub fn validate(&self) -> Result<Validation, AlgebraError> {
        let n = self.n;
        let q = QuiverA::new(n)?;
        if self.xi.iter().any(Scalar::is_zero) {
            return Err(AlgebraError::NotAnAutomorphism {
                vertex: None,
                detail: "an arrow scalar is zero".into(),
            });
        }
        // Omega component at vertex i: a_i a_i* - a_{i-1}* a_{i-1}
        let omega_at = |i: usize| -> [(Word, i64); 2] {
            let prev = (i + n - 1) % n;
            [
                (
                    Word {
                        source: i,
                        arrows: vec![ArrowRef::nonstar(i), ArrowRef::star(i)],
                    },
                    1,
                ),
                (
                    Word {
                        source: i,
                        arrows: vec![ArrowRef::star(prev), ArrowRef::nonstar(prev)],
                    },
                    -1,
                ),
            ]
        };
        let mut image: HashMap<Word, Scalar> = HashMap::new();
        for i in 0..n {
            for (w, sign) in omega_at(i) {
                let (c, iw) = crate::quiver::apply_word_automorphism(&q, self, &w);
                let c = if sign < 0 { -&c } else { c };
                let slot = image.entry(iw).or_insert_with(|| Scalar::zero(&self.ctx));
                *slot = &*slot + &c;
            }
        }
        let reference = omega_at(0);
        let factor = image
            .get(&reference[0].0)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.ctx));
        for i in 0..n {
            for (w, sign) in omega_at(i) {
                let expect = if sign < 0 { -&factor } else { factor.clone() };
                let got = image.get(&w).cloned().unwrap_or_else(|| Scalar::zero(&self.ctx));
                if got != expect || factor.is_zero() {
                    return Err(AlgebraError::NotAnAutomorphism {
                        vertex: Some(i),
                        detail: format!(
                            "image of the relation at e{i} is not {factor} times the relation (coefficient of {w} is {got})"
                        ),
                    });
                }
            }
        }
        let kind = if self.refl {
            AutomorphismKind::StarInverting
        } else if self.rot != 0 {
            AutomorphismKind::StarPreserving
        } else {
            AutomorphismKind::ScalarDiag
        };
        Ok(Validation { kind, omega: factor })
    }

    /// `n`, `refl`, `rot` and the arrow scalars as a hashable key.
    fn key(&self) -> (usize, bool, usize) {
        (self.n, self.refl, self.rot)
    }
}

fn arrow_slot(n: usize, a: ArrowRef) -> usize {
    if a.starred {
        n + a.index
    } else {
        a.index
    }
}

fn all_arrows(n: usize) -> impl Iterator<Item = ArrowRef> {
    (0..n).map(ArrowRef::nonstar).chain((0..n).map(ArrowRef::star))
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key() && self.xi == other.xi
    }
}

impl Eq for Automorphism {}

impl Hash for Automorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
        self.xi.hash(state);
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.refl, self.rot) {
            (false, 0) => write!(f, "id")?,
            (false, a) => write!(f, "rho^{a}")?,
            (true, 0) => write!(f, "r")?,
            (true, a) => write!(f, "rho^{a} r")?,
        }
        if !self.pure {
            let xs: Vec<String> = self.xi.iter().map(ToString::to_string).collect();
            write!(f, " xi=[{}]", xs.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutomorphismKind {
    StarPreserving,
    StarInverting,
    ScalarDiag,
}

/// Result of [`Automorphism::validate`]: `g(Omega) = omega * Omega`.
///
/// For vertex-fixing maps `omega` is the homological determinant, the common
/// value of `xi_i xi_i*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    pub kind: AutomorphismKind,
    pub omega: Scalar,
}

/// A finite group of graded automorphisms with its multiplication table.
/// Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    ctx: Arc<CyclotomicContext>,
    elements: Vec<Automorphism>,
    generators: Vec<Automorphism>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Closure of `gens` under composition.
    pub fn generate(
        n: usize,
        ctx: &Arc<CyclotomicContext>,
        gens: Vec<Automorphism>,
        cap: usize,
    ) -> Result<Self, AlgebraError> {
        for g in &gens {
            if g.n() != n {
                return Err(AlgebraError::QuiverMismatch);
            }
            g.validate()?;
        }
        let gens: Vec<Automorphism> = gens
            .into_iter()
            .map(|g| Automorphism {
                ctx: ctx.clone(),
                xi: g.xi.iter().map(|s| s.embed(ctx)).collect(),
                ..g
            })
            .collect();
        let identity = Automorphism::identity(n, ctx);
        let mut index: HashMap<Automorphism, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let h = g.compose(&elements[i]);
                if !index.contains_key(&h) {
                    if elements.len() >= cap {
                        return Err(AlgebraError::CapExceeded { cap });
                    }
                    index.insert(h.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(h);
                }
            }
        }
        let size = elements.len();
        let mut table = vec![vec![0; size]; size];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = index[&elements[a].compose(&elements[b])];
            }
        }
        let inverse = (0..size)
            .map(|a| (0..size).find(|&b| table[a][b] == 0).expect("finite group"))
            .collect();
        Ok(FiniteGroup {
            n,
            ctx: ctx.clone(),
            elements,
            generators: gens,
            table,
            inverse,
        })
    }

    pub fn dihedral_group(n: usize) -> Self {
        let ctx = CyclotomicContext::rational();
        let gens = vec![Automorphism::rotation(n, 1, &ctx), Automorphism::reflection(n, 0, &ctx)];
        Self::generate(n, &ctx, gens, 2 * n).expect("D_n is a group of order 2n")
    }

    /// The subgroup generated by the reflections that fix a vertex.
    pub fn vertex_reflection_group(n: usize) -> Self {
        let ctx = CyclotomicContext::rational();
        Self::generate(n, &ctx, vertex_fixing_reflections(n, &ctx), 2 * n).expect("subgroup of D_n")
    }

    pub fn trivial(n: usize, ctx: &Arc<CyclotomicContext>) -> Self {
        Self::generate(n, ctx, Vec::new(), 1).expect("trivial group")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Automorphism {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    /// Index of `elements[a] o elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn index_of(&self, g: &Automorphism) -> Option<usize> {
        self.elements.iter().position(|h| h == g)
    }

    pub fn contains(&self, g: &Automorphism) -> bool {
        self.index_of(g).is_some()
    }

    pub fn is_pure_dihedral(&self) -> bool {
        self.elements.iter().all(Automorphism::is_pure_dihedral)
    }

    pub fn fixes_vertices(&self) -> bool {
        self.elements.iter().all(Automorphism::fixes_vertices)
    }

    /// Dihedral parts as `(refl, rot)` pairs, sorted.
    pub fn dihedral_signature(&self) -> BTreeSet<(bool, usize)> {
        self.elements.iter().map(|g| (g.refl, g.rot)).collect()
    }

    pub fn describe(&self) -> SubgroupDescriptor {
        let all_vf = vertex_fixing_reflections(self.n, &self.ctx)
            .iter()
            .all(|t| self.dihedral_signature().contains(&(true, t.rot)));
        let kind = if self.is_pure_dihedral() {
            identify_dihedral_subgroup(self.n, &self.dihedral_signature())
        } else if self.fixes_vertices() {
            SubgroupKind::Scalar
        } else {
            SubgroupKind::Mixed
        };
        SubgroupDescriptor {
            kind,
            contains_all_vertex_fixing_reflections: self.is_pure_dihedral() && all_vf,
        }
    }
}

/// Reflections of `D_n` whose vertex permutation has a fixed point.
pub fn vertex_fixing_reflections(n: usize, ctx: &Arc<CyclotomicContext>) -> Vec<Automorphism> {
    (0..n as i64)
        .map(|j| Automorphism::reflection(n, j, ctx))
        .filter(|t| !t.fixed_vertices().is_empty())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubgroupKind {
    /// `<rho^step>`
    Cyclic {
        step: usize,
    },
    /// `<rho^step, rho^offset r>`
    Dihedral {
        step: usize,
        offset: usize,
    },
    Scalar,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubgroupDescriptor {
    pub kind: SubgroupKind,
    pub contains_all_vertex_fixing_reflections: bool,
}

impl fmt::Display for SubgroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupKind::Cyclic { step } => write!(f, "cyclic({step})"),
            SubgroupKind::Dihedral { step, offset } => write!(f, "dihedral({step},{offset})"),
            SubgroupKind::Scalar => write!(f, "scalar"),
            SubgroupKind::Mixed => write!(f, "mixed"),
        }
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn dihedral_subgroup_signature(n: usize, kind: SubgroupKind) -> BTreeSet<(bool, usize)> {
    match kind {
        SubgroupKind::Cyclic { step } => (0..n).step_by(step).map(|a| (false, a)).collect(),
        SubgroupKind::Dihedral { step, offset } => (0..n)
            .step_by(step)
            .flat_map(|a| [(false, a), (true, (a + offset) % n)])
            .collect(),
        _ => BTreeSet::new(),
    }
}

fn identify_dihedral_subgroup(n: usize, sig: &BTreeSet<(bool, usize)>) -> SubgroupKind {
    subgroup_kinds(n)
        .into_iter()
        .find(|k| &dihedral_subgroup_signature(n, *k) == sig)
        .expect("every subgroup of D_n is cyclic or dihedral")
}

fn subgroup_kinds(n: usize) -> Vec<SubgroupKind> {
    let mut out = Vec::new();
    for d in divisors(n) {
        out.push(SubgroupKind::Cyclic { step: d });
    }
    for d in divisors(n) {
        for j in 0..d {
            out.push(SubgroupKind::Dihedral { step: d, offset: j });
        }
    }
    out
}

/// Every subgroup of `D_n`: `<rho^d>` for `d | n` and `<rho^d, rho^j r>` for
/// `d | n`, `0 <= j < d`. Each is built by closure and checked distinct.
pub fn enumerate_subgroups(n: usize) -> Result<Vec<(SubgroupDescriptor, FiniteGroup)>, AlgebraError> {
    QuiverA::new(n)?;
    let ctx = CyclotomicContext::rational();
    let mut out = Vec::new();
    let mut seen: BTreeSet<BTreeSet<(bool, usize)>> = BTreeSet::new();
    for kind in subgroup_kinds(n) {
        let gens = match kind {
            SubgroupKind::Cyclic { step } => vec![Automorphism::rotation(n, step as i64, &ctx)],
            SubgroupKind::Dihedral { step, offset } => vec![
                Automorphism::rotation(n, step as i64, &ctx),
                Automorphism::reflection(n, offset as i64, &ctx),
            ],
            _ => unreachable!(),
        };
        let g = FiniteGroup::generate(n, &ctx, gens, 2 * n)?;
        let sig = g.dihedral_signature();
        assert!(seen.insert(sig), "duplicate subgroup {kind}");
        let desc = g.describe();
        debug_assert_eq!(desc.kind, kind);
        out.push((desc, g));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Iso,
    NotIso,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Iso => write!(f, "Iso"),
            Verdict::NotIso => write!(f, "NotIso"),
        }
    }
}

/// Closed-form decision for subgroups of `D_n`: the Auslander map is an
/// isomorphism exactly when some vertex-fixing reflection is missing from `G`.
pub fn classify_auslander(g: &FiniteGroup) -> Result<Verdict, AlgebraError> {
    if !g.is_pure_dihedral() {
        return Err(AlgebraError::ScalarGroupNotClassifiable);
    }
    let missing = vertex_fixing_reflections(g.n(), g.context())
        .iter()
        .any(|t| !g.contains(t));
    Ok(if missing { Verdict::Iso } else { Verdict::NotIso })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<CyclotomicContext> {
        CyclotomicContext::rational()
    }

    #[test]
    fn generator_actions_on_arrows() {
        let ctx = q();
        let rho = Automorphism::rotation(4, 1, &ctx);
        assert_eq!(rho.arrow_permutation(ArrowRef::nonstar(0)), ArrowRef::nonstar(1));
        assert_eq!(rho.arrow_permutation(ArrowRef::star(3)), ArrowRef::star(0));
        let r = Automorphism::reflection(4, 0, &ctx);
        for i in 0..4 {
            assert_eq!(
                r.arrow_permutation(ArrowRef::nonstar(i)),
                ArrowRef::star((4 - i - 1) % 4)
            );
            assert_eq!(
                r.arrow_permutation(ArrowRef::star(i)),
                ArrowRef::nonstar((4 - i - 1) % 4)
            );
        }
    }

    #[test]
    fn group_law() {
        let ctx = q();
        let n = 5;
        let rho = Automorphism::rotation(n, 1, &ctx);
        let r = Automorphism::reflection(n, 0, &ctx);
        // r rho r^{-1} = rho^{-1}
        assert_eq!(r.compose(&rho).compose(&r), Automorphism::rotation(n, -1, &ctx));
        let g = FiniteGroup::generate(n, &ctx, vec![rho.clone()], 100).unwrap();
        assert_eq!(g.order(), n);
        let g = FiniteGroup::generate(n, &ctx, vec![r.clone()], 100).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(
            Automorphism::reflection(n, 3, &ctx),
            rho.compose(&rho).compose(&rho).compose(&r)
        );
    }

    #[test]
    fn validation_kinds() {
        let ctx = q();
        let v = Automorphism::rotation(3, 1, &ctx).validate().unwrap();
        assert_eq!(v.kind, AutomorphismKind::StarPreserving);
        assert!(v.omega.is_one());
        let v = Automorphism::reflection(3, 0, &ctx).validate().unwrap();
        assert_eq!(v.kind, AutomorphismKind::StarInverting);
        assert_eq!(v.omega, Scalar::from_integer(&ctx, -1));
        let m1 = Scalar::from_integer(&ctx, -1);
        let s = Automorphism::scalar(vec![m1.clone(); 3], vec![m1.clone(); 3], &ctx);
        let v = s.validate().unwrap();
        assert_eq!(v.kind, AutomorphismKind::ScalarDiag);
        assert!(v.omega.is_one());
    }

    #[test]
    fn validation_rejects_nonconstant_determinant() {
        let ctx = q();
        let one = Scalar::one(&ctx);
        let m1 = Scalar::from_integer(&ctx, -1);
        let s = Automorphism::scalar(vec![m1.clone(), one.clone(), one.clone()], vec![one.clone(); 3], &ctx);
        let err = s.validate().unwrap_err();
        assert!(matches!(err, AlgebraError::NotAnAutomorphism { vertex: Some(_), .. }));
        // constant xi xi* = -1 is fine
        let s = Automorphism::scalar(
            vec![m1.clone(), one.clone(), m1.clone()],
            vec![one.clone(), m1.clone(), one.clone()],
            &ctx,
        );
        assert_eq!(s.validate().unwrap().omega, m1);
    }

    #[test]
    fn apply_examples() {
        let ctx = q();
        let one = Scalar::one(&ctx);
        let rho = Automorphism::rotation(3, 1, &ctx);
        let r = Automorphism::reflection(3, 0, &ctx);
        let a0 = AlgebraElement::monomial(3, NFMonomial::new(0, 1, 0), one.clone());
        assert_eq!(
            rho.apply(&a0),
            AlgebraElement::monomial(3, NFMonomial::new(1, 1, 0), one.clone())
        );
        assert_eq!(
            r.apply(&a0),
            AlgebraElement::monomial(3, NFMonomial::new(0, 0, 1), one.clone())
        );
        let r4 = Automorphism::reflection(4, 0, &ctx);
        let x = AlgebraElement::monomial(4, NFMonomial::new(1, 2, 1), one.clone());
        assert_eq!(
            r4.apply(&x),
            AlgebraElement::monomial(4, NFMonomial::new(3, 1, 2), one.clone())
        );
        let m1 = Scalar::from_integer(&ctx, -1);
        let s = Automorphism::scalar(
            vec![m1.clone(), one.clone(), one.clone()],
            vec![m1.clone(), one.clone(), one.clone()],
            &ctx,
        );
        assert_eq!(s.apply(&a0), a0.scale(&m1));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(enumerate_subgroups(3).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(4).unwrap().len(), 10);
        let no_refl = enumerate_subgroups(3)
            .unwrap()
            .into_iter()
            .filter(|(_, g)| g.elements().iter().all(|e| !e.is_reflection_part()))
            .count();
        assert_eq!(no_refl, 2);
    }

    #[test]
    fn vertex_reflection_groups() {
        assert_eq!(FiniteGroup::vertex_reflection_group(4).order(), 4);
        assert_eq!(FiniteGroup::vertex_reflection_group(6).order(), 6);
        assert_eq!(FiniteGroup::vertex_reflection_group(5).order(), 10);
        for n in [3, 5, 7] {
            assert_eq!(vertex_fixing_reflections(n, &q()).len(), n);
        }
        for n in [4, 6, 8] {
            let vf = vertex_fixing_reflections(n, &q());
            assert_eq!(vf.len(), n / 2);
            assert!(vf.iter().all(|t| t.rot() % 2 == 0));
        }
    }

    #[test]
    fn classifier_examples() {
        let ctx = q();
        let c3 = FiniteGroup::generate(3, &ctx, vec![Automorphism::rotation(3, 1, &ctx)], 10).unwrap();
        assert_eq!(classify_auslander(&c3).unwrap(), Verdict::Iso);
        assert_eq!(
            classify_auslander(&FiniteGroup::vertex_reflection_group(4)).unwrap(),
            Verdict::NotIso
        );
        let g = FiniteGroup::generate(
            4,
            &ctx,
            vec![Automorphism::rotation(4, 2, &ctx), Automorphism::reflection(4, 1, &ctx)],
            10,
        )
        .unwrap();
        assert_eq!(classify_auslander(&g).unwrap(), Verdict::Iso);
        let m1 = Scalar::from_integer(&ctx, -1);
        let s = Automorphism::scalar(vec![m1.clone(); 3], vec![m1; 3], &ctx);
        let sg = FiniteGroup::generate(3, &ctx, vec![s], 10).unwrap();
        assert!(matches!(
            classify_auslander(&sg),
            Err(AlgebraError::ScalarGroupNotClassifiable)
        ));
        assert_eq!(sg.describe().kind, SubgroupKind::Scalar);
    }

    #[test]
    fn cap_is_enforced() {
        let ctx = q();
        let err = FiniteGroup::generate(6, &ctx, vec![Automorphism::rotation(6, 1, &ctx)], 4).unwrap_err();
        assert!(matches!(err, AlgebraError::CapExceeded { cap: 4 }));
    }
}
