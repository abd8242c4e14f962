//! Exact arithmetic in the cyclotomic fields `Q(zeta_m)`.
//!
//! Elements are stored as residues modulo the m-th cyclotomic polynomial,
//! so every nonzero value has an inverse and equality is coefficient-wise.
//! The conductor `m = 1` (and `m = 2`) gives plain rationals.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::AlgebraError;

/// The field `Q(zeta_m)` presented as `Q[x] / (Phi_m)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicContext {
    m: usize,
    /// Coefficients of `Phi_m`, lowest degree first. Monic.
    phi: Vec<BigInt>,
}

impl CyclotomicContext {
    pub fn new(m: usize) -> Arc<Self> {
        assert!(m >= 1, "conductor must be positive");
        Arc::new(CyclotomicContext {
            m,
            phi: cyclotomic_polynomial(m),
        })
    }

    pub fn rational() -> Arc<Self> {
        Self::new(1)
    }

    pub fn conductor(&self) -> usize {
        self.m
    }

    /// Degree of `Phi_m`, i.e. Euler's totient of `m`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[BigInt] {
        &self.phi
    }
}

/// `x^m - 1` divided by every `Phi_d` with `d | m`, `d < m`.
pub fn cyclotomic_polynomial(m: usize) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); m + 1];
    num[0] = -BigInt::one();
    num[m] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// An element of `Q(zeta_m)` in canonical form (degree below `phi(m)`).
#[derive(Clone)]
pub struct Scalar {
    ctx: Arc<CyclotomicContext>,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero(ctx: &Arc<CyclotomicContext>) -> Self {
        Scalar {
            ctx: ctx.clone(),
            coeffs: vec![BigRational::zero(); ctx.degree()],
        }
    }

    pub fn one(ctx: &Arc<CyclotomicContext>) -> Self {
        Self::from_integer(ctx, 1)
    }

    pub fn from_integer(ctx: &Arc<CyclotomicContext>, v: i64) -> Self {
        Self::from_rational(ctx, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(ctx: &Arc<CyclotomicContext>, num: i64, den: i64) -> Self {
        Self::from_rational(ctx, BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(ctx: &Arc<CyclotomicContext>, v: BigRational) -> Self {
        let mut s = Self::zero(ctx);
        s.coeffs[0] = v;
        s
    }

    /// `zeta_m^e` for the primitive root `zeta_m = x mod Phi_m`.
    pub fn root_of_unity(ctx: &Arc<CyclotomicContext>, e: i64) -> Self {
        let m = ctx.m as i64;
        let e = e.rem_euclid(m) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Scalar {
            ctx: ctx.clone(),
            coeffs: reduce_mod_phi(poly, &ctx.phi),
        }
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-express an element of `Q(zeta_m)` inside `Q(zeta_{m'})` for `m | m'`.
    pub fn embed(&self, target: &Arc<CyclotomicContext>) -> Self {
        if Arc::ptr_eq(&self.ctx, target) || self.ctx.m == target.m {
            return Scalar {
                ctx: target.clone(),
                coeffs: self.coeffs.clone(),
            };
        }
        assert!(
            target.m % self.ctx.m == 0,
            "cannot embed Q(zeta_{}) into Q(zeta_{})",
            self.ctx.m,
            target.m
        );
        let step = (target.m / self.ctx.m) as i64;
        let mut out = Scalar::zero(target);
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Scalar::root_of_unity(target, e as i64 * step).scale(c);
            out = &out + &term;
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Scalar {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn aligned<'a>(&'a self, other: &'a Scalar) -> (Arc<CyclotomicContext>, Option<Scalar>, Option<Scalar>) {
        if self.ctx.m == other.ctx.m {
            return (self.ctx.clone(), None, None);
        }
        if self.ctx.m == 1 {
            return (other.ctx.clone(), Some(self.embed(&other.ctx)), None);
        }
        if other.ctx.m == 1 {
            return (self.ctx.clone(), None, Some(other.embed(&self.ctx)));
        }
        panic!("mixing scalars from Q(zeta_{}) and Q(zeta_{})", self.ctx.m, other.ctx.m);
    }

    pub fn inv(&self) -> Result<Scalar, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.ctx.degree() == 1 {
            return Ok(Scalar {
                ctx: self.ctx.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let phi: Vec<BigRational> = self
            .ctx
            .phi
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let inv = poly_inverse_mod(&self.coeffs, &phi);
        Ok(Scalar {
            ctx: self.ctx.clone(),
            coeffs: reduce_mod_phi(inv, &self.ctx.phi),
        })
    }

    pub fn pow(&self, e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(&self.ctx);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least `e >= 1` with `self^e = 1`.
    ///
    /// Roots of unity in `Q(zeta_m)` have order dividing `lcm(2, m)`, so the
    /// search stops at `2m` and reports `None` beyond it.
    pub fn multiplicative_order(&self) -> Result<Option<u64>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let bound = 2 * self.ctx.m as u64;
        let mut acc = self.clone();
        for e in 1..=bound {
            if acc.is_one() {
                return Ok(Some(e));
            }
            acc = &acc * self;
        }
        Ok(None)
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn reduce_mod_phi(mut poly: Vec<BigRational>, phi: &[BigInt]) -> Vec<BigRational> {
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for i in (deg..poly.len()).rev() {
            let c = std::mem::take(&mut poly[i]);
            if c.is_zero() {
                continue;
            }
            // x^i = x^(i-deg) * x^deg and x^deg = -(lower part of phi)
            for (j, pj) in phi[..deg].iter().enumerate() {
                if !pj.is_zero() {
                    poly[i - deg + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
        poly.truncate(deg);
    }
    poly.resize(deg, BigRational::zero());
    poly
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() <= db {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db.max(1));
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Extended Euclid: `u` with `a*u = 1 mod phi` (phi irreducible, a nonzero).
fn poly_inverse_mod(a: &[BigRational], phi: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (phi.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut t0, mut t1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is a nonzero constant gcd
    let c = r0[0].clone();
    t0.iter().map(|x| x / &c).collect()
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.ctx.m == other.ctx.m {
            return self.coeffs == other.coeffs;
        }
        let (_, a, b) = self.aligned(other);
        let lhs = a.as_ref().unwrap_or(self);
        let rhs = b.as_ref().unwrap_or(other);
        lhs.coeffs == rhs.coeffs
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ctx.m.hash(state);
        self.coeffs.hash(state);
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let (ctx, a, b) = self.aligned(rhs);
        let lhs = a.as_ref().unwrap_or(self);
        let rhs = b.as_ref().unwrap_or(rhs);
        Scalar {
            ctx,
            coeffs: lhs.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let (ctx, a, b) = self.aligned(rhs);
        let lhs = a.as_ref().unwrap_or(self);
        let rhs = b.as_ref().unwrap_or(rhs);
        Scalar {
            ctx,
            coeffs: lhs.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let (ctx, a, b) = self.aligned(rhs);
        let lhs = a.as_ref().unwrap_or(self);
        let rhs = b.as_ref().unwrap_or(rhs);
        if ctx.degree() == 1 {
            return Scalar {
                ctx,
                coeffs: vec![&lhs.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let prod = poly_mul(&lhs.coeffs, &rhs.coeffs);
        let coeffs = reduce_mod_phi(prod, &ctx.phi);
        Scalar { ctx, coeffs }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Canonical rational string: `p` or `p/q` with `q > 0` and `gcd(p, q) = 1`.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    /// Rationals print as `p/q`; cyclotomic values as a sum of `c*z^e`
    /// terms in increasing `e`, where `z` is the chosen primitive root.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", rational_string(r));
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{}", rational_string(&mag))?,
                (_, true) => write!(f, "z^{e}")?,
                (_, false) => write!(f, "{}*z^{e}", rational_string(&mag))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [Q(z_{})]", self, self.ctx.m)
    }
}

/// Least common multiple, used when merging the conductors of several generators.
pub fn lcm(a: usize, b: usize) -> usize {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(ctx: &Arc<CyclotomicContext>, e: i64) -> Scalar {
        Scalar::root_of_unity(ctx, e)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_tables() {
        let as_i64 = |m| -> Vec<i64> { cyclotomic_polynomial(m).iter().map(|c| c.try_into().unwrap()).collect() };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(30).len() - 1, 8);
    }

    #[test]
    fn roots_of_unity_reduce() {
        let q = CyclotomicContext::rational();
        assert!(z(&q, 0).is_one());
        let c2 = CyclotomicContext::new(2);
        assert_eq!(z(&c2, 1), Scalar::from_integer(&c2, -1));
        let c4 = CyclotomicContext::new(4);
        assert_eq!(z(&c4, 2), Scalar::from_integer(&c4, -1));
        assert_eq!(z(&c4, -1), z(&c4, 3));
    }

    #[test]
    fn arithmetic_examples() {
        let q = CyclotomicContext::rational();
        let one = Scalar::one(&q);
        assert_eq!(&one + &one, Scalar::from_integer(&q, 2));
        let c4 = CyclotomicContext::new(4);
        let i = z(&c4, 1);
        assert_eq!(&i * &i, Scalar::from_integer(&c4, -1));
        let m1 = Scalar::from_integer(&q, -1);
        assert_eq!(m1.inv().unwrap(), m1);
        assert!(Scalar::zero(&c4).inv().is_err());
    }

    #[test]
    fn orders() {
        let q = CyclotomicContext::rational();
        assert_eq!(Scalar::one(&q).multiplicative_order().unwrap(), Some(1));
        assert_eq!(Scalar::from_integer(&q, -1).multiplicative_order().unwrap(), Some(2));
        assert_eq!(Scalar::from_integer(&q, 2).multiplicative_order().unwrap(), None);
        let c4 = CyclotomicContext::new(4);
        assert_eq!(z(&c4, 1).multiplicative_order().unwrap(), Some(4));
        let c3 = CyclotomicContext::new(3);
        // -zeta_3 is a primitive 6th root of unity
        assert_eq!((-&z(&c3, 1)).multiplicative_order().unwrap(), Some(6));
        assert!(Scalar::zero(&c3).multiplicative_order().is_err());
    }

    #[test]
    fn embedding_commutes_with_arithmetic() {
        let c3 = CyclotomicContext::new(3);
        let c12 = CyclotomicContext::new(12);
        let a = &z(&c3, 1) + &Scalar::from_ratio(&c3, 2, 5);
        let b = z(&c3, 2);
        assert_eq!((&a * &b).embed(&c12), &a.embed(&c12) * &b.embed(&c12));
        assert_eq!((&a + &b).embed(&c12), &a.embed(&c12) + &b.embed(&c12));
        assert_eq!(z(&c3, 1).embed(&c12), z(&c12, 4));
        let q = CyclotomicContext::rational();
        let half = Scalar::from_ratio(&q, 1, 2);
        assert_eq!(
            &half * &z(&c12, 1),
            z(&c12, 1).scale(&BigRational::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn display_is_canonical() {
        let q = CyclotomicContext::rational();
        assert_eq!(Scalar::from_ratio(&q, 6, -4).to_string(), "-3/2");
        let c4 = CyclotomicContext::new(4);
        let v = &Scalar::from_integer(&c4, 1) - &z(&c4, 1).scale(&BigRational::new(1.into(), 3.into()));
        assert_eq!(v.to_string(), "1 - 1/3*z^1");
    }
}
