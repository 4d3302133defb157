//! The real quadratic tower ℚ(√2,√3) = ℚ ⊕ ℚ√2 ⊕ ℚ√3 ⊕ ℚ√6.
//!
//! Every entry of the matrices produced by the built-in lattices and isometries lies in this
//! field, so elimination, commutants and classification run with zero rounding error.
//! Elements are kept in the unique coordinate form `p + q√2 + r√3 + s√6` with rational
//! coefficients; equality is coordinate equality.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::AlgebraError;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

fn rat_i64(n: i64, d: i64) -> Rational {
    assert!(d != 0, "rational literal with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rat_sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

/// Exact square root of a nonnegative rational, if it is a rational square.
fn rat_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rational::zero());
    }
    let n = x.numer();
    let d = x.denom();
    let ns = n.sqrt();
    let ds = d.sqrt();
    if &(&ns * &ns) == n && &(&ds * &ds) == d {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Element of the quadratic subfield ℚ(√2), written `a + b√2`. Internal helper for the
/// tower arithmetic (inverse, sign, square root) of [`FieldElement`].
#[derive(Clone, PartialEq, Eq)]
struct Q2 {
    a: Rational,
    b: Rational,
}

impl Q2 {
    fn new(a: Rational, b: Rational) -> Self {
        Q2 { a, b }
    }

    fn zero() -> Self {
        Q2::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, o: &Q2) -> Q2 {
        Q2::new(&self.a + &o.a, &self.b + &o.b)
    }

    fn sub(&self, o: &Q2) -> Q2 {
        Q2::new(&self.a - &o.a, &self.b - &o.b)
    }

    fn mul(&self, o: &Q2) -> Q2 {
        Q2::new(
            &self.a * &o.a + Rational::from(BigInt::from(2)) * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }

    fn scale(&self, k: &Rational) -> Q2 {
        Q2::new(&self.a * k, &self.b * k)
    }

    /// `(a + b√2)^-1 = (a - b√2) / (a^2 - 2 b^2)`; the norm vanishes only at zero.
    fn inv(&self) -> Option<Q2> {
        let norm = &self.a * &self.a - Rational::from(BigInt::from(2)) * &self.b * &self.b;
        if norm.is_zero() {
            return None;
        }
        Some(Q2::new(&self.a / &norm, -(&self.b / &norm)))
    }

    /// Exact sign. For mixed-sign coordinates, `a + b√2 > 0  ⇔  sign(a)·(a² - 2b²) > 0`.
    fn sign(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let norm = &self.a * &self.a - Rational::from(BigInt::from(2)) * &self.b * &self.b;
        sa * rat_sign(&norm)
    }

    /// Principal square root within ℚ(√2), if one exists.
    fn sqrt(&self) -> Option<Q2> {
        if self.is_zero() {
            return Some(Q2::zero());
        }
        if self.sign() < 0 {
            return None;
        }
        let two = Rational::from(BigInt::from(2));
        if self.b.is_zero() {
            if let Some(x) = rat_sqrt(&self.a) {
                return Some(Q2::new(x, Rational::zero()));
            }
            if let Some(y) = rat_sqrt(&(&self.a / &two)) {
                return Some(Q2::new(Rational::zero(), y));
            }
            return None;
        }
        // (x + y√2)² = a + b√2 makes x² and 2y² the roots of z² - a z + b²/2.
        let disc = &self.a * &self.a - &two * &self.b * &self.b;
        let t = rat_sqrt(&disc)?;
        for root in [(&self.a + &t) / &two, (&self.a - &t) / &two] {
            if let Some(x) = rat_sqrt(&root) {
                if x.is_zero() {
                    continue;
                }
                let y = &self.b / (&two * &x);
                let cand = Q2::new(x, y);
                if cand.mul(&cand) == *self {
                    return Some(if cand.sign() >= 0 {
                        cand
                    } else {
                        Q2::new(-cand.a, -cand.b)
                    });
                }
            }
        }
        None
    }

}

/// Exact scalar `p + q√2 + r√3 + s√6` with rational coordinates.
///
/// The four radicals are linearly independent over ℚ, so the representation is unique and
/// structural equality is value equality. Closed under `+ - ×` and division by nonzero
/// elements; [`FieldElement::sqrt`] extracts roots that stay inside the field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    p: Rational,
    q: Rational,
    r: Rational,
    s: Rational,
}

impl FieldElement {
    pub fn new(p: Rational, q: Rational, r: Rational, s: Rational) -> Self {
        FieldElement { p, q, r, s }
    }

    pub fn zero() -> Self {
        FieldElement::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn one() -> Self {
        FieldElement::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut x = FieldElement::zero();
        x.p = Rational::from(BigInt::from(n));
        x
    }

    /// `n/d`, panicking on a zero denominator (intended for literals).
    pub fn from_ratio(n: i64, d: i64) -> Self {
        let mut x = FieldElement::zero();
        x.p = rat_i64(n, d);
        x
    }

    pub fn from_rational(p: Rational) -> Self {
        let mut x = FieldElement::zero();
        x.p = p;
        x
    }

    /// Coordinates `(p, q, r, s)` on the basis `{1, √2, √3, √6}`.
    pub fn coords(&self) -> [&Rational; 4] {
        [&self.p, &self.q, &self.r, &self.s]
    }

    pub fn sqrt2() -> Self {
        let mut x = FieldElement::zero();
        x.q = Rational::one();
        x
    }

    pub fn sqrt3() -> Self {
        let mut x = FieldElement::zero();
        x.r = Rational::one();
        x
    }

    pub fn sqrt6() -> Self {
        let mut x = FieldElement::zero();
        x.s = Rational::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero() && self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero() && self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.p.is_integer()
    }

    /// View as `u + v√3` with `u, v ∈ ℚ(√2)` (since √6 = √2·√3).
    fn split(&self) -> (Q2, Q2) {
        (
            Q2::new(self.p.clone(), self.q.clone()),
            Q2::new(self.r.clone(), self.s.clone()),
        )
    }

    fn join(u: Q2, v: Q2) -> Self {
        FieldElement::new(u.a, u.b, v.a, v.b)
    }

    /// Exact sign of the real value: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        let (u, v) = self.split();
        let su = u.sign();
        let sv = v.sign();
        if sv == 0 {
            return su;
        }
        if su == 0 {
            return sv;
        }
        if su == sv {
            return su;
        }
        // u and v√3 compete: u + v√3 > 0 ⇔ sign(u)·(u² - 3v²) > 0.
        let three = Rational::from(BigInt::from(3));
        let norm = u.mul(&u).sub(&v.mul(&v).scale(&three));
        su * norm.sign()
    }

    /// Exact multiplicative inverse via the tower ℚ ⊂ ℚ(√2) ⊂ ℚ(√2,√3).
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (u, v) = self.split();
        let three = Rational::from(BigInt::from(3));
        // (u + v√3)^-1 = (u - v√3) / (u² - 3v²); the denominator is in ℚ(√2) and nonzero
        // because √3 ∉ ℚ(√2).
        let norm = u.mul(&u).sub(&v.mul(&v).scale(&three));
        let ninv = norm.inv().expect("norm of a nonzero element is nonzero");
        let iu = u.mul(&ninv);
        let iv = v.mul(&ninv);
        Ok(FieldElement::join(iu, Q2::new(-iv.a, -iv.b)))
    }

    /// Principal square root within the field, or `None` if the value is negative or the
    /// root leaves ℚ(√2,√3).
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(FieldElement::zero());
        }
        if self.sign() < 0 {
            return None;
        }
        let (u, v) = self.split();
        let two = Rational::from(BigInt::from(2));
        let three = Rational::from(BigInt::from(3));
        if v.is_zero() {
            // Root is either in ℚ(√2) or of the form w√3 with w ∈ ℚ(√2).
            if let Some(w) = u.sqrt() {
                return Some(FieldElement::join(w, Q2::zero()));
            }
            if let Some(w) = u.scale(&(Rational::one() / &three)).sqrt() {
                return Some(FieldElement::join(Q2::zero(), w));
            }
            return None;
        }
        // (x + y√3)² = u + v√3 makes x² and 3y² the roots of z² - u z + (3/4)v².
        let disc = u.mul(&u).sub(&v.mul(&v).scale(&three));
        let t = disc.sqrt()?;
        for root in [u.add(&t), u.sub(&t)] {
            let half = root.scale(&(Rational::one() / &two));
            if let Some(x) = half.sqrt() {
                if x.is_zero() {
                    continue;
                }
                let y = v.mul(&x.scale(&two).inv().expect("nonzero"));
                let cand = FieldElement::join(x, y);
                if &cand * &cand == *self {
                    return Some(if cand.sign() >= 0 { cand } else { -cand });
                }
            }
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        self.p.to_f64().unwrap_or(f64::NAN)
            + core::f64::consts::SQRT_2 * self.q.to_f64().unwrap_or(f64::NAN)
            + 1.732_050_807_568_877_2 * self.r.to_f64().unwrap_or(f64::NAN)
            + 2.449_489_742_783_178 * self.s.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        FieldElement::zero()
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other.clone()).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(
            &self.p + &rhs.p,
            &self.q + &rhs.q,
            &self.r + &rhs.r,
            &self.s + &rhs.s,
        )
    }
}
forward_binop!(Add, add);

impl Sub<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::new(
            &self.p - &rhs.p,
            &self.q - &rhs.q,
            &self.r - &rhs.r,
            &self.s - &rhs.s,
        )
    }
}
forward_binop!(Sub, sub);

impl Mul<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        // Rational-only operands dominate in practice; short-circuit them.
        if self.is_rational() {
            if self.p.is_zero() {
                return FieldElement::zero();
            }
            return FieldElement::new(
                &self.p * &rhs.p,
                &self.p * &rhs.q,
                &self.p * &rhs.r,
                &self.p * &rhs.s,
            );
        }
        if rhs.is_rational() {
            if rhs.p.is_zero() {
                return FieldElement::zero();
            }
            return FieldElement::new(
                &self.p * &rhs.p,
                &self.q * &rhs.p,
                &self.r * &rhs.p,
                &self.s * &rhs.p,
            );
        }
        // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2, √2² = 2, √3² = 3, √6² = 6.
        let two = Rational::from(BigInt::from(2));
        let three = Rational::from(BigInt::from(3));
        let six = Rational::from(BigInt::from(6));
        let (p1, q1, r1, s1) = (&self.p, &self.q, &self.r, &self.s);
        let (p2, q2, r2, s2) = (&rhs.p, &rhs.q, &rhs.r, &rhs.s);
        FieldElement::new(
            p1 * p2 + &two * q1 * q2 + &three * r1 * r2 + &six * s1 * s2,
            p1 * q2 + q1 * p2 + &three * (r1 * s2 + s1 * r2),
            p1 * r2 + r1 * p2 + &two * (q1 * s2 + s1 * q2),
            p1 * s2 + s1 * p2 + q1 * r2 + r1 * q2,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * rhs.inv().expect("division by zero FieldElement")
    }
}
forward_binop!(Div, div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(-self.p, -self.q, -self.r, -self.s)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.clone().neg()
    }
}

// ---------------------------------------------------------------------------
// Text form: `p + q*sqrt2 + r*sqrt3 + s*sqrt6`, coefficients as rational
// literals, zero terms omitted. This grammar is used in all JSON payloads.
// ---------------------------------------------------------------------------

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: [(&Rational, Option<&str>); 4] = [
            (&self.p, None),
            (&self.q, Some("sqrt2")),
            (&self.r, Some("sqrt3")),
            (&self.s, Some("sqrt6")),
        ];
        let mut first = true;
        for (coef, radical) in terms {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            if first {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match radical {
                None => write!(f, "{}", mag)?,
                Some(rad) => write!(f, "{}*{}", mag, rad)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Error produced when parsing the FieldElement text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFieldElementError {
    input: String,
    reason: &'static str,
}

impl fmt::Display for ParseFieldElementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid field element `{}`: {}", self.input, self.reason)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseFieldElementError {}

fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n = BigInt::from_str(text).ok()?;
            Some(Rational::from(n))
        }
    }
}

impl FromStr for FieldElement {
    type Err = ParseFieldElementError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseFieldElementError {
            input: String::from(input),
            reason,
        };
        let text = input.trim();
        if text.is_empty() {
            return Err(err("empty string"));
        }
        // Split into signed terms at top-level '+'/'-' (a '-' right after '/' or at the start
        // binds to the term).
        let mut terms: Vec<(i8, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign: i8 = 1;
        let mut expecting_term = true;
        for ch in text.chars() {
            match ch {
                '+' | '-' if !expecting_term => {
                    terms.push((sign, core::mem::take(&mut cur)));
                    sign = if ch == '-' { -1 } else { 1 };
                    expecting_term = true;
                }
                '-' if expecting_term && cur.trim().is_empty() => {
                    sign = -sign;
                }
                '+' if expecting_term && cur.trim().is_empty() => {}
                c if c.is_whitespace() => {
                    if !cur.trim().is_empty() {
                        expecting_term = false;
                    }
                    cur.push(c);
                }
                c => {
                    cur.push(c);
                    expecting_term = false;
                }
            }
        }
        terms.push((sign, cur));

        let mut out = FieldElement::zero();
        for (sgn, term) in terms {
            let term = term.trim();
            if term.is_empty() {
                return Err(err("dangling sign or empty term"));
            }
            let (coef_text, radical) = if let Some(idx) = term.find("sqrt") {
                let (head, tail) = term.split_at(idx);
                let head = head.trim().trim_end_matches('*').trim();
                (if head.is_empty() { "1" } else { head }, tail.trim())
            } else {
                (term, "")
            };
            let coef = parse_rational(coef_text).ok_or_else(|| err("bad rational literal"))?;
            let coef = if sgn < 0 { -coef } else { coef };
            let slot = match radical {
                "" => &mut out.p,
                "sqrt2" => &mut out.q,
                "sqrt3" => &mut out.r,
                "sqrt6" => &mut out.s,
                _ => return Err(err("unknown radical (expected sqrt2, sqrt3 or sqrt6)")),
            };
            *slot = &*slot + &coef;
        }
        Ok(out)
    }
}
