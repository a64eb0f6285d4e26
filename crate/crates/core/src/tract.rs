//! Tracts: pointed multiplicative monoids whose unit group is everything but zero, together
//! with a nullset deciding which formal sums of units "vanish".
//!
//! All payloads are exact. Tropical and triangle values are nonnegative rationals in the
//! multiplicative (Berkovich) model, phase values are angles in units of pi reduced to `[0, 2)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The built-in tracts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tract {
    /// The Krasner hyperfield `{0, 1}`; nullset is every sum except a single unit.
    Krasner,
    /// The sign hyperfield `{0, 1, -1}`.
    Sign,
    /// The regular partial field `{0, 1, -1}`; a sum is null iff it has as many `1`s as `-1`s.
    RegularPartial,
    /// The prime field with the given modulus.
    FiniteField(u32),
    Rationals,
    /// Tropical hyperfield: a sum is null iff its maximum is attained at least twice.
    Tropical,
    /// Phase hyperfield `S^1 ∪ {0}`.
    Phase,
    /// Triangle hyperfield: nonnegative reals with the polygon inequality.
    Triangle,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Tract {
    pub const MAX_MODULUS: u32 = 97;

    pub fn finite_field(p: u32) -> Result<Tract> {
        if p <= Self::MAX_MODULUS && is_prime(p) {
            Ok(Tract::FiniteField(p))
        } else {
            Err(Error::BadModulus(p))
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Tract::Krasner => "krasner",
            Tract::Sign => "sign",
            Tract::RegularPartial => "regular_partial",
            Tract::FiniteField(_) => "finite_field",
            Tract::Rationals => "rationals",
            Tract::Tropical => "tropical",
            Tract::Phase => "phase",
            Tract::Triangle => "triangle",
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(
            self,
            Tract::Krasner | Tract::Sign | Tract::RegularPartial | Tract::FiniteField(_)
        )
    }

    /// Vectors and covectors of every matroid over a perfect tract are orthogonal.
    pub fn is_perfect(&self) -> bool {
        !matches!(self, Tract::Phase | Tract::Triangle)
    }

    pub fn zero(self) -> Element {
        Element { tract: self, value: Value::Zero }
    }

    pub fn one(self) -> Element {
        let value = match self {
            Tract::Krasner => Value::Unit,
            Tract::Sign | Tract::RegularPartial => Value::Signed(1),
            Tract::FiniteField(_) => Value::Residue(1),
            Tract::Rationals | Tract::Tropical | Tract::Triangle => {
                Value::Rational(BigRational::one())
            }
            Tract::Phase => Value::Angle(BigRational::zero()),
        };
        Element { tract: self, value }
    }

    /// The unique unit `ε` with `1 + ε` null.
    pub fn epsilon(self) -> Element {
        let value = match self {
            Tract::Sign | Tract::RegularPartial => Value::Signed(-1),
            Tract::FiniteField(p) => Value::Residue(p - 1),
            Tract::Rationals => Value::Rational(-BigRational::one()),
            Tract::Phase => Value::Angle(BigRational::one()),
            Tract::Krasner | Tract::Tropical | Tract::Triangle => return self.one(),
        };
        Element { tract: self, value }
    }

    /// All units in a fixed order, starting with `1`.
    pub fn units(self) -> Result<Vec<Element>> {
        let values = match self {
            Tract::Krasner => vec![Value::Unit],
            Tract::Sign | Tract::RegularPartial => vec![Value::Signed(1), Value::Signed(-1)],
            Tract::FiniteField(p) => (1..p).map(Value::Residue).collect(),
            _ => return Err(Error::InfiniteTract(self)),
        };
        Ok(values
            .into_iter()
            .map(|value| Element { tract: self, value })
            .collect())
    }

    /// The involution used for duality and inner products (identity on every built-in).
    pub fn involution(self, a: &Element) -> Element {
        a.clone()
    }

    pub fn nullset_contains(self, sum: &FormalSum) -> bool {
        sum.is_null()
    }
}

impl fmt::Display for Tract {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tract::FiniteField(p) => write!(f, "finite_field({p})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Payload of a tract element. Nonzero payloads are always units.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Zero,
    /// The Krasner unit.
    Unit,
    /// `±1` in the sign hyperfield or the regular partial field.
    Signed(i8),
    /// Nonzero residue modulo the field characteristic.
    Residue(u32),
    /// Nonzero rational; positive for tropical and triangle elements.
    Rational(BigRational),
    /// Phase direction `e^{iπθ}` with `θ ∈ [0, 2)`.
    Angle(BigRational),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    tract: Tract,
    value: Value,
}

fn reduce_angle(theta: BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let q = (&theta / &two).floor();
    theta - q * two
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Element {
    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn krasner(bit: bool) -> Element {
        let value = if bit { Value::Unit } else { Value::Zero };
        Element { tract: Tract::Krasner, value }
    }

    /// Sign or regular-partial element from `-1`, `0` or `1`.
    pub fn signed(tract: Tract, s: i8) -> Result<Element> {
        if !matches!(tract, Tract::Sign | Tract::RegularPartial) {
            return Err(Error::Invalid(format!("{tract} has no signed elements")));
        }
        let value = match s {
            0 => Value::Zero,
            1 | -1 => Value::Signed(s),
            _ => return Err(Error::Invalid(format!("{s} is not a sign"))),
        };
        Ok(Element { tract, value })
    }

    pub fn sign(s: i8) -> Element {
        Element::signed(Tract::Sign, s).expect("sign must be -1, 0 or 1")
    }

    pub fn residue(p: u32, r: u32) -> Result<Element> {
        let tract = Tract::finite_field(p)?;
        if r >= p {
            return Err(Error::Invalid(format!("residue {r} out of range for p = {p}")));
        }
        let value = if r == 0 { Value::Zero } else { Value::Residue(r) };
        Ok(Element { tract, value })
    }

    pub fn rational(q: BigRational) -> Element {
        let value = if q.is_zero() { Value::Zero } else { Value::Rational(q) };
        Element { tract: Tract::Rationals, value }
    }

    /// Tropical (or triangle) element; the payload must be nonnegative.
    pub fn nonnegative(tract: Tract, q: BigRational) -> Result<Element> {
        if !matches!(tract, Tract::Tropical | Tract::Triangle) {
            return Err(Error::Invalid(format!("{tract} has no nonnegative payloads")));
        }
        if q.is_negative() {
            return Err(Error::Invalid(format!("{tract} element {q} is negative")));
        }
        let value = if q.is_zero() { Value::Zero } else { Value::Rational(q) };
        Ok(Element { tract, value })
    }

    /// The phase `e^{iπθ}`; `θ` is reduced modulo 2.
    pub fn phase(theta: BigRational) -> Element {
        Element { tract: Tract::Phase, value: Value::Angle(reduce_angle(theta)) }
    }

    /// Shorthand for `e^{iπ·num/den}`.
    pub fn phase_frac(num: i64, den: i64) -> Element {
        Element::phase(BigRational::new(num.into(), den.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.value == Value::Zero
    }

    pub fn is_one(&self) -> bool {
        *self == self.tract.one()
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.tract == other.tract {
            Ok(())
        } else {
            Err(Error::TractMismatch { expected: self.tract, found: other.tract })
        }
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        Ok(self.times(other))
    }

    /// Product without the tract check. Both factors must live in the same tract.
    pub(crate) fn times(&self, other: &Element) -> Element {
        debug_assert_eq!(self.tract, other.tract);
        let value = match (&self.value, &other.value) {
            (Value::Zero, _) | (_, Value::Zero) => Value::Zero,
            (Value::Unit, Value::Unit) => Value::Unit,
            (Value::Signed(a), Value::Signed(b)) => Value::Signed(a * b),
            (Value::Residue(a), Value::Residue(b)) => {
                let Tract::FiniteField(p) = self.tract else { unreachable!() };
                Value::Residue(((*a as u64 * *b as u64) % p as u64) as u32)
            }
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a * b),
            (Value::Angle(a), Value::Angle(b)) => Value::Angle(reduce_angle(a + b)),
            _ => unreachable!("payload does not match tract"),
        };
        Element { tract: self.tract, value }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Element> {
        let value = match &self.value {
            Value::Zero => return None,
            Value::Unit => Value::Unit,
            Value::Signed(a) => Value::Signed(*a),
            Value::Residue(a) => {
                let Tract::FiniteField(p) = self.tract else { unreachable!() };
                Value::Residue(pow_mod(*a as u64, p as u64 - 2, p as u64) as u32)
            }
            Value::Rational(a) => Value::Rational(a.recip()),
            Value::Angle(a) => Value::Angle(reduce_angle(-a.clone())),
        };
        Some(Element { tract: self.tract, value })
    }

    /// `ε^k · self` for `k` given by its parity.
    pub(crate) fn times_eps(&self, odd: bool) -> Element {
        if odd {
            self.times(&self.tract.epsilon())
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Zero => f.write_str("0"),
            Value::Unit => f.write_str("1"),
            Value::Signed(s) => write!(f, "{s}"),
            Value::Residue(r) => write!(f, "{r}"),
            Value::Rational(q) => write!(f, "{q}"),
            Value::Angle(a) => write!(f, "e^(iπ·{a})"),
        }
    }
}

/// An element of `N[F^×]`: a finite multiset of units.
#[derive(Clone, Debug)]
pub struct FormalSum {
    tract: Tract,
    terms: Vec<Element>,
}

impl PartialEq for FormalSum {
    fn eq(&self, other: &Self) -> bool {
        if self.tract != other.tract || self.terms.len() != other.terms.len() {
            return false;
        }
        let mut a = self.terms.clone();
        let mut b = other.terms.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for FormalSum {}

impl FormalSum {
    pub fn new(tract: Tract) -> Self {
        FormalSum { tract, terms: Vec::new() }
    }

    pub fn from_terms<I: IntoIterator<Item = Element>>(tract: Tract, terms: I) -> Result<Self> {
        let mut sum = FormalSum::new(tract);
        for t in terms {
            sum.push(t)?;
        }
        Ok(sum)
    }

    pub fn tract(&self) -> Tract {
        self.tract
    }

    pub fn terms(&self) -> &[Element] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds a term; zeros are dropped.
    pub fn push(&mut self, e: Element) -> Result<()> {
        if e.tract != self.tract {
            return Err(Error::TractMismatch { expected: self.tract, found: e.tract });
        }
        self.push_unchecked(e);
        Ok(())
    }

    pub(crate) fn push_unchecked(&mut self, e: Element) {
        if !e.is_zero() {
            self.terms.push(e);
        }
    }

    /// The sum with every term multiplied by `a`.
    pub fn scaled(&self, a: &Element) -> Result<FormalSum> {
        if a.tract != self.tract {
            return Err(Error::TractMismatch { expected: self.tract, found: a.tract });
        }
        let mut out = FormalSum::new(self.tract);
        for t in &self.terms {
            out.push_unchecked(t.times(a));
        }
        Ok(out)
    }

    /// Decides membership in the nullset of the tract.
    pub fn is_null(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        match self.tract {
            Tract::Krasner => self.terms.len() != 1,
            Tract::Sign => {
                let pos = self.terms.iter().filter(|t| t.value == Value::Signed(1)).count();
                let neg = self.terms.len() - pos;
                pos >= 1 && neg >= 1
            }
            Tract::RegularPartial => {
                let pos = self.terms.iter().filter(|t| t.value == Value::Signed(1)).count();
                2 * pos == self.terms.len()
            }
            Tract::FiniteField(p) => {
                let total: u64 = self
                    .terms
                    .iter()
                    .map(|t| match t.value {
                        Value::Residue(r) => r as u64,
                        _ => unreachable!(),
                    })
                    .sum();
                total.is_multiple_of(p as u64)
            }
            Tract::Rationals => {
                let total: BigRational = self.rationals().sum();
                total.is_zero()
            }
            Tract::Tropical => {
                let max = self.rationals().max().expect("nonempty");
                self.rationals().filter(|q| *q == max).count() >= 2
            }
            Tract::Triangle => {
                let max = self.rationals().max().expect("nonempty");
                let total: BigRational = self.rationals().sum();
                // max ≤ sum of the others
                max.clone() + max <= total
            }
            Tract::Phase => phase_null(self.terms.iter().map(|t| match &t.value {
                Value::Angle(a) => a.clone(),
                _ => unreachable!(),
            })),
        }
    }

    fn rationals(&self) -> impl Iterator<Item = BigRational> + '_ {
        self.terms.iter().map(|t| match &t.value {
            Value::Rational(q) => q.clone(),
            _ => unreachable!(),
        })
    }
}

/// Positive real coefficients making the directions sum to zero exist iff the directions
/// are not confined to a closed half-plane, except that a lone antipodal pair is null.
fn phase_null(angles: impl Iterator<Item = BigRational>) -> bool {
    let mut dirs: Vec<BigRational> = angles.collect();
    dirs.sort();
    dirs.dedup();
    if dirs.len() < 2 {
        return false;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mut max_gap = &dirs[0] + &two - dirs.last().unwrap();
    for w in dirs.windows(2) {
        let gap = &w[1] - &w[0];
        if gap > max_gap {
            max_gap = gap;
        }
    }
    let one = BigRational::one();
    max_gap < one || (max_gap == one && dirs.len() == 2)
}

/// The kinds of built-in tract morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorphismKind {
    /// The unique morphism into the Krasner hyperfield; every unit goes to `1`.
    TerminalToK,
    /// The regular partial field maps into every tract by `-1 ↦ ε`.
    RegularToAny,
    SignToK,
    FieldToK,
    RationalsToSign,
    /// `q ↦ |q|_p` for a prime `p`; `None` is the trivial absolute value.
    RationalsToTropical(Option<u32>),
    /// Identity of a prime field.
    FfInclusion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TractMorphism {
    source: Tract,
    target: Tract,
    kind: MorphismKind,
}

impl TractMorphism {
    pub fn new(kind: MorphismKind, source: Tract, target: Tract) -> Result<Self> {
        let ok = match kind {
            MorphismKind::TerminalToK => target == Tract::Krasner,
            MorphismKind::RegularToAny => source == Tract::RegularPartial,
            MorphismKind::SignToK => source == Tract::Sign && target == Tract::Krasner,
            MorphismKind::FieldToK => {
                matches!(source, Tract::FiniteField(_) | Tract::Rationals)
                    && target == Tract::Krasner
            }
            MorphismKind::RationalsToSign => source == Tract::Rationals && target == Tract::Sign,
            MorphismKind::RationalsToTropical(p) => {
                source == Tract::Rationals
                    && target == Tract::Tropical
                    && p.is_none_or(|p| p <= Tract::MAX_MODULUS && is_prime(p))
            }
            MorphismKind::FfInclusion => {
                matches!(source, Tract::FiniteField(_)) && source == target
            }
        };
        if ok {
            Ok(TractMorphism { source, target, kind })
        } else {
            Err(Error::Invalid(format!("no {kind:?} morphism from {source} to {target}")))
        }
    }

    pub fn terminal(source: Tract) -> Self {
        TractMorphism { source, target: Tract::Krasner, kind: MorphismKind::TerminalToK }
    }

    pub fn regular_to(target: Tract) -> Self {
        TractMorphism { source: Tract::RegularPartial, target, kind: MorphismKind::RegularToAny }
    }

    pub fn source(&self) -> Tract {
        self.source
    }

    pub fn target(&self) -> Tract {
        self.target
    }

    pub fn kind(&self) -> MorphismKind {
        self.kind
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        if a.tract != self.source {
            return Err(Error::TractMismatch { expected: self.source, found: a.tract });
        }
        Ok(self.apply_unchecked(a))
    }

    pub(crate) fn apply_unchecked(&self, a: &Element) -> Element {
        if a.is_zero() {
            return self.target.zero();
        }
        match self.kind {
            MorphismKind::TerminalToK | MorphismKind::SignToK | MorphismKind::FieldToK => {
                Tract::Krasner.one()
            }
            MorphismKind::RegularToAny => match a.value {
                Value::Signed(1) => self.target.one(),
                _ => self.target.epsilon(),
            },
            MorphismKind::RationalsToSign => match &a.value {
                Value::Rational(q) if q.is_positive() => Element::sign(1),
                _ => Element::sign(-1),
            },
            MorphismKind::RationalsToTropical(None) => Tract::Tropical.one(),
            MorphismKind::RationalsToTropical(Some(p)) => {
                let Value::Rational(q) = &a.value else { unreachable!() };
                let v = valuation(q.numer(), p) - valuation(q.denom(), p);
                let p = BigInt::from(p);
                let abs = if v >= 0 {
                    BigRational::new(BigInt::one(), num_traits::pow(p, v as usize))
                } else {
                    BigRational::from_integer(num_traits::pow(p, (-v) as usize))
                };
                Element { tract: Tract::Tropical, value: Value::Rational(abs) }
            }
            MorphismKind::FfInclusion => a.clone(),
        }
    }

    pub fn apply_sum(&self, s: &FormalSum) -> Result<FormalSum> {
        if s.tract != self.source {
            return Err(Error::TractMismatch { expected: self.source, found: s.tract });
        }
        let mut out = FormalSum::new(self.target);
        for t in &s.terms {
            out.push_unchecked(self.apply_unchecked(t));
        }
        Ok(out)
    }
}

fn valuation(n: &BigInt, p: u32) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while !n.is_zero() {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        n = q;
        v += 1;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sum(t: Tract, terms: Vec<Element>) -> FormalSum {
        FormalSum::from_terms(t, terms).unwrap()
    }

    #[test]
    fn multiplication() {
        assert_eq!(Element::sign(-1).mul(&Element::sign(-1)).unwrap(), Element::sign(1));
        let a = Element::nonnegative(Tract::Tropical, q(2, 3)).unwrap();
        let b = Element::nonnegative(Tract::Tropical, q(3, 1)).unwrap();
        assert_eq!(a.mul(&b).unwrap(), Element::nonnegative(Tract::Tropical, q(2, 1)).unwrap());
        let p = Element::phase_frac(1, 2).mul(&Element::phase_frac(3, 2)).unwrap();
        assert!(p.is_one());
        assert!(Element::sign(1).mul(&Element::krasner(true)).is_err());
        assert!(Element::sign(1).mul(&Tract::Sign.zero()).unwrap().is_zero());
    }

    #[test]
    fn epsilons() {
        assert_eq!(Tract::Krasner.epsilon(), Element::krasner(true));
        assert_eq!(Tract::Sign.epsilon(), Element::sign(-1));
        assert!(Tract::Tropical.epsilon().is_one());
        assert_eq!(Tract::FiniteField(5).epsilon(), Element::residue(5, 4).unwrap());
        assert!(Tract::FiniteField(2).epsilon().is_one());
    }

    #[test]
    fn nullset_examples() {
        let k1 = Element::krasner(true);
        assert!(sum(Tract::Krasner, vec![k1.clone(), k1.clone()]).is_null());
        assert!(!sum(Tract::Krasner, vec![k1]).is_null());

        let (p, m) = (Element::sign(1), Element::sign(-1));
        assert!(sum(Tract::Sign, vec![p.clone(), m.clone()]).is_null());
        assert!(!sum(Tract::Sign, vec![p.clone(), p.clone()]).is_null());
        assert!(sum(Tract::Sign, vec![p.clone(), p.clone(), m]).is_null());

        let rp = Element::signed(Tract::RegularPartial, 1).unwrap();
        let rm = Element::signed(Tract::RegularPartial, -1).unwrap();
        assert!(sum(Tract::RegularPartial, vec![rp.clone(), rm.clone()]).is_null());
        assert!(!sum(Tract::RegularPartial, vec![rp.clone(), rp, rm]).is_null());

        let cube = vec![
            Element::phase_frac(0, 1),
            Element::phase_frac(2, 3),
            Element::phase_frac(4, 3),
        ];
        assert!(sum(Tract::Phase, cube).is_null());
        assert!(!sum(Tract::Phase, vec![Element::phase_frac(0, 1), Element::phase_frac(1, 2)])
            .is_null());
        // Antipodal pair is null, antipodal pair plus a third direction is not.
        assert!(sum(Tract::Phase, vec![Element::phase_frac(1, 4), Element::phase_frac(5, 4)])
            .is_null());
        assert!(!sum(
            Tract::Phase,
            vec![Element::phase_frac(0, 1), Element::phase_frac(1, 2), Element::phase_frac(1, 1)]
        )
        .is_null());

        let t = |n, d| Element::nonnegative(Tract::Tropical, q(n, d)).unwrap();
        assert!(sum(Tract::Tropical, vec![t(2, 1), t(2, 1), t(1, 1)]).is_null());
        assert!(!sum(Tract::Tropical, vec![t(3, 1), t(1, 1)]).is_null());

        let v = |n| Element::nonnegative(Tract::Triangle, q(n, 1)).unwrap();
        assert!(sum(Tract::Triangle, vec![v(3), v(4), v(5)]).is_null());
        assert!(sum(Tract::Triangle, vec![v(2), v(1), v(1)]).is_null());
        assert!(!sum(Tract::Triangle, vec![v(3), v(1), v(1)]).is_null());

        assert!(FormalSum::new(Tract::Phase).is_null());
        let f = |r| Element::residue(7, r).unwrap();
        assert!(sum(Tract::FiniteField(7), vec![f(3), f(4)]).is_null());
        assert!(!sum(Tract::FiniteField(7), vec![f(3), f(3)]).is_null());
    }

    #[test]
    fn zeros_are_dropped_and_order_is_ignored() {
        let s1 = sum(Tract::Sign, vec![Element::sign(1), Tract::Sign.zero(), Element::sign(-1)]);
        let s2 = sum(Tract::Sign, vec![Element::sign(-1), Element::sign(1)]);
        assert_eq!(s1.len(), 2);
        assert_eq!(s1, s2);
    }

    #[test]
    fn morphisms() {
        let t = TractMorphism::terminal(Tract::Sign);
        assert_eq!(t.apply(&Element::sign(-1)).unwrap(), Element::krasner(true));
        let r = TractMorphism::regular_to(Tract::Sign);
        let m1 = Element::signed(Tract::RegularPartial, -1).unwrap();
        assert_eq!(r.apply(&m1).unwrap(), Element::sign(-1));
        let padic = TractMorphism::new(
            MorphismKind::RationalsToTropical(Some(2)),
            Tract::Rationals,
            Tract::Tropical,
        )
        .unwrap();
        let img = padic.apply(&Element::rational(q(12, 1))).unwrap();
        assert_eq!(img, Element::nonnegative(Tract::Tropical, q(1, 4)).unwrap());
        let img = padic.apply(&Element::rational(q(-3, 8))).unwrap();
        assert_eq!(img, Element::nonnegative(Tract::Tropical, q(8, 1)).unwrap());
        assert!(r.apply(&Element::sign(1)).is_err());
        assert!(TractMorphism::new(MorphismKind::RationalsToSign, Tract::Sign, Tract::Sign).is_err());
    }

    #[test]
    fn units_and_involution() {
        assert_eq!(Tract::Krasner.units().unwrap(), vec![Element::krasner(true)]);
        assert_eq!(Tract::Sign.units().unwrap(), vec![Element::sign(1), Element::sign(-1)]);
        let f3 = Tract::FiniteField(3).units().unwrap();
        assert_eq!(f3, vec![Element::residue(3, 1).unwrap(), Element::residue(3, 2).unwrap()]);
        assert!(Tract::Phase.units().is_err());
        let a = Element::phase_frac(1, 2);
        assert_eq!(Tract::Phase.involution(&a), a);
        assert_eq!(Tract::Sign.involution(&Element::sign(-1)), Element::sign(-1));
    }

    #[test]
    fn moduli() {
        assert!(Tract::finite_field(97).is_ok());
        assert!(Tract::finite_field(9).is_err());
        assert!(Tract::finite_field(101).is_err());
        assert!(Tract::finite_field(1).is_err());
    }

    #[test]
    fn inverses() {
        for t in [Tract::Sign, Tract::FiniteField(7), Tract::RegularPartial] {
            for u in t.units().unwrap() {
                assert!(u.times(&u.inverse().unwrap()).is_one());
            }
        }
        let a = Element::phase_frac(3, 4);
        assert!(a.times(&a.inverse().unwrap()).is_one());
    }
}
