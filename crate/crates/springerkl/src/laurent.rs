//! Integer-coefficient Laurent polynomials in one variable `t`, the
//! quantum integers built from them, and the rational-function field
//! needed by the Gram solver.
//!
//! The quantum integer is the bar-symmetric t-analogue of `n`:
//!
//! `[n] = t^{-(n-1)} + t^{-(n-3)} + ... + t^{n-1}`
//!
//! with `[n]! = [1][2]...[n]` and the Gaussian binomial
//! `[n]!/([k]![n-k]!)`.
//! Everything here is exact: coefficients are arbitrary-precision
//! integers and division is remainder-checked.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial with integer coefficients.
///
/// Canonical form: the coefficient map never stores a zero, so two
/// values are equal iff their maps are equal. Immutable after
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(BigInt::one(), 0)
    }

    /// The monomial `c * t^e`.
    pub fn term(coeff: BigInt, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn from_int(c: i64) -> Self {
        Self::term(BigInt::from(c), 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `t -> t^{-1}`, i.e. negate all exponents.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Value at `t = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Leading coefficient (of the maximal exponent); zero for the zero
    /// polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.max_exp().map(|e| self.coeff(e)).unwrap_or_else(BigInt::zero)
    }

    /// Serialize as `{"exp": coeff, ...}` with string integer keys.
    /// Coefficients that fit in an `i64` are emitted as JSON numbers,
    /// larger ones as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.coeffs {
            let v = match i64::try_from(c.clone()) {
                Ok(small) => serde_json::Value::from(small),
                Err(_) => serde_json::Value::from(c.to_string()),
            };
            map.insert(e.to_string(), v);
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for LaurentPoly {
    /// Human-readable form with terms in increasing exponent order,
    /// e.g. `t^-2 + 1 + t^2`. The format is fixed (golden tests rely
    /// on it).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &rhs.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(BigInt::zero);
            *entry -= c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                let entry = coeffs.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// The quantum integer `[n] = t^{-(n-1)} + t^{-(n-3)} + ... + t^{n-1}`.
///
/// Bar-invariant with `n` terms, all coefficients one. `n <= 0` is a
/// domain error.
pub fn q_int(n: i64) -> Result<LaurentPoly> {
    if n <= 0 {
        return Err(Error::Domain(format!("q_int requires n >= 1, got {n}")));
    }
    Ok(LaurentPoly::from_terms(
        (0..n).map(|j| (-(n - 1) + 2 * j, BigInt::one())),
    ))
}

/// The quantum factorial `[n]! = [1][2]...[n]`; the empty product is 1.
pub fn q_factorial(n: u64) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for m in 1..=n as i64 {
        acc = &acc * &q_int(m).expect("m >= 1");
    }
    acc
}

/// The Gaussian binomial `[n]! / ([k]! [n-k]!)`.
///
/// Requires `0 <= k <= n`; the division is checked to be exact and a
/// failure is an internal invariant violation.
pub fn q_binomial(n: u64, k: u64) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::Domain(format!("q_binomial requires k <= n, got ({n}, {k})")));
    }
    let num = q_factorial(n);
    let den = &q_factorial(k) * &q_factorial(n - k);
    exact_div(&num, &den).map_err(|_| {
        Error::Domain(format!("internal: q_binomial({n},{k}) division was not exact"))
    })
}

/// Exact division in the Laurent ring: returns `q` with `q * den = num`,
/// or `NotDivisible` when no such integer Laurent polynomial exists.
pub fn exact_div(num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    if den.is_zero() {
        return Err(Error::Domain("exact_div by zero".into()));
    }
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    // t^k is a unit, so shift both operands to ordinary polynomials and
    // restore the exponent offset afterwards.
    let num_shift = num.min_exp().unwrap();
    let den_shift = den.min_exp().unwrap();
    let mut rem = num.shifted(-num_shift);
    let d = den.shifted(-den_shift);
    let d_deg = d.max_exp().unwrap();
    let d_lead = d.coeff(d_deg);
    let mut quot = LaurentPoly::zero();
    while !rem.is_zero() {
        let r_deg = rem.max_exp().unwrap();
        if r_deg < d_deg {
            return Err(Error::NotDivisible(format!("{num} by {den}")));
        }
        let (q, r) = rem.coeff(r_deg).div_rem(&d_lead);
        if !r.is_zero() {
            return Err(Error::NotDivisible(format!("{num} by {den}")));
        }
        let mono = LaurentPoly::term(q, r_deg - d_deg);
        rem = &rem - &(&mono * &d);
        quot = &quot + &mono;
    }
    Ok(quot.shifted(num_shift - den_shift))
}

/// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
fn content(p: &LaurentPoly) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        g = g.gcd(c);
    }
    g
}

fn divide_by_content(p: &LaurentPoly, g: &BigInt) -> LaurentPoly {
    if g.is_one() {
        return p.clone();
    }
    LaurentPoly::from_terms(p.terms().map(|(e, c)| (e, c / g)))
}

fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    let g = content(p);
    if g.is_zero() {
        return LaurentPoly::zero();
    }
    divide_by_content(p, &g)
}

/// Pseudo-remainder of ordinary polynomials: `lead(b)^(da-db+1) * a mod b`.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().unwrap();
    let b_lead = b.coeff(db);
    let mut rem = a.clone();
    loop {
        let da = match rem.max_exp() {
            Some(d) if d >= db => d,
            _ => return rem,
        };
        let scaled = LaurentPoly::from_terms(rem.terms().map(|(e, c)| (e, c * &b_lead)));
        let mono = LaurentPoly::term(rem.coeff(da), da - db);
        rem = &scaled - &(&mono * b);
    }
}

/// Gcd over the integers of two polynomials, computed by shifting both
/// to ordinary polynomials and running the primitive PRS; this avoids
/// any rational arithmetic. The result carries positive leading
/// coefficient, minimal exponent zero, and the full integer content.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_gcd(b);
    }
    if b.is_zero() {
        return normalize_gcd(a);
    }
    let cont = content(a).gcd(&content(b));
    let mut p = primitive_part(&a.shifted(-a.min_exp().unwrap()));
    let mut q = primitive_part(&b.shifted(-b.min_exp().unwrap()));
    while !q.is_zero() {
        let r = pseudo_rem(&p, &q);
        p = q;
        q = primitive_part(&r.shifted(-r.min_exp().unwrap_or(0)));
    }
    let mut g = LaurentPoly::from_terms(p.terms().map(|(e, c)| (e, c * &cont)));
    if g.leading_coeff().is_negative() {
        g = -&g;
    }
    g
}

fn normalize_gcd(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let mut g = p.shifted(-p.min_exp().unwrap());
    if g.leading_coeff().is_negative() {
        g = -&g;
    }
    g
}

/// A reduced quotient of Laurent polynomials.
///
/// Canonical form: the denominator is an ordinary polynomial with
/// nonzero constant term and positive leading coefficient, sharing no
/// polynomial factor or integer content with the numerator (a unit
/// power of `t` keeps the numerator Laurent instead). Equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: LaurentPoly::one(),
            };
        }
        let num_shift = num.min_exp().unwrap();
        let den_shift = den.min_exp().unwrap();
        let n0 = num.shifted(-num_shift);
        let d0 = den.shifted(-den_shift);
        let g = poly_gcd(&n0, &d0);
        let mut n = exact_div(&n0, &g).expect("gcd divides");
        let mut d = exact_div(&d0, &g).expect("gcd divides");
        if d.leading_coeff().is_negative() {
            n = -&n;
            d = -&d;
        }
        RationalFunction {
            num: n.shifted(num_shift - den_shift),
            den: d,
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// The value as a Laurent polynomial, when the reduced denominator
    /// is 1.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::reduce(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero rational function".into()));
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self::reduce(&self.num * p, self.den.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> LaurentPoly {
        q_int(n).unwrap()
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(qi(1), LaurentPoly::one());
        assert_eq!(qi(2), LaurentPoly::from_terms(vec![(-1, 1.into()), (1, 1.into())]));
        assert_eq!(
            qi(3),
            LaurentPoly::from_terms(vec![(-2, 1.into()), (0, 1.into()), (2, 1.into())])
        );
        assert!(q_int(0).is_err());
        assert!(q_int(-3).is_err());
    }

    #[test]
    fn q_int_is_bar_invariant_and_counts() {
        for n in 1..=12 {
            let p = qi(n);
            assert!(p.is_bar_invariant());
            assert_eq!(p.eval_at_one(), BigInt::from(n));
            assert_eq!(p.terms().count(), n as usize);
        }
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), LaurentPoly::one());
        assert_eq!(q_factorial(2), qi(2));
        // [3]! = [2][3] = t^-3 + 2t^-1 + 2t + t^3, expanded by hand.
        let expected = LaurentPoly::from_terms(vec![
            (-3, 1.into()),
            (-1, 2.into()),
            (1, 2.into()),
            (3, 1.into()),
        ]);
        assert_eq!(q_factorial(3), expected);
        assert_eq!(q_factorial(3), &qi(2) * &qi(3));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 0).unwrap(), LaurentPoly::one());
        assert_eq!(q_binomial(2, 1).unwrap(), qi(2));
        let expected = LaurentPoly::from_terms(vec![
            (-4, 1.into()),
            (-2, 1.into()),
            (0, 2.into()),
            (2, 1.into()),
            (4, 1.into()),
        ]);
        assert_eq!(q_binomial(4, 2).unwrap(), expected);
        assert!(q_binomial(3, 4).is_err());
    }

    #[test]
    fn q_binomial_symmetry_and_pascal() {
        // Pascal-type identity: C(n,k) = t^k C(n-1,k) + t^{k-n} C(n-1,k-1).
        for n in 1..=12u64 {
            for k in 0..=n {
                let lhs = q_binomial(n, k).unwrap();
                assert_eq!(lhs, q_binomial(n, n - k).unwrap());
                assert!(lhs.is_bar_invariant());
                assert!(lhs.has_nonnegative_coeffs());
                assert_eq!(
                    lhs.eval_at_one(),
                    (1..=n).map(BigInt::from).product::<BigInt>()
                        / ((1..=k).map(BigInt::from).product::<BigInt>()
                            * (1..=n - k).map(BigInt::from).product::<BigInt>())
                );
                let mut rhs = LaurentPoly::zero();
                if k < n {
                    rhs = &rhs + &q_binomial(n - 1, k).unwrap().shifted(k as i64);
                }
                if k >= 1 {
                    rhs = &rhs + &q_binomial(n - 1, k - 1).unwrap().shifted(k as i64 - n as i64);
                }
                assert_eq!(lhs, rhs, "pascal identity at ({n},{k})");
            }
        }
    }

    #[test]
    fn bar_examples() {
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
        let t2 = LaurentPoly::term(1.into(), 2);
        assert_eq!(t2.bar(), LaurentPoly::term(1.into(), -2));
        assert_eq!(t2.bar().bar(), t2);
        assert_eq!(qi(5).bar(), qi(5));
    }

    #[test]
    fn exact_div_examples() {
        let prod = &qi(2) * &qi(3);
        assert_eq!(exact_div(&prod, &qi(2)).unwrap(), qi(3));
        assert_eq!(exact_div(&LaurentPoly::zero(), &qi(2)).unwrap(), LaurentPoly::zero());
        assert_eq!(exact_div(&q_factorial(3), &qi(3)).unwrap(), qi(2));
        assert!(exact_div(&qi(3), &qi(2)).is_err());
        assert!(exact_div(&qi(3), &LaurentPoly::zero()).is_err());
    }

    #[test]
    fn exact_div_roundtrip_randomish() {
        // Deterministic pseudo-random triples via a small LCG.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..60 {
            let mk = |next: &mut dyn FnMut() -> u64| {
                let nterms = 1 + (next() % 4) as i64;
                LaurentPoly::from_terms((0..nterms).map(|_| {
                    let e = (next() % 9) as i64 - 4;
                    let c = (next() % 11) as i64 - 5;
                    (e, BigInt::from(c))
                }))
            };
            let a = mk(&mut next);
            let b = mk(&mut next);
            if b.is_zero() {
                continue;
            }
            let prod = &a * &b;
            assert_eq!(exact_div(&prod, &b).unwrap(), a);
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(qi(3).to_string(), "t^-2 + 1 + t^2");
        assert_eq!(qi(2).to_string(), "t^-1 + t");
        assert_eq!(q_factorial(3).to_string(), "t^-3 + 2t^-1 + 2t + t^3");
        let m = LaurentPoly::from_terms(vec![(0, (-1).into()), (1, 3.into())]);
        assert_eq!(m.to_string(), "-1 + 3t");
    }

    #[test]
    fn json_format() {
        let p = qi(3);
        let v = p.to_json();
        assert_eq!(v, serde_json::json!({"-2": 1, "0": 1, "2": 1}));
    }

    #[test]
    fn rational_field_axioms_on_samples() {
        let mut state: u64 = 42;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let mut polys = Vec::new();
        for _ in 0..8 {
            let nterms = 1 + (next() % 3) as i64;
            let p = LaurentPoly::from_terms((0..nterms).map(|_| {
                let e = (next() % 7) as i64 - 3;
                let c = (next() % 7) as i64 - 3;
                (e, BigInt::from(c))
            }));
            polys.push(p);
        }
        polys.retain(|p| !p.is_zero());
        for a in &polys {
            for b in &polys {
                for c in &polys {
                    let x = RationalFunction::new(a.clone(), b.clone()).unwrap();
                    let y = RationalFunction::new(b.clone(), c.clone()).unwrap();
                    let z = RationalFunction::new(c.clone(), a.clone()).unwrap();
                    // commutativity, associativity, distributivity
                    assert_eq!(x.add(&y), y.add(&x));
                    assert_eq!(x.mul(&y), y.mul(&x));
                    assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
                    assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
                    assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
                    // inverses
                    assert_eq!(x.sub(&x), RationalFunction::zero());
                    if !x.is_zero() {
                        assert_eq!(x.div(&x).unwrap(), RationalFunction::one());
                    }
                }
            }
        }
    }

    #[test]
    fn rational_reduction_idempotent_and_canonical() {
        let x = RationalFunction::new(&qi(2) * &qi(3), qi(2)).unwrap();
        assert_eq!(x.as_laurent().unwrap(), qi(3));
        // t^2/t = t, units stripped into the numerator
        let y = RationalFunction::new(
            LaurentPoly::term(1.into(), 2),
            LaurentPoly::term(1.into(), 1),
        )
        .unwrap();
        assert_eq!(y.as_laurent().unwrap(), LaurentPoly::term(1.into(), 1));
        // re-reducing changes nothing
        let z = RationalFunction::new(x.numerator().clone(), x.denominator().clone()).unwrap();
        assert_eq!(z, x);
        assert!(RationalFunction::new(qi(2), LaurentPoly::zero()).is_err());
    }
}
