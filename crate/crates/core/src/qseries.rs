//! Exact rational functions in q kept as ± q^e · ∏ Φ_d(q)^{m_d}, and the two
//! degree formulas for unipotent characters of U_n(q).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::betasets::BetaSet;
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredQPoly {
    /// −1, 0 or +1; 0 marks the zero polynomial.
    sign: i8,
    q_exp: i64,
    cyclo: BTreeMap<u32, i64>,
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u32
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl FactoredQPoly {
    pub fn one() -> Self {
        FactoredQPoly { sign: 1, q_exp: 0, cyclo: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        FactoredQPoly { sign: 0, q_exp: 0, cyclo: BTreeMap::new() }
    }

    pub fn q_pow(e: i64) -> Self {
        FactoredQPoly { sign: 1, q_exp: e, cyclo: BTreeMap::new() }
    }

    /// Φ_d(q)^m.
    pub fn cyclotomic(d: u32, m: i64) -> Self {
        assert!(d >= 1, "cyclotomic index starts at 1");
        let mut f = FactoredQPoly::one();
        f.add_cyclo(d, m);
        f
    }

    fn add_cyclo(&mut self, d: u32, m: i64) {
        let e = self.cyclo.entry(d).or_insert(0);
        *e += m;
        if *e == 0 {
            self.cyclo.remove(&d);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn q_exp(&self) -> i64 {
        self.q_exp
    }

    /// Non-zero cyclotomic exponents, keyed by d.
    pub fn cyclo_exponents(&self) -> &BTreeMap<u32, i64> {
        &self.cyclo
    }

    /// Degree of the rational function; the zero polynomial reports `i64::MIN`.
    pub fn degree(&self) -> i64 {
        if self.is_zero() {
            return i64::MIN;
        }
        self.q_exp + self.cyclo.iter().map(|(&d, &m)| m * totient(d) as i64).sum::<i64>()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || (self.q_exp >= 0 && self.cyclo.values().all(|&m| m >= 0))
    }

    pub fn div(&self, other: &FactoredQPoly) -> Result<FactoredQPoly> {
        if other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let mut inv = FactoredQPoly { sign: other.sign, q_exp: -other.q_exp, cyclo: BTreeMap::new() };
        for (&d, &m) in &other.cyclo {
            inv.cyclo.insert(d, -m);
        }
        Ok(self * &inv)
    }

    /// Exact value at an integer point. Fails only on division by zero,
    /// which cannot happen for |q₀| ≥ 2.
    pub fn evaluate_at(&self, q0: &BigInt) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let mut num = BigInt::from(self.sign);
        let mut den = BigInt::one();
        let qpow = |e: i64| Pow::pow(q0, e.unsigned_abs());
        if self.q_exp >= 0 {
            num *= qpow(self.q_exp);
        } else {
            den *= qpow(self.q_exp);
        }
        for (&d, &m) in &self.cyclo {
            let v: BigInt = Pow::pow(&eval_dense(&cyclotomic_coeffs(d), q0), m.unsigned_abs());
            if m > 0 {
                num *= v;
            } else {
                den *= v;
            }
        }
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Ok(BigRational::new(num, den))
    }

    /// Ascending coefficient list, or `None` if this is not a polynomial.
    pub fn expand(&self) -> Option<Vec<BigInt>> {
        if !self.is_polynomial() {
            return None;
        }
        if self.is_zero() {
            return Some(Vec::new());
        }
        let mut acc = vec![BigInt::from(self.sign)];
        for (&d, &m) in &self.cyclo {
            let phi = cyclotomic_coeffs(d);
            for _ in 0..m {
                acc = dense_mul(&acc, &phi);
            }
        }
        let mut out = vec![BigInt::zero(); self.q_exp as usize];
        out.extend(acc);
        Some(out)
    }

    /// q^k − 1 = ∏_{d | k} Φ_d.
    pub fn qpow_minus_one(k: u32) -> Self {
        assert!(k >= 1);
        let mut f = FactoredQPoly::one();
        for d in divisors(k) {
            f.add_cyclo(d, 1);
        }
        f
    }

    /// q^k + 1 = ∏_{d | 2k, d ∤ k} Φ_d.
    pub fn qpow_plus_one(k: u32) -> Self {
        assert!(k >= 1);
        let mut f = FactoredQPoly::one();
        for d in divisors(2 * k) {
            if k % d != 0 {
                f.add_cyclo(d, 1);
            }
        }
        f
    }

    /// q^h − (−1)^h.
    pub fn signed_factor(h: u32) -> Self {
        if h % 2 == 0 {
            Self::qpow_minus_one(h)
        } else {
            Self::qpow_plus_one(h)
        }
    }
}

impl Mul for &FactoredQPoly {
    type Output = FactoredQPoly;

    fn mul(self, rhs: &FactoredQPoly) -> FactoredQPoly {
        if self.is_zero() || rhs.is_zero() {
            return FactoredQPoly::zero();
        }
        let mut out = self.clone();
        out.sign *= rhs.sign;
        out.q_exp += rhs.q_exp;
        for (&d, &m) in &rhs.cyclo {
            out.add_cyclo(d, m);
        }
        out
    }
}

impl Mul for FactoredQPoly {
    type Output = FactoredQPoly;

    fn mul(self, rhs: FactoredQPoly) -> FactoredQPoly {
        &self * &rhs
    }
}

impl Neg for FactoredQPoly {
    type Output = FactoredQPoly;

    fn neg(mut self) -> FactoredQPoly {
        self.sign = -self.sign;
        self
    }
}

impl fmt::Display for FactoredQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let term = |name: String, e: i64| if e == 1 { name } else { format!("{name}^{e}") };
        let mut num = Vec::new();
        let mut den = Vec::new();
        if self.q_exp > 0 {
            num.push(term("q".into(), self.q_exp));
        } else if self.q_exp < 0 {
            den.push(term("q".into(), -self.q_exp));
        }
        for (&d, &m) in &self.cyclo {
            if m > 0 {
                num.push(term(format!("Phi{d}"), m));
            } else {
                den.push(term(format!("Phi{d}"), -m));
            }
        }
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if num.is_empty() {
            f.write_str("1")?;
        } else {
            f.write_str(&num.join(" * "))?;
        }
        match den.len() {
            0 => Ok(()),
            1 => write!(f, " / {}", den[0]),
            _ => write!(f, " / ({})", den.join(" * ")),
        }
    }
}

fn dense_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; the remainder must vanish.
fn dense_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            rem[i + j] -= &c * y;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    quot
}

fn eval_dense(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Coefficients of Φ_d, ascending, from q^d − 1 = ∏_{e | d} Φ_e.
pub fn cyclotomic_coeffs(d: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); d as usize + 1];
    num[0] = BigInt::from(-1);
    num[d as usize] = BigInt::one();
    for e in divisors(d) {
        if e < d {
            num = dense_div_exact(&num, &cyclotomic_coeffs(e));
        }
    }
    num
}

/// |U_n(q)|_{p′} = ∏_{i=1}^n (q^i − (−1)^i).
pub fn unitary_group_order_prime_part(n: u32) -> FactoredQPoly {
    (1..=n).fold(FactoredQPoly::one(), |acc, i| &acc * &FactoredQPoly::signed_factor(i))
}

/// q^{κ(λ)} |U_n|_{p′} / ∏_hooks (q^h − (−1)^h).
pub fn dim_via_hooks(lam: &Partition) -> FactoredQPoly {
    let mut den = FactoredQPoly::one();
    for h in lam.hooks() {
        den = &den * &FactoredQPoly::signed_factor(h);
    }
    let num = &FactoredQPoly::q_pow(lam.kappa() as i64) * &unitary_group_order_prime_part(lam.weight());
    num.div(&den).expect("hook factors are non-zero")
}

/// Δ(A) = ∏_{a > a′} (q^a − q^{a′}).
pub fn vandermonde(a: &BetaSet) -> FactoredQPoly {
    let xs = a.entries();
    let mut f = FactoredQPoly::one();
    for (i, &hi) in xs.iter().enumerate() {
        for &lo in &xs[i + 1..] {
            f = &f * &(&FactoredQPoly::q_pow(lo as i64) * &FactoredQPoly::qpow_minus_one(hi - lo));
        }
    }
    f
}

/// ∏_{a ∈ A} ∏_{h=1}^{a} (q^h − (−1)^h).
pub fn theta_product(a: &BetaSet) -> FactoredQPoly {
    let mut f = FactoredQPoly::one();
    for &x in a.entries() {
        for h in 1..=x {
            f = &f * &FactoredQPoly::signed_factor(h);
        }
    }
    f
}

/// Ξ(A, B) = ∏_{a ∈ A, b ∈ B} (q^a + q^b); requires A ∩ B = ∅.
pub fn cross_product(a: &BetaSet, b: &BetaSet) -> Result<FactoredQPoly> {
    let mut f = FactoredQPoly::one();
    for &x in a.entries() {
        for &y in b.entries() {
            if x == y {
                return Err(Error::InvalidBetaSet(format!("{a} and {b} share the entry {x}")));
            }
            let factor = &FactoredQPoly::q_pow(x.min(y) as i64) * &FactoredQPoly::qpow_plus_one(x.abs_diff(y));
            f = &f * &factor;
        }
    }
    Ok(f)
}

fn binom3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

/// f_{A,B} = Δ(A)Δ(B)Ξ(A,B) / (Θ(A)Θ(B) q^{C(|A|+|B|, 3)}).
pub fn f_pair(a: &BetaSet, b: &BetaSet) -> Result<FactoredQPoly> {
    let num = &(&vandermonde(a) * &vandermonde(b)) * &cross_product(a, b)?;
    let den = &(&theta_product(a) * &theta_product(b)) * &FactoredQPoly::q_pow(binom3((a.len() + b.len()) as i64));
    num.div(&den)
}

/// f_X = f_{X⁰, X¹}.
pub fn f_of_betaset(x: &BetaSet) -> FactoredQPoly {
    f_pair(&x.even_part(), &x.odd_part()).expect("parity parts are disjoint")
}

/// f_{X_λ} · |U_n|_{p′}.
pub fn dim_via_betaset(lam: &Partition) -> FactoredQPoly {
    &f_of_betaset(&BetaSet::from_partition(lam)) * &unitary_group_order_prime_part(lam.weight())
}

/// Human-readable expanded form, highest degree first.
pub fn format_expanded(coeffs: &[BigInt]) -> String {
    let mut terms = Vec::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let mono = match e {
            0 => mag.to_string(),
            1 if mag.is_one() => "q".to_string(),
            1 => format!("{mag}q"),
            _ if mag.is_one() => format!("q^{e}"),
            _ => format!("{mag}q^{e}"),
        };
        let sign = if c.is_negative() { "-" } else { "+" };
        terms.push((sign, mono));
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (sign, mono)) in terms.iter().enumerate() {
        if i == 0 {
            if *sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(mono);
    }
    out
}
