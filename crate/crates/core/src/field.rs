//! Exact arithmetic in Q(2cos(pi/N)).
//!
//! Scalars are rational-coefficient vectors over the power basis of
//! psi = 2cos(pi/N), reduced modulo its minimal polynomial. Equality is
//! coefficient equality; a scalar is zero exactly when its vector is zero.
//! Signs of nonzero scalars are decided by evaluating over a rational
//! isolating interval for psi, bisecting the interval until the value's
//! interval excludes zero. No step is approximate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::Mutex;

/// A field element in the power basis. The coefficient vector always has the
/// field's full degree; construct through [`NumberField`] methods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// The real cyclotomic field Q(2cos(pi/N)) with exact sign determination.
#[derive(Debug)]
pub struct NumberField {
    n: u32,
    min_poly: Vec<BigRational>,
    degree: usize,
    // Isolating interval for the largest root of min_poly, which is psi
    // itself: the conjugates are 2cos(j pi/N) with j > 1 coprime to 2N.
    // Monotonically tightened; sign of min_poly differs at the endpoints.
    root: Mutex<(BigRational, BigRational)>,
}

impl NumberField {
    /// Field for psi = 2cos(pi/n), n >= 1.
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        let min_poly: Vec<BigRational> = min_poly_two_cos(n)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let degree = min_poly.len() - 1;
        let root = if degree == 1 {
            let r = -&min_poly[0];
            (r.clone(), r)
        } else {
            isolate_largest_root(&min_poly)
        };
        let field = NumberField {
            n,
            min_poly,
            degree,
            root: Mutex::new(root),
        };
        if field.degree > 1 {
            field.refine_root(64);
        }
        field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The N with psi = 2cos(pi/N).
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn from_rational(&self, value: BigRational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = value;
        s
    }

    pub fn from_int(&self, value: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// The generator psi itself.
    pub fn gen(&self) -> Scalar {
        if self.degree == 1 {
            // psi is rational: the minimal polynomial is y - psi.
            self.from_rational(-&self.min_poly[0])
        } else {
            let mut s = self.zero();
            s.coeffs[1] = BigRational::one();
            s
        }
    }

    /// 2cos(k pi / N), exact: the degree-k Chebyshev-style image of psi.
    pub fn two_cos(&self, k: u32) -> Scalar {
        let mut prev = self.from_int(2);
        if k == 0 {
            return prev;
        }
        let gen = self.gen();
        let mut cur = gen.clone();
        for _ in 1..k {
            let next = self.sub(&self.mul(&gen, &cur), &prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Scalar {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        Scalar {
            coeffs: a.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let d = self.degree;
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        // Reduce modulo the monic minimal polynomial from the top down.
        for i in (d..2 * d - 1).rev() {
            if conv[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut conv[i], BigRational::zero());
            for j in 0..d {
                if !self.min_poly[j].is_zero() {
                    let delta = &c * &self.min_poly[j];
                    conv[i - d + j] -= delta;
                }
            }
        }
        conv.truncate(d);
        Scalar { coeffs: conv }
    }

    /// Exact sign of the scalar relative to zero.
    pub fn sign(&self, a: &Scalar) -> Ordering {
        if a.is_zero() {
            return Ordering::Equal;
        }
        if self.degree == 1 {
            return a.coeffs[0].cmp(&BigRational::zero());
        }
        loop {
            let (lo, hi) = {
                let guard = self.root.lock().unwrap();
                guard.clone()
            };
            let (flo, fhi) = interval_eval(&a.coeffs, &lo, &hi);
            if flo.is_positive() {
                return Ordering::Greater;
            }
            if fhi.is_negative() {
                return Ordering::Less;
            }
            // The value is nonzero, so enough bisection separates it from 0.
            self.refine_root(32);
        }
    }

    fn refine_root(&self, steps: u32) {
        let mut guard = self.root.lock().unwrap();
        let (ref mut lo, ref mut hi) = *guard;
        let sign_lo = poly_eval(&self.min_poly, lo).is_positive();
        for _ in 0..steps {
            let mid = (&*lo + &*hi) / BigRational::from_integer(BigInt::from(2));
            // The minimal polynomial is irreducible of degree >= 2, so it has
            // no rational roots and the sign at mid is well defined.
            if poly_eval(&self.min_poly, &mid).is_positive() == sign_lo {
                *lo = mid;
            } else {
                *hi = mid;
            }
        }
    }
}

/// Evaluate the polynomial with the given coefficients over the interval
/// [lo, hi] by interval Horner; returns rational bounds on its range.
fn interval_eval(
    coeffs: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mut alo = coeffs.last().expect("nonempty").clone();
    let mut ahi = alo.clone();
    for c in coeffs.iter().rev().skip(1) {
        let p1 = &alo * lo;
        let p2 = &alo * hi;
        let p3 = &ahi * lo;
        let p4 = &ahi * hi;
        let mut new_lo = p1.clone();
        let mut new_hi = p1;
        for p in [p2, p3, p4] {
            if p < new_lo {
                new_lo = p.clone();
            }
            if p > new_hi {
                new_hi = p;
            }
        }
        alo = new_lo + c;
        ahi = new_hi + c;
    }
    (alo, ahi)
}

fn poly_eval(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Remainder of polynomial division.
fn poly_rem(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let dd = den.len() - 1;
    let lead = den.last().expect("nonempty divisor");
    while rem.len() > dd && !(rem.len() == 1 && rem[0].is_zero()) {
        let shift = rem.len() - 1 - dd;
        let factor = rem.last().unwrap() / lead;
        for i in 0..=dd {
            let delta = &factor * &den[i];
            rem[shift + i] -= delta;
        }
        rem.pop();
        poly_trim(&mut rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    rem
}

/// Sturm-chain isolation of the largest real root. The minimal polynomials
/// here are squarefree, so the plain chain suffices.
fn isolate_largest_root(p: &[BigRational]) -> (BigRational, BigRational) {
    let mut chain = vec![p.to_vec(), poly_derivative(p)];
    loop {
        let last = &chain[chain.len() - 1];
        if last.len() == 1 {
            break;
        }
        let prev = &chain[chain.len() - 2];
        let mut rem = poly_rem(prev, last);
        for c in &mut rem {
            *c = -&*c;
        }
        let stop = rem.len() == 1 && rem[0].is_zero();
        chain.push(rem);
        if stop {
            break;
        }
    }
    let sign_changes = |x: &BigRational| -> usize {
        let mut count = 0;
        let mut prev_sign = 0i8;
        for poly in &chain {
            let v = poly_eval(poly, x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if prev_sign != 0 && s != prev_sign {
                    count += 1;
                }
                prev_sign = s;
            }
        }
        count
    };
    // All roots lie in [-2, 2]; count roots in (a, b] as changes(a) - changes(b).
    let mut lo = BigRational::from_integer(BigInt::from(-3));
    let mut hi = BigRational::from_integer(BigInt::from(3));
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let in_interval = sign_changes(&lo) - sign_changes(&hi);
        assert!(in_interval >= 1, "lost the largest root");
        if in_interval == 1 {
            break;
        }
        let mid = (&lo + &hi) / &two;
        if sign_changes(&mid) - sign_changes(&hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Cyclotomic polynomial with integer coefficients, little-endian.
fn cyclotomic(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by the product of the cyclotomics of proper divisors.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = int_poly_div_exact(&num, &cyclotomic(d));
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for shift in (0..quot.len()).rev() {
        let factor = rem[shift + dd].clone();
        if factor.is_zero() {
            continue;
        }
        quot[shift] = factor.clone();
        for i in 0..=dd {
            let delta = &factor * &den[i];
            rem[shift + i] -= delta;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// Minimal polynomial of 2cos(pi/n) over Q, monic with integer coefficients.
///
/// For n >= 2 this folds the palindromic cyclotomic polynomial of order 2n
/// through the basis z^j + z^-j, expressed in y = z + 1/z.
fn min_poly_two_cos(n: u32) -> Vec<BigInt> {
    if n == 1 {
        // 2cos(pi) = -2.
        return vec![BigInt::from(2), BigInt::one()];
    }
    let phi = cyclotomic(2 * n);
    let deg = phi.len() - 1;
    assert!(deg.is_multiple_of(2));
    let k = deg / 2;
    // p_j(y) = z^j + z^-j with p_0 = 2, p_1 = y, p_{j+1} = y p_j - p_{j-1}.
    let mut result = vec![BigInt::zero(); k + 1];
    result[0] = phi[k].clone();
    let mut p_prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut p_cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for j in 1..=k {
        for (i, c) in p_cur.iter().enumerate() {
            result[i] += c * &phi[k - j];
        }
        if j < k {
            // y * p_cur - p_prev
            let mut next = vec![BigInt::zero(); p_cur.len() + 1];
            for (i, c) in p_cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            for (i, c) in p_prev.iter().enumerate() {
                next[i] -= c;
            }
            p_prev = std::mem::replace(&mut p_cur, next);
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn minimal_polynomials_of_small_orders() {
        // psi = -2, 0, 1, sqrt(2), golden ratio, sqrt(3) for n = 1, 2, 3, 4, 5, 6.
        assert_eq!(min_poly_two_cos(1), vec![BigInt::from(2), BigInt::from(1)]);
        assert_eq!(min_poly_two_cos(2), vec![BigInt::from(0), BigInt::from(1)]);
        assert_eq!(min_poly_two_cos(3), vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(
            min_poly_two_cos(4),
            vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)]
        );
        assert_eq!(
            min_poly_two_cos(5),
            vec![BigInt::from(-1), BigInt::from(-1), BigInt::from(1)]
        );
        assert_eq!(
            min_poly_two_cos(6),
            vec![BigInt::from(-3), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn isolated_root_brackets_the_cosine() {
        for n in 1..=30u32 {
            let field = NumberField::new(n);
            let expected = 2.0 * (std::f64::consts::PI / n as f64).cos();
            let guard = field.root.lock().unwrap();
            let lo = guard.0.to_integer().to_string();
            // Compare in floating point with generous slack; the interval is
            // 2^-64 wide so conversion error dominates.
            let lo_f = ratio_to_f64(&guard.0);
            let hi_f = ratio_to_f64(&guard.1);
            let _ = lo;
            assert!(
                lo_f - 1e-9 <= expected && expected <= hi_f + 1e-9,
                "n={n}: [{lo_f}, {hi_f}] should bracket {expected}"
            );
        }
    }

    fn ratio_to_f64(r: &BigRational) -> f64 {
        let num = r.numer().to_string().parse::<f64>().unwrap();
        let den = r.denom().to_string().parse::<f64>().unwrap();
        num / den
    }

    #[test]
    fn golden_field_identity() {
        // In Q(2cos(pi/5)), psi satisfies psi^2 = psi + 1.
        let field = NumberField::new(5);
        let psi = field.gen();
        let square = field.mul(&psi, &psi);
        let expected = field.add(&psi, &field.one());
        assert_eq!(square, expected);
        assert_eq!(field.sign(&psi), Ordering::Greater);
    }

    #[test]
    fn sign_of_small_differences() {
        // 2cos(pi/12) = (sqrt 6 + sqrt 2)/2 ~ 1.93185; check sign of psi - 193/100
        // and psi - 194/100, which straddle it.
        let field = NumberField::new(12);
        let psi = field.gen();
        let low = field.sub(&psi, &field.from_rational(rational(193, 100)));
        let high = field.sub(&psi, &field.from_rational(rational(194, 100)));
        assert_eq!(field.sign(&low), Ordering::Greater);
        assert_eq!(field.sign(&high), Ordering::Less);
        assert_eq!(field.sign(&field.zero()), Ordering::Equal);
    }

    #[test]
    fn two_cos_values_are_consistent() {
        // In Q(2cos(pi/6)): two_cos(2) = 2cos(pi/3) = 1, two_cos(3) = 0.
        let field = NumberField::new(6);
        assert_eq!(field.two_cos(2), field.one());
        assert_eq!(field.two_cos(3), field.zero());
        assert_eq!(field.two_cos(6), field.from_int(-2));
    }

    #[test]
    fn rational_degenerate_fields() {
        let field = NumberField::new(1);
        assert_eq!(field.degree(), 1);
        assert_eq!(field.gen(), field.from_int(-2));
        let field = NumberField::new(2);
        assert_eq!(field.gen(), field.zero());
    }
}
