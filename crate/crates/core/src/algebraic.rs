//! Exact real algebraic numbers of degree at most three.
//!
//! A number field is stored as a monic irreducible minimal polynomial plus a
//! rational interval isolating one real root `β`.  Elements are polynomials in
//! `β` of degree below the field degree.  Signs are decided by interval
//! evaluation, bisecting the isolating interval until the answer is certain;
//! since the minimal polynomial is irreducible, a nonzero element never
//! evaluates to zero and the refinement always terminates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat, OrderedField};

/// Dense univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Coefficients, lowest degree first (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Approximate evaluation at a float.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Range enclosure over the closed interval `[lo, hi]` (Horner form).
    pub fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut acc = (BigRational::zero(), BigRational::zero());
        for c in self.coeffs.iter().rev() {
            let prods = [&acc.0 * lo, &acc.0 * hi, &acc.1 * lo, &acc.1 * hi];
            let mn = prods.iter().min().unwrap().clone();
            let mx = prods.iter().max().unwrap().clone();
            acc = (mn + c, mx + c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let f = &r[k] / &lead;
            if f.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k - dd + j] -= &f * c;
            }
            q[k - dd] = f;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(Poly::new(r.coeffs.into_iter().map(|c| -c).collect()));
        }
        seq
    }

    fn sign_variations(seq: &[Poly], x: Option<&BigRational>, at_pos_inf: bool) -> usize {
        let signs: Vec<i32> = seq
            .iter()
            .map(|p| {
                let v = match x {
                    Some(x) => p.eval(x),
                    None => {
                        let l = p.leading();
                        let odd = p.degree().unwrap_or(0) % 2 == 1;
                        if at_pos_inf || !odd {
                            l
                        } else {
                            -l
                        }
                    }
                };
                sign(&v)
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`;
    /// `None` bounds stand for infinities.
    pub fn count_roots(&self, a: Option<&BigRational>, b: Option<&BigRational>) -> usize {
        let seq = self.sturm_sequence();
        let va = Self::sign_variations(&seq, a, false);
        let vb = Self::sign_variations(&seq, b, true);
        va.saturating_sub(vb)
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        let lead = self.leading().abs();
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = c.abs() / &lead;
            if q > m {
                m = q;
            }
        }
        m + rat(1)
    }

    /// Isolating intervals for the distinct real roots, in increasing order.
    ///
    /// Each returned `(lo, hi)` either has `lo == hi` (an exact rational root)
    /// or contains exactly one root in its interior with nonzero values at
    /// both endpoints of opposite sign (the polynomial is made square-free
    /// first).
    pub fn isolate_real_roots(&self) -> Vec<(BigRational, BigRational)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.square_free();
        let b = sf.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = sf.count_roots(Some(&lo), Some(&hi));
            if n == 0 {
                continue;
            }
            if n == 1 && !sf.eval(&hi).is_zero() && !sf.eval(&lo).is_zero() {
                out.push((lo, hi));
                continue;
            }
            if n == 1 && sf.eval(&hi).is_zero() {
                out.push((hi.clone(), hi));
                continue;
            }
            let mid = (&lo + &hi) / rat(2);
            if sf.eval(&mid).is_zero() {
                out.push((mid.clone(), mid.clone()));
                let eps = (&hi - &lo) / rat(8);
                stack.push((lo, &mid - &eps));
                stack.push((&mid + &eps, hi));
                continue;
            }
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// `self / gcd(self, self')`, normalized to be monic.
    pub fn square_free(&self) -> Poly {
        let g = gcd(self, &self.derivative());
        let (q, _) = self.div_rem(&g);
        q.monic()
    }

    /// Scales to leading coefficient one.
    pub fn monic(&self) -> Poly {
        let l = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    /// Distinct rational roots, by the rational root test on the
    /// cleared-denominator integer form.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        use num_integer::Integer;
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let l = self.coeffs.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
        let mut out = Vec::new();
        let mut k = 0;
        while ints[k].is_zero() {
            k += 1;
        }
        if k > 0 {
            out.push(BigRational::zero());
        }
        let divisors = |n: &BigInt| -> Vec<BigInt> {
            let n = n.abs();
            let mut d = Vec::new();
            let mut i = BigInt::from(1);
            while &i * &i <= n {
                if (&n % &i).is_zero() {
                    d.push(i.clone());
                    d.push(&n / &i);
                }
                i += 1;
            }
            d
        };
        for p in divisors(&ints[k]) {
            for q in divisors(ints.last().unwrap()) {
                for s in [1, -1] {
                    let r = BigRational::new(&p * BigInt::from(s), q.clone());
                    if self.eval(&r).is_zero() && !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Irreducibility over the rationals for degree at most three.
    pub fn is_irreducible_low_degree(&self) -> Result<bool> {
        match self.degree() {
            None | Some(0) => Ok(false),
            Some(1) => Ok(true),
            Some(2) | Some(3) => Ok(self.rational_roots().is_empty() && self.square_free().degree() == self.degree()),
            Some(d) => Err(Error::Unsupported(format!("irreducibility test for degree {d}"))),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

fn sign(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        a.monic()
    }
}

/// A real number field `Q(β)` of degree at most three with a chosen real embedding.
#[derive(Debug)]
pub struct AlgebraicField {
    minpoly: Poly,
    interval: Mutex<(BigRational, BigRational)>,
}

impl AlgebraicField {
    /// Builds the field of `poly`, choosing the real root nearest to `approx`
    /// (or the largest real root when `approx` is `None`).
    pub fn new(poly: &Poly, approx: Option<f64>) -> Result<Arc<Self>> {
        if !poly.is_irreducible_low_degree()? {
            return Err(Error::InvalidInput(format!("{poly} is not irreducible over Q")));
        }
        let minpoly = poly.monic();
        let roots = minpoly.isolate_real_roots();
        if roots.is_empty() {
            return Err(Error::InvalidInput(format!("{poly} has no real root")));
        }
        let chosen = match approx {
            None => roots.last().unwrap().clone(),
            Some(t) => {
                let mut best: Option<((BigRational, BigRational), f64)> = None;
                for iv in roots {
                    let r = refine_to(&minpoly, iv.clone(), 1e-12);
                    let mid = ((&r.0 + &r.1) / rat(2)).to_f64().unwrap_or(f64::NAN);
                    let d = (mid - t).abs();
                    if best.as_ref().is_none_or(|b| d < b.1) {
                        best = Some((r, d));
                    }
                }
                best.unwrap().0
            }
        };
        Ok(Arc::new(AlgebraicField { minpoly, interval: Mutex::new(chosen) }))
    }

    /// The monic minimal polynomial.
    pub fn minpoly(&self) -> &Poly {
        &self.minpoly
    }

    /// Field degree.
    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    /// Current isolating interval of the embedding.
    pub fn interval(&self) -> (BigRational, BigRational) {
        self.interval.lock().unwrap().clone()
    }

    fn refine(&self) {
        let mut g = self.interval.lock().unwrap();
        if g.0 == g.1 {
            return;
        }
        *g = bisect(&self.minpoly, g.clone());
    }

    /// The generator `β` as a field element.
    pub fn generator(self: &Arc<Self>) -> Algebraic {
        let mut c = vec![BigRational::zero(); self.degree()];
        if self.degree() == 1 {
            return Algebraic::from_rational(-self.minpoly.coeffs()[0].clone());
        }
        c[1] = rat(1);
        Algebraic { field: Some(self.clone()), coeffs: c }
    }

    /// The element `p(β)` for a rational polynomial `p`.
    pub fn element(self: &Arc<Self>, p: &Poly) -> Algebraic {
        let (_, r) = p.div_rem(&self.minpoly);
        let mut c = r.coeffs().to_vec();
        c.resize(self.degree(), BigRational::zero());
        Algebraic { field: Some(self.clone()), coeffs: c }.normalized()
    }
}

fn bisect(p: &Poly, (lo, hi): (BigRational, BigRational)) -> (BigRational, BigRational) {
    let mid = (&lo + &hi) / rat(2);
    let vm = p.eval(&mid);
    if vm.is_zero() {
        return (mid.clone(), mid);
    }
    if sign(&p.eval(&lo)) != sign(&vm) {
        (lo, mid)
    } else {
        (mid, hi)
    }
}

fn refine_to(p: &Poly, mut iv: (BigRational, BigRational), width: f64) -> (BigRational, BigRational) {
    while iv.0 != iv.1 && (&iv.1 - &iv.0).to_f64().unwrap_or(f64::INFINITY) > width {
        iv = bisect(p, iv);
    }
    iv
}

/// An element of a real algebraic number field, or a plain rational when
/// `field` is `None` (such constants combine with elements of any field).
#[derive(Clone)]
pub struct Algebraic {
    field: Option<Arc<AlgebraicField>>,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Algebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Poly::new(self.coeffs.clone());
        write!(f, "{}", p.to_string().replace('X', "β"))?;
        if self.field.is_some() {
            write!(f, " (≈{:.6})", self.approx_f64())?;
        }
        Ok(())
    }
}

impl Algebraic {
    /// A rational constant.
    pub fn from_rational(q: BigRational) -> Self {
        Algebraic { field: None, coeffs: vec![q] }
    }

    /// The field this element lives in, if it is not a plain rational.
    pub fn field(&self) -> Option<&Arc<AlgebraicField>> {
        self.field.as_ref()
    }

    /// Coordinates on the power basis `1, β, β², …`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The value as a rational, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    fn normalized(mut self) -> Self {
        if self.field.is_some() && self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            let c0 = self.coeffs.first().cloned().unwrap_or_else(BigRational::zero);
            self.field = None;
            self.coeffs = vec![c0];
        }
        self
    }

    fn common_field(a: &Self, b: &Self) -> Option<Arc<AlgebraicField>> {
        match (&a.field, &b.field) {
            (Some(f), Some(g)) => {
                assert!(Arc::ptr_eq(f, g) || f.minpoly == g.minpoly, "mixing elements of distinct fields");
                Some(f.clone())
            }
            (Some(f), None) | (None, Some(f)) => Some(f.clone()),
            (None, None) => None,
        }
    }

    fn padded(&self, n: usize) -> Vec<BigRational> {
        let mut c = self.coeffs.clone();
        c.resize(n.max(c.len()), BigRational::zero());
        c
    }

    /// Exact sign: -1, 0 or 1.
    pub fn signum_exact(&self) -> i32 {
        let field = match &self.field {
            None => return sign(&self.coeffs[0]),
            Some(f) => f,
        };
        if self.coeffs.iter().all(|c| c.is_zero()) {
            return 0;
        }
        let p = Poly::new(self.coeffs.clone());
        loop {
            let (lo, hi) = field.interval();
            let (a, b) = p.eval_interval(&lo, &hi);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            if lo == hi {
                return sign(&a);
            }
            field.refine();
        }
    }

    /// Rational enclosure `[lo, hi]` of the value, of width at most `width`.
    pub fn enclosure(&self, width: &BigRational) -> (BigRational, BigRational) {
        let field = match &self.field {
            None => return (self.coeffs[0].clone(), self.coeffs[0].clone()),
            Some(f) => f,
        };
        let p = Poly::new(self.coeffs.clone());
        loop {
            let (lo, hi) = field.interval();
            let (a, b) = p.eval_interval(&lo, &hi);
            if &(&b - &a) <= width || lo == hi {
                return (a, b);
            }
            field.refine();
        }
    }

    fn inverse(&self) -> Self {
        let field = match &self.field {
            None => {
                assert!(!self.coeffs[0].is_zero(), "division by zero");
                return Algebraic::from_rational(self.coeffs[0].recip());
            }
            Some(f) => f.clone(),
        };
        assert!(self.signum_exact() != 0, "division by zero");
        let d = field.degree();
        // Column k of the multiplication matrix is self·β^k reduced.
        let mut cols = Vec::with_capacity(d);
        let mut cur = Poly::new(self.coeffs.clone());
        let x = Poly::from_ints(&[0, 1]);
        for _ in 0..d {
            let mut c = cur.coeffs().to_vec();
            c.resize(d, BigRational::zero());
            cols.push(c);
            cur = cur.mul(&x).div_rem(&field.minpoly).1;
        }
        // Solve A·y = e0 by Gauss-Jordan elimination.
        let mut a: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { rat(1) } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r][col].is_zero()).expect("singular multiplication matrix");
            a.swap(col, piv);
            let pv = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v = &*v / &pv;
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..=d {
                        let t = &f * &a[col][c];
                        a[r][c] -= t;
                    }
                }
            }
        }
        Algebraic { field: Some(field), coeffs: a.into_iter().map(|row| row[d].clone()).collect() }.normalized()
    }
}

impl PartialEq for Algebraic {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).coeffs.iter().all(|c| c.is_zero())
    }
}

impl PartialOrd for Algebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((self.clone() - other.clone()).signum_exact().cmp(&0))
    }
}

impl Add for Algebraic {
    type Output = Algebraic;
    fn add(self, rhs: Self) -> Self {
        let field = Self::common_field(&self, &rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let a = self.padded(n);
        let b = rhs.padded(n);
        Algebraic { field, coeffs: a.into_iter().zip(b).map(|(x, y)| x + y).collect() }.normalized()
    }
}

impl Sub for Algebraic {
    type Output = Algebraic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Algebraic {
    type Output = Algebraic;
    fn neg(self) -> Self {
        Algebraic { field: self.field, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for Algebraic {
    type Output = Algebraic;
    fn mul(self, rhs: Self) -> Self {
        let field = Self::common_field(&self, &rhs);
        let p = Poly::new(self.coeffs).mul(&Poly::new(rhs.coeffs));
        match field {
            None => Algebraic::from_rational(p.coeffs().first().cloned().unwrap_or_else(BigRational::zero)),
            Some(f) => f.element(&p),
        }
    }
}

impl Div for Algebraic {
    type Output = Algebraic;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl Rem for Algebraic {
    type Output = Algebraic;
    fn rem(self, rhs: Self) -> Self {
        let q = (self.clone() / rhs.clone()).floor_int();
        self - rhs * Algebraic::from_int(q)
    }
}

impl Zero for Algebraic {
    fn zero() -> Self {
        Algebraic::from_rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Algebraic {
    fn one() -> Self {
        Algebraic::from_rational(rat(1))
    }
}

impl num_traits::Num for Algebraic {
    type FromStrRadixErr = String;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, String> {
        BigRational::from_str_radix(s, radix).map(Algebraic::from_rational).map_err(|e| e.to_string())
    }
}

impl OrderedField for Algebraic {
    fn from_int(n: i64) -> Self {
        Algebraic::from_rational(rat(n))
    }

    fn floor_int(&self) -> i64 {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer().to_i64().expect("floor out of range");
        }
        let mut w = rat(1);
        loop {
            let (lo, hi) = self.enclosure(&w);
            let fl = lo.floor().to_integer();
            let fh = hi.floor().to_integer();
            if fl == fh {
                return fl.to_i64().expect("floor out of range");
            }
            w /= rat(1 << 8);
        }
    }

    fn approx_f64(&self) -> f64 {
        let (lo, hi) = self.enclosure(&BigRational::new(BigInt::from(1), BigInt::from(1u64 << 60)));
        ((lo + hi) / rat(2)).to_f64().unwrap_or(f64::NAN)
    }

    fn is_exact() -> bool {
        true
    }
}

/// Parses a polynomial in `x` such as `x^3-3x^2-x+1`, `2*x - 1/2` or `(x^2)`.
pub fn parse_poly(src: &str) -> Result<Poly> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.trim_start_matches('(').trim_end_matches(')').to_string();
    if s.is_empty() {
        return Err(Error::Parse(format!("empty polynomial in {src:?}")));
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let mut neg = false;
        if bytes[i] == '+' || bytes[i] == '-' {
            neg = bytes[i] == '-';
            i += 1;
        }
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == '/') {
            i += 1;
        }
        let coeff: BigRational = if i > start {
            let t: String = bytes[start..i].iter().collect();
            t.parse().map_err(|_| Error::Parse(format!("bad coefficient {t:?} in {src:?}")))?
        } else {
            rat(1)
        };
        if i < bytes.len() && bytes[i] == '*' {
            i += 1;
        }
        let mut power = 0usize;
        if i < bytes.len() && (bytes[i] == 'x' || bytes[i] == 'X') {
            i += 1;
            power = 1;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                let ps = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let t: String = bytes[ps..i].iter().collect();
                power = t.parse().map_err(|_| Error::Parse(format!("bad exponent in {src:?}")))?;
            }
        } else if i == start {
            return Err(Error::Parse(format!("unexpected character {:?} in {src:?}", bytes.get(i))));
        }
        if i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
            return Err(Error::Parse(format!("unexpected character {:?} in {src:?}", bytes[i])));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += if neg { -coeff } else { coeff };
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brun_field() -> Arc<AlgebraicField> {
        AlgebraicField::new(&Poly::from_ints(&[1, -1, -3, 1]), None).unwrap()
    }

    #[test]
    fn parses_polynomials() {
        assert_eq!(parse_poly("x^3-3x^2-x+1").unwrap(), Poly::from_ints(&[1, -1, -3, 1]));
        assert_eq!(parse_poly("2*x - 1").unwrap(), Poly::from_ints(&[-1, 2]));
        assert_eq!(parse_poly("(x^2)").unwrap(), Poly::from_ints(&[0, 0, 1]));
        assert!(parse_poly("x^").is_err());
    }

    #[test]
    fn sturm_counts_roots() {
        let p = Poly::from_ints(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        assert_eq!(p.count_roots(None, None), 3);
        assert_eq!(p.count_roots(Some(&rat(1)), Some(&rat(3))), 2);
        assert_eq!(p.rational_roots(), vec![rat(1), rat(2), rat(3)]);
        assert!(!p.is_irreducible_low_degree().unwrap());
    }

    #[test]
    fn dominant_root_and_arithmetic() {
        let k = brun_field();
        let b = k.generator();
        assert!((b.approx_f64() - 3.2143).abs() < 1e-3);
        let b3 = b.clone() * b.clone() * b.clone();
        let expect = Algebraic::from_int(3) * b.clone() * b.clone() + b.clone() - Algebraic::from_int(1);
        assert!(b3 == expect);
        let inv = Algebraic::from_int(1) / b.clone();
        assert!(inv * b.clone() == Algebraic::from_int(1));
        assert_eq!(b.floor_int(), 3);
        assert!(b.clone() > Algebraic::from_int(3));
        assert!(b.clone() < Algebraic::from_rational(crate::scalar::ratio(13, 4)));
    }

    #[test]
    fn nearest_root_selection() {
        let k = AlgebraicField::new(&Poly::from_ints(&[1, -1, -3, 1]), Some(0.46)).unwrap();
        assert!((k.generator().approx_f64() - 0.4608).abs() < 1e-3);
    }
}
