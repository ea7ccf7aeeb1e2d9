//! Exact arithmetic in GF(p^m).
//!
//! An element is stored as its canonical integer encoding `e = Σ a_j p^j`,
//! which stands for the polynomial `Σ a_j α^j` reduced modulo the field's
//! fixed irreducible polynomial. For prime fields the encoding is just the
//! residue mod p.
//!
//! Fields are interned: [`Field::new`] returns the same shared [`Gf`] handle
//! for the same `(p, m)`, and the modulus is chosen deterministically as the
//! monic irreducible polynomial whose lower coefficients have the smallest
//! encoding. That gives x²+x+1 for GF(4), x³+x+1 for GF(8), x²+1 for GF(9)
//! and x⁴+x+1 for GF(16).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 8;
/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;
/// Fields up to this order get full addition and multiplication tables.
pub const TABLE_ORDER: u32 = 256;

/// Shared handle to an interned field.
pub type Gf = Arc<Field>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("GF({p}^{m}) exceeds the supported range (m <= {MAX_DEGREE}, q <= {MAX_ORDER})")]
    TooLarge { p: u32, m: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("encoding {value} is not an element of GF({q})")]
    OutOfRange { value: u32, q: u32 },
}

/// A field element, stored as its canonical encoding in `[0, q)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
#[repr(transparent)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients low to high, length m + 1.
    modulus: Vec<u32>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    /// `exp[i] = g^i` for a fixed primitive element g, i in [0, q-1).
    exp: Vec<u16>,
    log: Vec<u32>,
    add_table: Option<Vec<u16>>,
    mul_table: Option<Vec<u16>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}", self.q)?;
        if self.m > 1 {
            write!(f, " = {}^{}, modulus {:?}", self.p, self.m, self.modulus)?;
        }
        write!(f, ")")
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` with p prime.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut m = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

fn cache() -> &'static Mutex<HashMap<(u32, u32), Gf>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Gf>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    /// Returns the interned field GF(p^m).
    pub fn new(p: u32, m: u32) -> Result<Gf, GfError> {
        if !is_prime(p as u64) {
            return Err(GfError::NotPrime(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if m > MAX_DEGREE || q > MAX_ORDER as u64 {
            return Err(GfError::TooLarge { p, m });
        }
        let mut guard = cache().lock().unwrap_or_else(|e| e.into_inner());
        if let Some(f) = guard.get(&(p, m)) {
            return Ok(f.clone());
        }
        let field = Arc::new(Field::build(p, m));
        guard.insert((p, m), field.clone());
        Ok(field)
    }

    /// Returns the interned field with `q` elements.
    pub fn with_order(q: u64) -> Result<Gf, GfError> {
        let (p, m) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        Field::new(p, m)
    }

    fn build(p: u32, m: u32) -> Field {
        let q = p.pow(m);
        let modulus = find_modulus(p, m);
        let mul_raw = |a: u32, b: u32| poly_mul_mod(a, b, p, &modulus);

        let neg: Vec<u16> = (0..q)
            .map(|a| {
                let digits = to_digits(a, p, m);
                from_digits(digits.iter().map(|&d| (p - d) % p), p) as u16
            })
            .collect();

        // Primitive element: first g whose powers hit every nonzero element.
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![0u32; q as usize];
        'search: for g in 1..q {
            exp.clear();
            let mut x = 1u32;
            for i in 0..(q - 1) {
                if i > 0 && x == 1 {
                    continue 'search;
                }
                exp.push(x as u16);
                log[x as usize] = i;
                x = mul_raw(x, g);
            }
            if x == 1 {
                break;
            }
        }
        debug_assert_eq!(exp.len(), (q - 1) as usize);

        let mut inv = vec![0u16; q as usize];
        for a in 1..q {
            let l = log[a as usize];
            inv[a as usize] = exp[((q - 1 - l) % (q - 1)) as usize];
        }

        let mut field = Field {
            p,
            m,
            q,
            modulus,
            neg,
            inv,
            exp,
            log,
            add_table: None,
            mul_table: None,
        };
        if q <= TABLE_ORDER {
            let n = q as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for a in 0..q {
                for b in 0..q {
                    let idx = a as usize * n + b as usize;
                    add[idx] = field.add_slow(a, b) as u16;
                    mul[idx] = field.mul_log(Elem(a as u16), Elem(b as u16)).0;
                }
            }
            field.add_table = Some(add);
            field.mul_table = Some(mul);
        }
        field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, low degree first; the last entry is 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_binary(&self) -> bool {
        self.q == 2
    }

    /// Checked conversion from an encoding.
    pub fn element(&self, value: u32) -> Result<Elem, GfError> {
        if value < self.q {
            Ok(Elem(value as u16))
        } else {
            Err(GfError::OutOfRange { value, q: self.q })
        }
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|v| Elem(v as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(|v| Elem(v as u16))
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let da = to_digits(a, self.p, self.m);
        let db = to_digits(b, self.p, self.m);
        from_digits(da.iter().zip(&db).map(|(x, y)| (x + y) % self.p), self.p)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        match &self.add_table {
            Some(t) => Elem(t[a.0 as usize * self.q as usize + b.0 as usize]),
            None => Elem(self.add_slow(a.0 as u32, b.0 as u32) as u16),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    fn mul_log(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        Elem(self.exp[(s % (self.q - 1)) as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_table {
            Some(t) => Elem(t[a.0 as usize * self.q as usize + b.0 as usize]),
            None => self.mul_log(a, b),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (!a.is_zero()).then(|| Elem(self.inv[a.0 as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, GfError> {
        let bi = self.inv(b).ok_or(GfError::DivisionByZero)?;
        Ok(self.mul(a, bi))
    }

    /// `a^e` with `0^0 = 1`.
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Range-checked binary operation on encodings.
    pub fn arith(&self, a: Elem, b: Elem, op: Op) -> Result<Elem, GfError> {
        for x in [a, b] {
            if x.value() >= self.q {
                return Err(GfError::OutOfRange {
                    value: x.value(),
                    q: self.q,
                });
            }
        }
        Ok(match op {
            Op::Add => self.add(a, b),
            Op::Sub => self.sub(a, b),
            Op::Mul => self.mul(a, b),
            Op::Div => self.div(a, b)?,
        })
    }

    /// True iff `a` is a nonzero square.
    pub fn is_square(&self, a: Elem) -> bool {
        !a.is_zero() && self.elements().any(|x| self.mul(x, x) == a)
    }
}

fn to_digits(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(v % p);
        v /= p;
    }
    d
}

fn from_digits(digits: impl DoubleEndedIterator<Item = u32>, p: u32) -> u32 {
    digits.rev().fold(0, |acc, d| acc * p + d)
}

/// Multiplies two encoded polynomials modulo `modulus` over GF(p).
fn poly_mul_mod(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = modulus.len() - 1;
    let da = to_digits(a, p, m as u32);
    let db = to_digits(b, p, m as u32);
    let mut prod = vec![0u32; 2 * m];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (m..2 * m).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // subtract c * x^(deg-m) * modulus
        for (t, &mc) in modulus.iter().enumerate() {
            let idx = deg - m + t;
            prod[idx] = (prod[idx] + (p - (c * mc) % p)) % p;
        }
    }
    from_digits(prod[..m].iter().copied(), p)
}

/// Remainder of `num` divided by monic `den` over GF(p); both low-first.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if c != 0 {
            for (t, &dc) in den.iter().enumerate() {
                r[shift + t] = (r[shift + t] + p - (c * dc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Irreducibility over GF(p) by trial division with every monic polynomial
/// of degree 1..=deg/2.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for lower in 0..p.pow(d as u32) {
            let mut div = to_digits(lower, p, d as u32);
            div.push(1);
            if poly_rem(poly, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn find_modulus(p: u32, m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![0, 1];
    }
    (0..p.pow(m))
        .map(|lower| {
            let mut poly = to_digits(lower, p, m);
            poly.push(1);
            poly
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial exists for every degree")
}
