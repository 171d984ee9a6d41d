//! Arithmetic in GF(p^m) for orders up to 2^16.
//!
//! Elements are dense indices: the residue polynomial `c_0 + c_1 x + ... +
//! c_{m-1} x^{m-1}` is stored as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Every
//! field carries exp/log tables for a primitive element. Fields with at most
//! 256 elements also get full addition and multiplication tables; larger
//! fields add through a Zech logarithm table.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;
const TABLE_ORDER: u32 = 256;

/// A finite field GF(p^m) with precomputed arithmetic tables.
///
/// Immutable after construction; share it behind an [`Arc`].
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    tables: Option<Tables>,
    zech: Vec<u32>,
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// Marks `1 + a^i = 0` in the Zech table.
const ZECH_ZERO: u32 = u32::MAX;

impl Field {
    /// Builds GF(p^m). With `modulus = None` the canonical modulus is used:
    /// the monic irreducible of degree `m` whose non-leading coefficients,
    /// read as a base-p integer with the constant term least significant,
    /// are smallest.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ReducibleModulus(
                modulus.map(<[u32]>::to_vec).unwrap_or_default(),
            ));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER as u64);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge { p, m }),
        };
        let modulus = match modulus {
            Some(c) => {
                let ok = c.len() == m as usize + 1
                    && c[m as usize] == 1
                    && c.iter().all(|&x| x < p)
                    && is_irreducible(c, p);
                if !ok {
                    return Err(Error::ReducibleModulus(c.to_vec()));
                }
                c.to_vec()
            }
            None => canonical_modulus(p, m),
        };
        Ok(Self::build(p, m, q, modulus))
    }

    /// Shorthand for `Arc::new(Field::new(p, m, None)?)`.
    pub fn shared(p: u32, m: u32) -> Result<Arc<Field>> {
        Field::new(p, m, None).map(Arc::new)
    }

    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Field {
        let reducer = modulus.clone();
        let poly = PolyArith {
            p,
            m,
            modulus: &reducer,
        };
        let order = q - 1;
        // smallest index generating the multiplicative group
        let mut exp = Vec::with_capacity(2 * order as usize);
        for cand in 1..q {
            exp.clear();
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = poly.mul(x, cand);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == order as usize {
                break;
            }
        }
        debug_assert_eq!(exp.len(), order as usize);
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let doubled: Vec<u32> = exp.to_vec();
        exp.extend_from_slice(&doubled);

        let neg: Vec<u32> = (0..q).map(|a| poly.neg(a)).collect();

        let mut field = Field {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            neg,
            tables: None,
            zech: Vec::new(),
        };
        if q <= TABLE_ORDER {
            let n = q as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            for a in 0..q {
                for b in 0..q {
                    let idx = a as usize * n + b as usize;
                    add[idx] = poly.add(a, b) as u16;
                    mul[idx] = field.mul_by_log(a, b) as u16;
                }
            }
            field.tables = Some(Tables { add, mul });
        } else {
            field.zech = (0..order)
                .map(|i| {
                    let s = poly.add(1, field.exp[i as usize]);
                    if s == 0 {
                        ZECH_ZERO
                    } else {
                        field.log[s as usize]
                    }
                })
                .collect();
        }
        field
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Index of the primitive element used for the log tables.
    pub fn primitive_element(&self) -> u32 {
        self.exp[1 % self.exp.len().max(1)]
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        match &self.tables {
            Some(t) => t.add[a as usize * self.q as usize + b as usize] as u32,
            None => self.add_zech(a, b),
        }
    }

    fn add_zech(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let order = self.q - 1;
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        // a + b = a (1 + b/a)
        let d = (lb + order - la) % order;
        match self.zech[d as usize] {
            ZECH_ZERO => 0,
            z => self.exp[(la + z) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        match &self.tables {
            Some(t) => t.mul[a as usize * self.q as usize + b as usize] as u32,
            None => self.mul_by_log(a, b),
        }
    }

    #[inline]
    fn mul_by_log(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        Ok(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.q - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % order)) % order;
        self.exp[l as usize]
    }

    /// Base-p digits of an element, constant coefficient first.
    pub fn coefficients(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    /// Wraps an index as a checked [`FieldElement`].
    pub fn element(self: &Arc<Self>, index: u32) -> Result<FieldElement> {
        if index >= self.q {
            return Err(Error::ElementOutOfRange { index, q: self.q });
        }
        Ok(FieldElement {
            field: Arc::clone(self),
            index,
        })
    }

    /// Same characteristic, degree and modulus.
    pub fn same_as(&self, other: &Field) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// An element tagged with its field, for callers who want checked
/// arithmetic. Hot loops use the raw `u32` methods on [`Field`] instead.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<Field>,
    index: u32,
}

impl FieldElement {
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn wrap(&self, index: u32) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            index,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.wrap(self.field.add(self.index, other.index)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.wrap(self.field.mul(self.index, other.index)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.wrap(self.field.div(self.index, other.index)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.index))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.index)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.index, e))
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.field.same_as(&other.field)
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.index, self.field)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial arithmetic on residues mod the field modulus, used only while
/// building tables.
struct PolyArith<'a> {
    p: u32,
    m: u32,
    modulus: &'a [u32],
}

impl PolyArith<'_> {
    fn digits(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn index(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.index(&s)
    }

    fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.index(&d)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let p = self.p as u64;
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce top-down by the monic modulus
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            for (i, &mc) in self.modulus.iter().enumerate().take(m) {
                let t = deg - m + i;
                prod[t] = (prod[t] + (p - c) * mc as u64) % p;
            }
            prod[deg] = 0;
        }
        let r: Vec<u32> = prod[..m].iter().map(|&x| x as u32).collect();
        self.index(&r)
    }
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    let db = b.len() - 1;
    let p64 = p as u64;
    while r.len() > db {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - db;
            for (i, &bc) in b.iter().enumerate().take(db) {
                r[shift + i] = (r[shift + i] + (p64 - lead) * bc as u64) % p64;
            }
        }
    }
    r.into_iter().map(|x| x as u32).collect()
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most half of `f`'s degree.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g: Vec<u32> = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                g.push((v % p as u64) as u32);
                v /= p as u64;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically least monic irreducible polynomial of degree `m`.
pub fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for low in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut v = low;
        for _ in 0..m {
            f.push((v % p as u64) as u32);
            v /= p as u64;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
