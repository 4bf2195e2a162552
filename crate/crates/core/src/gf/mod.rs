//! Exact arithmetic in F_q and F_{q^n} through discrete-log tables.
//!
//! A field is described by a [`FieldSpec`]: a prime `p`, the degree `e` of F_q
//! over F_p, the degree `n` of F_{q^n} over F_q, and a monic irreducible modulus
//! of degree `e*n` over F_p. Elements are [`Fe`] handles whose integer value is
//! the base-p, little-endian coefficient vector of the element in the
//! polynomial basis `1, t, t^2, ...` of F_p[t]/(modulus). That integer is also
//! the serialized form, so files never depend on table layout.
//!
//! Multiplication, inversion, powers and Frobenius go through log/antilog
//! tables; addition is XOR in characteristic 2 and a Zech-logarithm lookup
//! otherwise.

mod moduli;
pub(crate) mod poly;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Default cap on the field size Q accepted by [`FieldCtx::build`].
pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;

const NO_LOG: u32 = u32::MAX;

/// Largest value of a coordinate-table chunk (digits grouped so p^c <= this).
const COORD_CHUNK_LIMIT: u64 = 4096;

/// A field element, valid only together with the [`FieldCtx`] it came from.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// The serialized integer form of this element.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Description of F_{q^n}, q = p^e.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub n: u32,
    /// Coefficients over F_p, low degree first, of a monic polynomial of degree e*n.
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    /// Spec using the built-in canonical modulus for (p, e*n).
    pub fn canonical(p: u32, e: u32, n: u32) -> Result<Self> {
        check_params(p, e, n)?;
        let modulus = moduli::canonical(p, (e * n) as usize);
        Ok(FieldSpec { p, e, n, modulus })
    }

    /// Spec for F_{q^n} where `q` is a prime power, with the canonical modulus.
    pub fn for_q(q: u64, n: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidSpec(format!("{q} is not a prime power")))?;
        Self::canonical(p, e, n)
    }

    pub fn degree(&self) -> usize {
        (self.e * self.n) as usize
    }

    pub fn q(&self) -> u128 {
        (self.p as u128).pow(self.e)
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.e * self.n)
    }
}

fn check_params(p: u32, e: u32, n: u32) -> Result<()> {
    if !poly::is_prime(p as u64) {
        return Err(Error::InvalidSpec(format!("p = {p} is not prime")));
    }
    if e == 0 || n == 0 {
        return Err(Error::InvalidSpec("e and n must be at least 1".into()));
    }
    if (e as u64) * (n as u64) > 64 {
        return Err(Error::InvalidSpec("extension degree too large".into()));
    }
    Ok(())
}

/// Decompose `q` as p^e with p prime.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let factors = poly::prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p as u32, e))
}

/// Immutable arithmetic context for F_Q, Q = q^n.
pub struct FieldCtx {
    spec: FieldSpec,
    p: u32,
    q: u32,
    n: usize,
    degree: usize,
    order: u32,
    generator: Fe,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[k] = log(1 + g^k), odd characteristic only.
    zech: Vec<u32>,
    half: u32,
    /// q^i mod (Q - 1) for i < n.
    qpow: Vec<u64>,
    basis: Vec<Fe>,
    dual_basis: Vec<Fe>,
    chunk_base: u32,
    coord_tables: Vec<Vec<Fe>>,
    fq: Vec<Fe>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("q", &self.q)
            .field("n", &self.n)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl FieldCtx {
    /// Build the context with the default size cap.
    pub fn build(spec: FieldSpec) -> Result<Arc<Self>> {
        Self::build_with_cap(spec, DEFAULT_TABLE_CAP)
    }

    /// Canonical F_{q^n}.
    pub fn for_q(q: u64, n: u32) -> Result<Arc<Self>> {
        Self::build(FieldSpec::for_q(q, n)?)
    }

    pub fn build_with_cap(spec: FieldSpec, cap: u64) -> Result<Arc<Self>> {
        check_params(spec.p, spec.e, spec.n)?;
        let p = spec.p;
        let d = spec.degree();
        let m = &spec.modulus;
        if m.len() != d + 1 || poly::degree(m) != Some(d) {
            return Err(Error::ModulusDegree {
                got: poly::degree(m).unwrap_or(0),
                expected: d,
            });
        }
        if m[d] != 1 {
            return Err(Error::InvalidSpec("modulus must be monic".into()));
        }
        if m.iter().any(|&c| c >= p) {
            return Err(Error::InvalidSpec(
                "modulus coefficient not reduced mod p".into(),
            ));
        }
        let order = spec.order();
        if order > cap as u128 || order > u32::MAX as u128 {
            return Err(Error::FieldTooLarge {
                size: order.min(u64::MAX as u128) as u64,
                cap,
            });
        }
        if !poly::is_irreducible(m, p) {
            return Err(Error::ReducibleModulus { p });
        }
        let order = order as u32;
        let group = (order - 1) as usize;

        let (generator, exp) = power_table(m, p, d, order);
        let mut log = vec![NO_LOG; order as usize];
        for (k, &x) in exp.iter().enumerate() {
            log[x as usize] = k as u32;
        }
        let zech = if p == 2 {
            Vec::new()
        } else {
            exp.iter()
                .map(|&x| {
                    let plus_one = if x % p == p - 1 { x - (p - 1) } else { x + 1 };
                    log[plus_one as usize]
                })
                .collect()
        };
        let q = p.pow(spec.e);
        let n = spec.n as usize;
        let qpow: Vec<u64> = (0..n)
            .map(|i| poly::pow_mod(q as u64, i as u64, group.max(1) as u64))
            .collect();

        let mut ctx = FieldCtx {
            half: if p == 2 { 0 } else { (order - 1) / 2 },
            spec,
            p,
            q,
            n,
            degree: d,
            order,
            generator,
            exp,
            log,
            zech,
            qpow,
            basis: Vec::new(),
            dual_basis: Vec::new(),
            chunk_base: 1,
            coord_tables: Vec::new(),
            fq: Vec::new(),
        };
        ctx.init_basis()?;
        ctx.fq = ctx.subfield_elements(1);
        Ok(Arc::new(ctx))
    }

    fn init_basis(&mut self) -> Result<()> {
        let n = self.n;
        self.basis = (0..n).map(|i| self.exp_of(i as u64)).collect();
        let mut gram = vec![Fe::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                gram[i * n + j] = self.tr(self.mul(self.basis[i], self.basis[j]));
            }
        }
        let inv = linalg::inverse(self, &gram, n)
            .ok_or_else(|| Error::InvalidSpec("power basis is not F_q-independent".into()))?;
        self.dual_basis = (0..n)
            .map(|j| {
                (0..n).fold(Fe::ZERO, |acc, i| {
                    self.add(acc, self.mul(inv[i * n + j], self.basis[i]))
                })
            })
            .collect();

        let p = self.p as u64;
        let mut c = 1usize;
        while c < self.degree && p.pow(c as u32 + 1) <= COORD_CHUNK_LIMIT {
            c += 1;
        }
        let base = p.pow(c as u32);
        self.chunk_base = base as u32;
        let chunks = self.degree.div_ceil(c);
        let mut tables = Vec::with_capacity(chunks);
        for ch in 0..chunks {
            let scale = p.pow((c * ch) as u32);
            let values = (self.order as u64 / scale).min(base);
            let mut table = Vec::with_capacity(values as usize * n);
            for v in 0..values {
                let x = Fe((v * scale) as u32);
                for j in 0..n {
                    table.push(self.tr(self.mul(x, self.dual_basis[j])));
                }
            }
            tables.push(table);
        }
        self.coord_tables = tables;
        Ok(())
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Degree of the field over F_q.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree over F_p.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The field size Q.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// The fixed primitive element (smallest primitive index).
    pub fn generator(&self) -> Fe {
        self.generator
    }

    /// Whether two contexts describe the same field model.
    pub fn same(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.spec == other.spec
    }

    /// Validate an externally supplied element index.
    pub fn elem(&self, index: u64) -> Result<Fe> {
        if index >= self.order as u64 {
            return Err(Error::ElementOutOfRange {
                index,
                order: self.order as u64,
            });
        }
        Ok(Fe(index as u32))
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> Fe {
        Fe(k.rem_euclid(self.p as i64) as u32)
    }

    /// Discrete log base the generator; `None` for zero.
    pub fn log(&self, a: Fe) -> Option<u32> {
        match self.log[a.0 as usize] {
            NO_LOG => None,
            l => Some(l),
        }
    }

    /// g^k.
    pub fn exp_of(&self, k: u64) -> Fe {
        Fe(self.exp[(k % (self.order as u64 - 1).max(1)) as usize])
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let group = self.order - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let diff = if lb >= la { lb - la } else { lb + group - la };
        let z = self.zech[diff as usize];
        if z == NO_LOG {
            return Fe::ZERO;
        }
        let s = la as u64 + z as u64;
        Fe(self.exp[(s % group as u64) as usize])
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        let group = self.order - 1;
        let s = self.log[a.0 as usize] + self.half;
        Fe(self.exp[(if s >= group { s - group } else { s }) as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        let group = self.order - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        Fe(self.exp[(if s >= group { s - group } else { s }) as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nz(a))
    }

    /// Inverse of an element known to be nonzero.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Fe) -> Fe {
        debug_assert!(!a.is_zero());
        let group = self.order - 1;
        let l = self.log[a.0 as usize];
        Fe(self.exp[(if l == 0 { 0 } else { group - l }) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^k for a nonnegative exponent (0^0 = 1).
    pub fn pow(&self, a: Fe, k: u128) -> Fe {
        if k == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let group = (self.order - 1) as u128;
        let l = self.log[a.0 as usize] as u128;
        Fe(self.exp[((l * (k % group)) % group) as usize])
    }

    /// a^(q^i); `i` is reduced mod n. Zero maps to zero.
    pub fn frobenius(&self, a: Fe, i: i64) -> Fe {
        self.frob(a, i.rem_euclid(self.n as i64) as usize)
    }

    /// a^(q^r) for 0 <= r < n.
    #[inline]
    pub(crate) fn frob(&self, a: Fe, r: usize) -> Fe {
        if a.0 == 0 || r == 0 {
            return a;
        }
        let group = (self.order - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Fe(self.exp[((l * self.qpow[r]) % group) as usize])
    }

    /// Trace from F_{q^n} to F_q.
    #[inline]
    pub fn tr(&self, a: Fe) -> Fe {
        (1..self.n).fold(a, |acc, i| self.add(acc, self.frob(a, i)))
    }

    fn check_divisor(&self, s: usize) -> Result<()> {
        if s == 0 || !self.n.is_multiple_of(s) {
            return Err(Error::NotADivisor { sub: s, n: self.n });
        }
        Ok(())
    }

    /// Relative trace from F_{q^n} to F_{q^s}.
    pub fn trace(&self, a: Fe, s: usize) -> Result<Fe> {
        self.check_divisor(s)?;
        let t = (0..self.n / s).fold(Fe::ZERO, |acc, i| self.add(acc, self.frob(a, s * i)));
        debug_assert!(self.in_subfield(t, s));
        Ok(t)
    }

    /// Relative norm from F_{q^n} to F_{q^s}.
    pub fn norm(&self, a: Fe, s: usize) -> Result<Fe> {
        self.check_divisor(s)?;
        let t = (0..self.n / s).fold(Fe::ONE, |acc, i| self.mul(acc, self.frob(a, s * i)));
        debug_assert!(self.in_subfield(t, s));
        Ok(t)
    }

    /// Whether a^(q^s) = a.
    pub fn in_subfield(&self, a: Fe, s: usize) -> bool {
        self.frob(a, s % self.n) == a
    }

    /// All x with x^m = a, sorted by index.
    pub fn solve_power(&self, m: u64, a: Fe) -> Result<Vec<Fe>> {
        let la = self.log(a).ok_or(Error::ZeroPower)? as u64;
        let group = (self.order - 1) as u64;
        let g = gcd(m % group, group);
        if !la.is_multiple_of(g) {
            return Ok(Vec::new());
        }
        let modulus = group / g;
        let t0 = if modulus == 1 {
            0
        } else {
            let inv = mod_inverse((m / g) % modulus, modulus).expect("coprime after gcd division");
            (la / g) % modulus * inv % modulus
        };
        let mut out: Vec<Fe> = (0..g).map(|k| self.exp_of(t0 + k * modulus)).collect();
        out.sort();
        Ok(out)
    }

    /// Every element in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(Fe)
    }

    /// Elements of F_{q^gcd(s,n)} in index order.
    pub fn subfield_elements(&self, s: usize) -> Vec<Fe> {
        let s = gcd(s as u64, self.n as u64) as usize;
        let sub_order = (self.q as u64).pow(s as u32);
        let step = (self.order as u64 - 1) / (sub_order - 1).max(1);
        let mut out: Vec<Fe> = std::iter::once(Fe::ZERO)
            .chain((0..sub_order - 1).map(|k| self.exp_of(k * step)))
            .collect();
        out.sort();
        out
    }

    /// Elements of F_q in index order.
    pub fn fq_elements(&self) -> &[Fe] {
        &self.fq
    }

    /// The F_q-basis g^0, ..., g^(n-1) of F_{q^n}.
    pub fn basis(&self) -> &[Fe] {
        &self.basis
    }

    /// F_q-coordinates of x in the power basis, written into `out[..n]`.
    #[inline]
    pub fn coords_into(&self, x: Fe, out: &mut [Fe]) {
        let n = self.n;
        let base = self.chunk_base;
        let mut rest = x.0;
        let first = (rest % base) as usize;
        rest /= base;
        out[..n].copy_from_slice(&self.coord_tables[0][first * n..first * n + n]);
        let mut ch = 1;
        while rest != 0 {
            let v = (rest % base) as usize;
            rest /= base;
            let row = &self.coord_tables[ch][v * n..v * n + n];
            for (o, &r) in out.iter_mut().zip(row) {
                *o = self.add(*o, r);
            }
            ch += 1;
        }
    }

    pub fn coords(&self, x: Fe) -> Vec<Fe> {
        let mut out = vec![Fe::ZERO; self.n];
        self.coords_into(x, &mut out);
        out
    }

    /// Inverse of [`coords`](Self::coords).
    pub fn from_coords(&self, c: &[Fe]) -> Fe {
        c.iter()
            .zip(&self.basis)
            .fold(Fe::ZERO, |acc, (&ci, &b)| self.add(acc, self.mul(ci, b)))
    }

    /// Digits of an element over F_p, low first.
    pub fn digits(&self, a: Fe) -> Vec<u32> {
        let mut r = a.0;
        (0..self.degree)
            .map(|_| {
                let d = r % self.p;
                r /= self.p;
                d
            })
            .collect()
    }

    /// Divisors s of n (each giving the subfield F_{q^s}) with the subfield size.
    pub fn subfield_lattice(&self) -> Vec<(usize, u64)> {
        (1..=self.n)
            .filter(|s| self.n.is_multiple_of(*s))
            .map(|s| (s, (self.q as u64).pow(s as u32)))
            .collect()
    }
}

/// Builds the antilog table g^0, g^1, ... and returns the generator used.
fn power_table(m: &[u32], p: u32, d: usize, order: u32) -> (Fe, Vec<u32>) {
    let group = (order - 1) as usize;
    let to_index = |digits: &[u32]| digits.iter().rev().fold(0u32, |acc, &c| acc * p + c);
    let mut exp = Vec::with_capacity(group.max(1));
    if d >= 2 && poly::is_primitive(m, p) {
        // t generates; multiplication by t is a shift followed by reduction.
        let mut cur = vec![0u32; d];
        cur[0] = 1;
        for _ in 0..group {
            exp.push(to_index(&cur));
            let top = cur[d - 1];
            for i in (1..d).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..d {
                    cur[i] = (cur[i] + (p - top) * m[i] % p) % p;
                }
            }
        }
        return (Fe(p), exp);
    }

    let digits_of = |mut idx: u32| -> Vec<u32> {
        (0..d)
            .map(|_| {
                let c = idx % p;
                idx /= p;
                c
            })
            .collect()
    };
    let gen_index = (1..order)
        .find(|&idx| poly::order_is_full(&digits_of(idx), m, p))
        .expect("irreducible modulus yields a field with a primitive element");
    let g = digits_of(gen_index);
    // Columns of multiplication by g in the basis t^k.
    let cols: Vec<Vec<u32>> = (0..d)
        .map(|k| {
            let mut tk = vec![0u32; k + 1];
            tk[k] = 1;
            let mut r = poly::mul_mod(&tk, &g, m, p);
            r.resize(d, 0);
            r
        })
        .collect();
    let mut cur = vec![0u32; d];
    cur[0] = 1;
    let mut next = vec![0u64; d];
    for _ in 0..group {
        exp.push(to_index(&cur));
        next.iter_mut().for_each(|v| *v = 0);
        for (k, &c) in cur.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (v, &col) in next.iter_mut().zip(&cols[k]) {
                *v += c as u64 * col as u64;
            }
        }
        for (c, &v) in cur.iter_mut().zip(&next) {
            *c = (v % p as u64) as u32;
        }
    }
    (Fe(gen_index), exp)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests;
