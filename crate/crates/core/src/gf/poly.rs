//! Dense polynomials over a prime field F_p, used to validate moduli and to
//! find primitive elements before the log tables exist.

/// Coefficients low degree first. Not necessarily trimmed.
pub(crate) type Poly = Vec<u32>;

fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo `m` (m need not be monic but must be nonzero).
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Poly {
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    let dm = degree(m).expect("zero modulus");
    let lead_inv = inv_mod(m[dm], p) as u64;
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = r[dr] as u64 * lead_inv % p as u64;
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate().take(dm + 1) {
            let sub = factor * c as u64 % p as u64;
            let slot = &mut r[i + shift];
            *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut r: Poly = out.into_iter().map(|c| c as u32).collect();
    trim(&mut r);
    r
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Poly {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn pow_poly_mod(a: &[u32], mut exp: u128, m: &[u32], p: u32) -> Poly {
    let mut acc: Poly = vec![1];
    let mut base = rem(a, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &base, m, p);
        }
        exp >>= 1;
        if exp > 0 {
            base = mul_mod(&base, &base, m, p);
        }
    }
    rem(&acc, m, p)
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let len = a.len().max(b.len());
    let mut r: Poly = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut r);
    r
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut x: Poly = a.to_vec();
    let mut y: Poly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == vec![n]
}

/// Rabin's irreducibility test for a polynomial of degree >= 1 over F_p.
pub(crate) fn is_irreducible(m: &[u32], p: u32) -> bool {
    let Some(d) = degree(m) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let t: Poly = vec![0, 1];
    // t^(p^k) mod m for successive k by repeated p-th powering.
    let frob_iter = |k: usize| {
        let mut x = t.clone();
        for _ in 0..k {
            x = pow_poly_mod(&x, p as u128, m, p);
        }
        x
    };
    let full = frob_iter(d);
    if !sub(&full, &t, p).is_empty() {
        return false;
    }
    for r in prime_factors(d as u64) {
        let x = frob_iter(d / r as usize);
        let g = gcd(&sub(&x, &t, p), m, p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Whether `t` has multiplicative order p^d - 1 modulo the irreducible `m`.
pub(crate) fn is_primitive(m: &[u32], p: u32) -> bool {
    order_is_full(&[0, 1], m, p)
}

/// Whether the residue `a` has order p^d - 1 in F_p[t]/(m), m irreducible of degree d.
pub(crate) fn order_is_full(a: &[u32], m: &[u32], p: u32) -> bool {
    let d = degree(m).unwrap_or(0) as u32;
    let group = (p as u64).pow(d) - 1;
    let ar = rem(a, m, p);
    if ar.is_empty() {
        return false;
    }
    prime_factors(group)
        .into_iter()
        .all(|r| pow_poly_mod(&ar, (group / r) as u128, m, p) != vec![1])
}

/// Lexicographically smallest monic primitive polynomial of degree `d` over F_p,
/// ordering candidates by their low-order coefficients read as a base-p number.
pub(crate) fn smallest_primitive(p: u32, d: usize) -> Poly {
    let count = (p as u64).pow(d as u32);
    for code in 0..count {
        let mut m: Poly = Vec::with_capacity(d + 1);
        let mut c = code;
        for _ in 0..d {
            m.push((c % p as u64) as u32);
            c /= p as u64;
        }
        m.push(1);
        if m[0] == 0 {
            continue;
        }
        if is_irreducible(&m, p) && is_primitive(&m, p) {
            return m;
        }
    }
    unreachable!("a primitive polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rabin_small_cases() {
        // t^2 + 1 over F_3 is irreducible, over F_5 it is not (2^2 = -1).
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
        // t^4 + t + 1 irreducible over F_2; t^4 + 1 = (t+1)^4 is not.
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
        // t^4 + t^3 + t^2 + t + 1 is irreducible but not primitive over F_2.
        assert!(is_irreducible(&[1, 1, 1, 1, 1], 2));
        assert!(!is_primitive(&[1, 1, 1, 1, 1], 2));
    }

    #[test]
    fn rabin_matches_brute_force_degree_three_over_f3() {
        // A cubic is irreducible iff it has no root.
        for code in 0..27u32 {
            let m = vec![code % 3, code / 3 % 3, code / 9, 1];
            let has_root = (0..3u32).any(|x| {
                let v = m.iter().rev().fold(0u32, |acc, &c| (acc * x + c) % 3);
                v == 0
            });
            assert_eq!(is_irreducible(&m, 3), !has_root, "{m:?}");
        }
    }

    #[test]
    fn smallest_primitive_is_primitive() {
        let m = smallest_primitive(3, 4);
        assert!(is_irreducible(&m, 3) && is_primitive(&m, 3));
    }
}
