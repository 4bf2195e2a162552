//! Built-in moduli. Each entry is a Conway polynomial (monic, primitive, and
//! compatible with the entries of the same characteristic for dividing degrees),
//! coefficients low degree first. Pairs not listed fall back to the smallest
//! primitive polynomial.

use super::poly;

const TABLE: &[(u32, usize, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (
        2,
        18,
        &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1],
    ),
    (
        2,
        24,
        &[
            1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1,
        ],
    ),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 6, &[2, 2, 1, 0, 2, 0, 1]),
    (3, 8, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1]),
    (3, 12, &[2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1]),
    (5, 1, &[3, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (5, 6, &[2, 0, 1, 4, 1, 0, 1]),
    (5, 8, &[2, 4, 3, 0, 1, 0, 0, 0, 1]),
    (7, 1, &[4, 1]),
    (7, 2, &[3, 6, 1]),
    (7, 3, &[4, 0, 6, 1]),
    (7, 6, &[3, 6, 4, 5, 1, 0, 1]),
];

pub(crate) fn table_entry(p: u32, d: usize) -> Option<&'static [u32]> {
    TABLE
        .iter()
        .find(|&&(tp, td, _)| tp == p && td == d)
        .map(|&(_, _, m)| m)
}

/// The canonical modulus for F_{p^d}.
pub(crate) fn canonical(p: u32, d: usize) -> Vec<u32> {
    table_entry(p, d)
        .map(<[u32]>::to_vec)
        .unwrap_or_else(|| poly::smallest_primitive(p, d))
}

#[cfg(test)]
pub(crate) fn entries() -> impl Iterator<Item = (u32, usize, &'static [u32])> {
    TABLE.iter().copied()
}
