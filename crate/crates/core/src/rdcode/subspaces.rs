//! Indexed enumeration of t-dimensional subspaces of F_q^n in reduced row
//! echelon form. Subspaces are ordered by pivot set (lexicographic), then by
//! the free entries read as a base-q number, most significant first.

/// Gaussian binomial [n, t]_q, saturating.
pub fn gaussian_binomial(n: usize, t: usize, q: u64) -> u128 {
    if t > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..t {
        let a = q.saturating_pow((n - i) as u32).saturating_sub(1);
        let b = q.saturating_pow((i + 1) as u32) - 1;
        num = num.saturating_mul(a);
        den = den.saturating_mul(b);
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, Debug)]
struct PivotBlock {
    pivots: Vec<usize>,
    /// (row, col) of every free entry, most significant first.
    free: Vec<(usize, usize)>,
    offset: u64,
    count: u64,
}

/// All t-subspaces of F_q^n, addressable by index.
#[derive(Clone, Debug)]
pub struct SubspaceIndex {
    n: usize,
    t: usize,
    q: usize,
    blocks: Vec<PivotBlock>,
    total: u64,
}

impl SubspaceIndex {
    pub fn new(n: usize, t: usize, q: usize) -> Self {
        let mut blocks = Vec::new();
        let mut offset = 0u64;
        let mut pivots: Vec<usize> = (0..t).collect();
        if t <= n {
            loop {
                let mut free = Vec::new();
                for (r, &p) in pivots.iter().enumerate() {
                    for c in p + 1..n {
                        if !pivots.contains(&c) {
                            free.push((r, c));
                        }
                    }
                }
                let count = (q as u64).saturating_pow(free.len() as u32);
                blocks.push(PivotBlock {
                    pivots: pivots.clone(),
                    free,
                    offset,
                    count,
                });
                offset = offset.saturating_add(count);
                if !next_combination(&mut pivots, n) {
                    break;
                }
            }
        }
        SubspaceIndex {
            n,
            t,
            q,
            blocks,
            total: offset,
        }
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Writes the t x n RREF generator matrix of subspace `idx` as digits
    /// 0..q (positions into the sorted F_q element list).
    pub fn decode(&self, idx: u64, out: &mut [usize]) {
        let digits: Vec<usize> = (0..self.q).collect();
        self.decode_mapped(idx, &digits, out);
    }

    /// Like [`decode`](Self::decode), mapping each digit through `digits`.
    pub fn decode_mapped<T: Copy>(&self, idx: u64, digits: &[T], out: &mut [T]) {
        let n = self.n;
        debug_assert_eq!(out.len(), self.t * n);
        let b = self.blocks.partition_point(|b| b.offset + b.count <= idx);
        let block = &self.blocks[b];
        out.iter_mut().for_each(|x| *x = digits[0]);
        for (r, &p) in block.pivots.iter().enumerate() {
            out[r * n + p] = digits[1];
        }
        let mut rest = idx - block.offset;
        for &(r, c) in block.free.iter().rev() {
            out[r * n + c] = digits[(rest % self.q as u64) as usize];
            rest /= self.q as u64;
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let t = c.len();
    for i in (0..t).rev() {
        if c[i] < n - t + i {
            c[i] += 1;
            for j in i + 1..t {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
