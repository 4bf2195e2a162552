//! The algebra L_{n,q} of q-polynomials sum_i a_i x^{q^i} over F_{q^n},
//! taken modulo x^{q^n} - x.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};
use crate::linalg;

/// A q-polynomial with exactly n coefficients a_0..a_{n-1}.
#[derive(Clone)]
pub struct LinPoly {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<Fe>,
}

impl PartialEq for LinPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.ctx.same(&other.ctx)
    }
}

impl Eq for LinPoly {}

impl fmt::Debug for LinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinPoly{:?}", self.coeffs)
    }
}

impl serde::Serialize for LinPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl LinPoly {
    pub fn new(ctx: &Arc<FieldCtx>, coeffs: Vec<Fe>) -> Result<Self> {
        if coeffs.len() != ctx.n() {
            return Err(Error::CoefficientCount {
                expected: ctx.n(),
                got: coeffs.len(),
            });
        }
        for c in &coeffs {
            ctx.elem(c.index() as u64)?;
        }
        Ok(LinPoly {
            ctx: Arc::clone(ctx),
            coeffs,
        })
    }

    /// From serialized element indices.
    pub fn from_indices(ctx: &Arc<FieldCtx>, idx: &[u64]) -> Result<Self> {
        let coeffs = idx
            .iter()
            .map(|&i| ctx.elem(i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, coeffs)
    }

    pub(crate) fn from_raw(ctx: &Arc<FieldCtx>, coeffs: Vec<Fe>) -> Self {
        debug_assert_eq!(coeffs.len(), ctx.n());
        LinPoly {
            ctx: Arc::clone(ctx),
            coeffs,
        }
    }

    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        Self::from_raw(ctx, vec![Fe::ZERO; ctx.n()])
    }

    /// The identity map x.
    pub fn identity(ctx: &Arc<FieldCtx>) -> Self {
        Self::monomial(ctx, Fe::ONE, 0)
    }

    /// a * x^{q^i}, with i reduced mod n.
    pub fn monomial(ctx: &Arc<FieldCtx>, a: Fe, i: usize) -> Self {
        let mut c = vec![Fe::ZERO; ctx.n()];
        c[i % ctx.n()] = a;
        Self::from_raw(ctx, c)
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn indices(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.index()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest i with a_i != 0; `None` for the zero polynomial.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn check(&self, other: &LinPoly) -> Result<()> {
        if self.ctx.same(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn eval(&self, x: Fe) -> Fe {
        eval_raw(&self.ctx, &self.coeffs, x)
    }

    pub fn add(&self, other: &LinPoly) -> Result<LinPoly> {
        self.check(other)?;
        let c = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.ctx.add(a, b))
            .collect();
        Ok(Self::from_raw(&self.ctx, c))
    }

    pub fn sub(&self, other: &LinPoly) -> Result<LinPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LinPoly {
        let c = self.coeffs.iter().map(|&a| self.ctx.neg(a)).collect();
        Self::from_raw(&self.ctx, c)
    }

    /// (lambda f)(x) = lambda * f(x).
    pub fn scale(&self, lambda: Fe) -> LinPoly {
        let c = self
            .coeffs
            .iter()
            .map(|&a| self.ctx.mul(lambda, a))
            .collect();
        Self::from_raw(&self.ctx, c)
    }

    /// self ∘ g.
    pub fn compose(&self, g: &LinPoly) -> Result<LinPoly> {
        self.check(g)?;
        let mut out = vec![Fe::ZERO; self.ctx.n()];
        compose_raw(&self.ctx, &self.coeffs, &g.coeffs, &mut out);
        let h = Self::from_raw(&self.ctx, out);
        #[cfg(debug_assertions)]
        {
            let x = self.ctx.generator();
            debug_assert_eq!(h.eval(x), self.eval(g.eval(x)));
        }
        Ok(h)
    }

    /// Adjoint with respect to the trace form: a_i^{q^{n-i}} moves to position n - i.
    pub fn adjoint(&self) -> LinPoly {
        let n = self.ctx.n();
        let mut c = vec![Fe::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let j = (n - i) % n;
            c[j] = self.ctx.frob(a, j);
        }
        Self::from_raw(&self.ctx, c)
    }

    /// x^{q^i} ∘ self ∘ x^{q^j}.
    pub fn twist(&self, i: usize, j: usize) -> LinPoly {
        let n = self.ctx.n();
        let (i, j) = (i % n, j % n);
        let mut c = vec![Fe::ZERO; n];
        for (k, &a) in self.coeffs.iter().enumerate() {
            c[(k + i + j) % n] = self.ctx.frob(a, i);
        }
        Self::from_raw(&self.ctx, c)
    }

    /// The non-degenerate form b(f, g) = Tr(sum_i a_i b_i).
    pub fn bilinear(&self, g: &LinPoly) -> Result<Fe> {
        self.check(g)?;
        Ok(bilinear_raw(&self.ctx, &self.coeffs, &g.coeffs))
    }

    pub fn to_matrix(&self) -> BaseMatrix {
        let ctx = &self.ctx;
        let n = ctx.n();
        let mut entries = vec![Fe::ZERO; n * n];
        let mut col = vec![Fe::ZERO; n];
        for (j, &b) in ctx.basis().iter().enumerate() {
            ctx.coords_into(self.eval(b), &mut col);
            for i in 0..n {
                entries[i * n + j] = col[i];
            }
        }
        BaseMatrix { n, entries }
    }

    /// Rank as an F_q-linear map of F_{q^n}.
    pub fn rank(&self) -> usize {
        let n = self.ctx.n();
        let values: Vec<Fe> = self.ctx.basis().iter().map(|&b| self.eval(b)).collect();
        let mut scratch = vec![Fe::ZERO; n * n];
        rank_of_values(&self.ctx, &values, &mut scratch)
    }

    /// An F_q-basis of the kernel in reduced echelon form (coordinates in the power basis).
    pub fn kernel(&self) -> Vec<Fe> {
        let m = self.to_matrix();
        let n = m.n;
        linalg::nullspace(&self.ctx, &m.entries, n, n)
            .iter()
            .map(|v| self.ctx.from_coords(v))
            .collect()
    }

    /// Every x with f(x) = b, sorted by index.
    pub fn solve_affine(&self, b: Fe) -> Vec<Fe> {
        let ctx = &self.ctx;
        let m = self.to_matrix();
        let n = m.n;
        let Some(x0) = linalg::solve(ctx, &m.entries, n, n, &ctx.coords(b)) else {
            return Vec::new();
        };
        let particular = ctx.from_coords(&x0);
        let kernel = self.kernel();
        let fq = ctx.fq_elements();
        let q = fq.len();
        let total = q.pow(kernel.len() as u32);
        let mut out: Vec<Fe> = (0..total)
            .map(|mut code| {
                kernel.iter().fold(particular, |acc, &k| {
                    let lambda = fq[code % q];
                    code /= q;
                    ctx.add(acc, ctx.mul(lambda, k))
                })
            })
            .collect();
        out.sort();
        out
    }

    /// F_q-coordinates of the coefficient vector: n blocks of n, block i for a_i.
    pub fn fq_coords(&self) -> Vec<Fe> {
        let n = self.ctx.n();
        let mut out = vec![Fe::ZERO; n * n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            self.ctx.coords_into(a, &mut out[i * n..i * n + n]);
        }
        out
    }

    pub fn from_fq_coords(ctx: &Arc<FieldCtx>, v: &[Fe]) -> LinPoly {
        let n = ctx.n();
        let c = (0..n)
            .map(|i| ctx.from_coords(&v[i * n..i * n + n]))
            .collect();
        Self::from_raw(ctx, c)
    }
}

/// The matrix of a q-polynomial on the power basis: column j holds the
/// F_q-coordinates of f(g^j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseMatrix {
    pub n: usize,
    /// Row-major n x n entries in F_q.
    pub entries: Vec<Fe>,
}

impl BaseMatrix {
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.entries[i * self.n + j]
    }

    /// Matrix-vector product on coordinate vectors.
    pub fn apply(&self, ctx: &FieldCtx, v: &[Fe]) -> Vec<Fe> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(Fe::ZERO, |acc, j| {
                    ctx.add(acc, ctx.mul(self.get(i, j), v[j]))
                })
            })
            .collect()
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        linalg::rank(ctx, &self.entries, self.n, self.n)
    }
}

#[inline]
pub(crate) fn eval_raw(ctx: &FieldCtx, coeffs: &[Fe], x: Fe) -> Fe {
    coeffs.iter().enumerate().fold(Fe::ZERO, |acc, (i, &a)| {
        if a.is_zero() {
            acc
        } else {
            ctx.add(acc, ctx.mul(a, ctx.frob(x, i)))
        }
    })
}

/// c_k = sum_{i+j = k mod n} a_i b_j^{q^i}.
pub(crate) fn compose_raw(ctx: &FieldCtx, a: &[Fe], b: &[Fe], out: &mut [Fe]) {
    let n = a.len();
    out.iter_mut().for_each(|c| *c = Fe::ZERO);
    for (i, &ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let k = (i + j) % n;
            out[k] = ctx.add(out[k], ctx.mul(ai, ctx.frob(bj, i)));
        }
    }
}

pub(crate) fn bilinear_raw(ctx: &FieldCtx, a: &[Fe], b: &[Fe]) -> Fe {
    let s = a
        .iter()
        .zip(b)
        .fold(Fe::ZERO, |acc, (&x, &y)| ctx.add(acc, ctx.mul(x, y)));
    ctx.tr(s)
}

/// Rank over F_q of the map whose values on the power basis are `values`.
/// `scratch` must hold n*n entries.
#[inline]
pub(crate) fn rank_of_values(ctx: &FieldCtx, values: &[Fe], scratch: &mut [Fe]) -> usize {
    let n = ctx.n();
    for (j, &v) in values.iter().enumerate() {
        ctx.coords_into(v, &mut scratch[j * n..j * n + n]);
    }
    linalg::rank_in_place(ctx, scratch, n, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_poly(ctx: &Arc<FieldCtx>, rng: &mut ChaCha8Rng) -> LinPoly {
        let c = (0..ctx.n())
            .map(|_| Fe(rng.gen_range(0..ctx.order())))
            .collect();
        LinPoly::from_raw(ctx, c)
    }

    fn root_c(ctx: &FieldCtx) -> Fe {
        ctx.subfield_elements(2)
            .into_iter()
            .find(|&c| ctx.sub(ctx.add(ctx.mul(c, c), c), Fe::ONE).is_zero())
            .unwrap()
    }

    #[test]
    fn eval_examples() {
        let ctx = FieldCtx::for_q(3, 6).unwrap();
        let id = LinPoly::identity(&ctx);
        assert_eq!(id.eval(Fe(77)), Fe(77));
        let f = LinPoly::monomial(&ctx, Fe::ONE, 1).sub(&id).unwrap();
        assert_eq!(f.eval(Fe::ONE), Fe::ZERO);

        let c = root_c(&ctx);
        let trinomial = LinPoly::new(&ctx, vec![Fe(0), Fe(1), Fe(0), Fe(1), Fe(0), c]).unwrap();
        let expected = ctx.add(ctx.from_int(2), c);
        assert_eq!(trinomial.eval(Fe::ONE), expected);
        // cross-check against the base matrix acting on coords(1)
        let m = trinomial.to_matrix();
        let image = m.apply(&ctx, &ctx.coords(Fe::ONE));
        assert_eq!(ctx.from_coords(&image), expected);
    }

    #[test]
    fn add_and_scale() {
        let ctx = FieldCtx::for_q(4, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let f = random_poly(&ctx, &mut rng);
            assert!(f.add(&f.neg()).unwrap().is_zero());
            assert!(f.scale(Fe::ZERO).is_zero());
            let lambda = Fe(rng.gen_range(0..ctx.order()));
            let x = Fe(rng.gen_range(0..ctx.order()));
            assert_eq!(f.scale(lambda).eval(x), ctx.mul(lambda, f.eval(x)));
        }
    }

    #[test]
    fn compose_examples() {
        let ctx = FieldCtx::for_q(2, 6).unwrap();
        let xq = LinPoly::monomial(&ctx, Fe::ONE, 1);
        assert_eq!(
            xq.compose(&xq).unwrap(),
            LinPoly::monomial(&ctx, Fe::ONE, 2)
        );
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = random_poly(&ctx, &mut rng);
        assert_eq!(f.compose(&LinPoly::identity(&ctx)).unwrap(), f);
        let x5 = LinPoly::monomial(&ctx, Fe::ONE, 5);
        let x3 = LinPoly::monomial(&ctx, Fe::ONE, 3);
        assert_eq!(
            x5.compose(&x3).unwrap(),
            LinPoly::monomial(&ctx, Fe::ONE, 2)
        );
        for _ in 0..50 {
            let g = random_poly(&ctx, &mut rng);
            let h = f.compose(&g).unwrap();
            for x in ctx.elements() {
                assert_eq!(h.eval(x), f.eval(g.eval(x)));
            }
        }
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = FieldCtx::for_q(2, 6).unwrap();
        let b = FieldCtx::for_q(4, 3).unwrap();
        let f = LinPoly::identity(&a);
        let g = LinPoly::identity(&b);
        assert_eq!(f.add(&g).unwrap_err(), Error::ContextMismatch);
        assert_eq!(f.compose(&g).unwrap_err(), Error::ContextMismatch);
        assert!(matches!(
            LinPoly::new(&a, vec![Fe::ONE; 3]),
            Err(Error::CoefficientCount {
                expected: 6,
                got: 3
            })
        ));
    }

    #[test]
    fn adjoint_examples() {
        let ctx = FieldCtx::for_q(3, 6).unwrap();
        let id = LinPoly::identity(&ctx);
        assert_eq!(id.adjoint(), id);
        let a = Fe(123);
        let f = LinPoly::monomial(&ctx, a, 1);
        assert_eq!(f.adjoint(), LinPoly::monomial(&ctx, ctx.frob(a, 5), 5));

        // Tr(x f^(y)) = Tr(f(x) y), oracle: direct trace of both sides
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let f = random_poly(&ctx, &mut rng);
            let x = Fe(rng.gen_range(0..ctx.order()));
            let y = Fe(rng.gen_range(0..ctx.order()));
            let lhs = ctx.trace(ctx.mul(x, f.adjoint().eval(y)), 1).unwrap();
            let rhs = ctx.trace(ctx.mul(f.eval(x), y), 1).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn kernel_examples() {
        let ctx = FieldCtx::for_q(3, 6).unwrap();
        let zero = LinPoly::zero(&ctx);
        assert_eq!(zero.kernel().len(), 6);
        assert_eq!(zero.rank(), 0);
        let f = LinPoly::monomial(&ctx, Fe::ONE, 1)
            .sub(&LinPoly::identity(&ctx))
            .unwrap();
        assert_eq!(f.kernel(), vec![Fe::ONE]);
        assert_eq!(f.rank(), 5);
        assert_eq!(f.to_matrix().rank(&ctx), 5);
    }

    #[test]
    fn kernel_is_exact_root_space() {
        let ctx = FieldCtx::for_q(2, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..40 {
            let mut f = random_poly(&ctx, &mut rng);
            // force low rank sometimes: f ∘ (x^q - x)
            if rng.gen_bool(0.5) {
                let g = LinPoly::monomial(&ctx, Fe::ONE, 1)
                    .sub(&LinPoly::identity(&ctx))
                    .unwrap();
                f = f.compose(&g).unwrap();
            }
            let roots = ctx.elements().filter(|&x| f.eval(x).is_zero()).count();
            let k = f.kernel();
            assert_eq!(roots, 1 << k.len());
            assert!(k.iter().all(|&x| f.eval(x).is_zero()));
            assert_eq!(f.rank() + k.len(), 6);
        }
    }

    #[test]
    fn solve_affine_examples() {
        let ctx = FieldCtx::for_q(3, 6).unwrap();
        let id = LinPoly::identity(&ctx);
        assert_eq!(id.solve_affine(Fe(500)), vec![Fe(500)]);
        let f = LinPoly::monomial(&ctx, Fe::ONE, 1).sub(&id).unwrap();
        assert_eq!(f.solve_affine(Fe::ZERO), vec![Fe(0), Fe(1), Fe(2)]);
        // x^q - x never hits an element with nonzero trace
        let b = ctx.elements().find(|&b| !ctx.tr(b).is_zero()).unwrap();
        assert!(f.solve_affine(b).is_empty());
        // brute-force oracle on random affine equations
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = random_poly(&ctx, &mut rng).compose(&f).unwrap();
            let b = g.eval(Fe(rng.gen_range(0..ctx.order())));
            let brute: Vec<Fe> = ctx.elements().filter(|&x| g.eval(x) == b).collect();
            assert_eq!(g.solve_affine(b), brute);
        }
    }

    #[test]
    fn fq_coords_roundtrip() {
        let ctx = FieldCtx::for_q(4, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let f = random_poly(&ctx, &mut rng);
            assert_eq!(LinPoly::from_fq_coords(&ctx, &f.fq_coords()), f);
        }
    }

    #[test]
    fn twist_matches_composition() {
        let ctx = FieldCtx::for_q(3, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = random_poly(&ctx, &mut rng);
        for i in 0..6 {
            for j in 0..6 {
                let direct = LinPoly::monomial(&ctx, Fe::ONE, i)
                    .compose(&f)
                    .unwrap()
                    .compose(&LinPoly::monomial(&ctx, Fe::ONE, j))
                    .unwrap();
                assert_eq!(f.twist(i, j), direct);
            }
        }
    }

    #[test]
    fn q_degree_of_zero_is_none() {
        let ctx = FieldCtx::for_q(2, 6).unwrap();
        assert_eq!(LinPoly::zero(&ctx).q_degree(), None);
        assert_eq!(LinPoly::monomial(&ctx, Fe(5), 4).q_degree(), Some(4));
    }
}
