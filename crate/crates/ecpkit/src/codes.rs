//! Linear codes over GF(q): canonical generator form, duality, coordinatewise
//! (star) products, square codes, subfield subcodes, shortening, and exact
//! minimum distance.
//!
//! A [`LinearCode`] stores its generator in reduced row echelon form with zero
//! rows dropped, so structural equality of two `LinearCode` values is equality
//! of the codes as sets. Minimum distance is always exact: the engine
//! enumerates codewords when q^k is small, and otherwise searches for the
//! smallest dependent column set of a parity-check matrix, which is feasible
//! precisely for high-rate codes. If neither route fits the budget it reports
//! an enumeration-guard error rather than an estimate.

use crate::error::{Error, Result};
use crate::field::{Embedding, FieldSpec};
use crate::linalg::Matrix;

const ENUM_GUARD: u128 = 1 << 24;
const DUAL_ROUTE_OPS: u128 = 1 << 26;

pub fn weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Coordinatewise product of two equal-length vectors over one field.
pub fn star_vectors(spec: &FieldSpec, u: &[u64], v: &[u64]) -> Result<Vec<u64>> {
    if u.len() != v.len() {
        return Err(Error::Shape(format!("star of lengths {} and {}", u.len(), v.len())));
    }
    if u.iter().chain(v).any(|&x| x >= spec.q()) {
        return Err(Error::Shape("entry outside the field".into()));
    }
    Ok(u.iter().zip(v).map(|(&a, &b)| spec.mul(a, b)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    spec: FieldSpec,
    n: usize,
    gen: Matrix,
}

impl LinearCode {
    /// Code spanned by the given rows; the stored generator is canonical, so
    /// dependent or zero input rows are harmless.
    pub fn from_rows(spec: &FieldSpec, n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let m = Matrix::from_rows(spec, n, rows)?;
        Ok(Self::from_matrix(m))
    }

    pub fn from_matrix(m: Matrix) -> Self {
        let spec = m.spec().clone();
        let n = m.cols();
        let (r, _, rank) = m.rref();
        let rows: Vec<Vec<u64>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        let gen = Matrix::from_rows(&spec, n, &rows).expect("rows of an rref");
        LinearCode { spec, n, gen }
    }

    pub fn zero(spec: &FieldSpec, n: usize) -> Self {
        Self::from_rows(spec, n, &[]).expect("empty row list")
    }

    pub fn full(spec: &FieldSpec, n: usize) -> Self {
        Self::from_matrix(Matrix::identity(spec, n))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical (rref) generator matrix, k rows.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn encode(&self, msg: &[u64]) -> Vec<u64> {
        self.gen.apply_left(msg)
    }

    pub fn dual(&self) -> LinearCode {
        Self::from_matrix(self.gen.kernel_basis())
    }

    /// Syndrome with respect to the canonical parity-check matrix (the
    /// canonical generator of the dual), length n - k.
    pub fn syndrome(&self, y: &[u64]) -> Vec<u64> {
        assert_eq!(y.len(), self.n);
        self.dual().generator().apply_right(y)
    }

    pub fn contains(&self, y: &[u64]) -> bool {
        assert_eq!(y.len(), self.n);
        if y.iter().any(|&x| x >= self.spec.q()) {
            return false;
        }
        let mut rows = self.gen.row_vecs();
        rows.push(y.to_vec());
        let m = Matrix::from_rows(&self.spec, self.n, &rows).expect("sized rows");
        m.rank() == self.k()
    }

    /// Exact minimum Hamming weight of a nonzero codeword; n + 1 for the zero
    /// code. Fails with an enumeration guard when no exact route is feasible.
    pub fn min_distance(&self) -> Result<usize> {
        let k = self.k() as u32;
        if k == 0 {
            return Ok(self.n + 1);
        }
        let words = (self.spec.q() as u128).pow(k);
        if words <= ENUM_GUARD {
            return Ok(self.min_distance_enumerate());
        }
        if self.dual_route_cost() <= DUAL_ROUTE_OPS {
            return Ok(self.min_distance_dependent_columns());
        }
        Err(Error::EnumerationGuard(format!(
            "minimum distance of a [{}, {}] code over GF({})",
            self.n,
            self.k(),
            self.spec.q()
        )))
    }

    fn dual_route_cost(&self) -> u128 {
        let r = self.n - self.k(); // parity-check rows
        let mut total: u128 = 0;
        for w in 1..=r + 1 {
            total = total.saturating_add(
                binomial(self.n, w).saturating_mul((w * w * r.max(1)) as u128),
            );
        }
        total
    }

    fn min_distance_enumerate(&self) -> usize {
        let k = self.k();
        let n = self.n;
        let q = self.spec.q();
        let f = &self.spec;
        let mut buffers = vec![vec![0u64; n]; k + 1];
        let mut wts = vec![0usize; k + 1];
        let mut best = n + 1;
        // depth-first over messages; buffers[i] holds the partial combination
        // of the first i generator rows
        fn rec(
            code: &LinearCode,
            f: &FieldSpec,
            q: u64,
            i: usize,
            any: bool,
            buffers: &mut [Vec<u64>],
            wts: &mut [usize],
            best: &mut usize,
        ) {
            let k = code.k();
            if i == k {
                if any && wts[i] < *best {
                    *best = wts[i];
                }
                return;
            }
            let (head, tail) = buffers.split_at_mut(i + 1);
            let base = &head[i];
            let next = &mut tail[0];
            next.copy_from_slice(base);
            wts[i + 1] = wts[i];
            rec(code, f, q, i + 1, any, buffers, wts, best);
            for c in 1..q {
                let row = code.gen.row(i);
                let (head, tail) = buffers.split_at_mut(i + 1);
                let base = &head[i];
                let next = &mut tail[0];
                let mut wt = 0usize;
                for j in 0..code.n {
                    let v = f.add(base[j], f.mul(c, row[j]));
                    next[j] = v;
                    wt += usize::from(v != 0);
                }
                wts[i + 1] = wt;
                rec(code, f, q, i + 1, true, buffers, wts, best);
            }
        }
        rec(self, f, q, 0, false, &mut buffers, &mut wts, &mut best);
        best
    }

    /// d equals the smallest number of linearly dependent parity-check
    /// columns; bounded by n - k + 1, so this is fast for high-rate codes.
    fn min_distance_dependent_columns(&self) -> usize {
        let h = self.dual().gen;
        let n = self.n;
        let r = h.rows();
        for w in 1..=r + 1 {
            let mut idx: Vec<usize> = (0..w).collect();
            loop {
                if h.select_cols(&idx).rank() < w {
                    return w;
                }
                // next lexicographic w-combination of 0..n
                let mut i = w;
                while i > 0 && idx[i - 1] == n - w + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                idx[i - 1] += 1;
                for j in i..w {
                    idx[j] = idx[j - 1] + 1;
                }
            }
        }
        unreachable!("some n - k + 1 columns of a parity check are dependent")
    }

    /// Codewords vanishing on the given positions, restricted to the
    /// complement. Positions are deduplicated; each must be below n.
    pub fn shorten(&self, positions: &[usize]) -> Result<LinearCode> {
        if positions.iter().any(|&j| j >= self.n) {
            return Err(Error::InvalidParameter("shorten position out of range".into()));
        }
        let mut j: Vec<usize> = positions.to_vec();
        j.sort_unstable();
        j.dedup();
        let in_j = {
            let mut v = vec![false; self.n];
            for &p in &j {
                v[p] = true;
            }
            v
        };
        let keep: Vec<usize> = (0..self.n).filter(|&c| !in_j[c]).collect();
        let gj = self.gen.select_cols(&j);
        let combos = gj.transpose().kernel_basis();
        let rows: Vec<Vec<u64>> = (0..combos.rows())
            .map(|i| {
                let cw = self.encode(combos.row(i));
                keep.iter().map(|&c| cw[c]).collect()
            })
            .collect();
        LinearCode::from_rows(&self.spec, keep.len(), &rows)
    }

    /// Subcode of codewords with every coordinate in the embedded base field,
    /// read as a code over the base field. The parity constraints are expanded
    /// over a base-field basis of the extension (powers of the extension
    /// generator), giving m * (n - k) base-field constraints.
    pub fn subfield_subcode(&self, base: &FieldSpec) -> Result<LinearCode> {
        let ext = &self.spec;
        let em = Embedding::new(base, ext)?;
        let m = ext.e() / base.e();
        if m == 1 {
            // same field up to modulus choice; re-encode through the embedding
            let rows: Vec<Vec<u64>> = (0..self.k())
                .map(|i| {
                    self.gen
                        .row(i)
                        .iter()
                        .map(|&x| em.preimage(x))
                        .collect::<Option<Vec<u64>>>()
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| {
                    Error::InvalidParameter("code is not defined over the base field".into())
                })?;
            return LinearCode::from_rows(base, self.n, &rows);
        }
        let gfp = FieldSpec::new(ext.p(), 1, &[])?;
        let e_s = base.e();
        let e_t = ext.e();
        let gen_t = ext.p(); // encoding of the extension generator x
        // bijection GF(q)^m -> GF(q^m): (a_0..a_{m-1}) -> sum phi(a_l) * x^l,
        // written as an e_t x e_t matrix over GF(p)
        let mut cols: Vec<Vec<u64>> = Vec::with_capacity(e_t);
        let mut gpow = 1u64;
        for _ in 0..m {
            let mut alpha_pow = 1u64; // runs over phi(alpha^i), alpha the base generator
            for i in 0..e_s {
                cols.push(ext.coeffs(ext.mul(alpha_pow, gpow)));
                if i + 1 < e_s {
                    alpha_pow = ext.mul(alpha_pow, em.apply(base.p()));
                }
            }
            gpow = ext.mul(gpow, gen_t);
        }
        let t = Matrix::from_rows(&gfp, e_t, &cols)?.transpose();
        let t_inv = t.inverse().expect("basis decomposition matrix is invertible");
        let h = self.dual();
        let hg = h.generator();
        let mut expanded: Vec<Vec<u64>> = Vec::with_capacity(m * hg.rows());
        for _ in 0..m * hg.rows() {
            expanded.push(vec![0u64; self.n]);
        }
        for r in 0..hg.rows() {
            for j in 0..self.n {
                let u = t_inv.apply_right(&ext.coeffs(hg.get(r, j)));
                for l in 0..m {
                    let a = base.from_coeffs(&u[l * e_s..(l + 1) * e_s])?;
                    expanded[r * m + l][j] = a;
                }
            }
        }
        let hexp = Matrix::from_rows(base, self.n, &expanded)?;
        Ok(LinearCode::from_matrix(hexp.kernel_basis()))
    }
}

/// Span of all coordinatewise products of a row of `a` with a row of `b`.
pub fn star_codes(a: &LinearCode, b: &LinearCode) -> Result<LinearCode> {
    if a.spec() != b.spec() {
        return Err(Error::FieldMismatch);
    }
    if a.n() != b.n() {
        return Err(Error::Shape(format!("star of lengths {} and {}", a.n(), b.n())));
    }
    let mut rows = Vec::with_capacity(a.k() * b.k());
    for i in 0..a.k() {
        for j in 0..b.k() {
            rows.push(star_vectors(a.spec(), a.generator().row(i), b.generator().row(j))?);
        }
    }
    LinearCode::from_rows(a.spec(), a.n(), &rows)
}

/// The square code: span of all pairwise products of codewords of c.
pub fn square(c: &LinearCode) -> LinearCode {
    let mut rows = Vec::new();
    for i in 0..c.k() {
        for j in i..c.k() {
            rows.push(
                star_vectors(c.spec(), c.generator().row(i), c.generator().row(j))
                    .expect("rows of one code"),
            );
        }
    }
    LinearCode::from_rows(c.spec(), c.n(), &rows).expect("rows of one code")
}

/// Dimension of the kernel of the symmetric multiplication map, by the rank
/// bookkeeping identity: kernel + image = k(k+1)/2.
pub fn sym2_kernel_dim(c: &LinearCode) -> usize {
    let total = binomial(c.k() + 1, 2) as usize;
    total - square(c).k()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, e: usize) -> FieldSpec {
        FieldSpec::with_default_modulus(p, e).unwrap()
    }

    fn random_rows(spec: &FieldSpec, k: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
        (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..spec.q())).collect()).collect()
    }

    fn random_code(spec: &FieldSpec, k: usize, n: usize, rng: &mut ChaCha8Rng) -> LinearCode {
        LinearCode::from_rows(spec, n, &random_rows(spec, k, n, rng)).unwrap()
    }

    #[test]
    fn from_rows_canonicalizes_dependent_rows() {
        let f = gf(7, 1);
        let c = LinearCode::from_rows(&f, 2, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(c.k(), 1);
        assert_eq!(c, LinearCode::from_rows(&f, 2, &[vec![1, 2]]).unwrap());
    }

    #[test]
    fn dimension_matches_row_rank_oracle() {
        let f = gf(2, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let rows = random_rows(&f, 3, 8, &mut rng);
            let c = LinearCode::from_rows(&f, 8, &rows).unwrap();
            assert_eq!(c.k(), Matrix::from_rows(&f, 8, &rows).unwrap().rank());
        }
    }

    #[test]
    fn zero_and_full_are_dual() {
        let f = gf(5, 1);
        let z = LinearCode::zero(&f, 6);
        let full = LinearCode::full(&f, 6);
        assert_eq!(z.dual(), full);
        assert_eq!(full.dual(), z);
        assert_eq!(z.min_distance().unwrap(), 7); // sentinel n + 1
        assert_eq!(full.min_distance().unwrap(), 1);
    }

    #[test]
    fn dual_is_an_involution_with_orthogonal_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for f in [gf(2, 1), gf(2, 2), gf(7, 1), gf(2, 4)] {
            for _ in 0..25 {
                let n = rng.gen_range(2..12);
                let k = rng.gen_range(0..=n);
                let c = random_code(&f, k, n, &mut rng);
                let d = c.dual();
                assert_eq!(c.k() + d.k(), n);
                assert_eq!(d.dual(), c);
                for i in 0..c.k() {
                    for j in 0..d.k() {
                        assert_eq!(f.dot(c.generator().row(i), d.generator().row(j)), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn membership_iff_zero_syndrome() {
        let f = gf(13, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..30 {
            let c = random_code(&f, 3, 8, &mut rng);
            let msg: Vec<u64> = (0..c.k()).map(|_| rng.gen_range(0..13)).collect();
            let cw = c.encode(&msg);
            assert!(c.contains(&cw));
            assert!(cw.len() == 8 && c.syndrome(&cw).iter().all(|&v| v == 0));
            let y: Vec<u64> = (0..8).map(|_| rng.gen_range(0..13)).collect();
            assert_eq!(c.contains(&y), c.syndrome(&y).iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn min_distance_small_examples() {
        let f7 = gf(7, 1);
        let c = LinearCode::from_rows(
            &f7,
            6,
            &[vec![1, 1, 1, 1, 1, 1], vec![0, 1, 2, 3, 4, 5]],
        )
        .unwrap();
        assert_eq!(c.min_distance().unwrap(), 5);
        let f2 = gf(2, 1);
        let rep = LinearCode::from_rows(&f2, 5, &[vec![1; 5]]).unwrap();
        assert_eq!(rep.min_distance().unwrap(), 5);
    }

    #[test]
    fn min_distance_uses_parity_route_for_high_rate() {
        // [30, 29] binary parity-check code: 2^29 codewords is over the
        // enumeration guard, but the dependent-column route is immediate
        let f = gf(2, 1);
        let rows: Vec<Vec<u64>> = (0..29)
            .map(|i| {
                let mut r = vec![0u64; 30];
                r[i] = 1;
                r[29] = 1;
                r
            })
            .collect();
        let c = LinearCode::from_rows(&f, 30, &rows).unwrap();
        assert!(((c.spec().q() as u128).pow(c.k() as u32)) > ENUM_GUARD);
        assert_eq!(c.min_distance().unwrap(), 2);
    }

    #[test]
    fn min_distance_guard_fires_when_no_route_fits() {
        let f = gf(2, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let c = random_code(&f, 20, 40, &mut rng);
        assert!(matches!(c.min_distance(), Err(Error::EnumerationGuard(_))));
    }

    #[test]
    fn min_distance_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for f in [gf(7, 1), gf(2, 2)] {
            for _ in 0..10 {
                let c = random_code(&f, 5, 10, &mut rng);
                if c.k() == 0 {
                    continue;
                }
                assert_eq!(c.min_distance_enumerate(), c.min_distance_dependent_columns());
            }
        }
    }

    #[test]
    fn singleton_bound_on_random_codes() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for f in [gf(2, 1), gf(7, 1)] {
            for _ in 0..20 {
                let n = rng.gen_range(3..10);
                let k = rng.gen_range(1..=n);
                let c = random_code(&f, k, n, &mut rng);
                if c.k() == 0 {
                    continue;
                }
                assert!(c.min_distance().unwrap() <= n - c.k() + 1);
            }
        }
    }

    #[test]
    fn star_vectors_example_and_errors() {
        let f = gf(7, 1);
        assert_eq!(star_vectors(&f, &[1, 2, 3], &[4, 5, 6]).unwrap(), vec![4, 3, 4]);
        assert!(star_vectors(&f, &[1, 2], &[1, 2, 3]).is_err());
    }

    #[test]
    fn star_span_is_independent_of_the_generating_set() {
        let f = gf(13, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = random_code(&f, 3, 10, &mut rng);
        let b = random_code(&f, 2, 10, &mut rng);
        let s = star_codes(&a, &b).unwrap();
        // replace generators by random invertible mixes and re-span manually
        let mix = loop {
            let m = Matrix::from_rows(&f, 3, &random_rows(&f, 3, 3, &mut rng)).unwrap();
            if m.inverse().is_some() {
                break m;
            }
        };
        let mixed = mix.mul(a.generator());
        let mut rows = vec![];
        for i in 0..mixed.rows() {
            for j in 0..b.k() {
                rows.push(star_vectors(&f, mixed.row(i), b.generator().row(j)).unwrap());
            }
        }
        let s2 = LinearCode::from_rows(&f, 10, &rows).unwrap();
        assert_eq!(s, s2);
    }

    #[test]
    fn star_commutes_with_coordinate_permutations() {
        let f = gf(2, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let n = 9;
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let u: Vec<u64> = (0..n).map(|_| rng.gen_range(0..16)).collect();
        let v: Vec<u64> = (0..n).map(|_| rng.gen_range(0..16)).collect();
        let permuted = |w: &[u64]| -> Vec<u64> { perm.iter().map(|&j| w[j]).collect() };
        assert_eq!(
            star_vectors(&f, &permuted(&u), &permuted(&v)).unwrap(),
            permuted(&star_vectors(&f, &u, &v).unwrap())
        );
        let a = random_code(&f, 3, n, &mut rng);
        let b = random_code(&f, 2, n, &mut rng);
        let ap = LinearCode::from_matrix(a.generator().select_cols(&perm));
        let bp = LinearCode::from_matrix(b.generator().select_cols(&perm));
        let sp = star_codes(&ap, &bp).unwrap();
        let s = star_codes(&a, &b).unwrap();
        assert_eq!(sp, LinearCode::from_matrix(s.generator().select_cols(&perm)));
    }

    #[test]
    fn star_codes_rejects_mismatches() {
        let f = gf(7, 1);
        let g = gf(13, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let a = random_code(&f, 2, 6, &mut rng);
        let b = random_code(&g, 2, 6, &mut rng);
        assert!(matches!(star_codes(&a, &b), Err(Error::FieldMismatch)));
        let c = random_code(&f, 2, 7, &mut rng);
        assert!(matches!(star_codes(&a, &c), Err(Error::Shape(_))));
    }

    #[test]
    fn square_dimension_bound_and_bookkeeping() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for f in [gf(2, 1), gf(7, 1), gf(2, 4)] {
            for _ in 0..15 {
                let n = rng.gen_range(3..14);
                let k = rng.gen_range(1..=n);
                let c = random_code(&f, k, n, &mut rng);
                let sq = square(&c);
                let bound = (binomial(c.k() + 1, 2) as usize).min(n);
                assert!(sq.k() <= bound);
                assert_eq!(
                    sym2_kernel_dim(&c) + sq.k(),
                    binomial(c.k() + 1, 2) as usize
                );
            }
        }
    }

    #[test]
    fn shorten_edges_and_polynomial_code() {
        let f = gf(7, 1);
        let a: Vec<u64> = (0..6).collect();
        let rows = vec![
            vec![1; 6],
            a.clone(),
            a.iter().map(|&x| f.mul(x, x)).collect(),
        ];
        let c = LinearCode::from_rows(&f, 6, &rows).unwrap();
        assert_eq!(c.shorten(&[]).unwrap(), c);
        let s = c.shorten(&[0, 1]).unwrap();
        assert_eq!((s.n(), s.k()), (4, 1));
        let all: Vec<usize> = (0..6).collect();
        let gone = c.shorten(&all).unwrap();
        assert_eq!((gone.n(), gone.k()), (0, 0));
        assert!(c.shorten(&[6]).is_err());
    }

    #[test]
    fn subfield_subcode_of_full_and_zero() {
        let f16 = gf(2, 4);
        let f2 = gf(2, 1);
        let full = LinearCode::full(&f16, 6);
        assert_eq!(full.subfield_subcode(&f2).unwrap(), LinearCode::full(&f2, 6));
        let zero = LinearCode::zero(&f16, 6);
        assert_eq!(zero.subfield_subcode(&f2).unwrap(), LinearCode::zero(&f2, 6));
    }

    #[test]
    fn subfield_subcode_rows_remain_supercode_members() {
        let f16 = gf(2, 4);
        let f2 = gf(2, 1);
        let em = crate::field::Embedding::new(&f2, &f16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..10 {
            let c = random_code(&f16, 12, 15, &mut rng);
            let sub = c.subfield_subcode(&f2).unwrap();
            assert!(sub.k() >= 15usize.saturating_sub((15 - c.k()) * 4));
            for i in 0..sub.k() {
                assert!(c.contains(&em.apply_vec(sub.generator().row(i))));
            }
        }
    }

    #[test]
    fn subfield_subcode_intermediate_tower() {
        let f16 = gf(2, 4);
        let f4 = gf(2, 2);
        let em = crate::field::Embedding::new(&f4, &f16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let c = random_code(&f16, 6, 8, &mut rng);
        let sub = c.subfield_subcode(&f4).unwrap();
        assert!(sub.k() >= 8usize.saturating_sub((8 - c.k()) * 2));
        for i in 0..sub.k() {
            assert!(c.contains(&em.apply_vec(sub.generator().row(i))));
        }
    }

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }
}
