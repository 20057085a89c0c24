//! Code families that come with error-correcting pairs: generalized
//! Reed-Solomon codes, their subfield subcodes (alternant and Goppa codes),
//! and randomized pair constructions used by the experiments.

use crate::codes::{star_codes, LinearCode};
use crate::ecp::{verify_ecp_alt, Decoder, EcpPair};
use crate::error::{Error, Result};
use crate::field::{Embedding, FieldSpec};
use crate::rng::trial_rng;
use crate::trials::map_trials;
use rand::Rng;

/// Parameters of a generalized Reed-Solomon code: distinct evaluation points,
/// nonzero column multipliers, and the dimension. The length is the number of
/// points and can be at most the field size.
#[derive(Debug, Clone, PartialEq)]
pub struct GrsSpec {
    spec: FieldSpec,
    a: Vec<u64>,
    b: Vec<u64>,
    k: usize,
}

impl GrsSpec {
    pub fn new(spec: &FieldSpec, a: &[u64], b: &[u64], k: usize) -> Result<Self> {
        let n = a.len();
        if b.len() != n {
            return Err(Error::Shape(format!(
                "{} evaluation points but {} multipliers",
                n,
                b.len()
            )));
        }
        if n == 0 || n as u64 > spec.q() {
            return Err(Error::InvalidParameter(format!(
                "length {n} not in 1..={}",
                spec.q()
            )));
        }
        if k > n {
            return Err(Error::InvalidParameter(format!("dimension {k} exceeds length {n}")));
        }
        if a.iter().any(|&x| x >= spec.q()) || b.iter().any(|&x| x >= spec.q()) {
            return Err(Error::InvalidParameter("entry out of field range".into()));
        }
        let mut sorted = a.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::InvalidParameter("evaluation points must be distinct".into()));
        }
        if b.iter().any(|&x| x == 0) {
            return Err(Error::InvalidParameter("multipliers must be nonzero".into()));
        }
        Ok(GrsSpec { spec: spec.clone(), a: a.to_vec(), b: b.to_vec(), k })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn support(&self) -> &[u64] {
        &self.a
    }

    pub fn multiplier(&self) -> &[u64] {
        &self.b
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

/// Rows mult * points^i for i < k.
fn evaluation_rows(spec: &FieldSpec, a: &[u64], b: &[u64], k: usize) -> Vec<Vec<u64>> {
    let mut rows = Vec::with_capacity(k);
    let mut power: Vec<u64> = b.to_vec();
    for _ in 0..k {
        rows.push(power.clone());
        for (slot, &x) in power.iter_mut().zip(a) {
            *slot = spec.mul(*slot, x);
        }
    }
    rows
}

/// The [n, k] generalized Reed-Solomon code of the given parameters. Its
/// generator rows evaluate b_j * a_j^i, and distinct points make it MDS.
pub fn grs_code(g: &GrsSpec) -> LinearCode {
    let code = LinearCode::from_rows(
        &g.spec,
        g.n(),
        &evaluation_rows(&g.spec, &g.a, &g.b, g.k),
    )
    .expect("validated parameters");
    debug_assert_eq!(code.k(), g.k);
    code
}

/// Column multipliers of the dual code: the dual of GRS_k(a, b) is
/// GRS_{n-k}(a, b') with b'_j = (b_j * prod_{i != j} (a_j - a_i))^-1.
/// Applying the map twice returns b, so it is an involution.
pub fn grs_dual_multiplier(g: &GrsSpec) -> Vec<u64> {
    let f = &g.spec;
    g.a.iter()
        .enumerate()
        .map(|(j, &aj)| {
            let mut prod = g.b[j];
            for (i, &ai) in g.a.iter().enumerate() {
                if i != j {
                    prod = f.mul(prod, f.sub(aj, ai));
                }
            }
            f.inv(prod).expect("distinct points and nonzero multiplier")
        })
        .collect()
}

/// The pair components shared by the plain and subfield constructions:
/// A evaluates degrees up to t against the dual multiplier, B evaluates
/// degrees below t with trivial multiplier, where t = floor((n - k) / 2).
fn grs_pair_components(g: &GrsSpec) -> Result<(LinearCode, LinearCode, usize)> {
    let t = (g.n() - g.k) / 2;
    if t == 0 {
        return Err(Error::InvalidParameter(
            "redundancy below 2 leaves no error budget".into(),
        ));
    }
    let dual_mult = grs_dual_multiplier(g);
    let a_code = LinearCode::from_rows(
        &g.spec,
        g.n(),
        &evaluation_rows(&g.spec, &g.a, &dual_mult, t + 1),
    )?;
    let ones = vec![1u64; g.n()];
    let b_code =
        LinearCode::from_rows(&g.spec, g.n(), &evaluation_rows(&g.spec, &g.a, &ones, t))?;
    Ok((a_code, b_code, t))
}

/// The canonical pair for a generalized Reed-Solomon code, correcting
/// t = floor((n - k) / 2) errors.
pub fn grs_ecp(g: &GrsSpec) -> Result<EcpPair> {
    let (a_code, b_code, t) = grs_pair_components(g)?;
    let em = Embedding::new(&g.spec, &g.spec)?;
    EcpPair::new(a_code, b_code, t, em)
}

/// Builds a pair first and derives the code from it: A and B are evaluation
/// codes of dimensions t + 1 and t with multipliers u and v, and the code is
/// the dual of their product, an [n, n - 2t] MDS code.
pub fn forward_grs_ecp(
    spec: &FieldSpec,
    a: &[u64],
    u: &[u64],
    v: &[u64],
    t: usize,
) -> Result<(EcpPair, LinearCode)> {
    if t == 0 || 2 * t >= a.len() {
        return Err(Error::InvalidParameter(format!(
            "budget {t} not in 1..{}",
            a.len().div_ceil(2)
        )));
    }
    // GrsSpec::new validates support and multipliers; dimensions reused below
    let ga = GrsSpec::new(spec, a, u, t + 1)?;
    let gb = GrsSpec::new(spec, a, v, t)?;
    let a_code = grs_code(&ga);
    let b_code = grs_code(&gb);
    let code = star_codes(&a_code, &b_code)?.dual();
    let em = Embedding::new(spec, spec)?;
    let pair = EcpPair::new(a_code, b_code, t, em)?;
    Ok((pair, code))
}

/// Subfield subcode of a generalized Reed-Solomon code together with the
/// supercode's pair, which decodes the subcode through the field embedding.
pub fn alternant_code(g: &GrsSpec, base: &FieldSpec) -> Result<(LinearCode, EcpPair)> {
    let code = grs_code(g).subfield_subcode(base)?;
    let (a_code, b_code, t) = grs_pair_components(g)?;
    let em = Embedding::new(base, &g.spec)?;
    let pair = EcpPair::new(a_code, b_code, t, em)?;
    Ok((code, pair))
}

/// Goppa code of the polynomial with the given little-endian coefficients
/// over the extension field: the alternant code whose supercode has
/// multiplier column j equal to 1 / poly(a_j). The polynomial must not
/// vanish on the support and its degree r fixes the budget t = floor(r / 2).
pub fn goppa_code(
    spec: &FieldSpec,
    base: &FieldSpec,
    support: &[u64],
    poly: &[u64],
) -> Result<(LinearCode, EcpPair)> {
    let mut coeffs = poly.to_vec();
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.len() < 3 {
        return Err(Error::InvalidParameter(
            "Goppa polynomial must have degree at least 2".into(),
        ));
    }
    let degree = coeffs.len() - 1;
    if degree >= support.len() {
        return Err(Error::InvalidParameter(format!(
            "degree {} leaves no code in length {}",
            degree,
            support.len()
        )));
    }
    let mut values = Vec::with_capacity(support.len());
    for &x in support {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = spec.add(spec.mul(acc, x), c);
        }
        if acc == 0 {
            return Err(Error::InvalidParameter(
                "Goppa polynomial vanishes on a support point".into(),
            ));
        }
        values.push(acc);
    }
    // the parity rows of the Goppa code evaluate against 1/poly, so the
    // supercode it cuts from is the dual: multiplier = dual of 1/poly
    let inv_values: Vec<u64> =
        values.iter().map(|&v| spec.inv(v).expect("nonzero")).collect();
    let parity_side = GrsSpec::new(spec, support, &inv_values, degree)?;
    let super_mult = grs_dual_multiplier(&parity_side);
    let g = GrsSpec::new(spec, support, &super_mult, support.len() - degree)?;
    alternant_code(&g, base)
}

const RESAMPLE_BUDGET: usize = 100;

/// A uniformly sampled [n, k] code: random generator rows, resampled until
/// they are independent.
pub fn random_code(
    spec: &FieldSpec,
    n: usize,
    k: usize,
    rng: &mut impl Rng,
) -> Result<LinearCode> {
    if k > n {
        return Err(Error::InvalidParameter(format!("dimension {k} exceeds length {n}")));
    }
    for _ in 0..RESAMPLE_BUDGET {
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.gen_range(0..spec.q())).collect())
            .collect();
        let code = LinearCode::from_rows(spec, n, &rows)?;
        if code.k() == k {
            return Ok(code);
        }
    }
    Err(Error::ResampleBudget(RESAMPLE_BUDGET))
}

/// A generalized Reed-Solomon spec with random distinct support and random
/// nonzero multipliers.
pub fn random_grs_spec(
    spec: &FieldSpec,
    n: usize,
    k: usize,
    rng: &mut impl Rng,
) -> Result<GrsSpec> {
    if n as u64 > spec.q() {
        return Err(Error::InvalidParameter(format!(
            "length {n} exceeds field size {}",
            spec.q()
        )));
    }
    let mut support: Vec<u64> = spec.els().collect();
    for i in 0..n {
        let j = rng.gen_range(i..support.len());
        support.swap(i, j);
    }
    support.truncate(n);
    let multiplier: Vec<u64> = (0..n).map(|_| rng.gen_range(1..spec.q())).collect();
    GrsSpec::new(spec, &support, &multiplier, k)
}

/// A random l-dimensional subcode of the given generalized Reed-Solomon
/// code, spanned by l independent random codewords.
pub fn random_grs_subcode(
    g: &GrsSpec,
    l: usize,
    rng: &mut impl Rng,
) -> Result<LinearCode> {
    if l > g.k() {
        return Err(Error::InvalidParameter(format!(
            "subcode dimension {l} exceeds code dimension {}",
            g.k()
        )));
    }
    let code = grs_code(g);
    for _ in 0..RESAMPLE_BUDGET {
        let rows: Vec<Vec<u64>> = (0..l)
            .map(|_| {
                let msg: Vec<u64> =
                    (0..g.k()).map(|_| rng.gen_range(0..g.spec.q())).collect();
                code.encode(&msg)
            })
            .collect();
        let sub = LinearCode::from_rows(&g.spec, g.n(), &rows)?;
        if sub.k() == l {
            return Ok(sub);
        }
    }
    Err(Error::ResampleBudget(RESAMPLE_BUDGET))
}

/// Samples a pair of random MDS codes A and B of dimensions t + 1 and t and
/// returns the dual of their product with the pair. The field must be large
/// relative to the length (q >= 4n) so MDS rejection sampling converges, and
/// t(t + 1) < n keeps the returned code nonzero. The pair conditions are
/// checked before returning.
pub fn random_pair_code(
    spec: &FieldSpec,
    n: usize,
    t: usize,
    rng: &mut impl Rng,
) -> Result<(LinearCode, EcpPair)> {
    if spec.q() < 4 * n as u64 {
        return Err(Error::InvalidParameter(format!(
            "field size {} below 4n = {}",
            spec.q(),
            4 * n
        )));
    }
    if t == 0 || t * (t + 1) >= n {
        return Err(Error::InvalidParameter(format!(
            "budget {t} needs t(t+1) < n = {n}"
        )));
    }
    let sample_mds = |target_k: usize, rng: &mut dyn rand::RngCore| -> Result<LinearCode> {
        for _ in 0..RESAMPLE_BUDGET {
            let rows: Vec<Vec<u64>> = (0..target_k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..spec.q())).collect())
                .collect();
            let code = LinearCode::from_rows(spec, n, &rows)?;
            if code.k() == target_k && code.min_distance()? == n - target_k + 1 {
                return Ok(code);
            }
        }
        Err(Error::ResampleBudget(RESAMPLE_BUDGET))
    };
    let a_code = sample_mds(t + 1, rng)?;
    let b_code = sample_mds(t, rng)?;
    let code = star_codes(&a_code, &b_code)?.dual();
    let em = Embedding::new(spec, spec)?;
    let pair = EcpPair::new(a_code, b_code, t, em)?;
    let report = verify_ecp_alt(&pair, &code)?;
    if !report.holds {
        return Err(Error::UnverifiedPair(format!(
            "sampled pair failed verification: {report:?}"
        )));
    }
    Ok((code, pair))
}

/// A length-n vector of exactly the given weight: distinct positions, each
/// holding a uniform nonzero value.
pub fn sample_error(
    spec: &FieldSpec,
    n: usize,
    w: usize,
    rng: &mut impl Rng,
) -> Result<Vec<u64>> {
    if w > n {
        return Err(Error::InvalidParameter(format!("weight {w} exceeds length {n}")));
    }
    let mut positions: Vec<usize> = (0..n).collect();
    for i in 0..w {
        let j = rng.gen_range(i..n);
        positions.swap(i, j);
    }
    let mut out = vec![0u64; n];
    for &p in &positions[..w] {
        out[p] = rng.gen_range(1..spec.q());
    }
    Ok(out)
}

/// Per-trial decode outcomes on random generalized Reed-Solomon instances:
/// each trial draws its own [n, k] code, corrupts a random codeword with an
/// error of full budget weight t = floor((n - k) / 2), and records whether
/// the pair-based decoder returned exactly the injected codeword and error.
pub fn experiment_decode_rate(
    spec: &FieldSpec,
    n: usize,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<bool>> {
    map_trials(trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        let g = random_grs_spec(spec, n, k, &mut rng)?;
        let code = grs_code(&g);
        let pair = grs_ecp(&g)?;
        let decoder = Decoder::new(&code, &pair)?;
        let msg: Vec<u64> = (0..k).map(|_| rng.gen_range(0..spec.q())).collect();
        let cw = code.encode(&msg);
        let err = sample_error(spec, n, pair.t(), &mut rng)?;
        let y: Vec<u64> = (0..n).map(|i| spec.add(cw[i], err[i])).collect();
        Ok(decoder.decode(&y) == Some((cw, err)))
    })
    .into_iter()
    .collect()
}
