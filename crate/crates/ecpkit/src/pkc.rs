//! Toy McEliece and Niederreiter cryptosystems over pair-decodable codes,
//! plus the bare syndrome map used as a hash primitive.
//!
//! Keys mask a decodable code C with an invertible matrix S and a column
//! permutation P (optionally scaled, making P monomial): McEliece publishes
//! S*G*P for a generator G, Niederreiter publishes S*H*P for a parity check
//! H. Decryption strips the mask, runs the pair-based decoder, and validates
//! its answer by re-encrypting before returning it. These are desk-scale
//! instruments with deliberately small parameters, not secure cryptography.

use crate::codes::{weight, LinearCode};
use crate::ecp::{verify_ecp, verify_ecp_alt, Decoder, EcpPair};
use crate::error::{Error, Result};
use crate::families::sample_error;
use crate::field::FieldSpec;
use crate::linalg::Matrix;
use rand::Rng;
use std::fmt;
use std::str::FromStr;

const RESAMPLE_BUDGET: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    McEliece,
    Niederreiter,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::McEliece => write!(f, "mceliece"),
            Scheme::Niederreiter => write!(f, "niederreiter"),
        }
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mceliece" => Ok(Scheme::McEliece),
            "niederreiter" => Ok(Scheme::Niederreiter),
            other => Err(Error::Parse(format!("unknown scheme {other:?}"))),
        }
    }
}

/// The published half of a keypair: the masked matrix with its parameters.
/// The matrix is k x n for McEliece and (n - k) x n for Niederreiter.
#[derive(Debug, Clone, PartialEq)]
pub struct PublicKey {
    scheme: Scheme,
    spec: FieldSpec,
    n: usize,
    k: usize,
    t: usize,
    matrix: Matrix,
}

impl PublicKey {
    pub fn new(
        scheme: Scheme,
        spec: &FieldSpec,
        n: usize,
        k: usize,
        t: usize,
        matrix: Matrix,
    ) -> Result<Self> {
        if k > n || t == 0 {
            return Err(Error::InvalidParameter(format!(
                "parameters n={n} k={k} t={t} are inconsistent"
            )));
        }
        let want_rows = match scheme {
            Scheme::McEliece => k,
            Scheme::Niederreiter => n - k,
        };
        if matrix.rows() != want_rows || matrix.cols() != n {
            return Err(Error::Shape(format!(
                "{scheme} public matrix is {}x{}, expected {want_rows}x{n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if matrix.spec() != spec {
            return Err(Error::FieldMismatch);
        }
        Ok(PublicKey { scheme, spec: spec.clone(), n, k, t, matrix })
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// The private half: the mask (S, P) and the decodable code with its pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SecretKey {
    scheme: Scheme,
    s: Matrix,
    perm: Vec<usize>,
    scale: Option<Vec<u64>>,
    code: LinearCode,
    pair: EcpPair,
}

impl SecretKey {
    pub fn new(
        scheme: Scheme,
        s: Matrix,
        perm: Vec<usize>,
        scale: Option<Vec<u64>>,
        code: LinearCode,
        pair: EcpPair,
    ) -> Result<Self> {
        let n = code.n();
        if code.spec() != pair.extension().source() || code.n() != pair.n() {
            return Err(Error::Shape("code does not match its pair".into()));
        }
        let side = match scheme {
            Scheme::McEliece => code.k(),
            Scheme::Niederreiter => n - code.k(),
        };
        if s.rows() != side || s.cols() != side || s.spec() != code.spec() {
            return Err(Error::Shape(format!(
                "scrambler is {}x{}, expected {side}x{side}",
                s.rows(),
                s.cols()
            )));
        }
        if s.inverse().is_none() {
            return Err(Error::InvalidParameter("scrambler is singular".into()));
        }
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if perm.len() != n || sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter("not a permutation of the columns".into()));
        }
        if let Some(sc) = &scale {
            let q = code.spec().q();
            if sc.len() != n || sc.iter().any(|&v| v == 0 || v >= q) {
                return Err(Error::InvalidParameter(
                    "column scales must be nonzero field elements".into(),
                ));
            }
        }
        Ok(SecretKey { scheme, s, perm, scale, code, pair })
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn scrambler(&self) -> &Matrix {
        &self.s
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn scale(&self) -> Option<&[u64]> {
        self.scale.as_deref()
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn pair(&self) -> &EcpPair {
        &self.pair
    }

    /// Applies the column mask: out[j] = scale_j * v[perm[j]].
    fn mask(&self, v: &[u64]) -> Vec<u64> {
        let f = self.code.spec();
        (0..v.len())
            .map(|j| {
                let x = v[self.perm[j]];
                match &self.scale {
                    Some(sc) => f.mul(sc[j], x),
                    None => x,
                }
            })
            .collect()
    }

    /// Inverts the column mask: out[perm[j]] = v[j] / scale_j.
    fn unmask(&self, v: &[u64]) -> Vec<u64> {
        let f = self.code.spec();
        let mut out = vec![0u64; v.len()];
        for j in 0..v.len() {
            let x = match &self.scale {
                Some(sc) => f.mul(f.inv(sc[j]).expect("validated nonzero"), v[j]),
                None => v[j],
            };
            out[self.perm[j]] = x;
        }
        out
    }

    /// The masked matrix this secret produces: S*G*P or S*H*P.
    pub fn public_matrix(&self) -> Matrix {
        let base = match self.scheme {
            Scheme::McEliece => self.code.generator().clone(),
            Scheme::Niederreiter => self.code.dual().generator().clone(),
        };
        let scrambled = self.s.mul(&base);
        let rows: Vec<Vec<u64>> =
            (0..scrambled.rows()).map(|i| self.mask(scrambled.row(i))).collect();
        let mut out = Matrix::zero(self.code.spec(), scrambled.rows(), scrambled.cols());
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KeyPair {
    pub public: PublicKey,
    pub secret: SecretKey,
}

/// A ciphertext body with its scheme tag: a length-n word for McEliece, a
/// length n - k syndrome for Niederreiter.
#[derive(Debug, Clone, PartialEq)]
pub struct Ciphertext {
    pub scheme: Scheme,
    pub body: Vec<u64>,
}

/// Accepts the pair if either verification route establishes it, preferring
/// the direct route and falling back to the distance-free one when the
/// code's distance is out of enumeration reach.
fn ensure_verified(pair: &EcpPair, code: &LinearCode) -> Result<()> {
    match verify_ecp(pair, code) {
        Ok(report) if report.holds => return Ok(()),
        Ok(report) => {
            return Err(Error::UnverifiedPair(format!(
                "direct route failed: {report:?}"
            )))
        }
        Err(Error::EnumerationGuard(_)) => {}
        Err(e) => return Err(e),
    }
    match verify_ecp_alt(pair, code) {
        Ok(report) if report.holds => Ok(()),
        Ok(report) => Err(Error::UnverifiedPair(format!(
            "distance-free route failed: {report:?}"
        ))),
        Err(e) => Err(e),
    }
}

fn random_invertible(spec: &FieldSpec, side: usize, rng: &mut impl Rng) -> Result<Matrix> {
    for _ in 0..RESAMPLE_BUDGET {
        let mut m = Matrix::zero(spec, side, side);
        for i in 0..side {
            for j in 0..side {
                m.set(i, j, rng.gen_range(0..spec.q()));
            }
        }
        if m.inverse().is_some() {
            return Ok(m);
        }
    }
    Err(Error::ResampleBudget(RESAMPLE_BUDGET))
}

fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

/// Builds a keypair from explicit mask components, validating them and the
/// pair. With S = I and the identity permutation the public matrix equals
/// the bare generator (or parity check), which is the deterministic test
/// mode.
pub fn keygen_with_mask(
    code: &LinearCode,
    pair: &EcpPair,
    scheme: Scheme,
    s: Matrix,
    perm: Vec<usize>,
    scale: Option<Vec<u64>>,
) -> Result<KeyPair> {
    ensure_verified(pair, code)?;
    let secret = SecretKey::new(scheme, s, perm, scale, code.clone(), pair.clone())?;
    let public = PublicKey::new(
        scheme,
        code.spec(),
        code.n(),
        code.k(),
        pair.t(),
        secret.public_matrix(),
    )?;
    Ok(KeyPair { public, secret })
}

/// Generates a keypair with a random invertible scrambler and a uniform
/// column permutation. The pair must verify for the code.
pub fn keygen(
    code: &LinearCode,
    pair: &EcpPair,
    scheme: Scheme,
    rng: &mut impl Rng,
) -> Result<KeyPair> {
    let side = match scheme {
        Scheme::McEliece => code.k(),
        Scheme::Niederreiter => code.n() - code.k(),
    };
    let s = random_invertible(code.spec(), side, rng)?;
    let perm = random_permutation(code.n(), rng);
    keygen_with_mask(code, pair, scheme, s, perm, None)
}

/// Like [`keygen`] but masks with a monomial matrix: the permutation is
/// composed with uniform nonzero column scales.
pub fn keygen_monomial(
    code: &LinearCode,
    pair: &EcpPair,
    scheme: Scheme,
    rng: &mut impl Rng,
) -> Result<KeyPair> {
    let side = match scheme {
        Scheme::McEliece => code.k(),
        Scheme::Niederreiter => code.n() - code.k(),
    };
    let s = random_invertible(code.spec(), side, rng)?;
    let perm = random_permutation(code.n(), rng);
    let q = code.spec().q();
    let scale: Vec<u64> = (0..code.n()).map(|_| rng.gen_range(1..q)).collect();
    keygen_with_mask(code, pair, scheme, s, perm, Some(scale))
}

fn check_vector(spec: &FieldSpec, v: &[u64], len: usize, what: &str) -> Result<()> {
    if v.len() != len {
        return Err(Error::Shape(format!(
            "{what} has length {}, expected {len}",
            v.len()
        )));
    }
    if v.iter().any(|&x| x >= spec.q()) {
        return Err(Error::InvalidParameter(format!("{what} entry out of field range")));
    }
    Ok(())
}

/// Encrypts a length-k message with an explicit error vector of weight at
/// most t: the body is m * public + e.
pub fn mceliece_encrypt(pk: &PublicKey, m: &[u64], e: &[u64]) -> Result<Ciphertext> {
    if pk.scheme != Scheme::McEliece {
        return Err(Error::InvalidParameter(format!(
            "McEliece encryption with a {} key",
            pk.scheme
        )));
    }
    check_vector(&pk.spec, m, pk.k, "message")?;
    check_vector(&pk.spec, e, pk.n, "error vector")?;
    let w = weight(e);
    if w > pk.t {
        return Err(Error::WeightExceeded { got: w, budget: pk.t });
    }
    let encoded = pk.matrix.apply_left(m);
    let body: Vec<u64> =
        (0..pk.n).map(|j| pk.spec.add(encoded[j], e[j])).collect();
    Ok(Ciphertext { scheme: Scheme::McEliece, body })
}

/// Encrypts with a freshly sampled error of weight exactly t, returning the
/// ciphertext together with the error used.
pub fn mceliece_encrypt_sampled(
    pk: &PublicKey,
    m: &[u64],
    rng: &mut impl Rng,
) -> Result<(Ciphertext, Vec<u64>)> {
    let e = sample_error(&pk.spec, pk.n, pk.t, rng)?;
    Ok((mceliece_encrypt(pk, m, &e)?, e))
}

/// Decrypts a McEliece ciphertext: strips the mask, pair-decodes, recovers
/// the message through the scrambler, and re-encrypts to validate. `None`
/// covers everything from overweight errors to malformed input.
pub fn mceliece_decrypt(sk: &SecretKey, c: &Ciphertext) -> Option<(Vec<u64>, Vec<u64>)> {
    if sk.scheme != Scheme::McEliece || c.scheme != Scheme::McEliece {
        return None;
    }
    let f = sk.code.spec();
    let n = sk.code.n();
    let k = sk.code.k();
    if c.body.len() != n || c.body.iter().any(|&x| x >= f.q()) {
        return None;
    }
    let unmasked = sk.unmask(&c.body);
    let decoder = Decoder::new(&sk.code, &sk.pair).ok()?;
    let (cw, inner_err) = decoder.decode(&unmasked)?;
    // the canonical generator is reduced, so the codeword's coordinates at
    // the pivot columns are exactly its message under that generator
    let gen = sk.code.generator();
    let ms: Vec<u64> = (0..k)
        .map(|i| {
            let pivot = (0..n).find(|&j| gen.get(i, j) != 0).expect("reduced generator");
            cw[pivot]
        })
        .collect();
    let m = sk.s.inverse().expect("validated invertible").apply_left(&ms);
    let e = sk.mask(&inner_err);
    // reject anything that does not re-encrypt to the exact input
    let masked_cw = sk.mask(&cw);
    if (0..n).any(|j| f.add(masked_cw[j], e[j]) != c.body[j]) {
        return None;
    }
    Some((m, e))
}

/// Encrypts a weight-at-most-t error vector as its public syndrome
/// e * (S*H*P)^T.
pub fn niederreiter_encrypt(pk: &PublicKey, e: &[u64]) -> Result<Ciphertext> {
    if pk.scheme != Scheme::Niederreiter {
        return Err(Error::InvalidParameter(format!(
            "Niederreiter encryption with a {} key",
            pk.scheme
        )));
    }
    check_vector(&pk.spec, e, pk.n, "error vector")?;
    let w = weight(e);
    if w > pk.t {
        return Err(Error::WeightExceeded { got: w, budget: pk.t });
    }
    Ok(Ciphertext { scheme: Scheme::Niederreiter, body: pk.matrix.apply_right(e) })
}

/// Decrypts a Niederreiter syndrome: unscrambles it, lifts it to any word
/// with that syndrome, pair-decodes that word, and unmasks the resulting
/// error. `None` when no weight-at-most-t error has the given syndrome.
pub fn niederreiter_decrypt(sk: &SecretKey, c: &Ciphertext) -> Option<Vec<u64>> {
    if sk.scheme != Scheme::Niederreiter || c.scheme != Scheme::Niederreiter {
        return None;
    }
    let f = sk.code.spec();
    let n = sk.code.n();
    let k = sk.code.k();
    if c.body.len() != n - k || c.body.iter().any(|&x| x >= f.q()) {
        return None;
    }
    let parity = sk.code.dual().generator().clone();
    // c = e * (S*H*P)^T, so S^-1 * c is the secret-parity syndrome of the
    // masked error
    let s_inv = sk.s.inverse().expect("validated invertible");
    let syndrome = s_inv.apply_right(&c.body);
    let witness = parity.solve(&syndrome)?;
    let decoder = Decoder::new(&sk.code, &sk.pair).ok()?;
    let (_, masked_err) = decoder.decode(&witness)?;
    // undo the column mask: masked_err[perm[j]] = scale_j * e[j]
    let mut e = vec![0u64; n];
    for j in 0..n {
        let x = masked_err[sk.perm[j]];
        e[j] = match &sk.scale {
            Some(sc) => f.mul(f.inv(sc[j]).expect("validated nonzero"), x),
            None => x,
        };
    }
    // re-encrypt: the public syndrome of e must be the exact input
    let again = sk.s.apply_right(&parity.apply_right(&masked_err));
    if again != c.body {
        return None;
    }
    Some(e)
}

/// The bare syndrome map e -> e * H^T of an arbitrary parity-check matrix,
/// restricted to low-weight inputs. There is no decoding path: with a random
/// H this is a one-way compression, usable as a hash of weight-t words.
pub fn sb_hash(h: &Matrix, e: &[u64], t: usize) -> Result<Vec<u64>> {
    if e.len() != h.cols() {
        return Err(Error::Shape(format!(
            "input length {} does not match {} columns",
            e.len(),
            h.cols()
        )));
    }
    if e.iter().any(|&x| x >= h.spec().q()) {
        return Err(Error::InvalidParameter("input entry out of field range".into()));
    }
    let w = weight(e);
    if w > t {
        return Err(Error::WeightExceeded { got: w, budget: t });
    }
    Ok(h.apply_right(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distinguish::classify;
    use crate::families::{goppa_code, grs_code, grs_ecp, sample_error, GrsSpec};
    use crate::rng::{rng_from_seed, trial_rng};

    fn gf(p: u64, e: usize) -> FieldSpec {
        FieldSpec::with_default_modulus(p, e).unwrap()
    }

    fn grs_instance() -> (FieldSpec, LinearCode, EcpPair) {
        let f = gf(13, 1);
        let a: Vec<u64> = (0..12).collect();
        let b: Vec<u64> = (1..13).collect();
        let g = GrsSpec::new(&f, &a, &b, 4).unwrap();
        let code = grs_code(&g);
        let pair = grs_ecp(&g).unwrap();
        (f, code, pair)
    }

    fn goppa_instance() -> (FieldSpec, LinearCode, EcpPair) {
        let f16 = gf(2, 4);
        let f2 = gf(2, 1);
        let support: Vec<u64> = (1..16).collect();
        let c0 = f16
            .els()
            .find(|&c| {
                support
                    .iter()
                    .chain([&0])
                    .all(|&x| f16.add(f16.add(f16.mul(x, x), x), c) != 0)
            })
            .unwrap();
        let (code, pair) = goppa_code(&f16, &f2, &support, &[c0, 1, 1]).unwrap();
        (f2, code, pair)
    }

    #[test]
    fn trivial_mask_exposes_the_bare_matrices() {
        let (f, code, pair) = grs_instance();
        let id_perm: Vec<usize> = (0..12).collect();
        let kp = keygen_with_mask(
            &code,
            &pair,
            Scheme::McEliece,
            Matrix::identity(&f, 4),
            id_perm.clone(),
            None,
        )
        .unwrap();
        assert_eq!(kp.public.matrix(), code.generator());
        let kp = keygen_with_mask(
            &code,
            &pair,
            Scheme::Niederreiter,
            Matrix::identity(&f, 8),
            id_perm,
            None,
        )
        .unwrap();
        assert_eq!(kp.public.matrix(), code.dual().generator());
    }

    #[test]
    fn keygen_validates_its_inputs() {
        let (f, code, pair) = grs_instance();
        let id4 = Matrix::identity(&f, 4);
        let id_perm: Vec<usize> = (0..12).collect();
        // wrong scrambler side for the scheme
        assert!(keygen_with_mask(
            &code,
            &pair,
            Scheme::Niederreiter,
            id4.clone(),
            id_perm.clone(),
            None
        )
        .is_err());
        // not a permutation
        assert!(keygen_with_mask(
            &code,
            &pair,
            Scheme::McEliece,
            id4.clone(),
            vec![0; 12],
            None
        )
        .is_err());
        // singular scrambler
        assert!(keygen_with_mask(
            &code,
            &pair,
            Scheme::McEliece,
            Matrix::zero(&f, 4, 4),
            id_perm.clone(),
            None
        )
        .is_err());
        // zero scale
        assert!(keygen_with_mask(
            &code,
            &pair,
            Scheme::McEliece,
            id4,
            id_perm,
            Some(vec![0; 12])
        )
        .is_err());
    }

    #[test]
    fn keygen_rejects_a_pair_with_a_weak_component() {
        let (f, code, pair) = grs_instance();
        // replace B by the repetition span: products still annihilate the
        // code, but the dual distance of B drops to 2 <= t
        let ones = LinearCode::from_rows(&f, 12, &[vec![1u64; 12]]).unwrap();
        let weak = EcpPair::new(
            pair.a().clone(),
            ones,
            pair.t(),
            pair.extension().clone(),
        )
        .unwrap();
        let mut rng = rng_from_seed(3);
        assert!(matches!(
            keygen(&code, &weak, Scheme::McEliece, &mut rng),
            Err(Error::UnverifiedPair(_))
        ));
    }

    #[test]
    fn mceliece_round_trip_recovers_message_and_error() {
        let (_, code, pair) = grs_instance();
        let mut rng = rng_from_seed(7);
        let kp = keygen(&code, &pair, Scheme::McEliece, &mut rng).unwrap();
        for trial in 0..50u64 {
            let mut trng = trial_rng(7, trial);
            let m: Vec<u64> = (0..4).map(|_| trng.gen_range(0..13)).collect();
            let (c, e) = mceliece_encrypt_sampled(&kp.public, &m, &mut trng).unwrap();
            let (got_m, got_e) = mceliece_decrypt(&kp.secret, &c).expect("round trip");
            assert_eq!(got_m, m);
            assert_eq!(got_e, e);
        }
    }

    #[test]
    fn monomial_mask_round_trips_too() {
        let (_, code, pair) = grs_instance();
        let mut rng = rng_from_seed(11);
        let kp = keygen_monomial(&code, &pair, Scheme::McEliece, &mut rng).unwrap();
        assert!(kp.secret.scale().is_some());
        for trial in 0..25u64 {
            let mut trng = trial_rng(11, trial);
            let m: Vec<u64> = (0..4).map(|_| trng.gen_range(0..13)).collect();
            let (c, e) = mceliece_encrypt_sampled(&kp.public, &m, &mut trng).unwrap();
            assert_eq!(mceliece_decrypt(&kp.secret, &c), Some((m, e)));
        }
        let kp = keygen_monomial(&code, &pair, Scheme::Niederreiter, &mut rng).unwrap();
        for trial in 0..25u64 {
            let mut trng = trial_rng(13, trial);
            let e = sample_error(kp.public.spec(), 12, 4, &mut trng).unwrap();
            let c = niederreiter_encrypt(&kp.public, &e).unwrap();
            assert_eq!(niederreiter_decrypt(&kp.secret, &c), Some(e));
        }
    }

    #[test]
    fn zero_ciphertext_decrypts_to_zero() {
        let (_, code, pair) = grs_instance();
        let mut rng = rng_from_seed(17);
        let kp = keygen(&code, &pair, Scheme::McEliece, &mut rng).unwrap();
        let c = Ciphertext { scheme: Scheme::McEliece, body: vec![0; 12] };
        let (m, e) = mceliece_decrypt(&kp.secret, &c).unwrap();
        assert_eq!(m, vec![0; 4]);
        assert_eq!(e, vec![0; 12]);
        // and encrypting zero with zero error gives the zero vector
        let c = mceliece_encrypt(&kp.public, &[0; 4], &[0; 12]).unwrap();
        assert_eq!(c.body, vec![0; 12]);
    }

    #[test]
    fn encrypt_rejects_bad_inputs() {
        let (_, code, pair) = grs_instance();
        let mut rng = rng_from_seed(19);
        let kp = keygen(&code, &pair, Scheme::McEliece, &mut rng).unwrap();
        let heavy = vec![1u64; 12];
        assert!(matches!(
            mceliece_encrypt(&kp.public, &[1, 2, 3, 4], &heavy),
            Err(Error::WeightExceeded { .. })
        ));
        assert!(mceliece_encrypt(&kp.public, &[1, 2, 3], &[0; 12]).is_err());
        assert!(mceliece_encrypt(&kp.public, &[1, 2, 3, 13], &[0; 12]).is_err());
        assert!(niederreiter_encrypt(&kp.public, &[0; 12]).is_err());
        let nkp = keygen(&code, &pair, Scheme::Niederreiter, &mut rng).unwrap();
        assert!(matches!(
            niederreiter_encrypt(&nkp.public, &heavy),
            Err(Error::WeightExceeded { .. })
        ));
        // scheme and length confusion decrypts to nothing
        assert!(mceliece_decrypt(&kp.secret, &Ciphertext {
            scheme: Scheme::Niederreiter,
            body: vec![0; 12]
        })
        .is_none());
        assert!(niederreiter_decrypt(&nkp.secret, &Ciphertext {
            scheme: Scheme::Niederreiter,
            body: vec![0; 3]
        })
        .is_none());
    }

    #[test]
    fn overweight_tampering_is_rejected() {
        let (f, code, pair) = grs_instance();
        let mut rng = rng_from_seed(23);
        let kp = keygen(&code, &pair, Scheme::McEliece, &mut rng).unwrap();
        // distance 9 leaves room for five errors to still be closest to the
        // original codeword, so filter tampering patterns by the exhaustive
        // nearest-codeword distance
        let public_code =
            LinearCode::from_rows(&f, 12, &(0..4).map(|i| kp.public.matrix().row(i).to_vec()).collect::<Vec<_>>())
                .unwrap();
        let mut rejected = 0;
        'outer: for trial in 0..200u64 {
            let mut trng = trial_rng(23, trial);
            let m: Vec<u64> = (0..4).map(|_| trng.gen_range(0..13)).collect();
            let e = sample_error(&f, 12, 5, &mut trng).unwrap();
            // encryption itself refuses the overweight error
            assert!(mceliece_encrypt(&kp.public, &m, &e).is_err());
            let encoded = kp.public.matrix().apply_left(&m);
            let body: Vec<u64> = (0..12).map(|j| f.add(encoded[j], e[j])).collect();
            let c = Ciphertext { scheme: Scheme::McEliece, body };
            // only keep words farther than t from every codeword
            let mut best = usize::MAX;
            for msg_idx in 0..13u64.pow(4) {
                let mut msg = vec![0u64; 4];
                let mut v = msg_idx;
                for slot in msg.iter_mut() {
                    *slot = v % 13;
                    v /= 13;
                }
                let cw = public_code.encode(&msg);
                let d = (0..12).filter(|&j| cw[j] != c.body[j]).count();
                best = best.min(d);
                if best <= 4 {
                    continue 'outer;
                }
            }
            assert!(best > 4);
            assert_eq!(mceliece_decrypt(&kp.secret, &c), None);
            rejected += 1;
            if rejected >= 5 {
                break;
            }
        }
        assert!(rejected >= 5, "no tampering pattern survived the filter");
    }

    #[test]
    fn niederreiter_round_trip_and_far_syndrome() {
        let (_, code, pair) = grs_instance();
        let mut rng = rng_from_seed(29);
        let kp = keygen(&code, &pair, Scheme::Niederreiter, &mut rng).unwrap();
        for trial in 0..50u64 {
            let mut trng = trial_rng(29, trial);
            let e = sample_error(kp.public.spec(), 12, 4, &mut trng).unwrap();
            let c = niederreiter_encrypt(&kp.public, &e).unwrap();
            assert_eq!(niederreiter_decrypt(&kp.secret, &c), Some(e));
        }
        // weight zero is the degenerate test mode
        let c = niederreiter_encrypt(&kp.public, &[0; 12]).unwrap();
        assert_eq!(c.body, vec![0; 8]);
        assert_eq!(niederreiter_decrypt(&kp.secret, &c), Some(vec![0; 12]));

        // tiny instance: enumerate every weight-<=2 syndrome and pick one
        // outside that set; decryption must report absence
        let f = gf(5, 1);
        let g = GrsSpec::new(&f, &[0, 1, 2, 3, 4], &[1; 5], 1).unwrap();
        let tiny_code = grs_code(&g);
        let tiny_pair = grs_ecp(&g).unwrap();
        let mut rng = rng_from_seed(31);
        let tiny = keygen(&tiny_code, &tiny_pair, Scheme::Niederreiter, &mut rng).unwrap();
        let mut reachable = std::collections::HashSet::new();
        for mask in 0u32..(1 << 5) {
            if mask.count_ones() > 2 {
                continue;
            }
            let positions: Vec<usize> = (0..5).filter(|&j| mask >> j & 1 == 1).collect();
            let mut values = vec![1u64; positions.len()];
            loop {
                let mut e = vec![0u64; 5];
                for (slot, &p) in positions.iter().enumerate() {
                    e[p] = values[slot];
                }
                reachable.insert(niederreiter_encrypt(&tiny.public, &e).unwrap().body);
                // advance the odometer over nonzero values
                let mut carry = true;
                for v in values.iter_mut() {
                    if !carry {
                        break;
                    }
                    *v += 1;
                    if *v == 5 {
                        *v = 1;
                    } else {
                        carry = false;
                    }
                }
                if carry {
                    break;
                }
            }
        }
        assert!(reachable.len() < 5usize.pow(4));
        let mut far = None;
        'search: for idx in 0..5u64.pow(4) {
            let mut s = vec![0u64; 4];
            let mut v = idx;
            for slot in s.iter_mut() {
                *slot = v % 5;
                v /= 5;
            }
            if !reachable.contains(&s) {
                far = Some(s);
                break 'search;
            }
        }
        let far = far.expect("syndrome space is larger than the ball");
        let c = Ciphertext { scheme: Scheme::Niederreiter, body: far };
        assert_eq!(niederreiter_decrypt(&tiny.secret, &c), None);
    }

    #[test]
    fn schemes_share_syndrome_algebra_under_a_common_permutation() {
        let (f, code, pair) = grs_instance();
        let mut rng = rng_from_seed(37);
        let perm = random_permutation(12, &mut rng);
        let s_m = random_invertible(&f, 4, &mut rng).unwrap();
        let s_n = random_invertible(&f, 8, &mut rng).unwrap();
        let mc = keygen_with_mask(&code, &pair, Scheme::McEliece, s_m, perm.clone(), None)
            .unwrap();
        let ni = keygen_with_mask(&code, &pair, Scheme::Niederreiter, s_n, perm, None)
            .unwrap();
        for trial in 0..20u64 {
            let mut trng = trial_rng(37, trial);
            let m: Vec<u64> = (0..4).map(|_| trng.gen_range(0..13)).collect();
            let e = sample_error(&f, 12, 4, &mut trng).unwrap();
            let mc_body = mceliece_encrypt(&mc.public, &m, &e).unwrap().body;
            let syn_of_ciphertext = ni.public.matrix().apply_right(&mc_body);
            let syn_of_error = niederreiter_encrypt(&ni.public, &e).unwrap().body;
            assert_eq!(syn_of_ciphertext, syn_of_error);
        }
    }

    #[test]
    fn masking_preserves_the_code_up_to_permutation_and_verdict() {
        let (f, code, pair) = grs_instance();
        let mut rng = rng_from_seed(41);
        for kp in [
            keygen(&code, &pair, Scheme::McEliece, &mut rng).unwrap(),
            keygen_monomial(&code, &pair, Scheme::McEliece, &mut rng).unwrap(),
        ] {
            let rows: Vec<Vec<u64>> = (0..4)
                .map(|i| kp.public.matrix().row(i).to_vec())
                .collect();
            let public_code = LinearCode::from_rows(&f, 12, &rows).unwrap();
            // the public row space is exactly the masked secret code
            let masked_rows: Vec<Vec<u64>> = (0..4)
                .map(|i| kp.secret.mask(code.generator().row(i)))
                .collect();
            let masked_code = LinearCode::from_rows(&f, 12, &masked_rows).unwrap();
            assert_eq!(public_code, masked_code);
            let public_report = classify(&public_code).unwrap();
            let secret_report = classify(&code).unwrap();
            assert_eq!(public_report.verdict, secret_report.verdict);
            assert_eq!(public_report.dim_square, secret_report.dim_square);
        }
    }

    #[test]
    fn goppa_keys_round_trip_over_the_binary_field() {
        let (_, code, pair) = goppa_instance();
        let mut rng = rng_from_seed(43);
        let kp = keygen(&code, &pair, Scheme::McEliece, &mut rng).unwrap();
        assert_eq!((kp.public.n(), kp.public.k(), kp.public.t()), (15, 7, 1));
        for trial in 0..20u64 {
            let mut trng = trial_rng(43, trial);
            let m: Vec<u64> = (0..7).map(|_| trng.gen_range(0..2)).collect();
            let (c, e) = mceliece_encrypt_sampled(&kp.public, &m, &mut trng).unwrap();
            assert_eq!(mceliece_decrypt(&kp.secret, &c), Some((m, e)));
        }
        let kp = keygen(&code, &pair, Scheme::Niederreiter, &mut rng).unwrap();
        for trial in 0..20u64 {
            let mut trng = trial_rng(47, trial);
            let e = sample_error(kp.public.spec(), 15, 1, &mut trng).unwrap();
            let c = niederreiter_encrypt(&kp.public, &e).unwrap();
            assert_eq!(niederreiter_decrypt(&kp.secret, &c), Some(e));
        }
    }

    #[test]
    fn weight_sampler_uses_every_position_uniformly() {
        let f = gf(7, 1);
        let (n, w, draws) = (10usize, 3usize, 10_000u64);
        let mut counts = vec![0u64; n];
        for trial in 0..draws {
            let mut rng = trial_rng(53, trial);
            let e = sample_error(&f, n, w, &mut rng).unwrap();
            for (j, &v) in e.iter().enumerate() {
                if v != 0 {
                    counts[j] += 1;
                }
            }
        }
        // each position is hit with probability w/n; three standard
        // deviations around the mean of the binomial count
        let mean = draws as f64 * w as f64 / n as f64;
        let sigma = (mean * (1.0 - w as f64 / n as f64)).sqrt();
        for (j, &c) in counts.iter().enumerate() {
            assert!(
                (c as f64 - mean).abs() <= 3.0 * sigma,
                "position {j} hit {c} times, expected {mean:.0} +- {:.0}",
                3.0 * sigma
            );
        }
    }

    #[test]
    fn sb_hash_is_linear_and_deterministic() {
        let f = gf(7, 1);
        let mut rng = rng_from_seed(59);
        let mut h = Matrix::zero(&f, 3, 8);
        for i in 0..3 {
            for j in 0..8 {
                h.set(i, j, rng.gen_range(0..7));
            }
        }
        assert_eq!(sb_hash(&h, &[0; 8], 2).unwrap(), vec![0; 3]);
        let e1 = sample_error(&f, 8, 2, &mut rng).unwrap();
        let e2 = sample_error(&f, 8, 2, &mut rng).unwrap();
        let sum: Vec<u64> = (0..8).map(|j| f.add(e1[j], e2[j])).collect();
        let lhs: Vec<u64> = sb_hash(&h, &e1, 8)
            .unwrap()
            .iter()
            .zip(sb_hash(&h, &e2, 8).unwrap())
            .map(|(&a, b)| f.add(a, b))
            .collect();
        assert_eq!(lhs, sb_hash(&h, &sum, 8).unwrap());
        assert_eq!(sb_hash(&h, &e1, 8).unwrap(), sb_hash(&h, &e1, 8).unwrap());
        assert!(matches!(
            sb_hash(&h, &[1; 8], 2),
            Err(Error::WeightExceeded { .. })
        ));
        assert!(sb_hash(&h, &[1; 5], 2).is_err());
    }
}
