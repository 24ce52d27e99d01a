//! Brute-force ground truth and algebraic self-checks.
//!
//! Everything here is slow on purpose: exhaustive distance enumeration and
//! direct verification of the series identities that justify the bounds.
//! Enumeration order is lexicographic in message coefficients (m_0 most
//! significant), and the reported witness is the first message attaining the
//! final minimum, so results are reproducible bit for bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{Codeword, CyclicCode, Locator};
use crate::field::{Element, Embedding, Field};
use crate::poly::Poly;
use crate::{Error, Result};

pub const DEFAULT_ENUM_CAP: u64 = 1 << 24;

#[derive(Clone, Debug)]
pub struct DistanceResult {
    pub distance: u64,
    pub witness: Codeword,
    /// Number of nonzero messages enumerated, q^k - 1.
    pub enumerated: u64,
}

/// Exhaustive minimum distance of a cyclic code.
///
/// Enumerates all q^k - 1 nonzero messages; errors when that count exceeds
/// `cap`. No early exit: the full sweep doubles as a soundness check on the
/// encoder.
pub fn min_distance(code: &CyclicCode, cap: u64) -> Result<DistanceResult> {
    let q = code.q();
    let k = code.k();
    let mut needed: u128 = 1;
    for _ in 0..k {
        needed = needed.saturating_mul(q as u128);
        if needed > cap as u128 {
            return Err(Error::EnumCapExceeded { needed, cap });
        }
    }
    if q == 2 && k <= 32 && code.n() <= 63 {
        return min_distance_binary(code);
    }
    min_distance_generic(code)
}

fn min_distance_binary(code: &CyclicCode) -> Result<DistanceResult> {
    let k = code.k() as u32;
    let n = code.n() as usize;
    let mut g_mask: u64 = 0;
    for (i, &c) in code.generator().coeff_values().iter().enumerate() {
        g_mask |= c << i;
    }
    let mut best = u32::MAX;
    let mut best_msg: u64 = 0;
    for rank in 1u64..(1u64 << k) {
        // Bit j of the message polynomial is m_j; lexicographic order on
        // (m_0, ..., m_{k-1}) is numeric order on the reversed bits.
        let msg = rank.reverse_bits() >> (64 - k);
        let mut word: u64 = 0;
        let mut m = msg;
        while m != 0 {
            let j = m.trailing_zeros();
            word ^= g_mask << j;
            m &= m - 1;
        }
        let w = word.count_ones();
        if w < best {
            best = w;
            best_msg = msg;
        }
    }
    let mut word: u64 = 0;
    let mut m = best_msg;
    while m != 0 {
        let j = m.trailing_zeros();
        word ^= g_mask << j;
        m &= m - 1;
    }
    let values: Vec<u64> = (0..n).map(|i| (word >> i) & 1).collect();
    let witness = Codeword::from_values(code.alphabet(), &values)?;
    Ok(DistanceResult {
        distance: best as u64,
        witness,
        enumerated: (1u64 << k) - 1,
    })
}

fn min_distance_generic(code: &CyclicCode) -> Result<DistanceResult> {
    let q = code.q();
    let k = code.k() as usize;
    let n = code.n() as usize;
    let field = code.alphabet().clone();
    let p = field.p();
    let a = field.t() as usize;
    let gen = code.generator().coeff_values().to_vec();
    // Stepping a coefficient value v -> v+1 with c trailing base-p digits
    // equal to p-1 adds the element with digits 1 at positions 0..=c, so one
    // scaled copy of the generator per carry length keeps `word` equal to
    // the current message times the generator.
    let mut scaled: Vec<Vec<u64>> = Vec::with_capacity(a);
    let mut delta: u64 = 0;
    let mut p_pow: u64 = 1;
    for _ in 0..a {
        delta += p_pow;
        p_pow *= p;
        scaled.push(gen.iter().map(|&g| field.mul_raw(g, delta)).collect());
    }
    // digits[j] is the value of the coefficient of x^j; index k-1 advances
    // fastest, which is lexicographic order with m_0 most significant.
    let mut digits = vec![0u64; k];
    let mut word = vec![0u64; n];
    let mut best = u64::MAX;
    let mut best_msg = vec![0u64; k];
    let mut enumerated = 0u64;
    'outer: loop {
        let mut j = k - 1;
        loop {
            let v = digits[j];
            if v == q - 1 {
                // full wrap: q steps add q copies of the generator, net zero
                digits[j] = 0;
                for (i, &g) in scaled[a - 1].iter().enumerate() {
                    word[j + i] = field.add_raw(word[j + i], g);
                }
                if j == 0 {
                    break 'outer;
                }
                j -= 1;
            } else {
                let mut c = 0;
                let mut rest = v;
                while rest % p == p - 1 {
                    c += 1;
                    rest /= p;
                }
                digits[j] = v + 1;
                for (i, &g) in scaled[c].iter().enumerate() {
                    word[j + i] = field.add_raw(word[j + i], g);
                }
                break;
            }
        }
        enumerated += 1;
        let w = word.iter().filter(|&&v| v != 0).count() as u64;
        if w < best {
            best = w;
            best_msg = digits.clone();
        }
    }
    let witness = code.encode_values(&best_msg)?;
    Ok(DistanceResult { distance: best, witness, enumerated })
}

/// Joint verification context for a code and a locator: the smallest field
/// containing designated roots of unity for both lengths, with both
/// alphabets embedded into it.
///
/// beta is the image of the locator's own designated root, so locator
/// codewords keep their root structure after embedding.
pub struct PairContext {
    code: CyclicCode,
    locator_code: CyclicCode,
    common: Field,
    alpha: Element,
    beta: Element,
    emb_code: Embedding,
    emb_locator: Embedding,
}

impl PairContext {
    pub fn new(code: &CyclicCode, locator: &Locator, field_cap: u64) -> Result<PairContext> {
        let locator_code = locator.realize(field_cap)?;
        let p = code.alphabet().p();
        if locator_code.alphabet().p() != p {
            return Err(Error::IncompatibleFields {
                src_p: locator_code.alphabet().p(),
                src_t: locator_code.alphabet().t(),
                dst_p: p,
                dst_t: code.alphabet().t(),
            });
        }
        let d1 = code.splitting_field().t() as u64;
        let d2 = locator_code.splitting_field().t() as u64;
        let t = u32::try_from(num_integer::lcm(d1, d2))
            .map_err(|_| Error::FieldCapExceeded { p, t: u32::MAX, cap: field_cap })?;
        let common = Field::with_cap(p, t, field_cap)?;
        let alpha = code
            .splitting_field()
            .embedding_into(&common)?
            .apply(code.alpha());
        let beta = locator_code
            .splitting_field()
            .embedding_into(&common)?
            .apply(locator_code.alpha());
        let emb_code = code.alphabet().embedding_into(&common)?;
        let emb_locator = locator_code.alphabet().embedding_into(&common)?;
        Ok(PairContext {
            code: code.clone(),
            locator_code,
            common,
            alpha,
            beta,
            emb_code,
            emb_locator,
        })
    }

    pub fn code(&self) -> &CyclicCode {
        &self.code
    }

    /// The locator realized as a cyclic code over its own alphabet.
    pub fn locator_code(&self) -> &CyclicCode {
        &self.locator_code
    }

    pub fn common_field(&self) -> &Field {
        &self.common
    }

    pub fn alpha(&self) -> &Element {
        &self.alpha
    }

    pub fn beta(&self) -> &Element {
        &self.beta
    }

    fn code_poly(&self, c: &[u64]) -> Result<Poly> {
        Poly::from_values(self.code.alphabet(), c)
    }

    fn locator_poly(&self, a: &[u64]) -> Result<Poly> {
        Poly::from_values(self.locator_code.alphabet(), a)
    }

    /// The series coefficient c(alpha^(j+e)) * a(beta^j) in the common field.
    pub fn series_term(&self, c: &[u64], a: &[u64], e: u64, j: u64) -> Result<Element> {
        let cp = self.code_poly(c)?;
        let ap = self.locator_poly(a)?;
        let x = self.alpha.pow((j + e) as i64)?;
        let y = self.beta.pow(j as i64)?;
        Ok(&cp.eval_via(&self.emb_code, &x) * &ap.eval_via(&self.emb_locator, &y))
    }
}

/// First index j in [0, mu-2] where c(alpha^(j+e)) * a(beta^j) fails to
/// vanish, or None when the whole prefix vanishes.
pub fn definition2_holds(
    ctx: &PairContext,
    c: &[u64],
    a: &[u64],
    e: u64,
    mu: u64,
) -> Result<Option<u64>> {
    let cp = ctx.code_poly(c)?;
    let ap = ctx.locator_poly(a)?;
    for j in 0..mu.saturating_sub(1) {
        let x = ctx.alpha.pow((j + e) as i64)?;
        let y = ctx.beta.pow(j as i64)?;
        let term = &cp.eval_via(&ctx.emb_code, &x) * &ap.eval_via(&ctx.emb_locator, &y);
        if !term.is_zero() {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub struct Def2Failure {
    pub pair: u64,
    pub j: u64,
}

#[derive(Clone, Debug)]
pub struct Def2Report {
    pub pass: bool,
    pub pairs: u64,
    pub seed: u64,
    pub first_failure: Option<Def2Failure>,
}

/// Samples codeword/locator-word pairs and checks the vanishing prefix of
/// length mu-1 on each.
///
/// The first pair uses minimum-weight words from both codes when the
/// enumeration caps allow; the rest are seeded uniform samples.
pub fn verify_definition2(
    code: &CyclicCode,
    locator: &Locator,
    e: u64,
    mu: u64,
    trials: u64,
    seed: u64,
    enum_cap: u64,
    field_cap: u64,
) -> Result<Def2Report> {
    let ctx = PairContext::new(code, locator, field_cap)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    let min_pair = match (
        min_distance(code, enum_cap),
        min_distance(ctx.locator_code(), enum_cap),
    ) {
        (Ok(c), Ok(a)) => Some((c.witness.values().to_vec(), a.witness.values().to_vec())),
        (Err(Error::EnumCapExceeded { .. }), _) | (_, Err(Error::EnumCapExceeded { .. })) => None,
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    if let Some(p) = min_pair {
        pairs.push(p);
    }
    while (pairs.len() as u64) < trials {
        let c = random_codeword(&ctx.code, &mut rng)?;
        let a = random_codeword(&ctx.locator_code, &mut rng)?;
        pairs.push((c, a));
    }
    for (idx, (c, a)) in pairs.iter().enumerate() {
        if let Some(j) = definition2_holds(&ctx, c, a, e, mu)? {
            return Ok(Def2Report {
                pass: false,
                pairs: pairs.len() as u64,
                seed,
                first_failure: Some(Def2Failure { pair: idx as u64, j }),
            });
        }
    }
    Ok(Def2Report { pass: true, pairs: pairs.len() as u64, seed, first_failure: None })
}

fn random_codeword(code: &CyclicCode, rng: &mut ChaCha8Rng) -> Result<Vec<u64>> {
    let q = code.q();
    let k = code.k() as usize;
    loop {
        let msg: Vec<u64> = (0..k).map(|_| rng.gen_range(0..q)).collect();
        if msg.iter().any(|&v| v != 0) {
            return Ok(code.encode_values(&msg)?.values().to_vec());
        }
    }
}

#[derive(Clone)]
pub struct RationalForm {
    pub num: Poly,
    pub den: Poly,
    /// Whether the fraction is already in lowest terms.
    pub reduced: bool,
}

/// Partial-fraction sum of the double series over the supports of c and a:
/// den is the product of (1 - alpha^i beta^l x) over support pairs, num the
/// matching sum of cofactors weighted by c_i a_l alpha^(i e).
pub fn rational_form(ctx: &PairContext, c: &[u64], a: &[u64], e: u64) -> Result<RationalForm> {
    let common = ctx.common_field();
    let cp = ctx.code_poly(c)?;
    let ap = ctx.locator_poly(a)?;
    let mut factors: Vec<(Element, Poly)> = Vec::new();
    for (i, &cv) in c.iter().enumerate() {
        if cv == 0 {
            continue;
        }
        let ci = cp.coeff(i);
        let ci_common = ctx.emb_code.apply(&ci);
        let aie = ctx.alpha.pow((i as u64 * e) as i64)?;
        for (l, &av) in a.iter().enumerate() {
            if av == 0 {
                continue;
            }
            let al_common = ctx.emb_locator.apply(&ap.coeff(l));
            let pole = &ctx.alpha.pow(i as i64)? * &ctx.beta.pow(l as i64)?;
            let factor = &Poly::one(common) - &Poly::monomial(&pole, 1);
            let weight = &(&ci_common * &al_common) * &aie;
            factors.push((weight, factor));
        }
    }
    let mut den = Poly::one(common);
    for (_, f) in &factors {
        den = &den * f;
    }
    let mut num = Poly::zero(common);
    for (w, f) in &factors {
        let (cofactor, rem) = den.divmod(f)?;
        debug_assert!(rem.is_zero());
        num = &num + &cofactor.scale(w);
    }
    let g = num.gcd(&den)?;
    let reduced = g.degree() == Some(0);
    Ok(RationalForm { num, den, reduced })
}

/// Checks that the per-support factor products share no common root, i.e.
/// that the poles of the partial fractions are pairwise distinct across the
/// support of c.
pub fn verify_coprime_factors(ctx: &PairContext, c: &[u64], a: &[u64]) -> Result<bool> {
    let common = ctx.common_field();
    let mut blocks: Vec<Poly> = Vec::new();
    for (i, &cv) in c.iter().enumerate() {
        if cv == 0 {
            continue;
        }
        let mut block = Poly::one(common);
        for (l, &av) in a.iter().enumerate() {
            if av == 0 {
                continue;
            }
            let pole = &ctx.alpha.pow(i as i64)? * &ctx.beta.pow(l as i64)?;
            block = &block * &(&Poly::one(common) - &Poly::monomial(&pole, 1));
        }
        blocks.push(block);
    }
    for (i, bi) in blocks.iter().enumerate() {
        for bj in blocks.iter().skip(i + 1) {
            if bi.gcd(bj)?.degree() != Some(0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compares direct evaluations c(alpha^j) for j < terms against the same
/// prefix assembled from geometric series expansions of the support.
pub fn verify_series_identity(code: &CyclicCode, c: &[u64], terms: usize) -> Result<bool> {
    let split = code.splitting_field();
    let emb = code.embedding();
    let cp = Poly::from_values(code.alphabet(), c)?;
    let mut summed = vec![split.zero(); terms];
    for (i, &cv) in c.iter().enumerate() {
        if cv == 0 {
            continue;
        }
        let ci = emb.apply(&cp.coeff(i));
        let root = code.alpha().pow(i as i64)?;
        let den = &Poly::one(split) - &Poly::monomial(&root, 1);
        let num = Poly::monomial(&ci, 0);
        let series = Poly::series_quotient(&num, &den, terms)?;
        for (acc, term) in summed.iter_mut().zip(series) {
            *acc = &*acc + &term;
        }
    }
    for (j, expected) in summed.iter().enumerate() {
        let direct = cp.eval_via(emb, &code.alpha().pow(j as i64)?);
        if direct != *expected {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DefiningSet;
    use crate::field::DEFAULT_FIELD_CAP;

    #[test]
    fn hamming_distance_is_three() {
        let code = CyclicCode::build(2, 7, &[1]).unwrap();
        let r = min_distance(&code, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r.distance, 3);
        assert_eq!(r.enumerated, 15);
        assert_eq!(r.witness.weight(), 3);
        assert!(code.contains(&r.witness).unwrap());
    }

    #[test]
    fn parity_code_distance_is_two() {
        let code = CyclicCode::build(2, 7, &[0]).unwrap();
        assert_eq!(min_distance(&code, DEFAULT_ENUM_CAP).unwrap().distance, 2);
    }

    #[test]
    fn binary_21_7_distance_is_eight() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let r = min_distance(&code, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r.distance, 8);
        assert_eq!(r.enumerated, 127);
        assert_eq!(r.witness.weight(), 8);
        assert!(code.contains(&r.witness).unwrap());
    }

    #[test]
    fn witness_is_first_in_lexicographic_message_order() {
        let code = CyclicCode::build(2, 3, &[0]).unwrap();
        let r = min_distance(&code, DEFAULT_ENUM_CAP).unwrap();
        // message (m_0, m_1) = (0, 1) comes first and already has weight 2
        assert_eq!(r.witness.values(), &[0, 1, 1]);
    }

    #[test]
    fn generic_path_matches_mds_distance() {
        let rs = Locator::reed_solomon(16, 5, 3, 0).unwrap();
        let code = rs.realize(DEFAULT_FIELD_CAP).unwrap();
        let r = min_distance(&code, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(r.distance, 3);
        assert_eq!(r.enumerated, 16u64.pow(3) - 1);
        assert!(code.contains(&r.witness).unwrap());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        assert!(matches!(
            min_distance(&code, 100),
            Err(Error::EnumCapExceeded { .. })
        ));
    }

    #[test]
    fn pair_context_builds_the_smallest_common_field() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let loc = Locator::reed_solomon(16, 5, 4, 0).unwrap();
        let ctx = PairContext::new(&code, &loc, DEFAULT_FIELD_CAP).unwrap();
        assert_eq!(ctx.common_field().t(), 12);
        assert_eq!(ctx.alpha().order().unwrap(), 21);
        assert_eq!(ctx.beta().order().unwrap(), 5);
    }

    #[test]
    fn definition2_prefix_on_the_21_7_code() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let loc = Locator::reed_solomon(16, 5, 4, 0).unwrap();
        let ctx = PairContext::new(&code, &loc, DEFAULT_FIELD_CAP).unwrap();
        let c = Codeword::from_poly(code.alphabet(), code.generator(), 21);
        let lc = ctx.locator_code().clone();
        let a = Codeword::from_poly(lc.alphabet(), lc.generator(), 5);
        // coverage holds up to j = 12 and breaks exactly at j = 13
        assert_eq!(
            definition2_holds(&ctx, c.values(), a.values(), 0, 14).unwrap(),
            None
        );
        assert_eq!(
            definition2_holds(&ctx, c.values(), a.values(), 0, 15).unwrap(),
            Some(13)
        );
        let report =
            verify_definition2(&code, &loc, 0, 14, 6, 7, DEFAULT_ENUM_CAP, DEFAULT_FIELD_CAP)
                .unwrap();
        assert!(report.pass);
        assert_eq!(report.pairs, 6);
    }

    #[test]
    fn rational_form_degrees() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let loc = Locator::reed_solomon(16, 5, 4, 0).unwrap();
        let ctx = PairContext::new(&code, &loc, DEFAULT_FIELD_CAP).unwrap();
        let c = min_distance(&code, DEFAULT_ENUM_CAP).unwrap().witness;
        let a = min_distance(ctx.locator_code(), DEFAULT_ENUM_CAP)
            .unwrap()
            .witness;
        let form = rational_form(&ctx, c.values(), a.values(), 0).unwrap();
        let pairs = (c.weight() * a.weight()) as usize;
        assert_eq!(form.den.degree(), Some(pairs));
        assert!(form.num.degree().unwrap_or(0) <= pairs - 1);
        // the vanishing prefix forces the numerator degree up to mu - 1
        assert!(form.num.degree().unwrap() >= 13);
        assert!(!form.den.coeff(0).is_zero());
    }

    #[test]
    fn coprime_factors_detect_shared_poles() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let c = Codeword::from_poly(code.alphabet(), code.generator(), 21);

        let good = Locator::parity_check(5).unwrap();
        let ctx = PairContext::new(&code, &good, DEFAULT_FIELD_CAP).unwrap();
        let a = ctx.locator_code().encode_values(&[1]).unwrap();
        assert!(verify_coprime_factors(&ctx, c.values(), a.values()).unwrap());

        // length 7 shares a factor with 21: poles collide
        let bad = Locator::parity_check(7).unwrap();
        let ctx = PairContext::new(&code, &bad, DEFAULT_FIELD_CAP).unwrap();
        let ones = vec![1u64; 7];
        assert!(!verify_coprime_factors(&ctx, c.values(), &ones).unwrap());
    }

    #[test]
    fn series_identity_for_codewords() {
        let code = CyclicCode::build(2, 21, &[1, 3, 7, 9]).unwrap();
        let c = code.encode_values(&[1, 0, 1, 1, 0, 1]).unwrap();
        assert!(verify_series_identity(&code, c.values(), 42).unwrap());
        let custom = DefiningSet::new(13, 3, &[0]).unwrap();
        let code3 = CyclicCode::from_defining_set(&custom).unwrap();
        let c3 = code3.encode_values(&[1, 2, 0, 1]).unwrap();
        assert!(verify_series_identity(&code3, c3.values(), 26).unwrap());
    }
}
