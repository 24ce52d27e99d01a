//! Minimum-distance lower bounds computed from a code's defining set: the
//! BCH bound, the Hartmann-Tzeng bound (direct and normalized forms), and
//! the non-zero-locator bound, together with closed-form evaluators for the
//! parity-check and Reed-Solomon locator families.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use num_integer::Integer;

use crate::code::{DefiningSet, Locator, LocatorFamily};
use crate::error::Error;
use crate::field::{is_prime, prime_power};
use crate::Result;

/// Largest length accepted by the exhaustive Hartmann-Tzeng searches.
pub const HT_LENGTH_CAP: u64 = 255;

/// A consecutive run {b, b+1, ..., b+len-1} mod n inside a defining set,
/// certifying minimum distance at least len + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BchWitness {
    pub b: u64,
    pub len: u64,
}

impl BchWitness {
    pub fn bound(&self) -> u64 {
        self.len + 1
    }

    pub fn validate(&self, set: &DefiningSet) -> Result<()> {
        let n = set.n();
        if self.b >= n || self.len == 0 || self.len >= n {
            return Err(Error::BadParameter(format!(
                "run (b = {}, len = {}) does not fit in Z_{}",
                self.b, self.len, n
            )));
        }
        for i in 0..self.len {
            let x = (self.b + i) % n;
            if !set.contains_raw(x) {
                return Err(Error::BadParameter(format!(
                    "run element {x} is not in the defining set"
                )));
            }
        }
        Ok(())
    }
}

/// The pattern {b1 + i1*m1 + i2*m2 : 0 <= i1 <= d0-2, 0 <= i2 <= nu} mod n,
/// certifying minimum distance at least d0 + nu when contained in the
/// defining set and gcd(n, m1) = gcd(n, m2) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HtWitness {
    pub b1: u64,
    pub m1: u64,
    pub m2: u64,
    pub d0: u64,
    pub nu: u64,
}

impl HtWitness {
    pub fn bound(&self) -> u64 {
        self.d0 + self.nu
    }

    pub fn validate(&self, set: &DefiningSet) -> Result<()> {
        let n = set.n();
        if self.d0 < 2 || self.d0 > n || self.nu >= n || self.b1 >= n {
            return Err(Error::BadParameter(format!(
                "pattern shape (b1 = {}, d0 = {}, nu = {}) does not fit in Z_{}",
                self.b1, self.d0, self.nu, n
            )));
        }
        for (m, name) in [(self.m1, "m1"), (self.m2, "m2")] {
            if m == 0 || m >= n {
                return Err(Error::BadParameter(format!("{name} = {m} is not in [1, {n})")));
            }
            if m.gcd(&n) != 1 {
                return Err(Error::NotCoprime { a: m, b: n });
            }
        }
        for i1 in 0..self.d0 - 1 {
            for i2 in 0..=self.nu {
                let x = (self.b1 + i1 * self.m1 + i2 * self.m2) % n;
                if !set.contains_raw(x) {
                    return Err(Error::BadParameter(format!(
                        "pattern element {x} is not in the defining set"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Normalized form: the pattern {b2 + i1*m + i2 : 0 <= i1 <= d0-2,
/// 0 <= i2 <= nu} mod n contained in the unit multiple u*S, with
/// gcd(n, m) = 1 and m > nu + 1 (m is lifted by multiples of n when the
/// smallest residue would violate that).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HtNormalizedWitness {
    pub u: u64,
    pub b2: u64,
    pub m: u64,
    pub d0: u64,
    pub nu: u64,
}

impl HtNormalizedWitness {
    pub fn bound(&self) -> u64 {
        self.d0 + self.nu
    }

    pub fn validate(&self, set: &DefiningSet) -> Result<()> {
        let n = set.n();
        if self.d0 < 2 || self.d0 > n || self.nu >= n || self.b2 >= n {
            return Err(Error::BadParameter(format!(
                "pattern shape (b2 = {}, d0 = {}, nu = {}) does not fit in Z_{}",
                self.b2, self.d0, self.nu, n
            )));
        }
        if self.m <= self.nu + 1 {
            return Err(Error::BadParameter(format!(
                "step m = {} must exceed nu + 1 = {}",
                self.m,
                self.nu + 1
            )));
        }
        if self.m.gcd(&n) != 1 {
            return Err(Error::NotCoprime { a: self.m, b: n });
        }
        let shifted = set.unit_multiple(self.u)?;
        let step = self.m % n;
        for i1 in 0..self.d0 - 1 {
            for i2 in 0..=self.nu {
                let x = (self.b2 + i1 * step + i2) % n;
                if !shifted.contains_raw(x) {
                    return Err(Error::BadParameter(format!(
                        "pattern element {x} is not in the {}-multiple of the defining set",
                        self.u
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Offset e and window size mu such that every j in [0, mu-2] satisfies
/// (j+e) mod n in S or j mod n_l in D_L, and j = mu-1 does not; certifies
/// minimum distance at least ceil(mu / d_l).
#[derive(Clone, Debug)]
pub struct NzlWitness {
    pub locator: Locator,
    pub e: u64,
    pub mu: u64,
}

impl NzlWitness {
    pub fn bound(&self) -> u64 {
        self.mu.div_ceil(self.locator.d_l())
    }

    pub fn validate(&self, set: &DefiningSet) -> Result<()> {
        check_locator_admissible(set, &self.locator)?;
        let n = set.n();
        let nl = self.locator.n_l();
        let window = n * nl;
        if self.mu == 0 || self.mu > window || self.e >= window {
            return Err(Error::BadParameter(format!(
                "witness (e = {}, mu = {}) does not fit the coverage window of length {window}",
                self.e, self.mu
            )));
        }
        let locator_set = self.locator.defining_set();
        let e = self.e % n;
        let covered =
            |j: u64| set.contains_raw((j % n + e) % n) || locator_set.contains_raw(j % nl);
        for j in 0..self.mu - 1 {
            if !covered(j) {
                return Err(Error::BadParameter(format!("coverage fails at position {j}")));
            }
        }
        if covered(self.mu - 1) {
            return Err(Error::BadParameter(format!(
                "coverage extends past the claimed window at position {}",
                self.mu - 1
            )));
        }
        Ok(())
    }
}

/// Longest consecutive run in the defining set; the witness run has maximal
/// length with the smallest start.
pub fn bch_bound(set: &DefiningSet) -> Result<(u64, BchWitness)> {
    guard_proper(set)?;
    let runs = run_table(set, 1);
    let mut b = 0u64;
    let mut len = 0u64;
    for (x, &r) in runs.iter().enumerate() {
        if u64::from(r) > len {
            len = u64::from(r);
            b = x as u64;
        }
    }
    Ok((len + 1, BchWitness { b, len }))
}

/// Exhaustive Hartmann-Tzeng search: the maximum of d0 + nu over all
/// patterns contained in the set, with the lexicographically smallest
/// witness tuple (nu, m1, m2, b1).
pub fn ht_bound(set: &DefiningSet) -> Result<(u64, HtWitness)> {
    guard_proper(set)?;
    guard_length(set)?;
    let n = set.n();
    let units = unit_residues(n);
    let tables: Vec<Vec<u32>> = units.iter().map(|&m| run_table(set, m)).collect();
    let value = ht_value(n, &units, &tables);
    for nu in 0..=value - 2 {
        let d0 = value - nu;
        let width = d0 - 1;
        let height = nu + 1;
        if nu == 0 {
            // m2 never appears in a height-1 pattern; 1 is its smallest legal value
            for (i, &m1) in units.iter().enumerate() {
                for b1 in 0..n {
                    if u64::from(tables[i][b1 as usize]) >= width {
                        return Ok((value, HtWitness { b1, m1, m2: 1, d0, nu }));
                    }
                }
            }
        } else {
            for &m1 in &units {
                for (i2, &m2) in units.iter().enumerate() {
                    let runs = &tables[i2];
                    'start: for b1 in 0..n {
                        let mut x = b1;
                        for _ in 0..width {
                            if u64::from(runs[x as usize]) < height {
                                continue 'start;
                            }
                            x = (x + m1) % n;
                        }
                        return Ok((value, HtWitness { b1, m1, m2, d0, nu }));
                    }
                }
            }
        }
    }
    unreachable!("the value phase established an achievable pattern");
}

/// Hartmann-Tzeng search in normalized form: patterns {b2 + i1*m + i2} over
/// unit multiples u*S. The value always equals ht_bound's (a unit change of
/// variables maps witnesses both ways); the witness minimizes (nu, u, m, b2).
pub fn ht_bound_normalized(set: &DefiningSet) -> Result<(u64, HtNormalizedWitness)> {
    guard_proper(set)?;
    guard_length(set)?;
    let n = set.n();
    let units = unit_residues(n);
    let tables: Vec<Vec<u32>> = units.iter().map(|&m| run_table(set, m)).collect();
    let value = ht_value(n, &units, &tables);
    for nu in 0..=value - 2 {
        let d0 = value - nu;
        let width = d0 - 1;
        let height = nu + 1;
        let mut steps: Vec<(u64, u64)> = units
            .iter()
            .map(|&r| {
                let mut m = r;
                while m <= nu + 1 {
                    m += n;
                }
                (m, r)
            })
            .collect();
        steps.sort_unstable();
        for &u in &units {
            let shifted = set.unit_multiple(u).expect("unit residues are coprime to n");
            let runs = run_table(&shifted, 1);
            for &(m, step) in &steps {
                'start: for b2 in 0..n {
                    let mut x = b2;
                    for _ in 0..width {
                        if u64::from(runs[x as usize]) < height {
                            continue 'start;
                        }
                        x = (x + step) % n;
                    }
                    return Ok((value, HtNormalizedWitness { u, b2, m, d0, nu }));
                }
            }
        }
    }
    unreachable!("every direct witness transforms into a normalized one");
}

/// Builds exactly {b2 + i1*m + i2 : 0 <= i1 <= d0-2, 0 <= i2 <= nu} mod n as
/// a defining set, over the smallest prime alphabet coprime to m*n.
pub fn synth_ht_pattern(b2: u64, m: u64, d0: u64, nu: u64, n: u64) -> Result<DefiningSet> {
    if n == 0 || m == 0 || d0 < 2 {
        return Err(Error::BadParameter(format!(
            "pattern requires n >= 1, m >= 1, d0 >= 2, got n = {n}, m = {m}, d0 = {d0}"
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { a: m, b: n });
    }
    if m <= nu + 1 {
        return Err(Error::BadParameter(format!(
            "step m = {m} must exceed nu + 1 = {}",
            nu + 1
        )));
    }
    let expected = (d0 - 1) * (nu + 1);
    if expected > n {
        return Err(Error::PatternCollision { n: n as usize });
    }
    let step = m % n;
    let base = b2 % n;
    let mut members = BTreeSet::new();
    for i1 in 0..d0 - 1 {
        for i2 in 0..=nu {
            members.insert((base + i1 * step + i2) % n);
        }
    }
    if members.len() as u64 != expected {
        return Err(Error::PatternCollision { n: n as usize });
    }
    let q = (2u64..)
        .find(|&p| is_prime(p) && m % p != 0 && n % p != 0)
        .expect("primes are unbounded");
    let elems: Vec<i64> = members.into_iter().map(|x| x as i64).collect();
    DefiningSet::new(n, q, &elems)
}

/// Length of the covered prefix: the first j >= 0 where neither
/// (j+e) mod n lies in `code_set` nor j mod n_l lies in `locator_set`.
pub fn nzl_run(code_set: &DefiningSet, locator_set: &DefiningSet, e: u64) -> Result<u64> {
    let n = code_set.n();
    let nl = locator_set.n();
    if n.gcd(&nl) != 1 {
        return Err(Error::NotCoprime { a: n, b: nl });
    }
    let window = n
        .checked_mul(nl)
        .ok_or_else(|| Error::BadParameter("coverage window length overflows".into()))?;
    let e = e % n;
    for j in 0..window {
        if !(code_set.contains_raw((j % n + e) % n) || locator_set.contains_raw(j % nl)) {
            return Ok(j);
        }
    }
    Err(Error::DegenerateCoverage)
}

/// Best non-zero-locator bound for one locator: maximizes the covered run
/// over all offsets, then certifies ceil(mu / d_l). The coverage pattern is
/// periodic in e with period n, so offsets [0, n) realize every alignment
/// and the smallest maximizing offset lies among them.
pub fn nzl_bound(set: &DefiningSet, locator: &Locator) -> Result<(u64, NzlWitness)> {
    check_locator_admissible(set, locator)?;
    let mut best_run = 0u64;
    let mut best_e = 0u64;
    let mut found = false;
    for e in 0..set.n() {
        let run = nzl_run(set, locator.defining_set(), e)?;
        if !found || run > best_run {
            found = true;
            best_run = run;
            best_e = e;
        }
    }
    let mu = best_run + 1;
    let value = mu.div_ceil(locator.d_l());
    Ok((value, NzlWitness { locator: locator.clone(), e: best_e, mu }))
}

/// Locator families to sweep in nzl_search. Lengths that fail a structural
/// requirement (shared factor with n or with the alphabet, unrealizable
/// Reed-Solomon parameters) are skipped, not reported as errors.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub parity_lengths: Vec<u64>,
    pub rs_lengths: Vec<u64>,
    pub custom: Vec<Locator>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            parity_lengths: (2..=8).collect(),
            rs_lengths: (2..=8).collect(),
            custom: Vec::new(),
        }
    }
}

/// Best nzl_bound over every admissible candidate locator. Ties prefer
/// smaller n_l, then smaller d_l, then smaller offset; for Reed-Solomon
/// lengths every dimension k_l in [1, n_l - 1] is tried.
pub fn nzl_search(set: &DefiningSet, config: &SearchConfig) -> Result<(u64, NzlWitness)> {
    let mut best: Option<(u64, NzlWitness)> = None;
    for &nl in &config.parity_lengths {
        let Ok(locator) = Locator::parity_check(nl) else { continue };
        consider(set, &locator, &mut best)?;
    }
    for &m in &config.rs_lengths {
        for k in (1..m).rev() {
            let Ok(locator) = Locator::reed_solomon_for(set.q(), m, k, 0) else { continue };
            consider(set, &locator, &mut best)?;
        }
    }
    for locator in &config.custom {
        consider(set, locator, &mut best)?;
    }
    best.ok_or(Error::EmptySearchConfig)
}

fn consider(
    set: &DefiningSet,
    locator: &Locator,
    best: &mut Option<(u64, NzlWitness)>,
) -> Result<()> {
    match nzl_bound(set, locator) {
        Ok((value, witness)) => {
            let better = match best {
                None => true,
                Some((best_value, best_witness)) => {
                    let new = (Reverse(value), witness.locator.n_l(), witness.locator.d_l(), witness.e);
                    let old = (
                        Reverse(*best_value),
                        best_witness.locator.n_l(),
                        best_witness.locator.d_l(),
                        best_witness.e,
                    );
                    new < old
                }
            };
            if better {
                *best = Some((value, witness));
            }
            Ok(())
        }
        Err(Error::NotCoprime { .. }) | Err(Error::LocatorInvalid(_)) => Ok(()),
        Err(e) => Err(e),
    }
}

/// Closed form of the non-zero-locator bound for a single parity check
/// locator of length nu + 2 on the standard pattern: ceil(((nu+2)d0 - nu)/2).
pub fn parity_bound_formula(d0: u64, nu: u64) -> u64 {
    ((nu + 2) * d0).saturating_sub(nu).div_ceil(2)
}

/// Closed form for a Reed-Solomon locator of length m and distance m - nu on
/// the standard pattern: ceil((m*d0 - nu)/(m - nu)). Requires m > nu + 1.
pub fn rs_bound_formula(d0: u64, nu: u64, m: u64) -> Result<u64> {
    if m <= nu + 1 {
        return Err(Error::BadParameter(format!(
            "requires m > nu + 1, got m = {m}, nu = {nu}"
        )));
    }
    Ok((m * d0).saturating_sub(nu).div_ceil(m - nu))
}

/// Whether the Reed-Solomon locator bound strictly beats d0 + nu; equals the
/// predicate d0 > m - nu + 1.
pub fn prop1_improves(d0: u64, nu: u64, m: u64) -> Result<bool> {
    Ok(rs_bound_formula(d0, nu, m)? > d0 + nu)
}

/// All three bounds for one defining set. true_distance is left unset; fill
/// it from the enumeration oracle when the code is small enough.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub defining: DefiningSet,
    pub bch: u64,
    pub bch_witness: BchWitness,
    pub ht: u64,
    pub ht_witness: HtWitness,
    pub nzl: u64,
    pub nzl_witness: NzlWitness,
    pub true_distance: Option<u64>,
}

pub fn bound_report(set: &DefiningSet, families: &SearchConfig) -> Result<BoundReport> {
    let (bch, bch_witness) = bch_bound(set)?;
    let (ht, ht_witness) = ht_bound(set)?;
    let (nzl, nzl_witness) = nzl_search(set, families)?;
    Ok(BoundReport {
        defining: set.clone(),
        bch,
        bch_witness,
        ht,
        ht_witness,
        nzl,
        nzl_witness,
        true_distance: None,
    })
}

fn guard_proper(set: &DefiningSet) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptyDefiningSet);
    }
    if set.is_full() {
        return Err(Error::FullDefiningSet);
    }
    Ok(())
}

fn guard_length(set: &DefiningSet) -> Result<()> {
    if set.n() > HT_LENGTH_CAP {
        return Err(Error::LengthCapExceeded {
            n: set.n() as usize,
            cap: HT_LENGTH_CAP as usize,
        });
    }
    Ok(())
}

fn unit_residues(n: u64) -> Vec<u64> {
    (1..n).filter(|m| m.gcd(&n) == 1).collect()
}

/// runs[x] = number of consecutive members x, x+m, x+2m, ... of the set.
/// Walking the step-m cycle backward from a non-member finishes each entry
/// before it is read.
fn run_table(set: &DefiningSet, m: u64) -> Vec<u32> {
    let n = set.n();
    let mut runs = vec![0u32; n as usize];
    let start = (0..n)
        .find(|&x| !set.contains_raw(x))
        .expect("a proper set has a non-member");
    let mut x = start;
    for _ in 1..n {
        x = (x + n - m) % n;
        if set.contains_raw(x) {
            runs[x as usize] = runs[((x + m) % n) as usize] + 1;
        }
    }
    runs
}

/// Maximum of d0 + nu over all patterns: for each pair of steps, the best
/// window along the m1-cycle of (length + minimum column height), taken over
/// windows whose minimum is positive.
fn ht_value(n: u64, units: &[u64], tables: &[Vec<u32>]) -> u64 {
    let len = n as usize;
    let mut best = 0u64;
    let mut cycle = vec![0usize; len];
    let mut heights = vec![0u32; len];
    for &m1 in units {
        let mut x = 0u64;
        for slot in cycle.iter_mut() {
            *slot = x as usize;
            x = (x + m1) % n;
        }
        for runs in tables {
            for (h, &pos) in heights.iter_mut().zip(cycle.iter()) {
                *h = runs[pos];
            }
            // a positive-minimum window never crosses a zero, so cutting the
            // cycle at one makes every candidate window contiguous
            let zero = heights
                .iter()
                .position(|&v| v == 0)
                .expect("a proper set has a zero-height column");
            heights.rotate_left(zero);
            best = best.max(best_window(&heights));
        }
    }
    best
}

/// Maximum over contiguous windows of (window length + minimum), restricted
/// to windows with positive minimum. heights[0] must be 0.
fn best_window(heights: &[u32]) -> u64 {
    let len = heights.len();
    let mut stack: Vec<usize> = Vec::new();
    let mut best = 0u64;
    for i in 0..=len {
        let cur = if i < len { heights[i] } else { 0 };
        while let Some(&top) = stack.last() {
            if heights[top] <= cur {
                break;
            }
            stack.pop();
            let left = stack.last().map_or(0, |&s| s + 1);
            best = best.max((i - left) as u64 + u64::from(heights[top]));
        }
        if i < len {
            stack.push(i);
        }
    }
    best
}

fn check_locator_admissible(set: &DefiningSet, locator: &Locator) -> Result<()> {
    let n = set.n();
    let nl = locator.n_l();
    if n.gcd(&nl) != 1 {
        return Err(Error::NotCoprime { a: n, b: nl });
    }
    if nl.gcd(&set.q()) != 1 {
        return Err(Error::LocatorInvalid(format!(
            "length {nl} shares a factor with the code alphabet {}",
            set.q()
        )));
    }
    let locator_set = locator.defining_set();
    if locator_set.is_empty() {
        return Err(Error::LocatorInvalid(
            "an empty locator defining set certifies nothing".into(),
        ));
    }
    if locator_set.is_full() {
        return Err(Error::LocatorInvalid("locator defining set covers all of Z_n_l".into()));
    }
    if locator.d_l() < 2 {
        return Err(Error::LocatorInvalid("locator distance must be at least 2".into()));
    }
    if matches!(locator.family(), LocatorFamily::Custom) {
        let (code_char, _) = prime_power(set.q())?;
        let (locator_char, _) = prime_power(locator.q_l())?;
        if code_char != locator_char {
            return Err(Error::LocatorInvalid(format!(
                "locator distance was certified in characteristic {locator_char}, code has characteristic {code_char}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_code_set() -> DefiningSet {
        DefiningSet::new(21, 2, &[1, 3, 7, 9]).unwrap().closure()
    }

    fn mod13_subset() -> DefiningSet {
        DefiningSet::new(13, 2, &[1, 2, 4, 5, 8, 9, 11, 12]).unwrap()
    }

    #[test]
    fn bch_longest_run_of_example_code() {
        let set = example_code_set();
        let (value, witness) = bch_bound(&set).unwrap();
        assert_eq!(value, 5);
        assert_eq!(witness, BchWitness { b: 1, len: 4 });
        witness.validate(&set).unwrap();
    }

    #[test]
    fn bch_single_zero() {
        let set = DefiningSet::new(7, 2, &[0]).unwrap();
        let (value, witness) = bch_bound(&set).unwrap();
        assert_eq!(value, 2);
        assert_eq!(witness, BchWitness { b: 0, len: 1 });
    }

    #[test]
    fn bch_mod13_subset() {
        let (value, witness) = bch_bound(&mod13_subset()).unwrap();
        assert_eq!(value, 3);
        assert_eq!(witness, BchWitness { b: 1, len: 2 });
    }

    #[test]
    fn bch_run_wraps_around_zero() {
        let set = DefiningSet::new(7, 2, &[5, 6, 0, 1]).unwrap();
        let (value, witness) = bch_bound(&set).unwrap();
        assert_eq!(value, 5);
        assert_eq!(witness, BchWitness { b: 5, len: 4 });
        witness.validate(&set).unwrap();
    }

    #[test]
    fn bch_rejects_degenerate_sets() {
        let empty = DefiningSet::new(7, 2, &[]).unwrap();
        assert_eq!(bch_bound(&empty), Err(Error::EmptyDefiningSet));
        let full = DefiningSet::new(3, 2, &[0, 1, 2]).unwrap();
        assert_eq!(bch_bound(&full), Err(Error::FullDefiningSet));
    }

    #[test]
    fn ht_example_code_exhaustive() {
        let set = example_code_set();
        let (value, witness) = ht_bound(&set).unwrap();
        assert_eq!(value, 6);
        assert_eq!(witness, HtWitness { b1: 1, m1: 1, m2: 5, d0: 5, nu: 1 });
        witness.validate(&set).unwrap();
        let (bch, _) = bch_bound(&set).unwrap();
        assert!(value >= bch);
    }

    #[test]
    fn ht_single_run_reduces_to_bch() {
        let set = DefiningSet::new(11, 2, &[3, 4, 5, 6]).unwrap();
        let (value, witness) = ht_bound(&set).unwrap();
        assert_eq!(value, 5);
        assert_eq!(witness, HtWitness { b1: 3, m1: 1, m2: 1, d0: 5, nu: 0 });
    }

    #[test]
    fn ht_mod13_subset_is_an_arithmetic_progression() {
        let set = mod13_subset();
        let (value, witness) = ht_bound(&set).unwrap();
        assert_eq!(value, 9);
        assert_eq!(witness, HtWitness { b1: 9, m1: 3, m2: 1, d0: 9, nu: 0 });
        witness.validate(&set).unwrap();
    }

    #[test]
    fn ht_published_witnesses_revalidate() {
        let mod13 = HtWitness { b1: 8, m1: 3, m2: 1, d0: 5, nu: 1 };
        mod13.validate(&mod13_subset()).unwrap();
        assert_eq!(mod13.bound(), 6);
        let example = HtWitness { b1: 1, m1: 5, m2: 1, d0: 3, nu: 3 };
        example.validate(&example_code_set()).unwrap();
        assert_eq!(example.bound(), 6);
    }

    #[test]
    fn ht_witness_validation_catches_defects() {
        let set = example_code_set();
        let gap = HtWitness { b1: 1, m1: 1, m2: 1, d0: 6, nu: 0 };
        assert!(matches!(gap.validate(&set), Err(Error::BadParameter(_))));
        let shared = HtWitness { b1: 1, m1: 7, m2: 1, d0: 2, nu: 0 };
        assert_eq!(shared.validate(&set), Err(Error::NotCoprime { a: 7, b: 21 }));
    }

    #[test]
    fn ht_rejects_long_codes() {
        let set = DefiningSet::new(300, 7, &[1, 2]).unwrap();
        assert_eq!(
            ht_bound(&set),
            Err(Error::LengthCapExceeded { n: 300, cap: 255 })
        );
    }

    #[test]
    fn ht_normalized_example_code() {
        let set = example_code_set();
        let (value, witness) = ht_bound_normalized(&set).unwrap();
        assert_eq!(value, 6);
        assert_eq!(witness, HtNormalizedWitness { u: 1, b2: 3, m: 4, d0: 5, nu: 1 });
        witness.validate(&set).unwrap();
    }

    #[test]
    fn ht_normalized_matches_direct_value_mod13() {
        let set = mod13_subset();
        let (direct, _) = ht_bound(&set).unwrap();
        let (normalized, witness) = ht_bound_normalized(&set).unwrap();
        assert_eq!(direct, normalized);
        assert_eq!(witness, HtNormalizedWitness { u: 1, b2: 9, m: 3, d0: 9, nu: 0 });
        witness.validate(&set).unwrap();
    }

    #[test]
    fn ht_normalized_single_run_lifts_step() {
        let set = DefiningSet::new(7, 2, &[0, 1, 2]).unwrap();
        let (value, witness) = ht_bound_normalized(&set).unwrap();
        assert_eq!(value, 4);
        assert_eq!(witness, HtNormalizedWitness { u: 1, b2: 2, m: 6, d0: 4, nu: 0 });
        witness.validate(&set).unwrap();
    }

    #[test]
    fn synth_builds_the_advertised_pattern() {
        let set = synth_ht_pattern(0, 3, 3, 1, 13).unwrap();
        assert_eq!(set.members(), vec![0, 1, 3, 4]);
        assert_eq!(set.q(), 2);
        assert!(!set.is_closed());
        let narrow = synth_ht_pattern(0, 3, 2, 1, 13).unwrap();
        assert_eq!(narrow.members(), vec![0, 1]);
    }

    #[test]
    fn synth_reproduces_published_subset() {
        let set = synth_ht_pattern(1, 5, 3, 3, 21).unwrap();
        assert_eq!(set.members(), vec![1, 2, 3, 4, 6, 7, 8, 9]);
    }

    #[test]
    fn synth_picks_alphabet_coprime_to_step_and_length() {
        let set = synth_ht_pattern(0, 4, 4, 2, 35).unwrap();
        assert_eq!(set.members(), vec![0, 1, 2, 4, 5, 6, 8, 9, 10]);
        assert_eq!(set.q(), 3);
    }

    #[test]
    fn synth_rejects_bad_parameters() {
        assert_eq!(
            synth_ht_pattern(0, 5, 3, 1, 35),
            Err(Error::NotCoprime { a: 5, b: 35 })
        );
        assert!(matches!(
            synth_ht_pattern(0, 2, 3, 2, 35),
            Err(Error::BadParameter(_))
        ));
        assert_eq!(
            synth_ht_pattern(0, 3, 5, 1, 10),
            Err(Error::PatternCollision { n: 10 })
        );
    }

    #[test]
    fn synth_set_contains_a_hidden_progression() {
        // {0,1,2,4,5,6,8,9,10} mod 35 holds the step-2 run 0,2,4,6,8,10, so
        // the exhaustive searches exceed the pattern's designed 4 + 2
        let set = synth_ht_pattern(0, 4, 4, 2, 35).unwrap();
        let (direct, direct_witness) = ht_bound(&set).unwrap();
        assert_eq!(direct, 7);
        assert_eq!(direct_witness, HtWitness { b1: 0, m1: 2, m2: 1, d0: 7, nu: 0 });
        let (normalized, witness) = ht_bound_normalized(&set).unwrap();
        assert_eq!(normalized, 7);
        assert_eq!(witness, HtNormalizedWitness { u: 1, b2: 0, m: 2, d0: 7, nu: 0 });
    }

    #[test]
    fn nzl_run_example_configuration() {
        let set = example_code_set();
        let locator = Locator::parity_check(5).unwrap();
        assert_eq!(nzl_run(&set, locator.defining_set(), 0).unwrap(), 13);
    }

    #[test]
    fn nzl_run_mod13_offset_seven() {
        let set = mod13_subset();
        let locator_set = DefiningSet::new(3, 2, &[0]).unwrap();
        assert_eq!(nzl_run(&set, &locator_set, 7).unwrap(), 13);
    }

    #[test]
    fn nzl_run_empty_code_set() {
        let set = DefiningSet::new(7, 2, &[]).unwrap();
        let locator_set = DefiningSet::new(2, 2, &[0]).unwrap();
        assert_eq!(nzl_run(&set, &locator_set, 0).unwrap(), 1);
        assert_eq!(nzl_run(&set, &locator_set, 3).unwrap(), 1);
    }

    #[test]
    fn nzl_run_guards() {
        let set = example_code_set();
        let locator_set = DefiningSet::new(7, 2, &[0]).unwrap();
        assert_eq!(
            nzl_run(&set, &locator_set, 0),
            Err(Error::NotCoprime { a: 21, b: 7 })
        );
        let full = DefiningSet::new(7, 2, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        let parity = DefiningSet::new(2, 2, &[0]).unwrap();
        assert_eq!(nzl_run(&full, &parity, 0), Err(Error::DegenerateCoverage));
    }

    #[test]
    fn nzl_bound_example_with_parity_five() {
        let set = example_code_set();
        let locator = Locator::parity_check(5).unwrap();
        let (value, witness) = nzl_bound(&set, &locator).unwrap();
        assert_eq!(value, 7);
        assert_eq!(witness.e, 0);
        assert_eq!(witness.mu, 14);
        witness.validate(&set).unwrap();
    }

    #[test]
    fn nzl_bound_mod13_with_parity_three() {
        let set = mod13_subset();
        let locator = Locator::parity_check(3).unwrap();
        let (value, witness) = nzl_bound(&set, &locator).unwrap();
        assert_eq!(value, 7);
        assert_eq!(witness.e, 7);
        assert_eq!(witness.mu, 14);
        witness.validate(&set).unwrap();
    }

    #[test]
    fn nzl_bound_rejects_inadmissible_locators() {
        let set = example_code_set();
        let shared_length = Locator::parity_check(7).unwrap();
        assert!(matches!(
            nzl_bound(&set, &shared_length),
            Err(Error::NotCoprime { a: 21, b: 7 })
        ));
        let shared_alphabet = Locator::parity_check(2).unwrap();
        assert!(matches!(
            nzl_bound(&set, &shared_alphabet),
            Err(Error::LocatorInvalid(_))
        ));
        let whole_code = Locator::reed_solomon(16, 5, 5, 0).unwrap();
        assert!(matches!(
            nzl_bound(&set, &whole_code),
            Err(Error::LocatorInvalid(_))
        ));
    }

    #[test]
    fn nzl_witness_validation_catches_tampering() {
        let set = example_code_set();
        let locator = Locator::parity_check(5).unwrap();
        let (_, witness) = nzl_bound(&set, &locator).unwrap();
        let stretched = NzlWitness { mu: witness.mu + 1, ..witness.clone() };
        assert!(matches!(stretched.validate(&set), Err(Error::BadParameter(_))));
        let shrunk = NzlWitness { mu: witness.mu - 1, ..witness.clone() };
        assert!(matches!(shrunk.validate(&set), Err(Error::BadParameter(_))));
        let shifted = NzlWitness { e: witness.e + 1, ..witness };
        assert!(matches!(shifted.validate(&set), Err(Error::BadParameter(_))));
    }

    #[test]
    fn nzl_search_skips_inadmissible_parity_lengths() {
        let set = example_code_set();
        let config = SearchConfig {
            parity_lengths: vec![2, 4, 5, 8],
            rs_lengths: vec![],
            custom: vec![],
        };
        let (value, witness) = nzl_search(&set, &config).unwrap();
        assert_eq!(value, 7);
        assert_eq!(witness.locator.n_l(), 5);
        assert_eq!(witness.e, 0);
        assert_eq!(witness.locator.family_name(), "parity_check");
    }

    #[test]
    fn nzl_search_rs_family_matches_parity_at_top_dimension() {
        let set = example_code_set();
        let rs_only = SearchConfig {
            parity_lengths: vec![],
            rs_lengths: vec![5],
            custom: vec![],
        };
        let (rs_value, rs_witness) = nzl_search(&set, &rs_only).unwrap();
        let parity_only = SearchConfig {
            parity_lengths: vec![5],
            rs_lengths: vec![],
            custom: vec![],
        };
        let (parity_value, _) = nzl_search(&set, &parity_only).unwrap();
        assert_eq!(rs_value, parity_value);
        assert_eq!(rs_witness.locator.d_l(), 2);
        assert_eq!(rs_witness.locator.family_name(), "reed_solomon");
    }

    #[test]
    fn nzl_search_rejects_empty_configurations() {
        let set = example_code_set();
        let empty = SearchConfig { parity_lengths: vec![], rs_lengths: vec![], custom: vec![] };
        assert!(matches!(nzl_search(&set, &empty), Err(Error::EmptySearchConfig)));
        let all_filtered = SearchConfig {
            parity_lengths: vec![3, 7],
            rs_lengths: vec![],
            custom: vec![],
        };
        assert!(matches!(nzl_search(&set, &all_filtered), Err(Error::EmptySearchConfig)));
    }

    #[test]
    fn closed_forms_match_published_values() {
        assert_eq!(parity_bound_formula(3, 3), 6);
        assert_eq!(parity_bound_formula(4, 1), 6);
        assert_eq!(parity_bound_formula(2, 3), 4);
        assert_eq!(rs_bound_formula(8, 6, 8).unwrap(), 29);
        assert_eq!(rs_bound_formula(5, 0, 9).unwrap(), 5);
        assert!(matches!(rs_bound_formula(4, 3, 4), Err(Error::BadParameter(_))));
    }

    #[test]
    fn rs_formula_specializes_to_parity_formula() {
        for nu in 1..=6 {
            for d0 in 2..=20 {
                assert_eq!(
                    rs_bound_formula(d0, nu, nu + 2).unwrap(),
                    parity_bound_formula(d0, nu)
                );
            }
        }
    }

    #[test]
    fn prop1_matches_closed_predicate() {
        assert!(prop1_improves(4, 1, 3).unwrap());
        assert!(!prop1_improves(3, 1, 3).unwrap());
        for nu in 1..=6 {
            for d0 in 2..=20 {
                for m in nu + 2..=nu + 6 {
                    assert_eq!(prop1_improves(d0, nu, m).unwrap(), d0 > m - nu + 1);
                }
                assert!(!prop1_improves(d0, 0, nu + 2).unwrap());
            }
        }
    }

    #[test]
    fn bound_report_for_example_code() {
        let set = example_code_set();
        let report = bound_report(&set, &SearchConfig::default()).unwrap();
        assert_eq!(report.bch, 5);
        assert_eq!(report.ht, 6);
        assert_eq!(report.nzl, 7);
        assert_eq!(report.true_distance, None);
        report.bch_witness.validate(&set).unwrap();
        report.ht_witness.validate(&set).unwrap();
        report.nzl_witness.validate(&set).unwrap();
    }

    #[test]
    fn bounds_grow_with_the_set() {
        let small = DefiningSet::new(17, 2, &[1, 2, 5]).unwrap();
        let large = DefiningSet::new(17, 2, &[1, 2, 3, 5, 6]).unwrap();
        assert!(bch_bound(&small).unwrap().0 <= bch_bound(&large).unwrap().0);
        assert!(ht_bound(&small).unwrap().0 <= ht_bound(&large).unwrap().0);
        let config = SearchConfig::default();
        assert!(nzl_search(&small, &config).unwrap().0 <= nzl_search(&large, &config).unwrap().0);
    }
}
