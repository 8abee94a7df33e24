//! Exact closed-form size bounds and monomial-class counting.
//!
//! All values are arbitrary-precision integers; nothing here rounds or
//! estimates. Three bound families are exposed:
//!
//! - [`delsarte_bound`]: `Σ_{i=0}^{s} C(n,i)(q-1)^i` for any family over a
//!   q-ary alphabet realizing at most `s` distances.
//! - [`symmetric_family_bound`]: the parity-split refinement for binary
//!   families whose distance set is Hamming symmetric, using only even or
//!   only odd binomial terms depending on whether `n/2` is realized.
//! - [`conjecture_bound`]: the conjectured q-ary analogue of the parity
//!   split. For `q = 2` it coincides with `symmetric_family_bound`, which is
//!   a tested invariant; for `q > 2` it is *unproven* and is only used by
//!   the empirical explorer in [`crate::search`].

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Which closed form produced a [`BoundResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaId {
    DelsarteQ,
    DelsarteBinary,
    SymmetricEvenCase,
    SymmetricOddCase,
    ConjectureEvenCase,
    ConjectureOddCase,
}

impl FormulaId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormulaId::DelsarteQ => "delsarte_q",
            FormulaId::DelsarteBinary => "delsarte_binary",
            FormulaId::SymmetricEvenCase => "symmetric_even_case",
            FormulaId::SymmetricOddCase => "symmetric_odd_case",
            FormulaId::ConjectureEvenCase => "conjecture_even_case",
            FormulaId::ConjectureOddCase => "conjecture_odd_case",
        }
    }

    /// True for the two formulas that are conjectural rather than proven.
    pub fn is_conjectural(&self) -> bool {
        matches!(self, FormulaId::ConjectureEvenCase | FormulaId::ConjectureOddCase)
    }
}

impl std::fmt::Display for FormulaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters a bound was evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundParams {
    pub n: u64,
    pub s: u64,
    pub q: u64,
    pub half_in: bool,
}

/// An evaluated bound: the exact value plus enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    value: BigUint,
    formula: FormulaId,
    params: BoundParams,
}

impl BoundResult {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn formula(&self) -> FormulaId {
        self.formula
    }

    pub fn params(&self) -> BoundParams {
        self.params
    }
}

/// `Σ_{i=0}^{s} C(n,i)(q-1)^i`: any q-ary family whose distinct members
/// realize at most `s` distances has at most this many members. Requires
/// `1 <= s <= n` and `q >= 2`.
pub fn delsarte_bound(n: u64, s: u64, q: u64) -> Result<BoundResult> {
    if q < 2 {
        return Err(Error::domain(format!("alphabet size q = {q} must be at least 2")));
    }
    if s == 0 || s > n {
        return Err(Error::domain(format!(
            "distance count s = {s} outside [1, n] for n = {n}"
        )));
    }
    let qm1 = BigUint::from(q - 1);
    let mut value = BigUint::zero();
    for i in 0..=s {
        value += binomial(n, i) * qm1.pow(i as u32);
    }
    let formula = if q == 2 { FormulaId::DelsarteBinary } else { FormulaId::DelsarteQ };
    Ok(BoundResult { value, formula, params: BoundParams { n, s, q, half_in: false } })
}

/// Sum of `C(n, i)` over `i <= s` with `i` even (`parity = 0`) or odd
/// (`parity = 1`), weighted by `(q-1)^i`. The odd sum is empty when `s = 0`.
fn parity_weighted_sum(n: u64, s: u64, q: u64, odd: bool) -> BigUint {
    let qm1 = BigUint::from(q - 1);
    let mut value = BigUint::zero();
    let mut i = if odd { 1 } else { 0 };
    while i <= s {
        value += binomial(n, i) * qm1.pow(i as u32);
        i += 2;
    }
    value
}

/// Parity-split bound for a binary family with a Hamming-symmetric distance
/// set of size `s`:
///
/// - `half_in = false` (distance `n/2` not realized): `Σ_{j<=s/2} C(n, 2j)`.
/// - `half_in = true` (distance `n/2` realized): `Σ_{2j+1<=s} C(n, 2j+1)`.
///
/// Requires `0 <= s <= n`; `s = 0` is accepted (singleton families) and gives
/// 1. `half_in = true` additionally requires even `n` and `s >= 1`.
pub fn symmetric_family_bound(n: u64, s: u64, half_in: bool) -> Result<BoundResult> {
    check_parity_split_args(n, s, half_in)?;
    let value = parity_weighted_sum(n, s, 2, half_in);
    let formula = if half_in {
        FormulaId::SymmetricOddCase
    } else {
        FormulaId::SymmetricEvenCase
    };
    Ok(BoundResult { value, formula, params: BoundParams { n, s, q: 2, half_in } })
}

/// Conjectured q-ary analogue of [`symmetric_family_bound`]:
/// `Σ C(n,i)(q-1)^i` over even `i <= s` (`half_in = false`) or odd `i <= s`
/// (`half_in = true`). Proven only for `q = 2`, where it equals
/// `symmetric_family_bound`; treat values for `q > 2` as conjectural.
pub fn conjecture_bound(n: u64, s: u64, q: u64, half_in: bool) -> Result<BoundResult> {
    if q < 2 {
        return Err(Error::domain(format!("alphabet size q = {q} must be at least 2")));
    }
    check_parity_split_args(n, s, half_in)?;
    let value = parity_weighted_sum(n, s, q, half_in);
    let formula = if half_in {
        FormulaId::ConjectureOddCase
    } else {
        FormulaId::ConjectureEvenCase
    };
    Ok(BoundResult { value, formula, params: BoundParams { n, s, q, half_in } })
}

fn check_parity_split_args(n: u64, s: u64, half_in: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    if s > n {
        return Err(Error::domain(format!("s = {s} exceeds n = {n}")));
    }
    if half_in {
        if n % 2 != 0 {
            return Err(Error::domain(format!(
                "half_in requires even n, got n = {n}"
            )));
        }
        if s == 0 {
            return Err(Error::domain("half_in requires at least one realized distance"));
        }
    }
    Ok(())
}

/// Parity of a monomial's total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeParity {
    Even,
    Odd,
}

/// A class of monomials in `n` variables with total degree of the given
/// parity, at most `s`. With `multilinear_only` every exponent is 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialClassSpec {
    pub n: u32,
    pub s: u32,
    pub parity: DegreeParity,
    pub multilinear_only: bool,
}

impl MonomialClassSpec {
    fn check(&self) -> Result<()> {
        if self.s > self.n {
            return Err(Error::domain(format!(
                "degree cap s = {} exceeds n = {}",
                self.s, self.n
            )));
        }
        Ok(())
    }
}

/// Closed-form size of a multilinear monomial class:
/// `Σ_{j<=s/2} C(n, 2j)` for even parity, `Σ_{2j+1<=s} C(n, 2j+1)` for odd.
/// Non-multilinear classes have no closed form here and are rejected; count
/// them by enumerating.
pub fn monomial_class_count(spec: MonomialClassSpec) -> Result<BigUint> {
    spec.check()?;
    if !spec.multilinear_only {
        return Err(Error::domain(
            "no closed-form count for non-multilinear classes; enumerate instead".to_string(),
        ));
    }
    let odd = matches!(spec.parity, DegreeParity::Odd);
    Ok(parity_weighted_sum(u64::from(spec.n), u64::from(spec.s), 2, odd))
}

/// Default ceiling on how many exponent vectors [`monomial_class_enumerate`]
/// will materialize.
pub const ENUMERATION_CAP: u64 = 1 << 20;

/// Enumerates a monomial class as exponent vectors in graded lexicographic
/// order: ascending total degree, then ascending lexicographic comparison of
/// the exponent vectors themselves.
///
/// Rejects non-multilinear classes with `n > 20` and any class whose exact
/// size exceeds [`ENUMERATION_CAP`]; the size is counted before anything is
/// allocated, so the guard fires without building a partial list.
pub fn monomial_class_enumerate(spec: MonomialClassSpec) -> Result<Vec<Vec<u32>>> {
    spec.check()?;
    let n = spec.n as usize;
    let odd = matches!(spec.parity, DegreeParity::Odd);

    let expected = if spec.multilinear_only {
        parity_weighted_sum(u64::from(spec.n), u64::from(spec.s), 2, odd)
    } else {
        if spec.n > 20 {
            return Err(Error::domain(format!(
                "non-multilinear enumeration capped at n = 20, got n = {}",
                spec.n
            )));
        }
        // Compositions of d into n parts: C(n + d - 1, d).
        let mut total = BigUint::zero();
        let mut d = u64::from(odd);
        while d <= u64::from(spec.s) {
            total += binomial(u64::from(spec.n) + d - 1, d);
            d += 2;
        }
        total
    };
    if expected > BigUint::from(ENUMERATION_CAP) {
        return Err(Error::resource(format!(
            "monomial class has {expected} members, over the cap of {ENUMERATION_CAP}"
        )));
    }

    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut degree = u32::from(odd);
    while degree <= spec.s {
        if spec.multilinear_only {
            for_each_subset(n, degree as usize, &mut |positions| {
                let mut v = vec![0u32; n];
                for &p in positions {
                    v[p] = 1;
                }
                out.push(v);
            });
        } else {
            let mut prefix = vec![0u32; n];
            compositions(&mut prefix, 0, degree, &mut |v| out.push(v.to_vec()));
        }
        degree += 2;
    }
    // Within each degree block, order lexicographically by exponent vector.
    out.sort();
    out.sort_by_key(|v| v.iter().sum::<u32>());
    debug_assert_eq!(BigUint::from(out.len() as u64), expected);
    Ok(out)
}

/// Calls `f` on every k-subset of `{0, …, n-1}`, positions ascending.
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut positions: Vec<usize> = (0..k).collect();
    loop {
        f(&positions);
        // Advance the rightmost position that can still move.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if positions[i] < n - (k - i) {
                break;
            }
        }
        positions[i] += 1;
        for j in i + 1..k {
            positions[j] = positions[j - 1] + 1;
        }
    }
}

/// Fills `prefix[from..]` with every composition of `remaining`, calling `f`
/// on each completed vector. Generates in ascending lex order.
fn compositions(prefix: &mut Vec<u32>, from: usize, remaining: u32, f: &mut impl FnMut(&[u32])) {
    if from == prefix.len() - 1 {
        prefix[from] = remaining;
        f(prefix);
        prefix[from] = 0;
        return;
    }
    for v in 0..=remaining {
        prefix[from] = v;
        compositions(prefix, from + 1, remaining - v, f);
    }
    prefix[from] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(10, 3), big(120));
        assert_eq!(binomial(4, 5), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(20, 10), big(184756));
        assert_eq!(binomial(64, 32), "1832624140942590534".parse().unwrap());
    }

    #[test]
    fn binomial_pascal_recurrence() {
        for n in 1..=30u64 {
            for k in 1..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn delsarte_examples() {
        let b = delsarte_bound(4, 3, 2).unwrap();
        assert_eq!(b.value(), &big(15));
        assert_eq!(b.formula(), FormulaId::DelsarteBinary);
        let b = delsarte_bound(2, 1, 3).unwrap();
        assert_eq!(b.value(), &big(5));
        assert_eq!(b.formula(), FormulaId::DelsarteQ);
        // Full range s = n recovers q^n only at q = 2; in general it is the
        // whole binomial expansion of ((q-1)+1)^n.
        assert_eq!(delsarte_bound(5, 5, 2).unwrap().value(), &big(32));
        assert_eq!(delsarte_bound(3, 3, 3).unwrap().value(), &big(27));
    }

    #[test]
    fn delsarte_domain_errors() {
        assert!(delsarte_bound(4, 0, 2).is_err());
        assert!(delsarte_bound(4, 5, 2).is_err());
        assert!(delsarte_bound(4, 2, 1).is_err());
    }

    #[test]
    fn delsarte_strictly_increasing_in_s() {
        for q in [2u64, 3, 5] {
            for n in 1..=12u64 {
                for s in 1..n {
                    let a = delsarte_bound(n, s, q).unwrap();
                    let b = delsarte_bound(n, s + 1, q).unwrap();
                    assert!(a.value() < b.value(), "n={n} s={s} q={q}");
                }
            }
        }
    }

    #[test]
    fn symmetric_bound_examples() {
        let b = symmetric_family_bound(4, 3, true).unwrap();
        assert_eq!(b.value(), &big(8));
        assert_eq!(b.formula(), FormulaId::SymmetricOddCase);
        let b = symmetric_family_bound(4, 2, false).unwrap();
        assert_eq!(b.value(), &big(7));
        assert_eq!(b.formula(), FormulaId::SymmetricEvenCase);
        // s = 0 covers singletons uniformly.
        assert_eq!(symmetric_family_bound(4, 0, false).unwrap().value(), &big(1));
        assert_eq!(symmetric_family_bound(6, 5, true).unwrap().value(), &big(32));
        assert_eq!(symmetric_family_bound(5, 4, false).unwrap().value(), &big(16));
    }

    #[test]
    fn symmetric_bound_domain_errors() {
        assert!(symmetric_family_bound(5, 2, true).is_err());
        assert!(symmetric_family_bound(4, 0, true).is_err());
        assert!(symmetric_family_bound(4, 5, false).is_err());
        assert!(symmetric_family_bound(0, 0, false).is_err());
    }

    #[test]
    fn odd_case_full_range_is_power_of_two() {
        // With every distance in [n-1] realized at even n, the odd-indexed
        // binomial sum collapses to 2^(n-1).
        for n in (2..=12u64).step_by(2) {
            let b = symmetric_family_bound(n, n - 1, true).unwrap();
            assert_eq!(b.value(), &(BigUint::from(1u64) << (n - 1)), "n={n}");
        }
    }

    #[test]
    fn conjecture_examples_and_q2_agreement() {
        assert_eq!(conjecture_bound(2, 1, 3, true).unwrap().value(), &big(4));
        assert_eq!(conjecture_bound(3, 2, 3, false).unwrap().value(), &big(13));
        for n in 1..=10u64 {
            for s in 0..=n {
                let c = conjecture_bound(n, s, 2, false).unwrap();
                let t = symmetric_family_bound(n, s, false).unwrap();
                assert_eq!(c.value(), t.value(), "n={n} s={s} even case");
                if n % 2 == 0 && s >= 1 {
                    let c = conjecture_bound(n, s, 2, true).unwrap();
                    let t = symmetric_family_bound(n, s, true).unwrap();
                    assert_eq!(c.value(), t.value(), "n={n} s={s} odd case");
                }
            }
        }
        assert!(conjecture_bound(3, 2, 3, true).is_err());
        assert!(conjecture_bound(4, 2, 1, false).is_err());
    }

    #[test]
    fn monomial_count_examples() {
        let q42 = MonomialClassSpec {
            n: 4,
            s: 2,
            parity: DegreeParity::Even,
            multilinear_only: true,
        };
        assert_eq!(monomial_class_count(q42).unwrap(), big(7));
        let r43 = MonomialClassSpec {
            n: 4,
            s: 3,
            parity: DegreeParity::Odd,
            multilinear_only: true,
        };
        assert_eq!(monomial_class_count(r43).unwrap(), big(8));
        // Odd multilinear class is empty at s = 0.
        let r0 = MonomialClassSpec {
            n: 4,
            s: 0,
            parity: DegreeParity::Odd,
            multilinear_only: true,
        };
        assert_eq!(monomial_class_count(r0).unwrap(), big(0));
        let t = MonomialClassSpec {
            n: 4,
            s: 2,
            parity: DegreeParity::Even,
            multilinear_only: false,
        };
        assert!(monomial_class_count(t).is_err());
    }

    #[test]
    fn parity_partition_of_the_cube() {
        // At s = n the even and odd multilinear classes partition all 2^n
        // subsets of [n].
        for n in 0..=12u32 {
            let even = monomial_class_count(MonomialClassSpec {
                n,
                s: n,
                parity: DegreeParity::Even,
                multilinear_only: true,
            })
            .unwrap();
            let odd = monomial_class_count(MonomialClassSpec {
                n,
                s: n,
                parity: DegreeParity::Odd,
                multilinear_only: true,
            })
            .unwrap();
            assert_eq!(even + odd, BigUint::from(1u64) << n, "n={n}");
        }
    }

    #[test]
    fn enumerate_multilinear_classes() {
        let q22 = monomial_class_enumerate(MonomialClassSpec {
            n: 2,
            s: 2,
            parity: DegreeParity::Even,
            multilinear_only: true,
        })
        .unwrap();
        assert_eq!(q22, vec![vec![0, 0], vec![1, 1]]);
        let r21 = monomial_class_enumerate(MonomialClassSpec {
            n: 2,
            s: 1,
            parity: DegreeParity::Odd,
            multilinear_only: true,
        })
        .unwrap();
        assert_eq!(r21, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn enumerate_general_classes() {
        let t22 = monomial_class_enumerate(MonomialClassSpec {
            n: 2,
            s: 2,
            parity: DegreeParity::Even,
            multilinear_only: false,
        })
        .unwrap();
        assert_eq!(t22, vec![vec![0, 0], vec![0, 2], vec![1, 1], vec![2, 0]]);
        let o33 = monomial_class_enumerate(MonomialClassSpec {
            n: 3,
            s: 3,
            parity: DegreeParity::Odd,
            multilinear_only: false,
        })
        .unwrap();
        assert_eq!(
            o33,
            vec![
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![1, 0, 0],
                vec![0, 0, 3],
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![0, 3, 0],
                vec![1, 0, 2],
                vec![1, 1, 1],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
                vec![3, 0, 0],
            ]
        );
        // s = n is the largest admissible degree cap.
        assert!(monomial_class_enumerate(MonomialClassSpec {
            n: 2,
            s: 3,
            parity: DegreeParity::Odd,
            multilinear_only: false,
        })
        .is_err());
    }

    #[test]
    fn enumeration_matches_count_on_small_range() {
        for n in 0..=8u32 {
            for s in 0..=n {
                for parity in [DegreeParity::Even, DegreeParity::Odd] {
                    let spec = MonomialClassSpec { n, s, parity, multilinear_only: true };
                    let listed = monomial_class_enumerate(spec).unwrap();
                    assert_eq!(
                        BigUint::from(listed.len() as u64),
                        monomial_class_count(spec).unwrap(),
                        "n={n} s={s}"
                    );
                    // Every vector is multilinear with the right degree parity.
                    for v in &listed {
                        let deg: u32 = v.iter().sum();
                        assert!(v.iter().all(|&e| e <= 1));
                        assert!(deg <= s);
                        assert_eq!(deg % 2 == 1, matches!(parity, DegreeParity::Odd));
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_guards() {
        assert!(monomial_class_enumerate(MonomialClassSpec {
            n: 21,
            s: 2,
            parity: DegreeParity::Even,
            multilinear_only: false,
        })
        .is_err());
        // 2^24 even-degree multilinear monomials exceed the cap.
        let big_class = MonomialClassSpec {
            n: 25,
            s: 25,
            parity: DegreeParity::Even,
            multilinear_only: true,
        };
        assert!(matches!(
            monomial_class_enumerate(big_class).unwrap_err(),
            Error::Resource(_)
        ));
        // Sparse classes at large n are fine.
        let thin = monomial_class_enumerate(MonomialClassSpec {
            n: 60,
            s: 1,
            parity: DegreeParity::Odd,
            multilinear_only: true,
        })
        .unwrap();
        assert_eq!(thin.len(), 60);
    }
}
