//! Multilinear polynomials on the ±1 cube and the annihilator construction.
//!
//! On points with `x_j ∈ {-1, +1}` every polynomial reduces modulo
//! `x_j² = 1` to a multilinear one, so a monomial is just its support set,
//! stored as a subset word. Products therefore XOR supports, which is what
//! makes the parity (even/odd support size) of a product predictable: the
//! product of two parity-homogeneous polynomials is parity-homogeneous.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::family::{ScalarProductSet, SignedVector};

/// Default ceiling on the monomial count of any intermediate product.
pub const MONOMIAL_CAP: usize = 1 << 22;

/// Whether every monomial of a polynomial has even support, odd support, or
/// whether both kinds occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
}

impl ParityClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ParityClass::Even => "even",
            ParityClass::Odd => "odd",
            ParityClass::Mixed => "mixed",
        }
    }
}

impl std::fmt::Display for ParityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A multilinear polynomial in `n` variables with exact integer coefficients,
/// keyed by monomial support word. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearPoly {
    n: u32,
    coeffs: BTreeMap<u64, BigInt>,
}

impl MultilinearPoly {
    pub fn zero(n: u32) -> Self {
        MultilinearPoly { n, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: u32, value: BigInt) -> Self {
        let mut p = MultilinearPoly::zero(n);
        p.add_term(0, value);
        p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Terms in ascending support-word order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&s, c)| (s, c))
    }

    /// Largest support size over all monomials; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|s| s.count_ones()).max().unwrap_or(0)
    }

    fn add_term(&mut self, support: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(support) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_constant(&mut self, value: BigInt) {
        self.add_term(0, value);
    }

    /// Product with `x_j² → 1` applied eagerly: supports combine by XOR.
    pub fn mul_reduce(&self, other: &MultilinearPoly) -> MultilinearPoly {
        debug_assert_eq!(self.n, other.n);
        let mut out = MultilinearPoly::zero(self.n);
        for (&sa, ca) in &self.coeffs {
            for (&sb, cb) in &other.coeffs {
                out.add_term(sa ^ sb, ca * cb);
            }
        }
        out
    }

    /// Value at a ±1 point. Each monomial contributes its coefficient times
    /// `(-1)^(#supported coordinates that are -1)`.
    pub fn evaluate(&self, point: &SignedVector) -> BigInt {
        debug_assert_eq!(self.n, point.ground().n());
        let minus = !point.plus_word();
        let mut acc = BigInt::zero();
        for (&support, coeff) in &self.coeffs {
            if (support & minus).count_ones() % 2 == 0 {
                acc += coeff;
            } else {
                acc -= coeff;
            }
        }
        acc
    }

    /// Parity of the monomial supports. The zero polynomial counts as even
    /// (vacuously homogeneous).
    pub fn parity_class(&self) -> ParityClass {
        let mut saw_even = false;
        let mut saw_odd = false;
        for s in self.coeffs.keys() {
            if s.count_ones() % 2 == 0 {
                saw_even = true;
            } else {
                saw_odd = true;
            }
        }
        match (saw_even, saw_odd) {
            (true, true) => ParityClass::Mixed,
            (false, true) => ParityClass::Odd,
            _ => ParityClass::Even,
        }
    }
}

/// `Σ_k c_k x_k` where `c_k` is the ±1 coordinate of `center`: the scalar
/// product `⟨x, center⟩` as a polynomial in `x`.
pub fn linear_form(center: &SignedVector) -> MultilinearPoly {
    let n = center.ground().n();
    let mut p = MultilinearPoly::zero(n);
    for k in 0..n {
        p.add_term(1u64 << k, BigInt::from(center.coord(k)));
    }
    p
}

/// Recipe for one annihilator: the product of `⟨x, center⟩ - d` over every
/// `d` in `roots`. Roots come from a distance set's scalar products, so `n`
/// itself never appears among them and the value at `center` is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorSpec {
    center: SignedVector,
    roots: ScalarProductSet,
}

impl AnnihilatorSpec {
    pub fn new(center: SignedVector, roots: ScalarProductSet) -> Result<Self> {
        if center.ground() != roots.ground() {
            return Err(Error::domain("center and roots have different ground sets"));
        }
        if roots.is_empty() {
            return Err(Error::domain("annihilator needs at least one root"));
        }
        Ok(AnnihilatorSpec { center, roots })
    }

    pub fn center(&self) -> &SignedVector {
        &self.center
    }

    pub fn roots(&self) -> &ScalarProductSet {
        &self.roots
    }
}

/// Builds the reduced product `Π_{d ∈ roots} (⟨x, center⟩ - d)`, multiplying
/// factors in ascending root order. The result has degree at most the number
/// of roots; when the roots are closed under negation it is parity-
/// homogeneous (odd iff `0` is a root).
pub fn build_annihilator(spec: &AnnihilatorSpec) -> Result<MultilinearPoly> {
    build_annihilator_with_cap(spec, MONOMIAL_CAP)
}

/// [`build_annihilator`] with an explicit monomial cap. Before each factor
/// multiplication the result size is bounded a priori (by pair count and by
/// the parity-compatible support count); exceeding `cap` is an error rather
/// than an allocation.
pub fn build_annihilator_with_cap(spec: &AnnihilatorSpec, cap: usize) -> Result<MultilinearPoly> {
    let n = spec.center.ground().n();
    let mut acc = MultilinearPoly::constant(n, BigInt::one());
    let base = linear_form(&spec.center);
    for (k, d) in spec.roots.iter().enumerate() {
        check_product_size(n, acc.term_count(), k as u32 + 1, cap)?;
        let mut factor = base.clone();
        factor.add_constant(BigInt::from(-d));
        acc = acc.mul_reduce(&factor);
        if acc.term_count() > cap {
            return Err(Error::resource(format!(
                "annihilator grew to {} monomials, over the cap of {cap}",
                acc.term_count()
            )));
        }
    }
    Ok(acc)
}

/// Upper-bounds the term count of the next partial product and rejects it if
/// it must exceed `cap`. After `k` factors every support has size `<= k` of
/// parity `k mod 2`, so the count is at most `Σ_{j <= k, j ≡ k (2)} C(n, j)`;
/// the pairwise product bound `terms · (n + 1)` also applies.
fn check_product_size(n: u32, current_terms: usize, k: u32, cap: usize) -> Result<()> {
    let pair_bound = current_terms.saturating_mul(n as usize + 1);
    if pair_bound <= cap {
        return Ok(());
    }
    let mut parity_bound = num_bigint::BigUint::zero();
    let mut j = k % 2;
    while j <= k.min(n) {
        parity_bound += binomial(u64::from(n), u64::from(j));
        j += 2;
    }
    if parity_bound > num_bigint::BigUint::from(cap) {
        return Err(Error::resource(format!(
            "partial product after {k} factors may reach {parity_bound} monomials, over the cap of {cap}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{DistanceSet, GroundSet, SetFamily};

    fn ground(n: u32) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn signed(n: u32, word: u64) -> SignedVector {
        SignedVector::from_word(ground(n), word).unwrap()
    }

    fn spec_from_distances(n: u32, center: u64, ds: &[u32]) -> AnnihilatorSpec {
        let d = DistanceSet::new(ground(n), ds.iter().copied()).unwrap();
        AnnihilatorSpec::new(signed(n, center), d.scalar_products()).unwrap()
    }

    #[test]
    fn linear_form_coefficients() {
        // center {1,3} on [4]: x1 - x2 + x3 - x4.
        let p = linear_form(&signed(4, 0b0101));
        let terms: Vec<(u64, i64)> = p
            .terms()
            .map(|(s, c)| (s, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(terms, vec![(1, 1), (2, -1), (4, 1), (8, -1)]);
        assert_eq!(p.parity_class(), ParityClass::Odd);
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn squares_collapse_to_constants() {
        let x1 = {
            let mut p = MultilinearPoly::zero(2);
            p.add_term(1, BigInt::one());
            p
        };
        let sq = x1.mul_reduce(&x1);
        assert_eq!(sq, MultilinearPoly::constant(2, BigInt::one()));
    }

    #[test]
    fn shifted_product_example() {
        // (x1 + x2 - 2)(x1 + x2 + 2) reduces to 2·x1x2 - 2.
        let base = linear_form(&signed(2, 0b11));
        let mut f1 = base.clone();
        f1.add_constant(BigInt::from(-2));
        let mut f2 = base.clone();
        f2.add_constant(BigInt::from(2));
        let p = f1.mul_reduce(&f2);
        let mut expect = MultilinearPoly::zero(2);
        expect.add_term(0b11, BigInt::from(2));
        expect.add_constant(BigInt::from(-2));
        assert_eq!(p, expect);
        assert_eq!(p.parity_class(), ParityClass::Even);
    }

    #[test]
    fn evaluation_matches_direct_product() {
        let base = linear_form(&signed(2, 0b11));
        let mut f1 = base.clone();
        f1.add_constant(BigInt::from(-2));
        let mut f2 = base.clone();
        f2.add_constant(BigInt::from(2));
        let p = f1.mul_reduce(&f2);
        // (⟨w,c⟩ - 2)(⟨w,c⟩ + 2) at each of the four ±1 points of the square.
        for w in 0..4u64 {
            let point = signed(2, w);
            let dot = point.dot(&signed(2, 0b11));
            let direct = BigInt::from((dot - 2) * (dot + 2));
            assert_eq!(p.evaluate(&point), direct, "w={w}");
        }
    }

    #[test]
    fn annihilator_factor_order_is_irrelevant() {
        let spec = spec_from_distances(4, 0b1010, &[1, 2, 3]);
        let ascending = build_annihilator(&spec).unwrap();
        // Multiply the same factors by hand in descending root order.
        let base = linear_form(spec.center());
        let mut descending = MultilinearPoly::constant(4, BigInt::one());
        let roots: Vec<i64> = spec.roots().iter().collect();
        for &d in roots.iter().rev() {
            let mut f = base.clone();
            f.add_constant(BigInt::from(-d));
            descending = descending.mul_reduce(&f);
        }
        assert_eq!(ascending, descending);
    }

    #[test]
    fn annihilator_vanishes_off_center() {
        // Complete intersecting family on [4]: D = {1,2,3}, roots {-2,0,2}.
        let fam = SetFamily::complete_intersecting(ground(4)).unwrap();
        let roots = fam.distance_set().scalar_products();
        let vectors = fam.signed_vectors();
        let expect_diag = BigInt::from((4 + 2) * 4 * (4 - 2));
        for (i, vi) in vectors.iter().enumerate() {
            let spec = AnnihilatorSpec::new(*vi, roots.clone()).unwrap();
            let p = build_annihilator(&spec).unwrap();
            assert!(p.degree() <= 3);
            assert_eq!(p.parity_class(), ParityClass::Odd);
            for (j, vj) in vectors.iter().enumerate() {
                let value = p.evaluate(vj);
                if i == j {
                    assert_eq!(value, expect_diag);
                } else {
                    assert_eq!(value, BigInt::zero(), "i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn parity_confinement_over_symmetric_distance_sets() {
        // Every symmetric nonempty D over n <= 5, every center: the
        // annihilator is parity-homogeneous, odd exactly when 0 is a root,
        // with degree at most |roots|.
        for n in 2..=5u32 {
            for mask in 1u32..1 << n {
                let ds: Vec<u32> = (1..=n).filter(|&d| mask >> (d - 1) & 1 == 1).collect();
                let d = DistanceSet::new(ground(n), ds.iter().copied()).unwrap();
                if !d.is_hamming_symmetric() {
                    continue;
                }
                let roots = d.scalar_products();
                for center in 0..1u64 << n {
                    let spec =
                        AnnihilatorSpec::new(signed(n, center), roots.clone()).unwrap();
                    let p = build_annihilator(&spec).unwrap();
                    let expect = if roots.contains_zero() {
                        ParityClass::Odd
                    } else {
                        ParityClass::Even
                    };
                    assert_eq!(p.parity_class(), expect, "n={n} D={d} center={center}");
                    assert!(p.degree() as usize <= roots.len());
                }
            }
        }
    }

    #[test]
    fn annihilator_spec_validation() {
        let d = DistanceSet::new(ground(3), []).unwrap();
        assert!(AnnihilatorSpec::new(signed(3, 0), d.scalar_products()).is_err());
        let d4 = DistanceSet::new(ground(4), [1]).unwrap();
        assert!(AnnihilatorSpec::new(signed(3, 0), d4.scalar_products()).is_err());
    }

    #[test]
    fn monomial_cap_fires() {
        let spec = spec_from_distances(24, 0, &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]);
        let err = build_annihilator_with_cap(&spec, 1 << 10).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn evaluate_on_random_products_small() {
        // A miniature of the randomized reduction-soundness check; the full
        // 1000-trial version lives in the acceptance suite.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let n = (next() % 8 + 1) as u32;
            let center_word = next() & ((1 << n) - 1);
            let center = signed(n, center_word);
            let k = next() % 4 + 1;
            let shifts: Vec<i64> =
                (0..k).map(|_| (next() % (2 * u64::from(n) + 1)) as i64 - i64::from(n)).collect();
            let mut p = MultilinearPoly::constant(n, BigInt::one());
            for &d in &shifts {
                let mut f = linear_form(&center);
                f.add_constant(BigInt::from(-d));
                p = p.mul_reduce(&f);
            }
            for _ in 0..8 {
                let w = signed(n, next() & ((1 << n) - 1));
                let dot = w.dot(&center);
                let direct: BigInt = shifts.iter().map(|&d| BigInt::from(dot - d)).product();
                assert_eq!(p.evaluate(&w), direct);
            }
        }
    }
}
