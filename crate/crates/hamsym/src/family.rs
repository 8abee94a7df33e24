//! Ground sets, set families as bit words, q-ary word families, distance
//! sets, and ±1 characteristic vectors.
//!
//! A subset of `[n] = {1, …, n}` is stored as a `u64` whose bit `k-1` records
//! membership of element `k`, so symmetric-difference size is one XOR plus a
//! popcount. Families keep insertion order and reject duplicate members.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// The ground set `[n]`. Word-based types require `1 <= n <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("ground set must have n >= 1"));
        }
        if n > 64 {
            return Err(Error::domain(format!("n = {n} exceeds the 64-bit word limit")));
        }
        Ok(GroundSet { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Mask with bits `0..n` set; valid subset words are exactly the submasks.
    pub fn word_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn check_word(&self, w: u64) -> Result<()> {
        if w & !self.word_mask() != 0 {
            return Err(Error::domain(format!(
                "word {w:#x} has elements outside the ground set [{}]",
                self.n
            )));
        }
        Ok(())
    }
}

/// `|F Δ G|` for subset words: XOR then popcount. Total on valid words.
pub fn hamming_distance(a: u64, b: u64) -> u32 {
    (a ^ b).count_ones()
}

/// An ordered family of distinct subsets of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: GroundSet,
    members: Vec<u64>,
}

impl SetFamily {
    /// Builds a family, preserving `members` order. Rejects words outside the
    /// ground set and duplicate members.
    pub fn new(ground: GroundSet, members: Vec<u64>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(members.len());
        for &w in &members {
            ground.check_word(w)?;
            if !seen.insert(w) {
                return Err(Error::domain(format!(
                    "duplicate member word {w:#x} in family"
                )));
            }
        }
        Ok(SetFamily { ground, members })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Distances over all unordered pairs of distinct members. Empty and
    /// singleton families give the empty set.
    pub fn distance_set(&self) -> DistanceSet {
        let mut distances = BTreeSet::new();
        for (i, &a) in self.members.iter().enumerate() {
            for &b in &self.members[i + 1..] {
                distances.insert(hamming_distance(a, b));
            }
        }
        DistanceSet { ground: self.ground, distances }
    }

    /// XOR-translates every member by `a`. Distances are preserved, so the
    /// distance set is unchanged; member order is preserved too.
    pub fn translated(&self, a: u64) -> Result<SetFamily> {
        self.ground.check_word(a)?;
        let members = self.members.iter().map(|&w| w ^ a).collect();
        Ok(SetFamily { ground: self.ground, members })
    }

    /// All `2^(n-1)` subsets containing element 1, in ascending word order.
    /// At even `n` this family realizes every distance in `[n-1]`.
    pub fn complete_intersecting(ground: GroundSet) -> Result<SetFamily> {
        let n = ground.n();
        if n > 30 {
            return Err(Error::resource(format!(
                "complete intersecting family for n = {n} has 2^{} members",
                n - 1
            )));
        }
        let members = (0..1u64 << (n - 1)).map(|i| (i << 1) | 1).collect();
        Ok(SetFamily { ground, members })
    }

    pub fn signed_vectors(&self) -> Vec<SignedVector> {
        self.members
            .iter()
            .map(|&w| SignedVector { ground: self.ground, plus: w })
            .collect()
    }
}

/// A set of realized distances, each in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSet {
    ground: GroundSet,
    distances: BTreeSet<u32>,
}

impl DistanceSet {
    pub fn new(ground: GroundSet, distances: impl IntoIterator<Item = u32>) -> Result<Self> {
        let distances: BTreeSet<u32> = distances.into_iter().collect();
        for &d in &distances {
            if d == 0 || d > ground.n() {
                return Err(Error::domain(format!(
                    "distance {d} outside [1, {}]",
                    ground.n()
                )));
            }
        }
        Ok(DistanceSet { ground, distances })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    pub fn contains(&self, d: u32) -> bool {
        self.distances.contains(&d)
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.distances.iter().copied()
    }

    /// `d ∈ D` implies `n - d ∈ D`. The empty set is vacuously symmetric, and
    /// a symmetric set can never contain `n` (that would force `0 ∈ D`).
    pub fn is_hamming_symmetric(&self) -> bool {
        let n = self.ground.n();
        self.distances.iter().all(|&d| d < n && self.distances.contains(&(n - d)))
    }

    /// True iff `n` is even and `n/2` is realized. Always false for odd `n`.
    pub fn contains_half(&self) -> bool {
        let n = self.ground.n();
        n % 2 == 0 && self.distances.contains(&(n / 2))
    }

    /// The shifted image `{n - 2d : d ∈ D}` of the distance set, i.e. the
    /// scalar products of ±1 vectors realizing those distances.
    pub fn scalar_products(&self) -> ScalarProductSet {
        let n = i64::from(self.ground.n());
        let values = self.distances.iter().map(|&d| n - 2 * i64::from(d)).collect();
        ScalarProductSet { ground: self.ground, values }
    }

    pub fn is_subset_of(&self, other: &DistanceSet) -> bool {
        self.distances.is_subset(&other.distances)
    }
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.distances.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// Scalar products `n - 2d` attainable between members at the distances of
/// some `DistanceSet`. Distances are at least 1, so `n` itself never appears.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarProductSet {
    ground: GroundSet,
    values: BTreeSet<i64>,
}

impl ScalarProductSet {
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().copied()
    }

    /// Zero appears exactly when `n/2` is a realized distance.
    pub fn contains_zero(&self) -> bool {
        self.values.contains(&0)
    }
}

impl fmt::Display for ScalarProductSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The ±1 characteristic vector of a subset: coordinate `k` is `+1` iff
/// element `k+1` belongs to the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedVector {
    ground: GroundSet,
    plus: u64,
}

impl SignedVector {
    pub fn from_word(ground: GroundSet, word: u64) -> Result<Self> {
        ground.check_word(word)?;
        Ok(SignedVector { ground, plus: word })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// The word whose set bits are the `+1` coordinates.
    pub fn plus_word(&self) -> u64 {
        self.plus
    }

    /// Coordinate `k` (0-based), either `+1` or `-1`.
    pub fn coord(&self, k: u32) -> i64 {
        debug_assert!(k < self.ground.n());
        if self.plus >> k & 1 == 1 {
            1
        } else {
            -1
        }
    }

    /// `Σ_k u_k v_k` computed coordinate by coordinate. Equals
    /// `n - 2·hamming_distance(u, v)`; that identity is checked by tests
    /// rather than assumed here, so the two routes stay independent.
    pub fn dot(&self, other: &SignedVector) -> i64 {
        debug_assert_eq!(self.ground, other.ground);
        (0..self.ground.n()).map(|k| self.coord(k) * other.coord(k)).sum()
    }
}

/// An ordered family of distinct words over `{0, …, q-1}^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QaryFamily {
    ground: GroundSet,
    q: u32,
    members: Vec<Vec<u8>>,
}

impl QaryFamily {
    /// Builds a q-ary family. Requires `2 <= q <= 256`, every word of length
    /// `n` with digits below `q`, and distinct members.
    pub fn new(ground: GroundSet, q: u32, members: Vec<Vec<u8>>) -> Result<Self> {
        if q < 2 {
            return Err(Error::domain(format!("alphabet size q = {q} must be at least 2")));
        }
        if q > 256 {
            return Err(Error::domain(format!("alphabet size q = {q} exceeds digit storage")));
        }
        let n = ground.n() as usize;
        let mut seen = HashSet::with_capacity(members.len());
        for w in &members {
            if w.len() != n {
                return Err(Error::domain(format!(
                    "word of length {} in a family over [{}]",
                    w.len(),
                    n
                )));
            }
            if let Some(&d) = w.iter().find(|&&d| u32::from(d) >= q) {
                return Err(Error::domain(format!("digit {d} outside alphabet of size {q}")));
            }
            if !seen.insert(w.clone()) {
                return Err(Error::domain("duplicate member word in q-ary family".to_string()));
            }
        }
        Ok(QaryFamily { ground, q, members })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn members(&self) -> &[Vec<u8>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of coordinates where two member words disagree.
    pub fn word_distance(a: &[u8], b: &[u8]) -> u32 {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).filter(|(x, y)| x != y).count() as u32
    }

    pub fn distance_set(&self) -> DistanceSet {
        let mut distances = BTreeSet::new();
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                distances.insert(Self::word_distance(a, b));
            }
        }
        DistanceSet { ground: self.ground, distances }
    }
}

/// A parsed family file: binary files become [`SetFamily`], files declaring
/// `q > 2` become [`QaryFamily`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedFamily {
    Binary(SetFamily),
    Qary(QaryFamily),
}

impl ParsedFamily {
    pub fn ground(&self) -> GroundSet {
        match self {
            ParsedFamily::Binary(f) => f.ground(),
            ParsedFamily::Qary(f) => f.ground(),
        }
    }

    pub fn q(&self) -> u32 {
        match self {
            ParsedFamily::Binary(_) => 2,
            ParsedFamily::Qary(f) => f.q(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            ParsedFamily::Binary(f) => f.len(),
            ParsedFamily::Qary(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn distance_set(&self) -> DistanceSet {
        match self {
            ParsedFamily::Binary(f) => f.distance_set(),
            ParsedFamily::Qary(f) => f.distance_set(),
        }
    }
}

/// Parses the family file format:
///
/// ```text
/// # comment
/// n 4
/// q 2          (optional; omitted means q = 2)
/// 1100         (character i gives the value at coordinate i, i.e. element i+1)
/// 0011
/// ```
///
/// Lines are significant after stripping trailing whitespace; blank lines and
/// lines starting with `#` are skipped. Word lines must have length `n` over
/// digits `{0, …, q-1}` (so the format carries at most `q = 10`), and
/// duplicate words are an error naming the offending line.
pub fn parse_family(text: &str) -> Result<ParsedFamily> {
    let mut n: Option<(u32, GroundSet)> = None;
    let mut q: u32 = 2;
    let mut q_seen = false;
    let mut words_started = false;
    let mut raw_words: Vec<(usize, &str)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim_end();
        if line.is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        if n.is_none() {
            let rest = line
                .strip_prefix("n ")
                .or_else(|| line.strip_prefix("n\t"))
                .ok_or_else(|| Error::parse(lineno, "expected header line `n <integer>`"))?;
            let value: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno, format!("invalid n value `{}`", rest.trim())))?;
            let ground = GroundSet::new(value)
                .map_err(|e| Error::parse(lineno, e.to_string()))?;
            n = Some((value, ground));
            continue;
        }
        if !words_started {
            if let Some(rest) = line.strip_prefix("q ").or_else(|| line.strip_prefix("q\t")) {
                if q_seen {
                    return Err(Error::parse(lineno, "repeated `q` header line"));
                }
                q = rest.trim().parse().map_err(|_| {
                    Error::parse(lineno, format!("invalid q value `{}`", rest.trim()))
                })?;
                if !(2..=10).contains(&q) {
                    return Err(Error::parse(
                        lineno,
                        format!("q = {q} outside the digit-representable range [2, 10]"),
                    ));
                }
                q_seen = true;
                continue;
            }
        }
        words_started = true;
        raw_words.push((lineno, line));
    }

    let (n, ground) = n.ok_or_else(|| {
        Error::parse(last_line.max(1), "missing header line `n <integer>`")
    })?;

    let mut seen: HashSet<&str> = HashSet::with_capacity(raw_words.len());
    let mut words: Vec<Vec<u8>> = Vec::with_capacity(raw_words.len());
    for (lineno, w) in &raw_words {
        if w.len() != n as usize {
            return Err(Error::parse(
                *lineno,
                format!("word `{w}` has length {}, expected n = {n}", w.len()),
            ));
        }
        let mut digits = Vec::with_capacity(w.len());
        for c in w.chars() {
            let d = c
                .to_digit(10)
                .filter(|&d| d < q)
                .ok_or_else(|| {
                    Error::parse(
                        *lineno,
                        format!("character `{c}` is not a digit below q = {q}"),
                    )
                })?;
            digits.push(d as u8);
        }
        if !seen.insert(w) {
            return Err(Error::parse(*lineno, format!("duplicate word `{w}`")));
        }
        words.push(digits);
    }

    if q == 2 {
        let members = words
            .iter()
            .map(|digits| {
                digits
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d == 1)
                    .fold(0u64, |w, (i, _)| w | 1u64 << i)
            })
            .collect();
        // Duplicates were caught on the raw strings, and the ground set
        // already validated n, so this cannot fail.
        Ok(ParsedFamily::Binary(SetFamily::new(ground, members)?))
    } else {
        Ok(ParsedFamily::Qary(QaryFamily::new(ground, q, words)?))
    }
}

/// Renders a binary family in the file format accepted by [`parse_family`].
pub fn format_family(family: &SetFamily) -> String {
    let n = family.ground().n();
    let mut out = format!("n {n}\n");
    for &w in family.members() {
        for k in 0..n {
            out.push(if w >> k & 1 == 1 { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Renders a q-ary family in the file format accepted by [`parse_family`].
/// The format stores one digit character per coordinate, so `q <= 10`.
pub fn format_qary_family(family: &QaryFamily) -> Result<String> {
    let q = family.q();
    if q > 10 {
        return Err(Error::domain(format!("q = {q} not representable as digit strings")));
    }
    let mut out = format!("n {}\nq {q}\n", family.ground().n());
    for w in family.members() {
        for &d in w {
            out.push(char::from_digit(u32::from(d), 10).expect("digit below 10"));
        }
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(n: u32) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    fn dset(n: u32, ds: &[u32]) -> DistanceSet {
        DistanceSet::new(ground(n), ds.iter().copied()).unwrap()
    }

    #[test]
    fn hamming_distance_is_symmetric_difference_size() {
        // {1,2} vs {2,3}: symmetric difference {1,3}.
        assert_eq!(hamming_distance(0b011, 0b110), 2);
        assert_eq!(hamming_distance(0b011, 0b011), 0);
        assert_eq!(hamming_distance(0, 0b1111), 4);
    }

    #[test]
    fn ground_set_bounds() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(65).is_err());
        assert_eq!(ground(64).word_mask(), u64::MAX);
        assert_eq!(ground(3).word_mask(), 0b111);
    }

    #[test]
    fn family_rejects_duplicates_and_stray_bits() {
        let g = ground(3);
        assert!(SetFamily::new(g, vec![0b01, 0b01]).is_err());
        assert!(SetFamily::new(g, vec![0b1000]).is_err());
        let fam = SetFamily::new(g, vec![0b110, 0b011]).unwrap();
        assert_eq!(fam.members(), &[0b110, 0b011]);
    }

    #[test]
    fn empty_and_singleton_families_have_empty_distance_set() {
        let g = ground(5);
        let empty = SetFamily::new(g, vec![]).unwrap();
        assert!(empty.distance_set().is_empty());
        assert!(empty.distance_set().is_hamming_symmetric());
        let single = SetFamily::new(g, vec![0b10101]).unwrap();
        assert!(single.distance_set().is_empty());
    }

    #[test]
    fn distance_set_of_complete_intersecting_family() {
        let fam = SetFamily::complete_intersecting(ground(4)).unwrap();
        assert_eq!(fam.len(), 8);
        let d = fam.distance_set();
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(d.is_hamming_symmetric());
        assert!(d.contains_half());
    }

    #[test]
    fn complete_intersecting_family_small_order() {
        // n = 2: {1} then {1,2}, ascending word order.
        let fam = SetFamily::complete_intersecting(ground(2)).unwrap();
        assert_eq!(fam.members(), &[0b01, 0b11]);
        assert!(SetFamily::complete_intersecting(ground(31)).is_err());
    }

    #[test]
    fn symmetry_checks() {
        assert!(dset(4, &[]).is_hamming_symmetric());
        assert!(dset(4, &[2]).is_hamming_symmetric());
        assert!(dset(4, &[1, 3]).is_hamming_symmetric());
        assert!(dset(4, &[1, 2, 3]).is_hamming_symmetric());
        assert!(!dset(4, &[1, 2]).is_hamming_symmetric());
        // n ∈ D forces 0 ∈ D, which is impossible.
        assert!(!dset(4, &[4]).is_hamming_symmetric());
        assert!(!dset(1, &[1]).is_hamming_symmetric());
    }

    #[test]
    fn contains_half_cases() {
        assert!(dset(4, &[2]).contains_half());
        assert!(!dset(4, &[1, 3]).contains_half());
        // Odd n never contains n/2.
        assert!(!dset(5, &[1, 2, 3, 4]).contains_half());
    }

    #[test]
    fn distance_set_rejects_out_of_range() {
        assert!(DistanceSet::new(ground(4), [0]).is_err());
        assert!(DistanceSet::new(ground(4), [5]).is_err());
    }

    #[test]
    fn scalar_product_set_shifts() {
        let s = dset(4, &[1, 2, 3]).scalar_products();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![-2, 0, 2]);
        assert!(s.contains_zero());
        let s = dset(4, &[1, 3]).scalar_products();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![-2, 2]);
        assert!(!s.contains_zero());
    }

    #[test]
    fn scalar_product_set_negation_closed_iff_symmetric() {
        // All distance sets over n <= 8: symmetry of D matches negation
        // closure of {n - 2d}.
        for n in 1..=8u32 {
            for mask in 0u32..1 << n {
                let ds: Vec<u32> = (1..=n).filter(|&d| mask >> (d - 1) & 1 == 1).collect();
                let d = dset(n, &ds);
                let s = d.scalar_products();
                let closed = s.iter().all(|v| s.iter().any(|w| w == -v));
                assert_eq!(d.is_hamming_symmetric(), closed, "n={n} D={d}");
            }
        }
    }

    #[test]
    fn signed_vector_coords_and_dot() {
        let g = ground(4);
        // {1,3} -> (+1, -1, +1, -1)
        let v = SignedVector::from_word(g, 0b0101).unwrap();
        assert_eq!(
            (0..4).map(|k| v.coord(k)).collect::<Vec<_>>(),
            vec![1, -1, 1, -1]
        );
        let u = SignedVector::from_word(g, 0b0011).unwrap();
        // coords (+1, +1, -1, -1): products 1, -1, -1, 1.
        assert_eq!(v.dot(&u), 0);
        assert_eq!(v.dot(&v), 4);
    }

    #[test]
    fn scalar_product_identity_exhaustive_small() {
        for n in 1..=6u32 {
            let g = ground(n);
            for a in 0..1u64 << n {
                for b in 0..1u64 << n {
                    let u = SignedVector::from_word(g, a).unwrap();
                    let v = SignedVector::from_word(g, b).unwrap();
                    let expect = i64::from(n) - 2 * i64::from(hamming_distance(a, b));
                    assert_eq!(u.dot(&v), expect);
                }
            }
        }
    }

    #[test]
    fn translation_preserves_distance_set() {
        let fam = SetFamily::complete_intersecting(ground(4)).unwrap();
        let moved = fam.translated(0b0001).unwrap();
        // Every member contained element 1; now none does.
        assert!(moved.members().iter().all(|&w| w & 1 == 0));
        assert_eq!(moved.distance_set(), fam.distance_set());
        assert_eq!(moved.len(), fam.len());
    }

    #[test]
    fn qary_family_validation_and_distances() {
        let g = ground(2);
        let fam = QaryFamily::new(g, 3, vec![vec![0, 0], vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(fam.distance_set().iter().collect::<Vec<_>>(), vec![1]);
        assert!(QaryFamily::new(g, 3, vec![vec![0, 3]]).is_err());
        assert!(QaryFamily::new(g, 3, vec![vec![0]]).is_err());
        assert!(QaryFamily::new(g, 3, vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(QaryFamily::new(g, 1, vec![]).is_err());
    }

    #[test]
    fn parse_binary_family() {
        let text = "# family on [4]\nn 4\n1000  \n0100\n\n1110\n";
        let parsed = parse_family(text).unwrap();
        let ParsedFamily::Binary(fam) = parsed else {
            panic!("expected binary family")
        };
        assert_eq!(fam.ground().n(), 4);
        assert_eq!(fam.members(), &[0b0001, 0b0010, 0b0111]);
    }

    #[test]
    fn parse_qary_family() {
        let text = "n 3\nq 3\n000\n012\n";
        let ParsedFamily::Qary(fam) = parse_family(text).unwrap() else {
            panic!("expected q-ary family")
        };
        assert_eq!(fam.q(), 3);
        assert_eq!(fam.members(), &[vec![0, 0, 0], vec![0, 1, 2]]);
        // Explicit q 2 still parses as a binary family.
        let text = "n 2\nq 2\n10\n";
        assert!(matches!(parse_family(text).unwrap(), ParsedFamily::Binary(_)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let dup = parse_family("n 4\n1000\n1000\n");
        assert_eq!(
            dup.unwrap_err(),
            Error::Parse { line: 3, msg: "duplicate word `1000`".into() }
        );
        let short = parse_family("n 4\n100\n");
        assert!(matches!(short.unwrap_err(), Error::Parse { line: 2, .. }));
        let bad_char = parse_family("n 2\n1x\n");
        assert!(matches!(bad_char.unwrap_err(), Error::Parse { line: 2, .. }));
        let no_header = parse_family("# only a comment\n");
        assert!(matches!(no_header.unwrap_err(), Error::Parse { .. }));
        let bad_q = parse_family("n 2\nq 11\n00\n");
        assert!(matches!(bad_q.unwrap_err(), Error::Parse { line: 2, .. }));
        let zero_n = parse_family("n 0\n");
        assert!(matches!(zero_n.unwrap_err(), Error::Parse { line: 1, .. }));
        // Digit 2 is out of range once q defaults to 2.
        let binary_digit = parse_family("n 2\n02\n");
        assert!(matches!(binary_digit.unwrap_err(), Error::Parse { line: 2, .. }));
    }

    #[test]
    fn format_round_trips() {
        let fam = SetFamily::new(ground(4), vec![0b0001, 0b1011, 0]).unwrap();
        let text = format_family(&fam);
        assert_eq!(text, "n 4\n1000\n1101\n0000\n");
        let ParsedFamily::Binary(back) = parse_family(&text).unwrap() else {
            panic!("expected binary family")
        };
        assert_eq!(back, fam);

        let qf = QaryFamily::new(ground(2), 3, vec![vec![2, 1], vec![0, 0]]).unwrap();
        let text = format_qary_family(&qf).unwrap();
        assert_eq!(text, "n 2\nq 3\n21\n00\n");
        let ParsedFamily::Qary(back) = parse_family(&text).unwrap() else {
            panic!("expected q-ary family")
        };
        assert_eq!(back, qf);
    }
}
