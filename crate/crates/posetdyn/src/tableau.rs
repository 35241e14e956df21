//! Increasing tableaux on a poset and their label-level operations:
//! content vectors, deflation/inflation, and the label-complementing action of
//! an anti-automorphism.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::minuscule::AntiAutomorphism;
use crate::poset::Poset;

/// A strictly order-preserving labeling `P -> [q]` with a declared height `q`.
///
/// The height matters: promotion of the same labeling differs for different
/// declared heights.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IncreasingTableau {
    poset: Arc<Poset>,
    q: u16,
    labels: Vec<u16>,
}

impl std::fmt::Debug for IncreasingTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Inc^{}{:?}", self.q, self.labels)
    }
}

impl IncreasingTableau {
    pub fn new(poset: &Arc<Poset>, q: usize, labels: Vec<u16>) -> Result<IncreasingTableau> {
        if labels.len() != poset.n() {
            return Err(Error::LabelCountMismatch {
                got: labels.len(),
                expected: poset.n(),
            });
        }
        if q == 0 && poset.n() > 0 || q > u16::MAX as usize {
            return Err(Error::LabelOutOfRange { label: 0, q });
        }
        for &l in &labels {
            if l < 1 || l as usize > q {
                return Err(Error::LabelOutOfRange { label: l as i64, q });
            }
        }
        for &(a, b) in poset.covers() {
            if labels[a as usize] >= labels[b as usize] {
                return Err(Error::NotIncreasing {
                    lower: a as usize,
                    upper: b as usize,
                });
            }
        }
        Ok(IncreasingTableau {
            poset: Arc::clone(poset),
            q: q as u16,
            labels,
        })
    }

    pub(crate) fn new_unchecked(poset: &Arc<Poset>, q: usize, labels: Vec<u16>) -> IncreasingTableau {
        debug_assert!(IncreasingTableau::new(poset, q, labels.clone()).is_ok());
        IncreasingTableau {
            poset: Arc::clone(poset),
            q: q as u16,
            labels,
        }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> u16 {
        self.labels[x]
    }

    /// Reinterpret at a larger height (the labeling itself is unchanged).
    pub fn with_height(&self, q: usize) -> Result<IncreasingTableau> {
        IncreasingTableau::new(&self.poset, q, self.labels.clone())
    }

    pub fn content_vector(&self) -> ContentVector {
        let mut bits = vec![false; self.q as usize];
        for &l in &self.labels {
            bits[l as usize - 1] = true;
        }
        ContentVector { bits }
    }

    /// Number of distinct labels used.
    pub fn distinct_labels(&self) -> usize {
        self.content_vector().ones()
    }

    /// Surjective onto `[q]`.
    pub fn is_packed(&self) -> bool {
        self.distinct_labels() == self.q as usize
    }

    /// The unique packed tableau whose labels satisfy the same inequalities,
    /// together with its height `d` = number of distinct labels.
    pub fn deflate(&self) -> (IncreasingTableau, usize) {
        let v = self.content_vector();
        let mut rank = vec![0u16; self.q as usize + 1];
        let mut d = 0u16;
        for (i, &b) in v.bits.iter().enumerate() {
            if b {
                d += 1;
                rank[i + 1] = d;
            }
        }
        let labels: Vec<u16> = self.labels.iter().map(|&l| rank[l as usize]).collect();
        (
            IncreasingTableau {
                poset: Arc::clone(&self.poset),
                q: d,
                labels,
            },
            d as usize,
        )
    }

    /// Right inverse of deflation: re-embed a packed tableau of height `d`
    /// into height `q = v.len()`, sending label `i` to the position of the
    /// `i`-th set bit of `v`.
    pub fn inflate(packed: &IncreasingTableau, v: &ContentVector) -> Result<IncreasingTableau> {
        let d = packed.q as usize;
        if v.ones() != d {
            return Err(Error::ContentMismatch {
                ones: v.ones(),
                expected: d,
            });
        }
        let positions: Vec<u16> = v
            .bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u16 + 1)
            .collect();
        let labels: Vec<u16> = packed
            .labels
            .iter()
            .map(|&l| positions[l as usize - 1])
            .collect();
        Ok(IncreasingTableau {
            poset: Arc::clone(&packed.poset),
            q: v.len() as u16,
            labels,
        })
    }

    /// Complement labels through an anti-automorphism: `x -> q + 1 - T(sigma(x))`.
    /// An involution whenever `sigma` is one.
    pub fn pd_apply(&self, sigma: &AntiAutomorphism) -> Result<IncreasingTableau> {
        if sigma.poset().as_ref() != self.poset.as_ref() {
            return Err(Error::AutomorphismMismatch);
        }
        let labels: Vec<u16> = (0..self.poset.n())
            .map(|x| self.q + 1 - self.labels[sigma.apply(x)])
            .collect();
        IncreasingTableau::new(&self.poset, self.q as usize, labels)
    }
}

/// The 0-1 vector recording which labels of `[q]` occur in a tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentVector {
    bits: Vec<bool>,
}

impl ContentVector {
    pub fn from_bits(bits: Vec<bool>) -> ContentVector {
        ContentVector { bits }
    }

    /// Parse from a string of 0s and 1s.
    pub fn parse(s: &str) -> Result<ContentVector> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(Error::Format(format!("bad content vector character '{c}'"))),
            }
        }
        Ok(ContentVector { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Move the first digit to the end.
    pub fn rotate_left_once(&self) -> ContentVector {
        if self.bits.is_empty() {
            return self.clone();
        }
        let mut bits = self.bits[1..].to_vec();
        bits.push(self.bits[0]);
        ContentVector { bits }
    }

    /// Least `l >= 1` such that rotating `l` times recovers the vector.
    /// Always divides the length.
    pub fn rotation_period(&self) -> usize {
        let q = self.bits.len();
        if q == 0 {
            return 1;
        }
        for l in 1..=q {
            if q % l != 0 {
                continue;
            }
            if (0..q).all(|i| self.bits[i] == self.bits[(i + l) % q]) {
                return l;
            }
        }
        q
    }
}

/// Orbit size predicted from a content vector: with `l` the rotation period,
/// `d` the number of set bits, and `t1` the packed orbit size, the orbit of
/// any tableau with this content has size `l*t1 / gcd(l*d/q, t1)`.
pub fn predicted_orbit_size(q: usize, v: &ContentVector, packed_orbit: u64) -> Result<u64> {
    if v.len() != q {
        return Err(Error::ContentLengthMismatch { len: v.len(), q });
    }
    let l = v.rotation_period();
    let d = v.ones();
    if (l * d) % q != 0 {
        return Err(Error::NonIntegralRotation { l, d, q });
    }
    let x = (l * d / q) as u64;
    Ok(l as u64 * packed_orbit / gcd(x, packed_orbit))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> Arc<Poset> {
        Arc::new(Poset::chain(2))
    }

    #[test]
    fn validation() {
        let p = chain2();
        assert!(IncreasingTableau::new(&p, 3, vec![1, 3]).is_ok());
        assert!(matches!(
            IncreasingTableau::new(&p, 3, vec![3, 1]),
            Err(Error::NotIncreasing { .. })
        ));
        assert!(matches!(
            IncreasingTableau::new(&p, 2, vec![1, 3]),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert!(matches!(
            IncreasingTableau::new(&p, 2, vec![0, 1]),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert!(matches!(
            IncreasingTableau::new(&p, 2, vec![1]),
            Err(Error::LabelCountMismatch { .. })
        ));
    }

    #[test]
    fn deflate_examples() {
        let p = chain2();
        let t = IncreasingTableau::new(&p, 6, vec![2, 5]).unwrap();
        let (tb, d) = t.deflate();
        assert_eq!(d, 2);
        assert_eq!(tb.labels(), &[1, 2]);
        assert!(tb.is_packed());
        // packed input deflates to itself
        let (tb2, _) = tb.deflate();
        assert_eq!(tb2, tb);
    }

    #[test]
    fn inflate_examples() {
        let p = chain2();
        let packed = IncreasingTableau::new(&p, 2, vec![1, 2]).unwrap();
        let v = ContentVector::parse("0101").unwrap();
        let t = IncreasingTableau::inflate(&packed, &v).unwrap();
        assert_eq!(t.labels(), &[2, 4]);
        assert_eq!(t.q(), 4);
        assert_eq!(t.content_vector(), v);
        // all-ones vector is the identity
        let ones = ContentVector::parse("11").unwrap();
        assert_eq!(IncreasingTableau::inflate(&packed, &ones).unwrap(), packed);
        // round trip with deflation
        let (back, d) = t.deflate();
        assert_eq!(back, packed);
        assert_eq!(d, 2);
        // bit-count mismatch rejected
        let bad = ContentVector::parse("1110").unwrap();
        assert!(matches!(
            IncreasingTableau::inflate(&packed, &bad),
            Err(Error::ContentMismatch { .. })
        ));
    }

    #[test]
    fn rotation_periods() {
        assert_eq!(ContentVector::parse("1111").unwrap().rotation_period(), 1);
        assert_eq!(ContentVector::parse("101010").unwrap().rotation_period(), 2);
        assert_eq!(ContentVector::parse("110110").unwrap().rotation_period(), 3);
        assert_eq!(ContentVector::parse("100000").unwrap().rotation_period(), 6);
    }

    #[test]
    fn predicted_orbit_formula() {
        // packed case: l = 1, d = q
        let ones = ContentVector::parse("11111").unwrap();
        assert_eq!(predicted_orbit_size(5, &ones, 7).unwrap(), 7);
        // q=4, v=1010: l=2, d=2, t1=3 -> 2*3/gcd(1,3) = 6
        let v = ContentVector::parse("1010").unwrap();
        assert_eq!(predicted_orbit_size(4, &v, 3).unwrap(), 6);
        // q=6, v=110110: l=3, d=4, t1=2 -> 3*2/gcd(2,2) = 3
        let v = ContentVector::parse("110110").unwrap();
        assert_eq!(predicted_orbit_size(6, &v, 2).unwrap(), 3);
        // length mismatch is an error
        assert!(predicted_orbit_size(5, &v, 2).is_err());
    }
}
