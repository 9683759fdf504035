use std::fmt;

use crate::error::Error;

/// Largest vertex universe supported. Sets are a single machine word.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{0, .., universe - 1}` stored as one 64-bit word.
///
/// The raw word (`bits`) doubles as the canonical encoding: equal sets over
/// the same universe always have equal words, so it can be used directly as
/// a transposition-table key.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    universe: u8,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "universe {universe} exceeds {MAX_VERTICES}");
        VertexSet {
            bits: 0,
            universe: universe as u8,
        }
    }

    pub fn full(universe: usize) -> Self {
        assert!(universe <= MAX_VERTICES, "universe {universe} exceeds {MAX_VERTICES}");
        VertexSet {
            bits: full_mask(universe),
            universe: universe as u8,
        }
    }

    /// Builds a set from a raw word, rejecting bits outside the universe.
    pub fn from_bits(universe: usize, bits: u64) -> Result<Self, Error> {
        if universe > MAX_VERTICES {
            return Err(Error::TooManyVertices(universe));
        }
        if bits & !full_mask(universe) != 0 {
            let v = 63 - (bits & !full_mask(universe)).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex: v, n: universe });
        }
        Ok(VertexSet {
            bits,
            universe: universe as u8,
        })
    }

    pub(crate) fn from_bits_unchecked(universe: usize, bits: u64) -> Self {
        debug_assert!(bits & !full_mask(universe) == 0);
        VertexSet {
            bits,
            universe: universe as u8,
        }
    }

    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in vertices {
            set.insert(v)?;
        }
        Ok(set)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.universe())
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe() && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<(), Error> {
        if v >= self.universe() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.universe(),
            });
        }
        self.bits |= 1 << v;
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe() {
            self.bits &= !(1 << v);
        }
    }

    fn check_universe(&self, other: &VertexSet) -> Result<(), Error> {
        if self.universe != other.universe {
            Err(Error::UniverseMismatch {
                left: self.universe(),
                right: other.universe(),
            })
        } else {
            Ok(())
        }
    }

    pub fn union(&self, other: &VertexSet) -> Result<VertexSet, Error> {
        self.check_universe(other)?;
        Ok(VertexSet {
            bits: self.bits | other.bits,
            universe: self.universe,
        })
    }

    pub fn intersection(&self, other: &VertexSet) -> Result<VertexSet, Error> {
        self.check_universe(other)?;
        Ok(VertexSet {
            bits: self.bits & other.bits,
            universe: self.universe,
        })
    }

    pub fn difference(&self, other: &VertexSet) -> Result<VertexSet, Error> {
        self.check_universe(other)?;
        Ok(VertexSet {
            bits: self.bits & !other.bits,
            universe: self.universe,
        })
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.universe == other.universe && self.bits & !other.bits == 0
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits & full_mask(self.universe()),
            universe: self.universe,
        }
    }

    pub fn iter(&self) -> Bits {
        Bits(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}
