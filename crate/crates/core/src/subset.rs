//! Subsets of a finite carrier, stored as one 64-bit word.

use std::fmt;
use std::ops::{BitAnd, BitOr};

use crate::poset::ElementId;
use crate::MAX_ELEMENTS;

/// A subset of a carrier with `width` elements (`width <= 64`).
///
/// The width travels with the value so that complements are taken relative
/// to the right carrier; mixing subsets of different carriers is a bug and
/// panics.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u64,
    width: u8,
}

fn full_mask(width: usize) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_ELEMENTS, "carrier too large for Subset");
        Subset {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_ELEMENTS, "carrier too large for Subset");
        Subset {
            bits: full_mask(width),
            width: width as u8,
        }
    }

    pub fn singleton(width: usize, e: ElementId) -> Self {
        let mut s = Subset::empty(width);
        s.insert(e);
        s
    }

    /// Builds a subset from a raw bitmask; bits at or above `width` must be zero.
    pub fn from_bits(width: usize, bits: u64) -> Self {
        assert!(width <= MAX_ELEMENTS, "carrier too large for Subset");
        assert_eq!(bits & !full_mask(width), 0, "bits outside carrier width");
        Subset {
            bits,
            width: width as u8,
        }
    }

    pub fn from_elements<I: IntoIterator<Item = ElementId>>(width: usize, elems: I) -> Self {
        let mut s = Subset::empty(width);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, e: ElementId) -> bool {
        assert!(e.index() < self.width(), "element outside carrier");
        self.bits >> e.index() & 1 == 1
    }

    pub fn insert(&mut self, e: ElementId) {
        assert!(e.index() < self.width(), "element outside carrier");
        self.bits |= 1 << e.index();
    }

    pub fn remove(&mut self, e: ElementId) {
        assert!(e.index() < self.width(), "element outside carrier");
        self.bits &= !(1 << e.index());
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.width())
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        assert_eq!(self.width, other.width, "subsets of different carriers");
        self.bits & !other.bits == 0
    }

    /// Complement relative to the carrier.
    pub fn complement(&self) -> Subset {
        Subset {
            bits: !self.bits & full_mask(self.width()),
            width: self.width,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        let bits = self.bits;
        (0..self.width()).filter_map(move |i| {
            if bits >> i & 1 == 1 {
                Some(ElementId::new(i))
            } else {
                None
            }
        })
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        assert_eq!(self.width, rhs.width, "subsets of different carriers");
        Subset {
            bits: self.bits & rhs.bits,
            width: self.width,
        }
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        assert_eq!(self.width, rhs.width, "subsets of different carriers");
        Subset {
            bits: self.bits | rhs.bits,
            width: self.width,
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", e.index())?;
            first = false;
        }
        write!(f, "}}/{}", self.width)
    }
}
