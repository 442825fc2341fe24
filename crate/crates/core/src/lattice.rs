//! The finite powerset lattice: subsets of a fixed universe as bit vectors,
//! ordered by inclusion, with joins, meets and arbitrary-family bounds.

use std::fmt;

use crate::error::Error;

/// Hard cap on universe size; exhaustive sweeps cost 2^n.
pub const MAX_UNIVERSE_SIZE: usize = 20;

/// Default guard applied when loading model files; raiseable up to
/// [`MAX_UNIVERSE_SIZE`].
pub const DEFAULT_SIZE_GUARD: usize = 16;

/// Birth assigned to elements that do not declare one.
pub const DEFAULT_BIRTH: f64 = 0.0;

/// An ordered finite set of named elements with per-element birth times.
///
/// Declaration order defines bit positions 0..n-1 for every [`Subset`]
/// over this universe. Births are finite reals or `-inf` (always existed).
#[derive(Debug, Clone, PartialEq)]
pub struct Universe {
    names: Vec<String>,
    births: Vec<f64>,
}

impl Universe {
    pub fn new(names: Vec<String>, births: Vec<f64>) -> Result<Self, Error> {
        let n = names.len();
        if n == 0 || n > MAX_UNIVERSE_SIZE {
            return Err(Error::UniverseSize(n));
        }
        if births.len() != n {
            return Err(Error::WidthMismatch {
                expected: n,
                got: births.len(),
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyName);
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        for (name, &b) in names.iter().zip(&births) {
            if b.is_nan() || b == f64::INFINITY {
                return Err(Error::InvalidBirth(name.clone()));
            }
        }
        Ok(Universe { names, births })
    }

    /// Universe with all births at the default of 0.0. Test convenience.
    pub fn from_names(names: &[&str]) -> Result<Self, Error> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let births = vec![DEFAULT_BIRTH; names.len()];
        Universe::new(names, births)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor requires at least one element
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn birth(&self, index: usize) -> f64 {
        self.births[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Builds the subset holding exactly the named elements.
    ///
    /// Panics on unknown names; intended for literals in tests and fixtures.
    pub fn set_of(&self, names: &[&str]) -> Subset {
        let mut s = self.empty_set();
        for name in names {
            let i = self
                .index_of(name)
                .unwrap_or_else(|| panic!("unknown element `{name}`"));
            s.insert(i);
        }
        s
    }

    /// Element names of `s` in declaration order.
    pub fn subset_names(&self, s: Subset) -> Vec<&str> {
        s.iter().map(|i| self.name(i)).collect()
    }

    /// Renders `s` as `{a,b}` using declaration order.
    pub fn format_subset(&self, s: Subset) -> String {
        format!("{{{}}}", self.subset_names(s).join(","))
    }
}

/// A subset of a universe, stored as the low `width` bits of a machine word.
///
/// The all-zero value is the empty set (the lattice bottom, the paper's
/// "diversity" element); the all-one value over `width` bits is the top.
/// Comparison order (`Ord`) is by raw bit value, which is the tie-break
/// used for every deterministic witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u32,
    width: u8,
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        debug_assert!(width <= MAX_UNIVERSE_SIZE);
        Subset {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        debug_assert!(width <= MAX_UNIVERSE_SIZE);
        Subset {
            bits: low_mask(width),
            width: width as u8,
        }
    }

    pub fn singleton(width: usize, index: usize) -> Self {
        assert!(index < width, "element index out of range");
        Subset {
            bits: 1 << index,
            width: width as u8,
        }
    }

    /// Reconstructs a subset from its raw bit value.
    pub fn from_bits(width: usize, bits: u32) -> Self {
        assert_eq!(bits & !low_mask(width), 0, "bits outside universe width");
        Subset {
            bits,
            width: width as u8,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.width() && self.bits >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.width(), "element index out of range");
        self.bits |= 1 << index;
    }

    /// Inclusion order: true iff every element of `self` is in `other`.
    pub fn leq(&self, other: &Subset) -> bool {
        self.check_width(other);
        self.bits & !other.bits == 0
    }

    /// Least upper bound (set union).
    pub fn join(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset {
            bits: self.bits | other.bits,
            width: self.width,
        }
    }

    /// Greatest lower bound (set intersection).
    pub fn meet(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset {
            bits: self.bits & other.bits,
            width: self.width,
        }
    }

    /// Set difference.
    pub fn minus(&self, other: &Subset) -> Subset {
        self.check_width(other);
        Subset {
            bits: self.bits & !other.bits,
            width: self.width,
        }
    }

    /// Indices of the elements, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..self.width()).filter(move |i| self.bits >> i & 1 == 1)
    }

    /// Smallest element index, if any.
    pub fn first(&self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    fn check_width(&self, other: &Subset) {
        assert_eq!(
            self.width, other.width,
            "universe mismatch: subsets of width {} and {}",
            self.width, other.width
        );
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in (*self).iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

fn low_mask(width: usize) -> u32 {
    debug_assert!(width <= MAX_UNIVERSE_SIZE);
    (1u32 << width) - 1
}

/// Greatest lower bound of a family; the empty family yields the full set.
pub fn big_meet(family: &[Subset], width: usize) -> Subset {
    family
        .iter()
        .fold(Subset::full(width), |acc, s| acc.meet(s))
}

/// Least upper bound of a family; the empty family yields the empty set.
pub fn big_join(family: &[Subset], width: usize) -> Subset {
    family
        .iter()
        .fold(Subset::empty(width), |acc, s| acc.join(s))
}

/// All 2^width subsets in ascending bit-value order.
pub fn all_subsets(width: usize) -> impl Iterator<Item = Subset> {
    assert!(width <= MAX_UNIVERSE_SIZE, "size guard exceeded");
    (0..=low_mask(width)).map(move |bits| Subset {
        bits,
        width: width as u8,
    })
}
