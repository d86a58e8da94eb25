//! Subcubes of the discrete cube `{0,1}^d` and their algebra.
//!
//! A subcube is a word over `{0, 1, *}` of length `d`. It is stored as two
//! bit vectors: `fixed` marks the coordinates that are not `*`, and `values`
//! holds the fixed value at those coordinates. Coordinate `i` of the text
//! form (0-based) is bit `i` of the packed words, so the first character is
//! the least significant bit. Widths up to 64 live in a single inline word.
//!
//! Value bits at free coordinates are always zero, which makes equality and
//! hashing bitwise.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{check_width, Error, Result};

/// Bit storage: one inline word covers the common `d <= 64` case.
pub(crate) type Words = SmallVec<[u64; 1]>;

/// Default cap on the dimension of a subcube whose points may be enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

fn word_count(width: usize) -> usize {
    width.div_ceil(64)
}

fn zero_words(width: usize) -> Words {
    SmallVec::from_elem(0, word_count(width))
}

#[inline]
fn get_bit(words: &[u64], i: usize) -> bool {
    (words[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
fn put_bit(words: &mut [u64], i: usize, on: bool) {
    let mask = 1u64 << (i % 64);
    if on {
        words[i / 64] |= mask;
    } else {
        words[i / 64] &= !mask;
    }
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// The value of a single coordinate of a subcube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coord {
    Zero,
    One,
    Free,
}

impl Coord {
    fn to_char(self) -> char {
        match self {
            Coord::Zero => '0',
            Coord::One => '1',
            Coord::Free => '*',
        }
    }
}

/// A point of `{0,1}^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    width: usize,
    bits: Words,
}

impl Point {
    /// The all-zero point of the given width.
    pub fn zero(width: usize) -> Self {
        Point {
            width,
            bits: zero_words(width),
        }
    }

    /// Builds a point from the low `width` bits of `index`; bit `i` is
    /// coordinate `i`. Only meaningful for `width <= 64`.
    pub fn from_index(width: usize, index: u64) -> Self {
        assert!(width <= 64, "from_index supports widths up to 64");
        let mut p = Point::zero(width);
        if width > 0 {
            let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
            p.bits[0] = index & mask;
        }
        p
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut p = Point::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            put_bit(&mut p.bits, i, b);
        }
        p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.width, "coordinate {i} out of range");
        get_bit(&self.bits, i)
    }

    pub fn set(&mut self, i: usize, on: bool) {
        assert!(i < self.width, "coordinate {i} out of range");
        put_bit(&mut self.bits, i, on);
    }

    /// Low word of the packed bits (the whole point when `width <= 64`).
    pub fn index(&self) -> u64 {
        self.bits.first().copied().unwrap_or(0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point({self})")
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::parse(0, "empty point"));
        }
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(i, format!("invalid character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Point::from_bits(&bits))
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A subcube of `{0,1}^d`, i.e. an element of `{0,1,*}^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subcube {
    width: usize,
    fixed: Words,
    values: Words,
}

impl Subcube {
    /// The whole cube `*...*`.
    pub fn full(width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::InvalidArgument("subcube width must be at least 1".into()));
        }
        Ok(Subcube {
            width,
            fixed: zero_words(width),
            values: zero_words(width),
        })
    }

    /// The singleton subcube containing exactly `point`.
    pub fn singleton(point: &Point) -> Result<Self> {
        let mut c = Subcube::full(point.width())?;
        for w in c.fixed.iter_mut() {
            *w = u64::MAX;
        }
        c.values = point.bits.clone();
        c.mask_tail();
        Ok(c)
    }

    /// Builds a subcube from raw masks on a single word (`width <= 64`).
    pub fn from_masks(width: usize, fixed: u64, values: u64) -> Result<Self> {
        if width > 64 {
            return Err(Error::InvalidArgument("from_masks supports widths up to 64".into()));
        }
        let mut c = Subcube::full(width)?;
        c.fixed[0] = fixed;
        c.values[0] = values & fixed;
        c.mask_tail();
        Ok(c)
    }

    /// Subcube with the given coordinates fixed to the given values and all
    /// others free.
    pub fn with_fixed(width: usize, assignments: impl IntoIterator<Item = (usize, bool)>) -> Result<Self> {
        let mut c = Subcube::full(width)?;
        for (i, v) in assignments {
            if i >= width {
                return Err(Error::InvalidArgument(format!(
                    "coordinate {i} out of range for width {width}"
                )));
            }
            c.set(i, if v { Coord::One } else { Coord::Zero });
        }
        Ok(c)
    }

    fn mask_tail(&mut self) {
        let rem = self.width % 64;
        if rem != 0 {
            let last = self.fixed.len() - 1;
            let mask = (1u64 << rem) - 1;
            self.fixed[last] &= mask;
            self.values[last] &= mask;
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn codimension(&self) -> usize {
        popcount(&self.fixed)
    }

    pub fn dimension(&self) -> usize {
        self.width - self.codimension()
    }

    pub fn is_singleton(&self) -> bool {
        self.dimension() == 0
    }

    pub fn coord(&self, i: usize) -> Coord {
        assert!(i < self.width, "coordinate {i} out of range");
        if !get_bit(&self.fixed, i) {
            Coord::Free
        } else if get_bit(&self.values, i) {
            Coord::One
        } else {
            Coord::Zero
        }
    }

    pub fn set(&mut self, i: usize, value: Coord) {
        assert!(i < self.width, "coordinate {i} out of range");
        match value {
            Coord::Free => {
                put_bit(&mut self.fixed, i, false);
                put_bit(&mut self.values, i, false);
            }
            Coord::Zero | Coord::One => {
                put_bit(&mut self.fixed, i, true);
                put_bit(&mut self.values, i, value == Coord::One);
            }
        }
    }

    /// Fixed coordinates in ascending order.
    pub fn fixed_coords(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(|&i| get_bit(&self.fixed, i))
    }

    /// Free coordinates in ascending order.
    pub fn free_coords(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.width).filter(|&i| !get_bit(&self.fixed, i))
    }

    /// Low words of the fixed and value masks (exact when `width <= 64`).
    pub fn masks(&self) -> (u64, u64) {
        (self.fixed[0], self.values[0])
    }

    /// Words where both cubes are fixed and disagree.
    fn conflicts<'a>(&'a self, other: &'a Subcube) -> impl Iterator<Item = u64> + 'a {
        self.fixed
            .iter()
            .zip(&self.values)
            .zip(other.fixed.iter().zip(&other.values))
            .map(|((fa, va), (fb, vb))| fa & fb & (va ^ vb))
    }

    /// Whether the two subcubes share a point.
    pub fn intersects(&self, other: &Subcube) -> Result<bool> {
        check_width(self.width, other.width)?;
        Ok(self.conflicts(other).all(|w| w == 0))
    }

    /// Intersects without the width check; callers guarantee equal widths.
    #[inline]
    pub(crate) fn meets(&self, other: &Subcube) -> bool {
        if self.fixed.len() == 1 {
            return self.fixed[0] & other.fixed[0] & (self.values[0] ^ other.values[0]) == 0;
        }
        self.fixed
            .iter()
            .zip(&self.values)
            .zip(other.fixed.iter().zip(&other.values))
            .all(|((fa, va), (fb, vb))| fa & fb & (va ^ vb) == 0)
    }

    /// The intersection of two subcubes, or `None` when they are disjoint.
    pub fn intersection(&self, other: &Subcube) -> Result<Option<Subcube>> {
        if !self.intersects(other)? {
            return Ok(None);
        }
        let fixed = self.fixed.iter().zip(&other.fixed).map(|(a, b)| a | b).collect();
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a | b).collect();
        Ok(Some(Subcube {
            width: self.width,
            fixed,
            values,
        }))
    }

    /// Whether `self` is a subset of `other`.
    pub fn is_subcube_of(&self, other: &Subcube) -> Result<bool> {
        check_width(self.width, other.width)?;
        Ok(self
            .fixed
            .iter()
            .zip(&self.values)
            .zip(other.fixed.iter().zip(&other.values))
            .all(|((fa, va), (fb, vb))| fb & !fa == 0 && fb & (va ^ vb) == 0))
    }

    /// Minimum Hamming distance between a point of `self` and a point of `other`.
    pub fn hamming_distance(&self, other: &Subcube) -> Result<usize> {
        check_width(self.width, other.width)?;
        Ok(self.conflicts(other).map(|w| w.count_ones() as usize).sum())
    }

    pub fn contains(&self, point: &Point) -> Result<bool> {
        check_width(self.width, point.width())?;
        Ok(self
            .fixed
            .iter()
            .zip(&self.values)
            .zip(point.words())
            .all(|((f, v), p)| f & (v ^ p) == 0))
    }

    /// Projection of `self` onto the free coordinates of `base`.
    ///
    /// The result has width `dimension(base)`; its coordinates are the entries
    /// of `self` at the free coordinates of `base`, in ascending order. Two
    /// subcubes meeting `base` intersect iff their projections intersect.
    pub fn project(&self, base: &Subcube) -> Result<Subcube> {
        if !self.intersects(base)? {
            return Err(Error::Disjoint);
        }
        let dim = base.dimension();
        if dim == 0 {
            return Err(Error::DegenerateBase);
        }
        let mut out = Subcube::full(dim)?;
        for (j, i) in base.free_coords().enumerate() {
            out.set(j, self.coord(i));
        }
        Ok(out)
    }

    /// Splits on a free coordinate into the halves with that coordinate 0 and 1.
    pub fn split(&self, coord: usize) -> Result<(Subcube, Subcube)> {
        if coord >= self.width || self.coord(coord) != Coord::Free {
            return Err(Error::InvalidArgument(format!("coordinate {coord} is not free")));
        }
        let mut zero = self.clone();
        zero.set(coord, Coord::Zero);
        let mut one = self.clone();
        one.set(coord, Coord::One);
        Ok((zero, one))
    }

    /// All points of the subcube in lexicographic order of their text form.
    pub fn enumerate_points(&self) -> Result<Vec<Point>> {
        self.enumerate_points_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_points_capped(&self, cap: usize) -> Result<Vec<Point>> {
        let dim = self.dimension();
        if dim > cap || dim >= 64 {
            return Err(Error::EnumerationCap { dimension: dim, cap });
        }
        let free: Vec<usize> = self.free_coords().collect();
        let mut base = Point::zero(self.width);
        for i in self.fixed_coords() {
            base.set(i, self.coord(i) == Coord::One);
        }
        // The first free coordinate is the most significant digit of the counter.
        Ok((0..1u64 << dim)
            .map(|m| {
                let mut p = base.clone();
                for (j, &i) in free.iter().enumerate() {
                    p.set(i, (m >> (dim - 1 - j)) & 1 == 1);
                }
                p
            })
            .collect())
    }
}

impl fmt::Display for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.width).map(|i| self.coord(i).to_char()).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subcube({self})")
    }
}

impl FromStr for Subcube {
    type Err = Error;

    /// Parses a word over `{0,1,*}`.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::parse(0, "empty subcube"));
        }
        let chars: Vec<char> = s.chars().collect();
        let mut c = Subcube::full(chars.len())?;
        for (i, ch) in chars.into_iter().enumerate() {
            let v = match ch {
                '0' => Coord::Zero,
                '1' => Coord::One,
                '*' => Coord::Free,
                other => return Err(Error::parse(i, format!("invalid character {other:?}"))),
            };
            c.set(i, v);
        }
        Ok(c)
    }
}

impl Serialize for Subcube {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Subcube {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma separated list in the parenthesised notation
/// `(**0),(*11),...`; parentheses and whitespace are ignored.
pub fn parse_subcube_list(text: &str) -> Result<Vec<Subcube>> {
    text.split(',')
        .map(|item| {
            let cleaned: String = item
                .chars()
                .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
                .collect();
            cleaned.parse()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Subcube {
        s.parse().unwrap()
    }

    #[test]
    fn parse_sets_coordinates() {
        let x = c("0*");
        assert_eq!(x.fixed_coords().collect::<Vec<_>>(), vec![0]);
        assert_eq!(x.coord(0), Coord::Zero);
        assert_eq!(x.coord(1), Coord::Free);
        assert_eq!(c("***").codimension(), 0);
        assert_eq!(c("***").dimension(), 3);
    }

    #[test]
    fn parse_rejects_bad_input() {
        match "01x*".parse::<Subcube>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("".parse::<Subcube>(), Err(Error::Parse { position: 0, .. })));
    }

    #[test]
    fn parenthesised_list() {
        let v = parse_subcube_list("(*11), (0*1)").unwrap();
        assert_eq!(v[0].coord(0), Coord::Free);
        assert_eq!(v[0].coord(1), Coord::One);
        assert_eq!(v[0].coord(2), Coord::One);
        assert_eq!(v[1], c("0*1"));
    }

    #[test]
    fn first_character_is_low_bit() {
        let x = c("10*");
        assert_eq!(x.masks(), (0b011, 0b001));
    }

    #[test]
    fn intersection_rules() {
        assert!(c("0*").intersects(&c("*1")).unwrap());
        assert!(!c("0*").intersects(&c("1*")).unwrap());
        assert!(c("**0").intersects(&c("11*")).unwrap());
        assert_eq!(c("**0").intersection(&c("11*")).unwrap(), Some(c("110")));
        assert_eq!(c("0*").intersection(&c("*1")).unwrap(), Some(c("01")));
        assert_eq!(c("0*").intersection(&c("0*")).unwrap(), Some(c("0*")));
        assert_eq!(c("0*").intersection(&c("1*")).unwrap(), None);
        assert!(matches!(
            c("0*").intersects(&c("0**")),
            Err(Error::WidthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn projection() {
        assert_eq!(c("11*").project(&c("**0")).unwrap(), c("11"));
        assert_eq!(c("***").project(&c("**0")).unwrap(), c("**"));
        assert!(matches!(c("0*1").project(&c("**0")), Err(Error::Disjoint)));
        assert!(matches!(c("010").project(&c("010")), Err(Error::DegenerateBase)));
    }

    #[test]
    fn distance() {
        assert_eq!(c("000").hamming_distance(&c("11*")).unwrap(), 2);
        assert_eq!(c("0*").hamming_distance(&c("*1")).unwrap(), 0);
        assert_eq!(c("01*").hamming_distance(&c("***")).unwrap(), 0);
    }

    #[test]
    fn points() {
        let p: Vec<String> = c("0*").enumerate_points().unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(p, vec!["00", "01"]);
        assert_eq!(c("11").enumerate_points().unwrap().len(), 1);
        let all: Vec<String> = c("***").enumerate_points().unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["000", "001", "010", "011", "100", "101", "110", "111"]);
        let wide = Subcube::full(21).unwrap();
        assert!(matches!(wide.enumerate_points(), Err(Error::EnumerationCap { dimension: 21, cap: 20 })));
    }

    #[test]
    fn wide_cubes_use_multiple_words() {
        let mut a = Subcube::full(130).unwrap();
        let mut b = Subcube::full(130).unwrap();
        a.set(129, Coord::One);
        b.set(129, Coord::Zero);
        assert!(!a.intersects(&b).unwrap());
        b.set(129, Coord::Free);
        b.set(70, Coord::Zero);
        assert_eq!(a.intersection(&b).unwrap().unwrap().codimension(), 2);
        let text = a.to_string();
        assert_eq!(text.parse::<Subcube>().unwrap(), a);
    }

    #[test]
    fn zero_width_rejected() {
        assert!(Subcube::full(0).is_err());
    }
}
