//! Ordered multisets of equal-width subcubes and their text file format.
//!
//! The file format is line based: an optional header `d=<int>`, then one
//! subcube per line. `#` starts a comment that runs to the end of the line;
//! blank lines are ignored. [`CubeFamily::to_text`] always writes the header,
//! so writing and re-reading a family is lossless.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cube::{Point, Subcube};
use crate::error::{check_width, Error, Result};

/// An ordered multiset of subcubes of `{0,1}^d`. Member `i` is vertex `i` of
/// the intersection graph.
///
/// An empty family read from a file without a header has width 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeFamily {
    width: usize,
    members: Vec<Subcube>,
}

impl CubeFamily {
    pub fn new(width: usize) -> Self {
        CubeFamily {
            width,
            members: Vec::new(),
        }
    }

    pub fn from_members(width: usize, members: Vec<Subcube>) -> Result<Self> {
        for m in &members {
            check_width(width, m.width())?;
        }
        Ok(CubeFamily { width, members })
    }

    /// Builds a family from subcube strings; the width is taken from the first.
    pub fn parse_members<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let members = items
            .iter()
            .map(|s| s.as_ref().parse::<Subcube>())
            .collect::<Result<Vec<_>>>()?;
        let width = members.first().map_or(0, Subcube::width);
        CubeFamily::from_members(width, members)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Subcube] {
        &self.members
    }

    pub fn get(&self, i: usize) -> &Subcube {
        &self.members[i]
    }

    pub fn push(&mut self, cube: Subcube) -> Result<()> {
        if self.members.is_empty() && self.width == 0 {
            self.width = cube.width();
        }
        check_width(self.width, cube.width())?;
        self.members.push(cube);
        Ok(())
    }

    pub(crate) fn insert(&mut self, index: usize, cube: Subcube) {
        debug_assert_eq!(cube.width(), self.width);
        self.members.insert(index, cube);
    }

    pub(crate) fn replace(&mut self, index: usize, cube: Subcube) {
        debug_assert_eq!(cube.width(), self.width);
        self.members[index] = cube;
    }

    /// Repeats every member `copies` times, keeping copies adjacent.
    pub fn blow_up(&self, copies: usize) -> Self {
        let members = self
            .members
            .iter()
            .flat_map(|m| std::iter::repeat_n(m.clone(), copies))
            .collect();
        CubeFamily {
            width: self.width,
            members,
        }
    }

    /// Number of members containing `point`.
    pub fn multiplicity(&self, point: &Point) -> Result<usize> {
        let mut count = 0;
        for m in &self.members {
            if m.contains(point)? {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Largest number of members containing a common point, with the
    /// lexicographically first point attaining it.
    ///
    /// Sweeps the coordinates in order, keeping only members still compatible
    /// with the partial point, and prunes branches that cannot beat the best
    /// count found so far.
    pub fn max_point_multiplicity(&self) -> Option<(usize, Point)> {
        if self.members.is_empty() || self.width == 0 {
            return None;
        }
        let mut best = (0usize, Point::zero(self.width));
        let mut point = Point::zero(self.width);
        let alive: Vec<usize> = (0..self.members.len()).collect();
        self.sweep(0, &alive, &mut point, &mut best);
        Some(best)
    }

    fn sweep(&self, coord: usize, alive: &[usize], point: &mut Point, best: &mut (usize, Point)) {
        if alive.len() <= best.0 && best.0 > 0 {
            return;
        }
        if coord == self.width {
            *best = (alive.len(), point.clone());
            return;
        }
        for value in [false, true] {
            let next: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&i| match self.members[i].coord(coord) {
                    crate::cube::Coord::Free => true,
                    crate::cube::Coord::Zero => !value,
                    crate::cube::Coord::One => value,
                })
                .collect();
            point.set(coord, value);
            self.sweep(coord + 1, &next, point, best);
        }
        point.set(coord, false);
    }

    /// Serializes in the family file format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "d={}", self.width);
        for m in &self.members {
            let _ = writeln!(out, "{m}");
        }
        out
    }

    /// Serializes with leading `#` comment lines.
    pub fn to_text_with_comments(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            for line in c.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        out.push_str(&self.to_text());
        out
    }

    /// Parses the family file format.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut width: Option<usize> = None;
        let mut members = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("d=") {
                if width.is_some() || !members.is_empty() {
                    return Err(Error::parse(lineno + 1, "header must precede all subcubes"));
                }
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(lineno + 1, format!("bad header {line:?}")))?;
                width = Some(d);
                continue;
            }
            let cube: Subcube = line.parse().map_err(|e| match e {
                Error::Parse { position, message } => Error::parse(
                    lineno + 1,
                    format!("column {}: {message}", position + 1),
                ),
                other => other,
            })?;
            let w = *width.get_or_insert(cube.width());
            if cube.width() != w {
                return Err(Error::parse(
                    lineno + 1,
                    format!("subcube of width {} in a family of width {w}", cube.width()),
                ));
            }
            members.push(cube);
        }
        Ok(CubeFamily {
            width: width.unwrap_or(0),
            members,
        })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        CubeFamily::from_text(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>, comments: &[String]) -> Result<()> {
        fs::write(path, self.to_text_with_comments(comments))?;
        Ok(())
    }
}

impl<'a> IntoIterator for &'a CubeFamily {
    type Item = &'a Subcube;
    type IntoIter = std::slice::Iter<'a, Subcube>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_round_trip() {
        let f = CubeFamily::parse_members(&["0**", "*0*", "1*0", "11*", "*11"]).unwrap();
        let text = f.to_text();
        assert_eq!(text, "d=3\n0**\n*0*\n1*0\n11*\n*11\n");
        assert_eq!(CubeFamily::from_text(&text).unwrap(), f);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# generated\n\nd=2\n0*  # first\n\n*1\n";
        let f = CubeFamily::from_text(text).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.width(), 2);
    }

    #[test]
    fn empty_file() {
        let f = CubeFamily::from_text("").unwrap();
        assert!(f.is_empty());
        assert_eq!(f.width(), 0);
        let g = CubeFamily::from_text("d=4\n").unwrap();
        assert_eq!(g.width(), 4);
    }

    #[test]
    fn width_errors() {
        assert!(CubeFamily::from_text("d=3\n0*\n").is_err());
        assert!(CubeFamily::from_text("0*\n0**\n").is_err());
        match CubeFamily::from_text("d=2\n0*\n0x\n") {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 3);
                assert!(message.contains("column 2"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn point_multiplicity_sweep() {
        let f = CubeFamily::parse_members(&["*0", "*1", "0*", "1*"]).unwrap();
        let (count, point) = f.max_point_multiplicity().unwrap();
        assert_eq!(count, 2);
        assert_eq!(point.to_string(), "00");
        let g = CubeFamily::parse_members(&["**", "**", "**"]).unwrap();
        assert_eq!(g.max_point_multiplicity().unwrap().0, 3);
    }
}
