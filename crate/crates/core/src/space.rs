//! Sector labels, basis ids, and the sector-graded basis they define.

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Discrete tag of a coherent sector. Equality is exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectorLabel(String);

impl SectorLabel {
    pub fn new(id: impl Into<String>) -> Self {
        Self(id.into())
    }

    pub fn id(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for SectorLabel {
    fn from(id: &str) -> Self {
        Self::new(id)
    }
}

/// One basis element: its sector plus whatever quantum numbers remain
/// within the sector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisId {
    sector: SectorLabel,
    tag: String,
}

impl BasisId {
    pub fn new(sector: impl Into<SectorLabel>, tag: impl Into<String>) -> Self {
        Self {
            sector: sector.into(),
            tag: tag.into(),
        }
    }

    pub fn sector(&self) -> &SectorLabel {
        &self.sector
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }
}

impl From<(&str, &str)> for BasisId {
    fn from((sector, tag): (&str, &str)) -> Self {
        Self::new(sector, tag)
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.sector, self.tag)
    }
}

/// Finite labeled basis. Ids are kept sorted by (sector, tag), so every
/// sector occupies one contiguous index range and matrix layouts are
/// reproducible.
#[derive(Debug, PartialEq, Eq)]
pub struct Space {
    basis: Vec<BasisId>,
}

impl Space {
    pub fn new(ids: impl IntoIterator<Item = BasisId>) -> Result<Arc<Self>> {
        let mut basis: Vec<BasisId> = ids.into_iter().collect();
        if basis.is_empty() {
            return Err(Error::EmptyInput("space basis"));
        }
        basis.sort();
        for window in basis.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicateBasisId(window[0].to_string()));
            }
        }
        Ok(Arc::new(Self { basis }))
    }

    /// Space with a single sector holding the given tags.
    pub fn single_sector(
        sector: impl Into<SectorLabel>,
        tags: impl IntoIterator<Item = impl Into<String>>,
    ) -> Result<Arc<Self>> {
        let sector = sector.into();
        Self::new(
            tags.into_iter()
                .map(|tag| BasisId::new(sector.clone(), tag)),
        )
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisId] {
        &self.basis
    }

    pub fn index_of(&self, id: &BasisId) -> Option<usize> {
        self.basis.binary_search(id).ok()
    }

    pub fn sector_at(&self, index: usize) -> &SectorLabel {
        self.basis[index].sector()
    }

    /// Sector labels in basis order, without repeats.
    pub fn sectors(&self) -> Vec<SectorLabel> {
        let mut out: Vec<SectorLabel> = Vec::new();
        for id in &self.basis {
            if out.last() != Some(id.sector()) {
                out.push(id.sector().clone());
            }
        }
        out
    }

    pub fn has_sector(&self, sector: &SectorLabel) -> bool {
        self.basis.iter().any(|id| id.sector() == sector)
    }

    /// Contiguous index range of a sector, if present.
    pub fn sector_range(&self, sector: &SectorLabel) -> Option<Range<usize>> {
        let start = self.basis.iter().position(|id| id.sector() == sector)?;
        let len = self.basis[start..]
            .iter()
            .take_while(|id| id.sector() == sector)
            .count();
        Some(start..start + len)
    }

    /// Two handles address the same space if they are the same allocation
    /// or structurally equal bases.
    pub fn same_space(a: &Arc<Space>, b: &Arc<Space>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_is_sorted_and_deduplicated() {
        let space = Space::new([
            BasisId::new("b", "1"),
            BasisId::new("a", "2"),
            BasisId::new("a", "1"),
        ])
        .unwrap();
        let tags: Vec<String> = space.basis().iter().map(|id| id.to_string()).collect();
        assert_eq!(tags, ["a:1", "a:2", "b:1"]);
        assert_eq!(space.index_of(&BasisId::new("a", "2")), Some(1));
        assert_eq!(space.index_of(&BasisId::new("c", "1")), None);
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let result = Space::new([BasisId::new("a", "1"), BasisId::new("a", "1")]);
        assert!(matches!(result, Err(Error::DuplicateBasisId(_))));
    }

    #[test]
    fn empty_space_is_rejected() {
        assert!(matches!(
            Space::new(std::iter::empty::<BasisId>()),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn sector_ranges_are_contiguous() {
        let space = Space::new([
            BasisId::new("g2", "x"),
            BasisId::new("g1", "a"),
            BasisId::new("g1", "b"),
            BasisId::new("g2", "y"),
            BasisId::new("g2", "z"),
        ])
        .unwrap();
        assert_eq!(space.sector_range(&"g1".into()), Some(0..2));
        assert_eq!(space.sector_range(&"g2".into()), Some(2..5));
        assert_eq!(space.sector_range(&"g3".into()), None);
        assert_eq!(
            space.sectors(),
            vec![SectorLabel::new("g1"), SectorLabel::new("g2")]
        );
    }

    #[test]
    fn structural_equality_identifies_spaces() {
        let a = Space::single_sector("s", ["0", "1"]).unwrap();
        let b = Space::single_sector("s", ["1", "0"]).unwrap();
        assert!(Space::same_space(&a, &b));
        let c = Space::single_sector("t", ["0", "1"]).unwrap();
        assert!(!Space::same_space(&a, &c));
    }
}
