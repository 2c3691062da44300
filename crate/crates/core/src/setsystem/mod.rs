//! Ground sets, subset masks and set systems.
//!
//! A [`SetSystem`] is a ground set together with a family of subsets. It is
//! the carrier for matroids (the family is the basis set) and delta-matroids
//! (the family is the feasible set). Families are kept sorted by
//! `(size, bits)` with no duplicates, so equality is structural and
//! membership is a binary search.

mod iso;
mod mask;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use iso::Isomorphism;
pub use mask::{Elements, SubsetMask};

/// Index of an element in its ground set.
pub type Element = usize;

/// An ordered list of distinct element labels.
#[derive(Clone)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, Element>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > 64 {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, element: Element) -> &str {
        &self.labels[element]
    }

    pub fn index_of(&self, label: &str) -> Option<Element> {
        self.index.get(label).copied()
    }

    pub fn element(&self, label: &str) -> Result<Element> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<SubsetMask> {
        labels
            .into_iter()
            .try_fold(SubsetMask::EMPTY, |m, l| Ok(m.insert(self.element(l.as_ref())?)))
    }

    pub fn labels_of(&self, mask: SubsetMask) -> Vec<&str> {
        mask.iter().map(|e| self.label(e)).collect()
    }

    fn check_element(&self, element: Element) -> Result<()> {
        if element < self.len() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(element))
        }
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for GroundSet {}

impl std::hash::Hash for GroundSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Every member has a size of the same parity.
    Even,
    Odd,
}

/// Size window and degenerate elements of a nonempty family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureProfile {
    pub min_size: usize,
    pub max_size: usize,
    pub parity: Parity,
    /// Elements contained in no member.
    pub loops: SubsetMask,
    /// Elements contained in every member.
    pub everywhere_elements: SubsetMask,
}

/// A ground set and a sorted, duplicate-free family of subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: Arc<GroundSet>,
    family: Vec<SubsetMask>,
}

impl SetSystem {
    pub fn new(
        ground: impl Into<Arc<GroundSet>>,
        family: impl IntoIterator<Item = SubsetMask>,
    ) -> Result<Self> {
        let ground = ground.into();
        let full = ground.full_mask();
        let family: Vec<SubsetMask> = family.into_iter().collect();
        if family.iter().any(|m| !m.is_subset_of(full)) {
            return Err(Error::SubsetOutOfRange);
        }
        Ok(Self::from_unsorted(ground, family))
    }

    /// Build from labels, e.g. `from_labels(&["1", "2"], &[&["1"], &[]])`.
    pub fn from_labels<S: AsRef<str>>(labels: &[S], members: &[&[S]]) -> Result<Self> {
        let ground = GroundSet::new(labels.iter().map(|l| l.as_ref().to_string()))?;
        let family = members
            .iter()
            .map(|m| ground.mask_of(m.iter()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, family)
    }

    pub(crate) fn from_unsorted(ground: Arc<GroundSet>, mut family: Vec<SubsetMask>) -> Self {
        family.sort_unstable();
        family.dedup();
        SetSystem { ground, family }
    }

    /// Caller guarantees `family` is sorted, deduplicated and inside the ground.
    pub(crate) fn from_sorted(ground: Arc<GroundSet>, family: Vec<SubsetMask>) -> Self {
        debug_assert!(family.windows(2).all(|w| w[0] < w[1]));
        SetSystem { ground, family }
    }

    /// A new system on the same ground.
    pub fn with_family(&self, family: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        Self::new(self.ground.clone(), family)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub(crate) fn ground_arc(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// Number of ground elements.
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn family(&self) -> &[SubsetMask] {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn contains(&self, member: SubsetMask) -> bool {
        self.family.binary_search(&member).is_ok()
    }

    /// Members as label lists.
    pub fn members(&self) -> Vec<Vec<&str>> {
        self.family.iter().map(|&m| self.ground.labels_of(m)).collect()
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.family.is_empty() {
            Err(Error::EmptyFamily)
        } else {
            Ok(())
        }
    }

    /// Symmetric exchange axiom, checked over every triple.
    pub fn check_sea(&self) -> Result<bool> {
        self.require_nonempty()?;
        for &f1 in &self.family {
            for &f2 in &self.family {
                let delta = f1 ^ f2;
                for x in delta.iter() {
                    let exchanged = delta
                        .iter()
                        .any(|y| self.contains(f1.flip(x).flip_if_distinct(x, y)));
                    if !exchanged {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Basis exchange axiom; unequal member sizes fail immediately.
    pub fn check_ea(&self) -> Result<bool> {
        self.require_nonempty()?;
        let size = self.family[0].len();
        if self.family.iter().any(|m| m.len() != size) {
            return Ok(false);
        }
        for &b1 in &self.family {
            for &b2 in &self.family {
                let only_b2 = b2 - b1;
                for x in (b1 - b2).iter() {
                    if !only_b2.iter().any(|y| self.contains(b1.flip(x).flip(y))) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `{A Δ X : X in family}`.
    pub fn twist(&self, by: SubsetMask) -> Result<Self> {
        if !by.is_subset_of(self.ground.full_mask()) {
            return Err(Error::SubsetOutOfRange);
        }
        let family = self.family.iter().map(|&m| m ^ by).collect();
        Ok(Self::from_unsorted(self.ground.clone(), family))
    }

    pub fn dual(&self) -> Self {
        let full = self.ground.full_mask();
        let family = self.family.iter().map(|&m| m ^ full).collect();
        Self::from_unsorted(self.ground.clone(), family)
    }

    /// Direct sum over pairwise label-disjoint grounds. The ground of the
    /// result lists each part's labels in order.
    pub fn direct_sum(parts: &[SetSystem]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        for part in parts {
            labels.extend(part.ground.labels().iter().cloned());
        }
        let ground = match GroundSet::new(labels) {
            Ok(g) => g,
            Err(Error::DuplicateLabel(l)) => return Err(Error::NonDisjointGrounds(l)),
            Err(e) => return Err(e),
        };
        let mut family = vec![SubsetMask::EMPTY];
        let mut offset = 0;
        for part in parts {
            let mut next = Vec::with_capacity(family.len() * part.len());
            for &acc in &family {
                for &m in &part.family {
                    next.push(acc | SubsetMask::from_bits(m.bits() << offset));
                }
            }
            family = next;
            offset += part.n();
        }
        Ok(Self::from_unsorted(Arc::new(ground), family))
    }

    pub fn profile(&self) -> Result<StructureProfile> {
        self.require_nonempty()?;
        let min_size = self.family.first().map(|m| m.len()).unwrap_or(0);
        let max_size = self.family.last().map(|m| m.len()).unwrap_or(0);
        let same_parity = self.family.iter().all(|m| m.len() % 2 == min_size % 2);
        let union = self.family.iter().fold(SubsetMask::EMPTY, |a, &m| a | m);
        let meet = self.family.iter().fold(self.ground.full_mask(), |a, &m| a & m);
        Ok(StructureProfile {
            min_size,
            max_size,
            parity: if same_parity { Parity::Even } else { Parity::Odd },
            loops: self.ground.full_mask() - union,
            everywhere_elements: meet,
        })
    }

    pub(crate) fn check_element(&self, element: Element) -> Result<()> {
        self.ground.check_element(element)
    }
}

impl SubsetMask {
    /// `self Δ {y}` unless `y == x`; the exchange step `F Δ {x, y}` with `x = y` allowed.
    fn flip_if_distinct(self, x: usize, y: usize) -> SubsetMask {
        if x == y {
            self
        } else {
            self.flip(y)
        }
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetSystem")
            .field("ground", &self.ground)
            .field("family", &self.members())
            .finish()
    }
}
