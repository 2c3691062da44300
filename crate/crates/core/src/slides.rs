//! Handle slides and replayable slide traces.
//!
//! Sliding `a` over `b` replaces the family `𝓕` by
//! `𝓕 Δ {X ∪ a : X ∪ b ∈ 𝓕, X ⊆ E − {a, b}}`. Members containing both `a`
//! and `b` are never touched. The operation is defined on arbitrary set
//! systems, is an involution, and preserves member sizes.

use crate::error::{Error, Result};
use crate::setsystem::{Element, SetSystem, SubsetMask};

/// An ordered list of `(a, b)` pairs, each meaning "slide `a` over `b`".
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SlideTrace {
    steps: Vec<(Element, Element)>,
}

impl SlideTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_steps(steps: Vec<(Element, Element)>) -> Result<Self> {
        if steps.iter().any(|&(a, b)| a == b) {
            return Err(Error::SameElement);
        }
        Ok(SlideTrace { steps })
    }

    pub fn push(&mut self, a: Element, b: Element) {
        debug_assert_ne!(a, b);
        self.steps.push((a, b));
    }

    pub fn extend(&mut self, other: &SlideTrace) {
        self.steps.extend_from_slice(&other.steps);
    }

    pub fn steps(&self) -> &[(Element, Element)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Steps as label pairs of `ground`.
    pub fn label_steps<'a>(&self, system: &'a SetSystem) -> Vec<(&'a str, &'a str)> {
        self.steps
            .iter()
            .map(|&(a, b)| (system.ground().label(a), system.ground().label(b)))
            .collect()
    }
}

/// Slide `a` over `b`.
pub fn handle_slide(system: &SetSystem, a: Element, b: Element) -> Result<SetSystem> {
    if a == b {
        return Err(Error::SameElement);
    }
    system.check_element(a)?;
    system.check_element(b)?;
    let family = slide_family(system.family(), a, b);
    Ok(SetSystem::from_sorted(system.ground_arc().clone(), family))
}

/// Left fold of [`handle_slide`] over the trace.
pub fn apply_trace(system: &SetSystem, trace: &SlideTrace) -> Result<SetSystem> {
    for &(a, b) in trace.steps() {
        system.check_element(a)?;
        system.check_element(b)?;
    }
    let mut family = system.family().to_vec();
    for &(a, b) in trace.steps() {
        family = slide_family(&family, a, b);
    }
    Ok(SetSystem::from_sorted(system.ground_arc().clone(), family))
}

/// The slide on a raw sorted family; the result is sorted.
pub(crate) fn slide_family(family: &[SubsetMask], a: Element, b: Element) -> Vec<SubsetMask> {
    let mut modifier: Vec<SubsetMask> = family
        .iter()
        .filter(|m| m.contains(b) && !m.contains(a))
        .map(|&m| m.flip(a).flip(b))
        .collect();
    if modifier.is_empty() {
        return family.to_vec();
    }
    modifier.sort_unstable();
    symmetric_difference(family, &modifier)
}

fn symmetric_difference(left: &[SubsetMask], right: &[SubsetMask]) -> Vec<SubsetMask> {
    let mut out = Vec::with_capacity(left.len() + right.len());
    let (mut i, mut j) = (0, 0);
    while i < left.len() && j < right.len() {
        match left[i].cmp(&right[j]) {
            std::cmp::Ordering::Less => {
                out.push(left[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(right[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&left[i..]);
    out.extend_from_slice(&right[j..]);
    out
}
