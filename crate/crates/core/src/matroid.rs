//! Matroids as set systems of bases: the upper and lower matroids of a
//! delta-matroid, minors, graphic matroids and the `U_{2,4}` obstruction.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::setsystem::{Element, GroundSet, SetSystem, SubsetMask};

/// A set system whose family satisfies the basis exchange axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    carrier: SetSystem,
}

impl Matroid {
    pub fn new(carrier: SetSystem) -> Result<Self> {
        if carrier.check_ea()? {
            Ok(Matroid { carrier })
        } else {
            Err(Error::NotMatroid)
        }
    }

    pub fn carrier(&self) -> &SetSystem {
        &self.carrier
    }

    pub fn into_carrier(self) -> SetSystem {
        self.carrier
    }

    pub fn bases(&self) -> &[SubsetMask] {
        self.carrier.family()
    }

    pub fn rank(&self) -> usize {
        self.bases()[0].len()
    }

    pub fn set_status(&self, subset: SubsetMask) -> SetStatus {
        let independent = self.bases().iter().any(|&b| subset.is_subset_of(b));
        let spanning = self.bases().iter().any(|&b| b.is_subset_of(subset));
        SetStatus {
            independent,
            spanning,
            basis: independent && spanning,
        }
    }

    /// Matroid dual: complement every basis.
    pub fn dual(&self) -> Matroid {
        Matroid {
            carrier: self.carrier.dual(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetStatus {
    pub independent: bool,
    pub spanning: bool,
    pub basis: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// Feasible sets of largest size.
    Upper,
    /// Feasible sets of smallest size.
    Lower,
}

pub fn bound_matroid(system: &SetSystem, which: Bound) -> Result<Matroid> {
    let profile = system.profile()?;
    let size = match which {
        Bound::Upper => profile.max_size,
        Bound::Lower => profile.min_size,
    };
    let layer: Vec<SubsetMask> = system.family().iter().copied().filter(|m| m.len() == size).collect();
    let carrier = SetSystem::from_sorted(system.ground_arc().clone(), layer);
    if !carrier.check_ea()? {
        return Err(Error::AxiomViolated);
    }
    Ok(Matroid { carrier })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorMode {
    Delete,
    Contract,
}

/// Delete or contract one element. Deleting a coloop contracts it and
/// contracting a loop deletes it, so the family never becomes empty.
pub fn minor_step(system: &SetSystem, element: Element, mode: MinorMode) -> Result<SetSystem> {
    system.check_element(element)?;
    let family = minor_raw(system.family(), element, mode);
    Ok(drop_elements(system, SubsetMask::singleton(element), family))
}

/// Apply all deletions, then all contractions, each in ground order.
pub fn minor(system: &SetSystem, delete: SubsetMask, contract: SubsetMask) -> Result<SetSystem> {
    if !(delete | contract).is_subset_of(system.ground().full_mask()) {
        return Err(Error::SubsetOutOfRange);
    }
    if !(delete & contract).is_empty() {
        return Err(Error::MinorOverlap);
    }
    let mut family = system.family().to_vec();
    for e in delete.iter() {
        family = minor_raw(&family, e, MinorMode::Delete);
    }
    for e in contract.iter() {
        family = minor_raw(&family, e, MinorMode::Contract);
    }
    Ok(drop_elements(system, delete | contract, family))
}

/// One minor step on a family over the original indices; `element` no
/// longer occurs in the result.
fn minor_raw(family: &[SubsetMask], element: Element, mode: MinorMode) -> Vec<SubsetMask> {
    let is_loop = family.iter().all(|m| !m.contains(element));
    let is_coloop = family.iter().all(|m| m.contains(element));
    let mode = match mode {
        MinorMode::Delete if is_coloop => MinorMode::Contract,
        MinorMode::Contract if is_loop => MinorMode::Delete,
        m => m,
    };
    match mode {
        MinorMode::Delete => family.iter().copied().filter(|m| !m.contains(element)).collect(),
        MinorMode::Contract => family
            .iter()
            .filter(|m| m.contains(element))
            .map(|m| m.remove(element))
            .collect(),
    }
}

fn drop_elements(system: &SetSystem, removed: SubsetMask, family: Vec<SubsetMask>) -> SetSystem {
    let keep = system.ground().full_mask() - removed;
    let labels = keep.iter().map(|e| system.ground().label(e).to_string());
    let ground = GroundSet::new(labels).expect("subset of a valid ground");
    let family = family.into_iter().map(|m| m.compress(keep)).collect();
    SetSystem::from_unsorted(Arc::new(ground), family)
}

/// Bases are the edge sets of spanning trees. Vertices are `0..vertices`;
/// self-loops are allowed and end up as matroid loops.
pub fn graphic_matroid<S: AsRef<str>>(vertices: usize, edges: &[(S, usize, usize)]) -> Result<Matroid> {
    for &(_, u, v) in edges {
        if u >= vertices {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= vertices {
            return Err(Error::VertexOutOfRange(v));
        }
    }
    let ground = Arc::new(GroundSet::new(edges.iter().map(|(l, _, _)| l.as_ref().to_string()))?);
    if vertices == 0 {
        return Err(Error::Disconnected);
    }
    let mut all = UnionFind::new(vertices);
    for &(_, u, v) in edges {
        all.union(u, v);
    }
    if (0..vertices).any(|x| all.find(x) != all.find(0)) {
        return Err(Error::Disconnected);
    }

    let ends: Vec<(usize, usize)> = edges.iter().map(|&(_, u, v)| (u, v)).collect();
    let mut trees = Vec::new();
    spanning_trees(&ends, 0, SubsetMask::EMPTY, UnionFind::new(vertices), vertices - 1, &mut trees);
    let carrier = SetSystem::from_unsorted(ground, trees);
    Ok(Matroid { carrier })
}

fn spanning_trees(
    ends: &[(usize, usize)],
    next: usize,
    chosen: SubsetMask,
    components: UnionFind,
    needed: usize,
    out: &mut Vec<SubsetMask>,
) {
    if chosen.len() == needed {
        out.push(chosen);
        return;
    }
    if ends.len() - next < needed - chosen.len() {
        return;
    }
    let (u, v) = ends[next];
    let mut joined = components.clone();
    if joined.union(u, v) {
        spanning_trees(ends, next + 1, chosen.insert(next), joined, needed, out);
    }
    spanning_trees(ends, next + 1, chosen, components, needed, out);
}

#[derive(Clone)]
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Whether some minor is isomorphic to `U_{2,4}`: four elements whose
/// bases are all six 2-subsets, the six-basis pattern
/// `{F, FΔ{x₁,x₂}, FΔ{y₁,y₂}, FΔ{x₁,x₂}Δ{y₁,y₂}, FΔ{x₁,y₂}, FΔ{y₁,x₂}}`.
pub fn has_u24_pattern(matroid: &Matroid) -> bool {
    let mut seen = HashSet::new();
    u24_search(
        matroid.carrier.ground().full_mask(),
        matroid.bases().to_vec(),
        &mut seen,
    )
}

fn u24_search(ground: SubsetMask, family: Vec<SubsetMask>, seen: &mut HashSet<(SubsetMask, Vec<SubsetMask>)>) -> bool {
    if ground.len() < 4 {
        return false;
    }
    if ground.len() == 4 {
        return family.len() == 6 && family.iter().all(|m| m.len() == 2);
    }
    if !seen.insert((ground, family.clone())) {
        return false;
    }
    ground.iter().any(|e| {
        [MinorMode::Delete, MinorMode::Contract]
            .into_iter()
            .any(|mode| {
                let mut child = minor_raw(&family, e, mode);
                child.sort_unstable();
                u24_search(ground.remove(e), child, seen)
            })
    })
}
