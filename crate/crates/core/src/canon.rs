//! Canonical forms `D_{i,j,k,l}` of binary delta-matroids and the
//! handle-slide reduction that reaches them.
//!
//! `D_{i,j,k,l}` is the direct sum of `i` loop atoms `({e}, {∅})`, `j` pair
//! atoms `({e,f}, {∅, {e,f}})`, `k` odd atoms `({e}, {∅, {e}})` and `l` full
//! atoms `({e}, {{e}})`.
//!
//! [`reduce`] runs in three stages and concatenates their traces:
//!
//! 1. reduce the upper matroid to a single basis `F_max`;
//! 2. reduce the lower matroid of the result to a single basis
//!    `F_min ⊆ F_max`, sliding only inside `F_max`;
//! 3. bring the middle part, the contraction by `F_min` restricted to
//!    `F_max − F_min`, to hyperbolic pairs or odd atoms.
//!
//! Stages 1 and 2 kill length-one bases greedily. Stage 3 reads the
//! symmetric matrix of the middle part and emits the transvections that
//! normalise it. Every stage falls back to an exhaustive slide search if
//! its constructive step does not reach the goal, and the final system is
//! checked against [`build_canonical`] by an explicit isomorphism.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2rep::{candidate_matrix, delta_from_matrix_on, is_binary, normalize_invertible};
use crate::matroid::{bound_matroid, Bound, Matroid};
use crate::setsystem::{Element, GroundSet, Isomorphism, Parity, SetSystem, StructureProfile, SubsetMask};
use crate::slides::{apply_trace, slide_family, SlideTrace};

/// The quadruple `(i, j, k, l)` of a canonical form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalParams {
    /// Loop atoms `({e}, {∅})`.
    pub i: usize,
    /// Pair atoms `({e,f}, {∅, {e,f}})`.
    pub j: usize,
    /// Odd atoms `({e}, {∅, {e}})`.
    pub k: usize,
    /// Full atoms `({e}, {{e}})`.
    pub l: usize,
}

impl CanonicalParams {
    pub const fn new(i: usize, j: usize, k: usize, l: usize) -> Self {
        CanonicalParams { i, j, k, l }
    }

    pub const fn ground_size(&self) -> usize {
        self.i + 2 * self.j + self.k + self.l
    }

    fn from_profile(profile: &StructureProfile, n: usize) -> Self {
        let width = profile.max_size - profile.min_size;
        let (j, k) = match profile.parity {
            Parity::Even => (width / 2, 0),
            Parity::Odd => (0, width),
        };
        CanonicalParams {
            i: n - profile.max_size,
            j,
            k,
            l: profile.min_size,
        }
    }
}

impl fmt::Display for CanonicalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i={} j={} k={} l={}", self.i, self.j, self.k, self.l)
    }
}

/// Parameters of the canonical form a binary delta-matroid slides to.
///
/// Odd systems are normalised to `j = 0`.
pub fn canonical_params(system: &SetSystem) -> Result<CanonicalParams> {
    if !system.check_sea()? {
        return Err(Error::NotDeltaMatroid);
    }
    if !is_binary(system) {
        return Err(Error::NotBinary);
    }
    Ok(CanonicalParams::from_profile(&system.profile()?, system.n()))
}

/// `D_{i,j,k,l}` with labels `z1.. p1a p1b.. o1.. f1..` in that order.
pub fn build_canonical(params: CanonicalParams) -> SetSystem {
    let mut labels = Vec::with_capacity(params.ground_size());
    labels.extend((1..=params.i).map(|n| format!("z{n}")));
    for n in 1..=params.j {
        labels.push(format!("p{n}a"));
        labels.push(format!("p{n}b"));
    }
    labels.extend((1..=params.k).map(|n| format!("o{n}")));
    labels.extend((1..=params.l).map(|n| format!("f{n}")));
    let ground = GroundSet::new(labels).expect("at most 64 distinct labels");

    let pair_start = params.i;
    let odd_start = pair_start + 2 * params.j;
    let full = SubsetMask::full(params.ground_size()) - SubsetMask::full(odd_start + params.k);
    let free = params.j + params.k;
    assert!(free < 32, "canonical family of 2^{free} members is out of reach");
    let family = (0u64..1 << free).map(|choice| {
        let mut m = full;
        for p in 0..params.j {
            if choice >> p & 1 == 1 {
                m = m | SubsetMask::pair(pair_start + 2 * p, pair_start + 2 * p + 1);
            }
        }
        for o in 0..params.k {
            if choice >> (params.j + o) & 1 == 1 {
                m = m.insert(odd_start + o);
            }
        }
        m
    });
    SetSystem::new(ground, family.collect::<Vec<_>>()).expect("members lie inside the ground")
}

/// Parameters `p` such that `system` is isomorphic to `build_canonical(p)`,
/// read off structurally: loops, elements in every member, singleton members
/// of the remainder (odd atoms) and the 2-sets that must pair up the rest.
pub fn match_canonical(system: &SetSystem) -> Option<CanonicalParams> {
    let profile = system.profile().ok()?;
    let everywhere = profile.everywhere_elements;
    let residual = system.ground().full_mask() - profile.loops - everywhere;
    let reduced: Vec<SubsetMask> = system.family().iter().map(|&m| m - everywhere).collect();
    let has = |m: SubsetMask| reduced.binary_search(&m).is_ok();
    if !has(SubsetMask::EMPTY) {
        return None;
    }

    let odd = SubsetMask::from_elements(residual.iter().filter(|&e| has(SubsetMask::singleton(e))));
    let rest = residual - odd;
    let mut covered = SubsetMask::EMPTY;
    let mut pairs = Vec::new();
    for &m in reduced.iter().filter(|m| m.len() == 2 && m.is_subset_of(rest)) {
        if !(m & covered).is_empty() {
            return None;
        }
        covered = covered | m;
        pairs.push(m);
    }
    if covered != rest {
        return None;
    }
    let free = pairs.len() + odd.len();
    if free >= 64 || reduced.len() as u64 != 1u64 << free {
        return None;
    }
    // `reduced` is duplicate-free and of the right size, so membership of
    // every element in the product suffices.
    let in_product = |m: SubsetMask| {
        let paired = m & rest;
        pairs.iter().fold(paired, |left, &p| if p.is_subset_of(left) { left - p } else { left }).is_empty()
    };
    if !reduced.iter().all(|&m| m.is_subset_of(residual) && in_product(m)) {
        return None;
    }
    Some(CanonicalParams {
        i: profile.loops.len(),
        j: pairs.len(),
        k: odd.len(),
        l: everywhere.len(),
    })
}

/// Limits for the exhaustive fallback searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Maximum depth of the iterative-deepening search in the middle stage.
    pub depth_budget: usize,
    /// Maximum number of distinct families any fallback search may visit.
    pub state_budget: usize,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            depth_budget: 12,
            state_budget: 1 << 20,
        }
    }
}

/// A verified reduction of a binary delta-matroid to canonical form.
#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub trace: SlideTrace,
    pub params: CanonicalParams,
    /// Maps `result` onto `build_canonical(params)`.
    pub witness: Isomorphism,
    /// `apply_trace(input, trace)`.
    pub result: SetSystem,
    /// Number of stages that needed the exhaustive fallback.
    pub fallback_searches: usize,
}

impl ReductionResult {
    /// Replay the trace on `input` and check the witness independently.
    pub fn verify(&self, input: &SetSystem) -> bool {
        let Ok(replayed) = apply_trace(input, &self.trace) else {
            return false;
        };
        replayed == self.result && self.witness.verify(&replayed, &build_canonical(self.params))
    }
}

/// Slides sending a binary matroid to the matroid whose only basis is `target`.
///
/// Repeatedly takes the first basis `target Δ {x, y}` with `x ∈ target`,
/// `y ∉ target` and slides `y` over `x`, which removes it without touching
/// any other fundamental exchange. Falls back to breadth-first search if the
/// greedy loop exceeds `4^|E|` steps.
pub fn reduce_matroid(matroid: &Matroid, target: SubsetMask) -> Result<SlideTrace> {
    reduce_matroid_with(matroid, target, &ReduceOptions::default()).map(|(t, _)| t)
}

fn reduce_matroid_with(matroid: &Matroid, target: SubsetMask, options: &ReduceOptions) -> Result<(SlideTrace, bool)> {
    let bases = matroid.bases();
    if bases.binary_search(&target).is_err() {
        return Err(Error::TargetNotBasis);
    }
    let n = matroid.carrier().n();
    let budget = 4usize.saturating_pow(n as u32).min(1 << 20);
    let mut family = bases.to_vec();
    let mut trace = SlideTrace::new();
    while trace.len() <= budget {
        if family.len() == 1 {
            return Ok((trace, false));
        }
        let Some(&adjacent) = family.iter().find(|&&b| (b ^ target).len() == 2) else {
            break;
        };
        let x = (target - adjacent).iter().next().expect("x in target");
        let y = (adjacent - target).iter().next().expect("y outside target");
        family = slide_family(&family, y, x);
        trace.push(y, x);
    }

    let moves = all_pairs(matroid.carrier().ground().full_mask());
    let goal = [target];
    breadth_first(bases, &moves, |f| f == goal, options.state_budget)
        .map(|t| (t, true))
        .ok_or(Error::NoReduction)
}

pub fn reduce(system: &SetSystem) -> Result<ReductionResult> {
    reduce_with(system, &ReduceOptions::default())
}

pub fn reduce_with(system: &SetSystem, options: &ReduceOptions) -> Result<ReductionResult> {
    let params = canonical_params(system)?;
    let mut fallback_searches = 0;

    // upper matroid
    let upper = bound_matroid(system, Bound::Upper)?;
    let f_max = upper.bases()[0];
    let (mut trace, searched) = reduce_matroid_with(&upper, f_max, options)?;
    fallback_searches += searched as usize;
    let stage_a = apply_trace(system, &trace)?;
    if stage_a.family().iter().filter(|m| m.len() == f_max.len()).count() != 1 {
        return Err(Error::Invariant("several maximum feasible sets after the upper stage"));
    }

    // lower matroid, inside F_max
    let lower = bound_matroid(&stage_a, Bound::Lower)?;
    let f_min = lower.bases()[0];
    let (lower_trace, searched) = reduce_matroid_with(&lower, f_min, options)?;
    fallback_searches += searched as usize;
    if lower_trace.steps().iter().any(|&(a, b)| !f_max.contains(a) || !f_max.contains(b)) {
        return Err(Error::Invariant("lower-stage slide leaves the maximum feasible set"));
    }
    let stage_b = apply_trace(&stage_a, &lower_trace)?;
    trace.extend(&lower_trace);
    let family = stage_b.family();
    if family.first() != Some(&f_min)
        || family.last() != Some(&f_max)
        || family.get(1).is_some_and(|m| m.len() == f_min.len())
        || !family.iter().all(|&m| f_min.is_subset_of(m) && m.is_subset_of(f_max))
    {
        return Err(Error::Invariant("feasible sets are not nested between F_min and F_max"));
    }

    // middle part
    let middle = f_max - f_min;
    let (middle_trace, searched) = reduce_middle(&stage_b, f_min, middle, params, options)?;
    fallback_searches += searched as usize;
    trace.extend(&middle_trace);
    let result = apply_trace(&stage_b, &middle_trace)?;

    let witness = result
        .find_isomorphism(&build_canonical(params))
        .ok_or(Error::Invariant("final system is not isomorphic to its canonical form"))?;
    Ok(ReductionResult {
        trace,
        params,
        witness,
        result,
        fallback_searches,
    })
}

fn reduce_middle(
    system: &SetSystem,
    f_min: SubsetMask,
    middle: SubsetMask,
    params: CanonicalParams,
    options: &ReduceOptions,
) -> Result<(SlideTrace, bool)> {
    let elements: Vec<Element> = middle.iter().collect();
    let contraction: Vec<SubsetMask> =
        system.family().iter().map(|&m| (m - f_min).compress(middle)).collect();
    let labels = elements.iter().map(|&e| system.ground().label(e).to_string());
    let ground = Arc::new(GroundSet::new(labels)?);
    let contraction = SetSystem::from_unsorted(ground.clone(), contraction);
    if !contraction.contains(SubsetMask::EMPTY) {
        return Err(Error::Invariant("contraction by F_min is not empty-set feasible"));
    }

    let matrix = candidate_matrix(&contraction);
    if delta_from_matrix_on(&matrix, ground)? == contraction {
        if let Some((steps, _)) = normalize_invertible(&matrix) {
            let mut trace = SlideTrace::new();
            for (x, y) in steps {
                trace.push(elements[x], elements[y]);
            }
            if match_canonical(&apply_trace(system, &trace)?) == Some(params) {
                return Ok((trace, false));
            }
        }
    }

    let moves = all_pairs(middle);
    deepening(system.family(), &moves, |f| matches_params(system, f, params), options)
        .map(|t| (t, true))
        .ok_or(Error::NoReduction)
}

fn matches_params(template: &SetSystem, family: &[SubsetMask], params: CanonicalParams) -> bool {
    let candidate = SetSystem::from_sorted(template.ground_arc().clone(), family.to_vec());
    match_canonical(&candidate) == Some(params)
}

/// All ordered pairs of distinct elements of `within`, lexicographic.
fn all_pairs(within: SubsetMask) -> Vec<(Element, Element)> {
    let mut moves = Vec::new();
    for a in within.iter() {
        for b in within.iter() {
            if a != b {
                moves.push((a, b));
            }
        }
    }
    moves
}

/// Shortest slide sequence reaching `goal`, visiting at most `state_budget` families.
fn breadth_first(
    start: &[SubsetMask],
    moves: &[(Element, Element)],
    goal: impl Fn(&[SubsetMask]) -> bool,
    state_budget: usize,
) -> Option<SlideTrace> {
    if goal(start) {
        return Some(SlideTrace::new());
    }
    let mut nodes: Vec<(Vec<SubsetMask>, usize, (Element, Element))> = vec![(start.to_vec(), usize::MAX, (0, 0))];
    let mut seen: HashMap<Vec<SubsetMask>, ()> = HashMap::new();
    seen.insert(start.to_vec(), ());
    let mut head = 0;
    while head < nodes.len() {
        for &(a, b) in moves {
            let next = slide_family(&nodes[head].0, a, b);
            if seen.contains_key(&next) {
                continue;
            }
            if seen.len() >= state_budget {
                return None;
            }
            seen.insert(next.clone(), ());
            let reached = goal(&next);
            nodes.push((next, head, (a, b)));
            if reached {
                let mut steps = Vec::new();
                let mut at = nodes.len() - 1;
                while nodes[at].1 != usize::MAX {
                    steps.push(nodes[at].2);
                    at = nodes[at].1;
                }
                steps.reverse();
                return Some(SlideTrace::from_steps(steps).expect("moves are distinct pairs"));
            }
        }
        head += 1;
    }
    None
}

/// Iterative deepening up to `depth_budget`, remembering the largest
/// remaining depth each family was expanded with.
fn deepening(
    start: &[SubsetMask],
    moves: &[(Element, Element)],
    goal: impl Fn(&[SubsetMask]) -> bool,
    options: &ReduceOptions,
) -> Option<SlideTrace> {
    fn dive(
        family: &[SubsetMask],
        remaining: usize,
        moves: &[(Element, Element)],
        goal: &dyn Fn(&[SubsetMask]) -> bool,
        seen: &mut HashMap<Vec<SubsetMask>, usize>,
        path: &mut Vec<(Element, Element)>,
        budget: usize,
    ) -> bool {
        if goal(family) {
            return true;
        }
        if remaining == 0 || seen.len() >= budget {
            return false;
        }
        match seen.get(family) {
            Some(&r) if r >= remaining => return false,
            _ => {
                seen.insert(family.to_vec(), remaining);
            }
        }
        for &(a, b) in moves {
            let next = slide_family(family, a, b);
            path.push((a, b));
            if dive(&next, remaining - 1, moves, goal, seen, path, budget) {
                return true;
            }
            path.pop();
        }
        false
    }

    for depth in 0..=options.depth_budget {
        let mut seen = HashMap::new();
        let mut path = Vec::new();
        if dive(start, depth, moves, &goal, &mut seen, &mut path, options.state_budget) {
            return Some(SlideTrace::from_steps(path).expect("moves are distinct pairs"));
        }
    }
    None
}
