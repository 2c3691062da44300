//! Exhaustive census of delta-matroids on ground sets of at most four
//! elements, checking every structural claim the library relies on.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::canon::{canonical_params, match_canonical, reduce_with, CanonicalParams, ReduceOptions};
use crate::error::{Error, Result};
use crate::gf2rep::is_binary;
use crate::matroid::{bound_matroid, has_u24_pattern, Bound, Matroid};
use crate::setsystem::{GroundSet, Parity, SetSystem, SubsetMask};
use crate::slides::{handle_slide, slide_family};

pub const MAX_CENSUS_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusFailure {
    pub family: SetSystem,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    /// Nonempty families over the ground set.
    pub total_families: usize,
    pub delta_matroids: usize,
    pub binaries: usize,
    /// Delta-matroids that are also matroids.
    pub matroids: usize,
    pub even_count: usize,
    pub odd_count: usize,
    pub params_histogram: BTreeMap<CanonicalParams, usize>,
    /// For odd binaries, grouped by normalised parameters: the `j` values of
    /// canonical forms found in the same handle-slide orbit.
    pub odd_j_values: BTreeMap<CanonicalParams, BTreeSet<usize>>,
    /// Reductions that needed an exhaustive search stage.
    pub fallback_searches: usize,
    pub failures: Vec<CensusFailure>,
}

/// Every nonempty family on `{1..n}` satisfying the symmetric exchange
/// axiom, ordered by the bit pattern of the family over subsets.
pub fn enumerate_delta_matroids(n: usize) -> Result<impl Iterator<Item = SetSystem>> {
    let codes = delta_matroid_codes(n)?;
    let ground = Arc::new(GroundSet::numbered(n)?);
    Ok(codes.into_iter().map(move |code| decode(&ground, code)))
}

fn delta_matroid_codes(n: usize) -> Result<Vec<u64>> {
    if !(1..=MAX_CENSUS_N).contains(&n) {
        return Err(Error::CensusRange(n));
    }
    let subsets = 1usize << n;
    let limit: u64 = 1 << subsets;
    Ok((1..limit).into_par_iter().filter(|&code| sea_on_code(code, subsets)).collect())
}

/// `code` has bit `s` set iff the subset with bits `s` is a member.
fn sea_on_code(code: u64, subsets: usize) -> bool {
    let member = |s: usize| code >> s & 1 == 1;
    for f1 in (0..subsets).filter(|&s| member(s)) {
        for f2 in (0..subsets).filter(|&s| member(s)) {
            let delta = f1 ^ f2;
            for x in SubsetMask::from_bits(delta as u64).iter() {
                let ok = SubsetMask::from_bits(delta as u64)
                    .iter()
                    .any(|y| member(f1 ^ (1 << x) ^ if y == x { 0 } else { 1 << y }));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn decode(ground: &Arc<GroundSet>, code: u64) -> SetSystem {
    let family = SubsetMask::from_bits(code).iter().map(|s| SubsetMask::from_bits(s as u64)).collect();
    SetSystem::from_unsorted(ground.clone(), family)
}

#[derive(Default)]
struct Outcome {
    binary: bool,
    matroid: bool,
    parity: Option<Parity>,
    params: Option<CanonicalParams>,
    fallback_searches: usize,
    failures: Vec<String>,
}

/// Enumerate every delta-matroid on `n ≤ 4` elements and check, for each:
/// feasible sets are spanning in the lower and independent in the upper
/// matroid; for binaries, that every single slide keeps the system a binary
/// delta-matroid with the same size window, parity and parameters, that
/// [`reduce_with`] returns a trace whose replay is isomorphic to the
/// predicted canonical form, and that binary matroids avoid `U_{2,4}`.
pub fn verify_small(n: usize, depth_budget: usize) -> Result<CensusReport> {
    let codes = delta_matroid_codes(n)?;
    let ground = Arc::new(GroundSet::numbered(n)?);
    let options = ReduceOptions {
        depth_budget,
        ..ReduceOptions::default()
    };
    let systems: Vec<SetSystem> = codes.iter().map(|&c| decode(&ground, c)).collect();
    let outcomes: Vec<Outcome> = systems.par_iter().map(|d| examine(d, &options)).collect();

    let mut report = CensusReport {
        n,
        total_families: (1usize << (1usize << n)) - 1,
        delta_matroids: systems.len(),
        ..CensusReport::default()
    };
    for (system, outcome) in systems.iter().zip(outcomes) {
        report.binaries += outcome.binary as usize;
        report.matroids += outcome.matroid as usize;
        match outcome.parity {
            Some(Parity::Even) => report.even_count += 1,
            Some(Parity::Odd) => report.odd_count += 1,
            None => {}
        }
        if let Some(p) = outcome.params {
            *report.params_histogram.entry(p).or_default() += 1;
        }
        report.fallback_searches += outcome.fallback_searches;
        report.failures.extend(outcome.failures.into_iter().map(|reason| CensusFailure {
            family: system.clone(),
            reason,
        }));
    }
    report.odd_j_values = odd_orbit_j_values(&systems);
    Ok(report)
}

fn examine(d: &SetSystem, options: &ReduceOptions) -> Outcome {
    let mut out = Outcome::default();
    let profile = match d.profile() {
        Ok(p) => p,
        Err(e) => {
            out.failures.push(e.to_string());
            return out;
        }
    };
    out.parity = Some(profile.parity);
    out.matroid = d.check_ea().unwrap_or(false);

    let (upper, lower) = match (bound_matroid(d, Bound::Upper), bound_matroid(d, Bound::Lower)) {
        (Ok(u), Ok(l)) => (u, l),
        (Err(e), _) | (_, Err(e)) => {
            out.failures.push(format!("bound matroid: {e}"));
            return out;
        }
    };
    if let Some(&f) = d
        .family()
        .iter()
        .find(|&&f| !lower.set_status(f).spanning || !upper.set_status(f).independent)
    {
        out.failures.push(format!("feasible {:?} not spanning-in-lower and independent-in-upper", d.ground().labels_of(f)));
    }

    out.binary = is_binary(d);
    if !out.binary {
        return out;
    }
    let params = match canonical_params(d) {
        Ok(p) => p,
        Err(e) => {
            out.failures.push(format!("canonical_params: {e}"));
            return out;
        }
    };
    out.params = Some(params);
    if params.ground_size() != d.n() || params.j * params.k != 0 {
        out.failures.push(format!("malformed parameters {params}"));
    }

    match reduce_with(d, options) {
        Ok(r) => {
            out.fallback_searches = r.fallback_searches;
            if r.params != params {
                out.failures.push(format!("reduce reported {} instead of {params}", r.params));
            }
            if !r.verify(d) {
                out.failures.push("reduction trace does not replay to its canonical form".into());
            }
        }
        Err(e) => out.failures.push(format!("reduce: {e}")),
    }

    for a in 0..d.n() {
        for b in (0..d.n()).filter(|&b| b != a) {
            let slid = handle_slide(d, a, b).expect("valid elements");
            let closed = slid.check_sea().unwrap_or(false) && is_binary(&slid);
            if !closed {
                out.failures.push(format!("slide ({a}, {b}) leaves the binary class"));
                continue;
            }
            let p = slid.profile().expect("nonempty");
            if (p.min_size, p.max_size, p.parity) != (profile.min_size, profile.max_size, profile.parity) {
                out.failures.push(format!("slide ({a}, {b}) changes the size window or parity"));
            }
            if canonical_params(&slid).ok() != Some(params) {
                out.failures.push(format!("slide ({a}, {b}) changes the canonical parameters"));
            }
        }
    }

    if out.matroid {
        let m = Matroid::new(d.clone()).expect("checked above");
        if has_u24_pattern(&m) {
            out.failures.push("binary matroid with a U_{2,4} minor".into());
        }
    }
    out
}

/// Group odd binaries into handle-slide orbits and collect the `j` of every
/// canonical form met inside each orbit.
fn odd_orbit_j_values(systems: &[SetSystem]) -> BTreeMap<CanonicalParams, BTreeSet<usize>> {
    let odd_binaries: Vec<&SetSystem> = systems
        .iter()
        .filter(|d| d.profile().map(|p| p.parity == Parity::Odd).unwrap_or(false) && is_binary(d))
        .collect();
    let index: HashMap<&[SubsetMask], usize> =
        odd_binaries.iter().enumerate().map(|(i, d)| (d.family(), i)).collect();
    let mut parent: Vec<usize> = (0..odd_binaries.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, d) in odd_binaries.iter().enumerate() {
        for a in 0..d.n() {
            for b in (0..d.n()).filter(|&b| b != a) {
                let next = slide_family(d.family(), a, b);
                if let Some(&j) = index.get(next.as_slice()) {
                    let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut per_orbit: HashMap<usize, (Option<CanonicalParams>, BTreeSet<usize>)> = HashMap::new();
    for (i, d) in odd_binaries.iter().enumerate() {
        let r = root(&mut parent, i);
        let entry = per_orbit.entry(r).or_default();
        if entry.0.is_none() {
            entry.0 = canonical_params(d).ok();
        }
        if let Some(p) = match_canonical(d) {
            entry.1.insert(p.j);
        }
    }
    let mut out: BTreeMap<CanonicalParams, BTreeSet<usize>> = BTreeMap::new();
    for (params, js) in per_orbit.into_values() {
        if let Some(p) = params {
            out.entry(p).or_default().extend(js);
        }
    }
    out
}

impl CensusReport {
    /// `key: value` lines.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&v);
            out.push('\n');
        };
        line("n", self.n.to_string());
        line("total_families", self.total_families.to_string());
        line("delta_matroids", self.delta_matroids.to_string());
        line("binaries", self.binaries.to_string());
        line("matroids", self.matroids.to_string());
        line("even_count", self.even_count.to_string());
        line("odd_count", self.odd_count.to_string());
        line("fallback_searches", self.fallback_searches.to_string());
        for (p, count) in &self.params_histogram {
            line("params", format!("{p} count={count}"));
        }
        for (p, js) in &self.odd_j_values {
            line("odd_j", format!("{p} j={}", join(js)));
        }
        line("failures", self.failures.len().to_string());
        for f in &self.failures {
            let members: Vec<String> = f.family.members().iter().map(|m| format!("{{{}}}", m.join(","))).collect();
            line("failure", format!("{} [{}]", f.reason, members.join(" ")));
        }
        out
    }
}

fn join(values: &BTreeSet<usize>) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = [
            ("ground size", self.n),
            ("families", self.total_families),
            ("delta-matroids", self.delta_matroids),
            ("binary", self.binaries),
            ("matroids", self.matroids),
            ("even", self.even_count),
            ("odd", self.odd_count),
            ("fallback searches", self.fallback_searches),
            ("failures", self.failures.len()),
        ];
        for (name, value) in rows {
            writeln!(f, "{name:<20}{value:>8}")?;
        }
        writeln!(f, "canonical parameters:")?;
        for (p, count) in &self.params_histogram {
            writeln!(f, "  {:<24}{count:>8}", p.to_string())?;
        }
        if !self.odd_j_values.is_empty() {
            writeln!(f, "odd orbits, attainable j:")?;
            for (p, js) in &self.odd_j_values {
                writeln!(f, "  {:<24}{:>8}", p.to_string(), join(js))?;
            }
        }
        for failure in &self.failures {
            writeln!(f, "FAILURE {}: {:?}", failure.reason, failure.family.members())?;
        }
        Ok(())
    }
}
