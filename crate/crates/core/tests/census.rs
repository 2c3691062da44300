mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::*;
use delta_matroid::{enumerate_delta_matroids, verify_small, CanonicalParams, Parity, SetSystem};

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=3 {
        let expected: BTreeSet<Family> = (1u64..1 << (1 << n))
            .map(|bits| {
                (0..1usize << n)
                    .filter(|s| bits >> s & 1 == 1)
                    .map(|s| (0..n).filter(|&e| s >> e & 1 == 1).collect())
                    .collect::<Family>()
            })
            .filter(oracle_sea)
            .collect();
        let found: BTreeSet<Family> = enumerate_delta_matroids(n).unwrap().map(|d| to_family(&d)).collect();
        assert_eq!(found, expected, "n = {n}");
    }
}

#[test]
fn census_has_no_failures() {
    for n in 1..=4 {
        let report = verify_small(n, 12).unwrap();
        assert!(report.failures.is_empty(), "n = {n}: {:?}", report.failures);
        assert_eq!(report.even_count + report.odd_count, report.delta_matroids);
        assert_eq!(report.params_histogram.values().sum::<usize>(), report.binaries);
        assert!(report.params_histogram.keys().all(|p| p.ground_size() == n));
    }
}

#[test]
fn census_counts() {
    let counts: Vec<(usize, usize, usize)> = (1..=4)
        .map(|n| verify_small(n, 12).unwrap())
        .map(|r| (r.delta_matroids, r.binaries, r.matroids))
        .collect();
    assert_eq!(counts, [(3, 3, 2), (15, 15, 5), (155, 135, 16), (5959, 2295, 68)]);
}

#[test]
fn single_element_histogram() {
    let report = verify_small(1, 12).unwrap();
    let expected: BTreeMap<CanonicalParams, usize> = [
        (CanonicalParams::new(1, 0, 0, 0), 1),
        (CanonicalParams::new(0, 0, 0, 1), 1),
        (CanonicalParams::new(0, 0, 1, 0), 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(report.params_histogram, expected);
}

#[test]
fn every_parameter_set_occurs() {
    // each (i, j, k, l) summing to n with j·k = 0 is reached by some binary
    for n in 1..=4 {
        let report = verify_small(n, 12).unwrap();
        let mut expected = BTreeSet::new();
        for i in 0..=n {
            for j in 0..=n / 2 {
                for k in 0..=n {
                    if i + 2 * j + k <= n && j * k == 0 {
                        expected.insert(CanonicalParams::new(i, j, k, n - i - 2 * j - k));
                    }
                }
            }
        }
        let found: BTreeSet<_> = report.params_histogram.keys().copied().collect();
        assert_eq!(found, expected, "n = {n}");
    }
}

#[test]
fn odd_orbits_reach_pairs_below_half_width() {
    // an odd orbit of width w meets D_{i,j,w-2j,l} exactly for j <= (w-1)/2
    for n in 1..=4 {
        let report = verify_small(n, 12).unwrap();
        for (p, js) in &report.odd_j_values {
            let w = p.k;
            let expected: BTreeSet<usize> = (0..=(w - 1) / 2).collect();
            assert_eq!(js, &expected, "{p}");
        }
    }
}

#[test]
fn parity_classes() {
    for d in enumerate_delta_matroids(3).unwrap() {
        let sizes: BTreeSet<usize> = d.family().iter().map(|m| m.len() % 2).collect();
        let parity = d.profile().unwrap().parity;
        assert_eq!(parity == Parity::Even, sizes.len() == 1);
    }
}

/// Two bases `F Δ {x,y}` and `F Δ {x',y'}` of a basis `F` with `x ≠ x'`
/// either share `y`, or combine into a basis, or cross-exchange.
fn exchange_property_holds(m: &SetSystem) -> bool {
    let f = to_family(m);
    let n = m.n();
    for base in &f {
        let outside: Vec<usize> = (0..n).filter(|e| !base.contains(e)).collect();
        let swap = |x: usize, y: usize| sym_diff(base, &[x, y].into_iter().collect());
        for &x in base {
            for &x2 in base.iter().filter(|&&x2| x2 != x) {
                for &y in &outside {
                    for &y2 in &outside {
                        if !f.contains(&swap(x, y)) || !f.contains(&swap(x2, y2)) || y == y2 {
                            continue;
                        }
                        let both = sym_diff(&swap(x, y), &[x2, y2].into_iter().collect());
                        let cross = f.contains(&swap(x, y2)) && f.contains(&swap(x2, y));
                        if !f.contains(&both) && !cross {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[test]
fn exchange_property_on_census_matroids() {
    let mut checked = 0;
    for n in 1..=4 {
        for d in enumerate_delta_matroids(n).unwrap().filter(|d| d.check_ea().unwrap()) {
            assert!(exchange_property_holds(&d), "{d:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 2 + 5 + 16 + 68);
}

#[test]
fn exchange_property_on_graphic_matroids() {
    for vertices in 1..=4 {
        for edges in 1..=5 {
            for g in connected_multigraphs(vertices, edges) {
                let labelled: Vec<(String, usize, usize)> =
                    g.iter().enumerate().map(|(i, &(u, v))| (format!("e{i}"), u, v)).collect();
                let m = delta_matroid::graphic_matroid(vertices, &labelled).unwrap();
                assert!(exchange_property_holds(m.carrier()), "{g:?}");
            }
        }
    }
}
