//! Fixtures and literal-definition oracles shared by the integration tests.
//! The oracles work on `BTreeSet<usize>` families and never touch masks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use delta_matroid::{GroundSet, SetSystem, SubsetMask, SymmetricBitMatrix};
use itertools::Itertools;
use rand::Rng;

pub type Set = BTreeSet<usize>;
pub type Family = BTreeSet<Set>;

pub fn system(labels: &[&str], members: &[&[&str]]) -> SetSystem {
    SetSystem::from_labels(labels, members).unwrap()
}

pub fn numbered(n: usize, members: &[&[usize]]) -> SetSystem {
    let ground = GroundSet::numbered(n).unwrap();
    let family = members.iter().map(|m| SubsetMask::from_elements(m.iter().map(|&e| e - 1)));
    SetSystem::new(ground, family.collect::<Vec<_>>()).unwrap()
}

pub fn example() -> SetSystem {
    numbered(4, &[&[1], &[2], &[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
}

/// Spanning trees of the six-edge planar graph.
pub const SPHERE: &[&[usize]] = &[
    &[1, 3, 4],
    &[1, 3, 5],
    &[1, 3, 6],
    &[1, 4, 5],
    &[1, 4, 6],
    &[2, 3, 4],
    &[2, 3, 5],
    &[2, 3, 6],
    &[2, 4, 5],
    &[2, 4, 6],
    &[3, 4, 5],
    &[3, 4, 6],
];

pub fn sphere() -> SetSystem {
    numbered(6, SPHERE)
}

pub fn torus() -> SetSystem {
    let mut members = SPHERE.to_vec();
    members.extend_from_slice(&[&[1, 2, 3, 4, 5], &[1, 2, 3, 4, 6]]);
    numbered(6, &members)
}

/// The torus family with `{1,2,3,4}` added. Not a delta-matroid.
pub fn projective_partial() -> SetSystem {
    let mut members = SPHERE.to_vec();
    members.extend_from_slice(&[&[1, 2, 3, 4, 5], &[1, 2, 3, 4, 6], &[1, 2, 3, 4]]);
    numbered(6, &members)
}

/// One of the two binary delta-matroids that contain the partial projective
/// family and keep its size window.
pub fn projective_completed() -> SetSystem {
    let mut members = SPHERE.to_vec();
    members.extend_from_slice(&[
        &[1, 2, 3, 4, 5],
        &[1, 2, 3, 4, 6],
        &[1, 2, 3, 4],
        &[1, 2, 3, 5],
        &[1, 2, 3, 6],
        &[1, 2, 4, 5],
        &[1, 2, 4, 6],
        &[1, 3, 4, 5],
        &[1, 3, 4, 6],
    ]);
    numbered(6, &members)
}

/// Adjacency matrix of the triangle 234 with a pendant vertex 1.
pub fn pendant_triangle() -> SymmetricBitMatrix {
    SymmetricBitMatrix::from_entries(&[
        vec![0, 1, 0, 0],
        vec![1, 0, 1, 1],
        vec![0, 1, 0, 1],
        vec![0, 1, 1, 0],
    ])
    .unwrap()
}

pub fn uniform(rank: usize, n: usize) -> SetSystem {
    let ground = GroundSet::numbered(n).unwrap();
    let family: Vec<SubsetMask> = (0..n).combinations(rank).map(SubsetMask::from_elements).collect();
    SetSystem::new(ground, family).unwrap()
}

pub fn to_family(s: &SetSystem) -> Family {
    s.family().iter().map(|m| m.iter().collect()).collect()
}

pub fn from_family(n: usize, family: &Family) -> SetSystem {
    let masks: Vec<SubsetMask> = family.iter().map(|s| SubsetMask::from_elements(s.iter().copied())).collect();
    SetSystem::new(GroundSet::numbered(n).unwrap(), masks).unwrap()
}

pub fn sym_diff(a: &Set, b: &Set) -> Set {
    a.symmetric_difference(b).copied().collect()
}

/// Symmetric exchange, straight from the definition.
pub fn oracle_sea(family: &Family) -> bool {
    for f1 in family {
        for f2 in family {
            let d = sym_diff(f1, f2);
            for &x in &d {
                let found = d.iter().any(|&y| {
                    let step: Set = [x, y].into_iter().collect();
                    family.contains(&sym_diff(f1, &step))
                });
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// Basis exchange, straight from the definition.
pub fn oracle_ea(family: &Family) -> bool {
    for b1 in family {
        for b2 in family {
            for &x in b1.difference(b2) {
                let found = b2.difference(b1).any(|&y| {
                    let mut c = b1.clone();
                    c.remove(&x);
                    c.insert(y);
                    family.contains(&c)
                });
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// `F Δ {X ∪ a : X ∪ b ∈ F, X ⊆ E − {a, b}}`.
pub fn oracle_slide(family: &Family, a: usize, b: usize) -> Family {
    let modifier: Family = family
        .iter()
        .filter(|m| m.contains(&b) && !m.contains(&a))
        .map(|m| {
            let mut x = m.clone();
            x.remove(&b);
            x.insert(a);
            x
        })
        .collect();
    family.symmetric_difference(&modifier).cloned().collect()
}

/// Whether some permutation of the ground maps one family onto the other.
pub fn oracle_isomorphic(n: usize, f: &Family, g: &Family) -> bool {
    if f.len() != g.len() {
        return false;
    }
    (0..n).permutations(n).any(|p| {
        let image: Family = f.iter().map(|s| s.iter().map(|&e| p[e]).collect()).collect();
        &image == g
    })
}

/// Whether the principal submatrix on `w` is invertible, by Gaussian
/// elimination on a dense copy.
pub fn oracle_invertible(a: &SymmetricBitMatrix, w: &[usize]) -> bool {
    let mut rows: Vec<Vec<bool>> = w.iter().map(|&r| w.iter().map(|&c| a.get(r, c)).collect()).collect();
    let k = rows.len();
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| rows[r][col]) else {
            return false;
        };
        rows.swap(col, p);
        for r in 0..k {
            if r != col && rows[r][col] {
                let pivot = rows[col].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
    }
    true
}

/// `{W : A[W] invertible}`, with `∅` included.
pub fn oracle_delta(a: &SymmetricBitMatrix) -> Family {
    let n = a.dim();
    (0..1usize << n)
        .map(|bits| (0..n).filter(|&e| bits >> e & 1 == 1).collect::<Vec<_>>())
        .filter(|w| oracle_invertible(a, w))
        .map(|w| w.into_iter().collect())
        .collect()
}

pub fn random_family(rng: &mut impl Rng, n: usize) -> Family {
    let density = rng.gen_range(0.05..0.6);
    loop {
        let f: Family = (0..1usize << n)
            .filter(|_| rng.gen_bool(density))
            .map(|bits| (0..n).filter(|&e| bits >> e & 1 == 1).collect())
            .collect();
        if !f.is_empty() {
            return f;
        }
    }
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> SymmetricBitMatrix {
    let mut a = SymmetricBitMatrix::zeros(n);
    for v in 0..n {
        for w in v..n {
            a.set(v, w, rng.gen_bool(0.5));
        }
    }
    a
}

/// Connected multigraphs (loops allowed) on `vertices` vertices with
/// exactly `edges` edges, as sorted endpoint lists.
pub fn connected_multigraphs(vertices: usize, edges: usize) -> Vec<Vec<(usize, usize)>> {
    let slots: Vec<(usize, usize)> = (0..vertices).flat_map(|u| (u..vertices).map(move |v| (u, v))).collect();
    slots
        .iter()
        .copied()
        .combinations_with_replacement(edges)
        .filter(|es| {
            let mut seen = vec![false; vertices];
            seen[0] = true;
            let mut changed = true;
            while changed {
                changed = false;
                for &(u, v) in es {
                    if seen[u] != seen[v] {
                        seen[u] = true;
                        seen[v] = true;
                        changed = true;
                    }
                }
            }
            seen.iter().all(|&s| s)
        })
        .collect()
}
