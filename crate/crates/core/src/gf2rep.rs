//! Symmetric matrices over GF(2) and binary delta-matroids.
//!
//! `D(A)` is the set system whose members are the index sets of invertible
//! principal submatrices of a symmetric binary matrix `A`; the empty
//! submatrix counts as invertible. A delta-matroid is binary when some twist
//! of it by one of its own feasible sets equals `D(A)` for some `A`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::setsystem::{Element, GroundSet, SetSystem, SubsetMask};

/// Symmetric `n × n` matrix over GF(2), one `u64` per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymmetricBitMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl SymmetricBitMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= 64, "dimension {n} exceeds 64");
        SymmetricBitMatrix { n, rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for v in 0..n {
            m.rows[v] = 1 << v;
        }
        m
    }

    /// From row bit-words; bit `w` of `rows[v]` is entry `(v, w)`.
    pub fn from_row_bits(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > 64 {
            return Err(Error::GroundTooLarge(n));
        }
        let m = SymmetricBitMatrix { n, rows };
        for v in 0..n {
            if n < 64 && m.rows[v] >> n != 0 {
                return Err(Error::ElementOutOfRange(n));
            }
            for w in 0..v {
                if m.get(v, w) != m.get(w, v) {
                    return Err(Error::Asymmetric(v, w));
                }
            }
        }
        Ok(m)
    }

    /// From a dense 0/1 table; any nonzero entry counts as 1.
    pub fn from_entries(entries: &[Vec<u8>]) -> Result<Self> {
        let n = entries.len();
        let mut rows = Vec::with_capacity(n);
        for row in entries {
            if row.len() != n {
                return Err(Error::NotSquare);
            }
            rows.push(
                row.iter()
                    .enumerate()
                    .fold(0u64, |acc, (w, &x)| if x != 0 { acc | 1 << w } else { acc }),
            );
        }
        Self::from_row_bits(rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, v: usize, w: usize) -> bool {
        self.rows[v] >> w & 1 == 1
    }

    /// Set entries `(v, w)` and `(w, v)`.
    pub fn set(&mut self, v: usize, w: usize, value: bool) {
        if value {
            self.rows[v] |= 1 << w;
            self.rows[w] |= 1 << v;
        } else {
            self.rows[v] &= !(1 << w);
            self.rows[w] &= !(1 << v);
        }
    }

    pub fn row_bits(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Whether the principal submatrix on `subset` has full rank.
    pub fn principal_invertible(&self, subset: SubsetMask) -> bool {
        let cols = subset.bits();
        // xor basis keyed by leading bit
        let mut basis = [0u64; 64];
        for v in subset.iter() {
            let mut row = self.rows[v] & cols;
            while row != 0 {
                let lead = 63 - row.leading_zeros() as usize;
                if basis[lead] == 0 {
                    basis[lead] = row;
                    break;
                }
                row ^= basis[lead];
            }
            if row == 0 {
                return false;
            }
        }
        true
    }

    /// Congruence by the elementary transvection taking `a` over `b`:
    /// add row `b` to row `a`, then column `b` to column `a`.
    ///
    /// For every `W`, `D(A')` agrees with the handle slide of `D(A)` taking
    /// `a` over `b`.
    pub fn add_congruent(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        let diag = self.get(a, a) ^ self.get(b, b);
        let new_row = self.rows[a] ^ self.rows[b];
        for x in 0..self.n {
            if x != a {
                self.set(a, x, new_row >> x & 1 == 1);
            }
        }
        self.set(a, a, diag);
    }

    /// Restriction to the index set `keep`, re-indexed densely.
    pub fn principal_submatrix(&self, keep: SubsetMask) -> SymmetricBitMatrix {
        let rows = keep
            .iter()
            .map(|v| SubsetMask::from_bits(self.rows[v]).compress(keep).bits())
            .collect();
        SymmetricBitMatrix { n: keep.len(), rows }
    }
}

impl fmt::Debug for SymmetricBitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymmetricBitMatrix({})", self.n)?;
        for v in 0..self.n {
            let row: String = (0..self.n).map(|w| if self.get(v, w) { '1' } else { '0' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// `D(A)` on the ground `1..=n`.
pub fn delta_from_matrix(matrix: &SymmetricBitMatrix) -> SetSystem {
    let ground = GroundSet::numbered(matrix.dim()).expect("dimension is at most 64");
    delta_from_matrix_on(matrix, Arc::new(ground)).expect("ground matches dimension")
}

/// `D(A)` with rows indexed by the elements of `ground`.
pub fn delta_from_matrix_on(matrix: &SymmetricBitMatrix, ground: Arc<GroundSet>) -> Result<SetSystem> {
    let n = matrix.dim();
    if ground.len() != n {
        return Err(Error::SubsetOutOfRange);
    }
    assert!(n < 32, "enumerating 2^{n} principal submatrices is out of reach");
    let family: Vec<SubsetMask> = (0u64..1 << n)
        .map(SubsetMask::from_bits)
        .filter(|&w| matrix.principal_invertible(w))
        .collect();
    Ok(SetSystem::from_unsorted(ground, family))
}

/// Witness that a delta-matroid `D` is binary: `D ⋆ base_feasible = D(matrix)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCertificate {
    base_feasible: SubsetMask,
    matrix: SymmetricBitMatrix,
}

impl BinaryCertificate {
    /// Checks the certificate against `system` before accepting it.
    pub fn new(system: &SetSystem, base_feasible: SubsetMask, matrix: SymmetricBitMatrix) -> Result<Self> {
        if !system.contains(base_feasible) || matrix.dim() != system.n() {
            return Err(Error::NotBinary);
        }
        let twisted = system.twist(base_feasible)?;
        let generated = delta_from_matrix_on(&matrix, system.ground_arc().clone())?;
        if twisted != generated {
            return Err(Error::NotBinary);
        }
        Ok(BinaryCertificate {
            base_feasible,
            matrix,
        })
    }

    pub fn base_feasible(&self) -> SubsetMask {
        self.base_feasible
    }

    pub fn matrix(&self) -> &SymmetricBitMatrix {
        &self.matrix
    }
}

/// The only matrix that could represent an empty-set-feasible system:
/// diagonal from singletons, off-diagonal from the 2 × 2 determinants.
pub fn candidate_matrix(system: &SetSystem) -> SymmetricBitMatrix {
    let n = system.n();
    let mut a = SymmetricBitMatrix::zeros(n);
    for v in 0..n {
        a.set(v, v, system.contains(SubsetMask::singleton(v)));
    }
    for v in 0..n {
        for w in v + 1..n {
            let pair = system.contains(SubsetMask::pair(v, w));
            a.set(v, w, pair ^ (a.get(v, v) & a.get(w, w)));
        }
    }
    a
}

/// Find `F` in the family and `A` with `D ⋆ F = D(A)`, trying `F` in sorted order.
///
/// The candidate matrix is forced by the members of size at most two, so a
/// failed verification for every `F` proves `D` is not binary.
pub fn recognize_binary(system: &SetSystem) -> Option<BinaryCertificate> {
    for &base in system.family() {
        let twisted = system.twist(base).ok()?;
        let candidate = candidate_matrix(&twisted);
        if matches_delta(&candidate, &twisted) {
            return Some(BinaryCertificate {
                base_feasible: base,
                matrix: candidate,
            });
        }
    }
    None
}

pub fn is_binary(system: &SetSystem) -> bool {
    recognize_binary(system).is_some()
}

/// `D(A) == system` without materialising `D(A)` when the counts differ.
fn matches_delta(matrix: &SymmetricBitMatrix, system: &SetSystem) -> bool {
    let n = matrix.dim();
    let mut count = 0usize;
    for bits in 0u64..1 << n {
        let w = SubsetMask::from_bits(bits);
        if matrix.principal_invertible(w) {
            if !system.contains(w) {
                return false;
            }
            count += 1;
        }
    }
    count == system.len()
}

/// Index-pair sequence of transvections applied by [`SymmetricBitMatrix::add_congruent`].
pub type CongruenceSteps = Vec<(Element, Element)>;

/// Reduce an invertible symmetric matrix to its normal form by transvections.
///
/// Alternating matrices end as a direct sum of hyperbolic pairs
/// `[[0,1],[1,0]]`; all others end as the identity. Returns the steps and
/// the final matrix, or `None` if the matrix is singular.
pub fn normalize_invertible(matrix: &SymmetricBitMatrix) -> Option<(CongruenceSteps, SymmetricBitMatrix)> {
    let n = matrix.dim();
    let mut a = matrix.clone();
    let mut steps = Vec::new();
    let mut remaining = SubsetMask::full(n);
    let mut hyperbolic: Vec<(usize, usize)> = Vec::new();
    let mut singles: Vec<usize> = Vec::new();

    let apply = |a: &mut SymmetricBitMatrix, x: usize, y: usize, steps: &mut CongruenceSteps| {
        a.add_congruent(x, y);
        steps.push((x, y));
    };

    while !remaining.is_empty() {
        if let Some(v) = remaining.iter().find(|&v| a.get(v, v)) {
            for u in remaining.remove(v).iter() {
                if a.get(u, v) {
                    apply(&mut a, u, v, &mut steps);
                }
            }
            singles.push(v);
            remaining = remaining.remove(v);
        } else {
            let v = remaining.iter().next().expect("nonempty");
            let u = remaining.remove(v).iter().find(|&u| a.get(v, u))?;
            let rest = remaining.remove(v).remove(u);
            for w in rest.iter() {
                if a.get(w, v) {
                    apply(&mut a, w, u, &mut steps);
                }
            }
            for w in rest.iter() {
                if a.get(w, u) {
                    apply(&mut a, w, v, &mut steps);
                }
            }
            hyperbolic.push((v, u));
            remaining = rest;
        }
    }

    // H ⊕ [1] is congruent to [1] ⊕ [1] ⊕ [1].
    if let Some(&c) = singles.first() {
        for (u, v) in hyperbolic {
            for (x, y) in [(u, c), (v, u), (c, u), (c, v)] {
                apply(&mut a, x, y, &mut steps);
            }
        }
    }
    Some((steps, a))
}
